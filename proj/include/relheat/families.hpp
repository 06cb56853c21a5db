#pragma once

#include "relheat/polynomial.hpp"
#include "relheat/quadrature.hpp"
#include "relheat/series.hpp"
#include "relheat/stable.hpp"

namespace relheat {

/// Bessel polynomial in Carlitz form:
/// B_n(t) = sum_{k=1}^{n} (2n-k-1)!/((k-1)!(n-k)!) t^k / 2^{n-k}, B_0 = 1.
RationalPoly bessel_carlitz(int n);

/// Two-variable Hermite heat polynomial H_n(x, y) = n! sum x^{n-2r} y^r / ((n-2r)! r!).
/// Returned with y stored in the t-slot of BivariatePoly.
BivariatePoly hkdf(int n);

/// Relativistic Newton polynomial: sum_s C(n,s) x^{n-s} B_s(t) / 2^s.
BivariatePoly rnp(int n);

/// Relativistic heat polynomial: n! sum_r x^{n-2r} B_r(t) / ((n-2r)! r! 2^r).
BivariatePoly rhp(int n);

/// Generalized Bessel polynomial of the drift-diffusion family: n! times the
/// lambda^n coefficient of exp{sigma [1 - sqrt(1 - alpha lambda^2 - beta lambda)]}.
RationalPoly gen_bessel_ab(int n, const Rational& alpha, const Rational& beta);

/// B^{(l,k)}_n(sigma): n! times the lambda^n coefficient of
/// exp{sigma [1 - (1 - (k/l) lambda)^{l/k}]}.
RationalPoly gen_bessel_lk(int n, StableIndex idx);

/// Rodrigues route: (-sigma^{k/l})^n e^sigma (sigma^{1-k/l} d/dsigma)^n e^{-sigma},
/// carried out symbolically over fractional powers of sigma. Throws
/// RodriguesStructureError if a fractional exponent survives.
RationalPoly rodrigues_lk(int n, StableIndex idx);

/// Truncated exponential generating functions; coefficient n times n!
/// reproduces the family member of degree n.
FormalSeries<RationalPoly> egf_bessel(int order);
FormalSeries<RationalPoly> egf_gen_ab(const Rational& alpha, const Rational& beta, int order);
FormalSeries<RationalPoly> egf_gen_lk(StableIndex idx, int order);
/// EGF of the Newton family at symbolic x: e^{ux} exp{t(1 - sqrt(1-u))}.
FormalSeries<BivariatePoly> egf_rnp(int order);

// --- integral (moment) routes; numeric counterparts of the exact family ---

/// B_n(t) = e^t Int g_{1/2}(eta) e^{-eta t^2} (2 eta t^2)^n d eta, t > 0.
double bessel_moment(int n, double t, const QuadratureSpec& quad = {});

/// gen_bessel_ab via e^sigma Int g_{1/2}(xi) e^{-xi sigma^2} H_n(beta xi sigma^2, alpha xi sigma^2) d xi.
double gen_bessel_ab_integral(int n, double alpha, double beta, double sigma,
                              const QuadratureSpec& quad = {});

/// B^{(l,k)}_n via regularized stable moments:
/// ((k/l) sigma^{k/l})^n e^sigma Int e^{-u sigma^{k/l}} g_{l/k}(u) u^n du.
double moment_lk(int n, StableIndex idx, double sigma, const QuadratureSpec& quad = {});

// --- exact identity residuals (all contracts: identically zero) ---

enum class HeatFamily { newton, heat };  // RNP / RHP

/// Residual of (-d_t^2 + 2 d_t - d_x) on RNP or (-d_t^2 + 2 d_t - d_x^2) on RHP.
BivariatePoly pde_residual(HeatFamily family, int n);

/// d_x RN_n - n RN_{n-1}.
BivariatePoly lowering_check(int n);

/// B_n'' - 2 B_n' + 2 n B_{n-1}.
RationalPoly recurrence_check(int n);

}  // namespace relheat
