#pragma once

#include "relheat/families.hpp"
#include "relheat/grid.hpp"
#include "relheat/quadrature.hpp"
#include "relheat/stable.hpp"

#include <complex>
#include <optional>

namespace relheat {

enum class SymbolKind { sqrt_drift, rel_heat, gen_ab, gen_lk };

/// Selects the pseudo-differential evolution symbol 1 - (1 - P(d_x))^{l/k}:
///   sqrt_drift: P = 2 d_x, exponent 1/2;
///   rel_heat:   P = d_x^2, exponent 1/2;
///   gen_ab:     P = alpha d_x^2 + beta d_x, exponent 1/2;
///   gen_lk:     P = d_x^mu, exponent l/k.
struct SymbolSpec {
    SymbolKind kind = SymbolKind::rel_heat;
    unsigned mu = 2;
    StableIndex idx{1, 2};
    double alpha = 1.0;
    double beta = 1.0;

    static SymbolSpec sqrt_drift();
    static SymbolSpec rel_heat();
    static SymbolSpec gen_ab(double alpha, double beta);
    static SymbolSpec gen_lk(unsigned mu, StableIndex idx);

    /// Fourier symbol s(k) = 1 - (1 - P(ik))^{l/k}, principal branch.
    std::complex<double> fourier(double k) const;
};

class BranchCutError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct InitialCondition {
    enum class Kind { gaussian, monomial, tabulated };
    Kind kind = Kind::gaussian;
    int monomial_n = 0;
    GridFunction table;

    static InitialCondition gaussian();           // e^{-x^2}/sqrt(pi)
    static InitialCondition monomial(int n);
    static InitialCondition tabulated(GridFunction g);

    double eval(double x) const;
    bool has_fourier_closed_form() const { return kind == Kind::gaussian; }
    /// ghat(k) = Int e^{-ikx} g(x) dx; closed form for the Gaussian, trapezoid
    /// sum for tabulated data. Monomials are rejected.
    std::complex<double> fourier(double k) const;
};

/// Real-space route: F(x,t) = e^t Int g_{1/2}(s) e^{-s t^2} [e^{s t^2 P(d_x)} ic](x) ds.
/// Supports sqrt_drift (shift), rel_heat (Gauss-Weierstrass) and gen_ab
/// (shifted Gauss-Weierstrass); gen_lk has no convolution route here.
GridFunction evolve_levy_convolution(const InitialCondition& ic, double t, const SymbolSpec& spec,
                                     const GridSpec& grid, const QuadratureSpec& quad = {});

/// Gaussian initial condition under the sqrt-drift flow (Figure 1 data).
GridFunction evolve_gaussian_drift(double t, const GridSpec& grid, const QuadratureSpec& quad = {});

/// Gaussian initial condition under the relativistic heat flow (Figure 2 data):
/// F = (e^t/sqrt(pi)) Int g_{1/2}(eta) e^{-eta t^2} exp(-x^2/(1+4 eta t^2)) / sqrt(1+4 eta t^2) d eta.
GridFunction evolve_relheat_gaussian(double t, const GridSpec& grid,
                                     const QuadratureSpec& quad = {});

/// Gaussian initial condition under the drift-diffusion flow, with the
/// consistent closed form carrying 1 + 4 alpha eta t^2 in both the prefactor
/// and the exponent denominator.
GridFunction evolve_gen_ab_gaussian(double alpha, double beta, double t, const GridSpec& grid,
                                    const QuadratureSpec& quad = {});

/// Exact polynomial evolution of a monomial initial condition:
///   sqrt_drift: sum_k C(n,k) x^{n-k} B_k(t);
///   rel_heat:   the relativistic heat polynomial RH_n(x,t).
BivariatePoly evolve_monomial_poly(int n, SymbolKind kind);
GridFunction evolve_monomial(int n, double t, const SymbolSpec& spec, const GridSpec& grid);

/// Gauss-Weierstrass transform (1/(2 sqrt(pi y))) Int e^{-(x-s)^2/(4y)} g(s) ds.
GridFunction gauss_weierstrass(const InitialCondition& g, double y, const GridSpec& grid,
                               const QuadratureSpec& quad = {});

/// Telegrapher solution in Fourier space:
/// Fhat = e^t [cosh(t w) ghat + sinh(t w)/w (shat - ghat)], w = sqrt(1+k^2).
/// Returned unnormalized; s = nullopt means s(x) = 0.
GridFunction telegrapher_solve(const InitialCondition& ic, const std::optional<InitialCondition>& s,
                               double t, const GridSpec& grid, const QuadratureSpec& quad = {});

/// Symbol route: Fhat(k,t) = e^{t s(k)} ghat(k), inverse-transformed.
GridFunction evolve_spectral(const InitialCondition& ic, double t, const SymbolSpec& spec,
                             const GridSpec& grid, const QuadratureSpec& quad = {});

/// Trapezoidal moment Int x^m F dx, m <= 2. Warns on stderr when the samples
/// do not decay below 1e-12 at the grid edges.
double moments(const GridFunction& f, int order);

}  // namespace relheat
