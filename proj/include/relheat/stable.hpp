#pragma once

#include "relheat/quadrature.hpp"

#include <stdexcept>

namespace relheat {

/// Index (l, k) of the one-sided stable law g_{l/k}; 0 < l < k, gcd(l,k) = 1,
/// so the exponent alpha = l/k lies in (0, 1).
struct StableIndex {
    unsigned l = 1;
    unsigned k = 2;

    StableIndex(unsigned l_, unsigned k_);
    double alpha() const { return static_cast<double>(l) / k; }
    bool is_levy_smirnov() const { return l == 1 && k == 2; }
};

/// Controls for the inverse-power series evaluation of g_{l/k}.
struct SeriesControl {
    int max_terms = 600;
    double abs_tol = 1e-14;
    double min_argument = 0.05;

    SeriesControl() = default;
    SeriesControl(int terms, double tol, double min_arg)
        : max_terms(terms), abs_tol(tol), min_argument(min_arg) {
        if (terms < 1 || !(tol > 0) || !(min_arg > 0))
            throw std::invalid_argument("SeriesControl: invalid parameters");
    }
};

class SeriesNonConvergence : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Levy-Smirnov density exp(-1/(4 kappa)) / (2 sqrt(pi) kappa^{3/2}).
double levy_smirnov_pdf(double kappa);

/// g_{l/k}(u) by the convergent series
///   sum_{j>=1} (-1)^{j+1} Gamma(j a + 1) sin(j pi a) u^{-j a - 1} / (pi j!),
/// a = l/k. Switches to 128-bit arithmetic when the leading terms would
/// cancel past double precision. Refuses u below ctl.min_argument.
double stable_pdf_series(StableIndex idx, double u, const SeriesControl& ctl = {});

/// g_{l/k}(u); closed form for (1,2), the series otherwise.
double stable_pdf(StableIndex idx, double u, const SeriesControl& ctl = {});

/// Argument below which the quadrature routines treat g_{l/k} as zero.
/// The density there is bounded by ~1e-13 via the exp(-c u^{-a/(1-a)})
/// small-argument suppression.
double stable_small_argument_cutoff(StableIndex idx);

/// Int_0^inf e^{-p u} g_{l/k}(u) du; equals e^{-p^{l/k}} up to quadrature and
/// cutoff error (the a-posteriori accuracy check for the series route).
double stable_laplace(StableIndex idx, double p, const QuadratureSpec& quad = {});

/// Total mass Int_0^inf g_{l/k}(u) du (= stable_laplace at p = 0).
double stable_mass(StableIndex idx, const QuadratureSpec& quad = {});

}  // namespace relheat
