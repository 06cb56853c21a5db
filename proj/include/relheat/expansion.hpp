#pragma once

#include "relheat/evolution.hpp"
#include "relheat/grid.hpp"
#include "relheat/quadrature.hpp"

#include <vector>

namespace relheat {

/// Input function for the heat-polynomial expansion: either polynomial
/// coefficients (exact moment algebra) or tabulated samples (quadrature).
struct ExpandInput {
    enum class Kind { polynomial, tabulated };
    Kind kind = Kind::polynomial;
    std::vector<double> poly_coeffs;  // a_m, ascending degree
    GridFunction table;

    static ExpandInput polynomial(std::vector<double> coeffs);
    static ExpandInput tabulated(GridFunction g);
};

struct ExpansionResult {
    double y = 1.0;
    std::vector<double> coefficients;
    std::vector<double> error_estimates;
};

/// chi_n(eta) = (1/n!) Int H_n(2 xi/s, -1/s) e^{-xi^2/s} f(xi) d xi, s = 4 y^2 eta.
/// Exact Gaussian-moment algebra for polynomial f, real-line quadrature otherwise.
double chi_n(const ExpandInput& f, int n, double y, double eta, const QuadratureSpec& quad = {});

/// Coefficients of f in the basis {RH_r(x, -|y|)}:
/// c_n = (e^{|y|}/(2|y| sqrt(pi))) Int g_{1/2}(eta) e^{-eta y^2} chi_n(eta) / sqrt(eta) d eta.
/// For polynomial f this collapses to the closed form
/// c_n = sum_p (n+2p)!/(n! p! 2^p) a_{n+2p} B_p(|y|).
ExpansionResult rhp_coefficients(const ExpandInput& f, double y, int n_max,
                                 const QuadratureSpec& quad = {});

/// sum_r c_r RH_r(x, -|y|) sampled on the grid.
GridFunction reconstruct(const ExpansionResult& res, const GridSpec& grid);

}  // namespace relheat
