#pragma once

#include "relheat/grid.hpp"

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>

namespace relheat {

enum class SemiAxisMap { rational_map, exp_map, none };

struct QuadratureSpec {
    double rel_tol = 1e-10;
    double abs_tol = 1e-13;
    int max_subdivisions = 4096;
    SemiAxisMap mapping = SemiAxisMap::rational_map;

    QuadratureSpec() = default;
    QuadratureSpec(double rel, double abs, int subdiv = 4096,
                   SemiAxisMap map = SemiAxisMap::rational_map)
        : rel_tol(rel), abs_tol(abs), max_subdivisions(subdiv), mapping(map) {
        if (!(rel > 0) || !(abs > 0) || subdiv < 1)
            throw std::invalid_argument("QuadratureSpec: tolerances must be positive");
    }
};

struct IntegrationResult {
    double value = 0.0;
    double error_estimate = 0.0;
};

class QuadratureError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Adaptive Gauss-Kronrod on a finite interval.
IntegrationResult integrate_interval(const std::function<double(double)>& f, double a, double b,
                                     const QuadratureSpec& spec = {});

/// Integral over (0, inf) through the configured variable map.
IntegrationResult integrate_semi_axis(const std::function<double(double)>& f,
                                      const QuadratureSpec& spec = {});

/// Integral over the whole real line.
IntegrationResult integrate_real_line(const std::function<double(double)>& f,
                                      const QuadratureSpec& spec = {});

struct FourierResult {
    GridFunction values;
    double max_imag_residual = 0.0;  // largest |Im| seen across grid points
    double window = 0.0;             // half-width K of the truncated k-integral
};

/// (1/2pi) Int e^{ikx} khat(k) dk per grid point; real part returned.
/// The truncation window [-K, K] is found by demanding |khat| < 1e-14 * scale
/// outside it; a khat that never decays raises QuadratureError.
FourierResult fourier_inverse(const std::function<std::complex<double>(double)>& khat,
                              const GridSpec& xgrid, const QuadratureSpec& spec = {},
                              double time_stamp = 0.0);

}  // namespace relheat
