#include "relheat/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>

namespace relheat {

namespace {

using GK = boost::math::quadrature::gauss_kronrod<double, 15>;

int depth_from_subdivisions(int max_subdivisions) {
    int depth = 1;
    while ((1 << depth) < max_subdivisions && depth < 20) ++depth;
    return depth;
}

IntegrationResult run_gk(const std::function<double(double)>& f, double a, double b,
                         const QuadratureSpec& spec) {
    double err = 0.0;
    const double v =
        GK::integrate(f, a, b, depth_from_subdivisions(spec.max_subdivisions), spec.rel_tol, &err);
    if (!std::isfinite(v) || !std::isfinite(err))
        throw QuadratureError("quadrature produced a non-finite value");
    if (err > std::max(spec.abs_tol, spec.rel_tol * std::abs(v)) * 10.0)
        throw QuadratureError("quadrature did not converge within " +
                              std::to_string(spec.max_subdivisions) + " subdivisions (error " +
                              std::to_string(err) + ")");
    return {v, err};
}

}  // namespace

IntegrationResult integrate_interval(const std::function<double(double)>& f, double a, double b,
                                     const QuadratureSpec& spec) {
    return run_gk(f, a, b, spec);
}

IntegrationResult integrate_semi_axis(const std::function<double(double)>& f,
                                      const QuadratureSpec& spec) {
    switch (spec.mapping) {
        case SemiAxisMap::rational_map: {
            // u = v/(1-v), du = dv/(1-v)^2
            auto g = [&f](double v) {
                const double w = 1.0 - v;
                return f(v / w) / (w * w);
            };
            return run_gk(g, 0.0, 1.0, spec);
        }
        case SemiAxisMap::exp_map: {
            // u = -log(1-v), du = dv/(1-v)
            auto g = [&f](double v) {
                const double w = 1.0 - v;
                return f(-std::log(w)) / w;
            };
            return run_gk(g, 0.0, 1.0, spec);
        }
        case SemiAxisMap::none:
            throw QuadratureError("integrate_semi_axis: mapping 'none' is not integrable");
    }
    throw QuadratureError("integrate_semi_axis: unknown mapping");
}

IntegrationResult integrate_real_line(const std::function<double(double)>& f,
                                      const QuadratureSpec& spec) {
    // x = v/(1-v^2), dx = (1+v^2)/(1-v^2)^2 dv
    auto g = [&f](double v) {
        const double w = 1.0 - v * v;
        return f(v / w) * (1.0 + v * v) / (w * w);
    };
    return run_gk(g, -1.0, 1.0, spec);
}

FourierResult fourier_inverse(const std::function<std::complex<double>(double)>& khat,
                              const GridSpec& xgrid, const QuadratureSpec& spec,
                              double time_stamp) {
    // Window search: expand K until |khat| is negligible at and beyond +-K.
    const double scale = std::max({std::abs(khat(0.0)), std::abs(khat(0.5)), std::abs(khat(-0.5)), 1e-300});
    double K = 4.0;
    bool found = false;
    while (K <= 2e5) {
        double edge = 0.0;
        for (double frac : {1.0, 0.93, 0.82, 0.67})
            edge = std::max({edge, std::abs(khat(frac * K)), std::abs(khat(-frac * K))});
        if (edge < 1e-14 * scale) {
            found = true;
            break;
        }
        K *= 1.6;
    }
    if (!found)
        throw QuadratureError(
            "fourier_inverse: window search failed; transform does not decay "
            "(kernel growth may leave the tail unresolved)");

    FourierResult out;
    out.window = K;
    out.values = GridFunction(xgrid, time_stamp);
    const double inv2pi = 1.0 / (2.0 * M_PI);
    for (int i = 0; i < xgrid.n_points; ++i) {
        const double x = xgrid.x(i);
        auto re = [&](double k) {
            const std::complex<double> v = khat(k);
            return std::cos(k * x) * v.real() - std::sin(k * x) * v.imag();
        };
        auto im = [&](double k) {
            const std::complex<double> v = khat(k);
            return std::sin(k * x) * v.real() + std::cos(k * x) * v.imag();
        };
        out.values.samples[static_cast<size_t>(i)] = inv2pi * run_gk(re, -K, K, spec).value;
        out.max_imag_residual =
            std::max(out.max_imag_residual, std::abs(inv2pi * run_gk(im, -K, K, spec).value));
    }
    return out;
}

}  // namespace relheat
