#pragma once

#include <stdexcept>
#include <vector>

namespace relheat {

/// Uniform sampling grid on [x_min, x_max].
struct GridSpec {
    double x_min = -8.0;
    double x_max = 8.0;
    int n_points = 321;

    GridSpec() = default;
    GridSpec(double a, double b, int n) : x_min(a), x_max(b), n_points(n) {
        if (!(a < b) || n < 2) throw std::invalid_argument("GridSpec: need x_min < x_max, n >= 2");
    }
    double dx() const { return (x_max - x_min) / (n_points - 1); }
    double x(int i) const { return x_min + i * dx(); }
};

/// Uniformly sampled real function of x with a time stamp.
struct GridFunction {
    double x_min = 0.0;
    double x_max = 1.0;
    int n_points = 2;
    std::vector<double> samples;
    double time = 0.0;

    GridFunction() : samples(2, 0.0) {}
    GridFunction(const GridSpec& g, double t = 0.0)
        : x_min(g.x_min), x_max(g.x_max), n_points(g.n_points),
          samples(static_cast<size_t>(g.n_points), 0.0), time(t) {}

    double dx() const { return (x_max - x_min) / (n_points - 1); }
    double x(int i) const { return x_min + i * dx(); }
    GridSpec grid() const { return GridSpec(x_min, x_max, n_points); }

    /// Piecewise-cubic (Catmull-Rom) interpolation; zero outside [x_min, x_max].
    double interpolate(double x) const;
};

}  // namespace relheat
