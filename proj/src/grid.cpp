#include "relheat/grid.hpp"

#include <cmath>

namespace relheat {

double GridFunction::interpolate(double xq) const {
    if (xq < x_min || xq > x_max) return 0.0;
    const double h = dx();
    const double s = (xq - x_min) / h;
    int i = static_cast<int>(std::floor(s));
    if (i >= n_points - 1) i = n_points - 2;
    const double u = s - i;

    // Catmull-Rom with one-sided clamping at the ends.
    const auto at = [&](int j) {
        if (j < 0) j = 0;
        if (j > n_points - 1) j = n_points - 1;
        return samples[static_cast<size_t>(j)];
    };
    const double p0 = at(i - 1), p1 = at(i), p2 = at(i + 1), p3 = at(i + 2);
    const double a = -0.5 * p0 + 1.5 * p1 - 1.5 * p2 + 0.5 * p3;
    const double b = p0 - 2.5 * p1 + 2.0 * p2 - 0.5 * p3;
    const double c = -0.5 * p0 + 0.5 * p2;
    return ((a * u + b) * u + c) * u + p1;
}

}  // namespace relheat
