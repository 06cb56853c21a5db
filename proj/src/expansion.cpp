#include "relheat/expansion.hpp"

#include "relheat/families.hpp"
#include "relheat/stable.hpp"

#include <cmath>

namespace relheat {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

// Scaled Hermite H_n(2 xi/s, -1/s) = s^{-n/2} He_n(xi/sqrt(s)) with the
// physicists' polynomials He_n by three-term recurrence.
double scaled_hermite(int n, double xi, double s) {
    const double v = xi / std::sqrt(s);
    double hm1 = 0.0, h = 1.0;
    for (int m = 0; m < n; ++m) {
        const double hnext = 2.0 * v * h - 2.0 * m * hm1;
        hm1 = h;
        h = hnext;
    }
    return h * std::pow(s, -0.5 * n);
}

double factorial_d(int n) {
    double r = 1.0;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// chi_n(eta) / (2|y| sqrt(pi eta)) for polynomial input, by Gaussian moments:
//   (1/n!) sum_p a_{n+2p} s^p (n+2p)! / (4^p p!),  s = 4 y^2 eta.
double chi_poly_reduced(const std::vector<double>& a, int n, double y, double eta) {
    const double s = 4.0 * y * y * eta;
    double acc = 0.0;
    const int d = static_cast<int>(a.size()) - 1;
    for (int p = 0; n + 2 * p <= d; ++p) {
        double c = 1.0;  // (n+2p)! / (n! p! 4^p)
        for (int i = n + 1; i <= n + 2 * p; ++i) c *= i;
        c /= factorial_d(p) * std::pow(4.0, p);
        acc += a[static_cast<size_t>(n + 2 * p)] * c * std::pow(s, p);
    }
    return acc;
}

}  // namespace

ExpandInput ExpandInput::polynomial(std::vector<double> coeffs) {
    ExpandInput f;
    f.kind = Kind::polynomial;
    f.poly_coeffs = std::move(coeffs);
    if (f.poly_coeffs.empty()) f.poly_coeffs.push_back(0.0);
    return f;
}

ExpandInput ExpandInput::tabulated(GridFunction g) {
    ExpandInput f;
    f.kind = Kind::tabulated;
    f.table = std::move(g);
    return f;
}

double chi_n(const ExpandInput& f, int n, double y, double eta, const QuadratureSpec& quad) {
    if (n < 0) throw std::invalid_argument("chi_n: n must be nonnegative");
    if (y == 0.0) throw std::domain_error("chi_n: y must be nonzero");
    if (!(eta > 0)) throw std::domain_error("chi_n: eta must be positive");
    const double s = 4.0 * y * y * eta;
    if (f.kind == ExpandInput::Kind::polynomial)
        return 2.0 * std::abs(y) * std::sqrt(M_PI * eta) * chi_poly_reduced(f.poly_coeffs, n, y, eta);

    const double nf = factorial_d(n);
    auto g = [&](double xi) {
        return scaled_hermite(n, xi, s) * std::exp(-xi * xi / s) * f.table.interpolate(xi);
    };
    return integrate_interval(g, f.table.x_min, f.table.x_max, quad).value / nf;
}

ExpansionResult rhp_coefficients(const ExpandInput& f, double y, int n_max,
                                 const QuadratureSpec& quad) {
    if (y == 0.0) throw std::domain_error("rhp_coefficients: y must be nonzero");
    if (n_max < 0) throw std::invalid_argument("rhp_coefficients: n_max must be nonnegative");
    const double ay = std::abs(y);
    ExpansionResult out;
    out.y = y;
    out.coefficients.resize(static_cast<size_t>(n_max) + 1, 0.0);
    out.error_estimates.resize(static_cast<size_t>(n_max) + 1, 0.0);

    if (f.kind == ExpandInput::Kind::polynomial) {
        // closed form: c_n = sum_p (n+2p)!/(n! p! 2^p) a_{n+2p} B_p(|y|)
        const int d = static_cast<int>(f.poly_coeffs.size()) - 1;
        for (int n = 0; n <= n_max; ++n) {
            double acc = 0.0;
            for (int p = 0; n + 2 * p <= d; ++p) {
                double c = 1.0;
                for (int i = n + 1; i <= n + 2 * p; ++i) c *= i;
                c /= factorial_d(p) * std::pow(2.0, p);
                acc += f.poly_coeffs[static_cast<size_t>(n + 2 * p)] * c *
                       bessel_carlitz(p).eval(ay);
            }
            out.coefficients[static_cast<size_t>(n)] = acc;
        }
        return out;
    }

    QuadratureSpec inner = quad;
    inner.rel_tol *= 0.1;
    inner.abs_tol *= 0.1;
    const double y2 = y * y;
    const double pref = std::exp(ay) / (2.0 * ay * std::sqrt(M_PI));
    for (int n = 0; n <= n_max; ++n) {
        auto integrand = [&](double eta) {
            const double w = levy_smirnov_pdf(eta) * std::exp(-eta * y2);
            if (w == 0.0) return 0.0;
            return w * chi_n(f, n, y, eta, inner) / std::sqrt(eta);
        };
        IntegrationResult r;
        try {
            r = integrate_semi_axis(integrand, quad);
        } catch (const QuadratureError& e) {
            throw QuadratureError(std::string("rhp_coefficients: eta-integral for c_") +
                                  std::to_string(n) + " diverges or converges too slowly: " +
                                  e.what());
        }
        out.coefficients[static_cast<size_t>(n)] = pref * r.value;
        out.error_estimates[static_cast<size_t>(n)] = pref * r.error_estimate;
    }
    return out;
}

GridFunction reconstruct(const ExpansionResult& res, const GridSpec& grid) {
    GridFunction out(grid, 0.0);
    const double t = -std::abs(res.y);
    std::vector<BivariatePoly> basis;
    basis.reserve(res.coefficients.size());
    for (size_t r = 0; r < res.coefficients.size(); ++r) basis.push_back(rhp(static_cast<int>(r)));
    for (int i = 0; i < grid.n_points; ++i) {
        const double x = grid.x(i);
        double acc = 0.0;
        for (size_t r = 0; r < res.coefficients.size(); ++r)
            acc += res.coefficients[r] * basis[r].eval(x, t);
        out.samples[static_cast<size_t>(i)] = acc;
    }
    return out;
}

}  // namespace relheat
