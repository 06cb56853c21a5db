#include "relheat/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>

namespace relheat {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

double gaussian_ic(double x) { return std::exp(-x * x) / kSqrtPi; }

// Gauss-Weierstrass image of the unit Gaussian (Glaisher closed form).
double weierstrass_gaussian(double x, double y) {
    const double d = 1.0 + 4.0 * y;
    return std::exp(-x * x / d) / (kSqrtPi * std::sqrt(d));
}

}  // namespace

SymbolSpec SymbolSpec::sqrt_drift() {
    SymbolSpec s;
    s.kind = SymbolKind::sqrt_drift;
    s.mu = 1;
    return s;
}

SymbolSpec SymbolSpec::rel_heat() {
    SymbolSpec s;
    s.kind = SymbolKind::rel_heat;
    s.mu = 2;
    return s;
}

SymbolSpec SymbolSpec::gen_ab(double alpha, double beta) {
    SymbolSpec s;
    s.kind = SymbolKind::gen_ab;
    s.mu = 2;
    s.alpha = alpha;
    s.beta = beta;
    return s;
}

SymbolSpec SymbolSpec::gen_lk(unsigned mu, StableIndex idx) {
    SymbolSpec s;
    s.kind = SymbolKind::gen_lk;
    s.mu = mu;
    s.idx = idx;
    return s;
}

std::complex<double> SymbolSpec::fourier(double k) const {
    std::complex<double> pik;
    double expo = 0.5;
    switch (kind) {
        case SymbolKind::sqrt_drift:
            pik = {0.0, 2.0 * k};
            break;
        case SymbolKind::rel_heat:
            pik = {-k * k, 0.0};
            break;
        case SymbolKind::gen_ab:
            pik = {-alpha * k * k, beta * k};
            break;
        case SymbolKind::gen_lk: {
            const std::complex<double> ik(0.0, k);
            pik = 1.0;
            for (unsigned i = 0; i < mu; ++i) pik *= ik;
            expo = idx.alpha();
            break;
        }
    }
    const std::complex<double> w = 1.0 - pik;
    if (w.real() <= 0.0 && std::abs(w.imag()) <= 1e-12 * (1.0 + std::abs(w.real())))
        throw BranchCutError("evolution symbol: 1 - P(ik) crosses the negative real axis at k = " +
                             std::to_string(k));
    return 1.0 - std::pow(w, expo);
}

InitialCondition InitialCondition::gaussian() { return InitialCondition{}; }

InitialCondition InitialCondition::monomial(int n) {
    if (n < 0) throw std::invalid_argument("InitialCondition::monomial: n must be nonnegative");
    InitialCondition ic;
    ic.kind = Kind::monomial;
    ic.monomial_n = n;
    return ic;
}

InitialCondition InitialCondition::tabulated(GridFunction g) {
    InitialCondition ic;
    ic.kind = Kind::tabulated;
    ic.table = std::move(g);
    return ic;
}

double InitialCondition::eval(double x) const {
    switch (kind) {
        case Kind::gaussian:
            return gaussian_ic(x);
        case Kind::monomial: {
            double r = 1.0;
            for (int i = 0; i < monomial_n; ++i) r *= x;
            return r;
        }
        case Kind::tabulated:
            return table.interpolate(x);
    }
    return 0.0;
}

std::complex<double> InitialCondition::fourier(double k) const {
    switch (kind) {
        case Kind::gaussian:
            return std::exp(-k * k / 4.0);
        case Kind::tabulated: {
            // trapezoid transform; spectrally accurate for smooth decaying data
            const double h = table.dx();
            std::complex<double> acc = 0.0;
            for (int i = 0; i < table.n_points; ++i) {
                const double w = (i == 0 || i == table.n_points - 1) ? 0.5 : 1.0;
                const double x = table.x(i);
                acc += w * table.samples[static_cast<size_t>(i)] *
                       std::complex<double>(std::cos(k * x), -std::sin(k * x));
            }
            return acc * h;
        }
        case Kind::monomial:
            throw std::invalid_argument("InitialCondition::fourier: monomial has no decaying transform");
    }
    return 0.0;
}

namespace {

GridFunction sample_ic(const InitialCondition& ic, const GridSpec& grid, double t) {
    GridFunction out(grid, t);
    for (int i = 0; i < grid.n_points; ++i) out.samples[static_cast<size_t>(i)] = ic.eval(grid.x(i));
    return out;
}

// Inner Gauss-Weierstrass value e^{y d_x^2} ic at a point.
double weierstrass_point(const InitialCondition& ic, double x, double y,
                         const QuadratureSpec& quad, bool* truncated) {
    switch (ic.kind) {
        case InitialCondition::Kind::gaussian:
            return weierstrass_gaussian(x, y);
        case InitialCondition::Kind::monomial:
            return hkdf(ic.monomial_n).eval(x, y);
        case InitialCondition::Kind::tabulated: {
            if (y <= 0) return ic.eval(x);
            const double width = 12.5 * std::sqrt(y);
            const double a = std::max(x - width, ic.table.x_min);
            const double b = std::min(x + width, ic.table.x_max);
            if (truncated && (x - width < ic.table.x_min || x + width > ic.table.x_max)) {
                const double edge = std::max(std::abs(ic.table.samples.front()),
                                             std::abs(ic.table.samples.back()));
                if (edge > 1e-12) *truncated = true;
            }
            if (!(a < b)) return 0.0;
            const double norm = 1.0 / (2.0 * std::sqrt(M_PI * y));
            auto f = [&](double s) {
                const double d = x - s;
                return std::exp(-d * d / (4.0 * y)) * ic.table.interpolate(s);
            };
            return norm * integrate_interval(f, a, b, quad).value;
        }
    }
    return 0.0;
}

}  // namespace

GridFunction evolve_levy_convolution(const InitialCondition& ic, double t, const SymbolSpec& spec,
                                     const GridSpec& grid, const QuadratureSpec& quad) {
    if (t < 0) throw std::domain_error("evolve_levy_convolution: t must be nonnegative");
    if (spec.kind == SymbolKind::gen_lk)
        throw std::invalid_argument(
            "evolve_levy_convolution: gen_lk has no convolution route (use evolve_spectral)");
    if (spec.kind != SymbolKind::gen_ab && spec.mu != 1 && spec.mu != 2)
        throw std::invalid_argument("evolve_levy_convolution: mu must be 1 or 2");
    if (t == 0.0) return sample_ic(ic, grid, 0.0);

    QuadratureSpec inner = quad;
    inner.rel_tol *= 0.1;
    inner.abs_tol *= 0.1;

    const double t2 = t * t;
    const double et = std::exp(t);
    GridFunction out(grid, t);
    bool truncated = false;
    for (int i = 0; i < grid.n_points; ++i) {
        const double x = grid.x(i);
        auto integrand = [&](double kappa) {
            const double weight = levy_smirnov_pdf(kappa) * std::exp(-kappa * t2);
            if (weight == 0.0) return 0.0;
            double val = 0.0;
            switch (spec.kind) {
                case SymbolKind::sqrt_drift:
                    val = ic.eval(x + 2.0 * kappa * t2);
                    break;
                case SymbolKind::rel_heat:
                    val = weierstrass_point(ic, x, kappa * t2, inner, &truncated);
                    break;
                case SymbolKind::gen_ab:
                    val = weierstrass_point(ic, x + spec.beta * kappa * t2,
                                            spec.alpha * kappa * t2, inner, &truncated);
                    break;
                default:
                    break;
            }
            return weight * val;
        };
        out.samples[static_cast<size_t>(i)] = et * integrate_semi_axis(integrand, quad).value;
    }
    if (truncated)
        std::cerr << "evolve_levy_convolution: warning: tabulated support too narrow for the "
                     "Gauss-Weierstrass kernel\n";
    return out;
}

GridFunction evolve_gaussian_drift(double t, const GridSpec& grid, const QuadratureSpec& quad) {
    return evolve_levy_convolution(InitialCondition::gaussian(), t, SymbolSpec::sqrt_drift(), grid,
                                   quad);
}

GridFunction evolve_relheat_gaussian(double t, const GridSpec& grid, const QuadratureSpec& quad) {
    return evolve_levy_convolution(InitialCondition::gaussian(), t, SymbolSpec::rel_heat(), grid,
                                   quad);
}

GridFunction evolve_gen_ab_gaussian(double alpha, double beta, double t, const GridSpec& grid,
                                    const QuadratureSpec& quad) {
    if (!(alpha > 0) || !(beta > 0))
        throw std::domain_error("evolve_gen_ab_gaussian: alpha, beta must be positive");
    return evolve_levy_convolution(InitialCondition::gaussian(), t, SymbolSpec::gen_ab(alpha, beta),
                                   grid, quad);
}

BivariatePoly evolve_monomial_poly(int n, SymbolKind kind) {
    if (n < 0) throw std::invalid_argument("evolve_monomial_poly: n must be nonnegative");
    switch (kind) {
        case SymbolKind::sqrt_drift: {
            // sum_k C(n,k) x^{n-k} B_k(t); the sqrt(1-2 d_x) convention, no 2^{-k}
            BivariatePoly out;
            for (int k = 0; k <= n; ++k) {
                const RationalPoly bk = bessel_carlitz(k);
                const Rational cnk(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)));
                for (int j = 0; j <= bk.degree(); ++j)
                    out.add_term(n - k, j, cnk * bk.coeff(j));
            }
            return out;
        }
        case SymbolKind::rel_heat:
            return rhp(n);
        default:
            throw std::invalid_argument("evolve_monomial_poly: only sqrt_drift and rel_heat");
    }
}

GridFunction evolve_monomial(int n, double t, const SymbolSpec& spec, const GridSpec& grid) {
    const BivariatePoly p = evolve_monomial_poly(n, spec.kind);
    GridFunction out(grid, t);
    for (int i = 0; i < grid.n_points; ++i)
        out.samples[static_cast<size_t>(i)] = p.eval(grid.x(i), t);
    return out;
}

GridFunction gauss_weierstrass(const InitialCondition& g, double y, const GridSpec& grid,
                               const QuadratureSpec& quad) {
    if (y < 0) throw std::domain_error("gauss_weierstrass: y must be nonnegative");
    if (y == 0.0) return sample_ic(g, grid, 0.0);
    GridFunction out(grid, 0.0);
    bool truncated = false;
    for (int i = 0; i < grid.n_points; ++i)
        out.samples[static_cast<size_t>(i)] = weierstrass_point(g, grid.x(i), y, quad, &truncated);
    if (truncated)
        std::cerr << "gauss_weierstrass: warning: tabulated support too narrow for the kernel\n";
    return out;
}

GridFunction telegrapher_solve(const InitialCondition& ic, const std::optional<InitialCondition>& s,
                               double t, const GridSpec& grid, const QuadratureSpec& quad) {
    if (t < 0) throw std::domain_error("telegrapher_solve: t must be nonnegative");
    if (t == 0.0) return sample_ic(ic, grid, 0.0);
    const double et = std::exp(t);
    auto khat = [&](double k) {
        const double w = std::sqrt(1.0 + k * k);
        const std::complex<double> ghat = ic.fourier(k);
        std::complex<double> shat = 0.0;
        if (s) shat = s->fourier(k);
        return et * (std::cosh(t * w) * ghat + std::sinh(t * w) / w * (shat - ghat));
    };
    return fourier_inverse(khat, grid, quad, t).values;
}

GridFunction evolve_spectral(const InitialCondition& ic, double t, const SymbolSpec& spec,
                             const GridSpec& grid, const QuadratureSpec& quad) {
    if (t < 0) throw std::domain_error("evolve_spectral: t must be nonnegative");
    if (ic.kind == InitialCondition::Kind::monomial)
        throw std::invalid_argument("evolve_spectral: monomial initial conditions have no transform");
    if (t == 0.0) return sample_ic(ic, grid, 0.0);
    auto khat = [&](double k) { return std::exp(t * spec.fourier(k)) * ic.fourier(k); };
    return fourier_inverse(khat, grid, quad, t).values;
}

double moments(const GridFunction& f, int order) {
    if (order < 0 || order > 2) throw std::invalid_argument("moments: order must be 0, 1 or 2");
    const double edge =
        std::max(std::abs(f.samples.front()), std::abs(f.samples.back()));
    if (edge > 1e-12)
        std::cerr << "moments: warning: samples above 1e-12 at the grid edges (value " << edge
                  << "); truncated-domain bias likely\n";
    const double h = f.dx();
    double acc = 0.0;
    for (int i = 0; i < f.n_points; ++i) {
        const double w = (i == 0 || i == f.n_points - 1) ? 0.5 : 1.0;
        double xm = 1.0;
        for (int m = 0; m < order; ++m) xm *= f.x(i);
        acc += w * xm * f.samples[static_cast<size_t>(i)];
    }
    return acc * h;
}

}  // namespace relheat
