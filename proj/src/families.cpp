#include "relheat/families.hpp"

#include <cmath>

namespace relheat {

namespace {

void require_nonneg(int n, const char* what) {
    if (n < 0) throw std::invalid_argument(std::string(what) + ": n must be nonnegative");
}

// Lifts a scalar series into a RationalPoly-coefficient series scaled by sigma.
FormalSeries<RationalPoly> times_sigma(const FormalSeries<Rational>& s) {
    FormalSeries<RationalPoly> r(s.order());
    for (int i = 0; i <= s.order(); ++i) r[i] = RationalPoly::monomial(s[i], 1, 's');
    return r;
}

}  // namespace

RationalPoly bessel_carlitz(int n) {
    require_nonneg(n, "bessel_carlitz");
    if (n == 0) return RationalPoly::constant(1);
    std::vector<Rational> c(static_cast<size_t>(n) + 1, Rational(0));
    for (int k = 1; k <= n; ++k) {
        const BigInt num = factorial(static_cast<unsigned>(2 * n - k - 1));
        const BigInt den = factorial(static_cast<unsigned>(k - 1)) *
                           factorial(static_cast<unsigned>(n - k)) * (BigInt(1) << (n - k));
        c[static_cast<size_t>(k)] = Rational(num, den);
    }
    return RationalPoly(std::move(c), 't');
}

BivariatePoly hkdf(int n) {
    require_nonneg(n, "hkdf");
    BivariatePoly p;
    const BigInt nfact = factorial(static_cast<unsigned>(n));
    for (int r = 0; 2 * r <= n; ++r) {
        const BigInt den = factorial(static_cast<unsigned>(n - 2 * r)) *
                           factorial(static_cast<unsigned>(r));
        p.add_term(n - 2 * r, r, Rational(nfact, den));
    }
    return p;
}

BivariatePoly rnp(int n) {
    require_nonneg(n, "rnp");
    BivariatePoly p;
    for (int s = 0; s <= n; ++s) {
        const RationalPoly bs = bessel_carlitz(s);
        const Rational w(binomial(static_cast<unsigned>(n), static_cast<unsigned>(s)),
                         BigInt(1) << s);
        for (int j = 0; j <= bs.degree(); ++j) p.add_term(n - s, j, w * bs.coeff(j));
    }
    return p;
}

BivariatePoly rhp(int n) {
    require_nonneg(n, "rhp");
    BivariatePoly p;
    const BigInt nfact = factorial(static_cast<unsigned>(n));
    for (int r = 0; 2 * r <= n; ++r) {
        const RationalPoly br = bessel_carlitz(r);
        const BigInt den = factorial(static_cast<unsigned>(n - 2 * r)) *
                           factorial(static_cast<unsigned>(r)) * (BigInt(1) << r);
        const Rational w(nfact, den);
        for (int j = 0; j <= br.degree(); ++j) p.add_term(n - 2 * r, j, w * br.coeff(j));
    }
    return p;
}

FormalSeries<RationalPoly> egf_bessel(int order) {
    return egf_gen_ab(Rational(0), Rational(2), order);
}

FormalSeries<RationalPoly> egf_gen_ab(const Rational& alpha, const Rational& beta, int order) {
    if (order < 0) throw std::invalid_argument("egf_gen_ab: order must be nonnegative");
    // inner = 1 - sqrt(1 - alpha l^2 - beta l), zero constant term
    FormalSeries<Rational> w(order);
    if (order >= 1) w[1] = -beta;
    if (order >= 2) w[2] = -alpha;
    FormalSeries<Rational> inner = w.pow_one_plus(Rational(1, 2)).scaled(Rational(-1));
    inner[0] += 1;
    return times_sigma(inner).exp();
}

FormalSeries<RationalPoly> egf_gen_lk(StableIndex idx, int order) {
    if (order < 0) throw std::invalid_argument("egf_gen_lk: order must be nonnegative");
    // inner = 1 - (1 - (k/l) l)^{l/k}
    FormalSeries<Rational> w(order);
    if (order >= 1) w[1] = Rational(-static_cast<int>(idx.k), static_cast<int>(idx.l));
    FormalSeries<Rational> inner =
        w.pow_one_plus(Rational(static_cast<int>(idx.l), static_cast<int>(idx.k)))
            .scaled(Rational(-1));
    inner[0] += 1;
    return times_sigma(inner).exp();
}

FormalSeries<BivariatePoly> egf_rnp(int order) {
    if (order < 0) throw std::invalid_argument("egf_rnp: order must be nonnegative");
    // e^{ux} * exp{t (1 - sqrt(1-u))}
    FormalSeries<BivariatePoly> expx(order);
    for (int i = 0; i <= order; ++i)
        expx[i] = BivariatePoly::monomial(Rational(1, factorial(static_cast<unsigned>(i))), i, 0);

    FormalSeries<Rational> w(order);
    if (order >= 1) w[1] = -1;
    FormalSeries<Rational> inner = w.pow_one_plus(Rational(1, 2)).scaled(Rational(-1));
    inner[0] += 1;
    FormalSeries<BivariatePoly> tpart(order);
    for (int i = 0; i <= order; ++i) tpart[i] = BivariatePoly::monomial(inner[i], 0, 1);
    return expx * tpart.exp();
}

RationalPoly gen_bessel_ab(int n, const Rational& alpha, const Rational& beta) {
    require_nonneg(n, "gen_bessel_ab");
    return egf_gen_ab(alpha, beta, n)[n] * Rational(factorial(static_cast<unsigned>(n)));
}

RationalPoly gen_bessel_lk(int n, StableIndex idx) {
    require_nonneg(n, "gen_bessel_lk");
    return egf_gen_lk(idx, n)[n] * Rational(factorial(static_cast<unsigned>(n)));
}

RationalPoly rodrigues_lk(int n, StableIndex idx) {
    require_nonneg(n, "rodrigues_lk");
    const Rational q(static_cast<int>(idx.k), static_cast<int>(idx.l));
    ExpPolySum s = ExpPolySum::one();
    for (int i = 0; i < n; ++i) s = s.apply_derivation(q);
    // multiply by (-sigma^{k/l})^n e^sigma; the e^{+-sigma} pair cancels
    RationalPoly p = s.to_poly_shifted(q * n, 's');
    if (n % 2) p *= Rational(-1);
    return p;
}

double bessel_moment(int n, double t, const QuadratureSpec& quad) {
    require_nonneg(n, "bessel_moment");
    if (!(t > 0)) throw std::domain_error("bessel_moment: t must be positive");
    const double t2 = t * t;
    auto f = [&](double eta) {
        const double w = levy_smirnov_pdf(eta) * std::exp(-eta * t2);
        if (w == 0.0) return 0.0;
        return w * std::pow(2.0 * eta * t2, n);
    };
    return std::exp(t) * integrate_semi_axis(f, quad).value;
}

double gen_bessel_ab_integral(int n, double alpha, double beta, double sigma,
                              const QuadratureSpec& quad) {
    require_nonneg(n, "gen_bessel_ab_integral");
    if (!(sigma > 0)) throw std::domain_error("gen_bessel_ab_integral: sigma must be positive");
    const BivariatePoly hn = hkdf(n);
    const double s2 = sigma * sigma;
    auto f = [&](double xi) {
        const double w = levy_smirnov_pdf(xi) * std::exp(-xi * s2);
        if (w == 0.0) return 0.0;
        return w * hn.eval(beta * xi * s2, alpha * xi * s2);
    };
    return std::exp(sigma) * integrate_semi_axis(f, quad).value;
}

double moment_lk(int n, StableIndex idx, double sigma, const QuadratureSpec& quad) {
    require_nonneg(n, "moment_lk");
    if (!(sigma > 0)) throw std::domain_error("moment_lk: sigma must be positive");
    const double q = static_cast<double>(idx.k) / idx.l;
    const double sq = std::pow(sigma, q);

    SeriesControl ctl(800, 1e-14, 1e-300);
    const bool closed = idx.is_levy_smirnov();
    const double lo = closed ? 0.0 : stable_small_argument_cutoff(idx);
    auto f = [&](double u) {
        const double g = closed ? levy_smirnov_pdf(u) : stable_pdf_series(idx, u, ctl);
        return std::exp(-u * sq) * g * std::pow(u, n);
    };
    double T = 12.0;
    while (std::exp(-T * sq) * std::pow(T, n) > 1e-18 && T < 1e6) T *= 1.5;
    double value = integrate_interval(f, lo, 12.0, quad).value;
    if (T > 12.0) value += integrate_interval(f, 12.0, T, quad).value;
    return std::pow(q * sq, n) * std::exp(sigma) * value;
}

BivariatePoly pde_residual(HeatFamily family, int n) {
    require_nonneg(n, "pde_residual");
    const BivariatePoly p = (family == HeatFamily::newton) ? rnp(n) : rhp(n);
    BivariatePoly res = p.dt() * Rational(2) - p.dt().dt();
    if (family == HeatFamily::newton)
        res -= p.dx();
    else
        res -= p.dx().dx();
    return res;
}

BivariatePoly lowering_check(int n) {
    if (n < 1) throw std::invalid_argument("lowering_check: n must be >= 1");
    return rnp(n).dx() - rnp(n - 1) * Rational(n);
}

RationalPoly recurrence_check(int n) {
    if (n < 1) throw std::invalid_argument("recurrence_check: n must be >= 1");
    const RationalPoly bn = bessel_carlitz(n);
    return bn.derivative().derivative() - bn.derivative() * Rational(2) +
           bessel_carlitz(n - 1) * Rational(2 * n);
}

}  // namespace relheat
