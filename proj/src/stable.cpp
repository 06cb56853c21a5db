#include "relheat/stable.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace relheat {

namespace {

using QuadFloat = boost::multiprecision::cpp_bin_float_quad;

// Magnitude of the largest series term, in logs. The terms
//   m_j = Gamma(j a + 1) u^{-j a - 1} / j!
// peak near j* = (a^a u^{-a})^{1/(1-a)} when u < 1; cancellation against the
// final value costs exp(peak) * epsilon of absolute accuracy.
double peak_term_log(double alpha, double u) {
    double jstar = 1.0;
    if (u < 1.0)
        jstar = std::max(1.0, std::pow(std::pow(alpha, alpha) * std::pow(u, -alpha),
                                       1.0 / (1.0 - alpha)));
    return std::lgamma(jstar * alpha + 1.0) - std::lgamma(jstar + 1.0) -
           (jstar * alpha + 1.0) * std::log(u);
}

// Series sum in floating type F. Terms are advanced stride-k through exact
// integer-step recurrences (j -> j+k raises the Gamma argument by l), so no
// per-term lgamma is needed and sin(j pi a) reduces to a fixed table.
template <typename F>
F series_sum(unsigned l, unsigned k, double u_in, int max_terms, double trunc_tol) {
    const F pi_v = boost::math::constants::pi<F>();
    const F u = F(u_in);
    const F alpha = F(static_cast<int>(l)) / F(static_cast<int>(k));
    const F log_u = log(u);

    std::vector<F> sin_table(2 * k);
    for (unsigned m = 0; m < 2 * k; ++m)
        sin_table[m] = sin(pi_v * F(static_cast<int>(m)) / F(static_cast<int>(k)));

    // u^{-l} for the stride recurrence; initial magnitudes for j = 1..k.
    F u_pow_ml;
    std::vector<F> mag(k + 1);
    if constexpr (std::is_same_v<F, double>) {
        u_pow_ml = std::pow(u_in, -static_cast<double>(l));
        for (unsigned j = 1; j <= k; ++j) {
            const double ja = static_cast<double>(j) * static_cast<double>(l) / k;
            mag[j] = std::exp(std::lgamma(ja + 1.0) - std::lgamma(j + 1.0) - (ja + 1.0) * log_u);
        }
    } else {
        u_pow_ml = pow(u, -F(static_cast<int>(l)));
        for (unsigned j = 1; j <= k; ++j) {
            const F ja = F(static_cast<int>(j)) * alpha;
            mag[j] = exp(boost::math::lgamma(ja + 1) - boost::math::lgamma(F(static_cast<int>(j) + 1)) -
                         (ja + 1) * log_u);
        }
    }

    F sum = 0;
    int consecutive_small = 0;
    for (int j = 1; j <= max_terms; ++j) {
        const unsigned r = static_cast<unsigned>((j - 1) % static_cast<int>(k)) + 1;
        if (j > static_cast<int>(k)) {
            const int jprev = j - static_cast<int>(k);
            F num = 1, den = 1;
            for (unsigned i = 0; i < l; ++i) num *= F(jprev) * alpha + 1 + F(static_cast<int>(i));
            for (unsigned i = 1; i <= k; ++i) den *= F(jprev + static_cast<int>(i));
            mag[r] = mag[r] * num / den * u_pow_ml;
        }
        const F s = sin_table[static_cast<size_t>((static_cast<unsigned long long>(j) * l) % (2 * k))];
        const F term = ((j % 2) ? mag[r] : -mag[r]) * s / pi_v;
        sum += term;

        if (mag[r] < F(trunc_tol) * pi_v) {
            if (++consecutive_small >= static_cast<int>(2 * k)) return sum;
        } else {
            consecutive_small = 0;
        }
    }
    throw SeriesNonConvergence("stable_pdf series: tolerance not reached within " +
                               std::to_string(max_terms) + " terms (u = " + std::to_string(u_in) +
                               ")");
}

double series_dispatch(StableIndex idx, double u, const SeriesControl& ctl) {
    const double peak_ln = peak_term_log(idx.alpha(), u);
    const double noise_budget = std::max(1e-12, 0.1 * ctl.abs_tol);
    const double trunc = 0.01 * ctl.abs_tol;
    if (peak_ln + std::log(5e-15) < std::log(noise_budget))
        return series_sum<double>(idx.l, idx.k, u, ctl.max_terms, trunc);
    if (peak_ln + std::log(5e-33) > std::log(noise_budget))
        throw SeriesNonConvergence("stable_pdf series: cancellation beyond 128-bit precision at u = " +
                                   std::to_string(u));
    return series_sum<QuadFloat>(idx.l, idx.k, u, ctl.max_terms, trunc).convert_to<double>();
}

// Analytic tail of the mass integral: term-by-term
//   Int_T^inf u^{-j a - 1} du = T^{-j a} / (j a).
double series_tail_mass(StableIndex idx, double T) {
    const double alpha = idx.alpha();
    const unsigned k = idx.k;
    double sum = 0.0;
    int consecutive_small = 0;
    for (int j = 1; j <= 400; ++j) {
        const double ja = j * alpha;
        const double mag = std::exp(std::lgamma(ja + 1.0) - std::lgamma(j + 1.0) - ja * std::log(T));
        const double s = std::sin(M_PI * static_cast<double>((static_cast<unsigned long long>(j) * idx.l) % (2 * k)) / k);
        sum += ((j % 2) ? 1.0 : -1.0) * mag * s / (M_PI * ja);
        if (mag < 1e-17) {
            if (++consecutive_small >= static_cast<int>(2 * k)) break;
        } else {
            consecutive_small = 0;
        }
    }
    return sum;
}

}  // namespace

StableIndex::StableIndex(unsigned l_, unsigned k_) : l(l_), k(k_) {
    if (l == 0 || l >= k) throw std::invalid_argument("StableIndex: need 0 < l < k");
    if (std::gcd(l, k) != 1) throw std::invalid_argument("StableIndex: l, k must be coprime");
}

double levy_smirnov_pdf(double kappa) {
    if (!(kappa > 0)) throw std::domain_error("levy_smirnov_pdf: kappa must be positive");
    const double e = 1.0 / (4.0 * kappa);
    if (e > 700.0) return 0.0;  // essential singularity wins over the kappa^{-3/2} pole
    return std::exp(-e) / (2.0 * std::sqrt(M_PI) * kappa * std::sqrt(kappa));
}

double stable_pdf_series(StableIndex idx, double u, const SeriesControl& ctl) {
    if (!(u >= ctl.min_argument))
        throw std::domain_error("stable_pdf: argument below min_argument (series refused)");
    return series_dispatch(idx, u, ctl);
}

double stable_pdf(StableIndex idx, double u, const SeriesControl& ctl) {
    if (!(u >= ctl.min_argument))
        throw std::domain_error("stable_pdf: argument below min_argument");
    if (idx.is_levy_smirnov()) return levy_smirnov_pdf(u);
    return series_dispatch(idx, u, ctl);
}

double stable_small_argument_cutoff(StableIndex idx) {
    const double a = idx.alpha();
    const double B = (1.0 - a) * std::pow(a, a / (1.0 - a));
    return std::pow(B / 30.0, (1.0 - a) / a);
}

double stable_laplace(StableIndex idx, double p, const QuadratureSpec& quad) {
    if (p < 0) throw std::domain_error("stable_laplace: p must be nonnegative");

    SeriesControl ctl(800, 1e-14, 1e-300);
    const bool closed = idx.is_levy_smirnov();
    auto pdf = [&](double u) {
        return closed ? levy_smirnov_pdf(u) : series_dispatch(idx, u, ctl);
    };
    const double lo = closed ? 0.0 : stable_small_argument_cutoff(idx);
    auto f = [&](double u) { return std::exp(-p * u) * pdf(u); };

    // Exponential decay bounds the tail for p > 0; for p = 0 the power tail
    // is summed analytically term by term.
    const double T = (p > 0) ? std::max(12.0, 34.0 / p) : 12.0;
    IntegrationResult fin = integrate_interval(f, lo, std::min(T, 12.0), quad);
    double value = fin.value;
    if (T > 12.0) value += integrate_interval(f, 12.0, T, quad).value;
    if (p == 0.0) value += series_tail_mass(idx, T);
    return value;
}

double stable_mass(StableIndex idx, const QuadratureSpec& quad) {
    return stable_laplace(idx, 0.0, quad);
}

}  // namespace relheat
