#pragma once

#include "relheat/polynomial.hpp"
#include "relheat/rational.hpp"

#include <stdexcept>
#include <vector>

namespace relheat {

namespace detail {
inline Rational coeff_one(const Rational*) { return Rational(1); }
inline RationalPoly coeff_one(const RationalPoly*) { return RationalPoly::constant(1); }
inline BivariatePoly coeff_one(const BivariatePoly*) { return BivariatePoly::constant(1); }

inline Rational coeff_scale(const Rational& c, const Rational& s) { return c * s; }
inline RationalPoly coeff_scale(const RationalPoly& c, const Rational& s) { return c * s; }
inline BivariatePoly coeff_scale(const BivariatePoly& c, const Rational& s) { return c * s; }
}  // namespace detail

/// Power series in one formal variable truncated at a fixed order.
/// All arithmetic is exact through the truncation order; coefficients live in
/// any commutative Q-algebra C (Rational, RationalPoly, BivariatePoly).
template <typename C>
class FormalSeries {
  public:
    FormalSeries() = default;
    explicit FormalSeries(int order) : c_(static_cast<size_t>(order) + 1) {}
    FormalSeries(std::vector<C> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("FormalSeries: empty coefficient list");
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const C& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
    C& operator[](int i) { return c_[static_cast<size_t>(i)]; }

    FormalSeries& operator+=(const FormalSeries& o) {
        check_order(o);
        for (int i = 0; i <= order(); ++i) c_[i] = c_[i] + o.c_[i];
        return *this;
    }
    FormalSeries& operator-=(const FormalSeries& o) {
        check_order(o);
        for (int i = 0; i <= order(); ++i) c_[i] = c_[i] - o.c_[i];
        return *this;
    }
    friend FormalSeries operator+(FormalSeries a, const FormalSeries& b) { return a += b; }
    friend FormalSeries operator-(FormalSeries a, const FormalSeries& b) { return a -= b; }

    friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) {
        a.check_order(b);
        FormalSeries r(a.order());
        for (int i = 0; i <= a.order(); ++i)
            for (int j = 0; i + j <= a.order(); ++j) r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
        return r;
    }

    FormalSeries scaled(const Rational& s) const {
        FormalSeries r = *this;
        for (auto& v : r.c_) v = detail::coeff_scale(v, s);
        return r;
    }

    /// exp of a series with zero constant term: e_n = (1/n) sum_j j f_j e_{n-j}.
    FormalSeries exp() const;

    /// (1 + *this)^p by the binomial series; requires zero constant term.
    FormalSeries pow_one_plus(const Rational& p) const;

  private:
    void check_order(const FormalSeries& o) const {
        if (o.order() != order()) throw std::invalid_argument("FormalSeries: order mismatch");
    }
    void require_zero_constant(const char* what) const;

    std::vector<C> c_;
};

template <typename C>
void FormalSeries<C>::require_zero_constant(const char* what) const {
    bool zero;
    if constexpr (std::is_same_v<C, Rational>)
        zero = (c_[0] == 0);
    else
        zero = c_[0].is_zero();
    if (!zero) throw std::invalid_argument(std::string(what) + ": nonzero constant term");
}

template <typename C>
FormalSeries<C> FormalSeries<C>::exp() const {
    require_zero_constant("FormalSeries::exp");
    const int n = order();
    FormalSeries r(n);
    r.c_[0] = detail::coeff_one(static_cast<const C*>(nullptr));
    for (int m = 1; m <= n; ++m) {
        C acc{};
        for (int j = 1; j <= m; ++j) acc = acc + detail::coeff_scale(c_[j] * r.c_[m - j], Rational(j));
        r.c_[m] = detail::coeff_scale(acc, Rational(1, m));
    }
    return r;
}

template <typename C>
FormalSeries<C> FormalSeries<C>::pow_one_plus(const Rational& p) const {
    require_zero_constant("FormalSeries::pow_one_plus");
    const int n = order();
    FormalSeries r(n);
    FormalSeries wpow(n);
    wpow.c_[0] = detail::coeff_one(static_cast<const C*>(nullptr));
    for (int m = 0; m <= n; ++m) {
        const Rational bc = rational_binomial(p, static_cast<unsigned>(m));
        for (int i = 0; i <= n; ++i) r.c_[i] = r.c_[i] + detail::coeff_scale(wpow.c_[i], bc);
        if (m < n) wpow = wpow * (*this);
    }
    return r;
}

}  // namespace relheat
