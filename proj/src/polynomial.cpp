#include "relheat/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace relheat {

RationalPoly RationalPoly::constant(Rational v, char var) {
    RationalPoly p;
    p.var_ = var;
    if (v != 0) p.c_.push_back(std::move(v));
    return p;
}

RationalPoly RationalPoly::monomial(const Rational& coeff, int degree, char var) {
    RationalPoly p;
    p.var_ = var;
    if (coeff != 0) {
        p.c_.assign(static_cast<size_t>(degree) + 1, Rational(0));
        p.c_.back() = coeff;
    }
    return p;
}

void RationalPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RationalPoly RationalPoly::derivative() const {
    RationalPoly r;
    r.var_ = var_;
    for (size_t i = 1; i < c_.size(); ++i) r.c_.push_back(c_[i] * Rational(i));
    r.normalize();
    return r;
}

Rational RationalPoly::eval(const Rational& x) const {
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

double RationalPoly::eval(double x) const {
    double r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + to_double(*it);
    return r;
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
}

RationalPoly& RationalPoly::operator*=(const RationalPoly& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    c_ = std::move(r);
    normalize();
    return *this;
}

RationalPoly& RationalPoly::operator*=(const Rational& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& v : c_) v *= s;
    return *this;
}

std::string RationalPoly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        os << to_fraction_string(c_[i]);
        if (i > 0) os << "*" << var_ << "^" << i;
        first = false;
    }
    return os.str();
}

BivariatePoly BivariatePoly::constant(Rational v) {
    BivariatePoly p;
    if (v != 0) p.terms_[{0, 0}] = std::move(v);
    return p;
}

BivariatePoly BivariatePoly::monomial(const Rational& coeff, int xdeg, int tdeg) {
    BivariatePoly p;
    if (coeff != 0) p.terms_[{xdeg, tdeg}] = coeff;
    return p;
}

Rational BivariatePoly::coeff(int xdeg, int tdeg) const {
    auto it = terms_.find({xdeg, tdeg});
    return it == terms_.end() ? Rational(0) : it->second;
}

void BivariatePoly::add_term(int xdeg, int tdeg, const Rational& v) {
    if (v == 0) return;
    auto [it, inserted] = terms_.try_emplace({xdeg, tdeg}, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0) terms_.erase(it);
    }
}

int BivariatePoly::x_degree() const {
    int d = 0;
    for (const auto& [k, v] : terms_) d = std::max(d, k.first);
    return d;
}

int BivariatePoly::t_degree() const {
    int d = 0;
    for (const auto& [k, v] : terms_) d = std::max(d, k.second);
    return d;
}

BivariatePoly BivariatePoly::dx() const {
    BivariatePoly r;
    for (const auto& [k, v] : terms_)
        if (k.first > 0) r.add_term(k.first - 1, k.second, v * Rational(k.first));
    return r;
}

BivariatePoly BivariatePoly::dt() const {
    BivariatePoly r;
    for (const auto& [k, v] : terms_)
        if (k.second > 0) r.add_term(k.first, k.second - 1, v * Rational(k.second));
    return r;
}

double BivariatePoly::eval(double x, double t) const {
    double r = 0;
    for (const auto& [k, v] : terms_) {
        double m = to_double(v);
        for (int i = 0; i < k.first; ++i) m *= x;
        for (int j = 0; j < k.second; ++j) m *= t;
        r += m;
    }
    return r;
}

Rational BivariatePoly::eval(const Rational& x, const Rational& t) const {
    Rational r = 0;
    for (const auto& [k, v] : terms_) {
        Rational m = v;
        for (int i = 0; i < k.first; ++i) m *= x;
        for (int j = 0; j < k.second; ++j) m *= t;
        r += m;
    }
    return r;
}

RationalPoly BivariatePoly::at_t(const Rational& t) const {
    std::vector<Rational> coeffs(static_cast<size_t>(x_degree()) + 1, Rational(0));
    for (const auto& [k, v] : terms_) {
        Rational m = v;
        for (int j = 0; j < k.second; ++j) m *= t;
        coeffs[static_cast<size_t>(k.first)] += m;
    }
    return RationalPoly(std::move(coeffs), 'x');
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& o) {
    for (const auto& [k, v] : o.terms_) add_term(k.first, k.second, v);
    return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& o) {
    for (const auto& [k, v] : o.terms_) add_term(k.first, k.second, -v);
    return *this;
}

BivariatePoly& BivariatePoly::operator*=(const BivariatePoly& o) {
    BivariatePoly r;
    for (const auto& [ka, va] : terms_)
        for (const auto& [kb, vb] : o.terms_)
            r.add_term(ka.first + kb.first, ka.second + kb.second, va * vb);
    terms_ = std::move(r.terms_);
    return *this;
}

BivariatePoly& BivariatePoly::operator*=(const Rational& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= s;
    return *this;
}

std::string BivariatePoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        os << to_fraction_string(it->second);
        if (it->first.first > 0) os << "*x^" << it->first.first;
        if (it->first.second > 0) os << "*t^" << it->first.second;
        first = false;
    }
    return os.str();
}

ExpPolySum ExpPolySum::one() {
    ExpPolySum s;
    s.terms_[Rational(0)] = 1;
    return s;
}

void ExpPolySum::add(const Rational& coeff, const Rational& exponent) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

ExpPolySum ExpPolySum::apply_derivation(const Rational& q) const {
    // sigma^{1-q} d/dsigma [ c sigma^e e^{-sigma} ]
    //   = c e sigma^{e-q} e^{-sigma} - c sigma^{e+1-q} e^{-sigma}
    ExpPolySum r;
    for (const auto& [e, c] : terms_) {
        r.add(c * e, e - q);
        r.add(-c, e + 1 - q);
    }
    return r;
}

RationalPoly ExpPolySum::to_poly_shifted(const Rational& shift, char var) const {
    std::vector<Rational> coeffs;
    for (const auto& [e, c] : terms_) {
        const Rational es = e + shift;
        const BigInt num = boost::multiprecision::numerator(es);
        const BigInt den = boost::multiprecision::denominator(es);
        if (den != 1 || num < 0)
            throw RodriguesStructureError("Rodrigues result has non-integer exponent " +
                                          to_fraction_string(es));
        const auto deg = num.convert_to<size_t>();
        if (coeffs.size() <= deg) coeffs.resize(deg + 1, Rational(0));
        coeffs[deg] += c;
    }
    return RationalPoly(std::move(coeffs), var);
}

std::vector<ExpPolyTerm> ExpPolySum::terms() const {
    std::vector<ExpPolyTerm> v;
    v.reserve(terms_.size());
    for (const auto& [e, c] : terms_) v.push_back({c, e});
    return v;
}

}  // namespace relheat
