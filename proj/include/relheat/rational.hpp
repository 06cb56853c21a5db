#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace relheat {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

/// Generalized binomial coefficient C(a, m) = a(a-1)...(a-m+1)/m! for rational a.
Rational rational_binomial(const Rational& a, unsigned m);

/// "p" or "p/q" with q > 0 and gcd(p, q) = 1.
std::string to_fraction_string(const Rational& r);

/// Parses "p", "p/q" or a plain integer string. Throws std::invalid_argument.
Rational fraction_from_string(const std::string& s);

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Complex rational a + b*i; coefficient ring for the Pauli-matrix algebra.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
};

}  // namespace relheat
