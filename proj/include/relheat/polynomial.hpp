#pragma once

#include "relheat/rational.hpp"

#include <map>
#include <utility>
#include <vector>

namespace relheat {

/// Dense univariate polynomial with exact rational coefficients.
/// Invariant: no trailing zero coefficient (the zero polynomial is empty).
class RationalPoly {
  public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rational> coeffs, char var = 't')
        : c_(std::move(coeffs)), var_(var) {
        normalize();
    }
    static RationalPoly constant(Rational v, char var = 't');
    static RationalPoly monomial(const Rational& coeff, int degree, char var = 't');

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    char variable() const { return var_; }
    Rational coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rational(0);
    }
    const std::vector<Rational>& coeffs() const { return c_; }

    RationalPoly derivative() const;
    Rational eval(const Rational& x) const;
    double eval(double x) const;

    RationalPoly& operator+=(const RationalPoly& o);
    RationalPoly& operator-=(const RationalPoly& o);
    RationalPoly& operator*=(const RationalPoly& o);
    RationalPoly& operator*=(const Rational& s);

    friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
    friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
    friend RationalPoly operator*(RationalPoly a, const RationalPoly& b) { return a *= b; }
    friend RationalPoly operator*(RationalPoly a, const Rational& s) { return a *= s; }
    friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.c_ == b.c_; }

    std::string to_string() const;

  private:
    void normalize();
    std::vector<Rational> c_;
    char var_ = 't';
};

/// Sparse polynomial in x and t with exact rational coefficients.
/// Keys are (x-degree, t-degree); zero entries are never stored.
class BivariatePoly {
  public:
    using Key = std::pair<int, int>;

    BivariatePoly() = default;
    static BivariatePoly constant(Rational v);
    static BivariatePoly monomial(const Rational& coeff, int xdeg, int tdeg);

    bool is_zero() const { return terms_.empty(); }
    Rational coeff(int xdeg, int tdeg) const;
    void add_term(int xdeg, int tdeg, const Rational& v);
    const std::map<Key, Rational>& terms() const { return terms_; }

    int x_degree() const;
    int t_degree() const;

    BivariatePoly dx() const;
    BivariatePoly dt() const;
    double eval(double x, double t) const;
    Rational eval(const Rational& x, const Rational& t) const;
    /// Substitutes a fixed t, leaving a polynomial in x.
    RationalPoly at_t(const Rational& t) const;

    BivariatePoly& operator+=(const BivariatePoly& o);
    BivariatePoly& operator-=(const BivariatePoly& o);
    BivariatePoly& operator*=(const BivariatePoly& o);
    BivariatePoly& operator*=(const Rational& s);

    friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
    friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }
    friend BivariatePoly operator*(BivariatePoly a, const BivariatePoly& b) { return a *= b; }
    friend BivariatePoly operator*(BivariatePoly a, const Rational& s) { return a *= s; }
    friend bool operator==(const BivariatePoly& a, const BivariatePoly& b) {
        return a.terms_ == b.terms_;
    }

    std::string to_string() const;

  private:
    std::map<Key, Rational> terms_;
};

/// One term c * sigma^e of a Rodrigues intermediate (the e^{-sigma} factor is
/// carried by the enclosing sum). Exponents may be fractional mid-derivation.
struct ExpPolyTerm {
    Rational coefficient;
    Rational exponent;
};

/// Sum of ExpPolyTerm multiplying e^{-sigma}, kept sorted by exponent.
class ExpPolySum {
  public:
    ExpPolySum() = default;
    static ExpPolySum one();

    void add(const Rational& coeff, const Rational& exponent);

    /// Applies sigma^{1-q} d/dsigma to (sum) * e^{-sigma} once.
    ExpPolySum apply_derivation(const Rational& q) const;

    /// Multiplies by sigma^{shift}, then requires every exponent to be a
    /// nonnegative integer. Throws RodriguesStructureError otherwise.
    RationalPoly to_poly_shifted(const Rational& shift, char var) const;

    std::vector<ExpPolyTerm> terms() const;

  private:
    std::map<Rational, Rational> terms_;  // exponent -> coefficient
};

class RodriguesStructureError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

}  // namespace relheat
