#include "relheat/dirac.hpp"

#include <cmath>
#include <complex>
#include <sstream>

namespace relheat {

SymbolPoly SymbolPoly::constant(GaussianRational v) {
    SymbolPoly p;
    if (!v.is_zero()) p.c.push_back(std::move(v));
    return p;
}

void SymbolPoly::trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

SymbolPoly operator+(const SymbolPoly& a, const SymbolPoly& b) {
    SymbolPoly r = a;
    if (b.c.size() > r.c.size()) r.c.resize(b.c.size());
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] + b.c[i];
    r.trim();
    return r;
}

SymbolPoly operator-(const SymbolPoly& a, const SymbolPoly& b) {
    SymbolPoly r = a;
    if (b.c.size() > r.c.size()) r.c.resize(b.c.size());
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] - b.c[i];
    r.trim();
    return r;
}

SymbolPoly operator*(const SymbolPoly& a, const SymbolPoly& b) {
    SymbolPoly r;
    if (a.c.empty() || b.c.empty()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, GaussianRational{});
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    r.trim();
    return r;
}

bool operator==(const SymbolPoly& a, const SymbolPoly& b) { return a.c == b.c; }

TwoByTwoSymbolic TwoByTwoSymbolic::zero() { return {}; }

TwoByTwoSymbolic TwoByTwoSymbolic::identity() { return scalar(GaussianRational(Rational(1))); }

TwoByTwoSymbolic TwoByTwoSymbolic::scalar(const GaussianRational& v) {
    TwoByTwoSymbolic m;
    m.e[0][0] = SymbolPoly::constant(v);
    m.e[1][1] = SymbolPoly::constant(v);
    return m;
}

TwoByTwoSymbolic TwoByTwoSymbolic::pauli(int i) {
    const GaussianRational one{Rational(1)};
    const GaussianRational mone{Rational(-1)};
    const GaussianRational pi_{Rational(0), Rational(1)};
    const GaussianRational mi{Rational(0), Rational(-1)};
    TwoByTwoSymbolic m;
    switch (i) {
        case 1:
            m.e[0][1] = SymbolPoly::constant(one);
            m.e[1][0] = SymbolPoly::constant(one);
            return m;
        case 2:
            m.e[0][1] = SymbolPoly::constant(mi);
            m.e[1][0] = SymbolPoly::constant(pi_);
            return m;
        case 3:
            m.e[0][0] = SymbolPoly::constant(one);
            m.e[1][1] = SymbolPoly::constant(mone);
            return m;
        default:
            throw std::invalid_argument("pauli: index must be 1, 2 or 3");
    }
}

TwoByTwoSymbolic operator+(const TwoByTwoSymbolic& a, const TwoByTwoSymbolic& b) {
    TwoByTwoSymbolic r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.e[i][j] = a.e[i][j] + b.e[i][j];
    return r;
}

TwoByTwoSymbolic operator-(const TwoByTwoSymbolic& a, const TwoByTwoSymbolic& b) {
    TwoByTwoSymbolic r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.e[i][j] = a.e[i][j] - b.e[i][j];
    return r;
}

TwoByTwoSymbolic operator*(const TwoByTwoSymbolic& a, const TwoByTwoSymbolic& b) {
    TwoByTwoSymbolic r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.e[i][j] = a.e[i][0] * b.e[0][j] + a.e[i][1] * b.e[1][j];
    return r;
}

bool operator==(const TwoByTwoSymbolic& a, const TwoByTwoSymbolic& b) {
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (!(a.e[i][j] == b.e[i][j])) return false;
    return true;
}

TwoByTwoSymbolic TwoByTwoSymbolic::scaled(const GaussianRational& v) const {
    TwoByTwoSymbolic r;
    const SymbolPoly s = SymbolPoly::constant(v);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.e[i][j] = e[i][j] * s;
    return r;
}

std::string PauliReport::to_string() const {
    std::ostringstream os;
    const auto line = [&](const char* name, bool ok) {
        os << (ok ? "ok   " : "FAIL ") << name << "\n";
    };
    line("sigma_i^2 = 1", squares_ok);
    line("{sigma_l, sigma_m} = 0 (l != m)", anticommutators_ok);
    line("[sigma_l, sigma_m] = 2 i eps_{lmn} sigma_n", commutators_factor2_ok);
    line("[sigma_l, sigma_m] = i eps_{lmn} sigma_n (as printed; expected to fail)",
         commutators_printed_ok);
    line("(sigma_1 + i sigma_2 z)^2 = (1 - z^2) 1", factorization_square_ok);
    return os.str();
}

PauliReport pauli_identities() {
    PauliReport rep;
    const auto s1 = TwoByTwoSymbolic::pauli(1);
    const auto s2 = TwoByTwoSymbolic::pauli(2);
    const auto s3 = TwoByTwoSymbolic::pauli(3);
    const auto id = TwoByTwoSymbolic::identity();
    const TwoByTwoSymbolic sig[3] = {s1, s2, s3};

    rep.squares_ok = (s1 * s1 == id) && (s2 * s2 == id) && (s3 * s3 == id);

    rep.anticommutators_ok = true;
    for (int l = 0; l < 3; ++l)
        for (int m = 0; m < 3; ++m)
            if (l != m && !(sig[l] * sig[m] + sig[m] * sig[l] == TwoByTwoSymbolic::zero()))
                rep.anticommutators_ok = false;

    // eps_{lmn}: cyclic (1,2,3) -> +1
    const auto commutator_matches = [&](const Rational& factor) {
        const GaussianRational fi{Rational(0), factor};
        const int next[3] = {1, 2, 0};
        for (int l = 0; l < 3; ++l) {
            const int m = next[l];
            const int n = next[m];
            if (!(sig[l] * sig[m] - sig[m] * sig[l] == sig[n].scaled(fi))) return false;
            if (!(sig[m] * sig[l] - sig[l] * sig[m] == sig[n].scaled({Rational(0), -factor})))
                return false;
        }
        return true;
    };
    rep.commutators_factor2_ok = commutator_matches(Rational(2));
    rep.commutators_printed_ok = commutator_matches(Rational(1));

    // (sigma_1 + i sigma_2 z)^2 = (1 - z^2) 1 as a polynomial-matrix identity
    SymbolPoly iz;
    iz.c = {GaussianRational{}, GaussianRational{Rational(0), Rational(1)}};
    TwoByTwoSymbolic op = s1;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) op.e[i][j] = s1.e[i][j] + s2.e[i][j] * iz;
    SymbolPoly one_minus_z2;
    one_minus_z2.c = {GaussianRational{Rational(1)}, GaussianRational{},
                      GaussianRational{Rational(-1)}};
    TwoByTwoSymbolic rhs;
    rhs.e[0][0] = one_minus_z2;
    rhs.e[1][1] = one_minus_z2;
    rep.factorization_square_ok = (op * op == rhs);
    return rep;
}

TwoByTwoSymbolic coupling_matrix_symbol() {
    // M(ik) = [[1, (1+ik)/2], [(1-ik)/2, 1]] with k the polynomial symbol
    const GaussianRational half{Rational(1, 2)};
    const GaussianRational ihalf{Rational(0), Rational(1, 2)};
    const GaussianRational mihalf{Rational(0), Rational(-1, 2)};
    TwoByTwoSymbolic m = TwoByTwoSymbolic::identity();
    m.e[0][1].c = {half, ihalf};
    m.e[1][0].c = {half, mihalf};
    return m;
}

bool factorization_identity_holds() {
    const TwoByTwoSymbolic m = coupling_matrix_symbol();
    const TwoByTwoSymbolic d = m - TwoByTwoSymbolic::identity();
    const TwoByTwoSymbolic lhs = (d * d).scaled(GaussianRational{Rational(4)});
    SymbolPoly one_plus_k2;
    one_plus_k2.c = {GaussianRational{Rational(1)}, GaussianRational{},
                     GaussianRational{Rational(1)}};
    TwoByTwoSymbolic rhs;
    rhs.e[0][0] = one_plus_k2;
    rhs.e[1][1] = one_plus_k2;
    return lhs == rhs;
}

TwoComponentGrid::TwoComponentGrid(GridFunction a, GridFunction b)
    : phi1(std::move(a)), phi2(std::move(b)) {
    if (phi1.n_points != phi2.n_points || phi1.x_min != phi2.x_min || phi1.x_max != phi2.x_max)
        throw std::invalid_argument("TwoComponentGrid: components must share one grid");
    if (phi1.time != phi2.time)
        throw std::invalid_argument("TwoComponentGrid: components must share one time stamp");
}

namespace {

std::complex<double> trapezoid_transform(const GridFunction& g, double k) {
    const double h = g.dx();
    std::complex<double> acc = 0.0;
    for (int i = 0; i < g.n_points; ++i) {
        const double w = (i == 0 || i == g.n_points - 1) ? 0.5 : 1.0;
        const double x = g.x(i);
        acc += w * g.samples[static_cast<size_t>(i)] *
               std::complex<double>(std::cos(k * x), -std::sin(k * x));
    }
    return acc * h;
}

}  // namespace

TwoComponentGrid two_component_evolve(const TwoComponentGrid& phi0, double t, const GridSpec& grid,
                                      const QuadratureSpec& quad) {
    (void)quad;
    if (t < 0) throw std::domain_error("two_component_evolve: t must be nonnegative");
    if (t == 0.0) {
        GridFunction p1(grid, 0.0), p2(grid, 0.0);
        for (int i = 0; i < grid.n_points; ++i) {
            p1.samples[static_cast<size_t>(i)] = phi0.phi1.interpolate(grid.x(i));
            p2.samples[static_cast<size_t>(i)] = phi0.phi2.interpolate(grid.x(i));
        }
        return {std::move(p1), std::move(p2)};
    }

    // Uniform k-grid inversion: spacing set by the Poisson image distance,
    // window by the decay of the evolved transforms.
    const double extent = std::max(std::abs(grid.x_min), std::abs(grid.x_max));
    const double hk = 2.0 * M_PI / (2.0 * extent + 48.0);
    const double et = std::exp(t);

    auto evolved = [&](double k) -> std::pair<std::complex<double>, std::complex<double>> {
        const std::complex<double> g1 = trapezoid_transform(phi0.phi1, k);
        const std::complex<double> g2 = trapezoid_transform(phi0.phi2, k);
        const double w = std::sqrt(1.0 + k * k);
        const double ch = std::cosh(t * w);
        const double sh = std::sinh(t * w) / w;
        const std::complex<double> ik(0.0, k);
        return {et * (ch * g1 + sh * (1.0 + ik) * g2), et * (sh * (1.0 - ik) * g1 + ch * g2)};
    };

    // collect nodes k >= 0 until both transforms decay
    std::vector<double> ks;
    std::vector<std::pair<std::complex<double>, std::complex<double>>> vals;
    double scale = 0.0;
    int small_run = 0;
    for (int j = 0;; ++j) {
        const double k = j * hk;
        auto v = evolved(k);
        ks.push_back(k);
        vals.push_back(v);
        const double mag = std::max(std::abs(v.first), std::abs(v.second));
        scale = std::max(scale, mag);
        if (mag < 1e-16 * scale) {
            if (++small_run >= 8) break;
        } else {
            small_run = 0;
        }
        if (k > 2e4)
            throw QuadratureError("two_component_evolve: transform window search failed");
    }

    GridFunction p1(grid, t), p2(grid, t);
    for (int i = 0; i < grid.n_points; ++i) {
        const double x = grid.x(i);
        double a1 = 0.5 * vals[0].first.real();
        double a2 = 0.5 * vals[0].second.real();
        for (size_t j = 1; j < ks.size(); ++j) {
            const std::complex<double> ph(std::cos(ks[j] * x), std::sin(ks[j] * x));
            a1 += (ph * vals[j].first).real();
            a2 += (ph * vals[j].second).real();
        }
        p1.samples[static_cast<size_t>(i)] = a1 * hk / M_PI;
        p2.samples[static_cast<size_t>(i)] = a2 * hk / M_PI;
    }
    return {std::move(p1), std::move(p2)};
}

}  // namespace relheat
