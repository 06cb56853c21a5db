#pragma once

#include "relheat/grid.hpp"
#include "relheat/quadrature.hpp"
#include "relheat/rational.hpp"

#include <array>
#include <string>
#include <vector>

namespace relheat {

/// Polynomial in one formal symbol with Gaussian-rational coefficients.
struct SymbolPoly {
    std::vector<GaussianRational> c;  // c[i] multiplies z^i

    static SymbolPoly constant(GaussianRational v);
    static SymbolPoly zero() { return {}; }

    void trim();
    bool is_zero() const { return c.empty(); }

    friend SymbolPoly operator+(const SymbolPoly& a, const SymbolPoly& b);
    friend SymbolPoly operator-(const SymbolPoly& a, const SymbolPoly& b);
    friend SymbolPoly operator*(const SymbolPoly& a, const SymbolPoly& b);
    friend bool operator==(const SymbolPoly& a, const SymbolPoly& b);
};

/// 2x2 matrix over SymbolPoly; exact arithmetic for the factorization checks.
struct TwoByTwoSymbolic {
    std::array<std::array<SymbolPoly, 2>, 2> e;

    static TwoByTwoSymbolic zero();
    static TwoByTwoSymbolic identity();
    static TwoByTwoSymbolic scalar(const GaussianRational& v);
    /// Pauli matrices sigma_1, sigma_2, sigma_3 (i = 1, 2, 3).
    static TwoByTwoSymbolic pauli(int i);

    friend TwoByTwoSymbolic operator+(const TwoByTwoSymbolic& a, const TwoByTwoSymbolic& b);
    friend TwoByTwoSymbolic operator-(const TwoByTwoSymbolic& a, const TwoByTwoSymbolic& b);
    friend TwoByTwoSymbolic operator*(const TwoByTwoSymbolic& a, const TwoByTwoSymbolic& b);
    friend bool operator==(const TwoByTwoSymbolic& a, const TwoByTwoSymbolic& b);

    TwoByTwoSymbolic scaled(const GaussianRational& v) const;
};

struct PauliReport {
    bool squares_ok = false;           // sigma_i^2 = 1
    bool anticommutators_ok = false;   // {sigma_l, sigma_m} = 0, l != m
    bool commutators_factor2_ok = false;  // [sigma_l, sigma_m] = 2 i eps_{lmn} sigma_n
    bool commutators_printed_ok = false;  // [sigma_l, sigma_m] = i eps_{lmn} sigma_n
    bool factorization_square_ok = false; // (sigma_1 + i sigma_2 z)^2 = (1 - z^2) 1
    bool all_ok() const {
        return squares_ok && anticommutators_ok && commutators_factor2_ok && factorization_square_ok;
    }
    std::string to_string() const;
};

/// Exact verification of the Pauli algebra underlying the factorization.
/// The standard commutator carries a factor 2; the printed single-i variant
/// is checked too and reported (it fails).
PauliReport pauli_identities();

/// The coupling matrix of the two-component system at symbol level,
/// M(ik) = [[1, (1+ik)/2], [(1-ik)/2, 1]], with k the formal symbol.
TwoByTwoSymbolic coupling_matrix_symbol();

/// Exact check of 4 (M(ik) - 1)^2 = (1 + k^2) * 1 over the polynomial ring.
bool factorization_identity_holds();

struct TwoComponentGrid {
    GridFunction phi1;
    GridFunction phi2;

    TwoComponentGrid() = default;
    TwoComponentGrid(GridFunction a, GridFunction b);
};

/// Evolves d_t Phi = [[1, 1+d_x], [1-d_x, 1]] Phi by the exact 2x2 matrix
/// exponential in Fourier space (eigenvalues 1 +- sqrt(1+k^2)); each component
/// then satisfies (d_t - 1)^2 phi = (1 - d_x^2) phi.
TwoComponentGrid two_component_evolve(const TwoComponentGrid& phi0, double t, const GridSpec& grid,
                                      const QuadratureSpec& quad = {});

}  // namespace relheat
