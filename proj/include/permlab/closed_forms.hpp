#pragma once

#include <cstddef>
#include <vector>

#include "permlab/matrix.hpp"

namespace permlab {

/// Matching statistics of the cycle C_n.
///
/// U = sum_t m_t 2^(n-2t) and V = sum_t m_t 4^(n-2t) weight the size-t
/// matchings of C_n by their fixed-point contribution to per(L) and
/// per(L o L); F = U^2 - V - 4U.
struct CycleSeries {
    std::size_t n = 0;
    BigInt U;
    BigInt V;
    BigInt F;
    /// matchings[t] = number of t-edge matchings, t = 0 .. n/2.
    std::vector<BigInt> matchings;
};

/// Matching counts of C_n from m(n,t) = m(n-1,t) + m(n-2,t-1), seeded with
/// C_3 = (1,3) and C_4 = (1,4,2). Requires n >= 3.
std::vector<BigInt> cycle_matching_counts(std::size_t n);

/// U and V from U_n = 2U_{n-1} + U_{n-2}, V_n = 4V_{n-1} + V_{n-2} seeded with
/// U_3 = 14, U_4 = 34, V_3 = 76, V_4 = 322.
std::pair<BigInt, BigInt> cycle_uv_by_recurrence(std::size_t n);

/// Computes U, V from the matching counts and cross-checks them against the
/// recurrences; a disagreement throws std::logic_error. Requires n >= 3.
CycleSeries cycle_series(std::size_t n);

struct CyclePermanents {
    BigInt per;
    BigInt per_hadamard;
    /// The even-n correction (+2 from the two oriented n-cycles) is derived
    /// here and checked against Ryser in the test suite, not taken as given.
    bool derived_even_case = false;
};

/// Odd n: (U_n - 2, V_n + 2). Even n: (U_n + 2, V_n + 2).
CyclePermanents cycle_laplacian_permanents(std::size_t n);

/// per(L)^2 - per(L o L) for odd cycles, equal to F_n + 2. Requires odd n >= 3.
BigInt odd_cycle_gap(std::size_t n);

/// Values for M = n I_s - J_s with denominators cleared:
///   P = sum_{k=0..s} (s!/k!) (n(n-2))^k,  Q = sum_{k=0..s} (s!/k!) (-n)^k,
///   per(M) = (-1)^s Q,  per(M o M) = P.
struct CliqueFormValues {
    std::size_t n = 0;
    std::size_t s = 0;
    BigInt per_M;
    BigInt per_MM;
    BigInt P;
    BigInt Q;
};

/// Requires n >= 2 and s >= 1. s = n gives L_{K_n}; s = n-1 gives L_{K_n}(v).
CliqueFormValues clique_form(std::size_t n, std::size_t s);

struct CliqueScalarResult {
    bool holds = false;
    BigInt P;
    BigInt Q;
};

/// The clique scalar inequality multiplied through by m!, i.e. P <= Q^2.
/// Requires n >= 2 and m in {n-1, n}.
CliqueScalarResult clique_scalar_holds(std::size_t n, std::size_t m);

}  // namespace permlab
