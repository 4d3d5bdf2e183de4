#pragma once
// Test-only reference computations. None of these call into the library's
// permanent engine or closed forms; they are slow and obviously correct.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <vector>

#include "permlab/graph.hpp"
#include "permlab/matrix.hpp"

namespace oracle {

using permlab::BigInt;
using permlab::ExactMatrix;
using permlab::Graph;

// Row-by-row DP over the set of used columns: f[mask] = sum over ways to
// assign the first popcount(mask) rows to exactly the columns in mask.
inline BigInt permanent_dp(const ExactMatrix& a) {
    const std::size_t n = a.dim();
    std::vector<BigInt> f(std::size_t{1} << n);
    f[0] = 1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (f[mask] == 0) continue;
        const auto row = static_cast<std::size_t>(__builtin_popcountll(mask));
        if (row == n) continue;
        for (std::size_t c = 0; c < n; ++c) {
            if (mask >> c & 1) continue;
            f[mask | (std::uint64_t{1} << c)] += f[mask] * a(row, c);
        }
    }
    return f[(std::uint64_t{1} << n) - 1];
}

// Laplace expansion along the first row, recursively.
inline BigInt permanent_laplace(const ExactMatrix& a) {
    const std::size_t n = a.dim();
    if (n == 0) return 1;
    if (n == 1) return a(0, 0);
    BigInt total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (a(0, c) == 0) continue;
        ExactMatrix minor(n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0, jj = 0; j < n; ++j)
                if (j != c) minor(i - 1, jj++) = a(i, j);
        total += a(0, c) * permanent_laplace(minor);
    }
    return total;
}

// Number of t-edge matchings of C_n, by enumerating all edge subsets.
inline std::vector<BigInt> cycle_matchings_brute(std::size_t n) {
    std::vector<BigInt> count(n / 2 + 1);
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        // edge k joins k and k+1 mod n
        std::vector<int> used(n, 0);
        bool ok = true;
        for (std::size_t k = 0; k < n && ok; ++k) {
            if (!(s >> k & 1)) continue;
            if (used[k]++ || used[(k + 1) % n]++) ok = false;
        }
        if (ok) count[__builtin_popcountll(s)] += 1;
    }
    return count;
}

inline BigInt pow_int(long base, std::size_t e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), BigInt(base).get_mpz_t(), e);
    return r;
}

inline BigInt factorial(std::size_t n) {
    BigInt r = 1;
    for (std::size_t k = 2; k <= n; ++k) r *= static_cast<unsigned long>(k);
    return r;
}

// The clique scalar inequality evaluated over the rationals, without
// clearing denominators:  sum (n(n-2))^k/k!  <=  m! (sum (-n)^k/k!)^2.
inline bool clique_scalar_rational(std::size_t n, std::size_t m) {
    mpq_class lhs = 0, inner = 0;
    const long nn = static_cast<long>(n);
    for (std::size_t k = 0; k <= m; ++k) {
        mpq_class fk(factorial(k));
        lhs += mpq_class(pow_int(nn * (nn - 2), k)) / fk;
        inner += mpq_class(pow_int(-nn, k)) / fk;
    }
    mpq_class rhs = mpq_class(factorial(m)) * inner * inner;
    return lhs <= rhs;
}

// n I_s - J_s, built entry by entry.
inline ExactMatrix clique_matrix(std::size_t n, std::size_t s) {
    ExactMatrix m(s);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) m(i, j) = (i == j ? static_cast<long>(n) : 0) - 1;
    return m;
}

// Laplacian straight from the definition D - A, using only the edge list.
inline ExactMatrix laplacian_from_edges(const Graph& g) {
    ExactMatrix l(g.order());
    for (const auto& e : g.edges()) {
        l(e.u, e.u) += 1;
        l(e.v, e.v) += 1;
        l(e.u, e.v) -= 1;
        l(e.v, e.u) -= 1;
    }
    return l;
}

inline bool is_bipartite_brute(const Graph& g) {
    const std::size_t n = g.order();
    for (std::uint64_t colour = 0; colour < (std::uint64_t{1} << n); ++colour) {
        bool ok = true;
        for (const auto& e : g.edges())
            if ((colour >> e.u & 1) == (colour >> e.v & 1)) ok = false;
        if (ok) return true;
    }
    return n == 0;
}

// --- random inputs for property tests ---------------------------------------

inline ExactMatrix random_matrix(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    ExactMatrix a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = d(rng);
    return a;
}

inline ExactMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    ExactMatrix a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) a(i, j) = a(j, i) = d(rng);
    return a;
}

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p = 0.5) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (coin(rng)) e.emplace_back(i, j);
    return Graph(n, std::move(e));
}

// Random labelled tree by attaching each new vertex to an earlier one.
inline Graph random_tree(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t v = 1; v < n; ++v) e.emplace_back(std::uniform_int_distribution<std::size_t>(0, v - 1)(rng), v);
    return Graph(n, std::move(e));
}

inline std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace oracle
