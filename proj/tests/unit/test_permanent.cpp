#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "permlab/error.hpp"
#include "permlab/matching.hpp"
#include "permlab/permanent.hpp"

using namespace permlab;

TEST_CASE("small permanents") {
    auto lk3 = laplacian(complete_graph(3));
    CHECK(permanent(lk3) == 12);
    CHECK(oracle::permanent_dp(lk3) == 12);
    CHECK(permanent(hadamard(lk3, lk3)) == 78);
    CHECK(oracle::permanent_laplace(hadamard(lk3, lk3)) == 78);
    CHECK(permanent(laplacian(path_graph(3))) == 4);
    CHECK(permanent_naive(laplacian(path_graph(3))) == 4);
    CHECK(permanent_naive(laplacian(complete_graph(4))) == 120);
    CHECK(oracle::permanent_dp(laplacian(complete_graph(4))) == 120);
    CHECK(permanent_naive(ExactMatrix::ones(3)) == 6);
    for (std::size_t n = 0; n <= 12; ++n) CHECK(permanent(ExactMatrix::identity(n)) == 1);
    CHECK(permanent(ExactMatrix(0)) == 1);
    CHECK(permanent_naive(ExactMatrix(0)) == 1);
    CHECK(permanent(ExactMatrix{{-7}}) == -7);
}

TEST_CASE("permanent of the all-ones matrix is n!") {
    for (std::size_t n = 1; n <= 20; ++n) CHECK(permanent(ExactMatrix::ones(n)) == oracle::factorial(n));
}

TEST_CASE("Ryser agrees with the naive sum and the DP oracle") {
    std::mt19937_64 rng(101);
    for (int t = 0; t < 300; ++t) {
        const auto n = oracle::pick(rng, 1, 9);
        auto a = oracle::random_matrix(rng, n, -5, 5);
        const auto p = permanent(a);
        CHECK(p == oracle::permanent_dp(a));
        if (n <= 8) CHECK(p == permanent_naive(a));
    }
}

TEST_CASE("all three Ryser kernels agree") {
    std::mt19937_64 rng(103);
    for (std::size_t n : {4u, 10u, 13u}) {
        // tiny entries: 128-bit path; moderate: 64-bit row sums; huge: full GMP
        for (long bound : {3L, 1L << 20, 0L}) {
            ExactMatrix a(n);
            if (bound) {
                a = oracle::random_matrix(rng, n, -bound, bound);
            } else {
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j)
                        a(i, j) = BigInt(static_cast<long>(rng() % 1000) - 500) * oracle::pow_int(10, 25);
            }
            CHECK(permanent(a) == oracle::permanent_dp(a));
        }
    }
}

TEST_CASE("parallel Ryser is bit-identical") {
    std::mt19937_64 rng(107);
    for (std::size_t n : {12u, 14u, 15u}) {
        auto a = oracle::random_matrix(rng, n, -9, 9);
        const auto base = permanent(a, {.max_n = 30, .jobs = 1});
        for (unsigned jobs : {2u, 3u, 4u, 7u, 16u}) CHECK(permanent(a, {.max_n = 30, .jobs = jobs}) == base);
    }
}

TEST_CASE("invariance under simultaneous row/column permutation") {
    std::mt19937_64 rng(109);
    for (int t = 0; t < 100; ++t) {
        const auto n = oracle::pick(rng, 1, 9);
        auto a = oracle::random_matrix(rng, n, -5, 5);
        std::vector<std::size_t> p(n);
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        CHECK(permanent(permute_symmetric(a, p)) == permanent(a));
    }
}

TEST_CASE("column multilinearity") {
    std::mt19937_64 rng(113);
    for (int t = 0; t < 100; ++t) {
        const auto n = oracle::pick(rng, 1, 8);
        auto a = oracle::random_matrix(rng, n, -5, 5);
        auto c = oracle::pick(rng, 0, n - 1);
        ExactMatrix left = a, right = a;
        std::uniform_int_distribution<long> d(-5, 5);
        for (std::size_t i = 0; i < n; ++i) {
            left(i, c) = d(rng);
            right(i, c) = a(i, c) - left(i, c);
        }
        CHECK(permanent(a) == permanent(left) + permanent(right));
    }
}

TEST_CASE("column expansion matches Ryser") {
    std::mt19937_64 rng(127);
    for (int t = 0; t < 100; ++t) {
        const auto n = oracle::pick(rng, 1, 9);
        auto a = oracle::random_matrix(rng, n, -5, 5);
        auto j = oracle::pick(rng, 0, n - 1);
        CHECK(permanent_column_expansion(a, j) == permanent(a));
    }
    CHECK_THROWS_AS(permanent_column_expansion(ExactMatrix::identity(2), 2), ParameterError);
}

TEST_CASE("size guards") {
    CHECK_THROWS_AS(permanent_naive(ExactMatrix::identity(13)), SizeLimitError);
    CHECK_THROWS_AS(permutation_terms(ExactMatrix::identity(13)), SizeLimitError);
    CHECK_THROWS_AS(permanent(ExactMatrix::identity(6), {.max_n = 5, .jobs = 1}), SizeLimitError);
    CHECK_THROWS_AS(permanent(ExactMatrix::identity(63), {.max_n = 100, .jobs = 1}), SizeLimitError);
    CHECK(permanent(ExactMatrix::identity(5), {.max_n = 5, .jobs = 1}) == 1);
}

TEST_CASE("PERMLAB_MAX_N overrides the default cap") {
    const char* old = std::getenv("PERMLAB_MAX_N");
    std::string saved = old ? old : "";
    setenv("PERMLAB_MAX_N", "7", 1);
    CHECK(default_max_n() == 7);
    CHECK_THROWS_AS(permanent(ExactMatrix::identity(8), {.max_n = default_max_n(), .jobs = 1}), SizeLimitError);
    setenv("PERMLAB_MAX_N", "junk", 1);
    CHECK_THROWS_AS(default_max_n(), ParameterError);
    if (old) setenv("PERMLAB_MAX_N", saved.c_str(), 1);
    else unsetenv("PERMLAB_MAX_N");
    CHECK(default_max_n() == (old ? default_max_n() : kDefaultMaxN));
}

TEST_CASE("permutation terms") {
    auto l2 = laplacian(complete_graph(2));
    std::vector<PermTerm> terms;
    for (const auto& t : permutation_terms(l2)) terms.push_back(t);
    REQUIRE(terms.size() == 2);
    CHECK(terms[0].sigma == std::vector<std::size_t>{0, 1});
    CHECK(terms[0].value == 1);
    CHECK(terms[1].sigma == std::vector<std::size_t>{1, 0});
    CHECK(terms[1].value == 1);

    ExactMatrix diag{{2, 0, 0}, {0, 3, 0}, {0, 0, 5}};
    std::size_t nonzero = 0;
    for (const auto& t : permutation_terms(diag, true)) {
        ++nonzero;
        CHECK(t.sigma == std::vector<std::size_t>{0, 1, 2});
        CHECK(t.value == 30);
    }
    CHECK(nonzero == 1);

    std::size_t count = 0;
    for (const auto& t : permutation_terms(ExactMatrix(0))) {
        CHECK(t.value == 1);
        ++count;
    }
    CHECK(count == 1);

    std::mt19937_64 rng(131);
    for (int t = 0; t < 40; ++t) {
        const auto n = oracle::pick(rng, 1, 7);
        auto a = oracle::random_matrix(rng, n, -2, 2);
        BigInt all = 0, nz = 0;
        std::size_t total = 0;
        for (const auto& term : permutation_terms(a)) {
            BigInt prod = 1;
            for (std::size_t i = 0; i < n; ++i) prod *= a(i, term.sigma[i]);
            CHECK(prod == term.value);
            all += term.value;
            ++total;
        }
        for (const auto& term : permutation_terms(a, true)) {
            CHECK(term.value != 0);
            nz += term.value;
        }
        CHECK(total == oracle::factorial(n));
        CHECK(all == permanent(a));
        CHECK(nz == permanent(a));
    }
}

TEST_CASE("PSD permanents are nonnegative and satisfy the Lieb bound") {
    std::mt19937_64 rng(137);
    for (int t = 0; t < 100; ++t) {
        const auto n = oracle::pick(rng, 1, 8);
        ExactMatrix a;
        if (t % 2) {
            a = laplacian(oracle::random_graph(rng, n));
        } else {
            const auto cols = oracle::pick(rng, 1, n);
            std::vector<BigInt> b(n * cols);
            for (auto& x : b) x = static_cast<long>(rng() % 7) - 3;
            a = gram(n, cols, b);
        }
        const auto p = permanent(a);
        CHECK(p >= 0);
        for (std::size_t i = 0; i < n; ++i) CHECK(p >= a(i, i) * permanent(delete_index(a, i)));
    }
}

TEST_CASE("hopcroft_karp") {
    // rows 0,1 both only see column 0
    std::vector<std::vector<std::size_t>> adj{{0}, {0}, {1, 2}};
    auto m = hopcroft_karp(adj, 3);
    CHECK(m.size == 2);
    CHECK(m.row_mate[2] != kUnmatched);
    CHECK(hopcroft_karp({{0, 1}, {0}}, 2).size == 2);
    CHECK(hopcroft_karp({}, 0).size == 0);
}

TEST_CASE("matching size agrees with the 0/1 support permanent") {
    std::mt19937_64 rng(139);
    for (int t = 0; t < 200; ++t) {
        const auto n = oracle::pick(rng, 1, 8);
        std::vector<std::vector<std::size_t>> adj(n);
        ExactMatrix s(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (rng() % 100 < 30) {
                    adj[i].push_back(j);
                    s(i, j) = 1;
                }
        auto m = hopcroft_karp(adj, n);
        CHECK((m.size == n) == (oracle::permanent_dp(s) > 0));
        std::size_t matched = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (m.row_mate[i] == kUnmatched) continue;
            ++matched;
            CHECK(s(i, m.row_mate[i]) == 1);
            CHECK(m.col_mate[m.row_mate[i]] == i);
        }
        CHECK(matched == m.size);
    }
}

TEST_CASE("structural zero") {
    ExactMatrix zero_col{{1, 0}, {1, 0}};
    auto w = structural_zero(zero_col);
    REQUIRE(w);
    CHECK(w->rows == std::vector<std::size_t>{0, 1});
    CHECK(w->cols == std::vector<std::size_t>{1});
    CHECK(is_valid_zero_block(zero_col, *w));
    CHECK(permanent(zero_col) == 0);
    CHECK_FALSE(structural_zero(ExactMatrix::identity(4)));
    CHECK(structural_zero(ExactMatrix(0)) == std::nullopt);

    // Nonzero support with a perfect matching but cancelling permanent: no witness.
    ExactMatrix cancel{{1, 1}, {-1, 1}};
    CHECK(permanent(cancel) == 0);
    CHECK_FALSE(structural_zero(cancel));
}

TEST_CASE("structural zero of the coalescence block matrix") {
    // Zero block on rows {v} u U2 and columns U1 u {v} in the (U1, v, U2) order.
    auto c = coalesce(complete_graph(3), 0, complete_graph(3), 0);
    auto m = laplacian(c.graph);
    const auto n = m.dim();
    const auto v = c.merged;
    for (std::size_t i = v + 1; i < n; ++i) m(i, v) = 0;
    for (std::size_t j = 0; j <= v; ++j) m(v, j) = 0;
    auto w = structural_zero(m);
    REQUIRE(w);
    CHECK(w->rows.size() + w->cols.size() == n + 1);
    CHECK(is_valid_zero_block(m, *w));
    CHECK(permanent(m) == 0);
}

TEST_CASE("witness soundness on random sparse matrices") {
    std::mt19937_64 rng(149);
    std::size_t witnesses = 0;
    for (int t = 0; t < 300; ++t) {
        const auto n = oracle::pick(rng, 1, 8);
        ExactMatrix a(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (rng() % 100 < 25) a(i, j) = static_cast<long>(rng() % 9) - 4;
        auto w = structural_zero(a);
        ExactMatrix support(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) support(i, j) = a(i, j) != 0 ? 1 : 0;
        CHECK(w.has_value() == (oracle::permanent_dp(support) == 0));
        if (w) {
            ++witnesses;
            CHECK(is_valid_zero_block(a, *w));
            CHECK(w->rows.size() + w->cols.size() > n);
            for (auto r : w->rows)
                for (auto s : w->cols) CHECK(a(r, s) == 0);
            CHECK(permanent(a) == 0);
        }
    }
    CHECK(witnesses > 50);
}
