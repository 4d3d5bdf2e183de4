#include <doctest.h>

#include "oracles.hpp"
#include "permlab/closed_forms.hpp"
#include "permlab/error.hpp"
#include "permlab/permanent.hpp"

using namespace permlab;

namespace {

// U and V straight from their definitions over brute-force matching counts.
std::pair<BigInt, BigInt> uv_brute(std::size_t n) {
    auto m = oracle::cycle_matchings_brute(n);
    BigInt u = 0, v = 0;
    for (std::size_t t = 0; t < m.size(); ++t) {
        u += m[t] * oracle::pow_int(2, n - 2 * t);
        v += m[t] * oracle::pow_int(4, n - 2 * t);
    }
    return {u, v};
}

}  // namespace

TEST_CASE("printed cycle seeds") {
    auto s3 = cycle_series(3);
    CHECK(s3.U == 14);
    CHECK(s3.V == 76);
    CHECK(s3.F == 64);
    auto s4 = cycle_series(4);
    CHECK(s4.U == 34);
    CHECK(s4.V == 322);
    CHECK(s4.F == 698);
    CHECK(cycle_uv_by_recurrence(3) == std::pair<BigInt, BigInt>{14, 76});
    CHECK(cycle_uv_by_recurrence(4) == std::pair<BigInt, BigInt>{34, 322});
}

TEST_CASE("n = 5 from one recurrence step") {
    // U_5 = 2*34 + 14, V_5 = 4*322 + 76
    auto s5 = cycle_series(5);
    CHECK(s5.U == 2 * 34 + 14);
    CHECK(s5.V == 4 * 322 + 76);
    CHECK(s5.U == 82);
    CHECK(s5.V == 1364);
}

TEST_CASE("matching counts match brute force") {
    for (std::size_t n = 3; n <= 14; ++n) {
        CHECK(cycle_matching_counts(n) == oracle::cycle_matchings_brute(n));
        CHECK(cycle_series(n).matchings == oracle::cycle_matchings_brute(n));
    }
}

TEST_CASE("U and V by definition and by recurrence") {
    for (std::size_t n = 3; n <= 14; ++n) {
        auto [u, v] = uv_brute(n);
        CHECK(cycle_series(n).U == u);
        CHECK(cycle_series(n).V == v);
    }
    for (std::size_t n = 3; n <= 40; ++n) {
        auto s = cycle_series(n);
        CHECK(cycle_uv_by_recurrence(n) == std::pair<BigInt, BigInt>{s.U, s.V});
        CHECK(s.F == s.U * s.U - s.V - 4 * s.U);
    }
}

TEST_CASE("F is nonnegative up to 200") {
    for (std::size_t n = 3; n <= 200; ++n) CHECK(cycle_series(n).F >= 0);
}

TEST_CASE("cycle Laplacian permanents against the engine") {
    CHECK(cycle_laplacian_permanents(3).per == 12);
    CHECK(cycle_laplacian_permanents(3).per_hadamard == 78);
    CHECK(cycle_laplacian_permanents(5).per == 80);
    CHECK(cycle_laplacian_permanents(5).per_hadamard == 1366);
    CHECK(cycle_laplacian_permanents(4).per == 36);
    CHECK(cycle_laplacian_permanents(4).per_hadamard == 324);
    for (std::size_t n = 3; n <= 16; ++n) {
        auto l = laplacian(cycle_graph(n));
        auto c = cycle_laplacian_permanents(n);
        CHECK(c.derived_even_case == (n % 2 == 0));
        CHECK(c.per == oracle::permanent_dp(l));
        CHECK(c.per_hadamard == oracle::permanent_dp(hadamard(l, l)));
    }
}

TEST_CASE("odd cycle gap") {
    CHECK(odd_cycle_gap(3) == 66);
    CHECK(odd_cycle_gap(3) == 12 * 12 - 78);
    CHECK(odd_cycle_gap(5) == 80 * 80 - 1366);
    CHECK(odd_cycle_gap(5) == 5034);
    for (std::size_t n = 3; n <= 25; n += 2) {
        CHECK(odd_cycle_gap(n) >= 2);
        CHECK(odd_cycle_gap(n) == cycle_series(n).F + 2);
    }
}

TEST_CASE("closed-form parameter errors") {
    CHECK_THROWS_AS(cycle_series(2), ParameterError);
    CHECK_THROWS_AS(cycle_matching_counts(2), ParameterError);
    CHECK_THROWS_AS(cycle_uv_by_recurrence(1), ParameterError);
    CHECK_THROWS_AS(cycle_laplacian_permanents(2), ParameterError);
    CHECK_THROWS_AS(odd_cycle_gap(4), ParameterError);
    CHECK_THROWS_AS(odd_cycle_gap(1), ParameterError);
    CHECK_THROWS_AS(clique_form(1, 1), ParameterError);
    CHECK_THROWS_AS(clique_form(3, 0), ParameterError);
    CHECK_THROWS_AS(clique_scalar_holds(4, 2), ParameterError);
    CHECK_THROWS_AS(clique_scalar_holds(1, 1), ParameterError);
}

TEST_CASE("clique forms") {
    auto a = clique_form(3, 3);
    CHECK(a.Q == -12);
    CHECK(a.P == 78);
    CHECK(a.per_M == 12);
    CHECK(a.per_MM == 78);
    auto b = clique_form(3, 2);
    CHECK(b.per_M == 5);
    CHECK(b.per_MM == 17);
    auto c = clique_form(4, 4);
    CHECK(c.per_M == 120);
    CHECK(c.per_MM == 7128);
}

TEST_CASE("clique forms match nI - J permanents") {
    for (std::size_t n = 2; n <= 10; ++n) {
        for (std::size_t s = 1; s <= n + 1; ++s) {
            auto m = oracle::clique_matrix(n, s);
            auto f = clique_form(n, s);
            CHECK(f.per_M == oracle::permanent_dp(m));
            CHECK(f.per_MM == oracle::permanent_dp(hadamard(m, m)));
        }
        auto l = laplacian(complete_graph(n));
        CHECK(clique_form(n, n).per_M == permanent(l));
        CHECK(clique_form(n, n - 1).per_MM == permanent(hadamard(delete_index(l, 0), delete_index(l, 0))));
    }
}

TEST_CASE("clique scalar inequality") {
    auto r = clique_scalar_holds(3, 3);
    CHECK(r.holds);
    CHECK(r.P == 78);
    CHECK(r.Q == -12);
    auto q = clique_scalar_holds(3, 2);
    CHECK(q.P == 17);
    CHECK(q.Q == 5);
    for (std::size_t n = 2; n <= 200; ++n) {
        for (std::size_t m : {n - 1, n}) {
            auto x = clique_scalar_holds(n, m);
            CHECK(x.holds);
            CHECK(x.holds == (x.P <= x.Q * x.Q));
            if (n <= 60) CHECK(x.holds == oracle::clique_scalar_rational(n, m));
        }
    }
}
