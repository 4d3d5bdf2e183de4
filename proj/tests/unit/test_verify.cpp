#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "permlab/error.hpp"
#include "permlab/verify.hpp"

using namespace permlab;

namespace {

void check_report_invariants(const VerificationReport& r) {
    CHECK(r.gap == r.per_A * r.per_A - r.per_AhadA);
    CHECK(r.holds == (r.gap >= 0));
}

// The (U1, v, U2) expansions written out with the DP oracle.
BigInt coalescence_rhs(const Graph& g1, Vertex v1, const Graph& g2, Vertex v2, bool hadamard_side) {
    auto sq = [&](ExactMatrix m) { return hadamard_side ? hadamard(m, m) : m; };
    auto l1 = sq(laplacian(g1));
    auto l2 = sq(laplacian(g2));
    auto p1 = oracle::permanent_dp(l1), p2 = oracle::permanent_dp(l2);
    auto m1 = oracle::permanent_dp(delete_index(l1, v1)), m2 = oracle::permanent_dp(delete_index(l2, v2));
    BigInt rhs = p1 * m2 + m1 * p2;
    if (hadamard_side) rhs += 2 * BigInt(static_cast<unsigned long>(g1.degree(v1) * g2.degree(v2))) * m1 * m2;
    return rhs;
}

}  // namespace

TEST_CASE("chollet_check examples") {
    auto k3 = chollet_check(laplacian(complete_graph(3)));
    CHECK(k3.per_A == 12);
    CHECK(k3.per_AhadA == 78);
    CHECK(k3.gap == 66);
    CHECK(k3.holds);
    auto single = chollet_check(ExactMatrix(1));
    CHECK(single.per_A == 0);
    CHECK(single.per_AhadA == 0);
    CHECK(single.gap == 0);
    CHECK(single.holds);
    auto p3 = chollet_check(laplacian(path_graph(3)), {}, Method::naive);
    CHECK(p3.per_A == 4);
    CHECK(p3.per_AhadA == 6);
    CHECK(p3.gap == 10);
    CHECK(p3.method == Method::naive);
    CHECK_THROWS_AS(chollet_check(ExactMatrix(2), {}, Method::closed_form), ParameterError);

    // A matrix where the inequality fails is reported, not rejected.
    ExactMatrix bad{{1, 1}, {-1, 1}};  // per = 0, per(A o A) = 2
    auto r = chollet_check(bad);
    CHECK_FALSE(r.holds);
    CHECK(r.gap == -2);
}

TEST_CASE("verify_graph carries graph provenance") {
    auto r = verify_graph(cycle_graph(5), {}, "c5");
    CHECK(r.instance_id == "c5");
    CHECK(r.provenance == "graph6:Dhc");
    CHECK(r.n == 5);
    check_report_invariants(r);
}

TEST_CASE("covered families hold") {
    for (std::size_t n = 3; n <= 15; ++n) CHECK(verify_graph(cycle_graph(n)).holds);
    for (std::size_t n = 2; n <= 10; ++n) CHECK(verify_graph(complete_graph(n)).holds);
    for (std::size_t a = 1; a <= 9; ++a)
        for (std::size_t b = 1; a + b <= 10; ++b) CHECK(verify_graph(complete_bipartite_graph(a, b)).holds);
    for (std::size_t k = 1; k <= 5; ++k)
        CHECK(verify_graph(make_family(Family::friendship, std::vector<std::size_t>{k})).holds);
    for (std::size_t m = 2; m <= 6; ++m)
        for (std::size_t k = 1; 1 + k * (m - 1) <= 12; ++k)
            CHECK(verify_graph(make_family(Family::windmill, std::vector<std::size_t>{m, k})).holds);
    CHECK(verify_graph(make_family(Family::bouquet_of_cycles, std::vector<std::size_t>{3, 4, 5})).holds);
    CHECK(verify_graph(make_family(Family::bouquet_of_cycles, std::vector<std::size_t>{6, 7})).holds);
}

TEST_CASE("bipartite graphs and their principal submatrices") {
    std::mt19937_64 rng(211);
    for (int t = 0; t < 60; ++t) {
        auto g = oracle::random_tree(rng, oracle::pick(rng, 1, 9));
        auto l = laplacian(g);
        CHECK(verify_graph(g).holds);
        // every principal submatrix of size <= 9
        const auto n = l.dim();
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); mask += 1 + (rng() % 5)) {
            std::vector<std::size_t> keep;
            for (std::size_t i = 0; i < n; ++i)
                if (mask >> i & 1) keep.push_back(i);
            auto r = chollet_check(principal_submatrix(l, keep));
            check_report_invariants(r);
            CHECK(r.holds);
        }
    }
}

TEST_CASE("hypothesis bundles") {
    auto k3 = verify_hypothesis_bundle(complete_graph(3), 1);
    CHECK(k3.minor.per_A == 5);
    CHECK(k3.minor.per_AhadA == 17);
    CHECK(k3.holds());
    auto k2 = verify_hypothesis_bundle(complete_graph(2), 0);
    CHECK(k2.minor.per_A == 1);
    CHECK(k2.minor.per_AhadA == 1);
    CHECK(k2.holds());
    CHECK(verify_hypothesis_bundle(cycle_graph(4), 2).holds());
    CHECK_THROWS_AS(verify_hypothesis_bundle(cycle_graph(4), 4), ParameterError);
}

TEST_CASE("coalescence identity examples") {
    auto p = verify_coalescence_identity(complete_graph(2), 1, complete_graph(2), 0);
    CHECK(p.per_G == 4);
    CHECK(p.rhs == 2 * 1 + 1 * 2);
    CHECK(p.holds);
    auto bow = verify_coalescence_identity(complete_graph(3), 0, complete_graph(3), 0);
    CHECK(bow.per_G == 120);
    CHECK(bow.rhs == 12 * 5 + 5 * 12);
    CHECK(bow.holds);
    // Gluing an isolated vertex changes nothing.
    auto iso = verify_coalescence_identity(Graph(1), 0, cycle_graph(5), 2);
    CHECK(iso.per_G == 80);
    CHECK(iso.holds);
    CHECK_THROWS_AS(verify_coalescence_identity(Graph(1), 1, cycle_graph(5), 2), ParameterError);

    auto hp = verify_hadamard_coalescence_identity(complete_graph(2), 1, complete_graph(2), 0);
    CHECK(hp.per_G == 6);
    CHECK(hp.rhs == 2 * 1 + 1 * 2 + 2 * 1 * 1 * 1 * 1);
    CHECK(hp.holds);
    auto hb = verify_hadamard_coalescence_identity(complete_graph(3), 0, complete_graph(3), 0);
    CHECK(hb.per_G == 4964);
    CHECK(hb.rhs == 78 * 17 + 17 * 78 + 2 * 2 * 2 * 17 * 17);
    CHECK(hb.d1 == 2);
    CHECK(hb.d2 == 2);
}

TEST_CASE("coalescence identities on random pairs") {
    std::mt19937_64 rng(223);
    for (int t = 0; t < 80; ++t) {
        Graph g1 = t % 2 ? oracle::random_tree(rng, oracle::pick(rng, 1, 6)) : oracle::random_graph(rng, oracle::pick(rng, 1, 6));
        Graph g2 = t % 3 ? oracle::random_tree(rng, oracle::pick(rng, 1, 6)) : oracle::random_graph(rng, oracle::pick(rng, 1, 6));
        Vertex v1 = oracle::pick(rng, 0, g1.order() - 1), v2 = oracle::pick(rng, 0, g2.order() - 1);
        auto plain = verify_coalescence_identity(g1, v1, g2, v2);
        auto had = verify_hadamard_coalescence_identity(g1, v1, g2, v2);
        CHECK(plain.holds);
        CHECK(had.holds);
        auto glued = laplacian(coalesce(g1, v1, g2, v2).graph);
        CHECK(plain.per_G == oracle::permanent_dp(glued));
        CHECK(had.per_G == oracle::permanent_dp(hadamard(glued, glued)));
        CHECK(plain.rhs == coalescence_rhs(g1, v1, g2, v2, false));
        CHECK(had.rhs == coalescence_rhs(g1, v1, g2, v2, true));
    }
}

TEST_CASE("diagonal multilinearity") {
    auto k2 = verify_diag_multilinearity(laplacian(complete_graph(2)), 0, 1);
    CHECK(k2.per_A_bumped == 3);
    CHECK(k2.per_A == 2);
    CHECK(k2.per_A_minor == 1);
    CHECK(k2.holds());
    auto k3 = verify_diag_multilinearity(laplacian(complete_graph(3)), 0, 2);
    CHECK(k3.per_A_bumped == 22);
    CHECK(k3.holds());
    auto zero = verify_diag_multilinearity(laplacian(cycle_graph(5)), 3, 0);
    CHECK(zero.per_A_bumped == zero.per_A);
    CHECK(zero.per_AA_bumped == zero.per_AA);
    CHECK(zero.holds());
    CHECK_THROWS_AS(verify_diag_multilinearity(laplacian(complete_graph(2)), 2, 1), ParameterError);
    CHECK_THROWS_AS(verify_diag_multilinearity(laplacian(complete_graph(2)), 0, -1), ParameterError);

    std::mt19937_64 rng(227);
    for (int t = 0; t < 60; ++t) {
        const auto n = oracle::pick(rng, 1, 7);
        auto a = oracle::random_symmetric(rng, n, -4, 4);
        const auto i = oracle::pick(rng, 0, n - 1);
        const long alpha = static_cast<long>(oracle::pick(rng, 0, 5));
        auto d = verify_diag_multilinearity(a, i, alpha);
        CHECK(d.holds());
        auto bumped = a;
        bumped(i, i) += alpha;
        CHECK(d.per_A_bumped == oracle::permanent_dp(bumped));
        CHECK(d.per_AA_bumped == oracle::permanent_dp(hadamard(bumped, bumped)));
    }
}

TEST_CASE("sign property") {
    auto c4 = verify_sign_property(laplacian(cycle_graph(4)));
    CHECK(c4.per == 36);
    CHECK(c4.per_abs == 36);
    CHECK(c4.holds);
    CHECK(c4.negative_terms == 0);
    REQUIRE(c4.nonzero_terms);
    auto p3 = verify_sign_property(laplacian(path_graph(3)));
    CHECK(p3.per == 4);
    CHECK(p3.per_abs == 4);
    CHECK(p3.holds);

    CHECK_THROWS_AS(verify_sign_property(laplacian(cycle_graph(3))), InputClassError);
    CHECK_THROWS_AS(verify_sign_property(ExactMatrix{{1, 2}, {2, 1}}), InputClassError);
    CHECK_THROWS_AS(verify_sign_property(ExactMatrix{{-1, 0}, {0, 1}}), InputClassError);
    CHECK_THROWS_AS(verify_sign_property(ExactMatrix{{1, -1}, {0, 1}}), InputClassError);
}

TEST_CASE("sign property terms are all nonnegative") {
    std::mt19937_64 rng(229);
    for (int t = 0; t < 60; ++t) {
        const auto n = oracle::pick(rng, 1, 8);
        std::vector<int> side(n);
        for (auto& s : side) s = static_cast<int>(rng() & 1);
        ExactMatrix a(n);
        for (std::size_t i = 0; i < n; ++i) {
            a(i, i) = static_cast<long>(rng() % 10);
            for (std::size_t j = i + 1; j < n; ++j)
                if (side[i] != side[j]) a(i, j) = a(j, i) = -static_cast<long>(rng() % 6);
        }
        auto s = verify_sign_property(a);
        CHECK(s.holds);
        CHECK(s.negative_terms == 0);
        CHECK(s.per == oracle::permanent_dp(a));
        CHECK(s.per_abs == oracle::permanent_dp(entrywise_abs(a)));
        std::size_t nonzero = 0;
        for (const auto& term : permutation_terms(a)) {
            CHECK(term.value >= 0);
            nonzero += term.value != 0;
        }
        CHECK(s.nonzero_terms == nonzero);
    }
}

TEST_CASE("Lieb bound") {
    auto k3 = verify_lieb_bound(laplacian(complete_graph(3)), 1);
    CHECK(k3.per_A == 12);
    CHECK(k3.a_ii == 2);
    CHECK(k3.per_minor == 5);
    CHECK(k3.holds);
    auto k2 = verify_lieb_bound(laplacian(complete_graph(2)), 0);
    CHECK(k2.per_A == 2);
    CHECK(k2.holds);
    CHECK_THROWS_AS(verify_lieb_bound(laplacian(complete_graph(2)), 2), ParameterError);

    // per(L_Gi) >= d_i per(L_Gi(v_i)) on random graphs
    std::mt19937_64 rng(233);
    for (int t = 0; t < 100; ++t) {
        auto g = oracle::random_graph(rng, oracle::pick(rng, 1, 8));
        auto v = oracle::pick(rng, 0, g.order() - 1);
        auto r = verify_lieb_bound(laplacian(g), v);
        CHECK(r.holds);
        CHECK(r.a_ii == static_cast<unsigned long>(g.degree(v)));
    }
}

TEST_CASE("block graph certificates") {
    SUBCASE("friendship as K3 . K3") {
        Decomposition d{complete_graph(3), {{StepKind::coalesce, 0, complete_graph(3), 0}}};
        auto f2 = build_from_decomposition(d);
        CHECK(f2.order() == 5);
        CHECK(f2.size() == 6);
        auto cert = certify_block_graph(f2, d);
        CHECK(cert.valid);
        REQUIRE(cert.steps.size() == 1);
        CHECK(cert.steps[0].checks.size() == 4);
        for (const auto& c : cert.steps[0].checks) CHECK(c.holds);
        CHECK(cert.steps[0].checks[1].per == 5);
        CHECK(cert.steps[0].checks[1].per_hadamard == 17);
        REQUIRE(cert.final_report);
        CHECK(cert.final_report->per_A == 120);
        CHECK(cert.final_report->per_AhadA == 4964);
    }
    SUBCASE("C5 with a pendant path") {
        Decomposition d{cycle_graph(5), {{StepKind::leaf, 0, {}, 0}, {StepKind::leaf, 5, {}, 0}}};
        auto g = build_from_decomposition(d);
        CHECK(g.order() == 7);
        CHECK(g.size() == 7);
        auto cert = certify_block_graph(g, d);
        CHECK(cert.valid);
        CHECK(cert.steps.size() == 2);
    }
    SUBCASE("dumbbell by a single-edge join") {
        Decomposition d{cycle_graph(3), {{StepKind::edge_join, 1, cycle_graph(3), 0}}};
        auto g = build_from_decomposition(d);
        CHECK(g == edge_join(cycle_graph(3), 1, cycle_graph(3), 0));
        auto cert = certify_block_graph(g, d);
        CHECK(cert.valid);
        REQUIRE(cert.steps.size() == 2);
        CHECK(cert.steps[0].kind == StepKind::diag_bump);
        CHECK(cert.steps[1].kind == StepKind::edge_join);
        REQUIRE(cert.steps[0].result);
        // L_G1 + E_v1v1 for G1 = C3
        auto bumped = add_to_diagonal(laplacian(cycle_graph(3)), 1, 1);
        CHECK(cert.steps[0].result->per == oracle::permanent_dp(bumped));
    }
    SUBCASE("mismatched decomposition") {
        Decomposition d{cycle_graph(3), {{StepKind::coalesce, 0, complete_graph(3), 0}}};
        CHECK_THROWS_AS(certify_block_graph(cycle_graph(5), d), StructuralError);
        Decomposition bump{cycle_graph(3), {{StepKind::diag_bump, 0, {}, 0}}};
        CHECK_THROWS_AS(build_from_decomposition(bump), ParameterError);
    }
}
