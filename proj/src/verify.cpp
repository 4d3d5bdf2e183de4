#include "permlab/verify.hpp"

#include "permlab/error.hpp"

namespace permlab {

std::string_view method_name(Method m) {
    switch (m) {
        case Method::ryser: return "ryser";
        case Method::naive: return "naive";
        case Method::closed_form: return "closed_form";
    }
    return "unknown";
}

std::string_view step_kind_name(StepKind k) {
    switch (k) {
        case StepKind::coalesce: return "coalesce";
        case StepKind::leaf: return "leaf";
        case StepKind::edge_join: return "edge_join";
        case StepKind::diag_bump: return "diag_bump";
    }
    return "unknown";
}

VerificationReport chollet_check(const ExactMatrix& a, const PermanentOptions& options, Method method,
                                 std::string instance_id, std::string provenance) {
    if (method == Method::closed_form) {
        throw ParameterError("chollet_check: closed_form reports are produced by the closed-form tables");
    }
    const auto start = std::chrono::steady_clock::now();
    const auto aa = hadamard(a, a);
    VerificationReport r;
    r.instance_id = std::move(instance_id);
    r.provenance = std::move(provenance);
    r.n = a.dim();
    r.method = method;
    if (method == Method::naive) {
        r.per_A = permanent_naive(a);
        r.per_AhadA = permanent_naive(aa);
    } else {
        r.per_A = permanent(a, options);
        r.per_AhadA = permanent(aa, options);
    }
    r.gap = r.per_A * r.per_A - r.per_AhadA;
    r.holds = sgn(r.gap) >= 0;
    r.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
    return r;
}

VerificationReport verify_graph(const Graph& g, const PermanentOptions& options, std::string instance_id) {
    std::string provenance = g.order() <= 62 ? "graph6:" + to_graph6(g) : "graph on " + std::to_string(g.order()) + " vertices";
    return chollet_check(laplacian(g), options, Method::ryser, std::move(instance_id), std::move(provenance));
}

HypothesisBundle verify_hypothesis_bundle(const Graph& g, Vertex v, const PermanentOptions& options) {
    if (v >= g.order()) throw ParameterError("verify_hypothesis_bundle: vertex out of range");
    const auto l = laplacian(g);
    HypothesisBundle b;
    b.whole = chollet_check(l, options, Method::ryser, {}, "L_G");
    b.minor = chollet_check(delete_index(l, v), options, Method::ryser, {}, "L_G(" + std::to_string(v) + ")");
    return b;
}

CoalescenceIdentity verify_coalescence_identity(const Graph& g1, Vertex v1, const Graph& g2, Vertex v2,
                                                const PermanentOptions& options) {
    const auto c = coalesce(g1, v1, g2, v2);
    const auto l1 = laplacian(g1);
    const auto l2 = laplacian(g2);
    CoalescenceIdentity r;
    r.per_G = permanent(laplacian(c.graph), options);
    r.per_G1 = permanent(l1, options);
    r.per_G2 = permanent(l2, options);
    r.per_G1_minor = permanent(delete_index(l1, v1), options);
    r.per_G2_minor = permanent(delete_index(l2, v2), options);
    r.rhs = r.per_G1 * r.per_G2_minor + r.per_G1_minor * r.per_G2;
    r.holds = r.per_G == r.rhs;
    return r;
}

HadamardCoalescenceIdentity verify_hadamard_coalescence_identity(const Graph& g1, Vertex v1, const Graph& g2,
                                                                 Vertex v2, const PermanentOptions& options) {
    const auto c = coalesce(g1, v1, g2, v2);
    auto sq = [](const ExactMatrix& m) { return hadamard(m, m); };
    const auto h1 = sq(laplacian(g1));
    const auto h2 = sq(laplacian(g2));
    HadamardCoalescenceIdentity r;
    r.d1 = g1.degree(v1);
    r.d2 = g2.degree(v2);
    r.per_G = permanent(sq(laplacian(c.graph)), options);
    r.per_G1 = permanent(h1, options);
    r.per_G2 = permanent(h2, options);
    r.per_G1_minor = permanent(delete_index(h1, v1), options);
    r.per_G2_minor = permanent(delete_index(h2, v2), options);
    const BigInt cross = BigInt(static_cast<unsigned long>(2 * r.d1 * r.d2));
    r.rhs = r.per_G1 * r.per_G2_minor + r.per_G1_minor * r.per_G2 + cross * r.per_G1_minor * r.per_G2_minor;
    r.holds = r.per_G == r.rhs;
    return r;
}

DiagMultilinearity verify_diag_multilinearity(const ExactMatrix& a, std::size_t i, const BigInt& alpha,
                                              const PermanentOptions& options) {
    if (i >= a.dim()) throw ParameterError("verify_diag_multilinearity: index out of range");
    if (sgn(alpha) < 0) throw ParameterError("verify_diag_multilinearity: alpha must be nonnegative");
    const auto bumped = add_to_diagonal(a, i, alpha);
    const auto aa = hadamard(a, a);
    DiagMultilinearity r;
    r.per_A = permanent(a, options);
    r.per_A_minor = permanent(delete_index(a, i), options);
    r.per_A_bumped = permanent(bumped, options);
    r.per_AA = permanent(aa, options);
    r.per_AA_minor = permanent(delete_index(aa, i), options);
    r.per_AA_bumped = permanent(hadamard(bumped, bumped), options);
    r.plain_holds = r.per_A_bumped == r.per_A + alpha * r.per_A_minor;
    const BigInt weight = 2 * a(i, i) * alpha + alpha * alpha;
    r.hadamard_holds = r.per_AA_bumped == r.per_AA + weight * r.per_AA_minor;
    return r;
}

SignProperty verify_sign_property(const ExactMatrix& a, const PermanentOptions& options,
                                  std::size_t term_scan_max_n) {
    const auto profile = z_profile(a);
    if (!profile.bipartite_sign_class()) {
        std::string why;
        if (!profile.is_symmetric) why += " not symmetric;";
        if (!profile.diag_nonneg) why += " negative diagonal entry;";
        if (!profile.offdiag_nonpos) why += " positive off-diagonal entry;";
        if (profile.is_symmetric && profile.diag_nonneg && profile.offdiag_nonpos) why += " support graph is not bipartite;";
        throw InputClassError("sign property is only claimed for symmetric Z-matrices with nonnegative diagonal "
                              "and bipartite support:" + why);
    }
    SignProperty r;
    r.per = permanent(a, options);
    r.per_abs = permanent(entrywise_abs(a), options);
    r.holds = r.per == r.per_abs;
    if (a.dim() <= std::min(term_scan_max_n, kNaiveMaxN)) {
        std::size_t count = 0;
        BigInt sum = 0;
        for (const auto& term : permutation_terms(a, /*nonzero_only=*/true)) {
            ++count;
            sum += term.value;
            if (sgn(term.value) < 0) ++r.negative_terms;
        }
        r.nonzero_terms = count;
        r.holds = r.holds && r.negative_terms == 0 && sum == r.per;
    }
    return r;
}

LiebBound verify_lieb_bound(const ExactMatrix& a, std::size_t i, const PermanentOptions& options) {
    if (i >= a.dim()) throw ParameterError("verify_lieb_bound: index out of range");
    LiebBound r;
    r.per_A = permanent(a, options);
    r.a_ii = a(i, i);
    r.per_minor = permanent(delete_index(a, i), options);
    r.holds = r.per_A >= r.a_ii * r.per_minor;
    return r;
}

// ---------------------------------------------------------------------------

namespace {

HypothesisCheck as_check(std::string label, const VerificationReport& r) {
    return HypothesisCheck{std::move(label), r.per_A, r.per_AhadA, r.holds};
}

Graph apply_step(const Graph& current, const ClosureStep& step) {
    switch (step.kind) {
        case StepKind::coalesce: return coalesce(current, step.at, step.piece, step.piece_vertex).graph;
        case StepKind::leaf: return attach_leaf(current, step.at);
        case StepKind::edge_join: return edge_join(current, step.at, step.piece, step.piece_vertex);
        case StepKind::diag_bump: break;
    }
    throw ParameterError("diag_bump is recorded inside edge_join certificates and is not a graph step");
}

// Records the whole/minor pair for (g, v) under `name`; false if either fails.
bool record_bundle(CertificateStep& step, const std::string& name, const Graph& g, Vertex v,
                   const PermanentOptions& options) {
    auto b = verify_hypothesis_bundle(g, v, options);
    step.checks.push_back(as_check("per(L o L) <= per(L)^2 for " + name, b.whole));
    step.checks.push_back(as_check("per(L(v) o L(v)) <= per(L(v))^2 for " + name + " at v=" + std::to_string(v), b.minor));
    return b.holds();
}

std::string first_failure(const CertificateStep& step) {
    for (const auto& c : step.checks)
        if (!c.holds) return std::string(step_kind_name(step.kind)) + ": hypothesis failed: " + c.label;
    if (step.result && !step.result->holds) {
        return std::string(step_kind_name(step.kind)) + ": conclusion failed: " + step.result->label;
    }
    return {};
}

}  // namespace

Graph build_from_decomposition(const Decomposition& decomposition) {
    Graph current = decomposition.base;
    for (const auto& step : decomposition.steps) current = apply_step(current, step);
    return current;
}

ClosureCertificate certify_block_graph(const Graph& g, const Decomposition& decomposition,
                                       const PermanentOptions& options) {
    if (build_from_decomposition(decomposition) != g) {
        throw StructuralError("certify_block_graph: decomposition does not rebuild the given graph");
    }
    ClosureCertificate cert;
    Graph current = decomposition.base;

    auto fail_if_needed = [&cert](const CertificateStep& step) {
        cert.steps.push_back(step);
        auto why = first_failure(step);
        if (why.empty()) return false;
        cert.failure = std::move(why);
        return true;
    };

    for (std::size_t k = 0; k < decomposition.steps.size(); ++k) {
        const auto& s = decomposition.steps[k];
        const std::string tag = "step " + std::to_string(k);
        if (s.kind == StepKind::edge_join) {
            // Route: H = G1 + leaf at v1 (so L_H(leaf) = L_G1 + E_v1v1), then coalesce (H, leaf) with (G2, v2).
            CertificateStep bump;
            bump.kind = StepKind::diag_bump;
            bump.vertices = {s.at};
            if (!record_bundle(bump, tag + " G1", current, s.at, options)) {
                fail_if_needed(bump);
                return cert;
            }
            const auto h = coalesce(current, s.at, complete_graph(2), 0);
            const Vertex leaf = h.graph.order() - 1;
            const auto lh_minor = delete_index(laplacian(h.graph), leaf);
            const auto expected = permute_symmetric(add_to_diagonal(laplacian(current), s.at, 1), h.map1);
            if (lh_minor != expected) {
                throw std::logic_error("certify_block_graph: L_H(leaf) differs from L_G1 + E_v1v1");
            }
            bump.result = as_check(tag + " L_G1 + E_v1v1", chollet_check(lh_minor, options));
            if (fail_if_needed(bump)) return cert;

            CertificateStep join;
            join.kind = StepKind::edge_join;
            join.vertices = {s.at, s.piece_vertex};
            auto hwhole = verify_graph(h.graph, options);
            join.checks.push_back(as_check("per(L o L) <= per(L)^2 for " + tag + " H = G1 + leaf", hwhole));
            join.checks.push_back(*bump.result);
            bool ok = hwhole.holds && bump.result->holds;
            ok = record_bundle(join, tag + " G2", s.piece, s.piece_vertex, options) && ok;
            if (!ok) {
                fail_if_needed(join);
                return cert;
            }
            current = apply_step(current, s);
            join.result = as_check(tag + " result", verify_graph(current, options));
            if (fail_if_needed(join)) return cert;
            continue;
        }

        CertificateStep step;
        step.kind = s.kind;
        bool ok = false;
        if (s.kind == StepKind::coalesce) {
            step.vertices = {s.at, s.piece_vertex};
            ok = record_bundle(step, tag + " G1", current, s.at, options);
            ok = ok && record_bundle(step, tag + " G2", s.piece, s.piece_vertex, options);
        } else if (s.kind == StepKind::leaf) {
            step.vertices = {s.at};
            ok = record_bundle(step, tag + " G", current, s.at, options);
            ok = ok && record_bundle(step, tag + " K2", complete_graph(2), 0, options);
        } else {
            throw ParameterError("diag_bump is recorded inside edge_join certificates and is not a graph step");
        }
        if (!ok) {
            fail_if_needed(step);
            return cert;
        }
        current = apply_step(current, s);
        step.result = as_check(tag + " result", verify_graph(current, options));
        if (fail_if_needed(step)) return cert;
    }

    cert.final_report = verify_graph(current, options);
    cert.valid = cert.final_report->holds;
    if (!cert.valid) cert.failure = "final graph violates the inequality";
    return cert;
}

}  // namespace permlab
