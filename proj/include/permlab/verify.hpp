#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permlab/graph.hpp"
#include "permlab/matrix.hpp"
#include "permlab/permanent.hpp"

namespace permlab {

enum class Method { ryser, naive, closed_form };

std::string_view method_name(Method m);

/// Measurement of per(A o A) against per(A)^2 for one instance.
struct VerificationReport {
    std::string instance_id;
    std::size_t n = 0;
    BigInt per_A;
    BigInt per_AhadA;
    BigInt gap;  // per_A^2 - per_AhadA
    bool holds = false;
    Method method = Method::ryser;
    std::chrono::nanoseconds elapsed{0};
    std::string provenance;
};

/// Measures the inequality; never assumes it. `method` may be ryser or naive.
VerificationReport chollet_check(const ExactMatrix& a, const PermanentOptions& options = {},
                                 Method method = Method::ryser, std::string instance_id = {},
                                 std::string provenance = {});

/// chollet_check(laplacian(g)) with the graph's graph6 string as provenance
/// (when it fits the format).
VerificationReport verify_graph(const Graph& g, const PermanentOptions& options = {}, std::string instance_id = {});

/// The inequality for L_G and for its principal submatrix L_G(v).
struct HypothesisBundle {
    VerificationReport whole;
    VerificationReport minor;

    bool holds() const noexcept { return whole.holds && minor.holds; }
};

HypothesisBundle verify_hypothesis_bundle(const Graph& g, Vertex v, const PermanentOptions& options = {});

/// per(L_G) = per(L_1) per(L_2(v2)) + per(L_1(v1)) per(L_2) for G = G1 . G2.
struct CoalescenceIdentity {
    BigInt per_G;
    BigInt per_G1;
    BigInt per_G2;
    BigInt per_G1_minor;
    BigInt per_G2_minor;
    BigInt rhs;
    bool holds = false;
};

CoalescenceIdentity verify_coalescence_identity(const Graph& g1, Vertex v1, const Graph& g2, Vertex v2,
                                                const PermanentOptions& options = {});

/// per(H) = per(H1) per(H2(v2)) + per(H1(v1)) per(H2) + 2 d1 d2 per(H1(v1)) per(H2(v2))
/// with H = L_G o L_G, Hi = L_Gi o L_Gi, di = deg_Gi(vi).
struct HadamardCoalescenceIdentity {
    BigInt per_G;
    BigInt per_G1;
    BigInt per_G2;
    BigInt per_G1_minor;
    BigInt per_G2_minor;
    std::size_t d1 = 0;
    std::size_t d2 = 0;
    BigInt rhs;
    bool holds = false;
};

HadamardCoalescenceIdentity verify_hadamard_coalescence_identity(const Graph& g1, Vertex v1, const Graph& g2,
                                                                 Vertex v2, const PermanentOptions& options = {});

/// For A' = A + alpha E_ii:
///   per(A') = per(A) + alpha per(A(i))
///   per(A' o A') = per(A o A) + (2 a_ii alpha + alpha^2) per((A o A)(i))
struct DiagMultilinearity {
    BigInt per_A;
    BigInt per_A_minor;
    BigInt per_A_bumped;
    BigInt per_AA;
    BigInt per_AA_minor;
    BigInt per_AA_bumped;
    bool plain_holds = false;
    bool hadamard_holds = false;

    bool holds() const noexcept { return plain_holds && hadamard_holds; }
};

DiagMultilinearity verify_diag_multilinearity(const ExactMatrix& a, std::size_t i, const BigInt& alpha,
                                              const PermanentOptions& options = {});

/// per(A) == per(|A|) for symmetric Z-matrices with nonnegative diagonal and
/// bipartite support. Equality means no permutation term is negative.
struct SignProperty {
    BigInt per;
    BigInt per_abs;
    bool holds = false;
    /// Set when the term-by-term scan ran (n <= term_scan_max_n).
    std::optional<std::size_t> nonzero_terms;
    std::size_t negative_terms = 0;
};

/// Throws InputClassError outside the class. The term-by-term scan walks only
/// nonzero terms.
SignProperty verify_sign_property(const ExactMatrix& a, const PermanentOptions& options = {},
                                  std::size_t term_scan_max_n = 10);

/// per(A) >= a_ii per(A(i)). The caller vouches that A is PSD (Laplacian,
/// principal submatrix of one, or an integer Gram matrix).
struct LiebBound {
    BigInt per_A;
    BigInt a_ii;
    BigInt per_minor;
    bool holds = false;
};

LiebBound verify_lieb_bound(const ExactMatrix& a, std::size_t i, const PermanentOptions& options = {});

// ---------------------------------------------------------------------------
// Closure certificates.

enum class StepKind { coalesce, leaf, edge_join, diag_bump };

std::string_view step_kind_name(StepKind k);

/// One closure step applied to the graph built so far. `at` is a vertex of
/// the current graph (current labelling); `piece` and `piece_vertex` are
/// ignored for leaf steps.
struct ClosureStep {
    StepKind kind = StepKind::coalesce;
    Vertex at = 0;
    Graph piece;
    Vertex piece_vertex = 0;
};

struct Decomposition {
    Graph base;
    std::vector<ClosureStep> steps;
};

/// One inequality check recorded in a certificate.
struct HypothesisCheck {
    std::string label;
    BigInt per;
    BigInt per_hadamard;
    bool holds = false;
};

struct CertificateStep {
    StepKind kind = StepKind::coalesce;
    std::vector<Vertex> vertices;
    std::vector<HypothesisCheck> checks;
    /// The inequality for the graph produced by this step.
    std::optional<HypothesisCheck> result;
};

struct ClosureCertificate {
    std::vector<CertificateStep> steps;
    bool valid = false;
    std::string failure;
    std::optional<VerificationReport> final_report;
};

/// Rebuilds the graph from `decomposition`, checking every step's hypotheses
/// numerically. Stops at the first failing check (valid = false). Throws
/// StructuralError when the rebuilt graph differs from `g` as a labelled graph.
ClosureCertificate certify_block_graph(const Graph& g, const Decomposition& decomposition,
                                       const PermanentOptions& options = {});

/// Applies the steps without any checks.
Graph build_from_decomposition(const Decomposition& decomposition);

}  // namespace permlab
