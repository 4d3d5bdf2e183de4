#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "permlab/graph.hpp"
#include "permlab/matrix.hpp"
#include "permlab/permanent.hpp"
#include "permlab/verify.hpp"

namespace permlab {

enum class Generator {
    erdos_renyi,
    random_tree,
    random_unicyclic,
    random_block_graph,
    z_bipartite_matrix,
    integer_gram_psd,
};

std::string_view generator_name(Generator g);
/// Accepts the canonical names and the short CLI aliases (er, tree, unicyclic,
/// block, z-bipartite, gram).
std::optional<Generator> parse_generator(std::string_view name);

/// All knobs are integers; no floating point enters instance generation.
struct CampaignConfig {
    Generator generator = Generator::erdos_renyi;
    std::size_t n_min = 5;
    std::size_t n_max = 5;
    std::size_t trials = 100;
    std::uint64_t seed = 0;

    unsigned edge_percent = 50;  // erdos_renyi
    std::size_t max_block = 4;   // random_block_graph: clique sizes in [2, max_block]

    // z_bipartite_matrix entry ranges.
    std::int64_t diag_min = 0;
    std::int64_t diag_max = 9;
    std::int64_t offdiag_min = -5;
    std::int64_t offdiag_max = 0;

    // integer_gram_psd: B is n x rank (rank 0 means n) with entries in [gram_min, gram_max].
    std::size_t gram_rank = 0;
    std::int64_t gram_min = -3;
    std::int64_t gram_max = 3;

    /// Throws ParameterError on an inconsistent configuration.
    void validate() const;

    friend bool operator==(const CampaignConfig&, const CampaignConfig&) = default;
};

/// Key-value text ("key = value" per line, '#' comments). Keys are the field
/// names above plus `n` as a shorthand for "a" or "a..b".
CampaignConfig parse_campaign_config(std::string_view text);

/// Parses "a" or "a..b".
std::pair<std::size_t, std::size_t> parse_size_range(std::string_view text);

using Instance = std::variant<Graph, ExactMatrix>;

/// Deterministic in (config.seed, index). Throws ParameterError when
/// index >= config.trials or the config is invalid.
Instance generate(const CampaignConfig& config, std::size_t index);

/// Throws std::logic_error if `instance` is outside the generator's class.
void check_instance_class(Generator generator, const Instance& instance);

/// Every biconnected component is a clique.
bool is_block_graph(const Graph& g);

enum class TrialStatus { pass, violation, skipped };

struct TrialOutcome {
    std::size_t index = 0;
    TrialStatus status = TrialStatus::pass;
    Instance instance;
    std::optional<VerificationReport> report;
    std::optional<SignProperty> sign;
    std::string note;
};

struct CampaignReport {
    CampaignConfig config;
    std::size_t instances_run = 0;
    std::size_t passed = 0;
    std::vector<TrialOutcome> violations;
    std::vector<std::size_t> skipped;
    std::optional<BigInt> min_gap;
    /// Lower median of the measured gaps.
    std::optional<BigInt> median_gap;
    std::chrono::nanoseconds elapsed{0};
};

struct CampaignOptions {
    /// Trials evaluated concurrently. Reports do not depend on this value.
    unsigned jobs = 1;
    PermanentOptions permanent;
};

CampaignReport run_campaign(const CampaignConfig& config, const CampaignOptions& options = {});

/// Runs the verifier matching the generator on one instance.
TrialOutcome run_trial(const CampaignConfig& config, std::size_t index, const PermanentOptions& options = {});

// ---------------------------------------------------------------------------
// Exploratory probes for open questions. Their output is evidence only.

struct DiagonalProbe {
    std::vector<BigInt> diagonal;
    VerificationReport after;
};

struct DiagonalExploration {
    std::size_t trials = 0;
    VerificationReport base;
    /// Trials where the base satisfied the inequality but A + D did not.
    std::vector<DiagonalProbe> counterexamples;
    std::optional<BigInt> min_gap_after;
};

/// Adds random diagonals with entries in [0, max_add] to `a`.
DiagonalExploration explore_diagonal_additions(const ExactMatrix& a, std::size_t trials, std::uint64_t seed,
                                               std::uint64_t max_add, const PermanentOptions& options = {});

struct CoalescenceProbe {
    std::size_t trial = 0;
    Graph g1;
    Vertex v1 = 0;
    Graph g2;
    Vertex v2 = 0;
    HypothesisBundle bundle1;
    HypothesisBundle bundle2;
    VerificationReport result;
};

struct CoalescenceExploration {
    std::size_t trials = 0;
    /// Both whole-graph inequalities held but a minor inequality failed.
    std::vector<CoalescenceProbe> minor_hypothesis_failures;
    /// The coalesced graph violated the inequality.
    std::vector<CoalescenceProbe> conclusion_failures;
};

/// Random G(n, 1/2) pairs with n1, n2 in [2, max_n], glued at random vertices.
CoalescenceExploration explore_coalescence(std::size_t trials, std::uint64_t seed, std::size_t max_n,
                                           const PermanentOptions& options = {});

}  // namespace permlab
