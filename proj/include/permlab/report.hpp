#pragma once

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "permlab/closed_forms.hpp"
#include "permlab/search.hpp"
#include "permlab/verify.hpp"

namespace permlab {

using Json = nlohmann::ordered_json;

/// Integers go out as decimal strings. Timing is left out unless asked for,
/// so that two runs of the same command produce identical bytes.
struct ReportOptions {
    bool timing = false;
};

Json to_json(const VerificationReport& r, const ReportOptions& opts = {});
Json to_json(const Instance& instance);
Json to_json(const SignProperty& s);
Json to_json(const TrialOutcome& t, const ReportOptions& opts = {});
Json to_json(const CampaignConfig& c);
Json to_json(const CampaignReport& r, const ReportOptions& opts = {});
Json to_json(const CoalescenceIdentity& c);
Json to_json(const HadamardCoalescenceIdentity& c);
Json to_json(const DiagMultilinearity& d);
Json to_json(const LiebBound& l);
Json to_json(const HypothesisBundle& b, const ReportOptions& opts = {});
Json to_json(const ClosureCertificate& c, const ReportOptions& opts = {});
Json to_json(const DiagonalExploration& d, const ReportOptions& opts = {});
Json to_json(const CoalescenceExploration& c, const ReportOptions& opts = {});

/// Column-oriented rows shared by the csv, table and json renderers.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

Table reports_table(std::span<const VerificationReport> reports, const ReportOptions& opts = {});

/// (n, U, V, F, per, per_hadamard, gap) per cycle length, with a Ryser column
/// for n <= ryser_max_n.
Table cycle_table(std::size_t max_n, std::size_t ryser_max_n, const PermanentOptions& options = {});
/// Both s = n-1 and s = n for each n in [2, max_n].
Table clique_table(std::size_t max_n, std::size_t ryser_max_n, const PermanentOptions& options = {});
/// P <= Q^2 for each n in [2, max_n] and m in {n-1, n}.
Table scalar_table(std::size_t max_n);

/// True when the table's "holds"/"agrees" columns contain no "false".
bool table_all_hold(const Table& t);

std::string render_csv(const Table& t);
std::string render_text(const Table& t);
Json render_json(const Table& t);

}  // namespace permlab
