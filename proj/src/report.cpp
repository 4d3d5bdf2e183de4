#include "permlab/report.hpp"

#include <algorithm>
#include <sstream>

namespace permlab {

namespace {

std::string dec(const BigInt& x) { return to_decimal(x); }

Json optional_dec(const std::optional<BigInt>& x) { return x ? Json(dec(*x)) : Json(nullptr); }

Json edges_json(const Graph& g) {
    Json out = Json::array();
    for (const auto& e : g.edges()) out.push_back({e.u, e.v});
    return out;
}

Json check_json(const HypothesisCheck& c) {
    Json j;
    j["label"] = c.label;
    j["per"] = dec(c.per);
    j["per_hadamard"] = dec(c.per_hadamard);
    j["holds"] = c.holds;
    return j;
}

const char* status_name(TrialStatus s) {
    switch (s) {
        case TrialStatus::pass: return "pass";
        case TrialStatus::violation: return "violation";
        case TrialStatus::skipped: return "skipped";
    }
    return "unknown";
}

}  // namespace

Json to_json(const VerificationReport& r, const ReportOptions& opts) {
    Json j;
    j["instance_id"] = r.instance_id;
    j["n"] = r.n;
    j["per_A"] = dec(r.per_A);
    j["per_AhadA"] = dec(r.per_AhadA);
    j["gap"] = dec(r.gap);
    j["holds"] = r.holds;
    j["method"] = std::string(method_name(r.method));
    j["provenance"] = r.provenance;
    if (opts.timing) j["elapsed_ns"] = r.elapsed.count();
    return j;
}

Json to_json(const Instance& instance) {
    Json j;
    if (const auto* g = std::get_if<Graph>(&instance)) {
        j["kind"] = "graph";
        j["n"] = g->order();
        if (g->order() <= 62) j["graph6"] = to_graph6(*g);
        j["edges"] = edges_json(*g);
    } else {
        const auto& a = std::get<ExactMatrix>(instance);
        j["kind"] = "matrix";
        j["n"] = a.dim();
        Json rows = Json::array();
        for (std::size_t i = 0; i < a.dim(); ++i) {
            Json row = Json::array();
            for (std::size_t k = 0; k < a.dim(); ++k) row.push_back(dec(a(i, k)));
            rows.push_back(std::move(row));
        }
        j["rows"] = std::move(rows);
    }
    return j;
}

Json to_json(const SignProperty& s) {
    Json j;
    j["per"] = dec(s.per);
    j["per_abs"] = dec(s.per_abs);
    j["holds"] = s.holds;
    j["nonzero_terms"] = s.nonzero_terms ? Json(*s.nonzero_terms) : Json(nullptr);
    j["negative_terms"] = s.negative_terms;
    return j;
}

Json to_json(const TrialOutcome& t, const ReportOptions& opts) {
    Json j;
    j["index"] = t.index;
    j["status"] = status_name(t.status);
    j["instance"] = to_json(t.instance);
    if (t.report) j["report"] = to_json(*t.report, opts);
    if (t.sign) j["sign_property"] = to_json(*t.sign);
    if (!t.note.empty()) j["note"] = t.note;
    return j;
}

Json to_json(const CampaignConfig& c) {
    Json j;
    j["generator"] = std::string(generator_name(c.generator));
    j["n_min"] = c.n_min;
    j["n_max"] = c.n_max;
    j["trials"] = c.trials;
    j["seed"] = c.seed;
    switch (c.generator) {
        case Generator::erdos_renyi: j["edge_percent"] = c.edge_percent; break;
        case Generator::random_block_graph: j["max_block"] = c.max_block; break;
        case Generator::z_bipartite_matrix:
            j["diag_min"] = c.diag_min;
            j["diag_max"] = c.diag_max;
            j["offdiag_min"] = c.offdiag_min;
            j["offdiag_max"] = c.offdiag_max;
            break;
        case Generator::integer_gram_psd:
            j["gram_rank"] = c.gram_rank;
            j["gram_min"] = c.gram_min;
            j["gram_max"] = c.gram_max;
            break;
        default: break;
    }
    return j;
}

Json to_json(const CampaignReport& r, const ReportOptions& opts) {
    Json j;
    j["config"] = to_json(r.config);
    j["instances_run"] = r.instances_run;
    j["passed"] = r.passed;
    j["violation_count"] = r.violations.size();
    Json v = Json::array();
    for (const auto& t : r.violations) v.push_back(to_json(t, opts));
    j["violations"] = std::move(v);
    j["skipped"] = r.skipped;
    j["min_gap"] = optional_dec(r.min_gap);
    j["median_gap"] = optional_dec(r.median_gap);
    if (opts.timing) j["elapsed_ns"] = r.elapsed.count();
    return j;
}

Json to_json(const CoalescenceIdentity& c) {
    Json j;
    j["identity"] = "coalesce";
    j["per_G"] = dec(c.per_G);
    j["per_G1"] = dec(c.per_G1);
    j["per_G2"] = dec(c.per_G2);
    j["per_G1_minor"] = dec(c.per_G1_minor);
    j["per_G2_minor"] = dec(c.per_G2_minor);
    j["rhs"] = dec(c.rhs);
    j["holds"] = c.holds;
    return j;
}

Json to_json(const HadamardCoalescenceIdentity& c) {
    Json j;
    j["identity"] = "coalesce-hadamard";
    j["per_G"] = dec(c.per_G);
    j["per_G1"] = dec(c.per_G1);
    j["per_G2"] = dec(c.per_G2);
    j["per_G1_minor"] = dec(c.per_G1_minor);
    j["per_G2_minor"] = dec(c.per_G2_minor);
    j["d1"] = c.d1;
    j["d2"] = c.d2;
    j["rhs"] = dec(c.rhs);
    j["holds"] = c.holds;
    return j;
}

Json to_json(const DiagMultilinearity& d) {
    Json j;
    j["identity"] = "diag";
    j["per_A"] = dec(d.per_A);
    j["per_A_minor"] = dec(d.per_A_minor);
    j["per_A_bumped"] = dec(d.per_A_bumped);
    j["per_AA"] = dec(d.per_AA);
    j["per_AA_minor"] = dec(d.per_AA_minor);
    j["per_AA_bumped"] = dec(d.per_AA_bumped);
    j["plain_holds"] = d.plain_holds;
    j["hadamard_holds"] = d.hadamard_holds;
    j["holds"] = d.holds();
    return j;
}

Json to_json(const LiebBound& l) {
    Json j;
    j["identity"] = "lieb";
    j["per_A"] = dec(l.per_A);
    j["a_ii"] = dec(l.a_ii);
    j["per_minor"] = dec(l.per_minor);
    j["holds"] = l.holds;
    return j;
}

Json to_json(const HypothesisBundle& b, const ReportOptions& opts) {
    Json j;
    j["whole"] = to_json(b.whole, opts);
    j["minor"] = to_json(b.minor, opts);
    j["holds"] = b.holds();
    return j;
}

Json to_json(const ClosureCertificate& c, const ReportOptions& opts) {
    Json j;
    j["valid"] = c.valid;
    if (!c.failure.empty()) j["failure"] = c.failure;
    Json steps = Json::array();
    for (const auto& s : c.steps) {
        Json sj;
        sj["kind"] = std::string(step_kind_name(s.kind));
        sj["vertices"] = s.vertices;
        Json checks = Json::array();
        for (const auto& h : s.checks) checks.push_back(check_json(h));
        sj["checks"] = std::move(checks);
        sj["result"] = s.result ? check_json(*s.result) : Json(nullptr);
        steps.push_back(std::move(sj));
    }
    j["steps"] = std::move(steps);
    j["final"] = c.final_report ? to_json(*c.final_report, opts) : Json(nullptr);
    return j;
}

Json to_json(const DiagonalExploration& d, const ReportOptions& opts) {
    Json j;
    j["exploratory"] = true;
    j["trials"] = d.trials;
    j["base"] = to_json(d.base, opts);
    j["min_gap_after"] = optional_dec(d.min_gap_after);
    Json ce = Json::array();
    for (const auto& p : d.counterexamples) {
        Json pj;
        Json diag = Json::array();
        for (const auto& x : p.diagonal) diag.push_back(dec(x));
        pj["diagonal"] = std::move(diag);
        pj["after"] = to_json(p.after, opts);
        ce.push_back(std::move(pj));
    }
    j["counterexamples"] = std::move(ce);
    return j;
}

Json to_json(const CoalescenceExploration& c, const ReportOptions& opts) {
    auto probe = [&](const CoalescenceProbe& p) {
        Json pj;
        pj["trial"] = p.trial;
        pj["g1"] = to_json(Instance{p.g1});
        pj["v1"] = p.v1;
        pj["g2"] = to_json(Instance{p.g2});
        pj["v2"] = p.v2;
        pj["bundle1"] = to_json(p.bundle1, opts);
        pj["bundle2"] = to_json(p.bundle2, opts);
        pj["result"] = to_json(p.result, opts);
        return pj;
    };
    Json j;
    j["exploratory"] = true;
    j["trials"] = c.trials;
    Json minor = Json::array();
    for (const auto& p : c.minor_hypothesis_failures) minor.push_back(probe(p));
    j["minor_hypothesis_failures"] = std::move(minor);
    Json concl = Json::array();
    for (const auto& p : c.conclusion_failures) concl.push_back(probe(p));
    j["conclusion_failures"] = std::move(concl);
    return j;
}

// ---------------------------------------------------------------------------

Table reports_table(std::span<const VerificationReport> reports, const ReportOptions& opts) {
    Table t;
    t.columns = {"instance_id", "n", "per_A", "per_AhadA", "gap", "holds", "method", "provenance"};
    if (opts.timing) t.columns.push_back("elapsed_ns");
    for (const auto& r : reports) {
        std::vector<std::string> row = {r.instance_id,
                                        std::to_string(r.n),
                                        dec(r.per_A),
                                        dec(r.per_AhadA),
                                        dec(r.gap),
                                        r.holds ? "true" : "false",
                                        std::string(method_name(r.method)),
                                        r.provenance};
        if (opts.timing) row.push_back(std::to_string(r.elapsed.count()));
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table cycle_table(std::size_t max_n, std::size_t ryser_max_n, const PermanentOptions& options) {
    Table t;
    t.columns = {"n", "U", "V", "F", "per", "per_hadamard", "gap", "formula", "ryser_per", "ryser_per_hadamard",
                 "agrees"};
    for (std::size_t n = 3; n <= max_n; ++n) {
        const auto s = cycle_series(n);
        const auto p = cycle_laplacian_permanents(n);
        std::vector<std::string> row = {std::to_string(n), dec(s.U),     dec(s.V),
                                        dec(s.F),          dec(p.per),   dec(p.per_hadamard),
                                        dec(p.per * p.per - p.per_hadamard),
                                        p.derived_even_case ? "even (derived)" : "odd"};
        if (n <= ryser_max_n) {
            const auto l = laplacian(cycle_graph(n));
            const auto rp = permanent(l, options);
            const auto rh = permanent(hadamard(l, l), options);
            row.push_back(dec(rp));
            row.push_back(dec(rh));
            row.push_back(rp == p.per && rh == p.per_hadamard ? "true" : "false");
        } else {
            row.insert(row.end(), {"", "", ""});
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table clique_table(std::size_t max_n, std::size_t ryser_max_n, const PermanentOptions& options) {
    Table t;
    t.columns = {"n", "s", "P", "Q", "per_M", "per_MM", "ryser_per", "ryser_per_hadamard", "agrees"};
    for (std::size_t n = 2; n <= max_n; ++n) {
        for (std::size_t s : {n - 1, n}) {
            const auto c = clique_form(n, s);
            std::vector<std::string> row = {std::to_string(n), std::to_string(s), dec(c.P),
                                            dec(c.Q),          dec(c.per_M),      dec(c.per_MM)};
            if (n <= ryser_max_n) {
                auto l = laplacian(complete_graph(n));
                if (s == n - 1) l = delete_index(l, 0);
                const auto rp = permanent(l, options);
                const auto rh = permanent(hadamard(l, l), options);
                row.push_back(dec(rp));
                row.push_back(dec(rh));
                row.push_back(rp == c.per_M && rh == c.per_MM ? "true" : "false");
            } else {
                row.insert(row.end(), {"", "", ""});
            }
            t.rows.push_back(std::move(row));
        }
    }
    return t;
}

Table scalar_table(std::size_t max_n) {
    Table t;
    t.columns = {"n", "m", "P", "Q", "Q_squared", "holds"};
    for (std::size_t n = 2; n <= max_n; ++n) {
        for (std::size_t m : {n - 1, n}) {
            const auto r = clique_scalar_holds(n, m);
            t.rows.push_back({std::to_string(n), std::to_string(m), dec(r.P), dec(r.Q), dec(r.Q * r.Q),
                              r.holds ? "true" : "false"});
        }
    }
    return t;
}

bool table_all_hold(const Table& t) {
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
        if (t.columns[c] != "holds" && t.columns[c] != "agrees") continue;
        for (const auto& row : t.rows)
            if (row[c] == "false") return false;
    }
    return true;
}

std::string render_csv(const Table& t) {
    auto field = [](const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string q = "\"";
        for (char ch : s) {
            if (ch == '"') q += '"';
            q += ch;
        }
        return q + "\"";
    };
    std::ostringstream out;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << field(cells[i]);
        out << '\n';
    };
    line(t.columns);
    for (const auto& row : t.rows) line(row);
    return out.str();
}

std::string render_text(const Table& t) {
    std::vector<std::size_t> width(t.columns.size());
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
        width[c] = t.columns[c].size();
        for (const auto& row : t.rows) width[c] = std::max(width[c], row[c].size());
    }
    std::ostringstream out;
    auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c) s += "  ";
            s += cells[c];
            if (c + 1 < cells.size()) s.append(width[c] - cells[c].size(), ' ');
        }
        out << s << '\n';
    };
    line(t.columns);
    std::vector<std::string> rule;
    for (auto w : width) rule.emplace_back(w, '-');
    line(rule);
    for (const auto& row : t.rows) line(row);
    return out.str();
}

Json render_json(const Table& t) {
    Json out = Json::array();
    for (const auto& row : t.rows) {
        Json j;
        for (std::size_t c = 0; c < t.columns.size(); ++c) j[t.columns[c]] = row[c];
        out.push_back(std::move(j));
    }
    return out;
}

}  // namespace permlab
