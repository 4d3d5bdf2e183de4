// permlab: exact permanents of graph Laplacians and the per(L o L) <= per(L)^2 checks.
//
// Exit codes: 0 everything held, 1 usage or input error, 2 a mathematical violation.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "permlab/error.hpp"
#include "permlab/report.hpp"

using namespace permlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitViolation = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Output {
    std::string format = "json";
    std::string path;
    bool timing = false;

    ReportOptions report() const { return ReportOptions{timing}; }

    void write(const std::string& text) const {
        if (path.empty() || path == "-") {
            std::cout << text;
            return;
        }
        std::ofstream out(path, std::ios::binary);
        if (!out) throw Error("cannot write '" + path + "'");
        out << text;
    }

    void emit(const Table& t) const {
        if (format == "csv") write(render_csv(t));
        else if (format == "table") write(render_text(t));
        else write(render_json(t).dump(2) + "\n");
    }
};

void add_output_options(CLI::App* cmd, Output& out) {
    cmd->add_option("--format", out.format, "json, csv or table")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    cmd->add_option("-o,--output", out.path, "write the report here instead of stdout");
    cmd->add_flag("--timing", out.timing, "include elapsed times (output is then not reproducible)");
}

// --- verify -----------------------------------------------------------------

struct VerifyArgs {
    std::string family;
    std::string n_range;
    std::vector<std::size_t> params;
    std::vector<std::string> graphs;
    std::string graph6_file;
    std::string edgelist_file;
    std::string matrix_file;
    unsigned jobs = 1;
    Output out;
};

struct Checked {
    VerificationReport report;
    Instance instance;
};

std::vector<Checked> collect_verify(const VerifyArgs& a, const PermanentOptions& opts) {
    int sources = !a.family.empty() + !a.graphs.empty() + !a.graph6_file.empty() + !a.edgelist_file.empty() +
                  !a.matrix_file.empty();
    if (sources != 1) {
        throw ParameterError("verify: give exactly one of --family, --graph, --graph6, --edgelist, --matrix");
    }
    std::vector<Checked> out;
    auto add_graph = [&](const Graph& g, std::string id) {
        out.push_back({verify_graph(g, opts, std::move(id)), Instance{g}});
    };
    if (!a.family.empty()) {
        auto fam = parse_family(a.family);
        if (!fam) throw ParameterError("verify: unknown family '" + a.family + "'");
        if (a.n_range.empty()) throw ParameterError("verify: --family needs --n");
        auto [lo, hi] = parse_size_range(a.n_range);
        for (auto n = lo; n <= hi; ++n) {
            std::vector<std::size_t> params{n};
            params.insert(params.end(), a.params.begin(), a.params.end());
            std::string id(family_name(*fam));
            for (std::size_t k = 0; k < params.size(); ++k) id += (k == 0 ? ":" : ",") + std::to_string(params[k]);
            add_graph(make_family(*fam, params), id);
        }
    } else if (!a.graphs.empty()) {
        for (const auto& spec : a.graphs) add_graph(parse_graph_spec(spec), spec);
    } else if (!a.graph6_file.empty()) {
        std::istringstream in(read_file(a.graph6_file));
        std::string line;
        std::size_t number = 0;
        while (std::getline(in, line)) {
            ++number;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty()) continue;
            try {
                add_graph(from_graph6(line), a.graph6_file + ":" + std::to_string(number));
            } catch (const ParseError& e) {
                throw ParseError(a.graph6_file + ": line " + std::to_string(number) + ": " + e.what(),
                                 e.position());
            }
        }
        if (out.empty()) throw ParseError(a.graph6_file + ": no graph6 strings found", 0);
    } else if (!a.edgelist_file.empty()) {
        add_graph(from_edge_list(read_file(a.edgelist_file)), a.edgelist_file);
    } else {
        auto m = from_matrix_text(read_file(a.matrix_file));
        out.push_back({chollet_check(m, opts, Method::ryser, a.matrix_file, "matrix file " + a.matrix_file),
                       Instance{m}});
    }
    return out;
}

int cmd_verify(const VerifyArgs& a) {
    PermanentOptions opts;
    opts.jobs = a.jobs;
    const auto checked = collect_verify(a, opts);
    std::vector<VerificationReport> reports;
    bool all = true;
    for (const auto& c : checked) {
        reports.push_back(c.report);
        all = all && c.report.holds;
    }
    if (a.out.format == "json") {
        Json arr = Json::array();
        for (const auto& c : checked) {
            Json j = to_json(c.report, a.out.report());
            if (!c.report.holds) j["witness"] = to_json(c.instance);
            arr.push_back(std::move(j));
        }
        a.out.write(arr.dump(2) + "\n");
    } else {
        a.out.emit(reports_table(reports, a.out.report()));
    }
    for (const auto& c : checked) {
        if (c.report.holds) continue;
        Json w = to_json(c.report, a.out.report());
        w["witness"] = to_json(c.instance);
        std::cerr << "VIOLATION " << w.dump() << "\n";
    }
    return all ? kExitOk : kExitViolation;
}

// --- identity ---------------------------------------------------------------

struct IdentityArgs {
    std::string which;
    std::string g1, g2, family, matrix_file;
    std::size_t v1 = 0, v2 = 0, i = 0;
    std::string alpha = "1";
    unsigned jobs = 1;
    Output out;
};

ExactMatrix identity_matrix(const IdentityArgs& a) {
    if (!a.family.empty() == !a.matrix_file.empty()) {
        throw ParameterError("identity " + a.which + ": give exactly one of --family or --matrix");
    }
    if (!a.matrix_file.empty()) return from_matrix_text(read_file(a.matrix_file));
    return laplacian(parse_graph_spec(a.family));
}

int cmd_identity(const IdentityArgs& a) {
    PermanentOptions opts;
    opts.jobs = a.jobs;
    Json j;
    bool holds = false;
    if (a.which == "coalesce" || a.which == "coalesce-hadamard") {
        if (a.g1.empty() || a.g2.empty()) throw ParameterError("identity " + a.which + ": needs --g1 and --g2");
        const auto g1 = parse_graph_spec(a.g1);
        const auto g2 = parse_graph_spec(a.g2);
        if (a.which == "coalesce") {
            auto r = verify_coalescence_identity(g1, a.v1, g2, a.v2, opts);
            holds = r.holds;
            j = to_json(r);
        } else {
            auto r = verify_hadamard_coalescence_identity(g1, a.v1, g2, a.v2, opts);
            holds = r.holds;
            j = to_json(r);
        }
    } else if (a.which == "diag") {
        auto r = verify_diag_multilinearity(identity_matrix(a), a.i, parse_decimal(a.alpha), opts);
        holds = r.holds();
        j = to_json(r);
    } else if (a.which == "sign") {
        auto r = verify_sign_property(identity_matrix(a), opts);
        holds = r.holds;
        j = Json{{"identity", "sign"}};
        j.update(to_json(r));
    } else {
        auto r = verify_lieb_bound(identity_matrix(a), a.i, opts);
        holds = r.holds;
        j = to_json(r);
    }
    if (a.out.format == "json") {
        a.out.write(j.dump(2) + "\n");
    } else {
        Table t;
        std::vector<std::string> row;
        for (auto& [k, v] : j.items()) {
            t.columns.push_back(k);
            row.push_back(v.is_string() ? v.get<std::string>() : v.dump());
        }
        t.rows.push_back(std::move(row));
        a.out.emit(t);
    }
    return holds ? kExitOk : kExitViolation;
}

// --- table ------------------------------------------------------------------

struct TableArgs {
    std::string which;
    std::size_t max_n = 10;
    std::size_t ryser_max_n = 14;
    unsigned jobs = 1;
    Output out;
};

int cmd_table(const TableArgs& a) {
    PermanentOptions opts;
    opts.jobs = a.jobs;
    Table t;
    if (a.which == "cycles") t = cycle_table(a.max_n, a.ryser_max_n, opts);
    else if (a.which == "cliques") t = clique_table(a.max_n, a.ryser_max_n, opts);
    else t = scalar_table(a.max_n);
    a.out.emit(t);
    return table_all_hold(t) ? kExitOk : kExitViolation;
}

// --- search -----------------------------------------------------------------

struct SearchArgs {
    std::string config_file;
    std::string gen;
    std::string n_range;
    std::optional<std::size_t> trials;
    std::optional<std::uint64_t> seed;
    unsigned jobs = 1;
    Output out;
};

int cmd_search(const SearchArgs& a) {
    CampaignConfig c;
    if (!a.config_file.empty()) c = parse_campaign_config(read_file(a.config_file));
    if (!a.gen.empty()) {
        auto g = parse_generator(a.gen);
        if (!g) throw ParameterError("search: unknown generator '" + a.gen + "'");
        c.generator = *g;
    }
    if (!a.n_range.empty()) std::tie(c.n_min, c.n_max) = parse_size_range(a.n_range);
    if (a.trials) c.trials = *a.trials;
    if (a.seed) c.seed = *a.seed;
    if (a.config_file.empty() && a.gen.empty()) throw ParameterError("search: needs --gen or --config");
    c.validate();

    CampaignOptions opts;
    opts.jobs = a.jobs;
    const auto r = run_campaign(c, opts);
    if (a.out.format == "json") {
        a.out.write(to_json(r, a.out.report()).dump(2) + "\n");
    } else {
        Table t;
        t.columns = {"generator", "n_min", "n_max", "trials", "seed", "instances_run", "passed", "violations",
                     "skipped", "min_gap", "median_gap"};
        t.rows.push_back({std::string(generator_name(c.generator)), std::to_string(c.n_min), std::to_string(c.n_max),
                          std::to_string(c.trials), std::to_string(c.seed), std::to_string(r.instances_run),
                          std::to_string(r.passed), std::to_string(r.violations.size()),
                          std::to_string(r.skipped.size()), r.min_gap ? to_decimal(*r.min_gap) : "",
                          r.median_gap ? to_decimal(*r.median_gap) : ""});
        a.out.emit(t);
    }
    for (const auto& v : r.violations) std::cerr << "VIOLATION " << to_json(v, a.out.report()).dump() << "\n";
    return r.violations.empty() ? kExitOk : kExitViolation;
}

// --- explore ----------------------------------------------------------------

struct ExploreArgs {
    std::string which;
    std::string family, matrix_file;
    std::size_t trials = 100;
    std::uint64_t seed = 0;
    std::uint64_t max_add = 5;
    std::size_t max_n = 6;
    unsigned jobs = 1;
    Output out;
};

int cmd_explore(const ExploreArgs& a) {
    PermanentOptions opts;
    opts.jobs = a.jobs;
    Json j;
    if (a.which == "diag") {
        if (!a.family.empty() == !a.matrix_file.empty()) {
            throw ParameterError("explore diag: give exactly one of --family or --matrix");
        }
        const auto m = a.matrix_file.empty() ? laplacian(parse_graph_spec(a.family))
                                             : from_matrix_text(read_file(a.matrix_file));
        j = to_json(explore_diagonal_additions(m, a.trials, a.seed, a.max_add, opts), a.out.report());
    } else {
        j = to_json(explore_coalescence(a.trials, a.seed, a.max_n, opts), a.out.report());
    }
    a.out.write(j.dump(2) + "\n");
    std::cerr << "note: exploratory output; findings are evidence, not theorem-backed\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact permanents of graph Laplacians and the per(L o L) <= per(L)^2 inequality"};
    app.require_subcommand(1);
    app.footer("Exit codes: 0 all checks held, 1 usage or input error, 2 mathematical violation.\n"
               "PERMLAB_MAX_N overrides the permanent size cap (default 30).");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "check the inequality on graphs or a matrix");
    verify->add_option("--family", va.family, "path, cycle, complete, complete_bipartite, star, friendship, "
                                              "windmill, bouquet_of_cycles");
    verify->add_option("--n", va.n_range, "range a or a..b swept over the family's first parameter");
    verify->add_option("--param", va.params, "remaining family parameters");
    verify->add_option("--graph", va.graphs, "short graph spec such as k4, c5, k2,3, w3,4, g6:<str>");
    verify->add_option("--graph6", va.graph6_file, "file with one graph6 string per line");
    verify->add_option("--edgelist", va.edgelist_file, "edge-list file ('n <count>' then 'u v' lines)");
    verify->add_option("--matrix", va.matrix_file, "matrix text file");
    verify->add_option("--jobs", va.jobs, "worker threads for the permanent")->check(CLI::PositiveNumber);
    add_output_options(verify, va.out);

    IdentityArgs ia;
    auto* identity = app.add_subcommand("identity", "check one identity or bound exactly");
    identity->add_option("which", ia.which, "coalesce, coalesce-hadamard, diag, sign, lieb")
        ->required()
        ->check(CLI::IsMember({"coalesce", "coalesce-hadamard", "diag", "sign", "lieb"}));
    identity->add_option("--g1", ia.g1, "first graph spec");
    identity->add_option("--v1", ia.v1, "gluing vertex of g1");
    identity->add_option("--g2", ia.g2, "second graph spec");
    identity->add_option("--v2", ia.v2, "gluing vertex of g2");
    identity->add_option("--family", ia.family, "graph spec whose Laplacian is used");
    identity->add_option("--matrix", ia.matrix_file, "matrix text file");
    identity->add_option("--i", ia.i, "row/column index");
    identity->add_option("--alpha", ia.alpha, "nonnegative integer added at (i, i)");
    identity->add_option("--jobs", ia.jobs)->check(CLI::PositiveNumber);
    add_output_options(identity, ia.out);

    TableArgs ta;
    auto* table = app.add_subcommand("table", "closed-form tables with a Ryser cross-check column");
    table->add_option("which", ta.which, "cycles, cliques or scalar")
        ->required()
        ->check(CLI::IsMember({"cycles", "cliques", "scalar"}));
    table->add_option("--max-n", ta.max_n, "largest n");
    table->add_option("--ryser-max-n", ta.ryser_max_n, "cross-check with Ryser up to this n");
    table->add_option("--jobs", ta.jobs)->check(CLI::PositiveNumber);
    add_output_options(table, ta.out);

    SearchArgs sa;
    auto* search = app.add_subcommand("search", "seeded randomized campaign");
    search->add_option("--config", sa.config_file, "campaign config file (key = value)");
    search->add_option("--gen", sa.gen, "er, tree, unicyclic, block, z-bipartite, gram");
    search->add_option("--n", sa.n_range, "size a or a..b");
    search->add_option("--trials", sa.trials);
    search->add_option("--seed", sa.seed);
    search->add_option("--jobs", sa.jobs, "trials run concurrently; output does not depend on it")
        ->check(CLI::PositiveNumber);
    add_output_options(search, sa.out);

    ExploreArgs ea;
    auto* explore = app.add_subcommand("explore", "exploratory probes of open questions");
    explore->add_option("which", ea.which, "diag or coalesce")->required()->check(CLI::IsMember({"diag", "coalesce"}));
    explore->add_option("--family", ea.family, "graph spec (diag)");
    explore->add_option("--matrix", ea.matrix_file, "matrix text file (diag)");
    explore->add_option("--trials", ea.trials);
    explore->add_option("--seed", ea.seed);
    explore->add_option("--max-add", ea.max_add, "diagonal additions drawn from [0, max-add]");
    explore->add_option("--max-n", ea.max_n, "piece sizes drawn from [2, max-n] (coalesce)");
    explore->add_option("--jobs", ea.jobs)->check(CLI::PositiveNumber);
    add_output_options(explore, ea.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*verify) return cmd_verify(va);
        if (*identity) return cmd_identity(ia);
        if (*table) return cmd_table(ta);
        if (*search) return cmd_search(sa);
        if (*explore) return cmd_explore(ea);
    } catch (const ParseError& e) {
        std::cerr << "permlab: parse error: " << e.what() << "\n";
        return kExitInput;
    } catch (const InputClassError& e) {
        std::cerr << "permlab: input-class error: " << e.what() << "\n";
        return kExitInput;
    } catch (const Error& e) {
        std::cerr << "permlab: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
