#include "permlab/search.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "permlab/error.hpp"
#include "permlab/random.hpp"
#include "text_util.hpp"

namespace permlab {

std::string_view generator_name(Generator g) {
    switch (g) {
        case Generator::erdos_renyi: return "erdos_renyi";
        case Generator::random_tree: return "random_tree";
        case Generator::random_unicyclic: return "random_unicyclic";
        case Generator::random_block_graph: return "random_block_graph";
        case Generator::z_bipartite_matrix: return "z_bipartite_matrix";
        case Generator::integer_gram_psd: return "integer_gram_psd";
    }
    return "unknown";
}

std::optional<Generator> parse_generator(std::string_view name) {
    static constexpr std::pair<std::string_view, Generator> table[] = {
        {"erdos_renyi", Generator::erdos_renyi},
        {"er", Generator::erdos_renyi},
        {"random_tree", Generator::random_tree},
        {"tree", Generator::random_tree},
        {"random_unicyclic", Generator::random_unicyclic},
        {"unicyclic", Generator::random_unicyclic},
        {"random_block_graph", Generator::random_block_graph},
        {"block", Generator::random_block_graph},
        {"z_bipartite_matrix", Generator::z_bipartite_matrix},
        {"z-bipartite", Generator::z_bipartite_matrix},
        {"z_bipartite", Generator::z_bipartite_matrix},
        {"integer_gram_psd", Generator::integer_gram_psd},
        {"gram", Generator::integer_gram_psd},
    };
    for (auto [key, g] : table)
        if (key == name) return g;
    return std::nullopt;
}

void CampaignConfig::validate() const {
    if (trials < 1) throw ParameterError("campaign: trials must be >= 1");
    if (n_min > n_max) throw ParameterError("campaign: n_min > n_max");
    if (n_min < 1) throw ParameterError("campaign: n must be >= 1");
    if (generator == Generator::random_unicyclic && n_min < 3) {
        throw ParameterError("campaign: random_unicyclic needs n >= 3");
    }
    if (edge_percent > 100) throw ParameterError("campaign: edge_percent must be in [0, 100]");
    if (max_block < 2) throw ParameterError("campaign: max_block must be >= 2");
    if (diag_min < 0 || diag_min > diag_max) throw ParameterError("campaign: need 0 <= diag_min <= diag_max");
    if (offdiag_max > 0 || offdiag_min > offdiag_max) {
        throw ParameterError("campaign: need offdiag_min <= offdiag_max <= 0");
    }
    if (gram_min > gram_max) throw ParameterError("campaign: gram_min > gram_max");
}

std::pair<std::size_t, std::size_t> parse_size_range(std::string_view text) {
    auto number = [&](std::string_view t) {
        std::size_t v = 0;
        auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size()) {
            throw ParameterError("bad size range '" + std::string(text) + "' (expected 'a' or 'a..b')");
        }
        return v;
    };
    auto dots = text.find("..");
    if (dots == std::string_view::npos) {
        auto v = number(text);
        return {v, v};
    }
    auto lo = number(text.substr(0, dots));
    auto hi = number(text.substr(dots + 2));
    if (lo > hi) throw ParameterError("bad size range '" + std::string(text) + "': lower bound exceeds upper");
    return {lo, hi};
}

CampaignConfig parse_campaign_config(std::string_view text) {
    CampaignConfig c;
    for (const auto& line : detail::split_content_lines(text)) {
        auto eq = line.text.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError("campaign config: line " + std::to_string(line.number) + ": expected 'key = value'",
                             line.number);
        }
        auto trim = [](std::string_view s) {
            while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
            while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
            return s;
        };
        const auto key = trim(line.text.substr(0, eq));
        const auto value = trim(line.text.substr(eq + 1));
        auto bad = [&](const std::string& why) {
            return ParseError("campaign config: line " + std::to_string(line.number) + ": " + why, line.number);
        };
        auto as_u64 = [&]() {
            std::uint64_t v = 0;
            auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
            if (value.empty() || ec != std::errc{} || ptr != value.data() + value.size()) {
                throw bad("expected a nonnegative integer for '" + std::string(key) + "'");
            }
            return v;
        };
        auto as_i64 = [&]() {
            std::int64_t v = 0;
            auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
            if (value.empty() || ec != std::errc{} || ptr != value.data() + value.size()) {
                throw bad("expected an integer for '" + std::string(key) + "'");
            }
            return v;
        };
        try {
            if (key == "generator") {
                auto g = parse_generator(value);
                if (!g) throw bad("unknown generator '" + std::string(value) + "'");
                c.generator = *g;
            } else if (key == "n") {
                std::tie(c.n_min, c.n_max) = parse_size_range(value);
            } else if (key == "n_min") {
                c.n_min = as_u64();
            } else if (key == "n_max") {
                c.n_max = as_u64();
            } else if (key == "trials") {
                c.trials = as_u64();
            } else if (key == "seed") {
                c.seed = as_u64();
            } else if (key == "edge_percent") {
                c.edge_percent = static_cast<unsigned>(as_u64());
            } else if (key == "max_block") {
                c.max_block = as_u64();
            } else if (key == "diag_min") {
                c.diag_min = as_i64();
            } else if (key == "diag_max") {
                c.diag_max = as_i64();
            } else if (key == "offdiag_min") {
                c.offdiag_min = as_i64();
            } else if (key == "offdiag_max") {
                c.offdiag_max = as_i64();
            } else if (key == "gram_rank") {
                c.gram_rank = as_u64();
            } else if (key == "gram_min") {
                c.gram_min = as_i64();
            } else if (key == "gram_max") {
                c.gram_max = as_i64();
            } else {
                throw bad("unknown key '" + std::string(key) + "'");
            }
        } catch (const ParameterError& e) {
            throw bad(e.what());
        }
    }
    try {
        c.validate();
    } catch (const ParameterError& e) {
        throw ParseError(std::string("campaign config: ") + e.what(), 0);
    }
    return c;
}

// ---------------------------------------------------------------------------
// Generators.

namespace {

Graph random_relabel(const Graph& g, KeyedRng& rng) {
    std::vector<Vertex> perm(g.order());
    std::iota(perm.begin(), perm.end(), Vertex{0});
    rng.shuffle(std::span<Vertex>(perm));
    return relabel(g, perm);
}

Graph gen_erdos_renyi(std::size_t n, unsigned percent, KeyedRng& rng) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            if (rng.percent(percent)) e.emplace_back(i, j);
    return Graph(n, std::move(e));
}

// Uniform labelled tree from a Pruefer sequence.
Graph gen_tree(std::size_t n, KeyedRng& rng) {
    if (n == 1) return Graph(1);
    if (n == 2) return complete_graph(2);
    std::vector<Vertex> code(n - 2);
    for (auto& c : code) c = rng.index_below(n);
    std::vector<std::size_t> degree(n, 1);
    for (auto c : code) ++degree[c];
    std::vector<std::pair<Vertex, Vertex>> e;
    for (auto c : code) {
        Vertex leaf = 0;
        while (degree[leaf] != 1) ++leaf;
        e.emplace_back(leaf, c);
        --degree[leaf];
        --degree[c];
    }
    Vertex a = n, b = n;
    for (Vertex v = 0; v < n; ++v) {
        if (degree[v] == 1) (a == n ? a : b) = v;
    }
    e.emplace_back(a, b);
    return Graph(n, std::move(e));
}

Graph gen_unicyclic(std::size_t n, KeyedRng& rng) {
    const auto k = static_cast<std::size_t>(rng.uniform(3, static_cast<std::int64_t>(n)));
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
    for (Vertex v = k; v < n; ++v) e.emplace_back(v, rng.index_below(v));
    return random_relabel(Graph(n, std::move(e)), rng);
}

Graph gen_block_graph(std::size_t n, std::size_t max_block, KeyedRng& rng) {
    if (n == 1) return Graph(1);
    std::vector<std::pair<Vertex, Vertex>> e;
    auto add_clique = [&](std::vector<Vertex> members) {
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j) e.emplace_back(members[i], members[j]);
    };
    auto first = static_cast<std::size_t>(rng.uniform(2, static_cast<std::int64_t>(std::min(max_block, n))));
    std::vector<Vertex> members(first);
    std::iota(members.begin(), members.end(), Vertex{0});
    add_clique(members);
    std::size_t count = first;
    while (count < n) {
        const Vertex cut = rng.index_below(count);
        const auto size = static_cast<std::size_t>(
            rng.uniform(2, static_cast<std::int64_t>(std::min(max_block, n - count + 1))));
        members.assign(1, cut);
        for (std::size_t k = 1; k < size; ++k) members.push_back(count++);
        add_clique(members);
    }
    return random_relabel(Graph(n, std::move(e)), rng);
}

ExactMatrix gen_z_bipartite(std::size_t n, const CampaignConfig& c, KeyedRng& rng) {
    std::vector<int> side(n);
    for (auto& s : side) s = static_cast<int>(rng.uniform(0, 1));
    ExactMatrix a(n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = static_cast<long>(rng.uniform(c.diag_min, c.diag_max));
        for (std::size_t j = i + 1; j < n; ++j) {
            if (side[i] == side[j]) continue;
            const auto v = rng.uniform(c.offdiag_min, c.offdiag_max);
            a(i, j) = static_cast<long>(v);
            a(j, i) = static_cast<long>(v);
        }
    }
    return a;
}

ExactMatrix gen_gram(std::size_t n, const CampaignConfig& c, KeyedRng& rng) {
    const std::size_t cols = c.gram_rank == 0 ? n : c.gram_rank;
    std::vector<BigInt> b(n * cols);
    for (auto& x : b) x = static_cast<long>(rng.uniform(c.gram_min, c.gram_max));
    return gram(n, cols, b);
}

}  // namespace

Instance generate(const CampaignConfig& config, std::size_t index) {
    config.validate();
    if (index >= config.trials) {
        throw ParameterError("generate: index " + std::to_string(index) + " >= trials " +
                             std::to_string(config.trials));
    }
    KeyedRng rng(config.seed, index);
    const auto n = static_cast<std::size_t>(
        rng.uniform(static_cast<std::int64_t>(config.n_min), static_cast<std::int64_t>(config.n_max)));
    Instance out;
    switch (config.generator) {
        case Generator::erdos_renyi: out = gen_erdos_renyi(n, config.edge_percent, rng); break;
        case Generator::random_tree: out = gen_tree(n, rng); break;
        case Generator::random_unicyclic: out = gen_unicyclic(n, rng); break;
        case Generator::random_block_graph: out = gen_block_graph(n, config.max_block, rng); break;
        case Generator::z_bipartite_matrix: out = gen_z_bipartite(n, config, rng); break;
        case Generator::integer_gram_psd: out = gen_gram(n, config, rng); break;
    }
    check_instance_class(config.generator, out);
    return out;
}

bool is_block_graph(const Graph& g) {
    // Tarjan's biconnected components with an edge stack.
    const auto n = g.order();
    const auto adj = g.adjacency();
    std::vector<std::size_t> disc(n, 0), low(n, 0);
    std::size_t timer = 0;
    std::vector<Edge> stack;
    bool ok = true;

    auto check_component = [&](const std::vector<Edge>& edges) {
        std::vector<Vertex> verts;
        for (const auto& e : edges) {
            verts.push_back(e.u);
            verts.push_back(e.v);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        if (edges.size() != verts.size() * (verts.size() - 1) / 2) ok = false;
    };

    std::function<void(Vertex, Vertex)> dfs = [&](Vertex u, Vertex parent) {
        disc[u] = low[u] = ++timer;
        for (Vertex w : adj[u]) {
            if (disc[w] == 0) {
                stack.push_back(Edge{u, w});
                dfs(w, u);
                low[u] = std::min(low[u], low[w]);
                if (low[w] >= disc[u]) {
                    std::vector<Edge> comp;
                    for (;;) {
                        Edge e = stack.back();
                        stack.pop_back();
                        comp.push_back(e);
                        if (e.u == u && e.v == w) break;
                    }
                    check_component(comp);
                }
            } else if (w != parent && disc[w] < disc[u]) {
                stack.push_back(Edge{u, w});
                low[u] = std::min(low[u], disc[w]);
            }
        }
    };
    for (Vertex v = 0; v < n; ++v)
        if (disc[v] == 0) dfs(v, n);
    return ok;
}

void check_instance_class(Generator generator, const Instance& instance) {
    auto fail = [&](const std::string& why) {
        throw std::logic_error(std::string(generator_name(generator)) + " produced an instance outside its class: " + why);
    };
    switch (generator) {
        case Generator::erdos_renyi:
            if (!std::holds_alternative<Graph>(instance)) fail("not a graph");
            return;
        case Generator::random_tree: {
            const auto* g = std::get_if<Graph>(&instance);
            if (!g || g->size() + 1 != g->order() || !g->is_connected()) fail("not a tree");
            return;
        }
        case Generator::random_unicyclic: {
            const auto* g = std::get_if<Graph>(&instance);
            if (!g || g->size() != g->order() || !g->is_connected()) fail("not unicyclic");
            return;
        }
        case Generator::random_block_graph: {
            const auto* g = std::get_if<Graph>(&instance);
            if (!g || !g->is_connected() || !is_block_graph(*g)) fail("not a connected block graph");
            return;
        }
        case Generator::z_bipartite_matrix: {
            const auto* a = std::get_if<ExactMatrix>(&instance);
            if (!a || !z_profile(*a).bipartite_sign_class()) fail("not a bipartite-support symmetric Z-matrix");
            return;
        }
        case Generator::integer_gram_psd: {
            const auto* a = std::get_if<ExactMatrix>(&instance);
            if (!a || !a->is_symmetric()) fail("not symmetric");
            for (std::size_t i = 0; i < a->dim(); ++i)
                if (sgn((*a)(i, i)) < 0) fail("negative diagonal");
            return;
        }
    }
}

// ---------------------------------------------------------------------------
// Campaigns.

TrialOutcome run_trial(const CampaignConfig& config, std::size_t index, const PermanentOptions& options) {
    TrialOutcome t;
    t.index = index;
    t.instance = generate(config, index);
    const std::string id = std::string(generator_name(config.generator)) + "#" + std::to_string(index);
    try {
        if (const auto* g = std::get_if<Graph>(&t.instance)) {
            t.report = verify_graph(*g, options, id);
        } else {
            const auto& a = std::get<ExactMatrix>(t.instance);
            if (config.generator == Generator::z_bipartite_matrix) {
                t.sign = verify_sign_property(a, options);
                if (!t.sign->holds) t.note = "sign property failed: per(A) != per(|A|)";
            }
            const std::string prov = config.generator == Generator::integer_gram_psd
                                         ? "integer Gram matrix B B^T"
                                         : "symmetric Z-matrix with bipartite support";
            t.report = chollet_check(a, options, Method::ryser, id, prov);
        }
        t.status = t.report->holds && (!t.sign || t.sign->holds) ? TrialStatus::pass : TrialStatus::violation;
    } catch (const SizeLimitError& e) {
        t.status = TrialStatus::skipped;
        t.report.reset();
        t.note = e.what();
    }
    return t;
}

CampaignReport run_campaign(const CampaignConfig& config, const CampaignOptions& options) {
    config.validate();
    const auto start = std::chrono::steady_clock::now();
    std::vector<TrialOutcome> outcomes(config.trials);

    const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(config.trials)));
    PermanentOptions per_trial = options.permanent;
    per_trial.jobs = 1;
    if (jobs == 1) {
        for (std::size_t k = 0; k < config.trials; ++k) outcomes[k] = run_trial(config, k, per_trial);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::exception_ptr> errors(jobs);
        std::vector<std::thread> workers;
        for (unsigned w = 0; w < jobs; ++w) {
            workers.emplace_back([&, w] {
                try {
                    for (std::size_t k; (k = next.fetch_add(1)) < config.trials;)
                        outcomes[k] = run_trial(config, k, per_trial);
                } catch (...) {
                    errors[w] = std::current_exception();
                    next.store(config.trials);
                }
            });
        }
        for (auto& t : workers) t.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    CampaignReport r;
    r.config = config;
    std::vector<BigInt> gaps;
    for (auto& t : outcomes) {
        if (t.status == TrialStatus::skipped) {
            r.skipped.push_back(t.index);
            continue;
        }
        ++r.instances_run;
        gaps.push_back(t.report->gap);
        if (t.status == TrialStatus::pass) {
            ++r.passed;
        } else {
            r.violations.push_back(std::move(t));
        }
    }
    if (!gaps.empty()) {
        std::sort(gaps.begin(), gaps.end());
        r.min_gap = gaps.front();
        r.median_gap = gaps[(gaps.size() - 1) / 2];
    }
    r.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
    return r;
}

// ---------------------------------------------------------------------------

DiagonalExploration explore_diagonal_additions(const ExactMatrix& a, std::size_t trials, std::uint64_t seed,
                                               std::uint64_t max_add, const PermanentOptions& options) {
    DiagonalExploration out;
    out.trials = trials;
    out.base = chollet_check(a, options, Method::ryser, "base", "explore diagonal additions");
    for (std::size_t k = 0; k < trials; ++k) {
        KeyedRng rng(seed, k);
        DiagonalProbe p;
        ExactMatrix shifted = a;
        for (std::size_t i = 0; i < a.dim(); ++i) {
            BigInt d = static_cast<long>(rng.uniform(0, static_cast<std::int64_t>(max_add)));
            shifted(i, i) += d;
            p.diagonal.push_back(d);
        }
        p.after = chollet_check(shifted, options, Method::ryser, "trial#" + std::to_string(k), "A + D");
        if (!out.min_gap_after || p.after.gap < *out.min_gap_after) out.min_gap_after = p.after.gap;
        if (out.base.holds && !p.after.holds) out.counterexamples.push_back(std::move(p));
    }
    return out;
}

CoalescenceExploration explore_coalescence(std::size_t trials, std::uint64_t seed, std::size_t max_n,
                                           const PermanentOptions& options) {
    if (max_n < 2) throw ParameterError("explore_coalescence: max_n must be >= 2");
    CoalescenceExploration out;
    out.trials = trials;
    for (std::size_t k = 0; k < trials; ++k) {
        KeyedRng rng(seed, k);
        CoalescenceProbe p;
        p.trial = k;
        auto n1 = static_cast<std::size_t>(rng.uniform(2, static_cast<std::int64_t>(max_n)));
        auto n2 = static_cast<std::size_t>(rng.uniform(2, static_cast<std::int64_t>(max_n)));
        p.g1 = gen_erdos_renyi(n1, 50, rng);
        p.g2 = gen_erdos_renyi(n2, 50, rng);
        p.v1 = rng.index_below(n1);
        p.v2 = rng.index_below(n2);
        p.bundle1 = verify_hypothesis_bundle(p.g1, p.v1, options);
        p.bundle2 = verify_hypothesis_bundle(p.g2, p.v2, options);
        p.result = verify_graph(coalesce(p.g1, p.v1, p.g2, p.v2).graph, options);
        const bool wholes = p.bundle1.whole.holds && p.bundle2.whole.holds;
        const bool minors = p.bundle1.minor.holds && p.bundle2.minor.holds;
        if (!p.result.holds) out.conclusion_failures.push_back(p);
        if (wholes && !minors) out.minor_hypothesis_failures.push_back(std::move(p));
    }
    return out;
}

}  // namespace permlab
