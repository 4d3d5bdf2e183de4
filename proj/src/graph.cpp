#include "permlab/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <queue>

#include "permlab/error.hpp"

namespace permlab {

namespace {

void check_vertex(const Graph& g, Vertex v, const char* what) {
    if (v >= g.order()) {
        throw ParameterError(std::string(what) + ": vertex " + std::to_string(v) +
                             " out of range for graph on " + std::to_string(g.order()) +
                             " vertices");
    }
}

std::vector<std::pair<Vertex, Vertex>> edge_pairs(const Graph& g) {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(g.size());
    for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
    return out;
}

}  // namespace

Graph::Graph(std::size_t n) : n_(n) {}

Graph::Graph(std::size_t n, std::vector<std::pair<Vertex, Vertex>> edges) : n_(n) {
    edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a >= n || b >= n) {
            throw ParameterError("edge {" + std::to_string(a) + "," + std::to_string(b) +
                                 "} has an endpoint outside [0," + std::to_string(n) + ")");
        }
        if (a == b) throw ParameterError("loop at vertex " + std::to_string(a));
        edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) {
        throw ParameterError("repeated edge {" + std::to_string(dup->u) + "," +
                             std::to_string(dup->v) + "}");
    }
}

bool Graph::has_edge(Vertex a, Vertex b) const {
    if (a == b) return false;
    Edge e{std::min(a, b), std::max(a, b)};
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::size_t Graph::degree(Vertex v) const {
    check_vertex(*this, v, "degree");
    return static_cast<std::size_t>(std::count_if(
        edges_.begin(), edges_.end(), [v](const Edge& e) { return e.u == v || e.v == v; }));
}

std::vector<std::size_t> Graph::degrees() const {
    std::vector<std::size_t> d(n_, 0);
    for (const auto& e : edges_) {
        ++d[e.u];
        ++d[e.v];
    }
    return d;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
    check_vertex(*this, v, "neighbors");
    std::vector<Vertex> out;
    for (const auto& e : edges_) {
        if (e.u == v) out.push_back(e.v);
        if (e.v == v) out.push_back(e.u);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<Vertex>> Graph::adjacency() const {
    std::vector<std::vector<Vertex>> adj(n_);
    for (const auto& e : edges_) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return adj;
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    auto adj = adjacency();
    std::vector<bool> seen(n_, false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w : adj[u]) {
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n_;
}

// ---------------------------------------------------------------------------

std::string_view family_name(Family f) {
    switch (f) {
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::complete: return "complete";
        case Family::complete_bipartite: return "complete_bipartite";
        case Family::star: return "star";
        case Family::friendship: return "friendship";
        case Family::windmill: return "windmill";
        case Family::bouquet_of_cycles: return "bouquet_of_cycles";
    }
    return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
    static constexpr std::pair<std::string_view, Family> table[] = {
        {"path", Family::path},
        {"cycle", Family::cycle},
        {"complete", Family::complete},
        {"clique", Family::complete},
        {"complete_bipartite", Family::complete_bipartite},
        {"complete-bipartite", Family::complete_bipartite},
        {"star", Family::star},
        {"friendship", Family::friendship},
        {"windmill", Family::windmill},
        {"bouquet_of_cycles", Family::bouquet_of_cycles},
        {"bouquet", Family::bouquet_of_cycles},
    };
    for (auto [key, f] : table) {
        if (key == name) return f;
    }
    return std::nullopt;
}

Graph path_graph(std::size_t n) {
    if (n < 1) throw ParameterError("path needs n >= 1");
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, std::move(e));
}

Graph cycle_graph(std::size_t n) {
    if (n < 3) throw ParameterError("cycle needs n >= 3");
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(e));
}

Graph complete_graph(std::size_t n) {
    if (n < 1) throw ParameterError("complete needs n >= 1");
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, std::move(e));
}

Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
    if (a < 1 || b < 1) throw ParameterError("complete_bipartite needs a, b >= 1");
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i < a; ++i)
        for (Vertex j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return Graph(a + b, std::move(e));
}

Graph star_graph(std::size_t leaves) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph(leaves + 1, std::move(e));
}

Graph make_family(Family family, std::span<const std::size_t> params) {
    auto need = [&](std::size_t count) {
        if (params.size() != count) {
            throw ParameterError(std::string(family_name(family)) + " takes " +
                                 std::to_string(count) + " parameter(s), got " +
                                 std::to_string(params.size()));
        }
    };
    switch (family) {
        case Family::path: need(1); return path_graph(params[0]);
        case Family::cycle: need(1); return cycle_graph(params[0]);
        case Family::complete: need(1); return complete_graph(params[0]);
        case Family::complete_bipartite:
            need(2);
            return complete_bipartite_graph(params[0], params[1]);
        case Family::star: need(1); return star_graph(params[0]);
        case Family::friendship: {
            need(1);
            if (params[0] < 1) throw ParameterError("friendship needs k >= 1");
            std::vector<Piece> pieces(params[0], Piece{cycle_graph(3), 0});
            return one_vertex_union(pieces);
        }
        case Family::windmill: {
            need(2);
            if (params[0] < 2) throw ParameterError("windmill needs clique size m >= 2");
            if (params[1] < 1) throw ParameterError("windmill needs k >= 1 copies");
            std::vector<Piece> pieces(params[1], Piece{complete_graph(params[0]), 0});
            return one_vertex_union(pieces);
        }
        case Family::bouquet_of_cycles: {
            if (params.empty()) throw ParameterError("bouquet_of_cycles needs at least one cycle");
            std::vector<Piece> pieces;
            for (auto len : params) pieces.push_back(Piece{cycle_graph(len), 0});
            return one_vertex_union(pieces);
        }
    }
    throw ParameterError("unknown family");
}

namespace {

std::vector<std::size_t> parse_number_list(std::string_view text, std::string_view spec) {
    std::vector<std::size_t> out;
    while (!text.empty()) {
        auto comma = text.find(',');
        auto token = text.substr(0, comma);
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) {
            throw ParameterError("bad graph spec '" + std::string(spec) + "'");
        }
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
        if (text.empty()) throw ParameterError("bad graph spec '" + std::string(spec) + "'");
    }
    return out;
}

}  // namespace

Graph parse_graph_spec(std::string_view spec) {
    if (spec.starts_with("g6:")) return from_graph6(spec.substr(3));
    if (auto colon = spec.find(':'); colon != std::string_view::npos) {
        auto fam = parse_family(spec.substr(0, colon));
        if (!fam) throw ParameterError("unknown family in '" + std::string(spec) + "'");
        auto params = parse_number_list(spec.substr(colon + 1), spec);
        return make_family(*fam, params);
    }
    if (spec.empty()) throw ParameterError("empty graph spec");
    auto params = parse_number_list(spec.substr(1), spec);
    if (params.empty()) throw ParameterError("bad graph spec '" + std::string(spec) + "'");
    switch (spec[0]) {
        case 'k':
        case 'K':
            if (params.size() == 2) return make_family(Family::complete_bipartite, params);
            return make_family(Family::complete, params);
        case 'c':
        case 'C': return make_family(Family::cycle, params);
        case 'p':
        case 'P': return make_family(Family::path, params);
        case 's':
        case 'S': return make_family(Family::star, params);
        case 'f':
        case 'F': return make_family(Family::friendship, params);
        case 'w':
        case 'W': return make_family(Family::windmill, params);
        case 'b':
        case 'B': return make_family(Family::bouquet_of_cycles, params);
        default: break;
    }
    throw ParameterError("bad graph spec '" + std::string(spec) + "'");
}

// ---------------------------------------------------------------------------

Coalescence coalesce(const Graph& g1, Vertex v1, const Graph& g2, Vertex v2) {
    check_vertex(g1, v1, "coalesce");
    check_vertex(g2, v2, "coalesce");
    const std::size_t n1 = g1.order();
    const std::size_t n2 = g2.order();
    const Vertex merged = n1 - 1;

    Coalescence out;
    out.merged = merged;
    out.map1.resize(n1);
    out.map2.resize(n2);
    for (Vertex u = 0; u < n1; ++u) out.map1[u] = u < v1 ? u : (u == v1 ? merged : u - 1);
    for (Vertex u = 0; u < n2; ++u) out.map2[u] = u < v2 ? n1 + u : (u == v2 ? merged : n1 + u - 1);

    std::vector<std::pair<Vertex, Vertex>> e;
    e.reserve(g1.size() + g2.size());
    for (const auto& ed : g1.edges()) e.emplace_back(out.map1[ed.u], out.map1[ed.v]);
    for (const auto& ed : g2.edges()) e.emplace_back(out.map2[ed.u], out.map2[ed.v]);
    out.graph = Graph(n1 + n2 - 1, std::move(e));
    return out;
}

Graph attach_leaf(const Graph& g, Vertex v) {
    check_vertex(g, v, "attach_leaf");
    return coalesce(g, v, complete_graph(2), 0).graph;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    auto e = edge_pairs(a);
    for (const auto& ed : b.edges()) e.emplace_back(a.order() + ed.u, a.order() + ed.v);
    return Graph(a.order() + b.order(), std::move(e));
}

Graph edge_join(const Graph& g1, Vertex v1, const Graph& g2, Vertex v2) {
    check_vertex(g1, v1, "edge_join");
    check_vertex(g2, v2, "edge_join");
    auto e = edge_pairs(disjoint_union(g1, g2));
    e.emplace_back(v1, g1.order() + v2);
    return Graph(g1.order() + g2.order(), std::move(e));
}

Graph one_vertex_union(std::span<const Piece> pieces) {
    if (pieces.empty()) throw ParameterError("one_vertex_union needs at least one piece");
    for (const auto& p : pieces) check_vertex(p.graph, p.vertex, "one_vertex_union");

    Graph acc = pieces.front().graph;
    Vertex hub = pieces.front().vertex;
    for (std::size_t i = 1; i < pieces.size(); ++i) {
        auto c = coalesce(acc, hub, pieces[i].graph, pieces[i].vertex);
        acc = std::move(c.graph);
        hub = c.merged;
    }
    // Move the hub to label 0, keeping the others in order.
    std::vector<Vertex> perm(acc.order());
    for (Vertex u = 0; u < acc.order(); ++u) perm[u] = u < hub ? u + 1 : (u == hub ? 0 : u);
    return relabel(acc, perm);
}

Graph delete_vertex(const Graph& g, Vertex v) {
    check_vertex(g, v, "delete_vertex");
    std::vector<std::pair<Vertex, Vertex>> e;
    for (const auto& ed : g.edges()) {
        if (ed.u == v || ed.v == v) continue;
        e.emplace_back(ed.u > v ? ed.u - 1 : ed.u, ed.v > v ? ed.v - 1 : ed.v);
    }
    return Graph(g.order() - 1, std::move(e));
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
    if (perm.size() != g.order()) throw ParameterError("relabel: permutation has wrong length");
    std::vector<bool> hit(g.order(), false);
    for (Vertex p : perm) {
        if (p >= g.order() || hit[p]) throw ParameterError("relabel: not a permutation");
        hit[p] = true;
    }
    std::vector<std::pair<Vertex, Vertex>> e;
    for (const auto& ed : g.edges()) e.emplace_back(perm[ed.u], perm[ed.v]);
    return Graph(g.order(), std::move(e));
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
    std::vector<std::size_t> index(g.order(), g.order());
    for (std::size_t k = 0; k < keep.size(); ++k) {
        check_vertex(g, keep[k], "induced_subgraph");
        if (k > 0 && keep[k] <= keep[k - 1]) {
            throw ParameterError("induced_subgraph: vertex list must be strictly increasing");
        }
        index[keep[k]] = k;
    }
    std::vector<std::pair<Vertex, Vertex>> e;
    for (const auto& ed : g.edges()) {
        if (index[ed.u] < g.order() && index[ed.v] < g.order()) e.emplace_back(index[ed.u], index[ed.v]);
    }
    return Graph(keep.size(), std::move(e));
}

// ---------------------------------------------------------------------------

namespace {

struct Colouring {
    std::vector<int> colour;
    std::vector<Vertex> parent;
    std::vector<std::size_t> depth;
    std::optional<Edge> conflict;
};

Colouring bfs_colour(const Graph& g) {
    const auto n = g.order();
    auto adj = g.adjacency();
    Colouring c{std::vector<int>(n, -1), std::vector<Vertex>(n, n), std::vector<std::size_t>(n, 0), {}};
    for (Vertex s = 0; s < n; ++s) {
        if (c.colour[s] != -1) continue;
        c.colour[s] = 0;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            for (Vertex w : adj[u]) {
                if (c.colour[w] == -1) {
                    c.colour[w] = 1 - c.colour[u];
                    c.parent[w] = u;
                    c.depth[w] = c.depth[u] + 1;
                    q.push(w);
                } else if (c.colour[w] == c.colour[u] && !c.conflict) {
                    c.conflict = Edge{std::min(u, w), std::max(u, w)};
                }
            }
        }
    }
    return c;
}

}  // namespace

std::optional<Bipartition> bipartition(const Graph& g) {
    auto c = bfs_colour(g);
    if (c.conflict) return std::nullopt;
    Bipartition b;
    for (Vertex v = 0; v < g.order(); ++v) (c.colour[v] == 0 ? b.left : b.right).push_back(v);
    return b;
}

std::optional<std::vector<Vertex>> find_odd_cycle(const Graph& g) {
    auto c = bfs_colour(g);
    if (!c.conflict) return std::nullopt;
    // Walk both endpoints up the BFS tree to their common ancestor.
    Vertex a = c.conflict->u;
    Vertex b = c.conflict->v;
    std::vector<Vertex> left{a};
    std::vector<Vertex> right{b};
    while (a != b) {
        if (c.depth[a] >= c.depth[b]) {
            a = c.parent[a];
            left.push_back(a);
        } else {
            b = c.parent[b];
            right.push_back(b);
        }
    }
    // Both lists end at the common ancestor; keep it once.
    right.pop_back();
    // ancestor .. u, then across the conflicting edge to v .. back up towards the ancestor.
    std::vector<Vertex> out(left.rbegin(), left.rend());
    out.insert(out.end(), right.begin(), right.end());
    return out;
}

bool is_valid_bipartition(const Graph& g, const Bipartition& b) {
    std::vector<int> side(g.order(), -1);
    for (Vertex v : b.left) {
        if (v >= g.order() || side[v] != -1) return false;
        side[v] = 0;
    }
    for (Vertex v : b.right) {
        if (v >= g.order() || side[v] != -1) return false;
        side[v] = 1;
    }
    if (std::find(side.begin(), side.end(), -1) != side.end()) return false;
    return std::all_of(g.edges().begin(), g.edges().end(),
                       [&](const Edge& e) { return side[e.u] != side[e.v]; });
}

}  // namespace permlab
