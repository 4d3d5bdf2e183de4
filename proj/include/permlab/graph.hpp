#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace permlab {

using Vertex = std::size_t;

/// Undirected edge stored with `u < v`.
struct Edge {
    Vertex u;
    Vertex v;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Immutable value type. The edge list is kept sorted so iteration order and
/// serialization are deterministic. Construction validates that there are no
/// loops, no repeated edges and no out-of-range endpoints.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);
    Graph(std::size_t n, std::vector<std::pair<Vertex, Vertex>> edges);

    std::size_t order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    bool has_edge(Vertex a, Vertex b) const;
    std::size_t degree(Vertex v) const;
    std::vector<std::size_t> degrees() const;
    /// Neighbours of `v` in increasing order.
    std::vector<Vertex> neighbors(Vertex v) const;
    std::vector<std::vector<Vertex>> adjacency() const;

    bool is_connected() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
};

struct Bipartition {
    std::vector<Vertex> left;
    std::vector<Vertex> right;
};

// ---------------------------------------------------------------------------
// Named families.

enum class Family {
    path,
    cycle,
    complete,
    complete_bipartite,
    star,
    friendship,
    windmill,
    bouquet_of_cycles,
};

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

/// Builds a named family.
///
/// Parameters and labelling per family:
///   path {n}                  n >= 1, edges {i, i+1}
///   cycle {n}                 n >= 3, edges {i, i+1 mod n}
///   complete {n}              n >= 1
///   complete_bipartite {a, b} a, b >= 1, left side 0..a-1
///   star {k}                  K_{1,k}, k >= 0, centre 0
///   friendship {k}            k >= 1 triangles sharing hub 0
///   windmill {m, k}           k >= 1 copies of K_m (m >= 2) sharing hub 0
///   bouquet_of_cycles {l...}  cycles of the given lengths (each >= 3) sharing hub 0
Graph make_family(Family family, std::span<const std::size_t> params);

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph complete_bipartite_graph(std::size_t a, std::size_t b);
Graph star_graph(std::size_t leaves);

/// Parses short graph descriptions used by the CLI and tests:
/// `k4`, `c5`, `p3`, `s3` (star), `k2,3`, `f2` (friendship), `w4,3` (windmill
/// of three K4), `b3,4` (bouquet of C3 and C4), or `g6:<graph6>`.
Graph parse_graph_spec(std::string_view spec);

// ---------------------------------------------------------------------------
// Closure operations.

/// Result of gluing two graphs at a vertex.
///
/// Vertex order of the result is (g1 without v1, merged, g2 without v2), each
/// part keeping its original relative order. `map1[u]` / `map2[u]` give the new
/// label of old vertex `u` of g1 / g2 (both map v1, v2 to `merged`).
struct Coalescence {
    Graph graph;
    Vertex merged;
    std::vector<Vertex> map1;
    std::vector<Vertex> map2;
};

Coalescence coalesce(const Graph& g1, Vertex v1, const Graph& g2, Vertex v2);

/// Same labelled graph as `coalesce(g, v, K2, 0).graph`: `v` moves to
/// position n-1 and the leaf is vertex n.
Graph attach_leaf(const Graph& g, Vertex v);

/// Disjoint union (g1 first, then g2 shifted by |g1|) plus the edge {v1, v2}.
Graph edge_join(const Graph& g1, Vertex v1, const Graph& g2, Vertex v2);

struct Piece {
    Graph graph;
    Vertex vertex;
};

/// Identifies the marked vertex of every piece into hub 0. Remaining vertices
/// follow piece by piece in their original order.
Graph one_vertex_union(std::span<const Piece> pieces);

/// Removes `v`; surviving vertices keep their relative order.
Graph delete_vertex(const Graph& g, Vertex v);

Graph disjoint_union(const Graph& a, const Graph& b);

/// Applies `perm` as a relabelling: old vertex u becomes perm[u].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

/// Subgraph induced on `keep` (order-preserving relabelling).
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

// ---------------------------------------------------------------------------
// Bipartiteness.

/// BFS 2-colouring; colour 0 goes to the lowest vertex of each component.
std::optional<Bipartition> bipartition(const Graph& g);

/// An odd cycle as a closed vertex sequence (first vertex not repeated), or
/// nullopt when the graph is bipartite.
std::optional<std::vector<Vertex>> find_odd_cycle(const Graph& g);

bool is_valid_bipartition(const Graph& g, const Bipartition& b);

// ---------------------------------------------------------------------------
// Text formats.

/// graph6 without the optional `>>graph6<<` header; n <= 62.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

/// "n <count>" followed by one "u v" pair per line.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(std::string_view text);

}  // namespace permlab
