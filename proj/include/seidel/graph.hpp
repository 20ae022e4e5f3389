#pragma once

// Simple graphs on at most 32 vertices, their Seidel matrices, switching,
// cones, and canonical keys for switching classes.

#include "seidel/exact_linalg.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace seidel {

inline constexpr int kMaxVertices = 32;

/// Vertex subset as a bitmask; bit v set means v is in the set.
using VertexSet = std::uint32_t;

class Graph {
public:
    Graph() = default;
    explicit Graph(int order);

    static Graph empty(int order) { return Graph(order); }
    static Graph complete(int order);
    static Graph cycle(int order);
    static Graph from_edges(int order, const std::vector<std::pair<int, int>>& edges);
    /// Graph whose adjacency rows are the given bitmasks (must be symmetric, loop-free).
    static Graph from_rows(int order, const std::vector<std::uint32_t>& rows);

    int order() const { return n_; }
    bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
    VertexSet neighbors(int v) const { return adj_[v]; }
    int degree(int v) const;
    int edge_count() const;
    VertexSet all_vertices() const { return n_ == 32 ? ~0U : ((1U << n_) - 1U); }

    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    void toggle_edge(int u, int v);

    /// Graph with vertex v of *this at position perm[v].
    Graph relabeled(const std::vector<int>& perm) const;
    Graph complement() const;
    bool is_connected() const;

    friend bool operator==(const Graph& a, const Graph& b) = default;

private:
    int n_ = 0;
    std::array<std::uint32_t, kMaxVertices> adj_{};
};

IntMatrix adjacency_matrix(const Graph& g);

/// S(G) = J - I - 2A(G).
IntMatrix seidel_of_graph(const Graph& g);

/// G^U: adjacency kept inside U and inside V \ U, complemented across the cut.
Graph switch_graph(const Graph& g, VertexSet u);

/// Cone over G: one new vertex (index n) adjacent to every vertex of G.
Graph cone(const Graph& g);

/// D_{s,t}: K_{s+t} minus the matching {i, s+i} for i < t.
Graph d_graph(int s, int t);

/// Canonical representative of the isomorphism class of g.
Graph canonical_form(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

/// Identifies a switching class: one byte holding n, then the strict upper
/// triangle of the canonical representative packed row-major, big-endian
/// within each byte.
struct SwitchingClassKey {
    std::vector<std::uint8_t> bytes;

    int order() const { return bytes.empty() ? 0 : bytes.front(); }
    std::string to_hex() const;
    static SwitchingClassKey from_hex(std::string_view hex);
    /// The packed graph (the canonical representative).
    Graph representative() const;

    friend auto operator<=>(const SwitchingClassKey&, const SwitchingClassKey&) = default;
    friend bool operator==(const SwitchingClassKey&, const SwitchingClassKey&) = default;
};

SwitchingClassKey pack_key(const Graph& g);

SwitchingClassKey canonical_key(const Graph& g);

/// Sorted distinct switching-class keys over all 2^(n(n-1)/2) labelled
/// graphs. n <= 7 unless allow_eight is set (then n <= 8).
std::vector<SwitchingClassKey> all_switching_classes(int n, unsigned threads = 1, bool allow_eight = false);

/// Graph on n vertices with edge bits taken from `code` in the order
/// (0,1), (0,2), ..., (n-2,n-1).
Graph graph_from_code(int n, std::uint64_t code);

} // namespace seidel
