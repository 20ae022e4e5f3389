#include "seidel/graph.hpp"
#include "seidel/parallel.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace seidel {

namespace {

void check_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw std::out_of_range("vertex index out of range");
}

} // namespace

Graph::Graph(int order) : n_(order) {
    if (order < 0 || order > kMaxVertices) throw std::out_of_range("graph order must be in [0, 32]");
}

Graph Graph::complete(int order) {
    Graph g(order);
    for (int v = 0; v < order; ++v) g.adj_[v] = g.all_vertices() & ~(1U << v);
    return g;
}

Graph Graph::cycle(int order) {
    Graph g(order);
    if (order < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    for (int v = 0; v < order; ++v) g.add_edge(v, (v + 1) % order);
    return g;
}

Graph Graph::from_edges(int order, const std::vector<std::pair<int, int>>& edges) {
    Graph g(order);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph Graph::from_rows(int order, const std::vector<std::uint32_t>& rows) {
    Graph g(order);
    if (rows.size() != static_cast<std::size_t>(order)) throw std::invalid_argument("from_rows: wrong row count");
    for (int v = 0; v < order; ++v) {
        if (rows[v] & ~g.all_vertices()) throw std::invalid_argument("from_rows: bit beyond order");
        if ((rows[v] >> v) & 1U) throw std::invalid_argument("from_rows: loop");
        g.adj_[v] = rows[v];
    }
    for (int u = 0; u < order; ++u)
        for (int v = 0; v < order; ++v)
            if (g.adjacent(u, v) != g.adjacent(v, u)) throw std::invalid_argument("from_rows: not symmetric");
    return g;
}

int Graph::degree(int v) const { return std::popcount(adj_[v]); }

int Graph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += std::popcount(adj_[v]);
    return total / 2;
}

void Graph::add_edge(int u, int v) {
    check_vertex(*this, u);
    check_vertex(*this, v);
    if (u == v) throw std::invalid_argument("loops are not allowed");
    adj_[u] |= 1U << v;
    adj_[v] |= 1U << u;
}

void Graph::remove_edge(int u, int v) {
    check_vertex(*this, u);
    check_vertex(*this, v);
    adj_[u] &= ~(1U << v);
    adj_[v] &= ~(1U << u);
}

void Graph::toggle_edge(int u, int v) {
    if (adjacent(u, v))
        remove_edge(u, v);
    else
        add_edge(u, v);
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
    if (perm.size() != static_cast<std::size_t>(n_)) throw std::invalid_argument("relabeled: wrong permutation size");
    Graph out(n_);
    for (int u = 0; u < n_; ++u) {
        std::uint32_t row = 0;
        for (std::uint32_t nb = adj_[u]; nb; nb &= nb - 1) row |= 1U << perm[std::countr_zero(nb)];
        out.adj_[perm[u]] = row;
    }
    return out;
}

Graph Graph::complement() const {
    Graph out(n_);
    for (int v = 0; v < n_; ++v) out.adj_[v] = ~adj_[v] & all_vertices() & ~(1U << v);
    return out;
}

bool Graph::is_connected() const {
    if (n_ == 0) return true;
    std::uint32_t seen = 1U, frontier = 1U;
    while (frontier) {
        std::uint32_t next = 0;
        for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj_[std::countr_zero(f)];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == all_vertices();
}

IntMatrix adjacency_matrix(const Graph& g) {
    const int n = g.order();
    IntMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g.adjacent(i, j)) a(i, j) = 1;
    return a;
}

IntMatrix seidel_of_graph(const Graph& g) {
    const int n = g.order();
    IntMatrix s(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) s(i, j) = g.adjacent(i, j) ? -1 : 1;
    return s;
}

Graph switch_graph(const Graph& g, VertexSet u) {
    const int n = g.order();
    const VertexSet all = g.all_vertices();
    if (u & ~all) throw std::invalid_argument("switching set is not a subset of V(G)");
    std::vector<std::uint32_t> rows(n);
    for (int v = 0; v < n; ++v) {
        const VertexSet other_side = ((u >> v) & 1U) ? (all & ~u) : u;
        rows[v] = g.neighbors(v) ^ other_side;
    }
    return Graph::from_rows(n, rows);
}

Graph cone(const Graph& g) {
    const int n = g.order();
    if (n >= kMaxVertices) throw std::out_of_range("cone: order would exceed 32 vertices");
    Graph out(n + 1);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v)) out.add_edge(u, v);
    for (int v = 0; v < n; ++v) out.add_edge(v, n);
    return out;
}

Graph d_graph(int s, int t) {
    if (s < t || t < 0) throw std::invalid_argument("D_{s,t} needs s >= t >= 0");
    Graph g = Graph::complete(s + t);
    for (int i = 0; i < t; ++i) g.remove_edge(i, s + i);
    return g;
}

bool isomorphic(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.edge_count() == b.edge_count() && canonical_form(a) == canonical_form(b);
}

std::string SwitchingClassKey::to_hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (std::uint8_t b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 15]);
    }
    return out;
}

SwitchingClassKey SwitchingClassKey::from_hex(std::string_view hex) {
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        throw std::invalid_argument("key hex must be lowercase hexadecimal");
    };
    if (hex.size() % 2 != 0 || hex.empty()) throw std::invalid_argument("key hex has odd or zero length");
    SwitchingClassKey key;
    for (std::size_t i = 0; i < hex.size(); i += 2)
        key.bytes.push_back(static_cast<std::uint8_t>(nibble(hex[i]) * 16 + nibble(hex[i + 1])));
    const int n = key.bytes.front();
    if (n > kMaxVertices || key.bytes.size() != 1 + (static_cast<std::size_t>(n * (n - 1) / 2) + 7) / 8)
        throw std::invalid_argument("key hex length does not match its vertex count");
    return key;
}

SwitchingClassKey pack_key(const Graph& g) {
    const int n = g.order();
    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    SwitchingClassKey key;
    key.bytes.assign(1 + (bits + 7) / 8, 0);
    key.bytes[0] = static_cast<std::uint8_t>(n);
    std::size_t pos = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++pos)
            if (g.adjacent(i, j)) key.bytes[1 + pos / 8] |= static_cast<std::uint8_t>(0x80U >> (pos % 8));
    return key;
}

Graph SwitchingClassKey::representative() const {
    const int n = order();
    Graph g(n);
    std::size_t pos = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++pos)
            if (bytes.at(1 + pos / 8) & (0x80U >> (pos % 8))) g.add_edge(i, j);
    return g;
}

SwitchingClassKey canonical_key(const Graph& g) {
    const int n = g.order();
    if (n <= 1) return pack_key(g);
    SwitchingClassKey best;
    for (int v = 0; v < n; ++v) {
        // Switching by N(v) isolates v; the resulting graph is unique for v.
        SwitchingClassKey k = pack_key(canonical_form(switch_graph(g, g.neighbors(v))));
        if (v == 0 || k < best) best = std::move(k);
    }
    return best;
}

Graph graph_from_code(int n, std::uint64_t code) {
    Graph g(n);
    int pos = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++pos)
            if ((code >> pos) & 1U) g.add_edge(i, j);
    return g;
}

std::vector<SwitchingClassKey> all_switching_classes(int n, unsigned threads, bool allow_eight) {
    if (n < 0) throw std::invalid_argument("all_switching_classes: negative order");
    if (n > 8 || (n == 8 && !allow_eight))
        throw std::invalid_argument("all_switching_classes: n > 7 needs the explicit n = 8 override (max 8)");
    const std::uint64_t count = std::uint64_t{1} << (n * (n - 1) / 2);
    std::vector<std::vector<SwitchingClassKey>> partial(std::max(1U, threads));
    parallel_chunks(count, threads, [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
        std::vector<SwitchingClassKey>& out = partial[w];
        for (std::uint64_t code = begin; code < end; ++code) {
            out.push_back(canonical_key(graph_from_code(n, code)));
            if (out.size() >= 4096) {
                std::sort(out.begin(), out.end());
                out.erase(std::unique(out.begin(), out.end()), out.end());
            }
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    });
    std::vector<SwitchingClassKey> merged;
    for (auto& p : partial) merged.insert(merged.end(), p.begin(), p.end());
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    return merged;
}

} // namespace seidel
