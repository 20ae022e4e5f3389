#include "seidel/graph.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

using namespace seidel;

namespace {

std::uint64_t code_of(const Graph& g) {
    std::uint64_t code = 0;
    int bit = 0;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v, ++bit)
            if (g.adjacent(u, v)) code |= std::uint64_t{1} << bit;
    return code;
}

struct UnionFind {
    std::vector<std::uint64_t> parent;
    explicit UnionFind(std::uint64_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::uint64_t find(std::uint64_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::uint64_t a, std::uint64_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

// Switching classes by closing all labelled graphs under single-vertex
// switchings and adjacent transpositions.
std::vector<std::uint64_t> switching_class_labels(int n) {
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    UnionFind uf(total);
    for (std::uint64_t code = 0; code < total; ++code) {
        const Graph g = graph_from_code(n, code);
        for (int v = 0; v < n; ++v) uf.unite(code, code_of(switch_graph(g, VertexSet{1} << v)));
        for (int v = 0; v + 1 < n; ++v) {
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            std::swap(perm[v], perm[v + 1]);
            uf.unite(code, code_of(g.relabeled(perm)));
        }
    }
    std::vector<std::uint64_t> labels(total);
    for (std::uint64_t c = 0; c < total; ++c) labels[c] = uf.find(c);
    return labels;
}

std::uint64_t min_code_over_permutations(const Graph& g) {
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do best = std::min(best, code_of(g.relabeled(perm)));
    while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::vector<int> random_perm(std::mt19937_64& rng, int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

Graph random_graph(std::mt19937_64& rng, int n, int percent) {
    std::uniform_int_distribution<int> coin(0, 99);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < percent) g.add_edge(u, v);
    return g;
}

} // namespace

TEST_CASE("graph basics") {
    const Graph k4 = Graph::complete(4);
    CHECK(k4.edge_count() == 6);
    CHECK(k4.degree(0) == 3);
    CHECK(k4.complement() == Graph::empty(4));
    CHECK(Graph::cycle(5).is_connected());
    CHECK_FALSE(Graph::empty(2).is_connected());
    CHECK_THROWS_AS(Graph::from_rows(2, {0b10, 0b00}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_rows(1, {0b1}), std::invalid_argument);
    CHECK(Graph::from_rows(2, {0b10, 0b01}) == Graph::complete(2));
    CHECK(d_graph(2, 1) == Graph::from_edges(3, {{0, 1}, {1, 2}}));
    CHECK(d_graph(6, 1).edge_count() == 20);
}

TEST_CASE("Seidel matrix entries") {
    const Graph g = Graph::from_edges(3, {{0, 1}});
    const IntMatrix s = seidel_of_graph(g);
    CHECK(s(0, 0) == 0);
    CHECK(s(0, 1) == -1);
    CHECK(s(0, 2) == 1);
    CHECK(s.is_symmetric());
}

TEST_CASE("switching is conjugation by a diagonal sign matrix") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + trial % 9;
        const Graph g = random_graph(rng, n, 50);
        const VertexSet u = static_cast<VertexSet>(rng()) & g.all_vertices();
        const Graph h = switch_graph(g, u);
        const IntMatrix s = seidel_of_graph(g), t = seidel_of_graph(h);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const int sign = ((u >> i & 1U) == (u >> j & 1U)) ? 1 : -1;
                CHECK(t(i, j) == s(i, j) * sign);
            }
        CHECK(switch_graph(h, u) == g);
        CHECK(switch_graph(g, g.all_vertices() & ~u) == h);
    }
}

TEST_CASE("cone") {
    const Graph c = cone(Graph::empty(3));
    CHECK(c.order() == 4);
    CHECK(c.degree(3) == 3);
    CHECK(c.edge_count() == 3);
    CHECK_THROWS_AS(cone(Graph::empty(32)), std::out_of_range);
}

TEST_CASE("canonical form identifies isomorphism classes on five vertices") {
    std::set<std::uint64_t> oracle;
    std::map<std::uint64_t, Graph> seen;
    bool consistent = true;
    for (std::uint64_t code = 0; code < (1U << 10); ++code) {
        const Graph g = graph_from_code(5, code);
        const std::uint64_t m = min_code_over_permutations(g);
        oracle.insert(m);
        const Graph c = canonical_form(g);
        auto [it, fresh] = seen.emplace(m, c);
        if (!fresh && !(it->second == c)) consistent = false;
    }
    CHECK(consistent);
    std::set<std::uint64_t> forms;
    for (const auto& [m, c] : seen) forms.insert(code_of(c));
    CHECK(forms.size() == oracle.size());
    CHECK(oracle.size() == 34);
}

TEST_CASE("canonical form is invariant under relabelling") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + trial % 20;
        const Graph g = random_graph(rng, n, static_cast<int>(rng() % 101));
        const Graph h = g.relabeled(random_perm(rng, n));
        CHECK(canonical_form(g) == canonical_form(h));
        CHECK(isomorphic(g, h));
    }
    for (const Graph& g : {Graph::complete(20), Graph::empty(25), Graph::cycle(30), d_graph(12, 12)}) {
        const Graph h = g.relabeled(random_perm(rng, g.order()));
        CHECK(canonical_form(g) == canonical_form(h));
    }
    CHECK_FALSE(isomorphic(Graph::cycle(6), d_graph(3, 3)));
}

TEST_CASE("switching classes agree with an exhaustive closure") {
    for (int n = 0; n <= 5; ++n) {
        const auto labels = switching_class_labels(n);
        std::map<std::uint64_t, SwitchingClassKey> key_of_label;
        std::set<SwitchingClassKey> keys;
        bool consistent = true;
        for (std::uint64_t code = 0; code < labels.size(); ++code) {
            const SwitchingClassKey k = canonical_key(graph_from_code(n, code));
            auto [it, fresh] = key_of_label.emplace(labels[code], k);
            if (!fresh && it->second != k) consistent = false;
            keys.insert(k);
        }
        CHECK(consistent);
        CHECK(keys.size() == key_of_label.size());
        CHECK(all_switching_classes(n).size() == key_of_label.size());
    }
}

TEST_CASE("number of switching classes") {
    const std::vector<std::size_t> expected{1, 1, 1, 2, 3, 7, 16};
    for (int n = 0; n <= 6; ++n) CHECK(all_switching_classes(n).size() == expected[n]);
    CHECK(all_switching_classes(6, 3) == all_switching_classes(6, 1));
    CHECK_THROWS_AS(all_switching_classes(9), std::invalid_argument);
    CHECK_THROWS_AS(all_switching_classes(8), std::invalid_argument);
}

TEST_CASE("keys are invariant under switching and relabelling") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + trial % 14;
        const Graph g = random_graph(rng, n, static_cast<int>(rng() % 101));
        const VertexSet u = static_cast<VertexSet>(rng()) & g.all_vertices();
        const Graph h = switch_graph(g, u).relabeled(random_perm(rng, n));
        CHECK(canonical_key(g) == canonical_key(h));
    }
    // Opposite spectra, so not switching equivalent.
    CHECK(canonical_key(Graph::complete(5)) != canonical_key(Graph::empty(5)));
    CHECK(canonical_key(Graph::empty(4)) == canonical_key(Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}})));
}

TEST_CASE("key serialization") {
    const SwitchingClassKey k = canonical_key(Graph::complete(6));
    CHECK(k.order() == 6);
    CHECK(SwitchingClassKey::from_hex(k.to_hex()) == k);
    CHECK(k.to_hex().size() == 2 * (1 + (15 + 7) / 8));
    CHECK(isomorphic(k.representative(), switch_graph(Graph::complete(6), 1)));
    CHECK(canonical_key(Graph(0)).to_hex() == "00");
    CHECK_THROWS(SwitchingClassKey::from_hex("0"));
    CHECK_THROWS(SwitchingClassKey::from_hex("06ff"));
    CHECK_THROWS(SwitchingClassKey::from_hex("zz"));
}
