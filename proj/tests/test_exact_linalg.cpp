#include "seidel/exact_linalg.hpp"
#include "seidel/graph.hpp"

#include <doctest.h>

#include <random>

using namespace seidel;

namespace {

// Cofactor expansion along the first row.
BigInt laplace_det(const IntMatrix& m) {
    const std::size_t n = m.order();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    BigInt total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j) == 0) continue;
        IntMatrix minor(n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0, cc = 0; c < n; ++c)
                if (c != j) minor(r - 1, cc++) = m(r, c);
        const BigInt term = m(0, j) * laplace_det(minor);
        total += (j % 2 == 0) ? term : BigInt(-term);
    }
    return total;
}

std::size_t rational_rank(const IntMatrix& m) {
    const std::size_t n = m.order();
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < n; ++c) {
        std::size_t p = r;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const mpq_class f = a[i][c] / a[r][c];
            for (std::size_t k = c; k < n; ++k) a[i][k] -= f * a[r][k];
        }
        ++r;
    }
    return r;
}

// Positive semidefinite iff every principal minor is nonnegative.
bool psd_by_minors(const IntMatrix& m) {
    const std::size_t n = m.order();
    for (unsigned mask = 1; mask < (1U << n); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1U) idx.push_back(i);
        IntMatrix sub(idx.size());
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < idx.size(); ++j) sub(i, j) = m(idx[i], idx[j]);
        if (laplace_det(sub) < 0) return false;
    }
    return true;
}

IntMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, int spread) {
    std::uniform_int_distribution<int> d(-spread, spread);
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = d(rng);
    return m;
}

// B * B^T for a random integer B with k columns; positive semidefinite of rank <= k.
IntMatrix random_gram(std::mt19937_64& rng, std::size_t n, std::size_t k) {
    std::uniform_int_distribution<int> d(-2, 2);
    std::vector<std::vector<long>> b(n, std::vector<long>(k));
    for (auto& row : b)
        for (auto& x : row) x = d(rng);
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            long s = 0;
            for (std::size_t t = 0; t < k; ++t) s += b[i][t] * b[j][t];
            m(i, j) = s;
        }
    return m;
}

Graph random_graph(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> coin(0, 99), dens(0, 100);
    const int p = dens(rng);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) g.add_edge(u, v);
    return g;
}

IntPolynomial poly(std::vector<long> c) {
    IntPolynomial p;
    for (long x : c) p.coeffs.emplace_back(x);
    return p;
}

} // namespace

TEST_CASE("rank of small fixed matrices") {
    CHECK(rank(IntMatrix(5)) == 0);
    CHECK(rank(seidel_of_graph(Graph::empty(4)).shifted_negation(3)) == 3);
    CHECK(rank(IntMatrix::identity(6)) == 6);
    CHECK(rank(IntMatrix(0)) == 0);
}

TEST_CASE("rank of 3I - S for D_{7,5} agrees with rational elimination") {
    const IntMatrix m = seidel_of_graph(d_graph(7, 5)).shifted_negation(3);
    REQUIRE(m.order() == 12);
    const std::size_t oracle = rational_rank(m);
    CHECK(oracle == 8);
    CHECK(rank(m) == oracle);
}

TEST_CASE("rank and determinant match independent oracles on random matrices") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + trial % 6;
        IntMatrix m = random_symmetric(rng, n, trial % 2 ? 1 : 3);
        if (trial % 5 == 0) m = random_gram(rng, n, 1 + trial % 3);
        CHECK(determinant(m) == laplace_det(m));
        CHECK(rank(m) == rational_rank(m));
    }
}

TEST_CASE("characteristic polynomials") {
    CHECK(char_poly(IntMatrix::identity(2)) == poly({1, -2, 1}));
    CHECK(char_poly(seidel_of_graph(Graph::complete(3))) == poly({2, -3, 0, 1}));
    CHECK(char_poly(IntMatrix(0)) == poly({1}));

    const IntMatrix c5 = seidel_of_graph(Graph::cycle(5));
    const IntPolynomial p = char_poly(c5);
    for (long x = -3; x <= 3; ++x) CHECK(p.evaluate(x) == laplace_det(c5.shifted_negation(x)));
    CHECK(p == poly({0, 25, 0, -10, 0, 1}));
}

TEST_CASE("characteristic polynomial agrees with det(xI - M) and the rank") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t n = 1 + trial % 7;
        IntMatrix m = trial % 3 ? random_symmetric(rng, n, 2) : random_gram(rng, n, 1 + trial % 4);
        const IntPolynomial p = char_poly(m);
        REQUIRE(p.degree() == n);
        CHECK(p.is_monic());
        for (long x = -2; x <= 2; ++x) CHECK(p.evaluate(x) == laplace_det(m.shifted_negation(x)));
        CHECK(rank(m) + p.zero_root_multiplicity() == n);
    }
}

TEST_CASE("positive semidefiniteness") {
    CHECK(is_psd(adjacency_matrix(Graph::complete(4)).plus_identity(2)));
    CHECK_FALSE(is_psd(-IntMatrix::identity(3)));
    CHECK(is_psd(IntMatrix(4)));

    const IntMatrix cone_c5 = adjacency_matrix(cone(Graph::cycle(5))).plus_identity(2);
    CHECK(is_psd(cone_c5) == psd_by_minors(cone_c5));

    // A zero diagonal entry with a nonzero off-diagonal entry in its row.
    CHECK_FALSE(is_psd(IntMatrix{{0, 1}, {1, 0}}));
    CHECK_FALSE(is_psd(IntMatrix{{1, 0, 1}, {0, 0, 0}, {1, 0, 0}}));
}

TEST_CASE("positive semidefiniteness matches Sylvester's criterion on random matrices") {
    std::mt19937_64 rng(13);
    int psd_seen = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t n = 1 + trial % 6;
        IntMatrix m = trial % 2 ? random_gram(rng, n, 1 + trial % 5) : random_symmetric(rng, n, 2);
        if (trial % 4 == 0) m = m.plus_identity(3);
        const bool expected = psd_by_minors(m);
        psd_seen += expected;
        CHECK(is_psd(m) == expected);
    }
    CHECK(psd_seen > 100);
}

TEST_CASE("eigenvalue bound") {
    CHECK(max_eig_le(seidel_of_graph(Graph::complete(6)), 3));
    CHECK_FALSE(max_eig_le(seidel_of_graph(Graph::empty(5)), 3));
    CHECK(max_eig_le(seidel_of_graph(Graph::empty(4)), 3));

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const IntMatrix m = random_symmetric(rng, 1 + trial % 6, 2);
        for (long b = -2; b <= 4; ++b) CHECK(max_eig_le(m, b) == is_psd(m.shifted_negation(b)));
    }
}

TEST_CASE("cone criterion and rank identity over random graphs") {
    std::mt19937_64 rng(19);
    int bounded = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = random_graph(rng, 1 + trial % 8);
        const IntMatrix s = seidel_of_graph(g);
        const IntMatrix c = adjacency_matrix(cone(g)).plus_identity(2);
        const bool lhs = max_eig_le(s, 3);
        REQUIRE(lhs == is_psd(c));
        if (lhs) {
            ++bounded;
            CHECK(rank(s.shifted_negation(3)) + 1 == rank(c));
        }
    }
    CHECK(bounded > 20);
}

TEST_CASE("Hermite normal form and integer kernel") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> d(-4, 4);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t rows = 1 + trial % 5, cols = 2 + trial % 4;
        IntRows a(rows, std::vector<BigInt>(cols));
        for (auto& r : a)
            for (auto& x : r) x = d(rng);

        const IntRows h = hermite_normal_form(a);
        // Same lattice: adding the original rows back changes nothing.
        IntRows both = h;
        both.insert(both.end(), a.begin(), a.end());
        CHECK(hermite_normal_form(both) == h);
        for (const auto& row : h) {
            bool nonzero = false;
            for (const auto& x : row) nonzero |= x != 0;
            CHECK(nonzero);
        }

        const IntRows k = integer_kernel(a, cols);
        for (const auto& v : k)
            for (const auto& r : a) {
                BigInt dot = 0;
                for (std::size_t c = 0; c < cols; ++c) dot += r[c] * v[c];
                CHECK(dot == 0);
            }
        IntMatrix sq(std::max(rows, cols));
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t c = 0; c < cols; ++c) sq(i, c) = a[i][c];
        CHECK(k.size() + rank(sq) == cols);
    }
}
