#include "seidel/root_lattice.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

namespace seidel {

RootVector RootVector::from_integers(const std::vector<int>& coords) {
    std::vector<int> c2(coords.size());
    std::transform(coords.begin(), coords.end(), c2.begin(), [](int x) { return 2 * x; });
    return RootVector(std::move(c2));
}

RootVector RootVector::unit(int dim, int i) {
    if (i < 1 || i > dim) throw std::out_of_range("unit vector index out of range");
    std::vector<int> c2(dim, 0);
    c2[i - 1] = 2;
    return RootVector(std::move(c2));
}

RootVector RootVector::half_all_ones(int dim) { return RootVector(std::vector<int>(dim, 1)); }

RootVector RootVector::operator+(const RootVector& o) const {
    if (dim() != o.dim()) throw std::invalid_argument("RootVector: dimension mismatch");
    std::vector<int> c(coords2_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coords2_[i];
    return RootVector(std::move(c));
}

RootVector RootVector::operator-(const RootVector& o) const { return *this + (-o); }

RootVector RootVector::operator-() const { return scaled(-1); }

RootVector RootVector::scaled(int k) const {
    std::vector<int> c(coords2_);
    for (int& x : c) x *= k;
    return RootVector(std::move(c));
}

std::string RootVector::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < coords2_.size(); ++i) {
        if (i) os << ", ";
        if (coords2_[i] % 2 == 0)
            os << coords2_[i] / 2;
        else
            os << coords2_[i] << "/2";
    }
    os << ')';
    return os.str();
}

long inner(const RootVector& u, const RootVector& v) {
    if (u.dim() != v.dim()) throw std::invalid_argument("inner: dimension mismatch");
    long dot = 0;
    for (int i = 0; i < u.dim(); ++i) dot += static_cast<long>(u[i]) * v[i];
    if (dot % 4 != 0)
        throw NonIntegralInner("inner product of " + u.to_string() + " and " + v.to_string() + " is not an integer");
    return dot / 4;
}

RootVector reflect(const RootVector& r, const RootVector& x) {
    return x - r.scaled(static_cast<int>(inner(x, r)));
}

LatticeSpec LatticeSpec::parse(const std::string& name) {
    if (name.size() < 2) throw std::invalid_argument("lattice name too short: " + name);
    LatticeSpec spec;
    switch (name[0]) {
    case 'A': spec.family = Family::A; break;
    case 'D': spec.family = Family::D; break;
    case 'E': spec.family = Family::E; break;
    default: throw std::invalid_argument("unknown lattice family: " + name);
    }
    std::size_t used = 0;
    spec.rank = std::stoi(name.substr(1), &used);
    if (used + 1 != name.size()) throw std::invalid_argument("bad lattice name: " + name);
    spec.validate();
    return spec;
}

void LatticeSpec::validate() const {
    switch (family) {
    case Family::A:
        if (rank < 1) throw std::invalid_argument("A_n needs n >= 1");
        break;
    case Family::D:
        if (rank < 4) throw std::invalid_argument("D_n needs n >= 4");
        break;
    case Family::E:
        if (rank < 6 || rank > 8) throw std::invalid_argument("E_n needs n in {6, 7, 8}");
        break;
    }
}

int LatticeSpec::ambient_dim() const {
    validate();
    switch (family) {
    case Family::A: return rank + 1;
    case Family::D: return rank;
    case Family::E: return 8;
    }
    return 0;
}

long LatticeSpec::discriminant() const {
    validate();
    switch (family) {
    case Family::A: return rank + 1;
    case Family::D: return 4;
    case Family::E: return 9 - rank;  // E6: 3, E7: 2, E8: 1
    }
    return 0;
}

std::string LatticeSpec::name() const {
    const char letter = family == Family::A ? 'A' : family == Family::D ? 'D' : 'E';
    return std::string(1, letter) + std::to_string(rank);
}

namespace {

std::vector<RootVector> plus_minus_pairs(int dim, bool allow_sum) {
    std::vector<RootVector> out;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            if (i == j) continue;
            std::vector<int> c(dim, 0);
            c[i] = 2;
            c[j] = -2;
            out.emplace_back(c);
            if (allow_sum && i < j) {
                c[j] = 2;
                out.emplace_back(c);
                c[i] = c[j] = -2;
                out.emplace_back(c);
            }
        }
    return out;
}

std::vector<RootVector> e8_roots() {
    std::vector<RootVector> out = plus_minus_pairs(8, true);
    for (int mask = 0; mask < 256; ++mask) {
        if (std::popcount(static_cast<unsigned>(mask)) % 2 != 0) continue;
        std::vector<int> c(8);
        for (int i = 0; i < 8; ++i) c[i] = ((mask >> i) & 1) ? -1 : 1;
        out.emplace_back(c);
    }
    return out;
}

bool all_parity(const RootVector& v, int parity) {
    return std::all_of(v.coords2().begin(), v.coords2().end(), [&](int x) { return std::abs(x) % 2 == parity; });
}

long coord_sum2(const RootVector& v) { return std::accumulate(v.coords2().begin(), v.coords2().end(), 0L); }

} // namespace

std::vector<RootVector> roots(const LatticeSpec& spec) {
    spec.validate();
    std::vector<RootVector> out;
    switch (spec.family) {
    case Family::A: out = plus_minus_pairs(spec.rank + 1, false); break;
    case Family::D: out = plus_minus_pairs(spec.rank, true); break;
    case Family::E:
        for (const RootVector& v : e8_roots())
            if (contains(spec, v)) out.push_back(v);
        break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool contains(const LatticeSpec& spec, const RootVector& v) {
    if (v.dim() != spec.ambient_dim()) return false;
    const long sum2 = coord_sum2(v);
    switch (spec.family) {
    case Family::A: return all_parity(v, 0) && sum2 == 0;
    case Family::D: return all_parity(v, 0) && (sum2 / 2) % 2 == 0;
    case Family::E: {
        const bool in_e8 = (all_parity(v, 0) && (sum2 / 2) % 2 == 0) || (all_parity(v, 1) && ((sum2 - 8) / 2) % 2 == 0);
        if (!in_e8) return false;
        if (spec.rank <= 7 && v[0] != v[1]) return false;
        if (spec.rank <= 6 && v[1] != v[2]) return false;
        return true;
    }
    }
    return false;
}

RootVector standard_switching_root(const LatticeSpec& spec) {
    const int dim = spec.ambient_dim();
    switch (spec.family) {
    case Family::A: return RootVector::unit(dim, spec.rank) - RootVector::unit(dim, spec.rank + 1);
    case Family::D: return RootVector::unit(dim, spec.rank - 1) + RootVector::unit(dim, spec.rank);
    case Family::E: return RootVector::unit(8, 7) + RootVector::unit(8, 8);
    }
    return {};
}

namespace {

void require_root(const LatticeSpec& spec, const RootVector& r) {
    if (!contains(spec, r) || inner(r, r) != 2)
        throw std::invalid_argument(r.to_string() + " is not a root of " + spec.name());
}

} // namespace

std::vector<RootVector> n_r(const LatticeSpec& spec, const RootVector& r) {
    require_root(spec, r);
    std::vector<RootVector> out;
    for (const RootVector& u : roots(spec))
        if (inner(u, r) == 1) out.push_back(u);
    return out;
}

std::vector<PairClass> pair_classes(const LatticeSpec& spec, const RootVector& r) {
    std::vector<PairClass> out;
    for (const RootVector& u : n_r(spec, r)) {
        const RootVector partner = r - u;
        if (u < partner) out.push_back({u, r});
    }
    return out;
}

IntMatrix gram_matrix(std::span<const RootVector> vectors) {
    IntMatrix g(vectors.size());
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = 0; j < vectors.size(); ++j) g(i, j) = inner(vectors[i], vectors[j]);
    return g;
}

Graph gram_to_graph(std::span<const RootVector> vectors) {
    const int n = static_cast<int>(vectors.size());
    Graph g(n);
    for (int i = 0; i < n; ++i) {
        if (inner(vectors[i], vectors[i]) != 2)
            throw GramError("vector " + std::to_string(i) + " does not have norm 2", i, i);
        for (int j = i + 1; j < n; ++j) {
            const long p = inner(vectors[i], vectors[j]);
            if (p == 1)
                g.add_edge(i, j);
            else if (p != 0)
                throw GramError("vectors " + std::to_string(i) + " and " + std::to_string(j) + " have inner product " +
                                    std::to_string(p) + ", expected 0 or 1",
                                i, j);
        }
    }
    return g;
}

std::vector<RootVector> span_basis(std::span<const RootVector> vectors) {
    if (vectors.empty()) return {};
    const int dim = vectors.front().dim();
    IntRows rows;
    for (const RootVector& v : vectors) {
        if (v.dim() != dim) throw std::invalid_argument("span_basis: dimension mismatch");
        rows.emplace_back(v.coords2().begin(), v.coords2().end());
    }
    std::vector<RootVector> basis;
    for (const auto& row : hermite_normal_form(std::move(rows))) {
        std::vector<int> c(dim);
        for (int i = 0; i < dim; ++i) c[i] = static_cast<int>(row[i].get_si());
        basis.emplace_back(std::move(c));
    }
    return basis;
}

LatticeInvariants lattice_invariants(std::span<const RootVector> vectors) {
    const std::vector<RootVector> basis = span_basis(vectors);
    LatticeInvariants inv;
    inv.rank = static_cast<int>(basis.size());
    inv.determinant = determinant(gram_matrix(basis));
    return inv;
}

bool generates(std::span<const RootVector> vectors, const LatticeSpec& spec) {
    for (const RootVector& v : vectors)
        if (!contains(spec, v)) throw std::invalid_argument(v.to_string() + " does not lie in " + spec.name());
    const LatticeInvariants inv = lattice_invariants(vectors);
    return inv.rank == spec.rank && inv.determinant == spec.discriminant();
}

std::optional<LatticeSpec> identify_root_lattice(int rank, const BigInt& determinant) {
    if (rank < 1) return std::nullopt;
    if (determinant == rank + 1) return LatticeSpec::A(rank);
    if (rank >= 4 && determinant == 4) return LatticeSpec::D(rank);
    if (rank >= 6 && rank <= 8 && determinant == 9 - rank) return LatticeSpec::E(rank);
    return std::nullopt;
}

OrthogonalComplement orth_complement_in_E8(std::span<const RootVector> generators) {
    const LatticeSpec e8 = LatticeSpec::E(8);
    for (const RootVector& g : generators)
        if (!contains(e8, g)) throw std::invalid_argument(g.to_string() + " does not lie in E8");

    const std::vector<RootVector> all = roots(e8);
    const std::vector<RootVector> e8_basis = span_basis(all);

    IntRows constraints;
    for (const RootVector& g : generators) {
        std::vector<BigInt> row;
        for (const RootVector& b : e8_basis) row.emplace_back(inner(b, g));
        constraints.push_back(std::move(row));
    }
    const IntRows kernel = integer_kernel(constraints, e8_basis.size());

    std::vector<RootVector> vectors;
    for (const auto& coeffs : kernel) {
        std::vector<int> c(8, 0);
        for (std::size_t i = 0; i < e8_basis.size(); ++i)
            for (int k = 0; k < 8; ++k) c[k] += static_cast<int>(coeffs[i].get_si()) * e8_basis[i][k];
        vectors.emplace_back(std::move(c));
    }
    OrthogonalComplement out;
    out.basis = span_basis(vectors);
    if (out.basis.empty()) return out;

    long bound = LONG_MAX;
    for (const RootVector& b : out.basis) bound = std::min(bound, inner(b, b));

    // Exhaustive search of E_8 vectors with norm <= bound (sum of squares of
    // doubled coordinates <= 4 * bound).
    const long budget = 4 * bound;
    const int limit = static_cast<int>(std::sqrt(static_cast<double>(budget))) + 1;
    long best = bound;
    std::vector<int> c(8);
    std::function<void(int, long, int)> dfs = [&](int k, long used, int parity) {
        if (k == 8) {
            if (used == 0) return;
            const RootVector v(c);
            if (!contains(e8, v)) return;
            for (const RootVector& g : generators)
                if (inner(v, g) != 0) return;
            best = std::min(best, used / 4);
            return;
        }
        for (int x = -limit; x <= limit; ++x) {
            if (std::abs(x) % 2 != parity) continue;
            const long next = used + static_cast<long>(x) * x;
            if (next > budget) continue;
            c[k] = x;
            dfs(k + 1, next, parity);
        }
    };
    dfs(0, 0, 0);
    dfs(0, 0, 1);
    out.min_norm = best;
    return out;
}

} // namespace seidel
