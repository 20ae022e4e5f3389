#pragma once

// Root systems of the irreducible root lattices A_n, D_n, E_6, E_7, E_8 in
// their standard coordinates. Vectors carry doubled coordinates so the
// half-integer vectors of E_8 stay integral.

#include "seidel/exact_linalg.hpp"
#include "seidel/graph.hpp"

#include <compare>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace seidel {

class RootVector {
public:
    RootVector() = default;
    /// From doubled coordinates.
    explicit RootVector(std::vector<int> coords2) : coords2_(std::move(coords2)) {}
    /// From integer coordinates.
    static RootVector from_integers(const std::vector<int>& coords);
    /// e_i (1-based index, as in the usual notation) in dimension dim.
    static RootVector unit(int dim, int i);
    /// j/2, the all-halves vector.
    static RootVector half_all_ones(int dim);

    int dim() const { return static_cast<int>(coords2_.size()); }
    const std::vector<int>& coords2() const { return coords2_; }
    int operator[](std::size_t i) const { return coords2_[i]; }

    RootVector operator+(const RootVector& o) const;
    RootVector operator-(const RootVector& o) const;
    RootVector operator-() const;
    RootVector scaled(int k) const;

    std::string to_string() const;

    friend auto operator<=>(const RootVector&, const RootVector&) = default;
    friend bool operator==(const RootVector&, const RootVector&) = default;

private:
    std::vector<int> coords2_;
};

/// Raised when a dot product of doubled coordinates is not divisible by 4.
class NonIntegralInner : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// (u, v) = dot(u.coords2, v.coords2) / 4; throws NonIntegralInner if inexact.
long inner(const RootVector& u, const RootVector& v);

/// s_r(x) = x - (x, r) r for a root r.
RootVector reflect(const RootVector& r, const RootVector& x);

enum class Family { A, D, E };

struct LatticeSpec {
    Family family = Family::A;
    int rank = 1;

    static LatticeSpec A(int n) { return {Family::A, n}; }
    static LatticeSpec D(int n) { return {Family::D, n}; }
    static LatticeSpec E(int n) { return {Family::E, n}; }
    /// Parses names like "A7", "D8", "E8".
    static LatticeSpec parse(const std::string& name);

    void validate() const;
    int ambient_dim() const;
    /// Determinant of the Gram matrix of a basis.
    long discriminant() const;
    std::string name() const;

    friend bool operator==(const LatticeSpec&, const LatticeSpec&) = default;
};

/// All norm-2 vectors, sorted lexicographically on coords2.
std::vector<RootVector> roots(const LatticeSpec& spec);

bool contains(const LatticeSpec& spec, const RootVector& v);

/// A_m: e_m - e_{m+1};  D_m: e_{m-1} + e_m;  E_k: e_7 + e_8.
RootVector standard_switching_root(const LatticeSpec& spec);

/// Roots u with (u, r) = 1, in root order.
std::vector<RootVector> n_r(const LatticeSpec& spec, const RootVector& r);

/// The unordered pair {u, r - u}; `representative` is the smaller one.
struct PairClass {
    RootVector representative;
    RootVector root;

    RootVector partner() const { return root - representative; }
    bool contains(const RootVector& v) const { return v == representative || v == partner(); }
};

/// One class per pair {u, r - u} in N_r(L), sorted by representative.
std::vector<PairClass> pair_classes(const LatticeSpec& spec, const RootVector& r);

class GramError : public std::invalid_argument {
public:
    GramError(const std::string& what, int i, int j) : std::invalid_argument(what), first(i), second(j) {}
    int first;
    int second;
};

/// Graph with i ~ j iff (u_i, u_j) = 1; requires norms 2 and
/// off-diagonal products in {0, 1}.
Graph gram_to_graph(std::span<const RootVector> vectors);

IntMatrix gram_matrix(std::span<const RootVector> vectors);

/// Rank and Gram determinant of the lattice spanned by the vectors.
struct LatticeInvariants {
    int rank = 0;
    BigInt determinant = 1;
};
LatticeInvariants lattice_invariants(std::span<const RootVector> vectors);

/// Z-basis (doubled coordinates, HNF rows) of the span.
std::vector<RootVector> span_basis(std::span<const RootVector> vectors);

/// True iff the integer span of the vectors is the whole lattice.
bool generates(std::span<const RootVector> vectors, const LatticeSpec& spec);

/// Irreducible root lattice with the given rank and discriminant, if any.
std::optional<LatticeSpec> identify_root_lattice(int rank, const BigInt& determinant);

struct OrthogonalComplement {
    std::vector<RootVector> basis;
    std::optional<long> min_norm;  // empty when the complement is {0}
};

/// {v in E_8 : (v, g) = 0 for all g} with its minimal nonzero norm.
OrthogonalComplement orth_complement_in_E8(std::span<const RootVector> generators);

} // namespace seidel
