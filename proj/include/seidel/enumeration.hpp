#pragma once

// Counting switching classes of Seidel matrices with largest eigenvalue at
// most 3: the E_8 pair-class pipeline, the A_m and D_m one-class families,
// the s / s_e / omega tables and a brute-force cross-check.

#include "seidel/graph.hpp"
#include "seidel/orbits.hpp"
#include "seidel/root_lattice.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace seidel {

/// Largest subset size of the 28 E_8 pair classes.
inline constexpr int kE8Classes = 28;

/// E_8 with the switching root r = e_7 + e_8, its 28 pair classes, and
/// the groups acting on them. Built once per process.
struct E8Context {
    WeylAction weyl;
    RootVector r;
    int r_index = 0;
    std::vector<PairClass> classes;
    PermGroup stabilizer;  // W(E_8)_r on the 240 roots
    PermGroup image;       // its action on the 28 classes
};

const E8Context& e8_context();

/// Class representatives u_i for a subset of class indices.
std::vector<RootVector> class_representatives(const Subset& subset);

/// Switching class of the graph whose A + 2I is the Gram matrix of the
/// chosen representatives.
SwitchingClassKey phi(const Subset& subset);

struct OmegaTable {
    std::vector<long> omega;                   // n = 0..28
    std::vector<mpz_class> raw_orbit_counts;   // c(n), n = 0..28

    /// omega(n), 0 outside 0..28.
    long at(int n) const;
};

/// Orbit counts of the 28-point image group with the n = 6 fibre
/// correction applied. Cached after the first call.
OmegaTable omega_table(unsigned threads = 1);

/// Witness vectors, switching root and resulting graph for a family member.
struct FamilyWitness {
    LatticeSpec lattice;
    RootVector root;
    std::vector<RootVector> vectors;
    Graph graph;
    SwitchingClassKey key;
};

/// {e_i - e_{n+2} : i = 1..n} in A_{n+1} with r = e_{n+1} - e_{n+2}.
FamilyWitness kn_witness(int n);
SwitchingClassKey construct_Kn_class(int n);

/// m >= 4 and 2(m - 2) >= n >= m - 1.
bool dst_feasible(int n, int m);
/// {e_m + e_i : i = 1..m-2} and {e_m - e_i : i = 1..n-m+2} in D_m with
/// r = e_{m-1} + e_m. Throws std::range_error when infeasible.
FamilyWitness dst_witness(int n, int m);
SwitchingClassKey construct_Dst_class(int n, int m);

/// The values m for which D_{m-2, n-m+2} contributes at size n >= 8;
/// include_top adds m = n + 1 (the K_n-type member of D_{n+1}).
std::vector<int> dst_range(int n, bool include_top);

struct STableRow {
    int n = 0;
    long s = 0;
    long s_e = 0;
    long omega = 0;
    std::vector<std::string> provenance;
};

struct STable {
    std::vector<STableRow> rows;  // n = 0..N
};

/// s(n) and s_e(n) for n = 0..n_max (n_max <= 28).
STable s_table(int n_max, unsigned threads = 1);

struct OracleCounts {
    int n = 0;
    long s = 0;
    long s_e = 0;
    long omega = 0;
};

/// Exhaustive count over all graphs on n <= 7 vertices, no lattices involved.
OracleCounts brute_force_counts(int n, unsigned threads = 1);

/// Representative data for one orbit of n-subsets of pair classes.
struct RepRecord {
    int n = 0;
    Subset subset;
    SwitchingClassKey key;
    long seidel_rank = 0;        // rank(3I - S)
    std::string lattice_family;  // root lattice spanned by r and the u_i
    std::vector<RootVector> roots;
};

/// One record per orbit; n must be within the transversal range.
std::vector<RepRecord> representatives(int n);

struct FiberReport {
    std::size_t representatives = 0;
    std::size_t distinct_keys = 0;
    std::optional<SwitchingClassKey> duplicated_key;
    std::vector<Subset> witnesses;
    std::vector<int> witness_ranks;
    std::vector<BigInt> witness_determinants;
    std::vector<long> complement_min_norms;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

/// The two 6-subset orbits sharing the K_6 switching class.
FiberReport verify_fiber_n6();

struct CaoCheck {
    bool max_eig_le_3 = false;
    bool cone_psd = false;
    std::size_t seidel_rank = 0;  // rank(3I - S)
    std::size_t cone_rank = 0;    // rank(A(cone) + 2I)

    bool holds() const { return max_eig_le_3 == cone_psd && (!max_eig_le_3 || seidel_rank + 1 == cone_rank); }
};

CaoCheck check_cao(const Graph& g);

struct CaoReport {
    std::size_t samples = 0;
    std::size_t bounded = 0;  // samples with largest eigenvalue <= 3
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

/// Random graphs on 1..n_max vertices (n_max <= 10) with varying edge density.
CaoReport verify_cao(int n_max, std::size_t samples, std::uint64_t seed);

} // namespace seidel
