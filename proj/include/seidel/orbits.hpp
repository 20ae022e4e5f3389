#pragma once

// Weyl groups acting on root sets, the induced action on pair classes,
// subset-orbit counting and minimal-image orbit transversals.

#include "seidel/perm_group.hpp"
#include "seidel/root_lattice.hpp"

#include <gmpxx.h>

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace seidel {

/// A Weyl group realized as a permutation group on the sorted root list.
struct WeylAction {
    LatticeSpec spec;
    std::vector<RootVector> roots;
    PermGroup group;

    /// Position of v in `roots`; throws std::out_of_range if v is not a root.
    int index_of(const RootVector& v) const;
};

/// Generated by the reflections in all roots (one per pair of opposite roots).
WeylAction weyl_group_on_roots(const LatticeSpec& spec);

PermGroup stabilizer_of_root(const PermGroup& w, int root_index);

/// Action of a root stabilizer on the pair classes {u, r - u}. Throws
/// std::logic_error if some generator moves a class outside the list.
PermGroup induced_action_on_classes(const PermGroup& wr, const std::vector<RootVector>& roots,
                                    const std::vector<PairClass>& classes);

struct SubsetCountTable {
    /// counts[n] = number of orbits on n-subsets, n = 0..degree.
    std::vector<mpz_class> counts;

    mpz_class total() const;
    int degree() const { return static_cast<int>(counts.size()) - 1; }
};

/// Raised when a request is outside the supported range (for example a
/// transversal size that is too expensive to list).
class InfeasibleRequest : public std::range_error {
public:
    using std::range_error::range_error;
};

/// Orbit counts on subsets of every size via Burnside's lemma over all
/// group elements. Groups larger than max_order are rejected.
SubsetCountTable burnside_subset_counts(const PermGroup& g, unsigned threads = 1,
                                        const mpz_class& max_order = 10000000);

/// A set of points, sorted ascending.
using Subset = std::vector<int>;

/// Lexicographically least image of a subset under a fixed group. Point
/// stabilizers along the way are cached, so repeated queries are cheap.
class MinimalImage {
public:
    explicit MinimalImage(const PermGroup& g);

    Subset operator()(const Subset& s);

    const PermGroup& group() const { return *levels_.at({}).group; }

private:
    struct Node {
        std::shared_ptr<PermGroup> group;
        std::vector<int> orbit_min;                 // point -> least point of its orbit
        std::vector<Permutation> to_min;            // point -> element mapping it to orbit_min
    };
    const Node& node(const Subset& prefix);

    int degree_;
    std::map<Subset, Node> levels_;
};

/// Largest subset size listed directly; sizes within this distance of the
/// degree are obtained from complements.
inline constexpr int kTransversalLimit = 8;

bool transversal_feasible(int degree, int n);

/// One lexicographically least subset per orbit on n-subsets, sorted.
/// Throws InfeasibleRequest for sizes strictly between kTransversalLimit
/// and degree - kTransversalLimit.
std::vector<Subset> subset_orbit_transversal(const PermGroup& g, int n);

/// JSON lines {"n": n, "subset": [...]}, one per subset.
std::string transversal_to_jsonl(int n, const std::vector<Subset>& subsets);

/// JSON array of the counts.
std::string count_table_to_json(const SubsetCountTable& table);

} // namespace seidel
