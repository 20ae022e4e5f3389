#pragma once

// Permutations and permutation groups with a base and strong generating
// set built by deterministic Schreier-Sims.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace seidel {

/// Bijection on {0, ..., degree-1}. Products compose left to right:
/// (a * b)(x) = b(a(x)).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<std::uint16_t> images);
    static Permutation identity(int degree);
    static Permutation from_images(const std::vector<int>& images);
    /// Permutation given by disjoint cycles, e.g. {{0, 1, 2}, {3, 4}}.
    static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int x) const { return images_[x]; }
    const std::vector<std::uint16_t>& images() const { return images_; }

    bool is_identity() const;
    Permutation inverse() const;
    Permutation operator*(const Permutation& then) const;

    /// Cycle lengths, sorted ascending (fixed points included as 1).
    std::vector<int> cycle_type() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::uint16_t> images_;
};

class PermGroup {
public:
    PermGroup() = default;
    /// Builds a base and strong generating set. The base starts with
    /// `base_prefix` and is extended as needed.
    PermGroup(int degree, std::vector<Permutation> generators, std::vector<int> base_prefix = {});

    int degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return generators_; }
    const std::vector<int>& base() const { return base_; }
    std::size_t base_length() const { return levels_.size(); }
    /// Fundamental orbit at the given base level.
    const std::vector<int>& basic_orbit(std::size_t level) const { return levels_[level].orbit; }
    /// Strong generators fixing base[0..level).
    const std::vector<Permutation>& strong_generators(std::size_t level) const { return levels_[level].gens; }

    mpz_class order() const;
    bool contains(const Permutation& p) const;

    /// Orbit of a point under the whole group, sorted.
    std::vector<int> orbit(int point) const;
    bool is_transitive() const;

    /// Point stabilizer, computed by rebuilding the chain with `point`
    /// first in the base.
    PermGroup stabilizer(int point) const;

    /// Calls fn on every element exactly once, in a fixed order. Elements
    /// are products of one transversal element per level, deepest first.
    void for_each_element(const std::function<void(const Permutation&)>& fn) const;
    /// Same, restricted to elements whose level-0 transversal index lies in
    /// [first, last); used to split enumeration across workers.
    void for_each_element_in(std::size_t first, std::size_t last,
                             const std::function<void(const Permutation&)>& fn) const;

    Permutation random_element(std::mt19937_64& rng) const;

private:
    struct Level {
        int base_point = 0;
        std::vector<Permutation> gens;
        std::vector<int> orbit;
        std::vector<int> slot;                 // point -> index in orbit, -1 if absent
        std::vector<Permutation> transversal;  // maps base_point to orbit[k]
        std::vector<Permutation> inverse;
        std::vector<std::size_t> checked;      // per orbit point: gens already Schreier-checked
    };

    void add_level(int base_point);
    void extend_orbit(Level& level);
    /// Sifts p through levels [from, end). Returns the residue and the
    /// level where sifting stopped (levels_.size() when it went through).
    std::pair<Permutation, std::size_t> sift(Permutation p, std::size_t from) const;
    void schreier_sims();
    void enumerate(std::size_t level, const Permutation& acc, const std::function<void(const Permutation&)>& fn) const;

    int degree_ = 0;
    std::vector<Permutation> generators_;
    std::vector<int> base_;
    std::vector<Level> levels_;
};

} // namespace seidel
