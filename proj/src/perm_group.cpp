#include "seidel/perm_group.hpp"

#include <algorithm>
#include <stdexcept>

namespace seidel {

Permutation::Permutation(std::vector<std::uint16_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (auto x : images_) {
        if (x >= images_.size() || seen[x]) throw std::invalid_argument("Permutation: images are not a bijection");
        seen[x] = true;
    }
}

Permutation Permutation::identity(int degree) {
    std::vector<std::uint16_t> im(degree);
    for (int i = 0; i < degree; ++i) im[i] = static_cast<std::uint16_t>(i);
    Permutation p;
    p.images_ = std::move(im);
    return p;
}

Permutation Permutation::from_images(const std::vector<int>& images) {
    std::vector<std::uint16_t> im(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (images[i] < 0 || images[i] > 0xffff) throw std::invalid_argument("Permutation: image out of range");
        im[i] = static_cast<std::uint16_t>(images[i]);
    }
    return Permutation(std::move(im));
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> im(degree);
    for (int i = 0; i < degree; ++i) im[i] = i;
    for (const auto& c : cycles)
        for (std::size_t k = 0; k < c.size(); ++k) im.at(c[k]) = c[(k + 1) % c.size()];
    return from_images(im);
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != i) return false;
    return true;
}

Permutation Permutation::inverse() const {
    Permutation p;
    p.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) p.images_[images_[i]] = static_cast<std::uint16_t>(i);
    return p;
}

Permutation Permutation::operator*(const Permutation& then) const {
    if (degree() != then.degree()) throw std::invalid_argument("Permutation: degree mismatch");
    Permutation p;
    p.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) p.images_[i] = then.images_[images_[i]];
    return p;
}

std::vector<int> Permutation::cycle_type() const {
    std::vector<int> lengths;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t x = i; !seen[x]; x = images_[x]) {
            seen[x] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

PermGroup::PermGroup(int degree, std::vector<Permutation> generators, std::vector<int> base_prefix)
    : degree_(degree) {
    for (auto& g : generators) {
        if (g.degree() != degree) throw std::invalid_argument("PermGroup: generator degree mismatch");
        if (!g.is_identity() && std::find(generators_.begin(), generators_.end(), g) == generators_.end())
            generators_.push_back(std::move(g));
    }
    for (int b : base_prefix) {
        if (b < 0 || b >= degree) throw std::out_of_range("PermGroup: base point out of range");
        if (std::find(base_.begin(), base_.end(), b) != base_.end())
            throw std::invalid_argument("PermGroup: repeated base point");
        add_level(b);
    }
    for (const Permutation& g : generators_) {
        const bool fixes_base = std::all_of(base_.begin(), base_.end(), [&](int b) { return g(b) == b; });
        if (!fixes_base) continue;
        for (int x = 0; x < degree; ++x)
            if (g(x) != x) {
                add_level(x);
                break;
            }
    }
    for (std::size_t i = 0; i < levels_.size(); ++i) {
        for (const Permutation& g : generators_) {
            bool fixes = true;
            for (std::size_t k = 0; k < i; ++k)
                if (g(base_[k]) != base_[k]) fixes = false;
            if (fixes) levels_[i].gens.push_back(g);
        }
        extend_orbit(levels_[i]);
    }
    schreier_sims();
}

void PermGroup::add_level(int base_point) {
    Level level;
    level.base_point = base_point;
    level.slot.assign(degree_, -1);
    levels_.push_back(std::move(level));
    base_.push_back(base_point);
    extend_orbit(levels_.back());
}

void PermGroup::extend_orbit(Level& level) {
    if (level.orbit.empty()) {
        level.orbit.push_back(level.base_point);
        level.slot[level.base_point] = 0;
        level.transversal.push_back(Permutation::identity(degree_));
        level.inverse.push_back(Permutation::identity(degree_));
        level.checked.push_back(0);
    }
    // Existing transversal elements never change, only new points are added.
    for (std::size_t idx = 0; idx < level.orbit.size(); ++idx) {
        const int beta = level.orbit[idx];
        for (const Permutation& s : level.gens) {
            const int gamma = s(beta);
            if (level.slot[gamma] >= 0) continue;
            level.slot[gamma] = static_cast<int>(level.orbit.size());
            level.orbit.push_back(gamma);
            level.transversal.push_back(level.transversal[idx] * s);
            level.inverse.push_back(level.transversal.back().inverse());
            level.checked.push_back(0);
        }
    }
}

std::pair<Permutation, std::size_t> PermGroup::sift(Permutation p, std::size_t from) const {
    for (std::size_t l = from; l < levels_.size(); ++l) {
        const int beta = p(levels_[l].base_point);
        const int k = levels_[l].slot[beta];
        if (k < 0) return {std::move(p), l};
        p = p * levels_[l].inverse[k];
    }
    return {std::move(p), levels_.size()};
}

void PermGroup::schreier_sims() {
    long i = static_cast<long>(levels_.size()) - 1;
    while (i >= 0) {
        bool restarted = false;
        Level& level = levels_[i];
        for (std::size_t idx = 0; idx < level.orbit.size() && !restarted; ++idx) {
            const int beta = level.orbit[idx];
            while (level.checked[idx] < level.gens.size()) {
                const Permutation& s = level.gens[level.checked[idx]++];
                const int gamma = s(beta);
                Permutation h = level.transversal[idx] * s * level.inverse[level.slot[gamma]];
                if (h.is_identity()) continue;
                auto [residue, j] = sift(std::move(h), static_cast<std::size_t>(i) + 1);
                if (j == levels_.size() && residue.is_identity()) continue;
                if (j == levels_.size()) {
                    int moved = 0;
                    while (residue(moved) == moved) ++moved;
                    add_level(moved);
                }
                for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j; ++l) {
                    levels_[l].gens.push_back(residue);
                    extend_orbit(levels_[l]);
                }
                i = static_cast<long>(j);
                restarted = true;
                break;
            }
        }
        if (!restarted) --i;
    }
}

mpz_class PermGroup::order() const {
    mpz_class o = 1;
    for (const Level& l : levels_) o *= static_cast<unsigned long>(l.orbit.size());
    return o;
}

bool PermGroup::contains(const Permutation& p) const {
    if (p.degree() != degree_) return false;
    auto [residue, j] = sift(p, 0);
    return j == levels_.size() && residue.is_identity();
}

std::vector<int> PermGroup::orbit(int point) const {
    std::vector<int> out{point};
    std::vector<bool> seen(degree_, false);
    seen[point] = true;
    for (std::size_t k = 0; k < out.size(); ++k)
        for (const Permutation& g : generators_) {
            const int y = g(out[k]);
            if (!seen[y]) {
                seen[y] = true;
                out.push_back(y);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

bool PermGroup::is_transitive() const { return degree_ == 0 || static_cast<int>(orbit(0).size()) == degree_; }

PermGroup PermGroup::stabilizer(int point) const {
    std::vector<Permutation> strong;
    for (const Level& l : levels_)
        for (const Permutation& g : l.gens)
            if (std::find(strong.begin(), strong.end(), g) == strong.end()) strong.push_back(g);
    PermGroup rebased(degree_, strong, {point});
    std::vector<Permutation> fixing = rebased.levels_.size() > 1 ? rebased.levels_[1].gens : std::vector<Permutation>{};
    return PermGroup(degree_, std::move(fixing));
}

void PermGroup::enumerate(std::size_t level, const Permutation& acc,
                          const std::function<void(const Permutation&)>& fn) const {
    if (level == levels_.size()) {
        fn(acc);
        return;
    }
    for (const Permutation& u : levels_[level].transversal) enumerate(level + 1, u * acc, fn);
}

void PermGroup::for_each_element(const std::function<void(const Permutation&)>& fn) const {
    enumerate(0, Permutation::identity(degree_), fn);
}

void PermGroup::for_each_element_in(std::size_t first, std::size_t last,
                                    const std::function<void(const Permutation&)>& fn) const {
    if (levels_.empty()) {
        if (first == 0 && last > 0) fn(Permutation::identity(degree_));
        return;
    }
    const auto& top = levels_[0].transversal;
    last = std::min(last, top.size());
    for (std::size_t k = first; k < last; ++k) enumerate(1, top[k], fn);
}

Permutation PermGroup::random_element(std::mt19937_64& rng) const {
    Permutation acc = Permutation::identity(degree_);
    for (const Level& l : levels_) {
        std::uniform_int_distribution<std::size_t> pick(0, l.transversal.size() - 1);
        acc = l.transversal[pick(rng)] * acc;
    }
    return acc;
}

} // namespace seidel
