#include "seidel/orbits.hpp"

#include "seidel/parallel.hpp"

#include <json.hpp>

#include <algorithm>
#include <climits>
#include <set>
#include <sstream>

namespace seidel {

int WeylAction::index_of(const RootVector& v) const {
    auto it = std::lower_bound(roots.begin(), roots.end(), v);
    if (it == roots.end() || *it != v) throw std::out_of_range("not a root of " + spec.name() + ": " + v.to_string());
    return static_cast<int>(it - roots.begin());
}

WeylAction weyl_group_on_roots(const LatticeSpec& spec) {
    spec.validate();
    WeylAction action{spec, roots(spec), {}};
    std::vector<Permutation> reflections;
    for (const RootVector& r : action.roots) {
        if (r < -r) continue;  // s_r = s_{-r}
        std::vector<int> images;
        images.reserve(action.roots.size());
        for (const RootVector& x : action.roots) images.push_back(action.index_of(reflect(r, x)));
        reflections.push_back(Permutation::from_images(images));
    }
    action.group = PermGroup(static_cast<int>(action.roots.size()), std::move(reflections));
    return action;
}

PermGroup stabilizer_of_root(const PermGroup& w, int root_index) {
    if (root_index < 0 || root_index >= w.degree()) throw std::out_of_range("stabilizer_of_root: bad point");
    return w.stabilizer(root_index);
}

PermGroup induced_action_on_classes(const PermGroup& wr, const std::vector<RootVector>& roots,
                                    const std::vector<PairClass>& classes) {
    auto index_of = [&](const RootVector& v) {
        auto it = std::lower_bound(roots.begin(), roots.end(), v);
        if (it == roots.end() || *it != v) throw std::logic_error("pair class member is not a root: " + v.to_string());
        return static_cast<int>(it - roots.begin());
    };
    std::vector<int> class_of(roots.size(), -1);
    std::vector<int> rep_index;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        rep_index.push_back(index_of(classes[i].representative));
        class_of[rep_index.back()] = static_cast<int>(i);
        class_of[index_of(classes[i].partner())] = static_cast<int>(i);
    }
    std::vector<Permutation> gens;
    for (const Permutation& g : wr.generators()) {
        std::vector<int> images(classes.size());
        for (std::size_t i = 0; i < classes.size(); ++i) {
            const int target = class_of[g(rep_index[i])];
            if (target < 0) throw std::logic_error("induced action: generator leaves the pair classes");
            images[i] = target;
        }
        gens.push_back(Permutation::from_images(images));
    }
    return PermGroup(static_cast<int>(classes.size()), std::move(gens));
}

mpz_class SubsetCountTable::total() const {
    mpz_class t = 0;
    for (const auto& c : counts) t += c;
    return t;
}

SubsetCountTable burnside_subset_counts(const PermGroup& g, unsigned threads, const mpz_class& max_order) {
    const mpz_class order = g.order();
    if (order > max_order)
        throw InfeasibleRequest("burnside_subset_counts: group of order " + order.get_str() +
                                " is too large to enumerate");
    const int m = g.degree();

    // Histogram of cycle types; the subset generating function of an
    // element depends only on its cycle type.
    using Histogram = std::map<std::vector<int>, unsigned long>;
    const std::size_t top = g.base_length() == 0 ? 1 : g.basic_orbit(0).size();
    std::vector<Histogram> partial(std::max(1U, threads));
    parallel_chunks(top, threads, [&](unsigned worker, std::uint64_t begin, std::uint64_t end) {
        Histogram& h = partial[worker];
        g.for_each_element_in(begin, end, [&](const Permutation& p) { ++h[p.cycle_type()]; });
    });
    Histogram hist;
    for (const Histogram& h : partial)
        for (const auto& [type, count] : h) hist[type] += count;

    std::vector<mpz_class> sum(m + 1, 0);
    for (const auto& [type, count] : hist) {
        std::vector<mpz_class> poly(m + 1, 0);
        poly[0] = 1;
        int deg = 0;
        for (int len : type) {
            for (int k = deg; k >= 0; --k) poly[k + len] += poly[k];
            deg += len;
        }
        for (int k = 0; k <= m; ++k) sum[k] += poly[k] * count;
    }
    SubsetCountTable table;
    for (int k = 0; k <= m; ++k) {
        if (!mpz_divisible_p(sum[k].get_mpz_t(), order.get_mpz_t()))
            throw std::logic_error("burnside_subset_counts: orbit count is not an integer");
        table.counts.push_back(sum[k] / order);
    }
    return table;
}

MinimalImage::MinimalImage(const PermGroup& g) : degree_(g.degree()) {
    Node root;
    root.group = std::make_shared<PermGroup>(g);
    levels_.emplace(Subset{}, std::move(root));  // orbit data is filled in by node()
}

const MinimalImage::Node& MinimalImage::node(const Subset& prefix) {
    auto it = levels_.find(prefix);
    if (it != levels_.end() && !it->second.orbit_min.empty()) return it->second;
    if (it == levels_.end()) {
        Subset parent(prefix.begin(), prefix.end() - 1);
        const Node& up = node(parent);
        Node fresh;
        fresh.group = std::make_shared<PermGroup>(up.group->stabilizer(prefix.back()));
        it = levels_.emplace(prefix, std::move(fresh)).first;
    }
    Node& nd = it->second;
    const PermGroup& h = *nd.group;
    std::vector<Permutation> inverses;
    for (const Permutation& s : h.generators()) inverses.push_back(s.inverse());
    nd.orbit_min.assign(degree_, -1);
    nd.to_min.assign(degree_, Permutation::identity(degree_));
    for (int p = 0; p < degree_; ++p) {
        if (nd.orbit_min[p] >= 0) continue;
        nd.orbit_min[p] = p;
        std::vector<int> queue{p};
        for (std::size_t k = 0; k < queue.size(); ++k) {
            const int z = queue[k];
            for (std::size_t i = 0; i < h.generators().size(); ++i) {
                const int y = h.generators()[i](z);
                if (nd.orbit_min[y] >= 0) continue;
                nd.orbit_min[y] = p;
                nd.to_min[y] = inverses[i] * nd.to_min[z];
                queue.push_back(y);
            }
        }
    }
    return nd;
}

Subset MinimalImage::operator()(const Subset& s) {
    for (int x : s)
        if (x < 0 || x >= degree_) throw std::out_of_range("MinimalImage: point out of range");
    std::vector<Subset> candidates{s};
    std::sort(candidates[0].begin(), candidates[0].end());
    Subset prefix;
    std::vector<char> in_prefix(degree_, 0);
    while (prefix.size() < s.size()) {
        const Node& nd = node(prefix);
        int best = INT_MAX;
        for (const Subset& t : candidates)
            for (int x : t)
                if (!in_prefix[x]) best = std::min(best, nd.orbit_min[x]);
        std::set<Subset> next;
        for (const Subset& t : candidates)
            for (int x : t) {
                if (in_prefix[x] || nd.orbit_min[x] != best) continue;
                const Permutation& u = nd.to_min[x];
                Subset image;
                image.reserve(t.size());
                for (int y : t) image.push_back(u(y));
                std::sort(image.begin(), image.end());
                next.insert(std::move(image));
            }
        prefix.push_back(best);
        in_prefix[best] = 1;
        candidates.assign(next.begin(), next.end());
    }
    return prefix;
}

bool transversal_feasible(int degree, int n) {
    return n >= 0 && n <= degree && (n <= kTransversalLimit || n >= degree - kTransversalLimit);
}

std::vector<Subset> subset_orbit_transversal(const PermGroup& g, int n) {
    const int m = g.degree();
    if (!transversal_feasible(m, n)) {
        std::ostringstream msg;
        msg << "orbit transversal for n = " << n << " on " << m << " points is not supported; sizes up to "
            << kTransversalLimit << " are listed directly";
        if (n >= 0 && n <= m) msg << ", and size " << n << " orbits correspond to complements of size " << m - n;
        throw InfeasibleRequest(msg.str());
    }
    MinimalImage min_image(g);
    std::set<Subset> reps;
    if (n > kTransversalLimit) {
        for (const Subset& small : subset_orbit_transversal(g, m - n)) {
            std::vector<char> in(m, 0);
            for (int x : small) in[x] = 1;
            Subset comp;
            for (int x = 0; x < m; ++x)
                if (!in[x]) comp.push_back(x);
            reps.insert(min_image(comp));
        }
        return {reps.begin(), reps.end()};
    }
    // Every n-subset contains an (n-1)-subset, so extending one
    // representative per (n-1)-orbit by each outside point reaches every orbit.
    reps.insert(Subset{});
    for (int k = 1; k <= n; ++k) {
        std::set<Subset> next;
        for (const Subset& r : reps)
            for (int p = 0; p < m; ++p) {
                if (std::binary_search(r.begin(), r.end(), p)) continue;
                Subset bigger = r;
                bigger.insert(std::upper_bound(bigger.begin(), bigger.end(), p), p);
                next.insert(min_image(bigger));
            }
        reps = std::move(next);
    }
    return {reps.begin(), reps.end()};
}

std::string transversal_to_jsonl(int n, const std::vector<Subset>& subsets) {
    std::string out;
    for (const Subset& s : subsets) {
        nlohmann::json line = {{"n", n}, {"subset", s}};
        out += line.dump();
        out += '\n';
    }
    return out;
}

std::string count_table_to_json(const SubsetCountTable& table) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : table.counts) {
        if (c.fits_ulong_p())
            arr.push_back(c.get_ui());
        else
            arr.push_back(c.get_str());
    }
    return arr.dump();
}

} // namespace seidel
