// Canonical labeling of small graphs by individualization-refinement.
//
// Ordered partitions are refined to the coarsest equitable refinement;
// the search tree individualizes vertices of the first non-singleton cell.
// Leaves are compared by their relabeled adjacency rows and the smallest
// wins. Two prunings keep symmetric graphs cheap:
//   * a leaf equal to the first or the best leaf yields an automorphism
//     and the search returns to the node where the two paths diverge;
//   * children in the same orbit (under stored automorphisms fixing the
//     current path pointwise) as an explored child are skipped.

#include "seidel/graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <climits>
#include <cstdint>
#include <vector>

namespace seidel {

namespace {

constexpr int kMaxStoredAutomorphisms = 64;

struct Partition {
    std::array<std::uint8_t, kMaxVertices> lab{};       // position -> vertex
    std::array<std::uint8_t, kMaxVertices> cell_end{};  // valid at cell starts: one past the last position
    std::array<std::uint8_t, kMaxVertices> cell_of{};   // vertex -> start of its cell
    int n = 0;
};

using Rows = std::array<std::uint32_t, kMaxVertices>;

class Canonizer {
public:
    explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {}

    Graph run() {
        Partition root;
        root.n = n_;
        for (int i = 0; i < n_; ++i) {
            root.lab[i] = static_cast<std::uint8_t>(i);
            root.cell_of[i] = 0;
        }
        if (n_ > 0) root.cell_end[0] = static_cast<std::uint8_t>(n_);
        std::vector<int> queue{0};
        refine(root, queue);
        std::vector<int> path;
        search(root, path);

        std::vector<std::uint32_t> rows(best_rows_.begin(), best_rows_.begin() + n_);
        return Graph::from_rows(n_, rows);
    }

private:
    std::uint32_t cell_mask(const Partition& p, int start) const {
        std::uint32_t m = 0;
        for (int i = start; i < p.cell_end[start]; ++i) m |= 1U << p.lab[i];
        return m;
    }

    // Refines p to an equitable partition. Splitters are cell starts, so
    // the processing order depends only on the partition's structure.
    void refine(Partition& p, std::vector<int>& queue) const {
        std::array<bool, kMaxVertices> queued{};
        for (int s : queue) queued[s] = true;
        std::array<int, kMaxVertices> count{};
        std::size_t head = 0;
        while (head < queue.size()) {
            const int splitter = queue[head++];
            queued[splitter] = false;
            const std::uint32_t w = cell_mask(p, splitter);
            for (int start = 0; start < n_;) {
                const int end = p.cell_end[start];
                if (end - start > 1) split_cell(p, start, end, w, count, queue, queued);
                start = end;
            }
            if (head > 4096) {
                queue.erase(queue.begin(), queue.begin() + static_cast<std::ptrdiff_t>(head));
                head = 0;
            }
        }
        queue.clear();
    }

    void split_cell(Partition& p, int start, int end, std::uint32_t w, std::array<int, kMaxVertices>& count,
                    std::vector<int>& queue, std::array<bool, kMaxVertices>& queued) const {
        bool uniform = true;
        for (int i = start; i < end; ++i) {
            count[p.lab[i]] = std::popcount(g_.neighbors(p.lab[i]) & w);
            if (count[p.lab[i]] != count[p.lab[start]]) uniform = false;
        }
        if (uniform) return;
        std::stable_sort(p.lab.begin() + start, p.lab.begin() + end,
                         [&](std::uint8_t a, std::uint8_t b) { return count[a] < count[b]; });
        int frag = start;
        for (int i = start + 1; i <= end; ++i) {
            if (i == end || count[p.lab[i]] != count[p.lab[frag]]) {
                p.cell_end[frag] = static_cast<std::uint8_t>(i);
                for (int k = frag; k < i; ++k) p.cell_of[p.lab[k]] = static_cast<std::uint8_t>(frag);
                if (!queued[frag]) {
                    queued[frag] = true;
                    queue.push_back(frag);
                }
                frag = i;
            }
        }
    }

    Partition individualize(const Partition& p, int start, int vertex) const {
        Partition q = p;
        const int end = p.cell_end[start];
        int pos = start;
        while (q.lab[pos] != vertex) ++pos;
        std::swap(q.lab[pos], q.lab[start]);
        q.cell_end[start] = static_cast<std::uint8_t>(start + 1);
        q.cell_end[start + 1] = static_cast<std::uint8_t>(end);
        for (int k = start + 1; k < end; ++k) q.cell_of[q.lab[k]] = static_cast<std::uint8_t>(start + 1);
        std::vector<int> queue{start};
        refine(q, queue);
        return q;
    }

    Rows leaf_rows(const Partition& p) const {
        std::array<std::uint8_t, kMaxVertices> pos{};
        for (int i = 0; i < n_; ++i) pos[p.lab[i]] = static_cast<std::uint8_t>(i);
        Rows rows{};
        for (int i = 0; i < n_; ++i) {
            std::uint32_t row = 0;
            for (std::uint32_t nb = g_.neighbors(p.lab[i]); nb; nb &= nb - 1) row |= 1U << pos[std::countr_zero(nb)];
            rows[i] = row;
        }
        return rows;
    }

    static int common_prefix(const std::vector<int>& a, const std::vector<int>& b) {
        int k = 0;
        while (k < static_cast<int>(a.size()) && k < static_cast<int>(b.size()) && a[k] == b[k]) ++k;
        return k;
    }

    void store_automorphism(const Partition& from, const Partition& to) {
        if (static_cast<int>(automorphisms_.size()) >= kMaxStoredAutomorphisms) return;
        std::array<std::uint8_t, kMaxVertices> gamma{};
        for (int i = 0; i < n_; ++i) gamma[from.lab[i]] = to.lab[i];
        automorphisms_.push_back(gamma);
    }

    int leaf(const Partition& p, const std::vector<int>& path) {
        Rows rows = leaf_rows(p);
        if (!have_leaf_) {
            have_leaf_ = true;
            first_rows_ = best_rows_ = rows;
            first_ = best_ = p;
            first_path_ = best_path_ = path;
            return INT_MAX;
        }
        if (std::equal(rows.begin(), rows.begin() + n_, first_rows_.begin())) {
            store_automorphism(first_, p);
            return common_prefix(path, first_path_);
        }
        const bool same_as_best = std::equal(rows.begin(), rows.begin() + n_, best_rows_.begin());
        if (same_as_best) {
            store_automorphism(best_, p);
            return common_prefix(path, best_path_);
        }
        if (std::lexicographical_compare(rows.begin(), rows.begin() + n_, best_rows_.begin(), best_rows_.begin() + n_)) {
            best_rows_ = rows;
            best_ = p;
            best_path_ = path;
        }
        return INT_MAX;
    }

    // Union-find orbits of the stored automorphisms that fix `path` pointwise.
    std::array<std::uint8_t, kMaxVertices> path_orbits(const std::vector<int>& path) const {
        std::array<std::uint8_t, kMaxVertices> parent{};
        for (int i = 0; i < n_; ++i) parent[i] = static_cast<std::uint8_t>(i);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& gamma : automorphisms_) {
            bool fixes = true;
            for (int v : path)
                if (gamma[v] != v) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            for (int v = 0; v < n_; ++v) {
                const int a = find(v), b = find(gamma[v]);
                if (a != b) parent[std::max(a, b)] = static_cast<std::uint8_t>(std::min(a, b));
            }
        }
        for (int v = 0; v < n_; ++v) parent[v] = static_cast<std::uint8_t>(find(v));
        return parent;
    }

    int search(const Partition& p, std::vector<int>& path) {
        int start = 0;
        while (start < n_ && p.cell_end[start] - start == 1) start = p.cell_end[start];
        if (start >= n_) return leaf(p, path);

        const int depth = static_cast<int>(path.size());
        const int end = p.cell_end[start];
        std::vector<int> cell(p.lab.begin() + start, p.lab.begin() + end);
        std::vector<int> explored;
        for (int v : cell) {
            if (!explored.empty() && !automorphisms_.empty()) {
                const auto orbit = path_orbits(path);
                bool redundant = false;
                for (int e : explored)
                    if (orbit[e] == orbit[v]) {
                        redundant = true;
                        break;
                    }
                if (redundant) continue;
            }
            Partition child = individualize(p, start, v);
            path.push_back(v);
            const int target = search(child, path);
            path.pop_back();
            explored.push_back(v);
            if (target < depth) return target;
        }
        return INT_MAX;
    }

    const Graph& g_;
    int n_;
    bool have_leaf_ = false;
    Rows first_rows_{}, best_rows_{};
    Partition first_, best_;
    std::vector<int> first_path_, best_path_;
    std::vector<std::array<std::uint8_t, kMaxVertices>> automorphisms_;
};

} // namespace

Graph canonical_form(const Graph& g) {
    if (g.order() <= 1) return g;
    return Canonizer(g).run();
}

} // namespace seidel
