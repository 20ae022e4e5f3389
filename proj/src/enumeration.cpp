#include "seidel/enumeration.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>

namespace seidel {

namespace {

E8Context build_e8_context() {
    E8Context ctx;
    ctx.weyl = weyl_group_on_roots(LatticeSpec::E(8));
    ctx.r = standard_switching_root(LatticeSpec::E(8));
    ctx.r_index = ctx.weyl.index_of(ctx.r);
    ctx.classes = pair_classes(LatticeSpec::E(8), ctx.r);
    ctx.stabilizer = stabilizer_of_root(ctx.weyl.group, ctx.r_index);
    ctx.image = induced_action_on_classes(ctx.stabilizer, ctx.weyl.roots, ctx.classes);
    return ctx;
}

Graph graph_of(const std::vector<RootVector>& vectors) { return gram_to_graph(vectors); }

long seidel_rank(const Graph& g) { return static_cast<long>(rank(seidel_of_graph(g).shifted_negation(3))); }

std::string family_name(std::vector<RootVector> vectors, const RootVector& r) {
    // r meets every u_i with inner product 1, so the spanned root lattice is
    // irreducible and rank plus determinant pin it down.
    vectors.push_back(r);
    const LatticeInvariants inv = lattice_invariants(vectors);
    const auto spec = identify_root_lattice(inv.rank, inv.determinant);
    return spec ? spec->name() : "unknown";
}

} // namespace

const E8Context& e8_context() {
    static const E8Context ctx = build_e8_context();
    return ctx;
}

std::vector<RootVector> class_representatives(const Subset& subset) {
    const E8Context& ctx = e8_context();
    std::vector<bool> used(ctx.classes.size(), false);
    std::vector<RootVector> out;
    for (int i : subset) {
        if (i < 0 || i >= static_cast<int>(ctx.classes.size()))
            throw std::out_of_range("pair class index out of range: " + std::to_string(i));
        if (used[i]) throw std::invalid_argument("repeated pair class index: " + std::to_string(i));
        used[i] = true;
        out.push_back(ctx.classes[i].representative);
    }
    return out;
}

SwitchingClassKey phi(const Subset& subset) { return canonical_key(graph_of(class_representatives(subset))); }

long OmegaTable::at(int n) const { return n >= 0 && n < static_cast<int>(omega.size()) ? omega[n] : 0; }

OmegaTable omega_table(unsigned threads) {
    static std::mutex mutex;
    static std::optional<OmegaTable> cached;
    std::lock_guard lock(mutex);
    if (cached) return *cached;
    const SubsetCountTable counts = burnside_subset_counts(e8_context().image, threads);
    OmegaTable table;
    table.raw_orbit_counts = counts.counts;
    for (int n = 0; n <= counts.degree(); ++n) {
        // Two orbits of 6-subsets share the switching class of K_6.
        mpz_class w = counts.counts[n] - (n == 6 ? 1 : 0);
        table.omega.push_back(w.get_si());
    }
    cached = table;
    return table;
}

FamilyWitness kn_witness(int n) {
    if (n < 0 || n + 2 > kMaxVertices) throw std::range_error("kn_witness: n out of range");
    FamilyWitness w;
    w.lattice = LatticeSpec::A(n + 1);
    const int dim = n + 2;
    w.root = RootVector::unit(dim, n + 1) - RootVector::unit(dim, n + 2);
    for (int i = 1; i <= n; ++i) w.vectors.push_back(RootVector::unit(dim, i) - RootVector::unit(dim, n + 2));
    std::vector<RootVector> gens = w.vectors;
    gens.push_back(w.root);
    if (!generates(gens, w.lattice)) throw std::logic_error("K_n witness does not generate " + w.lattice.name());
    w.graph = graph_of(w.vectors);
    w.key = canonical_key(w.graph);
    return w;
}

SwitchingClassKey construct_Kn_class(int n) { return kn_witness(n).key; }

bool dst_feasible(int n, int m) { return m >= 4 && 2 * (m - 2) >= n && n >= m - 1; }

FamilyWitness dst_witness(int n, int m) {
    if (!dst_feasible(n, m))
        throw std::range_error("D_m family needs m >= 4 and 2(m-2) >= n >= m-1, got n = " + std::to_string(n) +
                               ", m = " + std::to_string(m));
    FamilyWitness w;
    w.lattice = LatticeSpec::D(m);
    w.root = RootVector::unit(m, m - 1) + RootVector::unit(m, m);
    for (int i = 1; i <= m - 2; ++i) w.vectors.push_back(RootVector::unit(m, m) + RootVector::unit(m, i));
    for (int i = 1; i <= n - m + 2; ++i) w.vectors.push_back(RootVector::unit(m, m) - RootVector::unit(m, i));
    std::vector<RootVector> gens = w.vectors;
    gens.push_back(w.root);
    if (!generates(gens, w.lattice)) throw std::logic_error("D witness does not generate " + w.lattice.name());
    w.graph = graph_of(w.vectors);
    w.key = canonical_key(w.graph);
    return w;
}

SwitchingClassKey construct_Dst_class(int n, int m) { return dst_witness(n, m).key; }

std::vector<int> dst_range(int n, bool include_top) {
    std::vector<int> out;
    const int low = std::max(9, (n + 1) / 2 + 2);
    const int high = include_top ? n + 1 : n;
    for (int m = low; m <= high; ++m) out.push_back(m);
    return out;
}

std::vector<RepRecord> representatives(int n) {
    const E8Context& ctx = e8_context();
    std::vector<RepRecord> out;
    for (const Subset& subset : subset_orbit_transversal(ctx.image, n)) {
        RepRecord rec;
        rec.n = n;
        rec.subset = subset;
        rec.roots = class_representatives(subset);
        const Graph g = graph_of(rec.roots);
        rec.key = canonical_key(g);
        rec.seidel_rank = seidel_rank(g);
        rec.lattice_family = family_name(rec.roots, ctx.r);
        out.push_back(std::move(rec));
    }
    return out;
}

STable s_table(int n_max, unsigned threads) {
    if (n_max < 0 || n_max > kE8Classes) throw InfeasibleRequest("s_table: n_max must lie in 0..28");
    const OmegaTable omega = omega_table(threads);
    STable table;
    for (int n = 0; n <= n_max; ++n) {
        STableRow row;
        row.n = n;
        row.omega = omega.at(n);
        row.s = row.omega;
        row.provenance.push_back("E8 pair-class orbits: " + std::to_string(row.omega));
        if (n >= 8) {
            const auto d_all = dst_range(n, true);
            row.s += 1 + static_cast<long>(d_all.size());
            row.provenance.push_back("A" + std::to_string(n + 1) + ": K_" + std::to_string(n));
            for (int m : d_all)
                row.provenance.push_back("D" + std::to_string(m) + ": D_{" + std::to_string(m - 2) + "," +
                                         std::to_string(n - m + 2) + "}");
        }
        if (n <= kTransversalLimit) {
            // Classes with eigenvalue exactly 3 have rank(3I - S) < n.
            std::set<SwitchingClassKey> keys;
            for (const RepRecord& rec : representatives(n))
                if (rec.seidel_rank < n) keys.insert(rec.key);
            row.s_e = static_cast<long>(keys.size());
        } else {
            row.s_e = row.omega + static_cast<long>(dst_range(n, false).size());
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

OracleCounts brute_force_counts(int n, unsigned threads) {
    if (n < 0 || n > 7) throw InfeasibleRequest("brute_force_counts: n must lie in 0..7");
    OracleCounts c;
    c.n = n;
    for (const SwitchingClassKey& key : all_switching_classes(n, threads)) {
        const IntMatrix s = seidel_of_graph(key.representative());
        if (!max_eig_le(s, 3)) continue;
        const auto r = static_cast<long>(rank(s.shifted_negation(3)));
        ++c.s;
        if (r < n) ++c.s_e;
        if (r <= 7) ++c.omega;
    }
    return c;
}

FiberReport verify_fiber_n6() {
    const E8Context& ctx = e8_context();
    FiberReport report;
    const auto reps = representatives(6);
    report.representatives = reps.size();
    std::map<SwitchingClassKey, std::vector<Subset>> by_key;
    for (const RepRecord& rec : reps) by_key[rec.key].push_back(rec.subset);
    report.distinct_keys = by_key.size();
    if (reps.size() != 10) report.failures.push_back("expected 10 orbit representatives, got " + std::to_string(reps.size()));
    if (by_key.size() != 9) report.failures.push_back("expected 9 distinct keys, got " + std::to_string(by_key.size()));
    for (const auto& [key, subsets] : by_key) {
        if (subsets.size() < 2) continue;
        if (report.duplicated_key) report.failures.push_back("more than one key has a repeated fibre");
        report.duplicated_key = key;
        report.witnesses = subsets;
    }
    if (!report.duplicated_key) {
        report.failures.push_back("no key has two orbit representatives");
        return report;
    }
    if (*report.duplicated_key != canonical_key(Graph::complete(6)))
        report.failures.push_back("repeated key " + report.duplicated_key->to_hex() + " is not the class of K_6");
    if (report.witnesses.size() != 2)
        report.failures.push_back("repeated fibre has " + std::to_string(report.witnesses.size()) + " elements");
    for (const Subset& w : report.witnesses) {
        std::vector<RootVector> gens = class_representatives(w);
        gens.push_back(ctx.r);
        const LatticeInvariants inv = lattice_invariants(gens);
        report.witness_ranks.push_back(inv.rank);
        report.witness_determinants.push_back(inv.determinant);
        if (inv.rank != 7 || inv.determinant != 8)
            report.failures.push_back("witness lattice has rank " + std::to_string(inv.rank) + " and determinant " +
                                      inv.determinant.get_str() + ", expected A7 (7, 8)");
        const OrthogonalComplement comp = orth_complement_in_E8(gens);
        report.complement_min_norms.push_back(comp.min_norm.value_or(0));
    }
    std::vector<long> norms = report.complement_min_norms;
    std::sort(norms.begin(), norms.end());
    if (norms != std::vector<long>{2, 8}) {
        std::ostringstream msg;
        msg << "complement minimal norms are {";
        for (std::size_t i = 0; i < norms.size(); ++i) msg << (i ? ", " : "") << norms[i];
        msg << "}, expected {2, 8}";
        report.failures.push_back(msg.str());
    }
    return report;
}

CaoCheck check_cao(const Graph& g) {
    CaoCheck c;
    const IntMatrix s = seidel_of_graph(g);
    const IntMatrix cone_gram = adjacency_matrix(cone(g)).plus_identity(2);
    c.max_eig_le_3 = max_eig_le(s, 3);
    c.cone_psd = is_psd(cone_gram);
    c.seidel_rank = rank(s.shifted_negation(3));
    c.cone_rank = rank(cone_gram);
    return c;
}

CaoReport verify_cao(int n_max, std::size_t samples, std::uint64_t seed) {
    if (n_max < 1 || n_max > 10) throw std::invalid_argument("verify_cao: n_max must lie in 1..10");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> order(1, n_max);
    std::uniform_int_distribution<int> density(0, 100);
    std::uniform_int_distribution<int> coin(0, 99);
    CaoReport report;
    for (std::size_t k = 0; k < samples; ++k) {
        const int n = order(rng);
        const int p = density(rng);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng) < p) g.add_edge(u, v);
        const CaoCheck c = check_cao(g);
        ++report.samples;
        if (c.max_eig_le_3) ++report.bounded;
        if (!c.holds()) {
            std::ostringstream msg;
            msg << "n = " << n << " key " << pack_key(g).to_hex() << ": lambda_max <= 3 is " << c.max_eig_le_3
                << ", cone PSD is " << c.cone_psd << ", ranks " << c.seidel_rank << " + 1 vs " << c.cone_rank;
            report.failures.push_back(msg.str());
        }
    }
    return report;
}

} // namespace seidel
