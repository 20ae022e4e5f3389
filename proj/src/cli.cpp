#include "seidel/cli.hpp"

#include "seidel/enumeration.hpp"
#include "seidel/parallel.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

namespace seidel {

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;
constexpr const char* kToolVersion = "1.0.0";

// Published reference values, embedded verbatim and never computed.
constexpr long kReferenceOmega[30] = {1,  1,  1,  2,  3,  5,  9,  16, 23, 37, 54, 70, 90, 101, 103,
                                      101, 90, 70, 54, 37, 23, 16, 10, 5,  3,  2,  1,  1,  1,   0};
constexpr long kReferenceS[14] = {1, 1, 1, 2, 3, 5, 9, 16, 25, 40, 58, 75, 96, 108};
constexpr long kReferenceSe[14] = {0, 0, 0, 0, 1, 1, 4, 9, 23, 38, 56, 73, 94, 106};

enum class Format { Json, Jsonl, Text };

struct Common {
    Format format = Format::Text;
    std::string output;
    unsigned threads = 1;
    bool no_meta = false;
};

void add_common(CLI::App* cmd, Common& c, Format default_format) {
    c.format = default_format;
    const std::map<std::string, Format> formats{{"json", Format::Json}, {"jsonl", Format::Jsonl}, {"text", Format::Text}};
    cmd->add_option("--format", c.format, "Output format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    cmd->add_option("-o,--output", c.output, "Write to this file instead of stdout");
    cmd->add_option("--threads", c.threads, "Worker threads")->check(CLI::PositiveNumber);
    cmd->add_flag("--no-meta", c.no_meta, "Omit the timestamp header");
}

std::string timestamp() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::ostringstream s;
    s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return s.str();
}

json envelope(const Common& c) {
    json j;
    j["schema_version"] = kSchemaVersion;
    if (!c.no_meta) j["meta"] = {{"tool", "seidel-forge"}, {"version", kToolVersion}, {"generated_at", timestamp()}};
    return j;
}

std::string text_meta(const Common& c) {
    if (c.no_meta) return {};
    return std::string("# seidel-forge ") + kToolVersion + " " + timestamp() + "\n";
}

json to_json(const mpz_class& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

std::string dump(const json& j, Format f) { return f == Format::Json ? j.dump(2) + "\n" : j.dump() + "\n"; }

// Rows of a table with n as columns, split into blocks of `width` columns.
std::string columns_table(const std::vector<std::pair<std::string, std::vector<std::string>>>& rows, int first_n,
                          std::size_t width = 15) {
    const std::size_t count = rows.empty() ? 0 : rows.front().second.size();
    std::size_t label = 1;
    for (const auto& r : rows) label = std::max(label, r.first.size());
    std::size_t cell = 3;
    for (const auto& r : rows)
        for (const auto& v : r.second) cell = std::max(cell, v.size());
    std::ostringstream out;
    for (std::size_t start = 0; start < count; start += width) {
        const std::size_t end = std::min(count, start + width);
        if (start) out << '\n';
        out << std::left << std::setw(static_cast<int>(label)) << "n" << " |";
        for (std::size_t k = start; k < end; ++k) out << std::right << std::setw(static_cast<int>(cell) + 1) << first_n + k;
        out << '\n';
        for (const auto& r : rows) {
            out << std::left << std::setw(static_cast<int>(label)) << r.first << " |";
            for (std::size_t k = start; k < end; ++k) out << std::right << std::setw(static_cast<int>(cell) + 1) << r.second[k];
            out << '\n';
        }
    }
    return out.str();
}

template <class T>
std::vector<std::string> strings(const std::vector<T>& v) {
    std::vector<std::string> out;
    for (const auto& x : v) {
        std::ostringstream s;
        s << x;
        out.push_back(s.str());
    }
    return out;
}

class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
        if (!path.empty()) {
            file_.open(path, std::ios::out | std::ios::trunc);
            if (!file_) throw std::ios_base::failure("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : fallback_; }
    void finish() {
        stream().flush();
        if (!stream()) throw std::ios_base::failure("write failed");
    }

private:
    std::ofstream file_;
    std::ostream& fallback_;
};

int cmd_omega_table(const Common& c, bool check, std::ostream& out, std::ostream& err) {
    Sink sink(c.output, out);
    const OmegaTable t = omega_table(c.threads);
    if (c.format == Format::Text) {
        std::vector<std::string> raw;
        for (const auto& v : t.raw_orbit_counts) raw.push_back(v.get_str());
        sink.stream() << text_meta(c) << columns_table({{"omega", strings(t.omega)}, {"c", raw}}, 0);
    } else {
        json j = envelope(c);
        j["omega"] = t.omega;
        json raw = json::array();
        for (const auto& v : t.raw_orbit_counts) raw.push_back(to_json(v));
        j["raw_orbit_counts"] = raw;
        sink.stream() << dump(j, c.format);
    }
    sink.finish();
    if (!check) return kExitOk;
    int bad = 0;
    for (int n = 0; n < 30; ++n)
        if (t.at(n) != kReferenceOmega[n]) {
            err << "omega(" << n << ") = " << t.at(n) << ", reference " << kReferenceOmega[n] << "\n";
            ++bad;
        }
    err << (bad ? "reference check FAILED\n" : "reference check passed (n = 0..29)\n");
    return bad ? kExitMismatch : kExitOk;
}

// Expected s(n) - omega(n) for n >= 8.
long expected_excess(int n) { return n <= 12 ? n - 6 : n / 2 + 1; }

int cmd_s_table(const Common& c, int n_max, bool check, std::ostream& out, std::ostream& err) {
    if (n_max < 0 || n_max > kE8Classes) {
        err << "--n-max must lie in 0..28\n";
        return kExitInfeasible;
    }
    Sink sink(c.output, out);
    const STable t = s_table(n_max, c.threads);
    int bad = 0;
    std::vector<long> s, se, om;
    for (const auto& r : t.rows) {
        s.push_back(r.s);
        se.push_back(r.s_e);
        om.push_back(r.omega);
    }
    json residuals = json::array();
    std::vector<std::string> ex, ex_expected, gap;
    for (const auto& r : t.rows) {
        if (r.n < 8) {
            ex.push_back("-");
            ex_expected.push_back("-");
            gap.push_back("-");
            continue;
        }
        const bool ok = r.s - r.omega == expected_excess(r.n) && r.s - r.s_e == 2;
        if (!ok) ++bad;
        residuals.push_back({{"n", r.n},
                             {"s_minus_omega", r.s - r.omega},
                             {"expected", expected_excess(r.n)},
                             {"s_minus_s_e", r.s - r.s_e},
                             {"ok", ok}});
        ex.push_back(std::to_string(r.s - r.omega));
        ex_expected.push_back(std::to_string(expected_excess(r.n)));
        gap.push_back(std::to_string(r.s - r.s_e));
    }
    if (c.format == Format::Text) {
        std::vector<std::pair<std::string, std::vector<std::string>>> rows{
            {"s", strings(s)}, {"s_e", strings(se)}, {"omega", strings(om)}};
        if (n_max >= 8) {
            rows.push_back({"s-omega", ex});
            rows.push_back({"expected", ex_expected});
            rows.push_back({"s-s_e", gap});
        }
        sink.stream() << text_meta(c) << columns_table(rows, 0);
    } else {
        json j = envelope(c);
        j["n_max"] = n_max;
        j["s"] = s;
        j["s_e"] = se;
        j["omega"] = om;
        json prov = json::array();
        for (const auto& r : t.rows) prov.push_back(r.provenance);
        j["provenance"] = prov;
        j["residuals"] = residuals;
        sink.stream() << dump(j, c.format);
    }
    sink.finish();
    if (bad) err << bad << " residual mismatch(es) for n >= 8\n";
    if (check) {
        int mism = 0;
        for (const auto& r : t.rows) {
            if (r.n > 13) break;
            if (r.s != kReferenceS[r.n] || r.s_e != kReferenceSe[r.n]) {
                err << "n = " << r.n << ": s = " << r.s << ", s_e = " << r.s_e << "; reference " << kReferenceS[r.n]
                    << ", " << kReferenceSe[r.n] << "\n";
                ++mism;
            }
        }
        err << (mism ? "reference check FAILED\n" : "reference check passed\n");
        bad += mism;
    }
    return bad ? kExitMismatch : kExitOk;
}

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

CheckResult check_cao_suite() {
    const CaoReport r = verify_cao(8, 500, 20240601);
    std::ostringstream d;
    d << r.samples << " random graphs on <= 8 vertices, " << r.bounded << " with lambda_max <= 3, "
      << r.failures.size() << " failures";
    if (!r.ok()) d << "; first: " << r.failures.front();
    return {"thm:Cao", r.ok(), d.str()};
}

CheckResult check_norms() {
    const FiberReport f = verify_fiber_n6();
    std::vector<long> norms = f.complement_min_norms;
    std::sort(norms.begin(), norms.end());
    const bool ok = norms == std::vector<long>{2, 8};
    std::ostringstream d;
    d << "E8 complements of the two K_6 witness lattices have minimal norms {";
    for (std::size_t i = 0; i < norms.size(); ++i) d << (i ? ", " : "") << norms[i];
    d << "}";
    return {"lem:A", ok, d.str()};
}

CheckResult check_kn() {
    int bad = 0;
    for (int n = 0; n <= 10; ++n)
        if (construct_Kn_class(n) != canonical_key(Graph::complete(n))) ++bad;
    return {"lem:S(A)", bad == 0, "K_n witnesses in A_{n+1} give the class of K_n for n = 0..10, " +
                                      std::to_string(bad) + " mismatches"};
}

CheckResult check_dst() {
    int cases = 0, bad = 0, attained = 0;
    for (int m = 4; m <= 12; ++m)
        for (int n = m - 1; n <= 2 * (m - 2); ++n) {
            ++cases;
            const FamilyWitness w = dst_witness(n, m);
            const IntMatrix s = seidel_of_graph(w.graph);
            const std::size_t r = rank(s.shifted_negation(3));
            const bool ok = isomorphic(w.graph, d_graph(m - 2, n - m + 2)) && max_eig_le(s, 3) &&
                            r == static_cast<std::size_t>(m - 1);
            if (!ok) ++bad;
            if (r < static_cast<std::size_t>(n)) ++attained;
        }
    return {"lem:S(D)", bad == 0,
            std::to_string(cases) + " feasible (n, m) with m <= 12: D_{m-2,n-m+2}, lambda_max <= 3, rank(3I - S) = m - 1 (" +
                std::to_string(attained) + " with eigenvalue 3); " + std::to_string(bad) + " failures"};
}

CheckResult check_sym() {
    const FiberReport f = verify_fiber_n6();
    const OmegaTable t = omega_table();
    std::vector<std::string> problems = f.failures;
    for (int n = 0; n <= kE8Classes; ++n) {
        if (!transversal_feasible(kE8Classes, n)) continue;
        std::set<SwitchingClassKey> keys;
        for (const RepRecord& r : representatives(n)) keys.insert(r.key);
        if (static_cast<long>(keys.size()) != t.at(n))
            problems.push_back("n = " + std::to_string(n) + ": " + std::to_string(keys.size()) + " keys vs omega " +
                               std::to_string(t.at(n)));
    }
    std::string detail = "n = 6: " + std::to_string(f.representatives) + " orbits, " + std::to_string(f.distinct_keys) +
                         " keys, repeated key is K_6; keys = omega(n) for n in 0..8, 20..28";
    if (!problems.empty()) detail = problems.front();
    return {"thm:sym", problems.empty(), detail};
}

CheckResult check_cor_sym() {
    const OmegaTable t = omega_table();
    bool ok = true;
    for (int n = 0; n <= kE8Classes; ++n) {
        if (t.raw_orbit_counts[n] != t.raw_orbit_counts[kE8Classes - n]) ok = false;
        if (n != 6 && n != 22 && t.at(n) != t.at(kE8Classes - n)) ok = false;
    }
    if (t.at(6) + 1 != t.at(22)) ok = false;
    return {"cor:sym", ok,
            "c(n) = c(28-n), omega(n) = omega(28-n) off {6, 22}, omega(6) + 1 = " + std::to_string(t.at(6) + 1) +
                " = omega(22)"};
}

CheckResult check_cor_sn() {
    const STable t = s_table(kE8Classes);
    int bad = 0;
    for (const auto& r : t.rows)
        if (r.n >= 8 && (r.s - r.s_e != 2 || r.s - r.omega != expected_excess(r.n))) ++bad;
    return {"cor:Sn", bad == 0,
            "s = s_e + 2 and s - omega = n - 6 (n <= 12) or floor(n/2) + 1 for n = 8..28; " + std::to_string(bad) +
                " mismatches"};
}

CheckResult check_oracle(int n_max, unsigned threads) {
    const STable t = s_table(std::min(n_max, 7), threads);
    int bad = 0;
    std::ostringstream d;
    d << "brute force vs pipelines for n = 0.." << n_max << ": s =";
    for (int n = 0; n <= n_max; ++n) {
        const OracleCounts o = brute_force_counts(n, threads);
        d << " " << o.s;
        const STableRow& r = t.rows[n];
        if (o.s != r.s || o.s_e != r.s_e || o.omega != r.omega) ++bad;
    }
    d << "; " << bad << " mismatches";
    return {"oracle", bad == 0, d.str()};
}

const std::vector<std::string> kCheckNames{"thm:Cao", "lem:A", "lem:S(A)", "lem:S(D)",
                                           "thm:sym", "cor:sym", "cor:Sn", "oracle"};

int cmd_verify(const Common& c, const std::string& only, int n_max, std::ostream& out, std::ostream& err) {
    if (!only.empty() && std::find(kCheckNames.begin(), kCheckNames.end(), only) == kCheckNames.end()) {
        err << "unknown check '" << only << "'; known:";
        for (const auto& n : kCheckNames) err << " " << n;
        err << "\n";
        return kExitUsage;
    }
    if (n_max < 0 || n_max > 7) {
        err << "--n-max must lie in 0..7 for the brute-force oracle\n";
        return kExitInfeasible;
    }
    Sink sink(c.output, out);
    const std::map<std::string, std::function<CheckResult()>> checks{
        {"thm:Cao", check_cao_suite},  {"lem:A", check_norms},      {"lem:S(A)", check_kn},
        {"lem:S(D)", check_dst},       {"thm:sym", check_sym},      {"cor:sym", check_cor_sym},
        {"cor:Sn", check_cor_sn},      {"oracle", [&] { return check_oracle(n_max, c.threads); }}};
    std::vector<CheckResult> results;
    for (const auto& name : kCheckNames) {
        if (!only.empty() && name != only) continue;
        try {
            results.push_back(checks.at(name)());
        } catch (const std::exception& e) {
            results.push_back({name, false, std::string("error: ") + e.what()});
        }
    }
    const bool all = std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
    if (c.format == Format::Text) {
        sink.stream() << text_meta(c);
        for (const auto& r : results)
            sink.stream() << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(9) << r.name << " " << r.detail
                          << "\n";
        sink.stream() << (all ? "all checks passed" : "some checks FAILED") << "\n";
    } else {
        json j = envelope(c);
        json arr = json::array();
        for (const auto& r : results) arr.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        j["checks"] = arr;
        j["passed"] = all;
        sink.stream() << dump(j, c.format);
    }
    sink.finish();
    return all ? kExitOk : kExitMismatch;
}

int cmd_reps(const Common& c, int n, std::ostream& out) {
    const auto reps = representatives(n);  // throws InfeasibleRequest before any output
    Sink sink(c.output, out);
    if (c.format == Format::Text) {
        sink.stream() << text_meta(c);
        for (const auto& r : reps) {
            sink.stream() << "n=" << r.n << " rank=" << r.seidel_rank << " lattice=" << r.lattice_family
                          << " key=" << r.key.to_hex() << " subset=[";
            for (std::size_t i = 0; i < r.subset.size(); ++i) sink.stream() << (i ? "," : "") << r.subset[i];
            sink.stream() << "]\n";
        }
    } else {
        json all = json::array();
        for (const auto& r : reps) {
            json roots = json::array();
            for (const auto& v : r.roots) roots.push_back(v.coords2());
            json line = {{"schema_version", kSchemaVersion},
                         {"n", r.n},
                         {"subset", r.subset},
                         {"key_hex", r.key.to_hex()},
                         {"rank", r.seidel_rank},
                         {"lattice_family", r.lattice_family},
                         {"roots_doubled", roots}};
            if (c.format == Format::Jsonl)
                sink.stream() << line.dump() << "\n";
            else
                all.push_back(line);
        }
        if (c.format == Format::Json) {
            json j = envelope(c);
            j["n"] = n;
            j["representatives"] = all;
            sink.stream() << j.dump(2) << "\n";
        }
    }
    sink.finish();
    return kExitOk;
}

int cmd_oracle(const Common& c, int n_max, std::ostream& out, std::ostream& err) {
    if (n_max < 0 || n_max > 7) {
        err << "--n-max must lie in 0..7\n";
        return kExitInfeasible;
    }
    Sink sink(c.output, out);
    std::vector<OracleCounts> rows;
    for (int n = 0; n <= n_max; ++n) rows.push_back(brute_force_counts(n, c.threads));
    if (c.format == Format::Text) {
        std::vector<long> s, se, om;
        for (const auto& r : rows) {
            s.push_back(r.s);
            se.push_back(r.s_e);
            om.push_back(r.omega);
        }
        sink.stream() << text_meta(c) << columns_table({{"s", strings(s)}, {"s_e", strings(se)}, {"omega", strings(om)}}, 0);
    } else {
        json j = envelope(c);
        json arr = json::array();
        for (const auto& r : rows) arr.push_back({{"n", r.n}, {"s", r.s}, {"s_e", r.s_e}, {"omega", r.omega}});
        j["n_max"] = n_max;
        j["rows"] = arr;
        sink.stream() << dump(j, c.format);
    }
    sink.finish();
    return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Switching classes of Seidel matrices with largest eigenvalue at most 3", "seidel-forge"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    const unsigned env_threads = default_threads();

    Common omega_c, s_c, verify_c, reps_c, oracle_c;
    for (Common* c : {&omega_c, &s_c, &verify_c, &reps_c, &oracle_c}) c->threads = env_threads;
    bool omega_check = false, s_check = false, verify_all = false;
    int s_n_max = 13, verify_n_max = 7, reps_n = 0, oracle_n_max = 7;
    std::string verify_only;

    auto* omega = app.add_subcommand("omega-table", "Orbit counts omega(n) for n = 0..28");
    add_common(omega, omega_c, Format::Text);
    omega->add_flag("--check-paper", omega_check, "Compare against the published reference table");

    auto* stab = app.add_subcommand("s-table", "The counts s(n) and s_e(n)");
    add_common(stab, s_c, Format::Text);
    stab->add_option("--n-max", s_n_max, "Largest n (at most 28)");
    stab->add_flag("--check-paper", s_check, "Compare n <= 13 against the published reference table");

    auto* verify = app.add_subcommand("verify", "Run the property checks");
    add_common(verify, verify_c, Format::Text);
    auto* all_flag = verify->add_flag("--all", verify_all, "Run every check (default)");
    verify->add_option("--only", verify_only, "Run a single check")->excludes(all_flag);
    verify->add_option("--n-max", verify_n_max, "Largest n for the brute-force oracle (at most 7)");

    auto* reps = app.add_subcommand("reps", "Orbit representatives of n-subsets of E8 pair classes");
    add_common(reps, reps_c, Format::Jsonl);
    reps->add_option("--n", reps_n, "Subset size, 0..8 or 20..28")->required();

    auto* oracle = app.add_subcommand("oracle", "Brute-force counts over all graphs on n <= 7 vertices");
    add_common(oracle, oracle_c, Format::Text);
    oracle->add_option("--n-max", oracle_n_max, "Largest n (at most 7)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (omega->parsed()) return cmd_omega_table(omega_c, omega_check, out, err);
        if (stab->parsed()) return cmd_s_table(s_c, s_n_max, s_check, out, err);
        if (verify->parsed()) return cmd_verify(verify_c, verify_only, verify_n_max, out, err);
        if (reps->parsed()) return cmd_reps(reps_c, reps_n, out);
        if (oracle->parsed()) return cmd_oracle(oracle_c, oracle_n_max, out, err);
    } catch (const InfeasibleRequest& e) {
        err << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const std::ios_base::failure& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitMismatch;
    }
    return kExitUsage;
}

} // namespace seidel
