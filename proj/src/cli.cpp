#include "ccm/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ccm/analytic.hpp"
#include "ccm/catalog.hpp"
#include "ccm/counting.hpp"
#include "ccm/errors.hpp"
#include "ccm/fixtures.hpp"
#include "ccm/oracle.hpp"

namespace ccm::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitIo = 4;
constexpr int kExitResource = 5;

std::string fmt6(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

json json_envelope(const std::string& command, json params) {
    json j;
    j["schema_version"] = 1;
    j["command"] = command;
    j["params"] = std::move(params);
    return j;
}

Kind parse_kind(const std::string& s) {
    if (s == "simple") return Kind::simple;
    if (s == "multiple") return Kind::multiple;
    if (s == "ideal") return Kind::ideal;
    throw CLI::ValidationError("kind", "expected simple, multiple or ideal");
}

std::string splitting_label(const PrimeSplitting& s) {
    if (s.ramification > 1) return s.is_complex_splitting ? "ramified complex-split" : "ramified";
    if (s.is_complex_splitting) return "complex-split";
    return s.num_primes == 1 ? "inert-like" : "split-real";
}

void print_report(const RunReport& report, std::ostream& out, std::ostream& err) {
    out << "command: " << report.command << "\n";
    out << "n:";
    for (unsigned n : report.n_values) out << ' ' << n;
    out << "\n";
    out << "status: "
        << (report.status == RunReport::Status::ok
                ? "ok"
                : report.status == RunReport::Status::mismatch ? "mismatch" : "error")
        << "\n";
    std::size_t shown = 0;
    for (const auto& m : report.mismatches) {
        if (shown++ == 10) {
            out << "  ... " << report.mismatches.size() - 10 << " more\n";
            break;
        }
        out << "  mismatch " << m.location << ": expected " << m.expected << ", got " << m.got << "\n";
    }
    err << "elapsed: " << fmt6(report.elapsed_seconds) << " s\n";
}

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// ---------------------------------------------------------------------- fields

int cmd_fields(const std::string& format, std::ostream& out) {
    if (format == "json") {
        json j = json_envelope("fields", json::object());
        auto& results = j["results"] = json::array();
        for (const CyclotomicField& f : catalog()) {
            results.push_back({{"n", f.n},
                               {"phi", f.degree},
                               {"N", f.symmetry_order},
                               {"prime_power", f.is_prime_power}});
        }
        out << j.dump() << "\n";
        return kExitOk;
    }
    if (format == "csv") {
        out << "n,phi,N,prime_power\n";
        for (const CyclotomicField& f : catalog())
            out << f.n << ',' << f.degree << ',' << f.symmetry_order << ','
                << (f.is_prime_power ? "yes" : "no") << "\n";
        return kExitOk;
    }
    for (const CyclotomicField& f : catalog())
        out << f.n << ", " << f.degree << ", " << f.symmetry_order << ", "
            << (f.is_prime_power ? "yes" : "no") << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------------- primes

int cmd_primes(unsigned n, std::uint64_t max_p, const std::string& format, std::ostream& out) {
    field_info(n);
    std::vector<PrimeSplitting> rows;
    for (std::uint64_t p = 2; p <= max_p; ++p)
        if (is_prime(p)) rows.push_back(classify_prime(n, p));

    if (format == "json") {
        json j = json_envelope("primes", {{"n", n}, {"max_p", max_p}});
        auto& results = j["results"] = json::array();
        for (const PrimeSplitting& s : rows) {
            json row = {{"p", s.p}, {"class", splitting_label(s)}, {"e", s.ramification},
                        {"f", s.residue_degree}, {"g", s.num_primes}};
            if (s.basic_index) row["basic_index"] = *s.basic_index;
            results.push_back(std::move(row));
        }
        out << j.dump() << "\n";
        return kExitOk;
    }
    if (format == "csv") out << "p,class,e,f,g,basic_index\n";
    for (const PrimeSplitting& s : rows) {
        std::string basic = s.basic_index ? std::to_string(*s.basic_index) : "";
        if (format == "csv")
            out << s.p << ',' << splitting_label(s) << ',' << s.ramification << ',' << s.residue_degree
                << ',' << s.num_primes << ',' << basic << "\n";
        else
            out << s.p << ": " << splitting_label(s) << " e=" << s.ramification
                << " f=" << s.residue_degree << " g=" << s.num_primes
                << (basic.empty() ? "" : " basic_index=" + basic) << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------------- coeffs

int cmd_coeffs(unsigned n, const std::string& kind_str, std::uint64_t max_k, bool dense,
               const std::string& format, const std::string& out_path, unsigned threads,
               std::ostream& out, std::ostream& err) {
    field_info(n);
    bool diff = kind_str == "diff";
    CoefficientTable table;
    if (diff) {
        table = coefficient_table(n, Kind::multiple, max_k, threads);
        CoefficientTable simple = coefficient_table(n, Kind::simple, max_k, threads);
        for (std::uint64_t k = 1; k <= max_k; ++k) table.values[k] -= simple.values[k];
    } else {
        table = coefficient_table(n, parse_kind(kind_str), max_k, threads);
    }

    std::ostringstream body;
    if (format == "json") {
        json j = json_envelope("coeffs",
                               {{"n", n}, {"kind", kind_str}, {"max_k", max_k}, {"dense", dense}});
        auto& results = j["results"] = json::array();
        for (std::uint64_t k = 1; k <= max_k; ++k)
            if (dense || table.values[k] != 0) results.push_back({{"k", k}, {"value", table.values[k]}});
        body << j.dump() << "\n";
    } else {
        body << "k,value\n";
        for (std::uint64_t k = 1; k <= max_k; ++k)
            if (dense || table.values[k] != 0) body << k << ',' << table.values[k] << "\n";
    }

    if (out_path.empty()) {
        out << body.str();
        return kExitOk;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file || !(file << body.str()) || !file.flush()) {
        err << "error: cannot write " << out_path << "\n";
        return kExitIo;
    }
    return kExitOk;
}

// ---------------------------------------------------------------------- residues

int cmd_residues(std::vector<unsigned> ns, bool check, double tol, const std::string& format,
                 std::ostream& out, std::ostream& err) {
    std::vector<ResidueReport> reports;
    reports.reserve(ns.size());
    for (unsigned n : ns) reports.push_back(residues(n));

    if (format == "json") {
        json j = json_envelope("residues", {{"check", check}, {"tol", tol}});
        auto& results = j["results"] = json::array();
        for (const ResidueReport& r : reports)
            results.push_back({{"n", r.n},
                               {"alpha", r.alpha},
                               {"beta", r.beta},
                               {"gamma", r.gamma},
                               {"q", r.q},
                               {"alpha_err", r.alpha_err},
                               {"beta_err", r.beta_err},
                               {"gamma_err", r.gamma_err},
                               {"q_err", r.q_err}});
        out << j.dump() << "\n";
    } else {
        for (const ResidueReport& r : reports) {
            double worst = std::max({r.alpha_err, r.beta_err, r.gamma_err, r.q_err});
            char err_buf[32];
            std::snprintf(err_buf, sizeof err_buf, "%.1e", worst);
            out << "n=" << r.n << " alpha=" << fmt6(r.alpha) << " beta=" << fmt6(r.beta)
                << " gamma=" << fmt6(r.gamma) << " q=" << fmt6(r.q) << " err<=" << err_buf << "\n";
        }
    }

    if (!check) return kExitOk;
    std::map<unsigned, fixtures::Table3Row> expected;
    for (const auto& row : fixtures::load_table3()) expected[row.n] = row;
    int mismatches = 0;
    for (const ResidueReport& r : reports) {
        auto it = expected.find(r.n);
        if (it == expected.end()) continue;
        auto flag = [&](const char* what, double got, double want) {
            if (std::abs(got - want) > tol) {
                err << "mismatch n=" << r.n << " " << what << ": expected " << fmt6(want) << ", got "
                    << fmt6(got) << "\n";
                ++mismatches;
            }
        };
        flag("alpha", r.alpha, it->second.alpha);
        flag("beta", r.beta, it->second.beta);
        flag("gamma", r.gamma, it->second.gamma);
    }
    return mismatches == 0 ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------------- spectrum

int cmd_spectrum(unsigned n, std::uint64_t k, std::ostream& out) {
    field_info(n);
    if (!is_coincidence_index(n, k)) {
        out << "false\n";
        return kExitOk;
    }
    // Basic-index factorization: each prime power p^(l*j) contributes the
    // basic index p^l exactly j times.
    std::vector<std::uint64_t> factors;
    std::uint64_t rest = k;
    for (std::uint64_t p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        unsigned a = 0;
        while (rest % p == 0) {
            rest /= p;
            ++a;
        }
        PrimeSplitting s = classify_prime(n, p);
        for (unsigned j = 0; j < a / s.residue_degree; ++j) factors.push_back(*s.basic_index);
    }
    if (rest > 1) factors.push_back(*classify_prime(n, rest).basic_index);
    std::sort(factors.begin(), factors.end());

    out << "true: " << k << " = ";
    if (factors.empty()) {
        out << "1";
    } else {
        for (std::size_t i = 0; i < factors.size(); ++i) out << (i ? " * " : "") << factors[i];
    }
    out << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------------- verify

void check_tables(unsigned n, RunReport& report) {
    auto add = [&](const std::string& where, const std::string& want, const std::string& got) {
        report.mismatches.push_back({where, want, got});
    };

    std::map<unsigned, std::string> expected1, derived1;
    for (const auto& r : fixtures::load_table1())
        if (r.n == n) expected1[r.k] = std::to_string(r.l);
    for (const auto& r : fixtures::derive_table1())
        if (r.n == n) derived1[r.k] = std::to_string(r.l);
    if (expected1 != derived1) {
        for (const auto& [k, l] : expected1)
            if (!derived1.count(k) || derived1[k] != l)
                add("table1 n=" + std::to_string(n) + " k=" + std::to_string(k), l,
                    derived1.count(k) ? derived1[k] : "(absent)");
        for (const auto& [k, l] : derived1)
            if (!expected1.count(k)) add("table1 n=" + std::to_string(n) + " k=" + std::to_string(k), "(absent)", l);
    }

    std::vector<fixtures::Table2Row> expected2, derived2;
    for (const auto& r : fixtures::load_table2())
        if (r.n == n) expected2.push_back(r);
    for (const auto& r : fixtures::derive_table2())
        if (r.n == n) derived2.push_back(r);
    if (!(expected2 == derived2))
        add("table2 n=" + std::to_string(n), std::to_string(expected2.size()) + " rows",
            "derived rows differ");

    for (const auto& r : fixtures::load_table4()) {
        if (r.n != n) continue;
        std::uint64_t got = simple_count(n, r.k);
        if (got != r.value)
            add("table4 n=" + std::to_string(n) + " k=" + std::to_string(r.k), std::to_string(r.value),
                std::to_string(got));
    }
    for (const auto& r : fixtures::load_table5()) {
        if (r.n != n) continue;
        std::uint64_t got = multiple_count(n, r.k) - simple_count(n, r.k);
        if (got != r.value)
            add("table5 n=" + std::to_string(n) + " k=" + std::to_string(r.k), std::to_string(r.value),
                std::to_string(got));
    }
}

int cmd_verify(unsigned n, std::uint64_t max_k, bool tables_only, std::ostream& out, std::ostream& err) {
    field_info(n);
    Stopwatch watch;
    RunReport report;
    report.command = "verify";
    report.n_values = {n};

    bool counts_possible = n == 3 || n == 4;
    if (!tables_only && max_k > 0 && !counts_possible)
        out << "note: no element oracle for n=" << n << "; running table checks only\n";

    check_tables(n, report);

    if (!tables_only && max_k > 0 && counts_possible) {
        for (std::uint64_t k = 1; k <= max_k; ++k) {
            BruteForceCounts oracle = brute_force_counts(n, k);
            std::uint64_t cs = simple_count(n, k);
            std::uint64_t cb = multiple_count(n, k);
            if (oracle.simple != cs || oracle.multiple != cb) {
                report.mismatches.push_back({"counts n=" + std::to_string(n) + " k=" + std::to_string(k),
                                             "(" + std::to_string(oracle.simple) + "," +
                                                 std::to_string(oracle.multiple) + ")",
                                             "(" + std::to_string(cs) + "," + std::to_string(cb) + ")"});
                if (report.mismatches.size() > 32) break;
            }
        }
    }

    report.status = report.mismatches.empty() ? RunReport::Status::ok : RunReport::Status::mismatch;
    report.elapsed_seconds = watch.seconds();
    print_report(report, out, err);
    return report.status == RunReport::Status::ok ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------------- summatory

int cmd_summatory(unsigned n, const std::string& kind_str, std::uint64_t x,
                  const std::string& emit_path, unsigned threads, std::ostream& out,
                  std::ostream& err) {
    field_info(n);
    Kind kind = parse_kind(kind_str);
    CoefficientTable table = coefficient_table(n, kind, x, threads);

    ResidueReport rr = residues(n);
    double target = kind == Kind::simple ? rr.gamma : kind == Kind::multiple ? rr.beta : rr.alpha;

    std::uint64_t total = 0;
    std::vector<std::pair<std::uint64_t, double>> checkpoints;
    std::uint64_t next_checkpoint = 1;
    double log_step = std::pow(10.0, 0.25);
    for (std::uint64_t k = 1; k <= x; ++k) {
        total += table.values[k];
        if (k == next_checkpoint || k == x) {
            checkpoints.emplace_back(k, static_cast<double>(total) / static_cast<double>(k));
            while (next_checkpoint <= k)
                next_checkpoint = std::max<std::uint64_t>(
                    next_checkpoint + 1,
                    static_cast<std::uint64_t>(std::llround(static_cast<double>(next_checkpoint) * log_step)));
        }
    }
    double slope = static_cast<double>(total) / static_cast<double>(x);
    double deviation = (slope - target) / target;

    out << "S(" << x << ") = " << total << "\n";
    out << "S(x)/x = " << fmt6(slope) << "\n";
    out << "target residue = " << fmt6(target) << "\n";
    out << "relative deviation = " << fmt6(deviation) << "\n";

    if (!emit_path.empty()) {
        std::ofstream file(emit_path, std::ios::binary);
        if (!file) {
            err << "error: cannot write " << emit_path << "\n";
            return kExitIo;
        }
        file << "x,slope\n";
        for (const auto& [cx, cs] : checkpoints) file << cx << ',' << fmt6(cs) << "\n";
        if (!file.flush()) {
            err << "error: cannot write " << emit_path << "\n";
            return kExitIo;
        }
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"planar coincidence site modules for the 29 class-number-one cyclotomic rings"};
    app.name("ccm");
    app.require_subcommand(1);

    std::string format = "human";
    unsigned n = 3;
    std::uint64_t max_p = 100;
    std::uint64_t max_k = 0;
    std::uint64_t x = 1000;
    std::uint64_t k_arg = 1;
    std::string kind = "simple";
    std::string out_path, emit_path;
    bool dense = false, check = false, all = false, tables = false;
    double tol = 5e-7;
    unsigned threads = 1;

    CLI::App* fields = app.add_subcommand("fields", "list the 29 catalog rings");
    fields->add_option("--format", format)->check(CLI::IsMember({"human", "csv", "json"}));

    CLI::App* primes = app.add_subcommand("primes", "classify rational primes in K_n/L_n/Q");
    primes->add_option("--n", n)->required();
    primes->add_option("--max-p", max_p);
    primes->add_option("--format", format)->check(CLI::IsMember({"human", "csv", "json"}));

    CLI::App* coeffs = app.add_subcommand("coeffs", "export counting-function coefficients");
    coeffs->add_option("--n", n)->required();
    coeffs->add_option("--kind", kind)->check(CLI::IsMember({"simple", "multiple", "ideal", "diff"}));
    coeffs->add_option("--max-k", max_k)->required();
    coeffs->add_flag("--dense", dense, "emit zero values too");
    coeffs->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    coeffs->add_option("--out", out_path);
    coeffs->add_option("--threads", threads);

    CLI::App* residues_cmd = app.add_subcommand("residues", "asymptotic residue constants");
    auto* res_n = residues_cmd->add_option("--n", n);
    residues_cmd->add_flag("--all", all);
    residues_cmd->add_flag("--check", check, "compare against the embedded table fixture");
    residues_cmd->add_option("--tol", tol);
    residues_cmd->add_option("--format", format)->check(CLI::IsMember({"human", "json"}));

    CLI::App* spectrum = app.add_subcommand("spectrum", "coincidence-spectrum membership");
    spectrum->add_option("--n", n)->required();
    spectrum->add_option("k", k_arg)->required();

    CLI::App* verify = app.add_subcommand("verify", "verify tables and oracle equivalence");
    verify->add_option("--n", n)->required();
    verify->add_option("--max-k", max_k);
    verify->add_flag("--tables", tables, "table checks only");

    CLI::App* summatory = app.add_subcommand("summatory", "summatory function and slope");
    summatory->add_option("--n", n)->required();
    summatory->add_option("--kind", kind)->check(CLI::IsMember({"simple", "multiple", "ideal"}));
    summatory->add_option("--x", x)->required();
    summatory->add_option("--emit", emit_path);
    summatory->add_option("--threads", threads);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (fields->parsed()) return cmd_fields(format, out);
        if (primes->parsed()) return cmd_primes(n, max_p, format, out);
        if (coeffs->parsed()) return cmd_coeffs(n, kind, max_k, dense, format, out_path, threads, out, err);
        if (residues_cmd->parsed()) {
            std::vector<unsigned> ns;
            if (all) {
                for (const CyclotomicField& f : catalog()) ns.push_back(f.n);
            } else if (res_n->count() > 0) {
                field_info(n);
                ns.push_back(n);
            } else {
                err << "error: residues requires --n or --all\n";
                return kExitUsage;
            }
            return cmd_residues(ns, check, tol, format, out, err);
        }
        if (spectrum->parsed()) return cmd_spectrum(n, k_arg, out);
        if (verify->parsed()) return cmd_verify(n, max_k, tables, out, err);
        if (summatory->parsed()) return cmd_summatory(n, kind, x, emit_path, threads, out, err);
    } catch (const resource_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const pole_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitResource;
    }
    err << "error: no subcommand\n";
    return kExitUsage;
}

}  // namespace ccm::cli
