// ppzc command-line tool: sequence generation, figure/table data export,
// orthogonal sets, equivalence witnesses, polynomial inverses, theory sweeps
// and the permutation census.

#include "ppzc/ppzc.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace ppzc;

namespace {

enum Exit { ok = 0, usage = 1, precondition = 2, verification = 3, budget_exceeded = 4 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    std::string n_spec;
    i64 u = 1;
    i64 q = 0;
    double tol = kDefaultTol;
    unsigned workers = default_workers();
    std::string budget;
    std::string out;
    bool long_run = false;
};

i64 parse_int(const std::string& s) {
    try {
        std::size_t used = 0;
        const i64 v = std::stoll(s, &used);
        if (used != s.size()) throw UsageError("");
        return v;
    } catch (const std::exception&) {
        throw UsageError("not an integer: '" + s + "'");
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, sep)) parts.push_back(item);
    return parts;
}

/// "25", "4,8,16", "3..10", or a comma list mixing both.
std::vector<i64> parse_n_list(const std::string& spec) {
    if (spec.empty()) throw UsageError("--N is required");
    std::vector<i64> ns;
    for (const auto& part : split(spec, ',')) {
        const auto dots = part.find("..");
        if (dots == std::string::npos) {
            ns.push_back(parse_int(part));
        } else {
            const i64 lo = parse_int(part.substr(0, dots));
            const i64 hi = parse_int(part.substr(dots + 2));
            if (hi < lo) throw UsageError("empty range '" + part + "'");
            for (i64 n = lo; n <= hi; ++n) ns.push_back(n);
        }
    }
    for (i64 n : ns) {
        if (n < 1) throw UsageError("N must be positive");
    }
    return ns;
}

i64 single_n(const Globals& g) {
    const auto ns = parse_n_list(g.n_spec);
    if (ns.size() != 1) throw UsageError("this command takes a single --N");
    return ns.front();
}

/// Comma list written highest degree first, returned lowest degree first.
std::vector<i64> parse_coeffs(const std::string& s) {
    std::vector<i64> c;
    for (const auto& part : split(s, ',')) c.push_back(parse_int(part));
    if (c.empty()) throw UsageError("empty coefficient list");
    std::reverse(c.begin(), c.end());
    return c;
}

/// Coefficients of a fixed-degree polynomial written highest degree first
/// with an optional trailing f0.
std::vector<i64> parse_with_f0(const std::string& s, std::size_t degree, const char* usage) {
    const auto parts = split(s, ',');
    if (parts.size() != degree && parts.size() != degree + 1) throw UsageError(usage);
    auto c = parse_coeffs(s);
    if (parts.size() == degree) c.insert(c.begin(), 0);
    return c;
}

/// "f2,f1[,f0]" for a QPP.
PermPoly parse_qpp(i64 n, const std::string& s) {
    auto parts = split(s, ',');
    if (parts.size() < 2 || parts.size() > 3) throw UsageError("QPP expects f2,f1[,f0]");
    const i64 f2 = mod(parse_int(parts[0]), n), f1 = mod(parse_int(parts[1]), n);
    const i64 f0 = parts.size() == 3 ? mod(parse_int(parts[2]), n) : 0;
    if (f2 == 0 || !is_qpp_valid(n, f2, f1)) {
        throw InvalidQpp("(f2=" + std::to_string(f2) + ", f1=" + std::to_string(f1) + ") is not a valid QPP for N=" +
                         std::to_string(n));
    }
    return PermPoly(n, {f0, f1, f2});
}

std::string sha256_hex(const std::string& data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 15];
    }
    return out;
}

std::string utc_now() {
    const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void write_file(const fs::path& path, const std::string& data) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream f(path, std::ios::binary);
    if (!f) throw PreconditionError("cannot write " + path.string());
    f << data;
}

nlohmann::ordered_json parameters_json(const Globals& g) {
    nlohmann::ordered_json p;
    p["N"] = g.n_spec;
    p["u"] = g.u;
    p["q"] = g.q;
    p["tol"] = g.tol;
    p["budget"] = g.budget.empty() ? "none" : g.budget;
    p["workers"] = g.workers;
    p["long"] = g.long_run;
    return p;
}

/// Writes data files into `dir` plus a manifest.json listing their digests.
void write_with_manifest(const fs::path& dir, const std::string& command, const Globals& g, const std::string& started,
                         const std::vector<std::pair<std::string, std::string>>& files, bool partial) {
    nlohmann::ordered_json m;
    m["command"] = command;
    m["parameters"] = parameters_json(g);
    m["version"] = PPZC_VERSION;
    m["started"] = started;
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& [name, data] : files) {
        write_file(dir / name, data);
        list.push_back({{"path", name}, {"sha256", sha256_hex(data)}, {"bytes", data.size()}});
    }
    m["files"] = list;
    m["budget_exceeded"] = partial;
    m["finished"] = utc_now();
    write_file(dir / "manifest.json", m.dump(2) + '\n');
}

CensusOptions census_options(const Globals& g) {
    CensusOptions opt;
    opt.budget = Budget::parse(g.budget);
    opt.workers = g.workers;
    opt.tol = g.tol;
    return opt;
}

// ---- generate ---------------------------------------------------------------

struct GenerateArgs {
    std::vector<std::string> qpp, lpp, cpp, poly, inverse_of_qpp, perm;
    bool qpp_all = false;
};

int cmd_generate(const Globals& g, const GenerateArgs& a) {
    std::string out;
    for (i64 n : parse_n_list(g.n_spec)) {
        const auto x = zc_phases(n, g.u, g.q);
        std::vector<PhaseSeq> seqs;
        for (const auto& s : a.qpp) seqs.push_back(interleave(x, parse_qpp(n, s)));
        if (a.qpp_all) {
            const auto all = enumerate_qpps(n, false);
            if (all.empty()) std::cerr << "warning: no valid QPP for N=" << n << '\n';
            for (const auto& p : all) seqs.push_back(interleave(x, p));
        }
        for (const auto& s : a.lpp) {
            PermPoly p(n, parse_with_f0(s, 1, "--lpp expects f1[,f0]"));
            seqs.push_back(interleave(x, p));
        }
        for (const auto& s : a.cpp) {
            PermPoly p(n, parse_with_f0(s, 3, "--cpp expects f3,f2,f1[,f0]"));
            if (p.degree() != 3) throw UsageError("--cpp expects f3,f2,f1[,f0] with f3 != 0");
            seqs.push_back(interleave(x, p));
        }
        for (const auto& s : a.poly) seqs.push_back(interleave(x, PermPoly(n, parse_coeffs(s))));
        for (const auto& s : a.inverse_of_qpp) {
            const auto p = parse_qpp(n, s);
            auto y = interleave(x, invert_permutation(p.table()));
            y.meta().kind = InterleaverKind::inverse_of_qpp;
            y.meta().coeffs = p.coeffs();
            seqs.push_back(std::move(y));
        }
        for (const auto& s : a.perm) {
            std::vector<i64> table;
            for (const auto& part : split(s, ',')) table.push_back(parse_int(part));
            auto y = interleave(x, PermArray(table));
            y.meta().coeffs = table;
            seqs.push_back(std::move(y));
        }
        const bool any_interleaver = a.qpp_all || !a.qpp.empty() || !a.lpp.empty() || !a.cpp.empty() || !a.poly.empty() ||
                                     !a.inverse_of_qpp.empty() || !a.perm.empty();
        if (!any_interleaver) seqs.push_back(x);

        for (const auto& y : seqs) {
            auto rec = make_record(y, g.u, g.q, g.tol);
            if (n <= kDefaultUniquenessCap) rec.unique = !find_witness(y).has_value();
            const auto line = to_line(rec);
            const auto problem = verify_record(parse_line(line), g.tol);
            if (!problem.empty()) {
                std::cerr << "error: record failed re-verification: " << problem << '\n';
                return verification;
            }
            out += line;
        }
    }
    if (g.out.empty()) {
        std::cout << out;
    } else {
        write_file(g.out, out);
    }
    return ok;
}

// ---- report -----------------------------------------------------------------

int cmd_report(const Globals& g, const std::string& kind) {
    const auto started = utc_now();
    const auto ns = parse_n_list(g.n_spec);
    std::string csv;
    bool partial = false;
    if (kind == "fig1") {
        for (i64 n : ns) {
            if (n > kDefaultUniquenessCap) throw CapExceeded("fig1: N=" + std::to_string(n) + " exceeds cap 128");
        }
        csv = fig1_csv(ns, g.u, g.workers);
    } else if (kind == "fig2") {
        csv = fig2_csv(ns, g.u);
    } else if (kind == "fig3") {
        csv = fig3_csv(ns, g.u, g.workers);
    } else if (kind == "table1") {
        const auto rep = table1_report(ns, g.u, census_options(g), g.long_run ? kCensusMaxN : 10);
        csv = rep.csv;
        partial = rep.budget_exceeded;
    } else {
        throw UsageError("report kind must be fig1, fig2, fig3 or table1");
    }
    if (g.out.empty()) {
        std::cout << csv;
    } else {
        write_with_manifest(g.out, "report " + kind, g, started, {{kind + ".csv", csv}}, partial);
    }
    if (partial) std::cerr << "warning: budget exceeded; incomplete columns left empty\n";
    return partial ? budget_exceeded : ok;
}

// ---- orthoset ---------------------------------------------------------------

int cmd_orthoset(const Globals& g, bool greedy, std::uint64_t nodes) {
    int status = ok;
    std::string csv = "N,vertices,edges,I,upper_bound,certificate,mode,complete,qpps\n";
    for (i64 n : parse_n_list(g.n_spec)) {
        const auto graph = build_ortho_graph(n, g.u, g.tol, g.workers);
        const auto r = max_orthogonal_set(graph, greedy ? CliqueMode::greedy : CliqueMode::exact, nodes);
        std::string qpps;
        for (const auto& p : r.qpps) {
            if (!qpps.empty()) qpps += ';';
            qpps += p.to_string();
        }
        char cert[32];
        std::snprintf(cert, sizeof cert, "%.3e", r.certificate);
        csv += std::to_string(n) + ',' + std::to_string(graph.size()) + ',' + std::to_string(graph.edge_count()) + ',' +
               std::to_string(r.size) + ',' + std::to_string(r.upper_bound) + ',' + cert + ',' + (greedy ? "greedy" : "exact") + ',' +
               (r.budget_exceeded ? "false" : "true") + ',' + qpps + '\n';
        if (r.certificate > g.tol) status = verification;
        if (r.budget_exceeded && status == ok) status = budget_exceeded;
    }
    if (g.out.empty()) {
        std::cout << csv;
    } else {
        write_file(g.out, csv);
    }
    return status;
}

// ---- equiv ------------------------------------------------------------------

int cmd_equiv(const Globals& g, const std::string& qpp) {
    const i64 n = single_n(g);
    if (qpp.empty()) throw UsageError("equiv needs --qpp f2,f1");
    const auto p = parse_qpp(n, qpp);
    if (p.coeff(0) != 0) throw UsageError("equiv requires f0 = 0");
    if (gcd(g.u, n) != 1) throw BadRoot("u not relatively prime to N");
    const auto w = reachable_by_basic_ops(n, g.u, p);
    if (!w) {
        std::cout << "unique\n";
        return ok;
    }
    std::cout << "witness u2=" << w->u2 << " d=" << w->d << " a=" << w->a << " v=" << w->v << " s=" << w->s << '\n';
    if (!sequences_equal(replay(*w, n), interleave(zc_phases(n, g.u, 0), p))) {
        std::cerr << "error: witness replay mismatch\n";
        return verification;
    }
    return ok;
}

// ---- invert -----------------------------------------------------------------

int cmd_invert(const Globals& g, const std::string& poly, int max_degree) {
    const i64 n = single_n(g);
    if (poly.empty()) throw UsageError("invert needs --poly");
    if (max_degree < 1 || max_degree > 4) throw UsageError("--max-degree must be in 1..4");
    const PermPoly p(n, parse_coeffs(poly));
    const auto inv = polynomial_inverses(p, max_degree);
    for (const auto& h : inv) std::cout << h.to_string() << '\n';
    std::cerr << inv.size() << " inverse(s) of degree <= " << max_degree << '\n';
    return ok;
}

// ---- theory -----------------------------------------------------------------

int cmd_theory(const Globals& g) {
    const auto ns = parse_n_list(g.n_spec.empty() ? "64" : g.n_spec);
    const i64 n_max = *std::max_element(ns.begin(), ns.end());
    if (n_max > kTheoryMaxN) throw CapExceeded("theory: N exceeds cap " + std::to_string(kTheoryMaxN));
    bool failed = false;
    for (const auto& s : sweep_theory(n_max, g.workers)) {
        std::cout << s.name << ": cases=" << s.cases << " failures=" << s.failures;
        if (s.name == "lemma1") std::cout << " not_covered=" << s.not_covered;
        if (!s.first_failure.empty()) std::cout << " first_failure=" << s.first_failure;
        std::cout << '\n';
        failed = failed || !s.passed();
    }
    return failed ? verification : ok;
}

// ---- census -----------------------------------------------------------------

int cmd_census(const Globals& g, const std::string& checkpoint, bool full_pacf) {
    auto opt = census_options(g);
    if (!checkpoint.empty()) opt.checkpoint = checkpoint;
    opt.early_exit = !full_pacf;
    int status = ok;
    for (i64 n : parse_n_list(g.n_spec)) {
        const auto r = cazac_permutation_census(n, g.u, opt);
        std::cout << "N=" << n << " u=" << g.u << " count=" << r.count << " total=" << r.total
                  << " complete=" << (r.complete ? "true" : "false") << " resumed_units=" << r.resumed_units << '\n';
        if (!r.complete) status = budget_exceeded;
    }
    return status;
}

// ---- verify -----------------------------------------------------------------

int cmd_verify(const Globals& g, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot read " + path);
    std::string line;
    std::size_t count = 0, bad = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ++count;
        const auto problem = verify_record(parse_line(line), g.tol);
        if (!problem.empty()) {
            ++bad;
            std::cerr << "record " << count << ": " << problem << '\n';
        }
    }
    std::cout << count << " record(s), " << bad << " failed\n";
    return bad ? verification : ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Permutation-polynomial interleaved Zadoff-Chu sequence toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(PPZC_VERSION));

    Globals g;
    app.add_option("--N", g.n_spec, "Length: single value, list (4,8) or range (3..10)");
    app.add_option("--u", g.u, "Root index")->capture_default_str();
    app.add_option("--q", g.q, "Zadoff-Chu shift parameter")->capture_default_str();
    app.add_option("--tol", g.tol, "Normalized zero-test tolerance")->capture_default_str();
    app.add_option("--workers", g.workers, "Worker threads (default: PPZC_WORKERS or logical cores)")
        ->check(CLI::PositiveNumber);
    app.add_option("--budget", g.budget, "Work limit: seconds (30s) or item count");
    app.add_option("--out", g.out, "Output file (generate, orthoset) or directory (report)");
    app.add_flag("--long", g.long_run, "Enable long-running columns (N! census for N = 11, 12)");

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "Emit catalog records for Zadoff-Chu and interleaved sequences");
    generate->add_option("--qpp", gen.qpp, "QPP f2,f1[,f0]");
    generate->add_flag("--qpp-all", gen.qpp_all, "Every valid QPP with f0 = 0");
    generate->add_option("--lpp", gen.lpp, "LPP f1[,f0]");
    generate->add_option("--cpp", gen.cpp, "CPP f3,f2,f1[,f0]");
    generate->add_option("--poly", gen.poly, "Permutation polynomial, highest degree first");
    generate->add_option("--inverse-of-qpp", gen.inverse_of_qpp, "Inverse permutation of QPP f2,f1[,f0]");
    generate->add_option("--perm", gen.perm, "Explicit permutation table");

    std::string report_kind;
    auto* report = app.add_subcommand("report", "Write figure/table data as CSV");
    report->add_option("kind", report_kind, "fig1 | fig2 | fig3 | table1")->required();

    bool greedy = false, exact = false;
    std::uint64_t nodes = kDefaultNodeBudget;
    auto* orthoset = app.add_subcommand("orthoset", "Largest set of mutually orthogonal QPP interleaves");
    orthoset->add_flag("--exact", exact, "Exact maximum clique (default)");
    orthoset->add_flag("--greedy", greedy, "Greedy maximal clique");
    orthoset->add_option("--node-budget", nodes, "Branch-and-bound node limit")->capture_default_str();

    std::string equiv_qpp;
    auto* equiv = app.add_subcommand("equiv", "Find a basic-operation witness for a QPP interleave");
    equiv->add_option("--qpp", equiv_qpp, "QPP f2,f1");

    std::string invert_poly;
    int max_degree = 2;
    auto* invert = app.add_subcommand("invert", "Polynomial inverses of a permutation polynomial");
    invert->add_option("--poly", invert_poly, "Polynomial, highest degree first");
    invert->add_option("--max-degree", max_degree, "Largest inverse degree (1..4)")->capture_default_str();

    auto* theory = app.add_subcommand("theory", "Sweep the lemma and theorem checkers for N up to --N");

    std::string checkpoint;
    bool full_pacf = false;
    auto* census = app.add_subcommand("census", "Count CAZAC-preserving permutations among all N!");
    census->add_option("--checkpoint", checkpoint, "Append completed work units here and resume from them");
    census->add_flag("--full-pacf", full_pacf, "Disable early exit");

    std::string verify_path;
    auto* verify = app.add_subcommand("verify", "Re-verify a catalog file");
    verify->add_option("file", verify_path, "Catalog (JSON lines)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : usage;
    }
    if (greedy && exact) {
        std::cerr << "error: --exact and --greedy are exclusive\n";
        return usage;
    }

    try {
        if (*generate) return cmd_generate(g, gen);
        if (*report) return cmd_report(g, report_kind);
        if (*orthoset) return cmd_orthoset(g, greedy, nodes);
        if (*equiv) return cmd_equiv(g, equiv_qpp);
        if (*invert) return cmd_invert(g, invert_poly, max_degree);
        if (*theory) return cmd_theory(g);
        if (*census) return cmd_census(g, checkpoint, full_pacf);
        if (*verify) return cmd_verify(g, verify_path);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const NotBijective& e) {
        std::cerr << "error: NotBijective: " << e.what() << '\n';
        return precondition;
    } catch (const BadRoot& e) {
        std::cerr << "error: BadRoot: " << e.what() << '\n';
        return precondition;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return precondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return verification;
    }
    return usage;
}
