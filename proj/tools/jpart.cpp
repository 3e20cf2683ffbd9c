// Command-line front end: single queries, table emitters and the
// multi-leg verification sweep. Exit codes: 0 ok, 1 verification
// mismatch, 2 usage error.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "jpart/gfp.hpp"
#include "jpart/recursion.hpp"
#include "jpart/standardness.hpp"
#include "jpart/sweep.hpp"

namespace {

using jpart::Int;

bool is_prime(Int p) {
    if (p < 2) return false;
    for (Int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

int require_prime(Int p) {
    if (!is_prime(p)) {
        std::cerr << "error: -p/--prime must be a prime, got " << p << "\n";
        return 2;
    }
    return 0;
}

int require_positive(Int v, const char* name) {
    if (v < 1) {
        std::cerr << "error: " << name << " must be >= 1, got " << v << "\n";
        return 2;
    }
    return 0;
}

std::string join(const std::vector<Int>& v, const char* sep) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << sep;
        out << v[i];
    }
    return out.str();
}

const char* flag_text(bool b) { return b ? "true" : "false"; }

// Criterion label for table rows: the closed-form family that certifies a
// standard partition, plain "direct" otherwise (and always for p = 2).
std::string table_criterion(Int m, Int n, Int p, bool standard) {
    if (p == 2 || !standard) return "direct";
    return jpart::criterion_name(jpart::classify(m, n, p).criterion);
}

int run_compute(Int p, Int m, Int n, const std::string& format) {
    if (int rc = require_prime(p)) return rc;
    if (int rc = require_positive(m, "m")) return rc;
    if (int rc = require_positive(n, "n")) return rc;

    const jpart::JordanPartition lp = jpart::jordan_partition(m, n, p);
    const bool standard = jpart::is_standard(lp);

    if (format == "text") {
        std::cout << join(lp.parts, " ") << "\n";
    } else if (format == "json") {
        nlohmann::json j;
        j["p"] = p;
        j["m"] = m;
        j["n"] = n;
        j["parts"] = lp.parts;
        j["standard"] = standard;
        std::cout << j.dump() << "\n";
    } else {  // csv
        std::cout << "p,m,n,parts,standard\n"
                  << p << "," << m << "," << n << "," << join(lp.parts, ";") << ","
                  << flag_text(standard) << "\n";
    }
    return 0;
}

int run_sequence(Int p, Int m, Int n, bool trace) {
    if (int rc = require_prime(p)) return rc;
    if (m < 0 || n < 0) {
        std::cerr << "error: m and n must be >= 0\n";
        return 2;
    }
    if (m > n) std::swap(m, n);

    jpart::CaseTrace calls;
    const jpart::SignedSequence s = jpart::sp(m, n, p, trace ? &calls : nullptr);
    std::cout << join(s.terms(), " ") << "\n";
    if (trace) {
        for (const jpart::TraceEntry& e : calls) {
            std::cout << "depth=" << e.depth << " m=" << e.m << " n=" << e.n;
            if (e.which == jpart::SpCase::base) {
                std::cout << " case=base\n";
            } else {
                std::cout << " case=" << static_cast<int>(e.which) << " k=" << e.rf.k
                          << " a=" << e.rf.a << " b=" << e.rf.b << " c=" << e.rf.c
                          << " d=" << e.rf.d << "\n";
            }
        }
    }
    return 0;
}

int run_standard(Int p, Int m, Int n, const std::string& format) {
    if (int rc = require_prime(p)) return rc;
    if (int rc = require_positive(m, "m")) return rc;
    if (int rc = require_positive(n, "n")) return rc;

    jpart::Verdict v;
    if (p == 2) {
        std::cerr << "warning: p=2 classification open; using the direct computation\n";
        v.standard = jpart::standard_direct(m, n, p);
        v.criterion = jpart::Criterion::direct;
    } else {
        v = jpart::classify(m, n, p);
    }

    if (format == "json") {
        nlohmann::json j;
        j["p"] = p;
        j["m"] = m;
        j["n"] = n;
        j["standard"] = v.standard;
        j["criterion"] = jpart::criterion_name(v.criterion);
        j["witness"] = v.witness;
        std::cout << j.dump() << "\n";
    } else if (v.standard) {
        std::cout << "standard (" << jpart::criterion_name(v.criterion)
                  << (v.witness.empty() ? "" : ": " + v.witness) << ")\n";
    } else {
        std::cout << "not standard (" << jpart::criterion_name(v.criterion) << ")\n";
    }
    return 0;
}

int run_table(Int p, Int max_m, Int max_n, const std::string& format) {
    if (int rc = require_prime(p)) return rc;
    if (int rc = require_positive(max_m, "--max-m")) return rc;
    if (int rc = require_positive(max_n, "--max-n")) return rc;

    struct Row {
        Int m, n;
        std::string parts;
        bool standard;
        std::string criterion;
    };
    std::vector<Row> rows;
    for (Int m = 1; m <= max_m; ++m)
        for (Int n = m; n <= max_n; ++n) {
            const jpart::JordanPartition lp = jpart::jordan_partition(m, n, p);
            const bool standard = jpart::is_standard(lp);
            rows.push_back({m, n, join(lp.parts, ";"), standard,
                            table_criterion(m, n, p, standard)});
        }

    if (format == "csv") {
        std::cout << "p,m,n,parts,standard,criterion\n";
        for (const Row& r : rows)
            std::cout << p << "," << r.m << "," << r.n << "," << r.parts << ","
                      << flag_text(r.standard) << "," << r.criterion << "\n";
    } else {  // tex
        std::cout << "\\begin{tabular}{rrrlll}\n"
                  << "p & m & n & parts & standard & criterion \\\\\n\\hline\n";
        for (const Row& r : rows)
            std::cout << p << " & " << r.m << " & " << r.n << " & " << r.parts << " & "
                      << flag_text(r.standard) << " & " << r.criterion << " \\\\\n";
        std::cout << "\\end{tabular}\n";
    }
    return 0;
}

int run_verify(Int p, Int budget, Int max_m, Int max_n,
               const std::vector<std::string>& path_names, int jobs) {
    if (int rc = require_prime(p)) return rc;
    if (int rc = require_positive(budget, "--budget")) return rc;
    if (int rc = require_positive(max_m, "--max-m")) return rc;
    if (int rc = require_positive(max_n, "--max-n")) return rc;

    jpart::SweepOptions opt;
    opt.p = p;
    opt.budget = budget;
    opt.max_m = max_m;
    opt.max_n = max_n;
    opt.jobs = jobs;

    if (path_names.empty()) {
        opt.legs = {jpart::Leg::recursion_oracle, jpart::Leg::direct_prop1};
        if (p != 2) opt.legs.push_back(jpart::Leg::direct_theorems);
    } else {
        for (const std::string& name : path_names) {
            if (name == "recursion-oracle") {
                opt.legs.push_back(jpart::Leg::recursion_oracle);
            } else if (name == "direct-prop1") {
                opt.legs.push_back(jpart::Leg::direct_prop1);
            } else if (name == "direct-theorems") {
                opt.legs.push_back(jpart::Leg::direct_theorems);
            } else {
                std::cerr << "error: --paths must be one of recursion-oracle, "
                             "direct-prop1, direct-theorems; got "
                          << name << "\n";
                return 2;
            }
        }
    }

    opt.on_mismatch = [p](const jpart::Mismatch& mm) {
        std::cerr << "mismatch p=" << p << " m=" << mm.m << " n=" << mm.n << " "
                  << mm.leg_a << "=[" << join(mm.a, " ") << "] " << mm.leg_b << "=["
                  << join(mm.b, " ") << "]\n";
    };

    const jpart::SweepReport report = jpart::run_sweep(opt);
    std::cout << jpart::report_to_json(report) << "\n";
    return report.mismatches.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Jordan partitions of tensor products of unipotent Jordan blocks "
                 "over GF(p)"};
    app.require_subcommand(1);

    Int p = 0, m = 0, n = 0;
    std::string compute_format = "text";
    bool trace = false;
    Int table_max_m = 10, table_max_n = 10;
    std::string table_format = "csv";
    Int budget = 900, max_m = 200, max_n = 200;
    std::vector<std::string> paths;
    int jobs = 0;

    CLI::App* compute = app.add_subcommand("compute", "decomposition of V_m (x) V_n");
    compute->add_option("-p,--prime", p, "prime characteristic")->required();
    compute->add_option("m", m, "first factor dimension")->required();
    compute->add_option("n", n, "second factor dimension")->required();
    compute->add_option("--format", compute_format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    CLI::App* sequence = app.add_subcommand("sequence", "full signed sequence");
    sequence->add_option("-p,--prime", p, "prime characteristic")->required();
    sequence->add_option("m", m, "first factor dimension")->required();
    sequence->add_option("n", n, "second factor dimension")->required();
    sequence->add_flag("--trace", trace, "print one line per recursive call");

    CLI::App* standard = app.add_subcommand("standard", "standardness verdict");
    standard->add_option("-p,--prime", p, "prime characteristic")->required();
    standard->add_option("m", m, "first factor dimension")->required();
    standard->add_option("n", n, "second factor dimension")->required();
    std::string standard_format = "text";
    standard->add_option("--format", standard_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* table = app.add_subcommand("table", "decomposition table");
    table->add_option("-p,--prime", p, "prime characteristic")->required();
    table->add_option("--max-m", table_max_m, "largest m");
    table->add_option("--max-n", table_max_n, "largest n");
    table->add_option("--format", table_format, "csv or tex")
        ->check(CLI::IsMember({"csv", "tex"}));

    CLI::App* verify = app.add_subcommand("verify", "cross-check independent legs");
    verify->add_option("-p,--prime", p, "prime characteristic")->required();
    verify->add_option("--budget", budget, "max m*n on the oracle leg");
    verify->add_option("--max-m", max_m, "predicate-leg bound on m");
    verify->add_option("--max-n", max_n, "predicate-leg bound on n");
    verify
        ->add_option("--paths", paths,
                     "legs to compare: recursion-oracle, direct-prop1, direct-theorems")
        ->delimiter(',');
    verify->add_option("--jobs", jobs, "worker threads (0 = all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*compute) return run_compute(p, m, n, compute_format);
        if (*sequence) return run_sequence(p, m, n, trace);
        if (*standard) return run_standard(p, m, n, standard_format);
        if (*table) return run_table(p, table_max_m, table_max_n, table_format);
        if (*verify) return run_verify(p, budget, max_m, max_n, paths, jobs);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
