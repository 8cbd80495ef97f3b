#include "swvote/cli.hpp"

#include <sstream>

#include <CLI11.hpp>

#include "swvote/boolean.hpp"
#include "swvote/indices.hpp"
#include "swvote/oracle.hpp"
#include "swvote/specfile.hpp"
#include "swvote/symmetric.hpp"

namespace swvote {

namespace {

struct AnalyzeOptions {
    std::string spec_path;
    std::string format = "plain";
    std::vector<std::string> forbid;
    bool use_oracle = false;
    bool meta = false;
    int max_n = kDefaultArityCap;
};

SystemSpec load_with_flags(const std::string& path, const std::vector<std::string>& forbid) {
    SystemSpec spec = load_system_spec(path);
    for (const std::string& names : forbid)
        spec.system.forbidden.push_back(parse_forbidden_names(spec.system, names));
    return spec;
}

void print_meta(std::ostream& out, const SystemSpec& spec) {
    out << "# system " << spec.name << "  voters=" << spec.system.voter_count()
        << " rows=" << spec.system.rows.size()
        << " explicit_mwcs=" << spec.system.explicit_mwcs.size()
        << " forbidden=" << spec.system.forbidden.size() << "\n";
}

int run_analyze(const AnalyzeOptions& opt, std::ostream& out, std::ostream& err) {
    SystemSpec spec = load_with_flags(opt.spec_path, opt.forbid);
    ReportFormat fmt = parse_format(opt.format);
    IndexReport report = full_report(spec.system, opt.max_n);
    if (opt.use_oracle) {
        IndexReport reference = oracle::oracle_report(spec.system, opt.max_n);
        if (!(report == reference)) {
            err << "oracle mismatch for system " << spec.name << "\n";
            err << "algebraic:\n" << render_report(report, ReportFormat::Csv);
            err << "oracle:\n" << render_report(reference, ReportFormat::Csv);
            return kExitMismatch;
        }
    }
    if (opt.meta) print_meta(out, spec);
    out << render_report(report, fmt);
    return kExitOk;
}

int run_dump_table(const AnalyzeOptions& opt, std::ostream& out) {
    SystemSpec spec = load_with_flags(opt.spec_path, opt.forbid);
    SwitchingFunction f = decision_function(spec.system, opt.max_n);
    RestrictedSystem rs = apply_restrictions(f, spec.system.forbidden);
    auto polarity_line = [&](const SwitchingFunction& h) {
        std::string line = "polarity";
        for (int v = 0; v < h.var_count(); ++v)
            line += " " + spec.system.voters[v] + "=" + to_string(polarity(h, v));
        return line + "\n";
    };
    if (opt.meta) print_meta(out, spec);
    out << "f\n" << rs.base.dump() << polarity_line(rs.base);
    out << "g\n" << rs.restricted.dump() << polarity_line(rs.restricted);
    return kExitOk;
}

// Per (n, k): engine-computed TBP and PGI against the binomial closed
// forms, for the plain rule and for the rule with the first two voters
// barred from cooperating.
int run_sweep(int n_max, std::ostream& out) {
    ensure_arity(n_max, kDefaultArityCap);
    bool ok = true;
    for (int n = 3; n <= n_max; ++n) {
        for (int k = 2; k <= n; ++k) {
            VotingSystem sys = k_of_n_system(n, k);
            IndexReport plain = full_report(sys);
            long long expect_plain = (long long)binomial(n - 1, k - 1);

            sys.forbidden.push_back(make_forbidden({0, 1}));
            IndexReport restricted = full_report(sys);
            long long expect_pair = (long long)binomial(n - 2, k - 1);
            long long expect_rest =
                (long long)(binomial(n - 3, k - 1) + 2 * binomial(n - 3, k - 2));

            bool line_ok = true;
            for (const VoterIndices& v : plain.rows)
                line_ok = line_ok && v.tbp == expect_plain && v.pgi == expect_plain;
            for (int m = 0; m < n; ++m) {
                long long expect = m < 2 ? expect_pair : expect_rest;
                line_ok = line_ok && restricted.rows[m].tbp == expect &&
                          restricted.rows[m].pgi == expect;
            }

            out << "n=" << n << " k=" << k << " | unrestricted tbp=" << plain.rows[0].tbp
                << " pgi=" << plain.rows[0].pgi << " expect=" << expect_plain
                << " | restricted tbp12=" << restricted.rows[0].tbp
                << " expect12=" << expect_pair << " tbp3=" << restricted.rows[n - 1].tbp
                << " expect3=" << expect_rest << " pgi12=" << restricted.rows[0].pgi
                << " pgi3=" << restricted.rows[n - 1].pgi << " | "
                << (line_ok ? "ok" : "MISMATCH") << "\n";
            ok = ok && line_ok;
        }
    }
    return ok ? kExitOk : kExitMismatch;
}

} // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Voting-power analysis of weighted yes-no systems with optional\n"
                 "restrictions on coalition formation.",
                 "swvote"};
    app.require_subcommand(1);

    AnalyzeOptions analyze_opt;
    CLI::App* analyze = app.add_subcommand("analyze", "Compute all power indices of a system");
    analyze->add_option("spec", analyze_opt.spec_path, "System spec file (JSON)")->required();
    analyze->add_flag("--oracle", analyze_opt.use_oracle,
                      "Cross-check against the brute-force reference");
    analyze->add_option("--format", analyze_opt.format, "Output format: plain, csv, jsonl");
    analyze->add_option("--forbid", analyze_opt.forbid,
                        "Extra forbidden coalition, as comma-separated voter names");
    analyze->add_option("--max-n", analyze_opt.max_n, "Override the voter-count cap");
    analyze->add_flag("--meta", analyze_opt.meta, "Prepend a run-metadata line");

    int n_max = 8;
    CLI::App* sweep = app.add_subcommand(
        "sweep-kofn", "Check k-of-n systems against their closed-form indices");
    sweep->add_option("--n-max", n_max, "Largest committee size to sweep")->required();

    AnalyzeOptions dump_opt;
    CLI::App* dump = app.add_subcommand("dump-table", "Dump decision-function truth tables");
    dump->add_option("spec", dump_opt.spec_path, "System spec file (JSON)")->required();
    dump->add_option("--forbid", dump_opt.forbid,
                     "Extra forbidden coalition, as comma-separated voter names");
    dump->add_option("--max-n", dump_opt.max_n, "Override the voter-count cap");
    dump->add_flag("--meta", dump_opt.meta, "Prepend a run-metadata line");

    std::vector<const char*> argv{"swvote"};
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitInputError;
    }

    try {
        if (analyze->parsed()) return run_analyze(analyze_opt, out, err);
        if (sweep->parsed()) return run_sweep(n_max, out);
        if (dump->parsed()) return run_dump_table(dump_opt, out);
    } catch (const arity_cap_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitCapExceeded;
    } catch (const spec_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}

} // namespace swvote
