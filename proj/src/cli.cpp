#include "rcd/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rcd/constructions.hpp"
#include "rcd/io.hpp"
#include "rcd/oracle.hpp"

namespace rcd {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitDisagree = 3;

ArrayGeneratorMatrix load_agm(const std::string& path, std::istream& in) {
    if (path == "-") return read_agm(in);
    return read_agm_file(path);
}

struct ConstructOptions {
    unsigned s = 0;
    std::size_t p = 0, q = 0;
    bool full = false, frac1 = false, transpose = false;
    std::string output = "-";
    std::string expand_path;
    std::string format = "csv";
    std::size_t cell_cap = kDefaultCellCap;
};

int cmd_construct(const ConstructOptions& opt, std::ostream& out, std::ostream& err) {
    ConstructionRequest request{opt.s, opt.p, opt.q,
                                opt.full ? DesignKind::FullFactorial
                                         : DesignKind::FractionalMinusOne};
    if (opt.transpose) std::swap(request.p, request.q);
    Construction built = construct(request);
    ArrayGeneratorMatrix agm =
        opt.transpose ? built.agm.transposed_blocks() : built.agm;

    err << "built " << to_string(built.branch);
    switch (built.certificate) {
        case ProvenCertificate::Prop2:
            err << " (efficiency-1 certificate holds)";
            break;
        case ProvenCertificate::Prop3:
            err << " (p=1 optimality certificate holds)";
            break;
        case ProvenCertificate::ExternalBound:
            err << " (" << built.note << ")";
            break;
    }
    err << "\n";

    if (opt.output == "-") {
        write_agm(out, agm);
    } else {
        write_agm_file(opt.output, agm);
    }

    if (!opt.expand_path.empty()) {
        RowColumnDesign design = expand(agm, opt.cell_cap);
        std::ofstream file(opt.expand_path);
        if (!file) throw IoError("cannot open '" + opt.expand_path + "' for writing");
        if (opt.format == "json") {
            file << design_to_json(design).dump(2) << "\n";
        } else {
            write_design_csv(file, design);
        }
        if (!file) throw IoError("write to '" + opt.expand_path + "' failed");
    }
    return kExitOk;
}

int cmd_analyze(const std::string& input, bool json, std::istream& in, std::ostream& out) {
    ArrayGeneratorMatrix agm = load_agm(input, in);
    Analysis analysis = analyze(agm);
    if (json) {
        out << report_to_json(analysis).dump(2) << "\n";
    } else {
        write_report_text(out, analysis);
    }
    return kExitOk;
}

int cmd_verify(const std::string& input, std::size_t cell_cap, std::istream& in,
               std::ostream& out) {
    ArrayGeneratorMatrix agm = load_agm(input, in);
    ConfoundingReport report = classify(agm);
    OracleReport oracle = oracle_classify(expand(agm, cell_cap));

    std::vector<std::string> diffs;
    for (std::size_t i = 0; i < report.mains.size(); ++i) {
        if (report.mains[i].unconfounded() != oracle.main_unconfounded[i]) {
            diffs.push_back("main " + report.mains[i].label + ": classifier says " +
                            to_string(report.mains[i].status.state) + ", oracle says " +
                            (oracle.main_unconfounded[i] ? "unconfounded" : "confounded"));
        }
    }
    for (std::size_t pair = 0; pair < report.interactions.size(); ++pair) {
        const InteractionStatus& inter = report.interactions[pair];
        if (inter.unconfounded() != oracle.pair_unconfounded[pair]) {
            diffs.push_back("interaction " + inter.label + ": classifier says " +
                            to_string(inter.state) + ", oracle says " +
                            (oracle.pair_unconfounded[pair] ? "unconfounded" : "confounded"));
        }
        for (std::size_t v = 0; v < inter.components.size(); ++v) {
            bool classifier = inter.components[v].unconfounded();
            bool brute = oracle.component_unconfounded[pair][v];
            if (classifier != brute) {
                diffs.push_back("component " + word_to_label(inter.components[v].word) +
                                ": classifier says " + to_string(inter.components[v].state) +
                                ", oracle says " + (brute ? "unconfounded" : "confounded"));
            }
        }
    }

    if (diffs.empty()) {
        out << "AGREE: classifier and oracle match on every main effect and 2fi component ("
            << report.mains.size() << " mains, " << report.interactions.size() << " pairs)\n";
        return kExitOk;
    }
    out << "DISAGREE (" << diffs.size() << " effects):\n";
    for (const std::string& d : diffs) out << "  " << d << "\n";
    return kExitDisagree;
}

int cmd_search(unsigned s, std::size_t p, std::size_t q, std::size_t n, unsigned long long cap,
               std::ostream& out) {
    SearchResult result = exhaustive_optimum(s, p, q, n, cap);
    out << "examined " << result.candidates << " canonical block pairs, " << result.admissible
        << " with all main effects unconfounded\n";
    if (!result.feasible()) {
        out << "infeasible: no generator matrix keeps every main effect unconfounded\n";
        return kExitOk;
    }
    out << "max unconfounded 2fi count = " << result.best->unconfounded_2fi
        << ", phi = " << phi_bound(s, p, q, n) << "\n";
    out << "witness:\n";
    write_agm(out, result.best->witness);
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"row-column factorial design toolkit"};
    app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
    app.require_subcommand(1);

    ConstructOptions copt;
    CLI::App* construct_cmd =
        app.add_subcommand("construct", "emit a generator matrix for the requested parameters");
    construct_cmd->add_option("-s,--level", copt.s, "prime level")->required();
    construct_cmd->add_option("-p,--row-exponent", copt.p, "row block exponent")->required();
    construct_cmd->add_option("-q,--col-exponent", copt.q, "column block exponent")->required();
    CLI::Option* full_flag = construct_cmd->add_flag("--full", copt.full, "full factorial, n = p+q");
    CLI::Option* frac_flag =
        construct_cmd->add_flag("--frac1", copt.frac1, "fractional, n = p+q+1");
    full_flag->excludes(frac_flag);
    construct_cmd->add_option("-o,--output", copt.output, "output path ('-' for stdout)");
    construct_cmd->add_option("--expand", copt.expand_path, "also write the expanded design here");
    construct_cmd->add_option("--format", copt.format, "design export format")
        ->check(CLI::IsMember({"csv", "json"}));
    construct_cmd->add_option("--cell-cap", copt.cell_cap, "cell cap for --expand");
    construct_cmd->add_flag("--transpose", copt.transpose,
                            "build for swapped exponents and exchange the blocks back");

    std::string analyze_input;
    bool analyze_json = false;
    CLI::App* analyze_cmd =
        app.add_subcommand("analyze", "classify confounding for a generator matrix file");
    analyze_cmd->add_option("input", analyze_input, "matrix file ('-' for stdin)")->required();
    analyze_cmd->add_flag("--json", analyze_json, "emit the JSON report");

    std::string verify_input;
    std::size_t verify_cap = kDefaultCellCap;
    bool verify_oracle = true;
    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "compare the matrix classifier against the expanded-design oracle");
    verify_cmd->add_option("input", verify_input, "matrix file ('-' for stdin)")->required();
    verify_cmd->add_flag("--oracle,!--no-oracle", verify_oracle,
                         "run the brute-force oracle (default)");
    verify_cmd->add_option("--cell-cap", verify_cap, "largest design expansion allowed");

    unsigned search_s = 0;
    std::size_t search_p = 0, search_q = 0, search_n = 0;
    unsigned long long search_cap = kDefaultSearchCap;
    CLI::App* search_cmd =
        app.add_subcommand("search", "exhaust tiny parameter sets for the best 2fi count");
    search_cmd->add_option("-s,--level", search_s, "prime level")->required();
    search_cmd->add_option("-p,--row-exponent", search_p, "row block exponent")->required();
    search_cmd->add_option("-q,--col-exponent", search_q, "column block exponent")->required();
    search_cmd->add_option("-n,--factors", search_n, "factor count")->required();
    search_cmd->add_option("--cap", search_cap, "raw candidate-space cap");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        // prints help/version to out or the parse error to err
        return app.exit(e, out, err) == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (construct_cmd->parsed()) {
            if (!copt.full && !copt.frac1) {
                err << "error: choose one of --full or --frac1\n";
                return kExitInvalid;
            }
            return cmd_construct(copt, out, err);
        }
        if (analyze_cmd->parsed()) return cmd_analyze(analyze_input, analyze_json, std::cin, out);
        if (verify_cmd->parsed()) {
            if (!verify_oracle) {
                err << "error: verification without the oracle has nothing to compare\n";
                return kExitInvalid;
            }
            return cmd_verify(verify_input, verify_cap, std::cin, out);
        }
        if (search_cmd->parsed()) {
            return cmd_search(search_s, search_p, search_q, search_n, search_cap, out);
        }
        err << app.help();
        return kExitInvalid;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const DesignError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
}

}  // namespace rcd
