#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cobweb/charpoly.hpp"
#include "cobweb/errors.hpp"
#include "cobweb/oracle.hpp"
#include "cobweb/poset.hpp"
#include "cobweb/reference.hpp"
#include "cobweb/render.hpp"
#include "cobweb/sequence.hpp"
#include "cobweb/verify.hpp"

namespace {

// Exit codes: 0 success/pass, 1 verification failure, 2 usage or domain
// error, 3 resource cap exceeded.
constexpr int exit_usage = 2;
constexpr int exit_resource = 3;

struct CommonArgs {
    std::string seq;
    std::uint64_t n = 0;
    std::string format = "text";
    std::uint64_t max_interval = 1'000'000;
};

void add_common(CLI::App* cmd, CommonArgs& args, const std::vector<std::string>& formats) {
    cmd->add_option("--seq", args.seq,
                    "sequence spec: fib|nat|odd|even|const:<k>|list:<c0,c1,...>")
        ->required();
    cmd->add_option("--n", args.n, "top level index of P_n")->required();
    args.format = formats.front();
    cmd->add_option("--format", args.format, "output format")
        ->check(CLI::IsMember(formats));
}

int run_charpoly(const CommonArgs& args, const std::string& method) {
    const cobweb::SequenceSpec spec = cobweb::parse_sequence(args.seq);
    cobweb::IntPolynomial chi;
    if (method == "closed") {
        chi = cobweb::charpoly_closed(spec, args.n);
    } else if (method == "recurrence") {
        chi = cobweb::charpoly_recurrence(spec, args.n);
    } else {
        chi = cobweb::charpoly_bruteforce(cobweb::CobwebPoset(spec, args.n),
                                          {args.max_interval});
    }
    if (cobweb::parse_format(args.format) == cobweb::OutputFormat::json) {
        std::cout << cobweb::render_charpoly_json(args.n, chi) << "\n";
    } else {
        std::cout << cobweb::to_string(chi) << "\n";
    }
    return 0;
}

int run_whitney(const CommonArgs& args) {
    const cobweb::SequenceSpec spec = cobweb::parse_sequence(args.seq);
    const cobweb::ClosedFormTables tables = cobweb::whitney_closed(spec, args.n);
    std::vector<std::uint64_t> second_kind(args.n + 1);
    for (std::size_t k = 0; k <= args.n; ++k) second_kind[k] = cobweb::evaluate(spec, k);

    switch (cobweb::parse_format(args.format)) {
        case cobweb::OutputFormat::json:
            std::cout << cobweb::render_whitney_json(spec.name, second_kind, tables.w_closed)
                      << "\n";
            break;
        case cobweb::OutputFormat::csv:
            std::cout << cobweb::render_whitney_csv(second_kind, tables.w_closed);
            break;
        default:
            std::cout << cobweb::render_whitney_text(spec.name, second_kind, tables.w_closed);
            break;
    }
    return 0;
}

int run_hasse(const CommonArgs& args) {
    const cobweb::SequenceSpec spec = cobweb::parse_sequence(args.seq);
    std::cout << cobweb::CobwebPoset(spec, args.n).to_dot();
    return 0;
}

int run_verify(const CommonArgs& args) {
    const cobweb::SequenceSpec spec = cobweb::parse_sequence(args.seq);
    const cobweb::VerificationReport report =
        cobweb::verify(spec, args.n, {args.max_interval});
    if (cobweb::parse_format(args.format) == cobweb::OutputFormat::json) {
        std::cout << cobweb::render_report_json(report) << "\n";
    } else {
        std::cout << cobweb::render_report_text(report);
    }
    return cobweb::report_exit_code(report);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cobweb: characteristic polynomials, Whitney numbers and Hasse\n"
                 "diagrams of the layered posets a level-size sequence designates"};
    app.require_subcommand(0, 1);

    bool paper_examples = false;
    app.add_flag("--paper-examples", paper_examples)->group("");

    CommonArgs charpoly_args;
    std::string method = "closed";
    CLI::App* charpoly_cmd =
        app.add_subcommand("charpoly", "characteristic polynomial of P_n");
    add_common(charpoly_cmd, charpoly_args, {"text", "json"});
    charpoly_cmd->add_option("--method", method, "closed|recurrence|brute")
        ->check(CLI::IsMember({"closed", "recurrence", "brute"}));
    charpoly_cmd->add_option("--max-interval", charpoly_args.max_interval,
                             "brute-force interval cap");

    CommonArgs whitney_args;
    CLI::App* whitney_cmd =
        app.add_subcommand("whitney", "Whitney numbers W_k and w_k for k <= n");
    add_common(whitney_cmd, whitney_args, {"text", "json", "csv"});

    CommonArgs hasse_args;
    CLI::App* hasse_cmd = app.add_subcommand("hasse", "Hasse diagram as Graphviz DOT");
    add_common(hasse_cmd, hasse_args, {"dot"});

    CommonArgs verify_args;
    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "cross-validate closed form, recurrence and brute force");
    add_common(verify_cmd, verify_args, {"text", "json"});
    verify_cmd->add_option("--max-interval", verify_args.max_interval,
                           "brute-force interval cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    try {
        if (paper_examples) {
            const cobweb::ReferenceReport report = cobweb::run_reference_examples();
            std::cout << cobweb::render_reference_report(report);
            return report.ok ? 0 : 1;
        }
        if (charpoly_cmd->parsed()) return run_charpoly(charpoly_args, method);
        if (whitney_cmd->parsed()) return run_whitney(whitney_args);
        if (hasse_cmd->parsed()) return run_hasse(hasse_args);
        if (verify_cmd->parsed()) return run_verify(verify_args);
        std::cerr << app.help();
        return exit_usage;
    } catch (const cobweb::resource_limit_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_resource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
}
