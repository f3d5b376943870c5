#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "weyl/parser.hpp"
#include "weyl/runner.hpp"

namespace {

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    for (char c : text) {
        if (c == ',') {
            if (!item.empty()) out.push_back(item);
            item.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            item += c;
        }
    }
    if (!item.empty()) out.push_back(item);
    return out;
}

int run_normal_order(const std::string& expr) {
    try {
        std::cout << weyl::format(weyl::parse_polynomial(expr)) << "\n";
        return 0;
    } catch (const weyl::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
}

int run_check(const std::string& lhs, const std::string& rhs) {
    try {
        const weyl::WeylPolynomial diff =
            weyl::parse_polynomial(lhs) - weyl::parse_polynomial(rhs);
        if (diff.is_zero()) {
            std::cout << "EQUAL\n";
            return 0;
        }
        std::cout << "UNEQUAL difference: " << weyl::format(diff) << "\n";
        return 1;
    } catch (const weyl::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
}

struct VerifyFlags {
    std::string rep = "grid";
    int dim = 32;
    double hbar = 1.0;
    double spacing = 1.0;
    std::uint64_t seed = 12345;
    int states = 200;
    std::string suites;
    std::string format = "text";
    std::string config_path;
    std::vector<std::string> tol_args;
};

// Defaults, then config file, then explicit flags.
weyl::RunConfig merge_config(const VerifyFlags& flags, const CLI::App* cmd) {
    auto given = [cmd](const std::string& name) {
        const CLI::Option* o = cmd->get_option_no_throw(name);
        return o != nullptr && o->count() > 0;
    };
    weyl::RunConfig cfg;
    if (given("--config")) weyl::apply_config_file(cfg, flags.config_path);
    if (given("--rep")) cfg.rep = weyl::parse_rep_kind(flags.rep);
    if (given("--dim")) cfg.dim = flags.dim;
    if (given("--hbar")) cfg.hbar = flags.hbar;
    if (given("--spacing")) cfg.spacing = flags.spacing;
    if (given("--seed")) cfg.seed = flags.seed;
    if (given("--states")) cfg.slack_states = flags.states;
    if (given("--suite")) cfg.suites = split_list(flags.suites);
    if (given("--format")) cfg.format = weyl::parse_output_format(flags.format);
    for (const auto& kv : flags.tol_args) {
        const std::size_t eq = kv.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == kv.size())
            throw weyl::Error("--tol expects KEY=VALUE, got '" + kv + "'");
        try {
            cfg.tolerances[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
        } catch (const std::exception&) {
            throw weyl::Error("--tol value is not a number in '" + kv + "'");
        }
    }
    return cfg;
}

void add_shared_flags(CLI::App* cmd, VerifyFlags& flags) {
    cmd->add_option("--rep", flags.rep, "Representation: fock, grid, or clock");
    cmd->add_option("--dim", flags.dim, "Hilbert space dimension (>= 2)");
    cmd->add_option("--hbar", flags.hbar, "Value of hbar (> 0)");
    cmd->add_option("--spacing", flags.spacing, "Grid spacing (> 0)");
    cmd->add_option("--seed", flags.seed, "Random seed for sampled checks");
    cmd->add_option("--states", flags.states, "Random states per uncertainty batch");
    cmd->add_option("--format", flags.format, "Output format: text, json, or csv");
    cmd->add_option("--config", flags.config_path, "Flat key = value config file");
    cmd->add_option("--tol", flags.tol_args, "Tolerance override KEY=VALUE (repeatable)");
}

int run_verify(const VerifyFlags& flags, const CLI::App* cmd) {
    try {
        const weyl::RunConfig cfg = merge_config(flags, cmd);
        const std::vector<weyl::CheckReport> reports = weyl::run_suites(cfg);
        std::cout << weyl::render_reports(reports, cfg.format);
        return weyl::all_asserted_pass(reports) ? 0 : 1;
    } catch (const weyl::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

int run_sweep_cmd(const VerifyFlags& flags, const std::string& dims_text, double box,
                  const CLI::App* cmd) {
    try {
        const weyl::RunConfig cfg = merge_config(flags, cmd);
        std::vector<int> dims;
        for (const auto& item : split_list(dims_text)) {
            try {
                dims.push_back(std::stoi(item));
            } catch (const std::exception&) {
                throw weyl::Error("--dims expects integers, got '" + item + "'");
            }
        }
        const auto rows = weyl::run_sweep(cfg, dims, box);
        std::cout << weyl::render_sweep(rows, cfg.format);
        return 0;
    } catch (const weyl::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weylkit: symbolic and numerical consequences of [X,P] = i hbar"};
    app.require_subcommand(1);

    auto* no_cmd = app.add_subcommand("normal-order",
                                      "Print the canonical normal-ordered form of an expression");
    std::string expr;
    no_cmd->add_option("expr", expr, "Operator expression, e.g. \"[X,P]\"")->required();

    auto* check_cmd = app.add_subcommand("check", "Decide exact equality of two expressions");
    std::string lhs, rhs;
    check_cmd->add_option("lhs", lhs, "Left expression")->required();
    check_cmd->add_option("rhs", rhs, "Right expression")->required();

    auto* verify_cmd =
        app.add_subcommand("verify", "Run verification suites over a representation");
    VerifyFlags verify_flags;
    std::string suite_csv;
    verify_cmd->add_option("--suite", suite_csv, "Comma-separated suite list");
    add_shared_flags(verify_cmd, verify_flags);

    auto* sweep_cmd = app.add_subcommand("sweep", "Per-dimension deviation table at fixed box");
    VerifyFlags sweep_flags;
    std::string dims_text;
    double box = 1.0;
    sweep_cmd->add_option("--dims", dims_text, "Comma-separated dimension list")->required();
    sweep_cmd->add_option("--box", box, "Box length held fixed across dims");
    add_shared_flags(sweep_cmd, sweep_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (app.got_subcommand(no_cmd)) return run_normal_order(expr);
    if (app.got_subcommand(check_cmd)) return run_check(lhs, rhs);
    if (app.got_subcommand(verify_cmd)) {
        verify_flags.suites = suite_csv;
        return run_verify(verify_flags, verify_cmd);
    }
    if (app.got_subcommand(sweep_cmd)) return run_sweep_cmd(sweep_flags, dims_text, box, sweep_cmd);
    return 2;
}
