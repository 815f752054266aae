#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <l2lab/cli.hpp>

namespace {

struct command_args {
    std::string input_path;
    std::string inline_text;
    std::uint64_t seed = 0;
    unsigned radius = 4;
    bool machine = false;
    std::vector<unsigned> ladder{2, 4, 6, 8};
    std::string reduce = "none";
};

void add_common_options(CLI::App* sub, command_args& args, bool input_required) {
    auto* positional = sub->add_option("input", args.input_path, "input file");
    sub->add_option("-e,--inline", args.inline_text, "inline input payload");
    sub->add_option("--seed", args.seed, "seed for the sampling oracle");
    sub->add_option("--radius", args.radius, "ball radius for the Ore-failure certificate");
    sub->add_flag("--machine", args.machine, "machine-readable key=value output");
    sub->add_option("--ladder", args.ladder, "matrix sizes tried by the free-group oracle")
        ->delimiter(',');
    sub->add_option("--reduce", args.reduce, "rational function output policy")
        ->check(CLI::IsMember({"none", "content"}));
    if (input_required) {
        // exactly one of the two input forms
        positional->excludes("--inline");
    }
}

int run(const std::string& command, const command_args& args) {
    l2lab::cli::job_options job;
    job.command = command;
    job.seed = args.seed;
    job.radius = args.radius;
    job.machine = args.machine;
    job.ladder = args.ladder;
    job.reduce = args.reduce == "content";

    if (!args.input_path.empty()) {
        std::ifstream in(args.input_path);
        if (!in) {
            std::cerr << "parse error at 0:0: cannot open input file '" << args.input_path << "'\n";
            return 2;
        }
        std::ostringstream buffer;
        buffer << in.rdbuf();
        job.input_text = buffer.str();
    } else {
        job.input_text = args.inline_text;
    }
    if (job.input_text.empty() && command != "certify-ore-failure") {
        std::cerr << "parse error at 0:0: no input given (pass a file or --inline)\n";
        return 2;
    }
    return l2lab::cli::run_job(job, std::cout, std::cerr);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact von Neumann dimensions, L2-Betti numbers and a noncommutative "
                 "localization lab over concrete group rings"};
    app.require_subcommand(1);

    struct named_command {
        const char* name;
        const char* description;
        bool input_required;
    };
    const named_command commands[] = {
        {"dim", "dimension of finitely presented modules", true},
        {"betti", "L2-Betti numbers of a free chain complex", true},
        {"euler", "L2-Euler characteristic of a free chain complex", true},
        {"tor", "Tor dimensions against a supplied free resolution", true},
        {"atiyah", "integrality verdicts against the finite-subgroup lattice", true},
        {"ore-check", "Ore fraction calculus over a declared Ore set", true},
        {"cramer", "Cramer's-rule factorization witness", true},
        {"linearize", "rational-closure linearization of a rational function", true},
        {"certify-ore-failure", "kernel certificate for the free-group Ore failure", false},
    };

    std::vector<std::pair<CLI::App*, std::unique_ptr<command_args>>> subs;
    for (const auto& c : commands) {
        auto args = std::make_unique<command_args>();
        CLI::App* sub = app.add_subcommand(c.name, c.description);
        add_common_options(sub, *args, c.input_required);
        subs.emplace_back(sub, std::move(args));
    }

    CLI11_PARSE(app, argc, argv);

    for (std::size_t k = 0; k < subs.size(); ++k) {
        if (subs[k].first->parsed()) {
            return run(commands[k].name, *subs[k].second);
        }
    }
    return 1;
}
