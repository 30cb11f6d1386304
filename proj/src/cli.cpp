#include "hyperdfa/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <string>
#include <vector>

#include "hyperdfa/construction.hpp"
#include "hyperdfa/experiment.hpp"
#include "hyperdfa/hypermin.hpp"
#include "hyperdfa/product.hpp"
#include "hyperdfa/randgen.hpp"
#include "hyperdfa/text_format.hpp"

namespace hyperdfa {
namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path);
    if (!file) throw InputError("cannot write '" + path + "'");
    file << text;
}

void print_blocks(const AlmostEquivPartition& part, std::ostream& out) {
    for (const auto& block : part.blocks) {
        for (std::size_t i = 0; i < block.size(); ++i) out << (i ? " " : "") << block[i];
        out << '\n';
    }
}

}  // namespace

int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Minimization, hyper-minimization and hyper-optimization of finite automata", "hyperdfa"};
    app.require_subcommand(1);

    std::string input, second, output;

    auto* minimize_cmd = app.add_subcommand("minimize", "Print the minimal DFA");
    minimize_cmd->add_option("file", input, "Automaton file")->required();
    minimize_cmd->add_option("--output", output, "Write the automaton here instead of stdout");

    auto* blocks_cmd = app.add_subcommand("blocks", "Print the almost-equivalence blocks of the minimal DFA");
    blocks_cmd->add_option("file", input, "Automaton file")->required();

    std::string strategy = "optimal";
    auto* hyper_cmd = app.add_subcommand("hyperminimize", "Hyper-minimize; prints: states_before states_after errors");
    hyper_cmd->add_option("file", input, "Automaton file")->required();
    hyper_cmd->add_option("--strategy", strategy, "naive or optimal")
        ->check(CLI::IsMember({"naive", "optimal"}));
    hyper_cmd->add_option("--output", output, "Write the hyper-minimal automaton to this file");

    auto* errors_cmd = app.add_subcommand("errors", "Size of the symmetric difference of two languages");
    errors_cmd->add_option("first", input, "Automaton file")->required();
    errors_cmd->add_option("second", second, "Automaton file")->required();

    RandomModelParams gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a random NFA");
    gen_cmd->add_option("--states", gen.states, "Number of states")->required()->check(CLI::PositiveNumber);
    gen_cmd->add_option("--alphabet", gen.alphabet, "Alphabet size")->required()->check(CLI::PositiveNumber);
    gen_cmd->add_option("--d-delta", gen.d_delta, "Transition probability")->required()->check(CLI::Range(0.0, 1.0));
    gen_cmd->add_option("--d-f", gen.d_final, "Final-state probability")->required()->check(CLI::Range(0.0, 1.0));
    gen_cmd->add_option("--cyclicity", gen.cyclicity, "Backward transition damping")
        ->required()
        ->check(CLI::Range(0.0, 1.0));
    gen_cmd->add_option("--seed", gen.seed, "Seed")->required();
    gen_cmd->add_option("--output", output, "Write the automaton here instead of stdout");

    std::vector<std::vector<State>> pairs;
    auto* inspect_cmd = app.add_subcommand("inspect", "Print access counts and requested error-matrix entries");
    inspect_cmd->add_option("file", input, "Automaton file")->required();
    inspect_cmd->add_option("--pair", pairs, "Two states of the minimal DFA")->expected(2)->allow_extra_args(false);

    ExperimentGrid grid = ExperimentGrid::defaults();
    auto* exp_cmd = app.add_subcommand("experiment", "Random-automata sweep; prints CSV");
    exp_cmd->add_option("--densities", grid.densities, "Transition densities d_delta*|Q|")->delimiter(',');
    exp_cmd->add_option("--cyclicities", grid.cyclicities, "Cyclicity values")
        ->delimiter(',')
        ->check(CLI::Range(0.0, 1.0));
    exp_cmd->add_option("--instances", grid.instances, "Instances per cell")->check(CLI::PositiveNumber);
    exp_cmd->add_option("--states", grid.states, "NFA states")->check(CLI::PositiveNumber);
    exp_cmd->add_option("--alphabet", grid.alphabet, "Alphabet size")->check(CLI::PositiveNumber);
    exp_cmd->add_option("--seed", grid.base_seed, "Base seed");
    exp_cmd->add_option("--threads", grid.threads, "Worker threads (0: all cores)");
    exp_cmd->add_option("--output", output, "Write the CSV here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        if (*minimize_cmd) {
            emit(to_text(to_minimal_dfa(load_automaton(input))), output, out);
        } else if (*blocks_cmd) {
            const Analysis a = analyze(to_dfa(load_automaton(input)));
            print_blocks(a.partition, out);
        } else if (*hyper_cmd) {
            const Dfa dfa = to_dfa(load_automaton(input));
            if (strategy == "optimal") {
                const HyperOptReport report = hyper_optimize(dfa);
                if (!output.empty()) emit(to_text(report.output), output, out);
                out << report.states_before << ' ' << report.states_after << ' ' << report.errors << '\n';
            } else {
                const Dfa minimal = minimize(dfa);
                const Dfa naive = hyper_minimize_naive(minimal);
                if (!output.empty()) emit(to_text(naive), output, out);
                out << minimal.state_count() << ' ' << naive.state_count() << ' ' << diff_count(minimal, naive)
                    << '\n';
            }
        } else if (*errors_cmd) {
            out << diff_count(to_dfa(load_automaton(input)), to_dfa(load_automaton(second))) << '\n';
        } else if (*gen_cmd) {
            emit(to_text(generate_nfa(gen)), output, out);
        } else if (*inspect_cmd) {
            const Analysis a = analyze(to_dfa(load_automaton(input)));
            for (State q = 0; q < a.minimal.state_count(); ++q)
                if (a.access.contains(q)) out << "w " << q << ' ' << a.access.at(q) << '\n';
            ErrorMatrix errors(a.minimal, a.partition);
            for (const auto& pr : pairs) {
                if (pr[0] >= a.minimal.state_count() || pr[1] >= a.minimal.state_count())
                    throw InputError("state out of range in --pair");
                out << "E " << pr[0] << ' ' << pr[1] << ' ' << errors.at(pr[0], pr[1]) << '\n';
            }
        } else if (*exp_cmd) {
            emit(to_csv(run_experiment(grid)), output, out);
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitOk;
}

}  // namespace hyperdfa
