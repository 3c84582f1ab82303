#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "netfix/acceptance.hpp"
#include "netfix/bounds.hpp"
#include "netfix/codes.hpp"
#include "netfix/digraph.hpp"
#include "netfix/guessing.hpp"
#include "netfix/states.hpp"
#include "netfix/synthesis.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open `" + path + "`");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::optional<std::string>& out_path, const std::string& text) {
    if (!out_path) {
        std::cout << text;
        return;
    }
    std::ofstream out(*out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write `" + *out_path + "`");
    out << text;
}

std::string real6(double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.6f", v);
    return buffer;
}

struct Options {
    std::string digraph_path;
    std::string network_path;
    std::string code_path;
    int alphabet = 2;
    std::uint64_t cap = netfix::GuessingConfig{}.solver_cap;
    bool materialize = false;
    bool exact_oracle = false;
    std::string start_literal;
    std::uint64_t steps = 1;
    std::optional<std::uint64_t> kmax;
    std::string fix_path;
    int n = 0;
    int d = 1;
    int w = 0;
    std::string distance = "hamming";
    std::string moment_literal;
    std::string grid = "0:1:0.01";
    std::optional<std::string> out_path;
};

netfix::SignedDigraph load_digraph(const std::string& path) {
    return netfix::SignedDigraph::parse(read_file(path));
}

void cmd_graph_info(const Options& opt) {
    auto d = load_digraph(opt.digraph_path);
    auto stats = netfix::degree_stats(d);
    auto params = netfix::structural_params(d);
    std::cout << "vertices = " << d.vertex_count() << "\n";
    std::cout << "arcs = " << d.arcs().size() << "\n";
    std::cout << "min_in_degree = " << stats.delta << "\n";
    std::cout << "max_in_degree = " << stats.Delta << "\n";
    std::cout << "avg_in_degree = " << real6(stats.average) << "\n";
    std::cout << "min_unsigned_in_degree = " << stats.delta_zero << "\n";
    std::cout << "min_signed_in_degree = " << stats.delta_pm << "\n";
    if (params.gamma_plus) std::cout << "nonneg_girth = " << *params.gamma_plus << "\n";
    else std::cout << "nonneg_girth = INFINITE\n";
    std::cout << "min_nonneg_feedback = " << params.k_plus << "\n";
    std::cout << "max_disjoint_nonneg_cycles = " << params.c_plus << "\n";
}

void cmd_alpha(const Options& opt, bool with_witness) {
    auto d = load_digraph(opt.digraph_path);
    netfix::GuessingConfig config;
    config.solver_cap = opt.cap;
    config.materialize_cap = std::max(config.materialize_cap, opt.cap);
    netfix::GuessingResult r;
    if (opt.materialize) {
        auto graph = netfix::GuessingGraph::materialized(d, opt.alphabet, config.materialize_cap);
        r = netfix::alpha(graph, config);
    } else {
        r = netfix::alpha(d, opt.alphabet, config);
    }
    std::cout << "alpha = " << r.alpha << "\n";
    std::cout << "g = " << real6(r.g) << "\n";
    if (with_witness)
        for (const auto& w : r.witness) std::cout << netfix::state_literal(w) << "\n";
}

void cmd_bounds(const Options& opt) {
    auto d = load_digraph(opt.digraph_path);
    std::uint64_t cap = opt.exact_oracle ? (1ull << 22) : netfix::kCodeSolverCap;
    auto report = netfix::bound_report(d, opt.alphabet, cap);
    for (const auto& e : report.entries)
        std::cout << e.name << " " << (e.kind == netfix::BoundKind::lower ? "lower" : "upper")
                  << " " << real6(e.clamped) << " " << (e.applicable ? "yes" : "no") << " "
                  << e.method << "\n";
    std::cout << "certified_lower = " << real6(report.certified_lower) << "\n";
    std::cout << "certified_upper = " << real6(report.certified_upper) << "\n";
}

void cmd_synthesize(const Options& opt) {
    auto d = load_digraph(opt.digraph_path);
    std::vector<netfix::State> target;
    if (!opt.fix_path.empty()) {
        auto code = netfix::parse_code(read_file(opt.fix_path));
        if (code.s != opt.alphabet)
            throw std::runtime_error("code alphabet differs from --alphabet");
        target = code.words;
    } else {
        netfix::GuessingConfig config;
        config.solver_cap = opt.cap;
        target = netfix::alpha(d, opt.alphabet, config).witness;
    }
    auto f = netfix::network_from_independent_set(d, opt.alphabet, target);
    write_output(opt.out_path, f.to_text());
}

void cmd_simulate(const Options& opt) {
    auto f = netfix::Network::parse(read_file(opt.network_path));
    auto x = netfix::parse_state_literal(opt.start_literal, f.s());
    std::cout << netfix::state_literal(x) << "\n";
    for (std::uint64_t k = 0; k < opt.steps; ++k) {
        x = f.evaluate(x);
        std::cout << netfix::state_literal(x) << "\n";
    }
}

void cmd_converge(const Options& opt) {
    auto f = netfix::Network::parse(read_file(opt.network_path));
    auto code = netfix::parse_code(read_file(opt.code_path));
    if (code.n != f.n() || code.s != f.s())
        throw std::runtime_error("target code does not match the network's state space");
    auto report = netfix::converges_to(f, code.words, opt.kmax);
    std::cout << "converges = " << (report.converges ? "true" : "false") << "\n";
    std::cout << "max_steps = " << report.max_steps << "\n";
}

void cmd_asymptotics(const Options& opt) {
    double lo = 0, hi = 1, step = 0.01;
    if (std::sscanf(opt.grid.c_str(), "%lf:%lf:%lf", &lo, &hi, &step) != 3 || step <= 0)
        throw std::runtime_error("grid must be <lo>:<hi>:<step>");
    std::vector<double> grid;
    for (double t = lo; t <= hi + step / 2; t += step) grid.push_back(std::min(t, hi));
    auto points = netfix::asymptotic_curves(grid);
    write_output(opt.out_path, netfix::asymptotic_curves_csv(points));
}

int cmd_verify() {
    auto results = netfix::run_acceptance();
    return netfix::print_acceptance(results) ? kExitOk : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"guessing numbers and fixed points of monotone networks on signed digraphs"};
    app.require_subcommand(1);
    Options opt;

    auto* info = app.add_subcommand("graph-info", "structural parameters of a signed digraph");
    info->add_option("digraph", opt.digraph_path)->required();

    auto* alpha_cmd = app.add_subcommand("alpha", "independence number of the guessing graph");
    alpha_cmd->add_option("digraph", opt.digraph_path)->required();
    alpha_cmd->add_option("--alphabet", opt.alphabet);
    alpha_cmd->add_option("--cap", opt.cap);
    alpha_cmd->add_flag("--materialize", opt.materialize);

    auto* guess = app.add_subcommand("guess", "guessing number of a signed digraph");
    guess->add_option("digraph", opt.digraph_path)->required();
    guess->add_option("--alphabet", opt.alphabet);
    guess->add_option("--cap", opt.cap);

    auto* bounds_cmd = app.add_subcommand("bounds", "bound report with a certified interval");
    bounds_cmd->add_option("digraph", opt.digraph_path)->required();
    bounds_cmd->add_option("--alphabet", opt.alphabet);
    bounds_cmd->add_flag("--exact-oracle", opt.exact_oracle);

    auto* synth = app.add_subcommand("synthesize", "network fixing an independent set");
    synth->add_option("digraph", opt.digraph_path)->required();
    synth->add_option("--alphabet", opt.alphabet);
    synth->add_option("--fix", opt.fix_path, "code file of states to fix (default: max witness)");
    synth->add_option("--cap", opt.cap);
    std::string synth_out;
    synth->add_option("--out", synth_out);

    auto* sim = app.add_subcommand("simulate", "iterate a network from a start state");
    sim->add_option("network", opt.network_path)->required();
    sim->add_option("--start", opt.start_literal)->required();
    sim->add_option("--steps", opt.steps);

    auto* conv = app.add_subcommand("converge", "check convergence to a target code");
    conv->add_option("network", opt.network_path)->required();
    conv->add_option("--target", opt.code_path)->required();
    std::uint64_t kmax_value = 0;
    auto* kmax_opt = conv->add_option("--kmax", kmax_value);

    auto* codes_cmd = app.add_subcommand("codes", "code constructions and exact maxima");
    codes_cmd->require_subcommand(1);
    auto* codes_max = codes_cmd->add_subcommand("max", "maximum code for a distance");
    codes_max->add_option("--n", opt.n)->required();
    codes_max->add_option("--d", opt.d)->required();
    codes_max->add_option("--alphabet", opt.alphabet);
    codes_max->add_option("--distance", opt.distance)
        ->check(CLI::IsMember({"hamming", "max", "min"}));
    auto* codes_moment = codes_cmd->add_subcommand("moment", "weighted-sum fiber code");
    codes_moment->add_option("--n", opt.n)->required();
    codes_moment->add_option("--alphabet", opt.alphabet);
    codes_moment->add_option("--m", opt.moment_literal, "fiber m0,m1,m2 (default: largest fiber)");
    auto* codes_sperner = codes_cmd->add_subcommand("sperner", "middle weight level");
    codes_sperner->add_option("--n", opt.n)->required();
    codes_sperner->add_option("--alphabet", opt.alphabet);
    auto* codes_chain = codes_cmd->add_subcommand("chain-k3", "three-vertex chain code");
    codes_chain->add_option("--alphabet", opt.alphabet);

    auto* asym = app.add_subcommand("asymptotics", "asymptotic rate curves as CSV");
    asym->add_option("--grid", opt.grid, "lo:hi:step");
    std::string asym_out;
    asym->add_option("--out", asym_out);

    auto* verify = app.add_subcommand("verify-paper", "run the full verification suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*info) cmd_graph_info(opt);
        else if (*alpha_cmd) cmd_alpha(opt, true);
        else if (*guess) cmd_alpha(opt, false);
        else if (*bounds_cmd) cmd_bounds(opt);
        else if (*synth) {
            if (!synth_out.empty()) opt.out_path = synth_out;
            cmd_synthesize(opt);
        } else if (*sim) cmd_simulate(opt);
        else if (*conv) {
            if (*kmax_opt) opt.kmax = kmax_value;
            cmd_converge(opt);
        } else if (*codes_cmd) {
            if (*codes_max) {
                auto code = netfix::max_code(opt.n, opt.d, opt.alphabet,
                                             netfix::distance_kind_from_name(opt.distance));
                std::cout << netfix::code_to_text(code);
            } else if (*codes_moment) {
                netfix::Code code;
                if (opt.moment_literal.empty()) {
                    code = netfix::best_moment_code(opt.n, opt.alphabet);
                } else {
                    netfix::MomentVector m;
                    if (std::sscanf(opt.moment_literal.c_str(), "%lld,%lld,%lld", &m.m0, &m.m1,
                                    &m.m2) != 3)
                        throw std::runtime_error("--m must be m0,m1,m2");
                    code = netfix::moment_code(opt.n, opt.alphabet, m);
                }
                std::cout << netfix::code_to_text(code);
            } else if (*codes_sperner) {
                std::cout << netfix::code_to_text(netfix::sperner_antichain(opt.n, opt.alphabet));
            } else if (*codes_chain) {
                std::cout << netfix::code_to_text(netfix::chain_code_k3(opt.alphabet));
            }
        } else if (*asym) {
            if (!asym_out.empty()) opt.out_path = asym_out;
            cmd_asymptotics(opt);
        } else if (*verify) {
            return cmd_verify();
        }
    } catch (const netfix::CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
