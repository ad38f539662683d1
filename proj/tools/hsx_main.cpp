// hsx: induce weighted simplicial complexes from k-uniform hypergraphs,
// analyze their walks, and verify the spectral/conductance claims.
//
// Exit codes: 0 success, 1 input error, 2 a verified claim failed,
// 3 a size budget was exceeded.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "hsx/constructions.hpp"
#include "hsx/errors.hpp"
#include "hsx/json_io.hpp"
#include "hsx/partition.hpp"
#include "hsx/spectra.hpp"
#include "hsx/version.hpp"
#include "hsx/walks.hpp"

namespace {

struct RunConfig {
    std::string command;
    std::string input_path;
    std::string out_path;
    std::string walk_kind = "updown";
    std::string levels = "1,2";
    int level = 2;
    double tau = 0.0;
    int rank = 1;
    int r = 2;
    int n = 9;
    int k = 3;
    int oracle_cap = hsx::kDefaultOracleCap;
    std::size_t face_budget = hsx::kDefaultFaceBudget;
    double tol_eig = hsx::kEigTol;
    bool export_matrix = false;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream f(path);
    if (!f) throw hsx::InputError("cannot open input file: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

std::pair<int, int> parse_levels(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw hsx::InputError("--levels expects \"m,l\", got " + text);
    }
    try {
        return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
    } catch (const std::exception&) {
        throw hsx::InputError("--levels expects \"m,l\", got " + text);
    }
}

hsx::json config_to_json(const RunConfig& cfg) {
    hsx::json j;
    j["command"] = cfg.command;
    if (!cfg.input_path.empty()) j["input"] = cfg.input_path;
    if (!cfg.out_path.empty()) j["out"] = cfg.out_path;
    j["face_budget"] = cfg.face_budget;
    j["oracle_cap"] = cfg.oracle_cap;
    j["tol_eig"] = cfg.tol_eig;
    if (cfg.command == "analyze") {
        j["walk"] = cfg.walk_kind;
        j["levels"] = cfg.levels;
    } else if (cfg.command == "sparse-cut") {
        j["level"] = cfg.level;
    } else if (cfg.command == "splittability") {
        j["tau"] = cfg.tau;
        j["r"] = cfg.rank;
    } else if (cfg.command == "verify sunflower") {
        j["r"] = cfg.r;
        j["k"] = cfg.k;
    } else if (cfg.command == "verify cycle-link") {
        j["n"] = cfg.n;
        j["k"] = cfg.k;
    }
    return j;
}

void emit(const RunConfig& cfg, hsx::json report) {
    hsx::json envelope;
    envelope["version"] = hsx::kVersion;
    envelope["config"] = config_to_json(cfg);
    envelope["tolerances"] = hsx::json{{"eigen", cfg.tol_eig},
                                       {"measure", hsx::kMeasureTol},
                                       {"stochastic", hsx::kStochasticTol},
                                       {"bound", hsx::kBoundTol}};
    envelope["report"] = std::move(report);
    const std::string text = hsx::dump_json(envelope);
    if (cfg.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(cfg.out_path);
        if (!f) throw hsx::InputError("cannot open output file: " + cfg.out_path);
        f << text;
    }
}

void emit_raw(const RunConfig& cfg, const hsx::json& j) {
    const std::string text = hsx::dump_json(j);
    if (cfg.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(cfg.out_path);
        if (!f) throw hsx::InputError("cannot open output file: " + cfg.out_path);
        f << text;
    }
}

int run(const RunConfig& cfg) {
    using namespace hsx;
    if (cfg.command == "gen sunflower") {
        emit_raw(cfg, hypergraph_to_json(sunflower_hypergraph(cfg.r, cfg.k)));
        return 0;
    }
    if (cfg.command == "gen cycle-link") {
        emit_raw(cfg, hypergraph_to_json(cycle_link_hypergraph(cfg.n, cfg.k)));
        return 0;
    }
    if (cfg.command == "verify sunflower" || cfg.command == "verify cycle-link") {
        const ClaimReport report =
            cfg.command == "verify sunflower"
                ? verify_sunflower_claims(cfg.r, cfg.k, cfg.tol_eig, cfg.oracle_cap,
                                          cfg.face_budget)
                : verify_cycle_link_claims(cfg.n, cfg.k, cfg.tol_eig, cfg.oracle_cap,
                                           cfg.face_budget);
        emit(cfg, claim_report_to_json(report));
        return report.all_pass ? 0 : 2;
    }

    const Hypergraph h = parse_hypergraph(read_input(cfg.input_path));
    if (cfg.command == "oracle") {
        emit(cfg, oracle_result_to_json(brute_force_min_conductance(h, cfg.oracle_cap)));
        return 0;
    }
    if (cfg.command == "sparse-cut") {
        emit(cfg, cut_certificate_to_json(hypergraph_sparse_cut(h, cfg.level, cfg.face_budget)));
        return 0;
    }

    const SimplicialComplex x = SimplicialComplex::induce(h, cfg.face_budget);
    if (cfg.command == "analyze") {
        const auto [m, l] = parse_levels(cfg.levels);
        json reports = json::array();
        if (cfg.walk_kind == "updown") {
            const WalkOperator d = compose_down(x, m, l);
            reports.push_back(spectral_report_to_json(singular_values(d)));
            reports.push_back(spectral_report_to_json(eigenvalues(bipartite_walk_graph(x, m, l))));
            reports.push_back(spectral_report_to_json(eigenvalues(two_step_graph(x, m, l))));
            json out{{"levels", json::array({m, l})}, {"walk", "updown"}, {"spectra", reports}};
            if (cfg.export_matrix) out["operator"] = walk_operator_to_json(d);
            emit(cfg, std::move(out));
        } else if (cfg.walk_kind == "swap") {
            const WalkOperator s = swap_operator(x, m, l);
            reports.push_back(spectral_report_to_json(singular_values(s)));
            reports.push_back(spectral_report_to_json(eigenvalues(swap_graph(x, m, l))));
            json out{{"levels", json::array({m, l})}, {"walk", "swap"}, {"spectra", reports}};
            if (cfg.export_matrix) out["operator"] = walk_operator_to_json(s);
            emit(cfg, std::move(out));
        } else {
            throw InputError("--walk must be updown or swap, got " + cfg.walk_kind);
        }
        return 0;
    }
    if (cfg.command == "link-expansion") {
        emit(cfg, link_expansion_to_json(hdx_gamma(x)));
        return 0;
    }
    if (cfg.command == "splittability") {
        emit(cfg, splittability_to_json(splittability(x, cfg.tau, cfg.rank, 8, cfg.tol_eig)));
        return 0;
    }
    throw InputError("unknown command " + cfg.command);
}

} // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"weighted simplicial complex walks, spectra, and sparse cuts"};
    app.require_subcommand(1);

    auto add_common = [&cfg](CLI::App* cmd) {
        cmd->add_option("--out", cfg.out_path, "write the JSON report to this path");
        cmd->add_option("--face-budget", cfg.face_budget, "max total faces in a complex")
            ->envname("HSX_FACE_BUDGET");
        cmd->add_option("--tol-eig", cfg.tol_eig, "eigenvalue comparison tolerance");
        cmd->add_option("--oracle-cap", cfg.oracle_cap, "max vertex count for the oracle");
    };

    CLI::App* gen = app.add_subcommand("gen", "generate a construction");
    gen->require_subcommand(1);
    CLI::App* gen_sun = gen->add_subcommand("sunflower", "r petals sharing one core vertex");
    gen_sun->add_option("--r", cfg.r, "petal count")->required();
    gen_sun->add_option("--k", cfg.k, "uniformity")->required();
    add_common(gen_sun);
    CLI::App* gen_cyc = gen->add_subcommand("cycle-link", "complete k-sets plus a tailed cycle");
    gen_cyc->add_option("--n", cfg.n, "cycle length")->required();
    gen_cyc->add_option("--k", cfg.k, "uniformity")->required();
    add_common(gen_cyc);

    CLI::App* analyze = app.add_subcommand("analyze", "spectra of a chosen walk");
    analyze->add_option("--input", cfg.input_path, "hypergraph JSON (\"-\" for stdin)")->required();
    analyze->add_option("--walk", cfg.walk_kind, "updown|swap");
    analyze->add_option("--levels", cfg.levels, "level pair m,l");
    analyze->add_flag("--export-matrix", cfg.export_matrix, "include the operator matrix");
    add_common(analyze);

    CLI::App* cut = app.add_subcommand("sparse-cut", "spectral sparse cut with certificate");
    cut->add_option("--input", cfg.input_path, "hypergraph JSON (\"-\" for stdin)")->required();
    cut->add_option("--level", cfg.level, "the l of D_{1,l}");
    add_common(cut);

    CLI::App* linkexp = app.add_subcommand("link-expansion", "max sigma_2 over all links");
    linkexp->add_option("--input", cfg.input_path, "hypergraph JSON (\"-\" for stdin)")->required();
    add_common(linkexp);

    CLI::App* split = app.add_subcommand("splittability", "(tau,r)-splittability verdict");
    split->add_option("--input", cfg.input_path, "hypergraph JSON (\"-\" for stdin)")->required();
    split->add_option("--tau", cfg.tau, "threshold in [-1,1]")->required();
    split->add_option("--r", cfg.rank, "rank bound")->required();
    add_common(split);

    CLI::App* verify = app.add_subcommand("verify", "check a construction's claims");
    verify->require_subcommand(1);
    CLI::App* ver_sun = verify->add_subcommand("sunflower", "non-splittable expander claims");
    ver_sun->add_option("--r", cfg.r, "petal count")->required();
    ver_sun->add_option("--k", cfg.k, "uniformity")->required();
    add_common(ver_sun);
    CLI::App* ver_cyc = verify->add_subcommand("cycle-link", "low link-expansion claims");
    ver_cyc->add_option("--n", cfg.n, "cycle length")->required();
    ver_cyc->add_option("--k", cfg.k, "uniformity")->required();
    add_common(ver_cyc);

    CLI::App* oracle = app.add_subcommand("oracle", "brute-force minimum conductance");
    oracle->add_option("--input", cfg.input_path, "hypergraph JSON (\"-\" for stdin)")->required();
    add_common(oracle);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    for (const CLI::App* sub : app.get_subcommands()) {
        cfg.command = sub->get_name();
        for (const CLI::App* inner : sub->get_subcommands()) {
            cfg.command += " " + inner->get_name();
        }
    }

    try {
        return run(cfg);
    } catch (const hsx::BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const hsx::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
