#include <cmath>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "kinknet/diagnostics.hpp"
#include "kinknet/graph.hpp"
#include "kinknet/io.hpp"
#include "kinknet/kink.hpp"
#include "kinknet/run.hpp"

namespace {

namespace fs = std::filesystem;
using namespace kinknet;

int run_validate(const std::string& graph_file, bool verbose) {
    if (!fs::exists(graph_file)) {
        std::cerr << "error: no such file: " << graph_file << "\n";
        return 3;
    }
    const MetricGraph g = load_graph(graph_file);
    const auto violations = validate_graph(g);
    if (!violations.empty()) {
        for (const auto& v : violations) std::cout << v << "\n";
        return 1;
    }
    if (verbose) {
        std::cout << "graph: " << g.vertices().size() << " vertices, " << g.edges().size()
                  << " edges\n";
        std::cout << "incidence matrix (rows: vertices by id, columns: edges by id):\n";
        for (const auto& row : incidence_matrix(g)) {
            for (std::size_t j = 0; j < row.size(); ++j)
                std::cout << (j ? " " : "") << std::setw(2) << row[j];
            std::cout << "\n";
        }
    }
    std::cout << "OK\n";
    return 0;
}

int run_simulate(const std::string& graph_file, const std::string& config_file,
                 const std::optional<std::string>& out) {
    for (const std::string& f : {graph_file, config_file}) {
        if (!fs::exists(f)) {
            std::cerr << "error: no such file: " << f << "\n";
            return 3;
        }
    }
    const LoadedRun run = load_run(graph_file, config_file);
    const fs::path out_dir = resolve_output_dir(out, run.config);
    const RunSummary s = simulate(run, out_dir);
    std::cout << "steps: " << s.n_steps << ", snapshots: " << s.snapshots.size()
              << ", energy series: " << s.energy_file.string() << "\n";
    std::cout << "E(0) = " << format_double(s.initial_energy) << ", E("
              << format_double(s.t_final) << ") = " << format_double(s.final_energy)
              << ", relative drift = " << format_double(s.relative_drift) << "\n";
    return 0;
}

int run_kink(double c, int samples) {
    if (!(std::abs(c) < 1.0)) {
        std::cerr << "error: kink speed |c| must be < 1\n";
        return 3;
    }
    if (samples < 2) {
        std::cerr << "error: --samples must be >= 2\n";
        return 3;
    }
    std::cout << "c = " << format_double(c) << "\n";
    std::cout << "gamma = " << format_double(lorentz_factor(c)) << "\n";
    std::cout << "energy = " << format_double(kink_energy(c)) << "\n";
    const KinkSpec ks{c, 0.0, +1};
    std::cout << "x,u,v\n";
    for (int i = 0; i < samples; ++i) {
        const double x = -10.0 + 20.0 * static_cast<double>(i) / (samples - 1);
        std::cout << format_double(x) << ',' << format_double(kink_u(x, 0.0, ks)) << ','
                  << format_double(kink_v(x, 0.0, ks)) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sine-Gordon and nonlinear Klein-Gordon fields on metric graphs"};
    app.require_subcommand(1);

    auto* validate = app.add_subcommand("validate", "check a graph file");
    std::string graph_file;
    bool verbose = false;
    validate->add_option("graph", graph_file, "graph JSON file")->required();
    validate->add_flag("--verbose", verbose, "also print the incidence matrix");

    auto* simulate_cmd = app.add_subcommand("simulate", "run a configured simulation");
    std::string sim_graph, sim_config, sim_out;
    simulate_cmd->add_option("--graph", sim_graph, "graph JSON file")->required();
    simulate_cmd->add_option("--config", sim_config, "run config JSON file")->required();
    simulate_cmd->add_option("--out", sim_out, "output directory");

    auto* kink_cmd = app.add_subcommand("kink", "print the analytic kink profile");
    double kink_c = 0.0;
    int kink_samples = 41;
    kink_cmd->add_option("--c", kink_c, "kink speed, |c| < 1")->required();
    kink_cmd->add_option("--samples", kink_samples, "number of sample points");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    try {
        if (*validate) return run_validate(graph_file, verbose);
        if (*simulate_cmd) {
            std::optional<std::string> out;
            if (simulate_cmd->count("--out")) out = sim_out;
            return run_simulate(sim_graph, sim_config, out);
        }
        if (*kink_cmd) return run_kink(kink_c, kink_samples);
    } catch (const BlowupError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 3;
}
