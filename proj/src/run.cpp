#include "kinknet/run.hpp"

#include <cmath>
#include <cstdio>

namespace kinknet {

namespace {

std::string snapshot_name(long long step) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "snapshot_%08lld.csv", step);
    return buf;
}

}  // namespace

RunSummary simulate(const LoadedRun& run, const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);

    const RunConfig& cfg = run.config;
    long long n_steps = std::llround(cfg.t_final / cfg.dt);
    if (n_steps < 1) n_steps = 1;

    Simulator sim(run.graph, run.potential, StepperConfig{cfg.dt, cfg.scheme}, run.initial);
    EnergySeriesWriter energy(run.graph, out_dir / "energy.csv");

    RunSummary summary;
    summary.n_steps = n_steps;
    summary.energy_file = energy.path();

    auto emit = [&](long long step) {
        const std::filesystem::path snap = out_dir / snapshot_name(step);
        write_snapshot(run.graph, sim.state(), snap);
        summary.snapshots.push_back(snap);
        energy.append(step, make_energy_record(run.graph, sim.state(), run.potential));
    };

    emit(0);
    summary.initial_energy =
        discrete_hamiltonian(run.graph, sim.state(), run.potential).total;

    try {
        for (long long step = 1; step <= n_steps; ++step) {
            sim.step();
            if (step % cfg.output_every == 0 || step == n_steps) emit(step);
        }
    } catch (const BlowupError& e) {
        throw BlowupError(e.edge_id(), e.node_index(), e.time(),
                          summary.snapshots.back().string());
    }

    summary.final_energy = discrete_hamiltonian(run.graph, sim.state(), run.potential).total;
    summary.t_final = sim.state().time;
    summary.relative_drift =
        summary.initial_energy != 0.0
            ? std::abs(summary.final_energy - summary.initial_energy) /
                  std::abs(summary.initial_energy)
            : 0.0;
    return summary;
}

}  // namespace kinknet
