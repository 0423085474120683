#pragma once

#include <filesystem>
#include <vector>

#include "kinknet/io.hpp"

namespace kinknet {

struct RunSummary {
    double initial_energy = 0.0;
    double final_energy = 0.0;
    double relative_drift = 0.0;  // |E(T) - E(0)| / E(0), 0 when E(0) = 0
    long long n_steps = 0;
    double t_final = 0.0;
    std::filesystem::path energy_file;
    std::vector<std::filesystem::path> snapshots;
};

// Steps from t=0 to t_final, writing a snapshot and an energy row at step 0,
// every output_every steps, and at the final step. On blowup rethrows
// BlowupError with the last successfully written snapshot named in the
// message.
RunSummary simulate(const LoadedRun& run, const std::filesystem::path& out_dir);

}  // namespace kinknet
