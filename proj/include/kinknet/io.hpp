#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "kinknet/diagnostics.hpp"
#include "kinknet/graph.hpp"
#include "kinknet/potential.hpp"
#include "kinknet/state.hpp"
#include "kinknet/stepper.hpp"

namespace kinknet {

// Input files failed to parse or violate the schema; the message names the
// offending file and field.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct InitialConditionSpec {
    enum class Kind { zero, constant, kink };
    enum class Direction { forward, backward };  // forward = toward `to`

    int edge_id = 0;
    Kind kind = Kind::zero;
    double value = 0.0;  // constant
    double c = 0.0;      // kink
    double x0_fraction = 0.5;
    int polarity = +1;
    Direction direction = Direction::forward;
};

struct RunConfig {
    double dt = 0.0;
    double t_final = 0.0;
    Scheme scheme = Scheme::leapfrog;
    int output_every = 50;
    std::string output_dir;  // optional; resolution order is --out, this, $KINKNET_OUT, "."
    std::string potential = "sine_gordon";
    std::vector<InitialConditionSpec> initial_conditions;
};

MetricGraph load_graph(const std::filesystem::path& file);
RunConfig load_config(const std::filesystem::path& file);

// Samples each edge profile (kinks along arclength, mirrored when
// direction = backward) and projects the result onto the junction
// conditions.
FieldState initial_state_from_specs(const MetricGraph& g,
                                    const std::vector<InitialConditionSpec>& ics);

struct LoadedRun {
    MetricGraph graph;
    RunConfig config;
    NonlinearPotential potential;
    FieldState initial;
};

// Parses both files, validates the graph, checks the CFL bound and builds
// the t=0 state.
LoadedRun load_run(const std::filesystem::path& graph_file,
                   const std::filesystem::path& config_file);

// CSV `edge_id,node_index,arclength,x,y,u,v`, rows ordered by
// (edge_id, node_index), shortest round-trip decimals, LF line endings.
// The v field is empty on vertex rows; vertex u values appear once per
// incident edge end.
void write_snapshot(const MetricGraph& g, const FieldState& s, const std::filesystem::path& path);

// Inverse of write_snapshot; u and v round-trip exactly.
FieldState read_snapshot(const MetricGraph& g, const std::filesystem::path& path);

// CSV `step,time,total_energy,kirchhoff_residual_max,flux_residual_max`
// plus one `edge_<id>` column per edge.
class EnergySeriesWriter {
public:
    EnergySeriesWriter(const MetricGraph& g, const std::filesystem::path& path);

    void append(long long step, const EnergyRecord& rec);
    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

// Shortest decimal that round-trips to the same double.
std::string format_double(double value);

std::filesystem::path resolve_output_dir(const std::optional<std::string>& cli_out,
                                         const RunConfig& config);

}  // namespace kinknet
