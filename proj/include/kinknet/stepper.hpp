#pragma once

#include <stdexcept>
#include <string>

#include "kinknet/graph.hpp"
#include "kinknet/potential.hpp"
#include "kinknet/state.hpp"

namespace kinknet {

enum class Scheme { symplectic_euler, leapfrog };

Scheme scheme_by_name(const std::string& name);  // throws on unknown
std::string scheme_name(Scheme s);

struct StepperConfig {
    double dt = 0.0;
    Scheme scheme = Scheme::leapfrog;
};

// A step produced a non-finite value. last_snapshot is filled in by the run
// driver when a snapshot had been written before the failure.
class BlowupError : public std::runtime_error {
public:
    BlowupError(int edge_id, int node_index, double time, std::string last_snapshot = "");

    int edge_id() const { return edge_id_; }
    int node_index() const { return node_index_; }
    double time() const { return time_; }
    const std::string& last_snapshot() const { return last_snapshot_; }

private:
    int edge_id_;
    int node_index_;
    double time_;
    std::string last_snapshot_;
};

struct Rhs {
    EdgeArrays du;  // du_j = v_j                      (interior nodes)
    EdgeArrays dv;  // dv_j = (u_{j+1} - 2u_j + u_{j-1})/dx^2 - f(u_j)
};

// Endpoint entries of the returned arrays are zero; vertex values carry no
// dynamics of their own.
Rhs semi_discrete_rhs(const MetricGraph& g, const FieldState& s, const NonlinearPotential& pot);

// The 1/dx-weighted mean of the nearest interior values over the star of a
// vertex, computed as q_1 + sum_k((q_k - q_1)/dx_k) / sum_k(1/dx_k) so that
// equal neighbours pass through bit-exactly. Uniform spacing reduces it to
// the plain arithmetic mean; degree 1 reduces to the nearest interior value
// (homogeneous Neumann).
std::vector<double> junction_vertex_values(const MetricGraph& g, const EdgeArrays& u);

// Recomputes s.u_vertex from the interior values and mirrors each result
// into the endpoint slot of every incident edge.
void junction_update(const MetricGraph& g, FieldState& s);

// v first from the level-m stencil, then u with the new v, then the
// junction update. Throws BlowupError on non-finite output.
FieldState symplectic_euler_step(const MetricGraph& g, const FieldState& s,
                                 const NonlinearPotential& pot, double dt);

// Three-level scheme on u alone:
//   u^{m+1} = 2u^m - u^{m-1} + (dt/dx)^2 [u_{j+1} - 2u_j + u_{j-1}] - dt^2 f(u_j)
// followed by the junction update. The v of the returned state is the
// discrete momentum (u^{m+1} - u^m)/dt, so diagnostics read identically for
// both schemes.
FieldState leapfrog_step(const MetricGraph& g, const EdgeArrays& u_prev, const FieldState& curr,
                         const NonlinearPotential& pot, double dt);

// One symplectic Euler step; gives leapfrog its second level and makes the
// two schemes produce the same u-trajectory. Applied to a staggered state it
// reproduces the Taylor start u^0 + dt v^0 + (dt^2/2) a(u^0).
FieldState bootstrap_first_level(const MetricGraph& g, const FieldState& s,
                                 const NonlinearPotential& pot, double dt);

// Shifts node velocities back by half a step, v <- v - (dt/2) a(u), moving
// them onto the staggered grid t - dt/2. Without this the first full-step
// kick lands the whole trajectory half a step off and the u-error degrades
// to first order in dt. The Simulator applies it once before its first
// step; endpoint entries stay zero.
void stagger_velocity(const MetricGraph& g, FieldState& s, const NonlinearPotential& pot,
                      double dt);

// Installs raw per-edge samples and runs the junction update once, so the
// t=0 state satisfies continuity and the discrete Kirchhoff balance.
// Interior values are untouched; endpoint v entries are zeroed.
FieldState project_initial_condition(const MetricGraph& g, EdgeArrays u0, EdgeArrays v0);

double max_cfl_ratio(const MetricGraph& g, double dt);

// Throws std::invalid_argument when dt / min_i dx_i > 1.
void require_cfl(const MetricGraph& g, double dt);

// Owns one trajectory. step() advances by dt; interior updates read only
// level-m data, the junction update is the per-step synchronization point.
// The first step() staggers the velocities, so from then on state().v holds
// values at t - dt/2 for either scheme; diagnostics sample them as-is.
class Simulator {
public:
    Simulator(const MetricGraph& g, NonlinearPotential pot, StepperConfig cfg, FieldState initial);

    const FieldState& state() const { return state_; }
    const MetricGraph& graph() const { return *graph_; }
    const NonlinearPotential& potential() const { return pot_; }
    const StepperConfig& config() const { return cfg_; }
    long long step_count() const { return steps_; }

    void step();
    void advance(long long n_steps);

private:
    const MetricGraph* graph_;
    NonlinearPotential pot_;
    StepperConfig cfg_;
    FieldState state_;
    EdgeArrays u_prev_;
    bool staggered_ = false;
    bool have_prev_ = false;
    long long steps_ = 0;
    double t0_ = 0.0;
};

}  // namespace kinknet
