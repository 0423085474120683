#pragma once

#include <vector>

#include "kinknet/graph.hpp"
#include "kinknet/potential.hpp"
#include "kinknet/state.hpp"

namespace kinknet {

struct EnergyBreakdown {
    double total = 0.0;
    std::vector<double> per_edge;  // sorted-id order; total is their exact sum
};

// Rectangular-rule energy. Per edge, nodes j = 1..n-2 contribute
// [ v_j^2/2 + w_j^2/2 + V(u_j) ] dx with w_j = (u_j - u_{j-1})/dx, and the
// terminal node contributes its gradient term w_{n-1}^2/2 dx only. Vertex
// nodes carry no kinetic or potential term of their own. Accumulation order
// is fixed: edge id ascending, node index ascending, plain left-to-right
// sums, so repeated evaluations are bit-identical.
EnergyBreakdown discrete_hamiltonian(const MetricGraph& g, const FieldState& s,
                                     const NonlinearPotential& pot);

// Residual of the semi-discrete local energy law at nodes j = 2..n-2 of each
// edge (both w_j legs interior); other entries are 0. Analytically zero.
EdgeArrays local_energy_residual(const MetricGraph& g, const FieldState& s,
                                 const NonlinearPotential& pot);

// sum over edges of sum_{j=1..n-2} v_j w_j dx (backward-difference w).
// Reported as a diagnostic time series; the discrete scheme conserves it
// only approximately.
double discrete_momentum(const MetricGraph& g, const FieldState& s);

// Per vertex: sum_k (q_k - u_vertex)/dx_k over the star, q_k the nearest
// interior value on each slot. Zero to machine precision after every
// junction update.
std::vector<double> kirchhoff_residuals(const MetricGraph& g, const FieldState& s);

// Per vertex: 2 * vdot_vertex * kirchhoff_residual, with vdot_vertex the
// junction mean of the adjacent interior v values. The discrete energy-flux
// balance at the vertex; vanishes whenever the Kirchhoff condition holds.
std::vector<double> junction_flux_residual(const MetricGraph& g, const FieldState& s);

struct EnergyRecord {
    double time = 0.0;
    double total_energy = 0.0;
    std::vector<double> per_edge_energy;
    double kirchhoff_residual_max = 0.0;
    double flux_residual_max = 0.0;
};

EnergyRecord make_energy_record(const MetricGraph& g, const FieldState& s,
                                const NonlinearPotential& pot);

}  // namespace kinknet
