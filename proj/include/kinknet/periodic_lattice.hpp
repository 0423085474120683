#pragma once

#include <vector>

#include "kinknet/potential.hpp"

namespace kinknet {

// Uniform ring lattice with no junctions: the reference dynamics every node
// of a graph edge follows in its interior. Used by the conservation and
// symplecticity checks, where wrap-around neighbours keep every node
// interior.
struct PeriodicLattice {
    int n = 0;
    double dx = 0.0;
};

struct PeriodicRhs {
    std::vector<double> du;
    std::vector<double> dv;
};

PeriodicRhs periodic_rhs(const PeriodicLattice& lat, const std::vector<double>& u,
                         const std::vector<double>& v, const NonlinearPotential& pot);

void periodic_symplectic_euler_step(const PeriodicLattice& lat, std::vector<double>& u,
                                    std::vector<double>& v, const NonlinearPotential& pot,
                                    double dt);

std::vector<double> periodic_leapfrog_step(const PeriodicLattice& lat,
                                           const std::vector<double>& u_prev,
                                           const std::vector<double>& u_curr,
                                           const NonlinearPotential& pot, double dt);

// sum_j [ v_j^2/2 + w_j^2/2 + V(u_j) ] dx with w_j = (u_j - u_{j-1})/dx.
double periodic_hamiltonian(const PeriodicLattice& lat, const std::vector<double>& u,
                            const std::vector<double>& v, const NonlinearPotential& pot);

// Per-node residual of the semi-discrete energy law
//   d/dt [ v_j^2/2 + w_j^2/2 + V(u_j) ] + (F_{j+1/2} - F_{j-1/2})/dx = 0
// with fluxes F_{j+1/2} = -v_j w_{j+1}, F_{j-1/2} = -v_{j-1} w_j.
// Identically zero up to roundoff for the semi-discrete right-hand side.
std::vector<double> periodic_local_energy_residual(const PeriodicLattice& lat,
                                                   const std::vector<double>& u,
                                                   const std::vector<double>& v,
                                                   const NonlinearPotential& pot);

}  // namespace kinknet
