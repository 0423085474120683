#include "kinknet/periodic_lattice.hpp"

#include <cstddef>

namespace kinknet {

namespace {

inline std::size_t wrap_prev(std::size_t j, std::size_t n) { return j == 0 ? n - 1 : j - 1; }
inline std::size_t wrap_next(std::size_t j, std::size_t n) { return j + 1 == n ? 0 : j + 1; }

}  // namespace

PeriodicRhs periodic_rhs(const PeriodicLattice& lat, const std::vector<double>& u,
                         const std::vector<double>& v, const NonlinearPotential& pot) {
    const auto n = static_cast<std::size_t>(lat.n);
    const double inv_dx2 = 1.0 / (lat.dx * lat.dx);
    PeriodicRhs r;
    r.du = v;
    r.dv.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double um = u[wrap_prev(j, n)];
        const double up = u[wrap_next(j, n)];
        r.dv[j] = (um + up - 2.0 * u[j]) * inv_dx2 - pot.f(u[j]);
    }
    return r;
}

void periodic_symplectic_euler_step(const PeriodicLattice& lat, std::vector<double>& u,
                                    std::vector<double>& v, const NonlinearPotential& pot,
                                    double dt) {
    const auto n = static_cast<std::size_t>(lat.n);
    const double inv_dx2 = 1.0 / (lat.dx * lat.dx);
    std::vector<double> u_old = u;
    for (std::size_t j = 0; j < n; ++j) {
        const double um = u_old[wrap_prev(j, n)];
        const double up = u_old[wrap_next(j, n)];
        const double acc = (um + up - 2.0 * u_old[j]) * inv_dx2 - pot.f(u_old[j]);
        v[j] += dt * acc;
        u[j] = u_old[j] + dt * v[j];
    }
}

std::vector<double> periodic_leapfrog_step(const PeriodicLattice& lat,
                                           const std::vector<double>& u_prev,
                                           const std::vector<double>& u_curr,
                                           const NonlinearPotential& pot, double dt) {
    const auto n = static_cast<std::size_t>(lat.n);
    const double inv_dx2 = 1.0 / (lat.dx * lat.dx);
    const double dt2 = dt * dt;
    std::vector<double> u_next(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double um = u_curr[wrap_prev(j, n)];
        const double up = u_curr[wrap_next(j, n)];
        const double acc = (um + up - 2.0 * u_curr[j]) * inv_dx2 - pot.f(u_curr[j]);
        u_next[j] = 2.0 * u_curr[j] - u_prev[j] + dt2 * acc;
    }
    return u_next;
}

double periodic_hamiltonian(const PeriodicLattice& lat, const std::vector<double>& u,
                            const std::vector<double>& v, const NonlinearPotential& pot) {
    const auto n = static_cast<std::size_t>(lat.n);
    double h = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double w = (u[j] - u[wrap_prev(j, n)]) / lat.dx;
        h += (0.5 * v[j] * v[j] + 0.5 * w * w + pot.V(u[j])) * lat.dx;
    }
    return h;
}

std::vector<double> periodic_local_energy_residual(const PeriodicLattice& lat,
                                                   const std::vector<double>& u,
                                                   const std::vector<double>& v,
                                                   const NonlinearPotential& pot) {
    const auto n = static_cast<std::size_t>(lat.n);
    const PeriodicRhs r = periodic_rhs(lat, u, v, pot);
    std::vector<double> res(n);
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t jm = wrap_prev(j, n);
        const std::size_t jp = wrap_next(j, n);
        const double w_j = (u[j] - u[jm]) / lat.dx;
        const double w_jp = (u[jp] - u[j]) / lat.dx;
        const double wdot_j = (v[j] - v[jm]) / lat.dx;
        // d/dt of the density plus the flux divergence
        res[j] = v[j] * r.dv[j] + w_j * wdot_j + pot.f(u[j]) * v[j] -
                 (v[j] * w_jp - v[jm] * w_j) / lat.dx;
    }
    return res;
}

}  // namespace kinknet
