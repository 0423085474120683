#include "kinknet/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "kinknet/stepper.hpp"

namespace kinknet {

EnergyBreakdown discrete_hamiltonian(const MetricGraph& g, const FieldState& s,
                                     const NonlinearPotential& pot) {
    EnergyBreakdown out;
    out.per_edge.reserve(g.edges().size());
    for (std::size_t ei = 0; ei < g.edges().size(); ++ei) {
        const double dx = g.edges()[ei].dx;
        const auto& u = s.u[ei];
        const auto& v = s.v[ei];
        const std::size_t n = u.size();
        double h = 0.0;
        for (std::size_t j = 1; j + 1 < n; ++j) {
            const double w = (u[j] - u[j - 1]) / dx;
            h += (0.5 * v[j] * v[j] + 0.5 * w * w + pot.V(u[j])) * dx;
        }
        const double w_last = (u[n - 1] - u[n - 2]) / dx;
        h += 0.5 * w_last * w_last * dx;
        out.per_edge.push_back(h);
        out.total += h;
    }
    return out;
}

EdgeArrays local_energy_residual(const MetricGraph& g, const FieldState& s,
                                 const NonlinearPotential& pot) {
    const Rhs r = semi_discrete_rhs(g, s, pot);
    EdgeArrays res;
    res.reserve(g.edges().size());
    for (std::size_t ei = 0; ei < g.edges().size(); ++ei) {
        const double dx = g.edges()[ei].dx;
        const auto& u = s.u[ei];
        const auto& v = s.v[ei];
        const std::size_t n = u.size();
        std::vector<double> re(n, 0.0);
        for (std::size_t j = 2; j + 1 < n; ++j) {
            const double w_j = (u[j] - u[j - 1]) / dx;
            const double w_jp = (u[j + 1] - u[j]) / dx;
            const double wdot_j = (v[j] - v[j - 1]) / dx;
            re[j] = v[j] * r.dv[ei][j] + w_j * wdot_j + pot.f(u[j]) * v[j] -
                    (v[j] * w_jp - v[j - 1] * w_j) / dx;
        }
        res.push_back(std::move(re));
    }
    return res;
}

double discrete_momentum(const MetricGraph& g, const FieldState& s) {
    double m = 0.0;
    for (std::size_t ei = 0; ei < g.edges().size(); ++ei) {
        const double dx = g.edges()[ei].dx;
        const auto& u = s.u[ei];
        const auto& v = s.v[ei];
        for (std::size_t j = 1; j + 1 < u.size(); ++j)
            m += v[j] * ((u[j] - u[j - 1]) / dx) * dx;
    }
    return m;
}

std::vector<double> kirchhoff_residuals(const MetricGraph& g, const FieldState& s) {
    std::vector<double> res(g.vertices().size(), 0.0);
    for (std::size_t ei = 0; ei < g.edges().size(); ++ei) {
        const Edge& e = g.edges()[ei];
        const auto& u = s.u[ei];
        const auto from = static_cast<std::size_t>(g.vertex_index(e.from));
        const auto to = static_cast<std::size_t>(g.vertex_index(e.to));
        res[from] += (u[1] - s.u_vertex[from]) / e.dx;
        res[to] += (u[u.size() - 2] - s.u_vertex[to]) / e.dx;
    }
    return res;
}

std::vector<double> junction_flux_residual(const MetricGraph& g, const FieldState& s) {
    const std::vector<double> kirchhoff = kirchhoff_residuals(g, s);
    const std::vector<double> vdot = junction_vertex_values(g, s.v);
    std::vector<double> res(g.vertices().size(), 0.0);
    for (std::size_t vi = 0; vi < res.size(); ++vi)
        res[vi] = 2.0 * vdot[vi] * kirchhoff[vi];
    return res;
}

EnergyRecord make_energy_record(const MetricGraph& g, const FieldState& s,
                                const NonlinearPotential& pot) {
    EnergyRecord rec;
    rec.time = s.time;
    EnergyBreakdown h = discrete_hamiltonian(g, s, pot);
    rec.total_energy = h.total;
    rec.per_edge_energy = std::move(h.per_edge);
    for (double r : kirchhoff_residuals(g, s))
        rec.kirchhoff_residual_max = std::max(rec.kirchhoff_residual_max, std::abs(r));
    for (double r : junction_flux_residual(g, s))
        rec.flux_residual_max = std::max(rec.flux_residual_max, std::abs(r));
    return rec;
}

}  // namespace kinknet
