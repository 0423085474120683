#include "kinknet/stepper.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace kinknet {

Scheme scheme_by_name(const std::string& name) {
    if (name == "symplectic_euler") return Scheme::symplectic_euler;
    if (name == "leapfrog") return Scheme::leapfrog;
    throw std::invalid_argument("unknown scheme `" + name + "`");
}

std::string scheme_name(Scheme s) {
    return s == Scheme::symplectic_euler ? "symplectic_euler" : "leapfrog";
}

namespace {

std::string blowup_message(int edge_id, int node_index, double time,
                           const std::string& last_snapshot) {
    std::ostringstream msg;
    msg << "non-finite value at t=" << time << " on edge " << edge_id
        << ", node " << node_index;
    if (!last_snapshot.empty()) msg << "; last good snapshot: " << last_snapshot;
    return msg.str();
}

void throw_if_blown_up(const MetricGraph& g, const FieldState& s) {
    for (std::size_t ei = 0; ei < g.edges().size(); ++ei) {
        const auto& u = s.u[ei];
        const auto& v = s.v[ei];
        for (std::size_t j = 0; j < u.size(); ++j) {
            if (!std::isfinite(u[j]) || !std::isfinite(v[j]))
                throw BlowupError(g.edges()[ei].id, static_cast<int>(j), s.time);
        }
    }
}

}  // namespace

BlowupError::BlowupError(int edge_id, int node_index, double time, std::string last_snapshot)
    : std::runtime_error(blowup_message(edge_id, node_index, time, last_snapshot)),
      edge_id_(edge_id),
      node_index_(node_index),
      time_(time),
      last_snapshot_(std::move(last_snapshot)) {}

Rhs semi_discrete_rhs(const MetricGraph& g, const FieldState& s, const NonlinearPotential& pot) {
    Rhs r;
    r.du = s.v;  // endpoint entries of v are already exactly 0
    r.dv.reserve(g.edges().size());
    for (std::size_t ei = 0; ei < g.edges().size(); ++ei) {
        const auto& u = s.u[ei];
        const double inv_dx2 = 1.0 / (g.edges()[ei].dx * g.edges()[ei].dx);
        std::vector<double> dv(u.size(), 0.0);
        for (std::size_t j = 1; j + 1 < u.size(); ++j)
            dv[j] = (u[j - 1] + u[j + 1] - 2.0 * u[j]) * inv_dx2 - pot.f(u[j]);
        r.dv.push_back(std::move(dv));
    }
    return r;
}

std::vector<double> junction_vertex_values(const MetricGraph& g, const EdgeArrays& u) {
    const std::size_t nv = g.vertices().size();
    std::vector<double> first(nv, 0.0);
    std::vector<double> num(nv, 0.0);  // sum_k (q_k - q_1)/dx_k
    std::vector<double> den(nv, 0.0);  // sum_k 1/dx_k
    std::vector<char> seen(nv, 0);
    for (std::size_t ei = 0; ei < g.edges().size(); ++ei) {
        const Edge& e = g.edges()[ei];
        const auto& ue = u[ei];
        auto accumulate = [&](int vertex_id, double q) {
            const auto vi = static_cast<std::size_t>(g.vertex_index(vertex_id));
            if (!seen[vi]) {
                seen[vi] = 1;
                first[vi] = q;
            }
            num[vi] += (q - first[vi]) / e.dx;
            den[vi] += 1.0 / e.dx;
        };
        accumulate(e.from, ue[1]);
        accumulate(e.to, ue[ue.size() - 2]);
    }
    std::vector<double> out(nv, 0.0);
    for (std::size_t vi = 0; vi < nv; ++vi)
        if (seen[vi]) out[vi] = first[vi] + num[vi] / den[vi];
    return out;
}

void junction_update(const MetricGraph& g, FieldState& s) {
    s.u_vertex = junction_vertex_values(g, s.u);
    for (std::size_t ei = 0; ei < g.edges().size(); ++ei) {
        const Edge& e = g.edges()[ei];
        s.u[ei].front() = s.u_vertex[static_cast<std::size_t>(g.vertex_index(e.from))];
        s.u[ei].back() = s.u_vertex[static_cast<std::size_t>(g.vertex_index(e.to))];
    }
}

FieldState symplectic_euler_step(const MetricGraph& g, const FieldState& s,
                                 const NonlinearPotential& pot, double dt) {
    FieldState next = s;
    next.time = s.time + dt;
    for (std::size_t ei = 0; ei < g.edges().size(); ++ei) {
        const double inv_dx2 = 1.0 / (g.edges()[ei].dx * g.edges()[ei].dx);
        const auto& u = s.u[ei];
        const auto& v = s.v[ei];
        auto& un = next.u[ei];
        auto& vn = next.v[ei];
        for (std::size_t j = 1; j + 1 < u.size(); ++j) {
            const double acc = (u[j - 1] + u[j + 1] - 2.0 * u[j]) * inv_dx2 - pot.f(u[j]);
            vn[j] = v[j] + dt * acc;
            un[j] = u[j] + dt * vn[j];
        }
    }
    junction_update(g, next);
    throw_if_blown_up(g, next);
    return next;
}

FieldState leapfrog_step(const MetricGraph& g, const EdgeArrays& u_prev, const FieldState& curr,
                         const NonlinearPotential& pot, double dt) {
    FieldState next = curr;
    next.time = curr.time + dt;
    const double dt2 = dt * dt;
    for (std::size_t ei = 0; ei < g.edges().size(); ++ei) {
        const double inv_dx2 = 1.0 / (g.edges()[ei].dx * g.edges()[ei].dx);
        const auto& u = curr.u[ei];
        const auto& um1 = u_prev[ei];
        auto& un = next.u[ei];
        auto& vn = next.v[ei];
        for (std::size_t j = 1; j + 1 < u.size(); ++j) {
            const double acc = (u[j - 1] + u[j + 1] - 2.0 * u[j]) * inv_dx2 - pot.f(u[j]);
            un[j] = 2.0 * u[j] - um1[j] + dt2 * acc;
            vn[j] = (un[j] - u[j]) / dt;
        }
    }
    junction_update(g, next);
    throw_if_blown_up(g, next);
    return next;
}

FieldState bootstrap_first_level(const MetricGraph& g, const FieldState& s,
                                 const NonlinearPotential& pot, double dt) {
    return symplectic_euler_step(g, s, pot, dt);
}

void stagger_velocity(const MetricGraph& g, FieldState& s, const NonlinearPotential& pot,
                      double dt) {
    const double half = 0.5 * dt;
    for (std::size_t ei = 0; ei < g.edges().size(); ++ei) {
        const double inv_dx2 = 1.0 / (g.edges()[ei].dx * g.edges()[ei].dx);
        const auto& u = s.u[ei];
        auto& v = s.v[ei];
        for (std::size_t j = 1; j + 1 < u.size(); ++j) {
            const double acc = (u[j - 1] + u[j + 1] - 2.0 * u[j]) * inv_dx2 - pot.f(u[j]);
            v[j] -= half * acc;
        }
    }
}

FieldState project_initial_condition(const MetricGraph& g, EdgeArrays u0, EdgeArrays v0) {
    if (u0.size() != g.edges().size() || v0.size() != g.edges().size())
        throw std::invalid_argument("initial condition has wrong number of edge arrays");
    for (std::size_t ei = 0; ei < g.edges().size(); ++ei) {
        const auto n = static_cast<std::size_t>(g.edges()[ei].n_points);
        if (u0[ei].size() != n || v0[ei].size() != n)
            throw std::invalid_argument("initial condition on edge " +
                                        std::to_string(g.edges()[ei].id) +
                                        " does not match n_points");
    }
    FieldState s;
    s.time = 0.0;
    s.u = std::move(u0);
    s.v = std::move(v0);
    for (auto& ve : s.v) {
        ve.front() = 0.0;
        ve.back() = 0.0;
    }
    s.u_vertex.assign(g.vertices().size(), 0.0);
    junction_update(g, s);
    return s;
}

double max_cfl_ratio(const MetricGraph& g, double dt) {
    double min_dx = std::numeric_limits<double>::infinity();
    for (const auto& e : g.edges()) min_dx = std::min(min_dx, e.dx);
    return dt / min_dx;
}

void require_cfl(const MetricGraph& g, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("dt must be > 0");
    const double ratio = max_cfl_ratio(g, dt);
    if (ratio > 1.0) {
        std::ostringstream msg;
        msg << "CFL violation: dt/min(dx) = " << ratio << " > 1";
        throw std::invalid_argument(msg.str());
    }
}

Simulator::Simulator(const MetricGraph& g, NonlinearPotential pot, StepperConfig cfg,
                     FieldState initial)
    : graph_(&g), pot_(std::move(pot)), cfg_(cfg), state_(std::move(initial)) {
    require_valid(g);
    auto violations = check_state(g, state_);
    if (!violations.empty())
        throw std::invalid_argument("inconsistent initial state: " + violations.front());
    require_cfl(g, cfg_.dt);
    t0_ = state_.time;
}

void Simulator::step() {
    if (!staggered_) {
        stagger_velocity(*graph_, state_, pot_, cfg_.dt);
        staggered_ = true;
    }
    if (cfg_.scheme == Scheme::symplectic_euler) {
        state_ = symplectic_euler_step(*graph_, state_, pot_, cfg_.dt);
    } else if (!have_prev_) {
        u_prev_ = state_.u;
        state_ = bootstrap_first_level(*graph_, state_, pot_, cfg_.dt);
        have_prev_ = true;
    } else {
        FieldState next = leapfrog_step(*graph_, u_prev_, state_, pot_, cfg_.dt);
        u_prev_ = std::move(state_.u);
        state_ = std::move(next);
    }
    ++steps_;
    state_.time = t0_ + static_cast<double>(steps_) * cfg_.dt;
}

void Simulator::advance(long long n_steps) {
    for (long long i = 0; i < n_steps; ++i) step();
}

}  // namespace kinknet
