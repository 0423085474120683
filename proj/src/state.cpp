#include "kinknet/state.hpp"

#include <string>

#include "kinknet/graph.hpp"

namespace kinknet {

FieldState make_zero_state(const MetricGraph& g) {
    FieldState s;
    s.time = 0.0;
    s.u.reserve(g.edges().size());
    s.v.reserve(g.edges().size());
    for (const auto& e : g.edges()) {
        s.u.emplace_back(static_cast<std::size_t>(e.n_points), 0.0);
        s.v.emplace_back(static_cast<std::size_t>(e.n_points), 0.0);
    }
    s.u_vertex.assign(g.vertices().size(), 0.0);
    return s;
}

std::vector<std::string> check_state(const MetricGraph& g, const FieldState& s) {
    std::vector<std::string> out;
    if (s.u.size() != g.edges().size() || s.v.size() != g.edges().size()) {
        out.push_back("state has " + std::to_string(s.u.size()) + "/" +
                      std::to_string(s.v.size()) + " edge arrays, graph has " +
                      std::to_string(g.edges().size()) + " edges");
        return out;
    }
    if (s.u_vertex.size() != g.vertices().size()) {
        out.push_back("state has " + std::to_string(s.u_vertex.size()) +
                      " vertex values, graph has " + std::to_string(g.vertices().size()) +
                      " vertices");
        return out;
    }
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        const Edge& e = g.edges()[i];
        const auto n = static_cast<std::size_t>(e.n_points);
        if (s.u[i].size() != n || s.v[i].size() != n) {
            out.push_back("arrays on edge " + std::to_string(e.id) +
                          " do not match n_points=" + std::to_string(e.n_points));
            continue;
        }
        const double at_from = s.u_vertex[static_cast<std::size_t>(g.vertex_index(e.from))];
        const double at_to = s.u_vertex[static_cast<std::size_t>(g.vertex_index(e.to))];
        if (s.u[i].front() != at_from)
            out.push_back("edge " + std::to_string(e.id) +
                          " start slot disagrees with vertex " + std::to_string(e.from));
        if (s.u[i].back() != at_to)
            out.push_back("edge " + std::to_string(e.id) +
                          " terminal slot disagrees with vertex " + std::to_string(e.to));
        if (s.v[i].front() != 0.0 || s.v[i].back() != 0.0)
            out.push_back("edge " + std::to_string(e.id) + " has nonzero endpoint v");
    }
    return out;
}

}  // namespace kinknet
