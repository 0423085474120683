#include "kinknet/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace kinknet {

MetricGraph::MetricGraph(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::stable_sort(vertices_.begin(), vertices_.end(),
                     [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
    std::stable_sort(edges_.begin(), edges_.end(),
                     [](const Edge& a, const Edge& b) { return a.id < b.id; });
}

int MetricGraph::vertex_index(int vertex_id) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), vertex_id,
                               [](const Vertex& v, int id) { return v.id < id; });
    if (it == vertices_.end() || it->id != vertex_id) return -1;
    return static_cast<int>(it - vertices_.begin());
}

int MetricGraph::edge_index(int edge_id) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), edge_id,
                               [](const Edge& e, int id) { return e.id < id; });
    if (it == edges_.end() || it->id != edge_id) return -1;
    return static_cast<int>(it - edges_.begin());
}

const Vertex& MetricGraph::vertex(int vertex_id) const {
    int i = vertex_index(vertex_id);
    if (i < 0) throw std::out_of_range("unknown vertex id " + std::to_string(vertex_id));
    return vertices_[static_cast<std::size_t>(i)];
}

const Edge& MetricGraph::edge(int edge_id) const {
    int i = edge_index(edge_id);
    if (i < 0) throw std::out_of_range("unknown edge id " + std::to_string(edge_id));
    return edges_[static_cast<std::size_t>(i)];
}

std::vector<std::string> validate_graph(const MetricGraph& g) {
    std::vector<std::string> out;
    auto add = [&out](const std::string& msg) { out.push_back(msg); };

    if (g.vertices().empty()) add("empty graph: no vertices");
    if (g.edges().empty()) add("empty graph: no edges");

    std::set<int> vertex_ids;
    for (const auto& v : g.vertices()) {
        if (v.id < 0) add("vertex id " + std::to_string(v.id) + " is negative");
        if (!vertex_ids.insert(v.id).second)
            add("duplicate vertex id " + std::to_string(v.id));
    }

    std::set<int> edge_ids;
    std::map<std::pair<int, int>, int> seen_pairs;
    std::map<int, int> degree;
    for (const auto& e : g.edges()) {
        const std::string tag = "edge " + std::to_string(e.id);
        if (e.id < 0) add(tag + ": id is negative");
        if (!edge_ids.insert(e.id).second) add("duplicate edge id " + std::to_string(e.id));
        if (!vertex_ids.count(e.from))
            add(tag + ": unknown vertex " + std::to_string(e.from) + " as `from`");
        if (!vertex_ids.count(e.to))
            add(tag + ": unknown vertex " + std::to_string(e.to) + " as `to`");
        if (e.from == e.to) add(tag + ": self-loop at vertex " + std::to_string(e.from));
        if (e.n_points < 3) add(tag + ": n_points must be >= 3, got " + std::to_string(e.n_points));
        if (!(e.dx > 0.0)) add(tag + ": dx must be > 0");
        if (e.from != e.to) {
            auto key = std::minmax(e.from, e.to);
            auto [it, inserted] = seen_pairs.insert({key, e.id});
            if (!inserted)
                add(tag + ": parallel edge between vertices " + std::to_string(key.first) +
                    " and " + std::to_string(key.second) + " (already edge " +
                    std::to_string(it->second) + ")");
        }
        degree[e.from] += 1;
        degree[e.to] += 1;
    }

    for (const auto& v : g.vertices()) {
        if (degree[v.id] == 0 && !g.edges().empty())
            add("isolated vertex " + std::to_string(v.id));
    }

    return out;
}

void require_valid(const MetricGraph& g) {
    auto violations = validate_graph(g);
    if (violations.empty()) return;
    std::ostringstream msg;
    msg << "invalid graph:";
    for (const auto& v : violations) msg << "\n  - " << v;
    throw std::invalid_argument(msg.str());
}

std::vector<std::vector<int>> incidence_matrix(const MetricGraph& g) {
    require_valid(g);
    std::vector<std::vector<int>> m(g.vertices().size(),
                                    std::vector<int>(g.edges().size(), 0));
    for (std::size_t j = 0; j < g.edges().size(); ++j) {
        const Edge& e = g.edges()[j];
        m[static_cast<std::size_t>(g.vertex_index(e.from))][j] = -1;
        m[static_cast<std::size_t>(g.vertex_index(e.to))][j] = +1;
    }
    return m;
}

VertexStar vertex_star(const MetricGraph& g, int vertex_id) {
    require_valid(g);
    if (g.vertex_index(vertex_id) < 0)
        throw std::out_of_range("unknown vertex id " + std::to_string(vertex_id));
    VertexStar star{vertex_id, {}};
    for (const auto& e : g.edges()) {  // already ascending by id
        if (e.from == vertex_id) star.slots.push_back({e.id, EdgeEnd::start});
        if (e.to == vertex_id) star.slots.push_back({e.id, EdgeEnd::terminal});
    }
    return star;
}

std::vector<VertexStar> vertex_stars(const MetricGraph& g) {
    std::vector<VertexStar> stars;
    stars.reserve(g.vertices().size());
    for (const auto& v : g.vertices()) stars.push_back(vertex_star(g, v.id));
    return stars;
}

std::pair<double, double> node_embedding(const MetricGraph& g, int edge_id, int node_index) {
    const Edge& e = g.edge(edge_id);
    if (node_index < 0 || node_index >= e.n_points)
        throw std::out_of_range("node index " + std::to_string(node_index) +
                                " out of range on edge " + std::to_string(edge_id));
    const Vertex& a = g.vertex(e.from);
    const Vertex& b = g.vertex(e.to);
    const double t = static_cast<double>(node_index) / static_cast<double>(e.n_points - 1);
    // (1-t)*a + t*b hits both endpoints exactly
    return {(1.0 - t) * a.x + t * b.x, (1.0 - t) * a.y + t * b.y};
}

}  // namespace kinknet
