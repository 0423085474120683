#pragma once

#include <string>
#include <utility>
#include <vector>

namespace kinknet {

struct Vertex {
    int id = 0;
    double x = 0.0;  // plane embedding, output only
    double y = 0.0;
};

// An oriented lattice edge: n_points nodes 0..n_points-1 spaced dx apart,
// node 0 sitting on the `from` vertex and node n_points-1 on `to`.
struct Edge {
    int id = 0;
    int from = 0;
    int to = 0;
    int n_points = 0;
    double dx = 0.0;

    double length() const { return (n_points - 1) * dx; }
};

enum class EdgeEnd { start, terminal };

struct Slot {
    int edge_id = 0;
    EdgeEnd end = EdgeEnd::start;

    bool operator==(const Slot&) const = default;
};

struct VertexStar {
    int vertex_id = 0;
    std::vector<Slot> slots;  // ascending edge id

    int degree() const { return static_cast<int>(slots.size()); }
};

// Immutable once constructed; safe to share across threads. Vertices and
// edges are kept sorted by id, and every per-vertex / per-edge array in the
// library is indexed by position in these sorted lists.
class MetricGraph {
public:
    MetricGraph() = default;
    MetricGraph(std::vector<Vertex> vertices, std::vector<Edge> edges);

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }

    // Position in the sorted list, or -1 if the id is absent.
    int vertex_index(int vertex_id) const;
    int edge_index(int edge_id) const;

    const Vertex& vertex(int vertex_id) const;  // throws std::out_of_range
    const Edge& edge(int edge_id) const;

private:
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
};

// Every invariant violation as a human-readable reason; empty means valid.
std::vector<std::string> validate_graph(const MetricGraph& g);

// Throws std::invalid_argument listing all violations if g is invalid.
void require_valid(const MetricGraph& g);

// |V| x |E|, entry +1 where the edge terminates at the vertex, -1 where it
// starts, 0 otherwise. Rows and columns follow ascending id order.
std::vector<std::vector<int>> incidence_matrix(const MetricGraph& g);

VertexStar vertex_star(const MetricGraph& g, int vertex_id);
std::vector<VertexStar> vertex_stars(const MetricGraph& g);

// Straight-line interpolation between the endpoint vertex positions.
// Output only; the dynamics never reads positions.
std::pair<double, double> node_embedding(const MetricGraph& g, int edge_id, int node_index);

}  // namespace kinknet
