#pragma once

#include <string>
#include <vector>

#include "kinknet/graph.hpp"

namespace kinknet {

using EdgeArrays = std::vector<std::vector<double>>;

// Discrete phase space on a graph. u is stored at every lattice node of
// every edge; v only at interior nodes (entries 0 and n-1 of each v array
// are kept at exactly 0 and never read). Each vertex value is stored once
// in u_vertex and mirrored bit-for-bit into the endpoint slots of every
// incident edge, which makes the continuity condition structural.
//
// Plain value type: copy a FieldState to hand a snapshot to another thread.
struct FieldState {
    double time = 0.0;
    EdgeArrays u;                  // per edge (sorted-id order), size n_points
    EdgeArrays v;                  // same shape as u
    std::vector<double> u_vertex;  // per vertex (sorted-id order)
};

FieldState make_zero_state(const MetricGraph& g);

// Shape and continuity violations; empty = consistent with g.
std::vector<std::string> check_state(const MetricGraph& g, const FieldState& s);

}  // namespace kinknet
