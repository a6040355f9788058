#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "mstcd/geometry.hpp"

namespace mstcd {

// Undirected weighted edge. Construction helpers keep u < v.
struct Edge {
    std::size_t u = 0;
    std::size_t v = 0;
    double weight = 0.0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

// Strict total order used everywhere ties must be broken: weight first, then
// the lexicographically smaller (u, v) pair.
bool edge_precedes(const Edge& a, const Edge& b) noexcept;

struct WeightedGraph {
    std::size_t node_count = 0;
    std::vector<Edge> edges;
};

struct SpanningTree {
    std::size_t node_count = 0;
    std::vector<Edge> edges;

    double total_weight() const noexcept;
};

struct Threshold {
    double alpha = 0.5;
    double value = 0.0;
};

WeightedGraph complete_graph(const PointSet& points);

// Kruskal over an explicit edge list.
SpanningTree minimum_spanning_tree(const WeightedGraph& graph);

// Dense Prim computing distances row by row; never materializes the O(n^2)
// edge list. Produces the same tree as minimum_spanning_tree(complete_graph(p))
// under the edge_precedes order.
SpanningTree prim_spanning_tree(const PointSet& points);

// 0-based index floor(alpha * n) clamped to [0, n - 1].
std::size_t threshold_index(std::size_t edge_count, double alpha);

Threshold compute_threshold(const SpanningTree& tree, double alpha);

// Text dump: "# nodes N", "# alpha A", then one "u v weight" line per edge.
void write_tree(std::ostream& os, const SpanningTree& tree, double alpha);
SpanningTree read_tree(std::istream& is, double* alpha = nullptr);

}  // namespace mstcd
