#include "mstcd/mst.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

#include "mstcd/error.hpp"

namespace mstcd {

namespace {

Edge make_edge(std::size_t a, std::size_t b, double w) {
    return a < b ? Edge{a, b, w} : Edge{b, a, w};
}

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent_[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
        return true;
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<unsigned> rank_;
};

}  // namespace

bool edge_precedes(const Edge& a, const Edge& b) noexcept {
    if (a.weight != b.weight) return a.weight < b.weight;
    if (a.u != b.u) return a.u < b.u;
    return a.v < b.v;
}

double SpanningTree::total_weight() const noexcept {
    double sum = 0.0;
    for (const auto& e : edges) sum += e.weight;
    return sum;
}

WeightedGraph complete_graph(const PointSet& points) {
    const std::size_t n = points.size();
    if (n < 2) throw ParameterError("complete graph needs at least 2 points, got " + std::to_string(n));
    WeightedGraph g;
    g.node_count = n;
    g.edges.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            g.edges.push_back(Edge{i, j, euclidean_distance(points[i], points[j])});
        }
    }
    return g;
}

SpanningTree minimum_spanning_tree(const WeightedGraph& graph) {
    SpanningTree tree;
    tree.node_count = graph.node_count;
    if (graph.node_count <= 1) return tree;

    std::vector<Edge> edges;
    edges.reserve(graph.edges.size());
    for (const auto& e : graph.edges) {
        if (e.u == e.v) continue;
        if (e.u >= graph.node_count || e.v >= graph.node_count) {
            throw ParameterError("edge references node outside graph");
        }
        edges.push_back(make_edge(e.u, e.v, e.weight));
    }
    std::sort(edges.begin(), edges.end(), edge_precedes);

    DisjointSets sets(graph.node_count);
    tree.edges.reserve(graph.node_count - 1);
    for (const auto& e : edges) {
        if (sets.unite(e.u, e.v)) {
            tree.edges.push_back(e);
            if (tree.edges.size() == graph.node_count - 1) break;
        }
    }
    if (tree.edges.size() != graph.node_count - 1) {
        throw ParameterError("graph is disconnected: spanning forest has " + std::to_string(tree.edges.size()) +
                             " edges for " + std::to_string(graph.node_count) + " nodes");
    }
    return tree;
}

SpanningTree prim_spanning_tree(const PointSet& points) {
    const std::size_t n = points.size();
    SpanningTree tree;
    tree.node_count = n;
    if (n < 2) throw ParameterError("spanning tree needs at least 2 points, got " + std::to_string(n));

    constexpr double inf = std::numeric_limits<double>::infinity();
    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
    // best[v]: lightest known edge (under edge_precedes) joining v to the tree.
    std::vector<Edge> best(n, Edge{none, none, inf});
    std::vector<char> in_tree(n, 0);
    tree.edges.reserve(n - 1);

    std::size_t current = 0;
    in_tree[current] = 1;
    for (std::size_t step = 1; step < n; ++step) {
        const PointView from = points[current];
        std::size_t next = none;
        for (std::size_t v = 0; v < n; ++v) {
            if (in_tree[v]) continue;
            const Edge candidate = make_edge(current, v, euclidean_distance(from, points[v]));
            if (best[v].u == none || edge_precedes(candidate, best[v])) best[v] = candidate;
            if (next == none || edge_precedes(best[v], best[next])) next = v;
        }
        in_tree[next] = 1;
        tree.edges.push_back(best[next]);
        current = next;
    }
    std::sort(tree.edges.begin(), tree.edges.end(), edge_precedes);
    return tree;
}

std::size_t threshold_index(std::size_t edge_count, double alpha) {
    if (edge_count == 0) throw ParameterError("threshold undefined for a tree without edges");
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw ParameterError("alpha must lie in [0, 1], got " + std::to_string(alpha));
    }
    const double raw = std::floor(alpha * static_cast<double>(edge_count));
    const auto idx = static_cast<std::size_t>(raw);
    return std::min(idx, edge_count - 1);
}

Threshold compute_threshold(const SpanningTree& tree, double alpha) {
    const std::size_t idx = threshold_index(tree.edges.size(), alpha);
    std::vector<double> weights;
    weights.reserve(tree.edges.size());
    for (const auto& e : tree.edges) weights.push_back(e.weight);
    std::nth_element(weights.begin(), weights.begin() + static_cast<std::ptrdiff_t>(idx), weights.end());
    return Threshold{alpha, weights[idx]};
}

void write_tree(std::ostream& os, const SpanningTree& tree, double alpha) {
    os << "# nodes " << tree.node_count << '\n';
    os << "# alpha " << std::setprecision(17) << alpha << '\n';
    for (const auto& e : tree.edges) {
        os << e.u << ' ' << e.v << ' ' << std::setprecision(17) << e.weight << '\n';
    }
}

SpanningTree read_tree(std::istream& is, double* alpha) {
    SpanningTree tree;
    bool have_nodes = false;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream ls(line);
        if (line[0] == '#') {
            std::string hash, key;
            ls >> hash >> key;
            if (key == "nodes") {
                ls >> tree.node_count;
                have_nodes = !ls.fail();
            } else if (key == "alpha" && alpha != nullptr) {
                ls >> *alpha;
            }
            continue;
        }
        Edge e;
        if (!(ls >> e.u >> e.v >> e.weight)) {
            throw DataError("malformed tree edge on line " + std::to_string(line_no));
        }
        tree.edges.push_back(e);
    }
    if (!have_nodes) throw DataError("tree dump lacks '# nodes' header");
    for (const auto& e : tree.edges) {
        if (e.u >= tree.node_count || e.v >= tree.node_count) {
            throw DataError("tree edge references node outside declared node count");
        }
    }
    return tree;
}

}  // namespace mstcd
