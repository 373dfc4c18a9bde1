#pragma once

#include <cstddef>
#include <vector>

namespace advcal {

// Edmonds-Karp max flow on a small dense-ish network. Capacities are real
// masses; the graphs here have at most a few dozen nodes, so BFS augmenting
// paths are exact enough (error accumulates only through subtraction).
class FlowNetwork {
public:
    explicit FlowNetwork(size_t nodes);

    // Returns the edge id of the forward arc; a zero-capacity reverse arc is
    // added automatically.
    size_t add_edge(size_t from, size_t to, double capacity);

    double max_flow(size_t source, size_t sink);

    double flow_on(size_t edge_id) const;

    // Nodes reachable from the source in the residual graph of the last
    // max_flow call: the canonical minimum cut separates these from the rest.
    const std::vector<char>& source_side() const { return source_side_; }

private:
    struct Arc {
        size_t to;
        double capacity;  // residual
    };
    std::vector<Arc> arcs_;                     // paired: arc 2k is forward, 2k+1 reverse
    std::vector<std::vector<size_t>> adjacency_;
    std::vector<double> original_capacity_;
    std::vector<char> source_side_;
};

}  // namespace advcal
