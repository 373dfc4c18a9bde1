#include "advcal/max_flow.hpp"

#include <deque>
#include <limits>

namespace advcal {

namespace {
// Residuals below this are treated as saturated; keeps BFS off paths whose
// bottleneck is pure floating-point dust.
constexpr double kResidualEps = 1e-15;
}  // namespace

FlowNetwork::FlowNetwork(size_t nodes) : adjacency_(nodes), source_side_(nodes, 0) {}

size_t FlowNetwork::add_edge(size_t from, size_t to, double capacity) {
    size_t id = arcs_.size();
    arcs_.push_back({to, capacity});
    arcs_.push_back({from, 0.0});
    adjacency_[from].push_back(id);
    adjacency_[to].push_back(id + 1);
    original_capacity_.push_back(capacity);
    original_capacity_.push_back(0.0);
    return id;
}

double FlowNetwork::max_flow(size_t source, size_t sink) {
    double total = 0.0;
    const size_t n = adjacency_.size();
    std::vector<size_t> parent_arc(n);
    while (true) {
        std::vector<char> seen(n, 0);
        std::deque<size_t> queue{source};
        seen[source] = 1;
        while (!queue.empty() && !seen[sink]) {
            size_t u = queue.front();
            queue.pop_front();
            for (size_t arc_id : adjacency_[u]) {
                const Arc& arc = arcs_[arc_id];
                if (!seen[arc.to] && arc.capacity > kResidualEps) {
                    seen[arc.to] = 1;
                    parent_arc[arc.to] = arc_id;
                    queue.push_back(arc.to);
                }
            }
        }
        if (!seen[sink]) {
            source_side_ = seen;
            return total;
        }
        double bottleneck = std::numeric_limits<double>::infinity();
        for (size_t v = sink; v != source;) {
            size_t arc_id = parent_arc[v];
            bottleneck = std::min(bottleneck, arcs_[arc_id].capacity);
            v = arcs_[arc_id ^ 1].to;
        }
        for (size_t v = sink; v != source;) {
            size_t arc_id = parent_arc[v];
            arcs_[arc_id].capacity -= bottleneck;
            arcs_[arc_id ^ 1].capacity += bottleneck;
            v = arcs_[arc_id ^ 1].to;
        }
        total += bottleneck;
    }
}

double FlowNetwork::flow_on(size_t edge_id) const {
    return original_capacity_[edge_id] - arcs_[edge_id].capacity;
}

}  // namespace advcal
