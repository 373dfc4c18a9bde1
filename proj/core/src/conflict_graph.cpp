#include "advcal/conflict_graph.hpp"

#include <stdexcept>

namespace advcal {

ConflictGraph build_conflict_graph(const ProblemInstance& instance) {
    instance.validate();
    ConflictGraph graph;
    for (size_t i = 0; i < instance.atoms.size(); ++i) {
        (instance.atoms[i].y > 0 ? graph.positive_atoms : graph.negative_atoms).push_back(i);
    }
    for (size_t p : graph.positive_atoms) {
        for (size_t n : graph.negative_atoms) {
            const auto& a = instance.atoms[p].x;
            const auto& b = instance.atoms[n].x;
            double d = distance(instance.metric, a, b);
            if (d <= 2.0 * instance.epsilon) {
                std::vector<double> mid(a.size());
                for (size_t k = 0; k < a.size(); ++k) mid[k] = 0.5 * (a[k] + b[k]);
                // Witness sanity: the midpoint must sit within epsilon of both ends.
                if (distance(instance.metric, mid, a) > instance.epsilon + 1e-9 ||
                    distance(instance.metric, mid, b) > instance.epsilon + 1e-9) {
                    throw std::runtime_error("conflict graph: midpoint witness violates the radius bound");
                }
                graph.edges.push_back({p, n, std::move(mid)});
            }
        }
    }
    return graph;
}

}  // namespace advcal
