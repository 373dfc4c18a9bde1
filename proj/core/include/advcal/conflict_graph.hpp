#pragma once

#include <vector>

#include "advcal/instance.hpp"

namespace advcal {

// An edge means the two atoms' epsilon-balls meet: opposite labels at
// distance <= 2*epsilon, with the coordinate midpoint as the meeting-point
// witness (valid for both supported metrics).
struct ConflictEdge {
    size_t positive;              // index into instance atoms, label +1
    size_t negative;              // index into instance atoms, label -1
    std::vector<double> midpoint;
};

struct ConflictGraph {
    std::vector<size_t> positive_atoms;
    std::vector<size_t> negative_atoms;
    std::vector<ConflictEdge> edges;

    bool covers(const std::vector<char>& in_cover) const {
        for (const auto& e : edges) {
            if (!in_cover[e.positive] && !in_cover[e.negative]) return false;
        }
        return true;
    }
};

ConflictGraph build_conflict_graph(const ProblemInstance& instance);

}  // namespace advcal
