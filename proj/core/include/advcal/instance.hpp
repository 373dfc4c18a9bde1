#pragma once

#include <string>
#include <vector>

namespace advcal {

enum class Metric { euclidean, chebyshev };

std::string metric_name(Metric m);            // "l2" / "linf"
Metric metric_from_name(const std::string&);

double distance(Metric metric, const std::vector<double>& a, const std::vector<double>& b);

struct Atom {
    std::vector<double> x;
    int y = 1;        // +1 or -1
    double mass = 0;  // > 0
};

// A finite empirical distribution with an attack radius. Immutable after
// validation; every operation downstream assumes validate() passed.
struct ProblemInstance {
    std::vector<Atom> atoms;
    Metric metric = Metric::euclidean;
    double epsilon = 0.0;

    size_t dimension() const { return atoms.empty() ? 0 : atoms.front().x.size(); }
    void validate() const;  // throws std::invalid_argument with the violated constraint
};

ProblemInstance make_instance(std::vector<Atom> atoms, Metric metric, double epsilon);

}  // namespace advcal
