#include "advcal/instance.hpp"

#include <cmath>
#include <stdexcept>

namespace advcal {

std::string metric_name(Metric m) { return m == Metric::euclidean ? "l2" : "linf"; }

Metric metric_from_name(const std::string& name) {
    if (name == "l2" || name == "euclidean") return Metric::euclidean;
    if (name == "linf" || name == "chebyshev") return Metric::chebyshev;
    throw std::invalid_argument("unknown metric: " + name);
}

double distance(Metric metric, const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("distance: dimension mismatch");
    if (metric == Metric::euclidean) {
        double sum = 0.0;
        for (size_t k = 0; k < a.size(); ++k) {
            double d = a[k] - b[k];
            sum += d * d;
        }
        return std::sqrt(sum);
    }
    double best = 0.0;
    for (size_t k = 0; k < a.size(); ++k) {
        best = std::max(best, std::abs(a[k] - b[k]));
    }
    return best;
}

void ProblemInstance::validate() const {
    if (atoms.empty()) throw std::invalid_argument("instance: needs at least one atom");
    if (!(epsilon >= 0.0)) throw std::invalid_argument("instance: epsilon must be >= 0");
    size_t dim = atoms.front().x.size();
    if (dim == 0) throw std::invalid_argument("instance: atoms must have dimension >= 1");
    double total = 0.0;
    for (const Atom& atom : atoms) {
        if (atom.x.size() != dim) throw std::invalid_argument("instance: inconsistent atom dimension");
        for (double c : atom.x) {
            if (!std::isfinite(c)) throw std::invalid_argument("instance: atom position must be finite");
        }
        if (atom.y != 1 && atom.y != -1) throw std::invalid_argument("instance: labels must be +-1");
        if (!(atom.mass > 0.0)) throw std::invalid_argument("instance: masses must be > 0");
        total += atom.mass;
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw std::invalid_argument("instance: masses must sum to 1 (got " + std::to_string(total) + ")");
    }
}

ProblemInstance make_instance(std::vector<Atom> atoms, Metric metric, double epsilon) {
    ProblemInstance instance{std::move(atoms), metric, epsilon};
    instance.validate();
    return instance;
}

}  // namespace advcal
