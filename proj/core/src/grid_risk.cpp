#include "advcal/grid_risk.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "advcal/conflict_graph.hpp"

namespace advcal {

void SaturationBound::validate_for(const MarginLoss& loss) const {
    if (!(M > 0.0)) throw std::invalid_argument("saturation bound must be positive");
    if (eval_loss(loss, M) > 1e-6) {
        throw std::invalid_argument("saturation bound too small: phi(M) > 1e-6 for " + loss.name);
    }
    if (loss.limits.at_neg_inf.is_finite() &&
        eval_loss(loss, -M) < loss.limits.at_neg_inf.value() - 1e-6) {
        throw std::invalid_argument("saturation bound too small: phi(-M) below the lower-tail limit");
    }
}

double adv_zero_one_risk(const GridClassifier& f, const ProblemInstance& instance) {
    instance.validate();
    f.validate();
    double risk = 0.0;
    for (const Atom& atom : instance.atoms) {
        for (size_t cell : f.ball_cells(atom.x, instance.metric, instance.epsilon)) {
            if (sign_of(f.values[cell]) != atom.y) {
                risk += atom.mass;
                break;
            }
        }
    }
    return risk;
}

double adv_surrogate_risk(const GridClassifier& f, const MarginLoss& loss, const ProblemInstance& instance) {
    instance.validate();
    f.validate();
    double risk = 0.0;
    for (const Atom& atom : instance.atoms) {
        double worst = 0.0;
        bool any = false;
        for (size_t cell : f.ball_cells(atom.x, instance.metric, instance.epsilon)) {
            double value = eval_loss(loss, atom.y * f.values[cell]);
            if (!any || value > worst) {
                worst = value;
                any = true;
            }
        }
        if (!any) throw std::domain_error("adv_surrogate_risk: atom ball meets no cell");
        risk += atom.mass * worst;
    }
    return risk;
}

double risk_under_distribution(const GridClassifier& f, const std::vector<Atom>& attacked,
                               const AnyLoss& loss) {
    f.validate();
    double risk = 0.0;
    for (const Atom& atom : attacked) {
        risk += atom.mass * pointwise_loss(loss, atom.y, f.value_at(atom.x));
    }
    return risk;
}

GridClassifier cover_classifier(const ProblemInstance& instance, const std::vector<size_t>& cover,
                                const SaturationBound& saturation, const MarginLoss& loss) {
    instance.validate();
    saturation.validate_for(loss);

    std::vector<char> in_cover(instance.atoms.size(), 0);
    for (size_t i : cover) {
        if (i >= instance.atoms.size()) throw std::invalid_argument("cover_classifier: index out of range");
        in_cover[i] = 1;
    }
    auto graph = build_conflict_graph(instance);
    if (!graph.covers(in_cover)) {
        throw std::invalid_argument("cover_classifier: set does not cover every conflict edge");
    }

    GridClassifier grid = auto_grid(instance, -saturation.M);
    grid.outside_value = -saturation.M;

    std::vector<char> claimed_positive(grid.cell_count(), 0);
    std::vector<char> claimed_negative(grid.cell_count(), 0);
    for (size_t i = 0; i < instance.atoms.size(); ++i) {
        if (in_cover[i]) continue;
        const Atom& atom = instance.atoms[i];
        for (size_t cell : grid.ball_cells(atom.x, instance.metric, instance.epsilon)) {
            (atom.y > 0 ? claimed_positive : claimed_negative)[cell] = 1;
        }
    }
    for (size_t cell = 0; cell < grid.cell_count(); ++cell) {
        if (claimed_positive[cell] && claimed_negative[cell]) {
            throw std::runtime_error(
                "cover_classifier: opposing uncovered balls collide within one cell; "
                "refine the grid or fix the cover");
        }
        if (claimed_positive[cell]) grid.values[cell] = saturation.M;
    }
    return grid;
}

}  // namespace advcal
