#pragma once

#include <vector>

#include "advcal/grid_classifier.hpp"
#include "advcal/instance.hpp"
#include "advcal/losses.hpp"

namespace advcal {

// Finite stand-in for +-infinity outputs. For the loss in use, phi(M) must be
// <= 1e-6 and phi(-M) must sit within 1e-6 of the lower-tail limit.
struct SaturationBound {
    double M = 20.0;
    void validate_for(const MarginLoss& loss) const;
};

// Worst-case 0/1 risk: an atom contributes its mass iff some cell meeting its
// attack ball carries the wrong sign (sign(0) = +1). Exact for
// piecewise-constant classifiers.
double adv_zero_one_risk(const GridClassifier& f, const ProblemInstance& instance);

// Worst-case surrogate risk: mass-weighted sum of max phi(y * value) over the
// cells meeting each atom's ball.
double adv_surrogate_risk(const GridClassifier& f, const MarginLoss& loss,
                          const ProblemInstance& instance);

// Plain (non-adversarial) risk of f under an attacked distribution.
double risk_under_distribution(const GridClassifier& f, const std::vector<Atom>& attacked,
                               const AnyLoss& loss);

// The classifier induced by a vertex cover: +M on every uncovered positive
// atom's ball, -M on every uncovered negative atom's ball, -M elsewhere.
// Throws when the cover leaves a conflict edge uncovered or when opposing
// uncovered balls collide inside one cell.
GridClassifier cover_classifier(const ProblemInstance& instance, const std::vector<size_t>& cover,
                                const SaturationBound& saturation, const MarginLoss& loss);

}  // namespace advcal
