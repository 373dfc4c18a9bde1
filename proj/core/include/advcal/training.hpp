#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "advcal/bayes_risk.hpp"
#include "advcal/grid_classifier.hpp"
#include "advcal/grid_risk.hpp"
#include "advcal/instance.hpp"
#include "advcal/losses.hpp"

namespace advcal {

struct StepSchedule {
    enum class Kind { constant, inv_sqrt };
    Kind kind = Kind::constant;
    double step0 = 0.5;
    double at(long t) const {  // t is 1-based
        return kind == Kind::constant ? step0 : step0 / std::sqrt(static_cast<double>(t));
    }
};

struct InitSpec {
    enum class Kind { zeros, pathological, cover, random };
    Kind kind = Kind::zeros;
    long pathological_n = 400;  // h_n scale for pathological init
    size_t cover_id = 0;        // index into the minimum-mass covers
    std::uint64_t seed = 0;     // RNG seed for random init
};

struct TrainConfig {
    MarginLoss loss;
    ProblemInstance instance;
    std::optional<GridClassifier> grid;  // template grid; values are overwritten by init
    StepSchedule schedule;
    long iterations = 10000;
    InitSpec init;
    double clamp = 20.0;  // saturation bound M

    void validate() const;
};

struct TrajectoryRow {
    long iteration = 0;
    double surrogate_risk = 0.0;  // worst-case surrogate risk of f_t
    double adv01_risk = 0.0;      // worst-case 0/1 risk of f_t
    double qstar_risk = 0.0;      // plain 0/1 risk of f_t under the optimal attack
    double max_update = 0.0;      // largest single cell change this iteration
};

struct TrajectoryRecord {
    std::vector<TrajectoryRow> rows;
    double best_surrogate() const;
    double last_surrogate() const;
    const TrajectoryRow& final_row() const;
};

struct TrainResult {
    TrajectoryRecord trajectory;
    GridClassifier classifier;
    AttackPlan optimal_attack_plan;
};

// Subgradient of the worst-case surrogate risk with respect to the cell
// values: per atom, mass * phi'(y*v) * y lands on the cell attaining the
// inner supremum (ties broken toward the lowest cell index).
// tie_gap reports the smallest best-vs-second-best margin across atoms, for
// excluding near-tie points from finite-difference checks.
struct SubgradientResult {
    std::vector<double> gradient;
    double tie_gap = 0.0;
};
SubgradientResult surrogate_subgradient(const GridClassifier& f, const MarginLoss& loss,
                                        const ProblemInstance& instance);

// Projected subgradient descent: f_{t+1} = clamp(f_t - step_t * g_t, +-M),
// logging every ceil(T/200) iterations. Throws when the surrogate risk
// exceeds ten times its initial value.
TrainResult train(const TrainConfig& config);

// The explicit minimizing sequence for the three-point family, realized on a
// grid aligned to its breakpoints: +1/n on [-eps, -a+eps], -1/n on
// [a-eps, eps], +1 between, -1 elsewhere. Requires eps < a < 2*eps.
GridClassifier pathological_sequence(const ProblemInstance& instance, long n);

enum class CheckStatus { pass, fail, inconclusive };

struct PseudoConsistencyReport {
    CheckStatus status = CheckStatus::inconclusive;
    double bayes_risk = 0.0;          // exact worst-case optimum of the instance
    double final_qstar_risk = 0.0;
    double qstar_gap = 0.0;           // |final qstar risk - bayes risk|
    double final_adv01_risk = 0.0;
    double adv01_gap = 0.0;           // final adv 0/1 risk - bayes risk (may stay large)
    double surrogate_convergence = 0.0;  // last-vs-best surrogate gap
};

// Checks that a converged run's risk under the optimal attack reached the
// exact optimum (within 0.01), and reports the worst-case 0/1 gap, which the
// check deliberately does not constrain.
PseudoConsistencyReport verify_pseudo_consistency(const TrajectoryRecord& trajectory,
                                                  const ProblemInstance& instance);

struct RealizableConsistencyReport {
    CheckStatus status = CheckStatus::fail;
    double final_adv01_risk = 0.0;
    double final_surrogate_risk = 0.0;
    double loss_infimum = 0.0;  // inf over alpha of phi
};

// On an instance with zero worst-case Bayes risk, trains from zeros and
// checks final adv 0/1 risk <= 0.01 and surrogate <= inf phi + 0.01.
RealizableConsistencyReport verify_realizable_consistency(const ProblemInstance& instance,
                                                          const MarginLoss& loss,
                                                          long iterations = 20000,
                                                          double step = 1.0);

std::string check_status_name(CheckStatus s);

}  // namespace advcal
