#include "advcal/training.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "advcal/conditional_risk.hpp"

namespace advcal {

namespace {

constexpr double kConvergenceGap = 1e-4;
constexpr double kRiskTol = 0.01;
constexpr double kDivergenceFactor = 10.0;

// Greatest common divisor of positive reals, for aligning a uniform grid to
// the breakpoints of the three-point construction.
double real_gcd(double a, double b) {
    a = std::abs(a);
    b = std::abs(b);
    while (b > 1e-9) {
        double r = std::fmod(a, b);
        if (r > b - 1e-9) r = 0.0;  // fmod landed on b within tolerance
        if (r < 1e-9) r = 0.0;
        a = b;
        b = r;
    }
    return a;
}

struct ThreePointShape {
    double a = 0.0;
    size_t center = 0, left = 0, right = 0;
};

// Matches atoms {(0,+1,1/2), (-a,-1,1/4), (+a,-1,1/4)} in 1D.
ThreePointShape match_three_point(const ProblemInstance& instance) {
    if (instance.dimension() != 1 || instance.atoms.size() != 3) {
        throw std::invalid_argument("pathological_sequence: needs the 1D three-point family");
    }
    ThreePointShape shape;
    bool found_center = false, found_left = false, found_right = false;
    for (size_t i = 0; i < 3; ++i) {
        const Atom& atom = instance.atoms[i];
        if (atom.y == +1 && std::abs(atom.x[0]) < 1e-12 && std::abs(atom.mass - 0.5) < 1e-12) {
            shape.center = i;
            found_center = true;
        } else if (atom.y == -1 && atom.x[0] < 0 && std::abs(atom.mass - 0.25) < 1e-12) {
            shape.left = i;
            shape.a = -atom.x[0];
            found_left = true;
        } else if (atom.y == -1 && atom.x[0] > 0 && std::abs(atom.mass - 0.25) < 1e-12) {
            shape.right = i;
            found_right = true;
        }
    }
    if (!found_center || !found_left || !found_right ||
        std::abs(instance.atoms[shape.right].x[0] - shape.a) > 1e-12) {
        throw std::invalid_argument("pathological_sequence: needs the 1D three-point family");
    }
    return shape;
}

GridClassifier initial_classifier(const TrainConfig& config) {
    switch (config.init.kind) {
        case InitSpec::Kind::zeros: {
            if (config.grid) {
                GridClassifier grid = *config.grid;
                std::fill(grid.values.begin(), grid.values.end(), 0.0);
                grid.outside_value = 0.0;
                return grid;
            }
            return auto_grid(config.instance, 0.0);
        }
        case InitSpec::Kind::pathological:
            return pathological_sequence(config.instance, config.init.pathological_n);
        case InitSpec::Kind::cover: {
            auto covers = minimum_mass_covers(config.instance);
            if (config.init.cover_id >= covers.size()) {
                throw std::invalid_argument("train: cover id out of range");
            }
            SaturationBound saturation{config.clamp};
            return cover_classifier(config.instance, covers[config.init.cover_id], saturation, config.loss);
        }
        case InitSpec::Kind::random: {
            GridClassifier grid = config.grid ? *config.grid : auto_grid(config.instance, 0.0);
            std::mt19937_64 rng(config.init.seed);
            std::uniform_real_distribution<double> uniform(-1.0, 1.0);
            for (double& v : grid.values) v = uniform(rng);
            return grid;
        }
    }
    throw std::invalid_argument("train: unknown init kind");
}

}  // namespace

void TrainConfig::validate() const {
    instance.validate();
    if (iterations < 1) throw std::invalid_argument("train: iteration budget must be >= 1");
    if (!(schedule.step0 > 0.0)) throw std::invalid_argument("train: step size must be > 0");
    if (!(clamp > 0.0)) throw std::invalid_argument("train: clamp must be > 0");
}

double TrajectoryRecord::best_surrogate() const {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& row : rows) best = std::min(best, row.surrogate_risk);
    return best;
}

double TrajectoryRecord::last_surrogate() const { return rows.back().surrogate_risk; }

const TrajectoryRow& TrajectoryRecord::final_row() const {
    if (rows.empty()) throw std::logic_error("trajectory: empty");
    return rows.back();
}

SubgradientResult surrogate_subgradient(const GridClassifier& f, const MarginLoss& loss,
                                        const ProblemInstance& instance) {
    SubgradientResult result;
    result.gradient.assign(f.values.size(), 0.0);
    result.tie_gap = std::numeric_limits<double>::infinity();
    for (const Atom& atom : instance.atoms) {
        auto cells = f.ball_cells(atom.x, instance.metric, instance.epsilon);
        size_t best_cell = cells.front();
        double best = -1.0, second = -1.0;
        for (size_t cell : cells) {
            double value = eval_loss(loss, atom.y * f.values[cell]);
            if (value > best) {
                second = best;
                best = value;
                best_cell = cell;
            } else if (value > second) {
                second = value;
            }
        }
        if (second >= 0.0) result.tie_gap = std::min(result.tie_gap, best - second);
        double margin = atom.y * f.values[best_cell];
        result.gradient[best_cell] += atom.mass * loss_derivative(loss, margin) * atom.y;
    }
    return result;
}

TrainResult train(const TrainConfig& config) {
    config.validate();
    TrainResult result;
    result.classifier = initial_classifier(config);
    result.optimal_attack_plan = optimal_attack(config.instance);
    auto attacked = result.optimal_attack_plan.attacked_atoms();
    ReferenceLoss zero_one{ReferenceKind::zero_one};

    const long log_every = (config.iterations + 199) / 200;
    auto log_row = [&](long iteration, double max_update) {
        TrajectoryRow row;
        row.iteration = iteration;
        row.surrogate_risk = adv_surrogate_risk(result.classifier, config.loss, config.instance);
        row.adv01_risk = adv_zero_one_risk(result.classifier, config.instance);
        row.qstar_risk = risk_under_distribution(result.classifier, attacked, AnyLoss{zero_one});
        row.max_update = max_update;
        result.trajectory.rows.push_back(row);
        return row.surrogate_risk;
    };

    double initial_risk = log_row(0, 0.0);
    for (long t = 1; t <= config.iterations; ++t) {
        auto sub = surrogate_subgradient(result.classifier, config.loss, config.instance);
        double step = config.schedule.at(t);
        double max_update = 0.0;
        for (size_t c = 0; c < result.classifier.values.size(); ++c) {
            if (sub.gradient[c] == 0.0) continue;
            double before = result.classifier.values[c];
            double after = std::clamp(before - step * sub.gradient[c], -config.clamp, config.clamp);
            result.classifier.values[c] = after;
            max_update = std::max(max_update, std::abs(after - before));
        }
        if (t % log_every == 0 || t == config.iterations) {
            double risk = log_row(t, max_update);
            if (risk > kDivergenceFactor * initial_risk && risk > 1e-6) {
                throw std::runtime_error("train: surrogate risk diverged (" + std::to_string(risk) +
                                         " vs initial " + std::to_string(initial_risk) + ")");
            }
        }
    }
    return result;
}

GridClassifier pathological_sequence(const ProblemInstance& instance, long n) {
    instance.validate();
    auto shape = match_three_point(instance);
    double a = shape.a;
    double eps = instance.epsilon;
    if (!(eps < a && a < 2.0 * eps)) {
        throw std::invalid_argument(
            "pathological_sequence: requires eps < a < 2*eps (got a=" + std::to_string(a) +
            ", eps=" + std::to_string(eps) + ")");
    }
    if (n < 1) throw std::invalid_argument("pathological_sequence: n must be >= 1");

    // Uniform width dividing every breakpoint gap, so the region boundaries
    // +-eps, +-(a-eps), +-(a+eps) land exactly on cell edges.
    double w = real_gcd(real_gcd(a, 2.0 * eps - a), 2.0 * (a - eps));
    if (w < 1e-6) throw std::invalid_argument("pathological_sequence: breakpoints are not commensurate");

    GridClassifier grid;
    double hi = a + eps;
    int cells = static_cast<int>(std::llround(2.0 * hi / w));
    grid.axes.push_back({-hi, hi, cells});
    grid.values.assign(static_cast<size_t>(cells), -1.0);
    grid.outside_value = -1.0;

    double low_scale = 1.0 / static_cast<double>(n);
    for (int i = 0; i < cells; ++i) {
        double mid = grid.cell_center(static_cast<size_t>(i))[0];
        if (mid >= -eps && mid <= -a + eps) {
            grid.values[static_cast<size_t>(i)] = low_scale;
        } else if (mid >= a - eps && mid <= eps) {
            grid.values[static_cast<size_t>(i)] = -low_scale;
        } else if (mid > -a + eps && mid < a - eps) {
            grid.values[static_cast<size_t>(i)] = 1.0;
        }
    }
    grid.validate();
    return grid;
}

PseudoConsistencyReport verify_pseudo_consistency(const TrajectoryRecord& trajectory,
                                                  const ProblemInstance& instance) {
    PseudoConsistencyReport report;
    report.bayes_risk = adversarial_bayes_risk(instance).value;
    report.surrogate_convergence = trajectory.last_surrogate() - trajectory.best_surrogate();
    const auto& final_row = trajectory.final_row();
    report.final_qstar_risk = final_row.qstar_risk;
    report.qstar_gap = std::abs(final_row.qstar_risk - report.bayes_risk);
    report.final_adv01_risk = final_row.adv01_risk;
    report.adv01_gap = final_row.adv01_risk - report.bayes_risk;
    if (report.surrogate_convergence >= kConvergenceGap) {
        report.status = CheckStatus::inconclusive;
    } else {
        report.status = report.qstar_gap <= kRiskTol ? CheckStatus::pass : CheckStatus::fail;
    }
    return report;
}

RealizableConsistencyReport verify_realizable_consistency(const ProblemInstance& instance,
                                                          const MarginLoss& loss, long iterations,
                                                          double step) {
    if (adversarial_bayes_risk(instance).value > 1e-12) {
        throw std::invalid_argument(
            "verify_realizable_consistency: instance has nonzero worst-case optimum");
    }
    TrainConfig config;
    config.loss = loss;
    config.instance = instance;
    config.schedule = {StepSchedule::Kind::constant, step};
    config.iterations = iterations;
    config.init.kind = InitSpec::Kind::zeros;
    auto result = train(config);

    RealizableConsistencyReport report;
    const auto& final_row = result.trajectory.final_row();
    report.final_adv01_risk = final_row.adv01_risk;
    report.final_surrogate_risk = final_row.surrogate_risk;
    report.loss_infimum = optimal_conditional_risk(AnyLoss{loss}, 1.0).value;
    bool ok = report.final_adv01_risk <= kRiskTol &&
              report.final_surrogate_risk <= report.loss_infimum + kRiskTol;
    report.status = ok ? CheckStatus::pass : CheckStatus::fail;
    return report;
}

std::string check_status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::inconclusive: return "inconclusive";
    }
    return "fail";
}

}  // namespace advcal
