#pragma once

#include <string>

#include <json.hpp>

#include "advcal/bayes_risk.hpp"
#include "advcal/calibration.hpp"
#include "advcal/grid_classifier.hpp"
#include "advcal/instance.hpp"
#include "advcal/losses.hpp"
#include "advcal/scenarios.hpp"
#include "advcal/training.hpp"

namespace advcal {

using json = nlohmann::json;

// Loss specifications: {"kind": ..., "tau": ..., "lambda": ...}. Flags and
// limits are derived by the factory, never read from the payload.
json loss_to_json(const MarginLoss& loss);
MarginLoss loss_from_json(const json& j);

json calibration_report_to_json(const CalibrationReport& report);

// Instances: {"metric": "l2"|"linf", "epsilon": e,
//             "atoms": [{"x": [...], "y": 1|-1, "mass": m}]}.
json instance_to_json(const ProblemInstance& instance);
ProblemInstance instance_from_json(const json& j);

json risk_report_to_json(const RiskReport& report);
json duality_report_to_json(const DualityReport& report);

json attack_plan_to_json(const AttackPlan& plan);
// Columns: source_index, dest_0[, dest_1], label, mass.
std::string attack_plan_to_csv(const AttackPlan& plan);

json grid_to_json(const GridClassifier& grid);
GridClassifier grid_from_json(const json& j);
// Cell centers and values, for plotting.
std::string grid_to_csv(const GridClassifier& grid);

json train_config_to_json(const TrainConfig& config);
TrainConfig train_config_from_json(const json& j);

// Columns: iteration, surrogate_risk, adv01_risk, qstar_risk, max_update.
std::string trajectory_to_csv(const TrajectoryRecord& trajectory);
json trajectory_summary_to_json(const TrajectoryRecord& trajectory);

json scenario_report_to_json(const ScenarioReport& report);

}  // namespace advcal
