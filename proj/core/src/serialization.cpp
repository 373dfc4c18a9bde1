#include "advcal/serialization.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace advcal {

namespace {

std::string format_double(double v) {
    std::ostringstream out;
    out.precision(17);
    out << v;
    return out.str();
}

}  // namespace

json loss_to_json(const MarginLoss& loss) {
    return {
        {"kind", loss_kind_name(loss.kind)},
        {"tau", loss.tau},
        {"lambda", loss.lambda},
    };
}

MarginLoss loss_from_json(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    double tau = j.value("tau", -1.0);
    MarginLoss loss = tau < 0.0 ? make_loss_by_name(kind) : make_loss_by_name(kind, tau);
    if (j.contains("lambda")) {
        double lambda = j.at("lambda").get<double>();
        if (std::abs(lambda - loss.lambda) > 1e-12) {
            throw std::invalid_argument("loss: lambda is derived from the kind; got inconsistent value");
        }
    }
    return loss;
}

json calibration_report_to_json(const CalibrationReport& report) {
    return {
        {"loss_name", report.loss_name},
        {"standard_calibrated", report.standard_calibrated},
        {"standard_method", report.standard_method},
        {"derivative_at_zero", report.derivative_at_zero},
        {"zero_in_argmin_symmetrized", report.zero_in_argmin_symmetrized},
        {"symmetrized_at_zero", report.symmetrized_at_zero},
        {"symmetrized_min", report.symmetrized_min},
        {"symmetrized_zero_gap", report.symmetrized_zero_gap},
        {"adversarially_calibrated", report.adversarially_calibrated},
        {"adversarial_verdict", verdict_name(report.adversarial_verdict)},
        {"zero_one_like", report.zero_one_like},
        {"measured_at_minus_horizon", report.measured_at_minus_horizon},
        {"measured_at_plus_horizon", report.measured_at_plus_horizon},
        {"verdict_rule", report.verdict_rule},
        {"failed_clause", report.failed_clause},
    };
}

json instance_to_json(const ProblemInstance& instance) {
    json atoms = json::array();
    for (const Atom& atom : instance.atoms) {
        atoms.push_back({{"x", atom.x}, {"y", atom.y}, {"mass", atom.mass}});
    }
    return {{"metric", metric_name(instance.metric)}, {"epsilon", instance.epsilon}, {"atoms", atoms}};
}

ProblemInstance instance_from_json(const json& j) {
    ProblemInstance instance;
    instance.metric = metric_from_name(j.at("metric").get<std::string>());
    instance.epsilon = j.at("epsilon").get<double>();
    for (const auto& entry : j.at("atoms")) {
        Atom atom;
        atom.x = entry.at("x").get<std::vector<double>>();
        atom.y = entry.at("y").get<int>();
        atom.mass = entry.at("mass").get<double>();
        instance.atoms.push_back(std::move(atom));
    }
    instance.validate();
    return instance;
}

json risk_report_to_json(const RiskReport& report) {
    return {
        {"value", report.value},
        {"method", risk_method_name(report.method)},
        {"cover", report.cover},
        {"runtime_seconds", report.runtime_seconds},
    };
}

json duality_report_to_json(const DualityReport& report) {
    return {
        {"mincut_value", report.mincut_value},
        {"brute_force_value", report.brute_force_value},
        {"attack_value", report.attack_value},
        {"consistent", report.consistent},
    };
}

json attack_plan_to_json(const AttackPlan& plan) {
    json moves = json::array();
    for (const auto& move : plan.moves) {
        moves.push_back({{"source_index", move.source},
                         {"dest", move.destination},
                         {"label", move.label},
                         {"mass", move.mass}});
    }
    return {{"moves", moves}};
}

std::string attack_plan_to_csv(const AttackPlan& plan) {
    size_t dim = plan.moves.empty() ? 1 : plan.moves.front().destination.size();
    std::ostringstream out;
    out << "source_index";
    for (size_t k = 0; k < dim; ++k) out << ",dest_" << k;
    out << ",label,mass\n";
    for (const auto& move : plan.moves) {
        out << move.source;
        for (double c : move.destination) out << ',' << format_double(c);
        out << ',' << move.label << ',' << format_double(move.mass) << '\n';
    }
    return out.str();
}

json grid_to_json(const GridClassifier& grid) {
    json axes = json::array();
    for (const Axis& axis : grid.axes) {
        axes.push_back({{"lo", axis.lo}, {"hi", axis.hi}, {"cells", axis.cells}});
    }
    return {{"dim", grid.dimension()},
            {"axes", axes},
            {"values", grid.values},
            {"outside_value", grid.outside_value}};
}

GridClassifier grid_from_json(const json& j) {
    GridClassifier grid;
    for (const auto& entry : j.at("axes")) {
        grid.axes.push_back({entry.at("lo").get<double>(), entry.at("hi").get<double>(),
                             entry.at("cells").get<int>()});
    }
    grid.values = j.at("values").get<std::vector<double>>();
    grid.outside_value = j.at("outside_value").get<double>();
    grid.validate();
    return grid;
}

std::string grid_to_csv(const GridClassifier& grid) {
    std::ostringstream out;
    if (grid.dimension() == 1) {
        out << "x,value\n";
        for (size_t c = 0; c < grid.cell_count(); ++c) {
            out << format_double(grid.cell_center(c)[0]) << ',' << format_double(grid.values[c]) << '\n';
        }
    } else {
        out << "x,y,value\n";
        for (size_t c = 0; c < grid.cell_count(); ++c) {
            auto center = grid.cell_center(c);
            out << format_double(center[0]) << ',' << format_double(center[1]) << ','
                << format_double(grid.values[c]) << '\n';
        }
    }
    return out.str();
}

json train_config_to_json(const TrainConfig& config) {
    json init;
    switch (config.init.kind) {
        case InitSpec::Kind::zeros: init = {{"kind", "zeros"}}; break;
        case InitSpec::Kind::pathological:
            init = {{"kind", "pathological"}, {"n", config.init.pathological_n}};
            break;
        case InitSpec::Kind::cover: init = {{"kind", "cover"}, {"cover_id", config.init.cover_id}}; break;
        case InitSpec::Kind::random: init = {{"kind", "random"}, {"seed", config.init.seed}}; break;
    }
    json j = {
        {"loss", loss_to_json(config.loss)},
        {"instance", instance_to_json(config.instance)},
        {"schedule",
         {{"kind", config.schedule.kind == StepSchedule::Kind::constant ? "constant" : "inv_sqrt"},
          {"step", config.schedule.step0}}},
        {"iterations", config.iterations},
        {"init", init},
        {"clamp", config.clamp},
    };
    if (config.grid) j["grid"] = grid_to_json(*config.grid);
    return j;
}

TrainConfig train_config_from_json(const json& j) {
    TrainConfig config;
    config.loss = loss_from_json(j.at("loss"));
    if (j.contains("instance")) {
        config.instance = instance_from_json(j.at("instance"));
    } else if (j.contains("scenario")) {
        const auto& s = j.at("scenario");
        ScenarioParams params;
        if (s.contains("params")) {
            for (const auto& [key, value] : s.at("params").items()) params[key] = value.get<double>();
        }
        config.instance = build_scenario(s.at("name").get<std::string>(), params);
    } else {
        throw std::invalid_argument("train config: needs an 'instance' or a 'scenario'");
    }
    if (j.contains("grid")) config.grid = grid_from_json(j.at("grid"));
    if (j.contains("schedule")) {
        const auto& s = j.at("schedule");
        std::string kind = s.value("kind", "constant");
        if (kind == "constant") {
            config.schedule.kind = StepSchedule::Kind::constant;
        } else if (kind == "inv_sqrt") {
            config.schedule.kind = StepSchedule::Kind::inv_sqrt;
        } else {
            throw std::invalid_argument("train config: unknown schedule kind '" + kind + "'");
        }
        config.schedule.step0 = s.value("step", 0.5);
    }
    config.iterations = j.value("iterations", 10000L);
    if (j.contains("init")) {
        const auto& init = j.at("init");
        std::string kind = init.value("kind", "zeros");
        if (kind == "zeros") {
            config.init.kind = InitSpec::Kind::zeros;
        } else if (kind == "pathological") {
            config.init.kind = InitSpec::Kind::pathological;
            config.init.pathological_n = init.value("n", 400L);
        } else if (kind == "cover") {
            config.init.kind = InitSpec::Kind::cover;
            config.init.cover_id = init.value("cover_id", size_t{0});
        } else if (kind == "random") {
            config.init.kind = InitSpec::Kind::random;
            config.init.seed = init.value("seed", std::uint64_t{0});
        } else {
            throw std::invalid_argument("train config: unknown init kind '" + kind + "'");
        }
    }
    config.clamp = j.value("clamp", 20.0);
    config.validate();
    return config;
}

std::string trajectory_to_csv(const TrajectoryRecord& trajectory) {
    std::ostringstream out;
    out << "iteration,surrogate_risk,adv01_risk,qstar_risk,max_update\n";
    for (const auto& row : trajectory.rows) {
        out << row.iteration << ',' << format_double(row.surrogate_risk) << ','
            << format_double(row.adv01_risk) << ',' << format_double(row.qstar_risk) << ','
            << format_double(row.max_update) << '\n';
    }
    return out.str();
}

json trajectory_summary_to_json(const TrajectoryRecord& trajectory) {
    const auto& final_row = trajectory.final_row();
    return {
        {"logged_rows", trajectory.rows.size()},
        {"final_iteration", final_row.iteration},
        {"final_surrogate_risk", final_row.surrogate_risk},
        {"final_adv01_risk", final_row.adv01_risk},
        {"final_qstar_risk", final_row.qstar_risk},
        {"best_surrogate_risk", trajectory.best_surrogate()},
    };
}

json scenario_report_to_json(const ScenarioReport& report) {
    json checks = json::array();
    for (const auto& check : report.checks) {
        checks.push_back({
            {"quantity", check.quantity},
            {"kind", check.kind == ScenarioCheck::Kind::equals ? "equals" : "at_most"},
            {"expected", check.expected},
            {"got", check.got},
            {"tolerance", check.tolerance},
            {"pass", check.pass},
            {"note", check.note},
        });
    }
    return {{"name", report.name},
            {"params", report.params},
            {"losses", report.losses},
            {"checks", checks},
            {"pass", report.pass}};
}

}  // namespace advcal
