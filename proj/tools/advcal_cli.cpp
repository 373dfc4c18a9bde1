// Command-line front end: loss audits, exact worst-case risks, optimal
// attacks, duality checks, training runs, and the built-in scenarios.
// Success paths print JSON to stdout; --pretty switches to tables.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "advcal/serialization.hpp"

namespace {

using advcal::json;

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << text;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

advcal::MarginLoss resolve_loss(const std::string& name, double tau) {
    return tau < 0.0 ? advcal::make_loss_by_name(name) : advcal::make_loss_by_name(name, tau);
}

void print_audit_table(const std::vector<advcal::CalibrationReport>& reports) {
    std::printf("%-24s %-10s %-13s %-10s %s\n", "loss", "standard", "adversarial", "0/1-like", "rule");
    for (const auto& r : reports) {
        std::printf("%-24s %-10s %-13s %-10s %s\n", r.loss_name.c_str(),
                    r.standard_calibrated ? "yes" : "no",
                    advcal::verdict_name(r.adversarial_verdict).c_str(),
                    r.zero_one_like ? "yes" : "no", r.verdict_rule.c_str());
    }
}

void print_scenario_table(const advcal::ScenarioReport& report) {
    std::printf("scenario %s: %s\n", report.name.c_str(), report.pass ? "PASS" : "FAIL");
    for (const auto& c : report.checks) {
        std::printf("  [%s] %-45s %s %.12g (got %.12g, tol %.3g)\n", c.pass ? "ok" : "FAIL",
                    c.quantity.c_str(),
                    c.kind == advcal::ScenarioCheck::Kind::equals ? "=" : "<=", c.expected, c.got,
                    c.tolerance);
    }
}

advcal::ScenarioParams parse_params(const std::vector<std::string>& raw) {
    advcal::ScenarioParams params;
    for (const auto& entry : raw) {
        auto eq = entry.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("--param expects key=value, got '" + entry + "'");
        }
        params[entry.substr(0, eq)] = std::stod(entry.substr(eq + 1));
    }
    return params;
}

std::string strip_json_suffix(std::string path) {
    if (path.size() > 5 && path.substr(path.size() - 5) == ".json") path.resize(path.size() - 5);
    return path;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"desk-scale worst-case classification laboratory"};
    app.require_subcommand(1);
    app.fallthrough();  // lets --pretty appear after the subcommand
    bool pretty = false;
    app.add_flag("--pretty", pretty, "human-readable tables instead of JSON");

    std::string loss_name, instance_path, out_path, config_path, out_dir, scenario_name;
    double tau = -1.0;
    std::vector<std::string> raw_params;
    std::string losses_csv;

    auto* audit_cmd = app.add_subcommand("audit-loss", "calibration audit of one loss");
    audit_cmd->add_option("--loss", loss_name, "loss name")->required();
    audit_cmd->add_option("--tau", tau, "shift (shifted kinds only)");

    app.add_subcommand("list-losses", "audit the whole loss zoo");

    auto* bayes_cmd = app.add_subcommand("bayes-risk", "exact worst-case optimum of an instance");
    bayes_cmd->add_option("--instance", instance_path, "instance JSON file")->required();

    auto* attack_cmd = app.add_subcommand("attack", "optimal attack of an instance");
    attack_cmd->add_option("--instance", instance_path, "instance JSON file")->required();
    attack_cmd->add_option("--out", out_path, "output base path (.json and .csv are written)")->required();

    auto* duality_cmd = app.add_subcommand("duality", "min-cut vs exhaustive vs attack values");
    duality_cmd->add_option("--instance", instance_path, "instance JSON file")->required();

    auto* train_cmd = app.add_subcommand("train", "subgradient training run");
    train_cmd->add_option("--config", config_path, "train config JSON file")->required();
    train_cmd->add_option("--out-dir", out_dir, "directory for trajectory.csv and classifier.json")
        ->required();

    auto* scenario_cmd = app.add_subcommand("scenario", "run a named scenario");
    scenario_cmd->add_option("--name", scenario_name, "scenario name")->required();
    scenario_cmd->add_option("--param", raw_params, "scenario parameter key=value (repeatable)");
    scenario_cmd->add_option("--losses", losses_csv, "comma-separated loss names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        if (dynamic_cast<const CLI::CallForHelp*>(&e) != nullptr ||
            dynamic_cast<const CLI::CallForAllHelp*>(&e) != nullptr) {
            return code;
        }
        return 2;
    }

    try {
        if (audit_cmd->parsed()) {
            auto report = advcal::audit(resolve_loss(loss_name, tau));
            if (pretty) {
                print_audit_table({report});
            } else {
                emit(advcal::calibration_report_to_json(report));
            }
            return 0;
        }

        if (app.get_subcommand("list-losses")->parsed()) {
            std::vector<advcal::CalibrationReport> reports;
            for (const auto& loss : advcal::loss_zoo()) reports.push_back(advcal::audit(loss));
            if (pretty) {
                print_audit_table(reports);
            } else {
                json j = json::array();
                for (const auto& r : reports) j.push_back(advcal::calibration_report_to_json(r));
                emit(j);
            }
            return 0;
        }

        if (bayes_cmd->parsed()) {
            auto instance = advcal::instance_from_json(read_json_file(instance_path));
            emit(advcal::risk_report_to_json(advcal::adversarial_bayes_risk(instance)));
            return 0;
        }

        if (attack_cmd->parsed()) {
            auto instance = advcal::instance_from_json(read_json_file(instance_path));
            auto plan = advcal::optimal_attack(instance);
            advcal::validate_attack_plan(plan, instance);
            std::string base = strip_json_suffix(out_path);
            write_text_file(base + ".json", advcal::attack_plan_to_json(plan).dump(2) + "\n");
            write_text_file(base + ".csv", advcal::attack_plan_to_csv(plan));
            emit(advcal::attack_plan_to_json(plan));
            return 0;
        }

        if (duality_cmd->parsed()) {
            auto instance = advcal::instance_from_json(read_json_file(instance_path));
            auto report = advcal::verify_strong_duality(instance);
            emit(advcal::duality_report_to_json(report));
            return report.consistent ? 0 : 1;
        }

        if (train_cmd->parsed()) {
            auto config = advcal::train_config_from_json(read_json_file(config_path));
            auto result = advcal::train(config);
            std::filesystem::create_directories(out_dir);
            write_text_file(out_dir + "/trajectory.csv", advcal::trajectory_to_csv(result.trajectory));
            write_text_file(out_dir + "/classifier.json",
                            advcal::grid_to_json(result.classifier).dump(2) + "\n");
            emit(advcal::trajectory_summary_to_json(result.trajectory));
            return 0;
        }

        if (scenario_cmd->parsed()) {
            std::vector<std::string> losses;
            if (!losses_csv.empty()) {
                std::stringstream stream(losses_csv);
                std::string item;
                while (std::getline(stream, item, ',')) losses.push_back(item);
            }
            auto report = advcal::run_scenario(scenario_name, parse_params(raw_params), losses);
            if (pretty) {
                print_scenario_table(report);
            } else {
                emit(advcal::scenario_report_to_json(report));
            }
            return report.pass ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
