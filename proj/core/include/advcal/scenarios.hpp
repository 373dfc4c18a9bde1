#pragma once

#include <map>
#include <string>
#include <vector>

#include "advcal/instance.hpp"
#include "advcal/losses.hpp"

namespace advcal {

using ScenarioParams = std::map<std::string, double>;

// One asserted quantity: compare == (within tolerance) or <= bound.
struct ScenarioCheck {
    enum class Kind { equals, at_most };
    std::string quantity;
    Kind kind = Kind::equals;
    double expected = 0.0;
    double got = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string note;  // where the expected value comes from
};

struct ScenarioReport {
    std::string name;
    ScenarioParams params;
    std::vector<std::string> losses;
    std::vector<ScenarioCheck> checks;
    bool pass = false;
};

// Built-in named constructions:
//   three_point      params eps (default 1), a (default 1.5); needs eps < a < 2*eps
//   coincident_pair  params eps (default 0.5)
//   realizable_pair  params eps (default 1), gap (default 10); needs gap > 2*eps
std::vector<std::string> scenario_names();
ScenarioParams scenario_defaults(const std::string& name);
ProblemInstance build_scenario(const std::string& name, const ScenarioParams& params = {});

// Full pipeline for a scenario: exact optimum with its duality triangle,
// optimal attack, and the scenario's own demonstrations (pathological
// sequence, training runs, indecision-penalty comparison). Every stored
// expected value is re-derived and diffed at its tolerance.
ScenarioReport run_scenario(const std::string& name, const ScenarioParams& params = {},
                            const std::vector<std::string>& losses = {});

}  // namespace advcal
