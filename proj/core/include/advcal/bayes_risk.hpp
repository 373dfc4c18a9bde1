#pragma once

#include <string>
#include <vector>

#include "advcal/conflict_graph.hpp"
#include "advcal/instance.hpp"

namespace advcal {

// One mass transport: `mass` of atom `source` (label preserved) lands on
// `destination`. Zero-length moves keep unmatched mass in place.
struct MassMove {
    size_t source;
    std::vector<double> destination;
    int label;
    double mass;
};

// A coupling witness: the attacked distribution is the set of move
// destinations with their masses.
struct AttackPlan {
    std::vector<MassMove> moves;
    std::vector<Atom> attacked_atoms() const;
};

enum class RiskMethod { mincut, brute_force, dual_attack };

struct RiskReport {
    double value = 0.0;
    RiskMethod method = RiskMethod::mincut;
    std::vector<size_t> cover;  // witness vertex cover (mincut / brute_force)
    double runtime_seconds = 0.0;
};

struct DualityReport {
    double mincut_value = 0.0;
    double brute_force_value = 0.0;
    double attack_value = 0.0;
    bool consistent = false;
};

// Minimum total mass of a vertex cover of the conflict graph, computed as a
// min cut of {source -> positives (mass), conflict edges (uncuttable),
// negatives -> sink (mass)}. Ties among optimal covers are broken by the
// canonical cut: positives on the sink side, negatives on the source side.
RiskReport adversarial_bayes_risk(const ProblemInstance& instance);

// Exhaustive oracle over all 2^n candidate misclassified sets. n <= 20.
RiskReport brute_force_bayes_risk(const ProblemInstance& instance);

// All covers attaining the minimum mass (within 1e-12), each as a sorted
// index list, ordered by the subset enumeration. n <= 20.
std::vector<std::vector<size_t>> minimum_mass_covers(const ProblemInstance& instance);

// Matched-pair attack read off the max-flow solution: each unit of flow on a
// conflict edge sends both endpoints to the edge midpoint; unmatched mass
// stays in place.
AttackPlan optimal_attack(const ProblemInstance& instance);

// Bayes 0/1 risk of a finite distribution: group atoms by exact position and
// sum total * min(eta, 1 - eta) per location.
double standard_bayes_risk(const std::vector<Atom>& atoms);

// Checks membership of the plan in the feasible attack set: moves of length
// <= epsilon (+1e-9), labels preserved, per-atom and total mass conserved.
void validate_attack_plan(const AttackPlan& plan, const ProblemInstance& instance);

// Asserts mincut == brute force == risk of the optimal attack within 1e-9.
DualityReport verify_strong_duality(const ProblemInstance& instance);

std::string risk_method_name(RiskMethod m);

}  // namespace advcal
