#include "advcal/bayes_risk.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <stdexcept>

#include "advcal/max_flow.hpp"

namespace advcal {

namespace {

constexpr size_t kBruteForceLimit = 20;
constexpr double kDualityTol = 1e-9;

double cover_mass(const ProblemInstance& instance, const std::vector<size_t>& cover) {
    double total = 0.0;
    for (size_t i : cover) total += instance.atoms[i].mass;
    return total;
}

struct FlowSolution {
    double value = 0.0;
    std::vector<size_t> cover;
    std::vector<double> edge_flow;  // aligned with graph.edges
};

FlowSolution solve_mincut(const ProblemInstance& instance, const ConflictGraph& graph) {
    const size_t n = instance.atoms.size();
    const size_t source = n;
    const size_t sink = n + 1;
    FlowNetwork network(n + 2);

    // A conflict edge must never be cut, so give it more capacity than the
    // whole distribution.
    const double uncuttable = 1.0 + 1.0;

    std::vector<size_t> atom_arc(n, static_cast<size_t>(-1));
    for (size_t i : graph.positive_atoms) atom_arc[i] = network.add_edge(source, i, instance.atoms[i].mass);
    for (size_t i : graph.negative_atoms) atom_arc[i] = network.add_edge(i, sink, instance.atoms[i].mass);
    std::vector<size_t> edge_arc;
    edge_arc.reserve(graph.edges.size());
    for (const auto& e : graph.edges) edge_arc.push_back(network.add_edge(e.positive, e.negative, uncuttable));

    network.max_flow(source, sink);
    const auto& reachable = network.source_side();

    FlowSolution solution;
    for (size_t i : graph.positive_atoms) {
        if (!reachable[i]) solution.cover.push_back(i);
    }
    for (size_t i : graph.negative_atoms) {
        if (reachable[i]) solution.cover.push_back(i);
    }
    std::sort(solution.cover.begin(), solution.cover.end());
    solution.value = cover_mass(instance, solution.cover);
    for (size_t k = 0; k < graph.edges.size(); ++k) solution.edge_flow.push_back(network.flow_on(edge_arc[k]));
    return solution;
}

}  // namespace

std::vector<Atom> AttackPlan::attacked_atoms() const {
    std::vector<Atom> atoms;
    atoms.reserve(moves.size());
    for (const auto& move : moves) atoms.push_back({move.destination, move.label, move.mass});
    return atoms;
}

RiskReport adversarial_bayes_risk(const ProblemInstance& instance) {
    auto start = std::chrono::steady_clock::now();
    instance.validate();
    auto graph = build_conflict_graph(instance);
    auto solution = solve_mincut(instance, graph);
    RiskReport report;
    report.value = solution.value;
    report.method = RiskMethod::mincut;
    report.cover = solution.cover;
    report.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

RiskReport brute_force_bayes_risk(const ProblemInstance& instance) {
    auto start = std::chrono::steady_clock::now();
    instance.validate();
    const size_t n = instance.atoms.size();
    if (n > kBruteForceLimit) {
        throw std::length_error("brute_force_bayes_risk: more than 20 atoms");
    }
    auto graph = build_conflict_graph(instance);

    double best = std::numeric_limits<double>::infinity();
    unsigned long best_mask = 0;
    std::vector<char> in_cover(n, 0);
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        double mass = 0.0;
        for (size_t i = 0; i < n; ++i) {
            in_cover[i] = (mask >> i) & 1ul;
            if (in_cover[i]) mass += instance.atoms[i].mass;
        }
        if (mass < best && graph.covers(in_cover)) {
            best = mass;
            best_mask = mask;
        }
    }

    RiskReport report;
    report.value = best;
    report.method = RiskMethod::brute_force;
    for (size_t i = 0; i < n; ++i) {
        if ((best_mask >> i) & 1ul) report.cover.push_back(i);
    }
    report.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::vector<std::vector<size_t>> minimum_mass_covers(const ProblemInstance& instance) {
    instance.validate();
    const size_t n = instance.atoms.size();
    if (n > kBruteForceLimit) {
        throw std::length_error("minimum_mass_covers: more than 20 atoms");
    }
    auto graph = build_conflict_graph(instance);
    double best = brute_force_bayes_risk(instance).value;

    std::vector<std::vector<size_t>> covers;
    std::vector<char> in_cover(n, 0);
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        double mass = 0.0;
        for (size_t i = 0; i < n; ++i) {
            in_cover[i] = (mask >> i) & 1ul;
            if (in_cover[i]) mass += instance.atoms[i].mass;
        }
        if (std::abs(mass - best) <= 1e-12 && graph.covers(in_cover)) {
            std::vector<size_t> cover;
            for (size_t i = 0; i < n; ++i) {
                if (in_cover[i]) cover.push_back(i);
            }
            covers.push_back(std::move(cover));
        }
    }
    return covers;
}

AttackPlan optimal_attack(const ProblemInstance& instance) {
    instance.validate();
    auto graph = build_conflict_graph(instance);
    auto solution = solve_mincut(instance, graph);

    AttackPlan plan;
    std::vector<double> moved(instance.atoms.size(), 0.0);
    for (size_t k = 0; k < graph.edges.size(); ++k) {
        double w = solution.edge_flow[k];
        if (w <= 1e-12) continue;
        const auto& e = graph.edges[k];
        plan.moves.push_back({e.positive, e.midpoint, +1, w});
        plan.moves.push_back({e.negative, e.midpoint, -1, w});
        moved[e.positive] += w;
        moved[e.negative] += w;
    }
    for (size_t i = 0; i < instance.atoms.size(); ++i) {
        double rest = instance.atoms[i].mass - moved[i];
        if (rest > 1e-12) {
            plan.moves.push_back({i, instance.atoms[i].x, instance.atoms[i].y, rest});
        }
    }
    return plan;
}

double standard_bayes_risk(const std::vector<Atom>& atoms) {
    std::map<std::vector<double>, std::pair<double, double>> by_position;  // position -> (pos, neg)
    for (const Atom& atom : atoms) {
        auto& masses = by_position[atom.x];
        (atom.y > 0 ? masses.first : masses.second) += atom.mass;
    }
    double risk = 0.0;
    for (const auto& [position, masses] : by_position) {
        (void)position;
        risk += std::min(masses.first, masses.second);
    }
    return risk;
}

void validate_attack_plan(const AttackPlan& plan, const ProblemInstance& instance) {
    std::vector<double> moved(instance.atoms.size(), 0.0);
    double total = 0.0;
    for (const auto& move : plan.moves) {
        if (move.source >= instance.atoms.size()) {
            throw std::invalid_argument("attack plan: source index out of range");
        }
        const Atom& atom = instance.atoms[move.source];
        if (move.label != atom.y) {
            throw std::invalid_argument("attack plan: move changes the label");
        }
        if (distance(instance.metric, move.destination, atom.x) > instance.epsilon + 1e-9) {
            throw std::invalid_argument("attack plan: move longer than epsilon");
        }
        if (!(move.mass > 0.0)) throw std::invalid_argument("attack plan: move mass must be > 0");
        moved[move.source] += move.mass;
        total += move.mass;
    }
    for (size_t i = 0; i < instance.atoms.size(); ++i) {
        if (moved[i] > instance.atoms[i].mass + 1e-9) {
            throw std::invalid_argument("attack plan: moves exceed the atom mass");
        }
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw std::invalid_argument("attack plan: total mass not conserved");
    }
}

DualityReport verify_strong_duality(const ProblemInstance& instance) {
    DualityReport report;
    report.mincut_value = adversarial_bayes_risk(instance).value;
    report.brute_force_value = brute_force_bayes_risk(instance).value;
    auto plan = optimal_attack(instance);
    validate_attack_plan(plan, instance);
    report.attack_value = standard_bayes_risk(plan.attacked_atoms());
    report.consistent = std::abs(report.mincut_value - report.brute_force_value) <= kDualityTol &&
                        std::abs(report.mincut_value - report.attack_value) <= kDualityTol;
    return report;
}

std::string risk_method_name(RiskMethod m) {
    switch (m) {
        case RiskMethod::mincut: return "mincut";
        case RiskMethod::brute_force: return "brute_force";
        case RiskMethod::dual_attack: return "dual_attack";
    }
    return "mincut";
}

}  // namespace advcal
