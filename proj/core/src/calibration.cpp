#include "advcal/calibration.hpp"

#include <cmath>

namespace advcal {

namespace {

constexpr double kDerivativeStep = 1e-5;
constexpr double kDerivativeThreshold = -1e-7;
constexpr double kLimitHorizon = 50.0;
constexpr double kLimitTol = 1e-6;
constexpr double kOddIdentityTol = 1e-9;

// Every near-minimizer of the conditional risk must predict the majority
// label. sign(0) = +1, so a near-minimizer at 0 is only acceptable for
// eta > 1/2; the infinities carry their own signs.
bool argmin_signs_consistent(const ArgminSummary& argmin, double eta) {
    if (eta > 0.5) {
        if (argmin.neg_inf_in_argmin) return false;
        if (argmin.finite_near_count > 0 && argmin.lowest_finite < 0.0) return false;
    } else {
        if (argmin.pos_inf_in_argmin) return false;
        if (argmin.finite_near_count > 0 && argmin.highest_finite >= 0.0) return false;
        if (argmin.zero_in_argmin) return false;
    }
    return true;
}

}  // namespace

StandardCalibrationEvidence check_standard_calibration(const MarginLoss& loss, const SearchConfig& search) {
    StandardCalibrationEvidence evidence;
    if (loss.flags.is_convex) {
        evidence.method = "derivative_at_zero";
        double h = kDerivativeStep;
        evidence.derivative_at_zero = (eval_loss(loss, h) - eval_loss(loss, -h)) / (2.0 * h);
        evidence.calibrated = evidence.derivative_at_zero < kDerivativeThreshold;
        return evidence;
    }

    evidence.method = "argmin_sign_grid";
    evidence.calibrated = true;
    for (int i = 0; i <= 100; ++i) {
        if (i == 50) continue;
        double eta = static_cast<double>(i) / 100.0;
        auto result = optimal_conditional_risk(AnyLoss{loss}, eta, search);
        if (!argmin_signs_consistent(result.argmin, eta)) {
            evidence.calibrated = false;
            evidence.worst_eta = eta;
            break;
        }
    }
    return evidence;
}

CalibrationReport check_adversarial_calibration(const MarginLoss& loss, const SearchConfig& search) {
    CalibrationReport report;
    report.loss_name = loss.name;

    auto standard = check_standard_calibration(loss, search);
    report.standard_calibrated = standard.calibrated;
    report.standard_method = standard.method;
    report.derivative_at_zero = standard.derivative_at_zero;

    auto symmetric = optimal_conditional_risk(AnyLoss{loss}, 0.5, search);
    report.symmetrized_at_zero = symmetric.argmin.value_at_zero;
    report.symmetrized_min = symmetric.value;
    report.symmetrized_zero_gap = symmetric.argmin.zero_gap;
    report.zero_in_argmin_symmetrized = symmetric.argmin.zero_in_argmin;

    report.zero_one_like = check_zero_one_like(loss);
    report.measured_at_minus_horizon = eval_loss(loss, -kLimitHorizon);
    report.measured_at_plus_horizon = eval_loss(loss, kLimitHorizon);

    if (loss.flags.is_convex) {
        report.adversarial_verdict = AdversarialVerdict::no;
        report.verdict_rule = "convex_symmetrized_minimum_at_zero";
        report.failed_clause = "zero_in_symmetrized_argmin";
    } else if (loss.flags.is_odd_plus_constant) {
        report.adversarial_verdict = AdversarialVerdict::no;
        report.verdict_rule = "odd_plus_constant_symmetrized_constant";
        report.failed_clause = "zero_in_symmetrized_argmin";
    } else if (!report.standard_calibrated) {
        report.adversarial_verdict = AdversarialVerdict::no;
        report.verdict_rule = "not_standard_calibrated";
        report.failed_clause = "standard_calibration";
    } else if (!loss.flags.is_decreasing || !loss.flags.is_strictly_decreasing_near_zero) {
        // No sufficient rule applies without global decrease; refuse to guess.
        report.adversarial_verdict = AdversarialVerdict::inconclusive;
        report.verdict_rule = "monotonicity_flags_missing";
        report.failed_clause = "decreasing_flags";
    } else if (report.zero_in_argmin_symmetrized) {
        report.adversarial_verdict = AdversarialVerdict::no;
        report.verdict_rule = "zero_in_symmetrized_argmin";
        report.failed_clause = "zero_in_symmetrized_argmin";
    } else {
        report.adversarial_verdict = AdversarialVerdict::yes;
        report.verdict_rule = "decreasing_and_zero_excluded_from_symmetrized_argmin";
    }
    report.adversarially_calibrated = report.adversarial_verdict == AdversarialVerdict::yes;
    return report;
}

bool check_zero_one_like(const MarginLoss& loss) {
    bool limits_match =
        loss.limits.at_neg_inf.is_finite() && loss.limits.at_neg_inf.value() == 1.0 &&
        loss.limits.at_pos_inf.is_finite() && loss.limits.at_pos_inf.value() == 0.0;
    if (!limits_match) return false;
    if (std::abs(eval_loss(loss, -kLimitHorizon) - 1.0) >= kLimitTol) return false;
    if (std::abs(eval_loss(loss, kLimitHorizon)) >= kLimitTol) return false;

    for (int i = 0; i <= 200; ++i) {
        double u = -10.0 + 0.1 * static_cast<double>(i);
        double identity = eval_loss(loss, loss.tau + u) + eval_loss(loss, loss.tau - u);
        if (std::abs(identity - 2.0 * loss.lambda) > kOddIdentityTol) return false;
    }
    return true;
}

CalibrationReport audit(const MarginLoss& loss, const SearchConfig& search) {
    return check_adversarial_calibration(loss, search);
}

std::string verdict_name(AdversarialVerdict v) {
    switch (v) {
        case AdversarialVerdict::yes: return "yes";
        case AdversarialVerdict::no: return "no";
        case AdversarialVerdict::inconclusive: return "inconclusive";
    }
    return "no";
}

}  // namespace advcal
