#pragma once

#include <string>

#include "advcal/conditional_risk.hpp"
#include "advcal/losses.hpp"

namespace advcal {

enum class AdversarialVerdict { yes, no, inconclusive };

// Verdicts plus the numerical evidence they were read off from.
struct CalibrationReport {
    std::string loss_name;

    bool standard_calibrated = false;
    std::string standard_method;       // "derivative_at_zero" or "argmin_sign_grid"
    double derivative_at_zero = 0.0;   // populated for the derivative method

    bool zero_in_argmin_symmetrized = false;
    double symmetrized_at_zero = 0.0;
    double symmetrized_min = 0.0;
    double symmetrized_zero_gap = 0.0;

    AdversarialVerdict adversarial_verdict = AdversarialVerdict::no;
    bool adversarially_calibrated = false;

    bool zero_one_like = false;
    double measured_at_minus_horizon = 0.0;  // phi(-50)
    double measured_at_plus_horizon = 0.0;   // phi(+50)

    std::string verdict_rule;   // which exclusion/inclusion rule decided the verdict
    std::string failed_clause;  // first failed requirement when not calibrated
};

struct StandardCalibrationEvidence {
    bool calibrated = false;
    std::string method;
    double derivative_at_zero = 0.0;
    double worst_eta = -1.0;  // eta at which the argmin sign test failed, if any
};

// Standard (non-adversarial) calibration. Convex losses use the sign of the
// derivative at 0; non-convex losses use the argmin-sign test over an eta
// grid of 101 points (eta = 1/2 excluded: both signs are optimal there).
StandardCalibrationEvidence check_standard_calibration(const MarginLoss& loss,
                                                       const SearchConfig& search = {});

// Adversarial calibration: standard calibration plus the monotonicity flags
// plus 0 excluded from the argmin of the symmetrized loss over the extended
// reals. Returns the verdict with a full evidence report.
CalibrationReport check_adversarial_calibration(const MarginLoss& loss,
                                                const SearchConfig& search = {});

// Limits (1, 0) together with the shifted-odd identity
// phi(tau+u) + phi(tau-u) = 2*lambda (tau = 0 allowed).
bool check_zero_one_like(const MarginLoss& loss);

// All three checks combined into one report.
CalibrationReport audit(const MarginLoss& loss, const SearchConfig& search = {});

std::string verdict_name(AdversarialVerdict v);

}  // namespace advcal
