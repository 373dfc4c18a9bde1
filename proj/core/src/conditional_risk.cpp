#include "advcal/conditional_risk.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace advcal {

namespace {

void check_eta(double eta) {
    if (!(eta >= 0.0 && eta <= 1.0)) {
        throw std::domain_error("conditional_risk: eta must lie in [0, 1]");
    }
}

ExtendedReal reference_conditional_extended(const ReferenceLoss& loss, double eta, ExtendedReal alpha) {
    if (alpha.is_neg_inf()) return ExtendedReal::finite(eta);
    if (alpha.is_pos_inf()) return ExtendedReal::finite(1.0 - eta);
    double a = alpha.value();
    double pos = eval_reference(loss, +1, a);
    double neg = eval_reference(loss, -1, a);
    return ExtendedReal::finite(eta * pos + (1.0 - eta) * neg);
}

// Golden-section minimization on [a, b]; assumes f is cheap and the bracket
// tiny, so no iteration cap beyond the width tolerance is needed.
double golden_section_min(const std::function<double(double)>& f, double a, double b, double tol) {
    static const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    int guard = 200;
    while (b - a > tol && guard-- > 0) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    return std::min(f1, f2);
}

}  // namespace

ExtendedReal symmetrized(const MarginLoss& loss, ExtendedReal alpha) {
    if (alpha.is_finite()) {
        double a = alpha.value();
        return ExtendedReal::finite(0.5 * eval_loss(loss, a) + 0.5 * eval_loss(loss, -a));
    }
    // At either infinity both tails appear with weight 1/2.
    return extended_add(extended_scale(0.5, loss.limits.at_pos_inf),
                        extended_scale(0.5, loss.limits.at_neg_inf));
}

double symmetrized(const MarginLoss& loss, double alpha) {
    return symmetrized(loss, ExtendedReal::finite(alpha)).value();
}

double conditional_risk(const AnyLoss& loss, double eta, double alpha) {
    check_eta(eta);
    if (const auto* margin = std::get_if<MarginLoss>(&loss)) {
        return eta * eval_loss(*margin, alpha) + (1.0 - eta) * eval_loss(*margin, -alpha);
    }
    const auto& ref = std::get<ReferenceLoss>(loss);
    return reference_conditional_extended(ref, eta, ExtendedReal::finite(alpha)).value();
}

ExtendedReal conditional_risk_extended(const AnyLoss& loss, double eta, ExtendedReal alpha) {
    check_eta(eta);
    if (const auto* margin = std::get_if<MarginLoss>(&loss)) {
        if (alpha.is_finite()) return ExtendedReal::finite(conditional_risk(loss, eta, alpha.value()));
        ExtendedReal at_alpha = alpha.is_pos_inf() ? margin->limits.at_pos_inf : margin->limits.at_neg_inf;
        ExtendedReal at_neg = alpha.is_pos_inf() ? margin->limits.at_neg_inf : margin->limits.at_pos_inf;
        return extended_add(extended_scale(eta, at_alpha), extended_scale(1.0 - eta, at_neg));
    }
    return reference_conditional_extended(std::get<ReferenceLoss>(loss), eta, alpha);
}

OptimalRiskResult optimal_conditional_risk(const AnyLoss& loss, double eta, const SearchConfig& search) {
    check_eta(eta);
    auto risk_at = [&](double a) { return conditional_risk(loss, eta, a); };

    // Symmetric grid: alpha_i = (i - half) * step mirrors exactly in floating
    // point, which keeps the eta <-> 1-eta symmetry tight.
    const long half = static_cast<long>(std::llround(search.bound / search.grid_step));
    const long points = 2 * half + 1;

    long best_index = 0;
    double best_value = std::numeric_limits<double>::infinity();
    std::vector<double> grid_values(static_cast<size_t>(points));
    for (long i = 0; i < points; ++i) {
        double a = static_cast<double>(i - half) * search.grid_step;
        double v = risk_at(a);
        if (!std::isfinite(v)) {
            throw std::runtime_error("optimal_conditional_risk: non-finite loss value at alpha=" +
                                     std::to_string(a));
        }
        grid_values[static_cast<size_t>(i)] = v;
        if (v < best_value) {
            best_value = v;
            best_index = i;
        }
    }

    // Refine inside the bracket around the best grid point.
    double lo = static_cast<double>(std::max(best_index - 1, 0L) - half) * search.grid_step;
    double hi = static_cast<double>(std::min(best_index + 1, points - 1) - half) * search.grid_step;
    double refined = golden_section_min(risk_at, lo, hi, search.refine_tol);

    ExtendedReal at_neg = conditional_risk_extended(loss, eta, ExtendedReal::neg_inf());
    ExtendedReal at_pos = conditional_risk_extended(loss, eta, ExtendedReal::pos_inf());

    double min_value = std::min(best_value, refined);
    if (at_neg.is_finite()) min_value = std::min(min_value, at_neg.value());
    if (at_pos.is_finite()) min_value = std::min(min_value, at_pos.value());

    ArgminSummary argmin;
    argmin.min_value = min_value;
    argmin.value_at_zero = risk_at(0.0);
    argmin.zero_gap = argmin.value_at_zero - min_value;
    argmin.zero_in_argmin = argmin.value_at_zero <= min_value + search.argmin_tol;
    argmin.neg_inf_in_argmin = at_neg.is_finite() && at_neg.value() <= min_value + search.argmin_tol;
    argmin.pos_inf_in_argmin = at_pos.is_finite() && at_pos.value() <= min_value + search.argmin_tol;
    for (long i = 0; i < points; ++i) {
        if (grid_values[static_cast<size_t>(i)] <= min_value + search.argmin_tol) {
            double a = static_cast<double>(i - half) * search.grid_step;
            if (argmin.finite_near_count == 0) argmin.lowest_finite = a;
            argmin.highest_finite = a;
            ++argmin.finite_near_count;
        }
    }

    return {min_value, argmin};
}

}  // namespace advcal
