#pragma once

#include <string>
#include <variant>
#include <vector>

#include "advcal/extended_real.hpp"

namespace advcal {

// The margin-loss zoo. Every loss is phi(y * f(x)) for one of these shapes;
// the shifted kinds are the base shape evaluated at (t - tau).
enum class LossKind {
    hinge,
    logistic,
    square,
    exponential,
    sigmoid,
    ramp,
    shifted_sigmoid,
    shifted_ramp,
};

struct LossFlags {
    bool is_convex = false;
    bool is_decreasing = false;
    bool is_strictly_decreasing_near_zero = false;
    bool is_odd_plus_constant = false;  // phi = lambda + psi with psi odd and unshifted
};

struct LossLimits {
    ExtendedReal at_neg_inf;
    ExtendedReal at_pos_inf;
};

// Analytic description of a margin loss phi. For shifted-odd kinds,
// phi(t) = lambda + psi(t - tau) with psi odd, so phi(tau+u) + phi(tau-u) = 2*lambda.
struct MarginLoss {
    std::string name;
    LossKind kind = LossKind::hinge;
    double tau = 0.0;     // shift, >= 0; 0 for unshifted kinds
    double lambda = 0.0;  // offset of the odd part; 0 when not odd-plus-constant shaped
    LossFlags flags;
    LossLimits limits;
};

// Reference classification losses. sign(0) = +1 throughout.
enum class ReferenceKind {
    zero_one,      // 1{ y * sign(v) <= 0 }
    zero_one_leq,  // 1{ y * v <= 0 }, penalizes indecision at v = 0
};

struct ReferenceLoss {
    ReferenceKind kind = ReferenceKind::zero_one;
    std::string name() const { return kind == ReferenceKind::zero_one ? "zero_one" : "zero_one_leq"; }
};

// Either family where an operation accepts both.
using AnyLoss = std::variant<MarginLoss, ReferenceLoss>;

inline int sign_of(double v) { return v >= 0.0 ? +1 : -1; }

// Factory for the zoo. tau is ignored for unshifted kinds; the shifted kinds
// default to the canonical instances (shifted_sigmoid tau=1, shifted_ramp tau=0.5).
MarginLoss make_loss(LossKind kind, double tau);
MarginLoss make_loss(LossKind kind);
MarginLoss make_loss_by_name(const std::string& name, double tau);
MarginLoss make_loss_by_name(const std::string& name);

std::string loss_kind_name(LossKind kind);
LossKind loss_kind_from_name(const std::string& name);

// phi(t) at a finite margin. Finite and >= 0 for every finite t.
double eval_loss(const MarginLoss& loss, double t);

// d/dt phi(t); at kinks a fixed subgradient is returned (hinge at t=1: -1,
// ramp at |t - tau| = 1: -1/2).
double loss_derivative(const MarginLoss& loss, double t);

// phi extended to +-infinity via the declared limits.
ExtendedReal eval_loss_extended(const MarginLoss& loss, ExtendedReal t);

// Reference loss of label y in {-1,+1} against score v.
double eval_reference(const ReferenceLoss& loss, int y, double v);

// Pointwise loss of (y, v) for either family; margin losses use phi(y*v).
double pointwise_loss(const AnyLoss& loss, int y, double v);

std::string loss_display_name(const AnyLoss& loss);

// All eight zoo losses at their canonical parameters.
std::vector<MarginLoss> loss_zoo();

}  // namespace advcal
