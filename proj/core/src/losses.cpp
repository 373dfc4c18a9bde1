#include "advcal/losses.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace advcal {

namespace {

double clamp(double v, double lo, double hi) { return std::min(std::max(v, lo), hi); }

// 1/(1+e^t), evaluated without overflow on either tail.
double falling_sigmoid(double t) {
    if (t >= 0.0) {
        double e = std::exp(-t);
        return e / (1.0 + e);
    }
    return 1.0 / (1.0 + std::exp(t));
}

// log(1 + e^-t) without overflow for very negative t.
double logistic_value(double t) {
    if (t > 0.0) return std::log1p(std::exp(-t));
    return -t + std::log1p(std::exp(t));
}

double ramp_value(double t) { return 0.5 * clamp(1.0 - t, 0.0, 2.0); }

}  // namespace

MarginLoss make_loss(LossKind kind, double tau) {
    MarginLoss loss;
    loss.kind = kind;
    loss.name = loss_kind_name(kind);
    if (tau < 0.0) throw std::invalid_argument("make_loss: tau must be >= 0");

    auto fin = [](double v) { return ExtendedReal::finite(v); };
    auto inf = [] { return ExtendedReal::pos_inf(); };

    switch (kind) {
        case LossKind::hinge:
            loss.flags = {true, true, true, false};
            loss.limits = {inf(), fin(0.0)};
            break;
        case LossKind::logistic:
            loss.flags = {true, true, true, false};
            loss.limits = {inf(), fin(0.0)};
            break;
        case LossKind::square:
            loss.flags = {true, false, true, false};
            loss.limits = {inf(), inf()};
            break;
        case LossKind::exponential:
            loss.flags = {true, true, true, false};
            loss.limits = {inf(), fin(0.0)};
            break;
        case LossKind::sigmoid:
            loss.lambda = 0.5;
            loss.flags = {false, true, true, true};
            loss.limits = {fin(1.0), fin(0.0)};
            break;
        case LossKind::ramp:
            loss.lambda = 0.5;
            loss.flags = {false, true, true, true};
            loss.limits = {fin(1.0), fin(0.0)};
            break;
        case LossKind::shifted_sigmoid:
            loss.tau = tau;
            loss.lambda = 0.5;
            loss.flags = {false, true, true, tau == 0.0};
            loss.limits = {fin(1.0), fin(0.0)};
            break;
        case LossKind::shifted_ramp:
            loss.tau = tau;
            loss.lambda = 0.5;
            // The ramp of psi is flat outside (tau-1, tau+1): strict decrease
            // at 0 requires the shift to keep 0 inside that window.
            loss.flags = {false, true, std::abs(tau) < 1.0, tau == 0.0};
            loss.limits = {fin(1.0), fin(0.0)};
            break;
        default:
            throw std::invalid_argument("make_loss: unknown loss kind");
    }
    if (loss.tau > 0.0) {
        std::ostringstream tag;
        tag << "(tau=" << loss.tau << ")";
        loss.name += tag.str();
    }
    return loss;
}

MarginLoss make_loss(LossKind kind) {
    switch (kind) {
        case LossKind::shifted_sigmoid: return make_loss(kind, 1.0);
        case LossKind::shifted_ramp: return make_loss(kind, 0.5);
        default: return make_loss(kind, 0.0);
    }
}

std::string loss_kind_name(LossKind kind) {
    switch (kind) {
        case LossKind::hinge: return "hinge";
        case LossKind::logistic: return "logistic";
        case LossKind::square: return "square";
        case LossKind::exponential: return "exponential";
        case LossKind::sigmoid: return "sigmoid";
        case LossKind::ramp: return "ramp";
        case LossKind::shifted_sigmoid: return "shifted_sigmoid";
        case LossKind::shifted_ramp: return "shifted_ramp";
    }
    throw std::invalid_argument("loss_kind_name: unknown loss kind");
}

LossKind loss_kind_from_name(const std::string& name) {
    static const std::map<std::string, LossKind> kinds = {
        {"hinge", LossKind::hinge},
        {"logistic", LossKind::logistic},
        {"square", LossKind::square},
        {"exponential", LossKind::exponential},
        {"sigmoid", LossKind::sigmoid},
        {"ramp", LossKind::ramp},
        {"shifted_sigmoid", LossKind::shifted_sigmoid},
        {"shifted_ramp", LossKind::shifted_ramp},
    };
    auto it = kinds.find(name);
    if (it == kinds.end()) throw std::invalid_argument("unknown loss name: " + name);
    return it->second;
}

MarginLoss make_loss_by_name(const std::string& name, double tau) {
    return make_loss(loss_kind_from_name(name), tau);
}

MarginLoss make_loss_by_name(const std::string& name) {
    return make_loss(loss_kind_from_name(name));
}

double eval_loss(const MarginLoss& loss, double t) {
    if (!std::isfinite(t)) throw std::invalid_argument("eval_loss: margin must be finite");
    switch (loss.kind) {
        case LossKind::hinge: return std::max(1.0 - t, 0.0);
        case LossKind::logistic: return logistic_value(t);
        case LossKind::square: return (1.0 - t) * (1.0 - t);
        case LossKind::exponential: return std::exp(-t);
        case LossKind::sigmoid: return falling_sigmoid(t);
        case LossKind::ramp: return ramp_value(t);
        case LossKind::shifted_sigmoid: return falling_sigmoid(t - loss.tau);
        case LossKind::shifted_ramp: return ramp_value(t - loss.tau);
    }
    throw std::invalid_argument("eval_loss: unknown loss kind");
}

double loss_derivative(const MarginLoss& loss, double t) {
    switch (loss.kind) {
        case LossKind::hinge: return t <= 1.0 ? -1.0 : 0.0;
        case LossKind::logistic: return -falling_sigmoid(t);
        case LossKind::square: return -2.0 * (1.0 - t);
        case LossKind::exponential: return -std::exp(-t);
        case LossKind::sigmoid: {
            double s = falling_sigmoid(t);
            return -s * (1.0 - s);
        }
        case LossKind::ramp: return std::abs(t) <= 1.0 ? -0.5 : 0.0;
        case LossKind::shifted_sigmoid: {
            double s = falling_sigmoid(t - loss.tau);
            return -s * (1.0 - s);
        }
        case LossKind::shifted_ramp: return std::abs(t - loss.tau) <= 1.0 ? -0.5 : 0.0;
    }
    throw std::invalid_argument("loss_derivative: unknown loss kind");
}

ExtendedReal eval_loss_extended(const MarginLoss& loss, ExtendedReal t) {
    if (t.is_neg_inf()) return loss.limits.at_neg_inf;
    if (t.is_pos_inf()) return loss.limits.at_pos_inf;
    return ExtendedReal::finite(eval_loss(loss, t.value()));
}

double eval_reference(const ReferenceLoss& loss, int y, double v) {
    if (y != 1 && y != -1) throw std::invalid_argument("eval_reference: label must be +-1");
    if (loss.kind == ReferenceKind::zero_one) {
        return y * sign_of(v) <= 0 ? 1.0 : 0.0;
    }
    return y * v <= 0.0 ? 1.0 : 0.0;
}

double pointwise_loss(const AnyLoss& loss, int y, double v) {
    if (const auto* margin = std::get_if<MarginLoss>(&loss)) {
        return eval_loss(*margin, static_cast<double>(y) * v);
    }
    return eval_reference(std::get<ReferenceLoss>(loss), y, v);
}

std::string loss_display_name(const AnyLoss& loss) {
    if (const auto* margin = std::get_if<MarginLoss>(&loss)) return margin->name;
    return std::get<ReferenceLoss>(loss).name();
}

std::vector<MarginLoss> loss_zoo() {
    return {
        make_loss(LossKind::hinge),          make_loss(LossKind::logistic),
        make_loss(LossKind::square),         make_loss(LossKind::exponential),
        make_loss(LossKind::sigmoid),        make_loss(LossKind::ramp),
        make_loss(LossKind::shifted_sigmoid), make_loss(LossKind::shifted_ramp),
    };
}

}  // namespace advcal
