#pragma once

#include <cmath>
#include <stdexcept>

namespace advcal {

// A value in the extended real line [-inf, +inf]. Losses and conditional
// risks are minimized over this set, so infinities are first-class values
// rather than IEEE specials leaking out of formulas.
class ExtendedReal {
public:
    enum class Tag { neg_inf, finite, pos_inf };

    ExtendedReal() : tag_(Tag::finite), value_(0.0) {}

    static ExtendedReal finite(double v) {
        if (!std::isfinite(v)) throw std::invalid_argument("ExtendedReal::finite: value is not finite");
        ExtendedReal r;
        r.tag_ = Tag::finite;
        r.value_ = v;
        return r;
    }
    static ExtendedReal neg_inf() {
        ExtendedReal r;
        r.tag_ = Tag::neg_inf;
        return r;
    }
    static ExtendedReal pos_inf() {
        ExtendedReal r;
        r.tag_ = Tag::pos_inf;
        return r;
    }

    Tag tag() const { return tag_; }
    bool is_finite() const { return tag_ == Tag::finite; }
    bool is_neg_inf() const { return tag_ == Tag::neg_inf; }
    bool is_pos_inf() const { return tag_ == Tag::pos_inf; }

    // Finite payload; throws on infinities.
    double value() const {
        if (tag_ != Tag::finite) throw std::logic_error("ExtendedReal::value: not finite");
        return value_;
    }

    // Collapse to an IEEE double (+-inf for the infinite tags).
    double as_double() const {
        switch (tag_) {
            case Tag::neg_inf: return -std::numeric_limits<double>::infinity();
            case Tag::pos_inf: return std::numeric_limits<double>::infinity();
            default: return value_;
        }
    }

    friend bool operator==(const ExtendedReal& a, const ExtendedReal& b) {
        if (a.tag_ != b.tag_) return false;
        return a.tag_ != Tag::finite || a.value_ == b.value_;
    }
    friend bool operator<(const ExtendedReal& a, const ExtendedReal& b) {
        return a.as_double() < b.as_double();
    }
    friend bool operator<=(const ExtendedReal& a, const ExtendedReal& b) {
        return a == b || a < b;
    }

private:
    Tag tag_;
    double value_ = 0.0;
};

// Sum of two nonnegative extended reals (losses never mix -inf with +inf,
// but the general rule is kept total by treating that case as an error).
inline ExtendedReal extended_add(ExtendedReal a, ExtendedReal b) {
    if (a.is_finite() && b.is_finite()) return ExtendedReal::finite(a.value() + b.value());
    bool pos = a.is_pos_inf() || b.is_pos_inf();
    bool neg = a.is_neg_inf() || b.is_neg_inf();
    if (pos && neg) throw std::domain_error("extended_add: inf + (-inf) is undefined");
    return pos ? ExtendedReal::pos_inf() : ExtendedReal::neg_inf();
}

// c * x with the measure-theoretic convention 0 * inf = 0, so that a
// conditional risk with weight zero ignores an infinite limit.
inline ExtendedReal extended_scale(double c, ExtendedReal x) {
    if (x.is_finite()) return ExtendedReal::finite(c * x.value());
    if (c == 0.0) return ExtendedReal::finite(0.0);
    bool flip = c < 0.0;
    if (x.is_pos_inf()) return flip ? ExtendedReal::neg_inf() : ExtendedReal::pos_inf();
    return flip ? ExtendedReal::pos_inf() : ExtendedReal::neg_inf();
}

}  // namespace advcal
