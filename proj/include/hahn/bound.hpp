#pragma once

#include <string>

#include "hahn/rational.hpp"

namespace hahn {

/// Weight threshold below which a truncated series is certified exact.
/// Infinite bound means the series is exact as stored.
class WeightBound {
public:
    WeightBound() : finite_(false) {}
    WeightBound(Rational v) : finite_(true), value_(std::move(v)) {}

    static WeightBound infinite() { return WeightBound(); }

    bool is_finite() const { return finite_; }
    const Rational& value() const { return value_; } // only valid when finite

    bool covers(const Rational& w) const { return !finite_ || w < value_; }

    friend WeightBound min(const WeightBound& a, const WeightBound& b) {
        if (!a.finite_) return b;
        if (!b.finite_) return a;
        return WeightBound(a.value_ < b.value_ ? a.value_ : b.value_);
    }

    WeightBound shifted(const Rational& d) const {
        return finite_ ? WeightBound(value_ + d) : *this;
    }

    friend bool operator==(const WeightBound& a, const WeightBound& b) {
        return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
    }

    std::string str() const { return finite_ ? to_string(value_) : "inf"; }

private:
    bool finite_;
    Rational value_;
};

} // namespace hahn
