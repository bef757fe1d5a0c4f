#pragma once

#include <functional>
#include <vector>

#include "hahn/series.hpp"

#include "json.hpp"

namespace hahn {

/// Floating-point germ evaluation of truncated series at large arguments.
/// Each generator gets the logarithm of its (positive) value at t, so
/// overflow-prone monomials are assembled in log space.
class GermAssignment {
public:
    using LogRule = std::function<double(double)>;

    /// Default rules from the display hints: e^(r*x) -> r*t, base^-1 -> 1/t,
    /// plain generators -> 1/t.
    static GermAssignment for_context(ContextPtr ctx);

    GermAssignment(ContextPtr ctx, std::vector<LogRule> log_rules);

    const ContextPtr& context() const { return ctx_; }
    void set_log_rule(std::size_t i, LogRule r) { rules_.at(i) = std::move(r); }

    const std::vector<double>& samples() const { return samples_; }
    void set_samples(std::vector<double> ts);

    double eval(const Series& f, double t) const;

    /// True iff the numeric sign of f at every sample point equals sign(f).
    bool sign_check(const Series& f) const;

private:
    ContextPtr ctx_;
    std::vector<LogRule> rules_;
    std::vector<double> samples_{10.0, 20.0, 40.0};
};

struct DecayRow {
    Rational depth;
    double t = 0;
    double residual = 0;
    double decay_ratio = 0; // vs previous row; 0 for the first row
    bool pass = true;
};

struct DecayReport {
    std::vector<DecayRow> rows;
    bool pass = true;
    nlohmann::ordered_json to_json() const;
};

/// Evaluate |P_c(y_N)| numerically at t for each depth N, treating the
/// truncation as an exact object, and check that the residuals shrink.
DecayReport residual_decay_check(const GermAssignment& germ, const Rational& c, const Rational& b,
                                 const std::vector<Rational>& depths, double t);

} // namespace hahn
