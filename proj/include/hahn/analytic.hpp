#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <vector>

#include "hahn/series.hpp"

namespace hahn {

/// Formal power series sum a_n Z^n with bounded series coefficients.
/// Coefficients are produced by a generator function and memoized on first
/// access; repeated access yields the identical series, also under
/// concurrent use.
class PowerSeries {
public:
    PowerSeries(ContextPtr ctx, std::function<Series(unsigned)> gen);
    static PowerSeries from_coeffs(const ContextPtr& ctx, std::vector<Series> coeffs);

    const ContextPtr& context() const { return state_->ctx; }
    const Series& coeff(unsigned n) const;

    /// Q'(Z) = sum (n+1) a_{n+1} Z^n.
    PowerSeries formal_derivative() const;

private:
    struct State {
        ContextPtr ctx;
        std::function<Series(unsigned)> gen;
        mutable std::vector<std::unique_ptr<const Series>> memo;
        mutable std::mutex mu;
    };
    std::shared_ptr<State> state_;
};

/// Sum a_n z^n below weight N for infinitesimal z with positive minimal
/// term weight.
Series eval_power_series(const PowerSeries& Q, const Series& z, const Rational& N);

PowerSeries binomial_series(const ContextPtr& ctx, const Rational& c);
PowerSeries exp_series(const ContextPtr& ctx);
PowerSeries log1p_series(const ContextPtr& ctx);

/// f^c for f with positive sign and rational scalar power: with
/// f = d*m*(1+u) the result is d^c * m^c * binomial_series(c)(u).
Series power(const Series& f, const Rational& c, const Rational& N);

/// Unique infinitesimal zero of Q when Q(0) is infinitesimal and Q'(0) is a
/// unit, found by iterating the contraction z -> z - Q(z). The seed only
/// affects the path, not the limit; residual_valuations, when given,
/// receives the minimal residual weight per iteration.
Series hensel_solve(const PowerSeries& Q, const Rational& N);
Series hensel_solve(const PowerSeries& Q, const Rational& N, const Series& seed,
                    std::vector<Rational>* residual_valuations = nullptr);

/// Unique infinitesimal z with (1+z)^c * (1+eps+z) = 1, for c != -1.
Series solve_unit_eq(const Rational& c, const Series& eps, const Rational& N);

} // namespace hahn
