#include "hahn/analytic.hpp"

namespace hahn {

PowerSeries::PowerSeries(ContextPtr ctx, std::function<Series(unsigned)> gen)
    : state_(std::make_shared<State>()) {
    state_->ctx = std::move(ctx);
    state_->gen = std::move(gen);
}

PowerSeries PowerSeries::from_coeffs(const ContextPtr& ctx, std::vector<Series> coeffs) {
    auto shared = std::make_shared<std::vector<Series>>(std::move(coeffs));
    return PowerSeries(ctx, [ctx, shared](unsigned n) {
        return n < shared->size() ? (*shared)[n] : Series(ctx);
    });
}

const Series& PowerSeries::coeff(unsigned n) const {
    std::lock_guard<std::mutex> lock(state_->mu);
    auto& memo = state_->memo;
    if (n >= memo.size()) memo.resize(n + 1);
    if (!memo[n]) {
        Series a = state_->gen(n);
        require_same_context(a.context(), state_->ctx);
        if (!a.is_bounded())
            throw PreconditionFailed("power series coefficient a_" + std::to_string(n) +
                                     " is not bounded");
        memo[n] = std::make_unique<const Series>(std::move(a));
    }
    return *memo[n];
}

PowerSeries PowerSeries::formal_derivative() const {
    PowerSeries base = *this;
    return PowerSeries(state_->ctx, [base](unsigned n) {
        return Rational(n + 1) * base.coeff(n + 1);
    });
}

Series eval_power_series(const PowerSeries& Q, const Series& z, const Rational& N) {
    require_same_context(Q.context(), z.context());
    if (!z.is_infinitesimal()) throw NotInfinitesimal();
    const ContextPtr& ctx = z.context();
    // Terms of weight exactly N are still summed completely; the result is
    // certified below N + s, where s is the granularity of every weight that
    // can appear.
    Rational step = rat_gcd(ctx->weight_step(), N == 0 ? Rational(1) : rat_abs(N));
    auto fold = [&step](const Series& s) {
        for (const auto& [m, c] : s.terms()) {
            Rational w = m.weight();
            if (w != 0) step = rat_gcd(step, rat_abs(w));
        }
    };
    Series a0 = Q.coeff(0);
    fold(a0);
    if (z.empty() && !z.known_below().is_finite())
        return a0.with_bound(min(a0.known_below(), WeightBound(N + step)));
    fold(z);
    Rational mu = *z.min_term_weight();
    if (mu <= 0) throw ZeroWeightStep();
    // Coefficients may carry negative-weight terms; widen the z-power target
    // until every contribution below N + step is covered.
    Rational wmin = 0;
    Integer nmax = rat_ceil(N / mu);
    for (;;) {
        for (Integer n = 1; n <= nmax; ++n) {
            const Series& an = Q.coeff(static_cast<unsigned>(n));
            fold(an);
            auto w = an.min_term_weight();
            if (w && *w < wmin) wmin = *w;
        }
        Integer wider = rat_ceil((N - wmin) / mu);
        if (wider <= nmax) break;
        nmax = wider;
    }
    Rational target = N - wmin;
    Series acc = a0;
    Series zpow = Series::constant(ctx, 1);
    for (Integer n = 1; n <= nmax; ++n) {
        zpow = (zpow * z).truncate(target);
        if (zpow.empty() && !zpow.known_below().is_finite()) break;
        acc = acc + Q.coeff(static_cast<unsigned>(n)) * zpow;
    }
    return acc.with_bound(min(acc.known_below(), WeightBound(N + step)));
}

PowerSeries binomial_series(const ContextPtr& ctx, const Rational& c) {
    return PowerSeries(ctx, [ctx, c](unsigned n) {
        return Series::constant(ctx, binomial_coefficient(c, n));
    });
}

PowerSeries exp_series(const ContextPtr& ctx) {
    return PowerSeries(ctx, [ctx](unsigned n) {
        Rational f = 1;
        for (unsigned i = 2; i <= n; ++i) f *= i;
        return Series::constant(ctx, 1 / f);
    });
}

PowerSeries log1p_series(const ContextPtr& ctx) {
    return PowerSeries(ctx, [ctx](unsigned n) {
        if (n == 0) return Series(ctx);
        Rational c = Rational(1) / n;
        return Series::constant(ctx, n % 2 == 0 ? -c : c);
    });
}

Series power(const Series& f, const Rational& c, const Rational& N) {
    if (f.sign() != 1) throw NonPositive("power() requires a series of positive sign");
    auto [d, m] = f.leading_term();
    auto dc = rational_pow(d, c);
    if (!dc) throw IrrationalScalarPower("leading coefficient " + to_string(d) +
                                         " has no rational power " + to_string(c));
    const ContextPtr& ctx = f.context();
    Rational mw = m.weight();
    // f = d*m*(1+u)
    Series::TermMap ut;
    Monomial minv = m.inverse();
    bool lead = true;
    for (const auto& [mi, ci] : f.terms()) {
        if (lead) { lead = false; continue; }
        ut.emplace(mi * minv, ci / d);
    }
    Series u = Series::make(ctx, std::move(ut), f.known_below().shifted(-mw));
    Series tail = eval_power_series(binomial_series(ctx, c), u, N);
    return *dc * (Series::monomial(ctx, 1, m.pow(c)) * tail);
}

Series hensel_solve(const PowerSeries& Q, const Rational& N) {
    return hensel_solve(Q, N, Series(Q.context()));
}

Series hensel_solve(const PowerSeries& Q, const Rational& N, const Series& seed,
                    std::vector<Rational>* residual_valuations) {
    const ContextPtr& ctx = Q.context();
    const Series& a0 = Q.coeff(0);
    const Series& a1 = Q.coeff(1);
    if (!a0.is_infinitesimal())
        throw PreconditionFailed("hensel_solve: Q(0) is not infinitesimal");
    bool unit = !a1.empty() && a1.leading_term().second.is_one();
    if (!unit) throw PreconditionFailed("hensel_solve: Q'(0) is not a unit");
    if (!seed.is_infinitesimal()) throw NotInfinitesimal("hensel seed must be infinitesimal");

    Series inv1 = a1.invert(N);
    PowerSeries qn(ctx, [Q, inv1](unsigned n) { return inv1 * Q.coeff(n); });

    // The contraction gains at least one grid step of valuation per
    // iteration; the step is read off the support granularity.
    Rational step = ctx->weight_step();
    auto fold = [&step](const Series& s) {
        for (const auto& [m, c] : s.terms()) {
            Rational w = m.weight();
            if (w > 0) step = rat_gcd(step, w);
        }
    };
    fold(a0);
    fold(seed);
    Integer cap = rat_ceil(N / step) + 2;

    Series z = seed;
    for (Integer it = 0;; ++it) {
        Series r = eval_power_series(qn, z, N);
        if (r.empty()) break;
        if (residual_valuations) residual_valuations->push_back(*r.min_term_weight());
        if (it >= cap) throw NoConvergence();
        z = z - r;
    }
    return z;
}

Series solve_unit_eq(const Rational& c, const Series& eps, const Rational& N) {
    if (c == -1) throw CMinusOne();
    if (!eps.is_infinitesimal()) throw NotInfinitesimal("eps must be infinitesimal");
    const ContextPtr& ctx = eps.context();
    Series one = Series::constant(ctx, 1);
    Series one_plus_eps = one + eps;
    // Q(Z) = (sum binom(c,n) Z^n)(1 + eps + Z) - 1
    PowerSeries Q(ctx, [ctx, c, one, one_plus_eps](unsigned n) {
        Series q = binomial_coefficient(c, n) * one_plus_eps;
        if (n >= 1) q = q + binomial_coefficient(c, n - 1) * one;
        if (n == 0) q = q - one;
        return q;
    });
    if (!(Q.coeff(0) == eps))
        throw PreconditionFailed("unit equation: constant term of Q is not eps");
    if (!(Q.coeff(1) == Series::constant(ctx, 1 + c) + c * eps))
        throw PreconditionFailed("unit equation: degree-1 term of Q is not (1+c+c*eps)");
    return hensel_solve(Q, N);
}

} // namespace hahn
