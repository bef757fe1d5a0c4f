#include "hahn/diffpoly.hpp"

#include "hahn/analytic.hpp"

namespace hahn {

DiffPoly DiffPoly::make(const ContextPtr& ctx, TermMap terms) {
    DiffPoly p(ctx);
    for (auto& [key, coeff] : terms) {
        if (coeff.empty() && !coeff.known_below().is_finite()) continue;
        require_same_context(ctx, coeff.context());
        Key k = key;
        while (!k.empty() && k.back() == 0) k.pop_back();
        if (k.empty()) k.push_back(0);
        auto [it, fresh] = p.terms_.emplace(std::move(k), coeff);
        if (!fresh) it->second = it->second + coeff;
        if (it->first.size() > p.order_ + 1) p.order_ = static_cast<unsigned>(it->first.size()) - 1;
    }
    return p;
}

Series DiffPoly::eval(const Series& y) const {
    std::vector<Series> derivs{y};
    for (unsigned i = 1; i <= order_; ++i) derivs.push_back(derive(derivs.back()));
    Series out(ctx_);
    for (const auto& [key, coeff] : terms_) {
        Series prod = coeff;
        for (std::size_t i = 0; i < key.size(); ++i)
            for (unsigned d = 0; d < key[i]; ++d) prod = prod * derivs[i];
        out = out + prod;
    }
    return out;
}

PcSystem make_pc(const ContextPtr& ctx, const Rational& c) {
    if (c <= 0) throw NonPositiveC();
    auto k = [&](Rational v) { return Series::constant(ctx, std::move(v)); };
    // P = Y'(c(Y+1)+Y) - Y(Y+1) = (c+1) Y Y' + c Y' - Y^2 - Y
    DiffPoly p = DiffPoly::make(ctx, {
        {{1, 1}, k(c + 1)},
        {{0, 1}, k(c)},
        {{2}, k(-1)},
        {{1}, k(-1)},
    });
    DiffPoly num = DiffPoly::make(ctx, {{{2}, k(1)}, {{1}, k(1)}});
    DiffPoly den = DiffPoly::make(ctx, {{{1}, k(c + 1)}, {{0}, k(c)}});
    return PcSystem{c, std::move(p), std::move(num), std::move(den)};
}

std::size_t find_exp_generator(const ContextPtr& ctx, const Rational& c) {
    Rational rate = Rational(-1) / (c + 1);
    for (std::size_t i = 0; i < ctx->size(); ++i) {
        const auto& d = ctx->gen(i).display;
        if (d.kind == GeneratorDisplay::Kind::ExpRate && d.rate == rate) return i;
    }
    if (ctx->has_derivation()) {
        Series want = Series::constant(ctx, rate);
        for (std::size_t i = 0; i < ctx->size(); ++i)
            if (ctx->logderiv(i) == want) return i;
    }
    throw PreconditionFailed("context has no generator e^(-x/(c+1)) for c = " + to_string(c));
}

std::pair<Rational, Monomial> leading_from_a(const ContextPtr& ctx, const Rational& a,
                                             const Rational& c) {
    if (c <= 0) throw NonPositiveC();
    if (a == 0) throw PreconditionFailed("a must be nonzero");
    Rational inv_exp = 1 / (c + 1);
    auto root = rational_pow(rat_abs(a), inv_exp);
    if (!root) throw IrrationalRoot("a^(1/(c+1)) is not rational for a = " + to_string(a));
    Rational b = a > 0 ? *root : -*root;
    std::size_t i = find_exp_generator(ctx, c);
    return {b, Monomial::generator(ctx, i, -1)};
}

Series solve_pc(const ContextPtr& ctx, const Rational& c, const Rational& b, const Rational& N) {
    if (c <= 0) throw NonPositiveC();
    if (b == 0) throw PreconditionFailed("b must be nonzero");
    std::size_t i = find_exp_generator(ctx, c);
    Rational w = ctx->gen(i).weight;
    Series eps = Series::generator(ctx, i) * Series::constant(ctx, 1 / b);
    Series z = solve_unit_eq(c, eps, N + w);
    Monomial lead = Monomial::generator(ctx, i, -1);
    Series y = Series::monomial(ctx, b, lead) * (Series::constant(ctx, 1) + z);
    auto [lc, lm] = y.leading_term();
    if (lc != b || !(lm == lead))
        throw PreconditionFailed("solve_pc: leading term contract violated");
    return y;
}

UCheckReport u_check(const Series& y, const Rational& c, const Rational& N) {
    const ContextPtr& ctx = y.context();
    if (y.sign() == 0) throw DegenerateY("y must be nonzero with definite sign");
    Series y1 = y + Series::constant(ctx, 1);
    if (y1.sign() == 0) throw DegenerateY("y + 1 must be nonzero");
    Series u = power(y.abs(), c, N) * y1;
    UCheckReport rep{log_derivative(u, N) - Series::constant(ctx, 1), std::nullopt, false};
    if (!u.empty()) {
        std::size_t i = find_exp_generator(ctx, c);
        // e^x = E^{-(c+1)} for E = e^{-x/(c+1)}
        Monomial ex = Monomial::generator(ctx, i, -(c + 1));
        auto [lc, lm] = u.leading_term();
        if (lm == ex) {
            rep.a = lc;
            Series diff = u - Series::monomial(ctx, lc, ex);
            rep.u_is_multiple_of_ex = diff.empty();
        }
    }
    return rep;
}

} // namespace hahn
