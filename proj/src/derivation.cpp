#include "hahn/derivation.hpp"

namespace hahn {

Series derive(const Series& f) {
    const ContextPtr& ctx = f.context();
    if (!ctx->has_derivation()) throw MissingSpec();
    // A hidden term of f at weight >= B contributes from weight
    // >= B + min(0, least logderiv term weight).
    Rational delta = 0;
    for (std::size_t i = 0; i < ctx->size(); ++i) {
        auto mu = ctx->logderiv(i).min_term_weight();
        if (mu && *mu < delta) delta = *mu;
    }
    Series out(ctx);
    for (const auto& [m, c] : f.terms()) {
        Series rate(ctx);
        for (std::size_t i = 0; i < ctx->size(); ++i)
            if (m.exp(i) != 0) rate = rate + m.exp(i) * ctx->logderiv(i);
        out = out + Series::monomial(ctx, c, m) * rate;
    }
    return out.with_bound(min(out.known_below(), f.known_below().shifted(delta)));
}

Series derive_n(const Series& f, unsigned n) {
    Series r = f;
    for (unsigned i = 0; i < n; ++i) r = derive(r);
    return r;
}

Series log_derivative(const Series& f, const Rational& N) {
    if (f.is_exact_zero()) throw ZeroDivision("logarithmic derivative of zero");
    return derive(f) * f.invert(N);
}

} // namespace hahn
