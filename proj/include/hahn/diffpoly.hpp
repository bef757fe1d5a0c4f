#pragma once

#include <map>
#include <optional>
#include <vector>

#include "hahn/derivation.hpp"
#include "hahn/series.hpp"

namespace hahn {

/// Sparse differential polynomial in Y, Y', ..., Y^(r) with series
/// coefficients. Keys are exponent multi-indices (d_0, ..., d_r).
class DiffPoly {
public:
    using Key = std::vector<unsigned>;
    using TermMap = std::map<Key, Series>;

    static DiffPoly make(const ContextPtr& ctx, TermMap terms);

    const ContextPtr& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    unsigned order() const { return order_; }

    /// Substitute y, y', ..., y^(r) and sum.
    Series eval(const Series& y) const;

private:
    explicit DiffPoly(ContextPtr ctx) : ctx_(std::move(ctx)) {}
    ContextPtr ctx_;
    TermMap terms_;
    unsigned order_ = 0;
};

/// P(Y) = Y'(c(Y+1)+Y) - Y(Y+1) together with the rational-function form
/// y' = R(y) as a numerator/denominator pair: R = Y(Y+1) / (c(Y+1)+Y).
struct PcSystem {
    Rational c;
    DiffPoly p;
    DiffPoly r_num;
    DiffPoly r_den;
};

PcSystem make_pc(const ContextPtr& ctx, const Rational& c);

/// Index of the generator representing e^{-x/(c+1)}, recognized by its
/// exponential display rate or by a constant logarithmic derivative
/// -1/(c+1).
std::size_t find_exp_generator(const ContextPtr& ctx, const Rational& c);

/// Leading term b * e^{x/(c+1)} of the zero of P_c determined by
/// |y|^c (y+1) = a e^x: b is the signed (c+1)-th root of a.
std::pair<Rational, Monomial> leading_from_a(const ContextPtr& ctx, const Rational& a,
                                             const Rational& c);

/// The unique zero of P_c with leading term (b, e^{x/(c+1)}), via the unit
/// equation with eps = b^-1 e^{-x/(c+1)}.
Series solve_pc(const ContextPtr& ctx, const Rational& c, const Rational& b, const Rational& N);

struct UCheckReport {
    Series residual;             // U(y)^dagger - 1; zero below bound iff P_c(y) = 0 below bound
    std::optional<Rational> a;   // leading coefficient of U(y) on e^x, when U matches
    bool u_is_multiple_of_ex = false; // U(y) = a e^x below the bound
};

UCheckReport u_check(const Series& y, const Rational& c, const Rational& N);

} // namespace hahn
