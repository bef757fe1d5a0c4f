#pragma once

#include <vector>

#include "hahn/context.hpp"

namespace hahn {

/// Element of the ordered abelian monomial group: an exponent vector over
/// the generators of the ambient context. A positive first nonzero exponent
/// means the monomial is strictly below 1 (infinitesimal).
class Monomial {
public:
    explicit Monomial(ContextPtr ctx) : ctx_(std::move(ctx)), exps_(ctx_->size()) {}
    Monomial(ContextPtr ctx, std::vector<Rational> exps);

    static Monomial one(ContextPtr ctx) { return Monomial(std::move(ctx)); }
    static Monomial generator(ContextPtr ctx, std::size_t i, Rational e = 1);

    const ContextPtr& context() const { return ctx_; }
    const Rational& exp(std::size_t i) const { return exps_[i]; }
    const std::vector<Rational>& exps() const { return exps_; }
    bool is_one() const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    Monomial inverse() const;
    Monomial pow(const Rational& q) const;

    /// Sum of weight_i * exponent_i.
    Rational weight() const;

    /// Asymptotic comparison: -1 if a < b (a strictly dominated), 0 if equal,
    /// +1 if a > b. Lexicographic on the quotient's exponent vector.
    static int cmp(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial& a, const Monomial& b) { return cmp(a, b) == 0; }

private:
    ContextPtr ctx_;
    std::vector<Rational> exps_;
};

/// Map comparator putting the dominant (leading) monomial first.
struct MonomialDescending {
    bool operator()(const Monomial& a, const Monomial& b) const { return Monomial::cmp(a, b) > 0; }
};

void require_same_context(const ContextPtr& a, const ContextPtr& b);

} // namespace hahn
