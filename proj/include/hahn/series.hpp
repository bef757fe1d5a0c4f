#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "hahn/bound.hpp"
#include "hahn/monomial.hpp"

#include "json.hpp"

namespace hahn {

/// Asymptotic relation record for a pair (f, g).
struct DomRelation {
    bool preceq = false; // f = O(g)
    bool prec = false;   // f = o(g)
    bool asymp = false;  // mutual O
    bool sim = false;    // f - g = o(g)
};

/// Truncated grid-based series with exact rational coefficients.
/// Terms are kept in strictly descending monomial order; every term of the
/// exact object with weight < known_below is present and exact, and no
/// stored term has weight >= known_below.
class Series {
public:
    using TermMap = std::map<Monomial, Rational, MonomialDescending>;

    explicit Series(ContextPtr ctx) : ctx_(std::move(ctx)) {} // exact zero

    static Series constant(const ContextPtr& ctx, Rational c);
    static Series monomial(const ContextPtr& ctx, Rational coeff, const Monomial& m);
    static Series generator(const ContextPtr& ctx, std::size_t i, Rational e = 1);
    /// Normalizing constructor: drops zero coefficients and terms at or above the bound.
    static Series make(const ContextPtr& ctx, TermMap terms, WeightBound bound);

    const ContextPtr& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    const WeightBound& known_below() const { return bound_; }

    bool empty() const { return terms_.empty(); }
    /// True only for the series that is exactly zero (no terms, infinite bound).
    bool is_exact_zero() const { return terms_.empty() && !bound_.is_finite(); }
    std::size_t term_count() const { return terms_.size(); }

    std::pair<Rational, Monomial> leading_term() const;
    /// Least stored term weight; for an empty series, the bound if finite.
    std::optional<Rational> min_term_weight() const;

    /// Same terms under a different reliability bound (terms >= bound dropped).
    Series with_bound(WeightBound b) const;
    /// Reinterpret the stored terms as an exact object.
    Series as_exact() const { return with_bound(WeightBound::infinite()); }

    friend Series operator+(const Series& f, const Series& g);
    friend Series operator-(const Series& f, const Series& g);
    friend Series operator*(const Series& f, const Series& g);
    Series operator-() const;
    friend Series operator*(const Rational& c, const Series& f);

    /// Multiplicative inverse via the geometric series on the infinitesimal
    /// tail, summed below the weight bound N.
    Series invert(const Rational& N) const;
    /// As above with the bound taken from the series itself (must be finite
    /// unless the series is a single exact term).
    Series invert() const;

    int sign() const;
    Series abs() const;
    friend bool leq(const Series& f, const Series& g) { return (g - f).sign() >= 0; }

    bool is_infinitesimal() const;
    bool is_bounded() const;

    Series truncate(const Rational& N) const;

    /// Asymptotic relations via leading monomials. Throws Inconclusive when
    /// a needed leading term is hidden behind a finite reliability bound.
    static DomRelation dominance(const Series& f, const Series& g);

    std::string to_text() const;
    nlohmann::ordered_json to_json() const;
    static Series from_json(const ContextPtr& ctx, const nlohmann::json& j);

    friend bool operator==(const Series& f, const Series& g);

private:
    ContextPtr ctx_;
    TermMap terms_;
    WeightBound bound_; // default: infinite (exact)
};

/// True when f and g agree on every stored term; both must be reliable where
/// they are compared (identical term maps, bounds may differ).
bool same_terms(const Series& f, const Series& g);

std::string monomial_to_text(const Monomial& m);

} // namespace hahn
