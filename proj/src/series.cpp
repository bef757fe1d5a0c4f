#include "hahn/series.hpp"

#include <sstream>

namespace hahn {

Series Series::constant(const ContextPtr& ctx, Rational c) {
    return monomial(ctx, std::move(c), Monomial::one(ctx));
}

Series Series::monomial(const ContextPtr& ctx, Rational coeff, const Monomial& m) {
    require_same_context(ctx, m.context());
    Series s(ctx);
    if (coeff != 0) s.terms_.emplace(m, std::move(coeff));
    return s;
}

Series Series::generator(const ContextPtr& ctx, std::size_t i, Rational e) {
    return monomial(ctx, 1, Monomial::generator(ctx, i, std::move(e)));
}

Series Series::make(const ContextPtr& ctx, TermMap terms, WeightBound bound) {
    Series s(ctx);
    s.bound_ = std::move(bound);
    for (auto& [m, c] : terms) {
        if (c == 0) continue;
        require_same_context(ctx, m.context());
        if (s.bound_.covers(m.weight())) s.terms_.emplace(m, std::move(c));
    }
    return s;
}

std::pair<Rational, Monomial> Series::leading_term() const {
    if (terms_.empty()) {
        if (bound_.is_finite()) throw Inconclusive("leading term hidden behind reliability bound");
        throw ZeroDivision("leading term of the zero series");
    }
    const auto& [m, c] = *terms_.begin();
    return {c, m};
}

std::optional<Rational> Series::min_term_weight() const {
    if (terms_.empty()) {
        if (bound_.is_finite()) return bound_.value();
        return std::nullopt;
    }
    std::optional<Rational> w;
    for (const auto& [m, c] : terms_) {
        Rational mw = m.weight();
        if (!w || mw < *w) w = std::move(mw);
    }
    return w;
}

Series Series::with_bound(WeightBound b) const {
    Series s(ctx_);
    s.bound_ = std::move(b);
    for (const auto& [m, c] : terms_)
        if (s.bound_.covers(m.weight())) s.terms_.emplace(m, c);
    return s;
}

Series operator+(const Series& f, const Series& g) {
    require_same_context(f.ctx_, g.ctx_);
    Series::TermMap t = f.terms_;
    for (const auto& [m, c] : g.terms_) {
        auto [it, fresh] = t.emplace(m, c);
        if (!fresh) it->second += c;
    }
    return Series::make(f.ctx_, std::move(t), min(f.bound_, g.bound_));
}

Series Series::operator-() const {
    Series s(ctx_);
    s.bound_ = bound_;
    for (const auto& [m, c] : terms_) s.terms_.emplace(m, -c);
    return s;
}

Series operator-(const Series& f, const Series& g) { return f + (-g); }

Series operator*(const Rational& c, const Series& f) {
    Series s(f.ctx_);
    s.bound_ = f.bound_;
    if (c != 0)
        for (const auto& [m, k] : f.terms_) s.terms_.emplace(m, c * k);
    return s;
}

Series operator*(const Series& f, const Series& g) {
    require_same_context(f.ctx_, g.ctx_);
    if (f.is_exact_zero() || g.is_exact_zero()) return Series(f.ctx_);
    // known_below = min(B_f + mu_g, B_g + mu_f); an absent bound or term
    // weight drops the corresponding cap.
    auto cap = [](const WeightBound& b, const std::optional<Rational>& mu) {
        if (!b.is_finite() || !mu) return WeightBound::infinite();
        return b.shifted(*mu);
    };
    WeightBound bound = min(cap(f.bound_, g.min_term_weight()), cap(g.bound_, f.min_term_weight()));
    Series::TermMap t;
    for (const auto& [mf, cf] : f.terms_)
        for (const auto& [mg, cg] : g.terms_) {
            Monomial m = mf * mg;
            if (!bound.covers(m.weight())) continue;
            auto [it, fresh] = t.emplace(std::move(m), cf * cg);
            if (!fresh) it->second += cf * cg;
        }
    return Series::make(f.ctx_, std::move(t), std::move(bound));
}

Series Series::invert(const Rational& N) const {
    if (terms_.empty()) {
        if (bound_.is_finite()) throw Inconclusive("cannot invert a series with no reliable leading term");
        throw ZeroDivision();
    }
    auto [d, m] = leading_term();
    Rational mw = m.weight();
    // A hidden term of f at weight >= B perturbs 1/f from weight >= B - 2w(lt).
    WeightBound rbound = min(WeightBound(N), bound_.shifted(-2 * mw));
    if (terms_.size() == 1) {
        Series r = monomial(ctx_, 1 / d, m.inverse());
        if (bound_.is_finite()) r.bound_ = rbound;
        return r;
    }
    // f = d*m*(1+u); 1/f = (1/d) * m^-1 * sum (-u)^n.
    Monomial minv = m.inverse();
    TermMap ut;
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        ut.emplace(it->first * minv, it->second / d);
    Series u = make(ctx_, std::move(ut), WeightBound::infinite());
    auto mu = u.min_term_weight();
    if (*mu <= 0) throw ZeroWeightStep();
    Rational target = rbound.is_finite() ? Rational(rbound.value() + mw) : N + mw;
    Series geom = constant(ctx_, 1);
    Series upow = constant(ctx_, 1);
    for (Integer n = 1; Rational(n) * *mu <= target; ++n) {
        upow = (upow * u).truncate(target);
        geom = geom + (n % 2 == 0 ? upow : -upow);
    }
    Series r = (1 / d) * (monomial(ctx_, 1, minv) * geom);
    return r.with_bound(rbound);
}

Series Series::invert() const {
    if (terms_.size() == 1 || bound_.is_finite())
        return invert(bound_.is_finite() ? bound_.value() : Rational(0));
    throw PreconditionFailed("invert of an exact multi-term series needs an explicit weight bound");
}

int Series::sign() const {
    if (terms_.empty()) return 0;
    return terms_.begin()->second.sign();
}

Series Series::abs() const { return sign() < 0 ? -*this : *this; }

bool Series::is_infinitesimal() const {
    if (terms_.empty()) return true; // zero (or reliably headless) series lies in the maximal ideal
    const Monomial& m = terms_.begin()->first;
    return Monomial::cmp(m, Monomial::one(ctx_)) < 0;
}

bool Series::is_bounded() const {
    if (terms_.empty()) return true;
    const Monomial& m = terms_.begin()->first;
    return Monomial::cmp(m, Monomial::one(ctx_)) <= 0;
}

Series Series::truncate(const Rational& N) const {
    WeightBound b = min(bound_, WeightBound(N + ctx_->weight_step()));
    Series s(ctx_);
    s.bound_ = std::move(b);
    for (const auto& [m, c] : terms_)
        if (m.weight() <= N) s.terms_.emplace(m, c);
    return s;
}

DomRelation Series::dominance(const Series& f, const Series& g) {
    require_same_context(f.ctx_, g.ctx_);
    auto headless = [](const Series& s) { return s.terms_.empty() && s.bound_.is_finite(); };
    if (headless(f) || headless(g)) throw Inconclusive();
    DomRelation r;
    if (f.is_exact_zero()) {
        r.preceq = true;
        r.prec = !g.is_exact_zero();
        r.asymp = g.is_exact_zero();
        r.sim = false;
        return r;
    }
    if (g.is_exact_zero()) return r; // f != 0: no relation holds
    int c = Monomial::cmp(f.terms_.begin()->first, g.terms_.begin()->first);
    r.prec = c < 0;
    r.asymp = c == 0;
    r.preceq = c <= 0;
    if (r.asymp) {
        Series d = f - g;
        if (headless(d))
            throw Inconclusive("f - g cancels below the reliability bound");
        r.sim = d.is_exact_zero() ||
                Monomial::cmp(d.terms_.begin()->first, g.terms_.begin()->first) < 0;
    }
    return r;
}

bool operator==(const Series& f, const Series& g) {
    return f.ctx_ == g.ctx_ && f.bound_ == g.bound_ && f.terms_ == g.terms_;
}

bool same_terms(const Series& f, const Series& g) {
    return f.context() == g.context() && f.terms() == g.terms();
}

namespace {

std::string exponent_text(const Rational& e) {
    if (den(e) == 1 && e > 0) return "^" + to_string(e);
    return "^(" + to_string(e) + ")";
}

std::string exp_rate_text(const Rational& q) {
    // q is the coefficient of x in the exponent: e^x, e^(-x/2), e^(-3x/2), ...
    if (q == 1) return "e^x";
    std::string core;
    Integer p = num(q), d = den(q);
    Integer ap = p < 0 ? Integer(-p) : p;
    core = (ap == 1 ? "x" : ap.str() + "x");
    if (d != 1) core += "/" + d.str();
    return std::string("e^(") + (p < 0 ? "-" : "") + core + ")";
}

} // namespace

std::string monomial_to_text(const Monomial& m) {
    const auto& ctx = m.context();
    std::string out;
    for (std::size_t i = 0; i < ctx->size(); ++i) {
        const Rational& e = m.exp(i);
        if (e == 0) continue;
        const GeneratorDecl& g = ctx->gen(i);
        std::string factor;
        switch (g.display.kind) {
        case GeneratorDisplay::Kind::ExpRate:
            factor = exp_rate_text(e * g.display.rate);
            break;
        case GeneratorDisplay::Kind::Inverse: {
            Rational d = -e;
            factor = d == 1 ? g.display.base : g.display.base + exponent_text(d);
            break;
        }
        case GeneratorDisplay::Kind::Plain:
            factor = e == 1 ? g.name : g.name + exponent_text(e);
            break;
        }
        if (!out.empty()) out += "*";
        out += factor;
    }
    return out;
}

std::string Series::to_text() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string mono = monomial_to_text(m);
        Rational a = c < 0 ? Rational(-c) : c;
        std::string body = mono.empty() ? to_string(a)
                           : a == 1     ? mono
                                        : to_string(a) + "*" + mono;
        if (first) {
            out += (c < 0 ? "-" : "") + body;
            first = false;
        } else {
            out += (c < 0 ? " - " : " + ") + body;
        }
    }
    return out;
}

nlohmann::ordered_json Series::to_json() const {
    nlohmann::ordered_json j;
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& [m, c] : terms_) {
        nlohmann::ordered_json t;
        t["coeff"] = to_string(c);
        auto exps = nlohmann::ordered_json::array();
        for (const auto& e : m.exps()) exps.push_back(to_string(e));
        t["exponents"] = std::move(exps);
        j["terms"].push_back(std::move(t));
    }
    j["known_below"] = bound_.is_finite() ? nlohmann::ordered_json(to_string(bound_.value()))
                                          : nlohmann::ordered_json(nullptr);
    return j;
}

Series Series::from_json(const ContextPtr& ctx, const nlohmann::json& j) {
    TermMap t;
    for (const auto& term : j.at("terms")) {
        std::vector<Rational> exps;
        for (const auto& e : term.at("exponents")) exps.push_back(parse_rational(e.get<std::string>()));
        t.emplace(Monomial(ctx, std::move(exps)), parse_rational(term.at("coeff").get<std::string>()));
    }
    WeightBound b = j.at("known_below").is_null()
                        ? WeightBound::infinite()
                        : WeightBound(parse_rational(j.at("known_below").get<std::string>()));
    return make(ctx, std::move(t), std::move(b));
}

} // namespace hahn
