#include "hahn/germ.hpp"

#include <cmath>

#include "hahn/diffpoly.hpp"

namespace hahn {

GermAssignment::GermAssignment(ContextPtr ctx, std::vector<LogRule> log_rules)
    : ctx_(std::move(ctx)), rules_(std::move(log_rules)) {
    rules_.resize(ctx_->size());
}

GermAssignment GermAssignment::for_context(ContextPtr ctx) {
    std::vector<LogRule> rules;
    for (const auto& g : ctx->gens()) {
        if (g.display.kind == GeneratorDisplay::Kind::ExpRate) {
            double r = to_double(g.display.rate);
            rules.push_back([r](double t) { return r * t; });
        } else {
            rules.push_back([](double t) { return -std::log(t); });
        }
    }
    return GermAssignment(std::move(ctx), std::move(rules));
}

void GermAssignment::set_samples(std::vector<double> ts) {
    double prev = 0;
    for (double t : ts) {
        if (t <= prev) throw PreconditionFailed("sample points must be positive and increasing");
        prev = t;
    }
    samples_ = std::move(ts);
}

double GermAssignment::eval(const Series& f, double t) const {
    double sum = 0;
    for (const auto& [m, c] : f.terms()) {
        double logmag = 0;
        for (std::size_t i = 0; i < ctx_->size(); ++i) {
            if (m.exp(i) == 0) continue;
            if (!rules_[i]) throw MissingRule("no germ rule for generator '" + ctx_->gen(i).name + "'");
            logmag += to_double(m.exp(i)) * rules_[i](t);
        }
        sum += to_double(c) * std::exp(logmag);
    }
    return sum;
}

bool GermAssignment::sign_check(const Series& f) const {
    int s = f.sign();
    for (double t : samples_) {
        double v = eval(f, t);
        int vs = v > 0 ? 1 : v < 0 ? -1 : 0;
        if (vs != s) return false;
    }
    return true;
}

nlohmann::ordered_json DecayReport::to_json() const {
    nlohmann::ordered_json j;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json row;
        row["depth"] = to_string(r.depth);
        row["t"] = r.t;
        row["residual"] = r.residual;
        row["decay_ratio"] = r.decay_ratio;
        row["pass"] = r.pass;
        j["rows"].push_back(std::move(row));
    }
    j["pass"] = pass;
    return j;
}

DecayReport residual_decay_check(const GermAssignment& germ, const Rational& c, const Rational& b,
                                 const std::vector<Rational>& depths, double t) {
    const ContextPtr& ctx = germ.context();
    PcSystem pc = make_pc(ctx, c);
    DecayReport rep;
    double prev = 0;
    bool have_prev = false;
    for (const auto& N : depths) {
        if (have_prev && !rep.rows.empty() && N <= rep.rows.back().depth)
            throw PreconditionFailed("depths must be increasing");
        Series y = solve_pc(ctx, c, b, N);
        // Evaluate P at the truncation read as an exact object, so the
        // beyond-bound residual terms survive.
        Series resid = pc.p.eval(y.as_exact());
        DecayRow row;
        row.depth = N;
        row.t = t;
        row.residual = std::fabs(germ.eval(resid, t));
        if (have_prev) {
            row.decay_ratio = prev == 0 ? 0 : row.residual / prev;
            row.pass = row.residual < prev;
        }
        rep.pass = rep.pass && row.pass;
        prev = row.residual;
        have_prev = true;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

} // namespace hahn
