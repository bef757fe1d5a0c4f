#include "hahn/monomial.hpp"

namespace hahn {

void require_same_context(const ContextPtr& a, const ContextPtr& b) {
    if (a != b) throw ContextMismatch();
}

Monomial::Monomial(ContextPtr ctx, std::vector<Rational> exps)
    : ctx_(std::move(ctx)), exps_(std::move(exps)) {
    if (exps_.size() != ctx_->size())
        throw PreconditionFailed("exponent vector length does not match context");
}

Monomial Monomial::generator(ContextPtr ctx, std::size_t i, Rational e) {
    Monomial m(std::move(ctx));
    m.exps_.at(i) = std::move(e);
    return m;
}

bool Monomial::is_one() const {
    for (const auto& e : exps_)
        if (e != 0) return false;
    return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    require_same_context(a.ctx_, b.ctx_);
    Monomial r(a.ctx_);
    for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] = a.exps_[i] + b.exps_[i];
    return r;
}

Monomial Monomial::inverse() const {
    Monomial r(ctx_);
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = -exps_[i];
    return r;
}

Monomial Monomial::pow(const Rational& q) const {
    Monomial r(ctx_);
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = exps_[i] * q;
    return r;
}

Rational Monomial::weight() const {
    Rational w = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i) w += ctx_->gen(i).weight * exps_[i];
    return w;
}

int Monomial::cmp(const Monomial& a, const Monomial& b) {
    require_same_context(a.ctx_, b.ctx_);
    for (std::size_t i = 0; i < a.exps_.size(); ++i) {
        // Smaller exponent on an infinitesimal generator means larger monomial.
        if (a.exps_[i] != b.exps_[i]) return a.exps_[i] < b.exps_[i] ? 1 : -1;
    }
    return 0;
}

} // namespace hahn
