#include "hahn/context.hpp"

#include <set>

#include "hahn/series.hpp"

namespace hahn {

GeneratorContext::~GeneratorContext() = default;

std::shared_ptr<GeneratorContext> GeneratorContext::create(std::vector<GeneratorDecl> gens) {
    std::set<std::string> names;
    for (const auto& g : gens) {
        if (g.name.empty()) throw PreconditionFailed("empty generator name");
        if (!names.insert(g.name).second)
            throw PreconditionFailed("duplicate generator name '" + g.name + "'");
        if (g.weight <= 0) throw PreconditionFailed("generator weight must be strictly positive");
    }
    auto ctx = std::shared_ptr<GeneratorContext>(new GeneratorContext());
    ctx->gens_ = std::move(gens);
    ctx->logderivs_.resize(ctx->gens_.size());
    Rational step = 0;
    for (const auto& g : ctx->gens_) step = rat_gcd(step, g.weight);
    ctx->step_ = step == 0 ? Rational(1) : step;
    return ctx;
}

int GeneratorContext::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name) return static_cast<int>(i);
    return -1;
}

void GeneratorContext::set_logderiv(std::size_t i, const Series& ld) {
    if (i >= gens_.size()) throw PreconditionFailed("generator index out of range");
    if (ld.context().get() != this)
        throw ContextMismatch("logarithmic derivative must live over the same context");
    if (ld.known_below().is_finite())
        throw PreconditionFailed("declared logarithmic derivative must be exact");
    if (logderivs_[i]) throw PreconditionFailed("logarithmic derivative already set");
    logderivs_[i] = std::make_shared<const Series>(ld);
}

bool GeneratorContext::has_derivation() const {
    for (const auto& ld : logderivs_)
        if (!ld) return false;
    return !logderivs_.empty();
}

const Series& GeneratorContext::logderiv(std::size_t i) const {
    if (i >= logderivs_.size() || !logderivs_[i]) throw MissingSpec();
    return *logderivs_[i];
}

} // namespace hahn
