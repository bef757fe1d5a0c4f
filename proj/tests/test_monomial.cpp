#include "doctest.h"

#include "test_util.hpp"

using namespace hahn;
using namespace hahn::test;

namespace {

ContextPtr t_ctx() {
    static ContextPtr ctx = GeneratorContext::create({{"t", 1, {}}});
    return ctx;
}

// (e^-x, x^-1), both weight 1
ContextPtr ex_ctx() {
    static ContextPtr ctx = GeneratorContext::create({
        {"E", 1, {GeneratorDisplay::Kind::ExpRate, -1, ""}},
        {"X", 1, {GeneratorDisplay::Kind::Inverse, 0, "x"}},
    });
    return ctx;
}

Monomial mono(const ContextPtr& ctx, std::vector<Rational> e) { return Monomial(ctx, std::move(e)); }

} // namespace

TEST_CASE("monomial multiplication is the exponent-vector sum") {
    auto ctx = t_ctx();
    CHECK(mono(ctx, {1}) * mono(ctx, {2}) == mono(ctx, {3}));
    CHECK(mono(ctx, {2}) * mono(ctx, {-2}) == Monomial::one(ctx));
    auto ctx2 = ex_ctx();
    CHECK(mono(ctx2, {1, 0}) * mono(ctx2, {0, -3}) == mono(ctx2, {1, -3}));
}

TEST_CASE("monomial comparison is lexicographic with positive head meaning small") {
    auto ctx = t_ctx();
    CHECK(Monomial::cmp(mono(ctx, {2}), mono(ctx, {1})) < 0);
    CHECK(Monomial::cmp(mono(ctx, {2}), mono(ctx, {2})) == 0);
    // e^-x * x^1000 < 1: the exponential head dominates
    auto ctx2 = ex_ctx();
    CHECK(Monomial::cmp(mono(ctx2, {1, -1000}), Monomial::one(ctx2)) < 0);
}

TEST_CASE("monomial powers scale exponents") {
    auto ctx = t_ctx();
    CHECK(mono(ctx, {2}).pow(Rational(1, 2)) == mono(ctx, {1}));
    CHECK(mono(ctx, {5}).pow(0) == Monomial::one(ctx));
    CHECK(mono(ctx, {-1}).pow(3) == mono(ctx, {-3}));
}

TEST_CASE("weight is the weighted exponent sum") {
    auto ctx = t_ctx();
    CHECK(mono(ctx, {3}).weight() == 3);
    CHECK(Monomial::one(ctx).weight() == 0);
    auto ctx2 = ex_ctx();
    CHECK(mono(ctx2, {1, 2}).weight() == 3); // e^-x * x^-2
}

TEST_CASE("monomial order and weight properties") {
    Rng rng(12345);
    auto ctx = ex_ctx();
    std::uniform_int_distribution<int> ex(-4, 4);
    auto rand_mono = [&] {
        return mono(ctx, {Rational(ex(rng)), Rational(ex(rng))});
    };
    for (int i = 0; i < 300; ++i) {
        Monomial a = rand_mono(), b = rand_mono(), n = rand_mono();
        int c = Monomial::cmp(a, b);
        // trichotomy and antisymmetry
        CHECK(Monomial::cmp(b, a) == -c);
        CHECK((c == 0) == (a.exps() == b.exps()));
        // translation invariance
        CHECK(Monomial::cmp(a * n, b * n) == c);
        // weight homomorphism
        CHECK((a * b).weight() == a.weight() + b.weight());
        // pow additivity
        Rational p = rand_rational(rng), q = rand_rational(rng);
        CHECK(a.pow(p) * a.pow(q) == a.pow(p + q));
    }
}

TEST_CASE("context mismatch is rejected") {
    auto a = GeneratorContext::create({{"t", 1, {}}});
    auto b = GeneratorContext::create({{"t", 1, {}}});
    CHECK_THROWS_AS(Monomial::one(a) * Monomial::one(b), ContextMismatch);
}

TEST_CASE("context validation") {
    CHECK_THROWS_AS(GeneratorContext::create({{"", 1, {}}}), PreconditionFailed);
    CHECK_THROWS_AS(GeneratorContext::create({{"t", 1, {}}, {"t", 1, {}}}), PreconditionFailed);
    CHECK_THROWS_AS(GeneratorContext::create({{"t", 0, {}}}), PreconditionFailed);
    CHECK_THROWS_AS(GeneratorContext::create({{"t", -1, {}}}), PreconditionFailed);
    auto ctx = GeneratorContext::create({{"a", Rational(2, 3), {}}, {"b", Rational(1, 2), {}}});
    CHECK(ctx->weight_step() == Rational(1, 6));
}
