#include "doctest.h"

#include "hahn/diffpoly.hpp"
#include "hahn/session.hpp"
#include "test_util.hpp"

using namespace hahn;
using namespace hahn::test;

namespace {

ContextPtr c1_ctx() {
    static ContextPtr ctx = make_transseries_context(1);
    return ctx;
}

Series E_pow(const ContextPtr& ctx, const Rational& e, const Rational& c = 1) {
    return Series::monomial(ctx, c, Monomial::generator(ctx, 0, e));
}

// quadratic-formula oracle for c = 1, b = 1: the positive branch of
// y^2 + y = e^x, expanded as -1/2 + sum_n binom(1/2,n) 4^-n E^(2n-1)
Series quadratic_oracle(const ContextPtr& ctx, const Rational& N) {
    Series y = Series::constant(ctx, Rational(-1, 2));
    Rational four_n = 1;
    for (unsigned n = 0; Rational(2 * n) - 1 < N + 1; ++n) {
        y = y + E_pow(ctx, Rational(2 * n) - 1, ref_binomial(Rational(1, 2), n) / four_n);
        four_n *= 4;
    }
    return y.with_bound(WeightBound(N + 1));
}

} // namespace

TEST_CASE("diff poly construction and evaluation") {
    auto ctx = c1_ctx();
    auto k = [&](Rational v) { return Series::constant(ctx, std::move(v)); };
    // Q = 2 Y Y' + Y^2, trailing-zero keys normalized
    DiffPoly q = DiffPoly::make(ctx, {{{1, 1}, k(2)}, {{2, 0}, k(1)}});
    CHECK(q.order() == 1);
    CHECK(q.terms().size() == 2);
    // Q(e^x) = 2 e^x e^x + e^(2x) = 3 e^(2x)
    Series ex = E_pow(ctx, -2);
    CHECK(q.eval(ex) == 3 * E_pow(ctx, -4));
    // zero coefficients are dropped
    DiffPoly z = DiffPoly::make(ctx, {{{1}, Series(ctx)}});
    CHECK(z.terms().empty());
}

TEST_CASE("P_c has the stated shape and constant zeros") {
    auto ctx = c1_ctx();
    PcSystem pc = make_pc(ctx, 1);
    CHECK(pc.p.order() == 1);
    CHECK(pc.p.terms().size() == 4);
    CHECK(pc.p.eval(Series(ctx)).empty());
    CHECK(pc.p.eval(Series::constant(ctx, -1)).empty());
    // a generic constant is not a zero
    CHECK_FALSE(pc.p.eval(Series::constant(ctx, 3)).empty());
    CHECK_THROWS_AS(make_pc(ctx, 0), NonPositiveC);
    CHECK_THROWS_AS(make_pc(ctx, -2), NonPositiveC);
}

TEST_CASE("find_exp_generator matches the display rate or the logderiv") {
    auto ctx = c1_ctx();
    CHECK(find_exp_generator(ctx, 1) == 0);
    CHECK_THROWS_AS(find_exp_generator(ctx, 2), PreconditionFailed);
    // recognized by constant logderiv alone when the display is plain
    auto plain = GeneratorContext::create({{"E", 1, {}}, {"X", 1, {}}});
    plain->set_logderiv(0, Series::constant(plain, Rational(-1, 2)));
    plain->set_logderiv(1, -Series::generator(plain, 1));
    CHECK(find_exp_generator(plain, 1) == 0);
}

TEST_CASE("leading_from_a takes the signed (c+1)-th root") {
    auto ctx = c1_ctx();
    auto [b, m] = leading_from_a(ctx, 4, 1);
    CHECK(b == 2);
    CHECK(m == Monomial::generator(ctx, 0, -1));
    auto ctx2 = make_transseries_context(2);
    auto [b2, m2] = leading_from_a(ctx2, -8, 2);
    CHECK(b2 == -2);
    CHECK(m2 == Monomial::generator(ctx2, 0, -1));
    CHECK_THROWS_AS(leading_from_a(ctx, 2, 1), IrrationalRoot);
    CHECK_THROWS_AS(leading_from_a(ctx, 0, 1), PreconditionFailed);
}

TEST_CASE("solve_pc at c = 1 matches the quadratic-formula oracle") {
    auto ctx = c1_ctx();
    for (Rational N : {Rational(4), Rational(8)}) {
        Series y = solve_pc(ctx, 1, 1, N);
        CHECK(y.known_below().is_finite());
        CHECK(y.known_below().covers(N));
        CHECK(same_terms(y.truncate(N), quadratic_oracle(ctx, N).truncate(N)));
        // direct zero check: P_1(y) vanishes below the bound
        Series resid = make_pc(ctx, 1).p.eval(y);
        CHECK(resid.empty());
        CHECK(resid.known_below().is_finite());
    }
    // b = -1 picks the mirror root: the two roots of y^2 + y = e^x sum to -1
    Series yp = solve_pc(ctx, 1, 1, 6);
    Series ym = solve_pc(ctx, 1, -1, 6);
    CHECK(same_terms(yp + ym, Series::constant(ctx, -1)));
}

TEST_CASE("solve_pc zeros across c and b") {
    for (Rational c : {Rational(1, 2), Rational(2), Rational(3)}) {
        auto ctx = make_transseries_context(c);
        PcSystem pc = make_pc(ctx, c);
        for (Rational b : {Rational(1), Rational(-1), Rational(2), Rational(1, 3)}) {
            Series y = solve_pc(ctx, c, b, 6);
            auto [lc, lm] = y.leading_term();
            CHECK(lc == b);
            CHECK(lm == Monomial::generator(ctx, 0, -1));
            Series resid = pc.p.eval(y);
            CHECK(resid.empty());
            CHECK(resid.known_below().is_finite());
            // first-order form: y' * den(y) = num(y) below the bound
            Series flow = derive(y) * pc.r_den.eval(y) - pc.r_num.eval(y);
            CHECK(flow.empty());
        }
    }
}

TEST_CASE("u_check certifies U(y) = a e^x") {
    auto ctx = c1_ctx();
    Series y = solve_pc(ctx, 1, 2, 8);
    auto rep = u_check(y, 1, 8);
    CHECK(rep.residual.empty());
    CHECK(rep.residual.known_below().is_finite());
    REQUIRE(rep.a.has_value());
    CHECK(*rep.a == 4); // a = b^(c+1)
    CHECK(rep.u_is_multiple_of_ex);

    // a perturbed series fails the certificate
    Series bad = y + E_pow(ctx, 2, Rational(1, 3));
    auto brep = u_check(bad, 1, 8);
    CHECK_FALSE(brep.residual.empty());
    CHECK_FALSE(brep.u_is_multiple_of_ex);

    CHECK_THROWS_AS(u_check(Series(ctx), 1, 4), DegenerateY);
    CHECK_THROWS_AS(u_check(Series::constant(ctx, -1), 1, 4), DegenerateY);
}

TEST_CASE("u_check recovers a for the negative branch") {
    auto ctx2 = make_transseries_context(2);
    Series y = solve_pc(ctx2, 2, -2, 6);
    auto rep = u_check(y, 2, 6);
    CHECK(rep.residual.empty());
    REQUIRE(rep.a.has_value());
    CHECK(*rep.a == -8); // sign(y) * |b|^(c+1) with b = -2, c = 2
    CHECK(rep.u_is_multiple_of_ex);
}
