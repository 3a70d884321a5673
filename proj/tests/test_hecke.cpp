#include "doctest.h"

#include <string>
#include <vector>

#include "jokerlab/coaction.hpp"
#include "jokerlab/hecke.hpp"
#include "jokerlab/laurent.hpp"
#include "jokerlab/padic.hpp"

using namespace jokerlab;

namespace {

struct Fixture {
    FiniteField f4 = FiniteField::f4();
    GradedAlgebraAction act = g24_graded_action(FiniteField::f4());
    Subgroup c3 = Subgroup(act.group, {0, 8, 16});
    HeckeContext ctx = hecke_context(act, c3);
    std::vector<HeckeElement> basis = hecke_basis(ctx);
};

LaurentMatrix unit_column(const FiniteField& f4, std::size_t i) {
    LaurentMatrix v(f4, 3, 1);
    v.set(i, 0, LaurentElement::constant(f4.one()));
    return v;
}

}  // namespace

TEST_SUITE("hecke") {

TEST_CASE("Laurent token round trips and arithmetic") {
    FiniteField f4 = FiniteField::f4();
    for (std::string tok : {"0", "1", "w", "w2", "u", "u^3", "u^-1", "w*u^-1",
                            "w2*u^3", "w*u^-1+u^3", "1+u", "w2+w*u^2"}) {
        CHECK(LaurentElement::parse(f4, tok).str() == tok);
    }
    LaurentElement a = LaurentElement::parse(f4, "1+u");
    CHECK((a * a).str() == "1+u^2");
    CHECK((a + a).is_zero());
    CHECK(a.shifted(3).str() == "u^3+u^4");
    CHECK(a.scaled(f4.omega()).str() == "w+w*u");
    CHECK(LaurentElement::parse(f4, "u^2+w*u^2+w2*u^2").is_zero());
    CHECK(LaurentElement::u_power(f4, -2).coeff(-2).is_one());
    CHECK_THROWS_AS(LaurentElement::parse(f4, "u^x"), Error);
}

TEST_CASE("coefficient twists by the order-3 scalars") {
    Fixture fx;
    LaurentElement u = LaurentElement::u_power(fx.f4, 1);
    CHECK(twist(fx.act, 8, u).str() == "w2*u");
    CHECK(twist(fx.act, 8, LaurentElement::u_power(fx.f4, 3)).str() == "u^3");
    CHECK(twist(fx.act, 8, LaurentElement::u_power(fx.f4, -1)).str() == "w*u^-1");
    CHECK(twist(fx.act, 2, LaurentElement::parse(fx.f4, "w*u^-1+u^3")).str() ==
          "w*u^-1+u^3");
    CHECK(twist(fx.act, 16, u).str() == "w*u");
}

TEST_CASE("skew group ring products") {
    Fixture fx;
    const FiniteGroup& g24 = fx.act.group;
    LaurentElement u = LaurentElement::u_power(fx.f4, 1);
    SkewElement uw = skew_term(fx.act, u, 8);
    SkewElement sq = skew_product(fx.act, uw, uw);
    for (std::size_t g = 0; g < 24; ++g) {
        if (g == 16)
            CHECK(sq.coeffs[g].str() == "w2*u^2");
        else
            CHECK(sq.coeffs[g].is_zero());
    }
    std::size_t g = 10;  // w*i
    SkewElement one_g = skew_term(fx.act, LaurentElement::constant(fx.f4.one()), g);
    SkewElement one_ginv =
        skew_term(fx.act, LaurentElement::constant(fx.f4.one()), g24.inverse(g));
    CHECK(skew_equal(skew_product(fx.act, one_g, one_ginv),
                     skew_term(fx.act, LaurentElement::constant(fx.f4.one()), 0)));

    // With the trivial grading the skew ring is the plain group ring.
    FiniteGroup q8 = make_q8();
    GradedAlgebraAction triv = trivial_graded_action(fx.f4, q8);
    SkewElement di = skew_term(triv, LaurentElement::constant(fx.f4.one()), 2);
    SkewElement dj = skew_term(triv, LaurentElement::constant(fx.f4.one()), 4);
    SkewElement dk = skew_product(triv, di, dj);
    CHECK(dk.coeffs[6].coeff(0).is_one());  // i j = k
}

TEST_CASE("double-coset basis coefficients") {
    Fixture fx;
    REQUIRE(fx.ctx.cosets.size() == 8);
    for (std::size_t c = 0; c < 8; ++c) CHECK(fx.ctx.cosets[c].representative == c);
    REQUIRE(fx.basis.size() == 8);
    auto coeff_str = [&](std::size_t b, std::size_t c) {
        return fx.basis[b].coeffs[c].str();
    };
    CHECK(coeff_str(0, 0) == "1");
    for (std::size_t c = 1; c < 8; ++c) CHECK(fx.basis[0].coeffs[c].is_zero());
    CHECK(coeff_str(1, 1) == "1");
    CHECK(coeff_str(2, 2) == "1");
    CHECK(coeff_str(2, 4) == "1");
    CHECK(coeff_str(2, 6) == "1");
    CHECK(fx.basis[2].coeffs[0].is_zero());
    CHECK(fx.basis[2].coeffs[3].is_zero());
    CHECK(coeff_str(3, 3) == "1");
    CHECK(coeff_str(3, 5) == "1");
    CHECK(coeff_str(3, 7) == "1");
    CHECK(coeff_str(4, 2) == "u");
    CHECK(coeff_str(4, 4) == "w2*u");
    CHECK(coeff_str(4, 6) == "w*u");
    CHECK(coeff_str(5, 3) == "u");
    CHECK(coeff_str(5, 5) == "w2*u");
    CHECK(coeff_str(5, 7) == "w*u");
    CHECK(coeff_str(6, 2) == "u^-1");
    CHECK(coeff_str(6, 4) == "w*u^-1");
    CHECK(coeff_str(6, 6) == "w2*u^-1");
    CHECK(coeff_str(7, 3) == "u^-1");
    CHECK(coeff_str(7, 5) == "w*u^-1");
    CHECK(coeff_str(7, 7) == "w2*u^-1");
}

TEST_CASE("unit laws, the quadratic relation, and associativity") {
    Fixture fx;
    HeckeElement unit = hecke_unit(fx.ctx);
    for (const HeckeElement& b : fx.basis) {
        CHECK(hecke_equal(hecke_mul(fx.ctx, unit, b), b));
        CHECK(hecke_equal(hecke_mul(fx.ctx, b, unit), b));
    }
    HeckeElement sq = hecke_mul(fx.ctx, fx.basis[2], fx.basis[2]);
    HeckeElement expected =
        hecke_add(fx.ctx, fx.basis[1], hecke_add(fx.ctx, fx.basis[2], fx.basis[3]));
    CHECK(hecke_equal(sq, expected));

    bool assoc = true;
    for (const HeckeElement& a : fx.basis)
        for (const HeckeElement& b : fx.basis)
            for (const HeckeElement& c : fx.basis)
                assoc = assoc &&
                        hecke_equal(hecke_mul(fx.ctx, hecke_mul(fx.ctx, a, b), c),
                                    hecke_mul(fx.ctx, a, hecke_mul(fx.ctx, b, c)));
    CHECK(assoc);

    CHECK(!hecke_equal(hecke_mul(fx.ctx, fx.basis[4], fx.basis[6]),
                       hecke_mul(fx.ctx, fx.basis[6], fx.basis[4])));
}

TEST_CASE("products are independent of the coset transversal") {
    Fixture fx;
    std::vector<std::size_t> shifted;
    for (const Coset& c : fx.ctx.cosets)
        shifted.push_back(fx.act.group.mul(c.representative, 8));
    bool stable = true;
    for (const HeckeElement& a : fx.basis)
        for (const HeckeElement& b : fx.basis)
            stable = stable && hecke_equal(hecke_mul(fx.ctx, a, b),
                                           hecke_mul_over(fx.ctx, a, b, shifted));
    CHECK(stable);
}

TEST_CASE("action matrices on the graded fixed-point basis") {
    Fixture fx;
    G24FixedPointData data = g24_module_and_fixed_points(fx.f4);
    CHECK(data.fixed_basis == std::vector<std::size_t>{0, 1, 2});
    const char* displays[8] = {
        "1 0 0\n0 1 0\n0 0 1",     "1 0 u^3\n0 1 0\n0 0 1",
        "1 0 w*u^3\n0 1 0\n0 0 1", "1 0 w2*u^3\n0 1 0\n0 0 1",
        "0 u^3 0\n0 0 0\n0 0 0",   "0 u^3 0\n0 0 0\n0 0 0",
        "0 0 0\n0 0 1\n0 0 0",     "0 0 0\n0 0 1\n0 0 0"};
    for (std::size_t b = 0; b < 8; ++b) {
        LaurentMatrix got =
            hecke_action_matrix(fx.ctx, fx.basis[b], data.module, data.fixed_basis);
        CHECK(got == LaurentMatrix::parse_text(fx.f4, displays[b]));
    }
}

TEST_CASE("fixed points compose contravariantly, not covariantly") {
    Fixture fx;
    G24FixedPointData data = g24_module_and_fixed_points(fx.f4);
    bool contravariant = true, covariant = true;
    for (const HeckeElement& a : fx.basis)
        for (const HeckeElement& b : fx.basis) {
            HeckeElement ab = hecke_mul(fx.ctx, a, b);
            for (std::size_t i = 0; i < 3; ++i) {
                LaurentMatrix e = unit_column(fx.f4, i);
                LaurentMatrix lhs = hecke_act(fx.ctx, ab, data.module, e);
                contravariant =
                    contravariant &&
                    lhs == hecke_act(fx.ctx, b, data.module,
                                     hecke_act(fx.ctx, a, data.module, e));
                covariant = covariant &&
                            lhs == hecke_act(fx.ctx, a, data.module,
                                             hecke_act(fx.ctx, b, data.module, e));
            }
        }
    CHECK(contravariant);
    CHECK(!covariant);
}

TEST_CASE("unit action, transversal-charged windows, and degree bookkeeping") {
    Fixture fx;
    G24FixedPointData data = g24_module_and_fixed_points(fx.f4);
    for (std::size_t i = 0; i < 3; ++i) {
        LaurentMatrix e = unit_column(fx.f4, i);
        CHECK(hecke_act(fx.ctx, hecke_unit(fx.ctx), data.module, e) == e);
    }
    std::vector<std::size_t> shifted;
    for (const Coset& c : fx.ctx.cosets)
        shifted.push_back(fx.act.group.mul(c.representative, 8));
    // Charged windows feel the transversal; windowless elements do not.
    CHECK(hecke_act_over(fx.ctx, fx.basis[4], data.module, unit_column(fx.f4, 1),
                         shifted) !=
          hecke_act(fx.ctx, fx.basis[4], data.module, unit_column(fx.f4, 1)));
    CHECK(hecke_act_over(fx.ctx, fx.basis[2], data.module, unit_column(fx.f4, 2),
                         shifted) ==
          hecke_act(fx.ctx, fx.basis[2], data.module, unit_column(fx.f4, 2)));

    long windows[8] = {0, 0, 0, 0, 1, 1, -1, -1};
    for (std::size_t b = 0; b < 8; ++b)
        for (std::size_t i = 0; i < 3; ++i) {
            LaurentMatrix outv =
                hecke_act(fx.ctx, fx.basis[b], data.module, unit_column(fx.f4, i));
            for (std::size_t r = 0; r < 3; ++r) {
                LaurentElement entry = outv.at(r, 0);
                if (entry.is_zero()) continue;
                long expected =
                    (data.module.degrees[i] + 2 * windows[b] - data.module.degrees[r]) / 2;
                CHECK(entry.is_monomial());
                CHECK(entry.terms().front().first == expected);
            }
        }
}

TEST_CASE("double-coset action agrees with the basis action") {
    Fixture fx;
    G24FixedPointData data = g24_module_and_fixed_points(fx.f4);
    Subgroup q8sub(fx.act.group, {0, 1, 2, 3, 4, 5, 6, 7});
    for (std::size_t i = 0; i < 3; ++i) {
        LaurentMatrix e = unit_column(fx.f4, i);
        CHECK(double_coset_act(fx.ctx, q8sub, 1, data.module, e) ==
              graded_apply(data.module, 1, e));
        CHECK(double_coset_act(fx.ctx, q8sub, 2, data.module, e) ==
              hecke_act(fx.ctx, fx.basis[2], data.module, e));
        CHECK(double_coset_act(fx.ctx, q8sub, 3, data.module, e) ==
              hecke_act(fx.ctx, fx.basis[3], data.module, e));
        CHECK(double_coset_act(fx.ctx, q8sub, 0, data.module, e) == e);
    }
    CHECK_THROWS_AS(
        double_coset_act(fx.ctx, q8sub, 8, data.module, unit_column(fx.f4, 0)),
        Error);

    LaurentMatrix bad(fx.f4, 3, 1);
    bad.set(0, 0, LaurentElement::u_power(fx.f4, 1));
    CHECK_THROWS_AS(hecke_act(fx.ctx, fx.basis[0], data.module, bad), Error);
}

TEST_CASE("restriction to the quaternion subgroup matches the three-cell matrices") {
    Fixture fx;
    G24FixedPointData data = g24_module_and_fixed_points(fx.f4);
    Q8Embedding emb = q8_embed(8);
    CoactionSpec spec = builtin_coaction_spec("three_cell");
    for (std::size_t q = 0; q < 8; ++q) {
        Matrix want = coaction_matrix(spec, fx.f4, emb.images[q], ActionSide::right);
        CHECK(normalized_restriction_matrix(data.module, q) == want);
    }
    CHECK_THROWS_AS(normalized_restriction_matrix(data.module, 8), Error);
}

TEST_CASE("a normal subgroup gives the group ring of the quotient") {
    FiniteField f4 = FiniteField::f4();
    FiniteGroup q8 = make_q8();
    GradedAlgebraAction triv = trivial_graded_action(f4, q8);
    Subgroup center(q8, {0, 1});
    HeckeContext qctx = hecke_context(triv, center);
    std::vector<HeckeElement> qbasis = hecke_basis(qctx);
    REQUIRE(qbasis.size() == 4);
    FiniteGroup klein = make_klein4();
    // Cosets through reps 1, -1*... land on klein elements in listed order.
    for (std::size_t x = 0; x < 4; ++x)
        for (std::size_t y = 0; y < 4; ++y) {
            HeckeElement prod = hecke_mul(qctx, qbasis[x], qbasis[y]);
            CHECK(hecke_equal(prod, qbasis[klein.mul(x, y)]));
        }
}

TEST_CASE("the trivial subgroup recovers the full skew group ring") {
    Fixture fx;
    Subgroup one(fx.act.group, {0});
    HeckeContext tctx = hecke_context(fx.act, one);
    std::vector<HeckeElement> tbasis = hecke_basis(tctx);
    REQUIRE(tbasis.size() == 24);
    LaurentElement u = LaurentElement::u_power(fx.f4, 1);
    std::vector<LaurentElement> ca(24, LaurentElement(fx.f4));
    ca[8] = u;
    HeckeElement ha = hecke_element(tctx, ca);
    HeckeElement prod = hecke_mul(tctx, ha, ha);
    SkewElement sprod =
        skew_product(fx.act, skew_term(fx.act, u, 8), skew_term(fx.act, u, 8));
    for (std::size_t g = 0; g < 24; ++g) CHECK(prod.coeffs[g] == sprod.coeffs[g]);
}

TEST_CASE("inconsistent graded generator data is rejected") {
    Fixture fx;
    LaurentMatrix mi = LaurentMatrix::parse_text(fx.f4, "1 u^2 w*u^3\n0 1 u\n0 0 1");
    CHECK_THROWS_AS(graded_module_from_right_action(fx.act, {"z0", "z4", "z6"},
                                                    {0, 4, 6},
                                                    {{"i", mi}, {"j", mi}, {"w", mi}}),
                    Error);
}

}  // TEST_SUITE
