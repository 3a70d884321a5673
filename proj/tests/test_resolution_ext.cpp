#include "doctest.h"

#include "jokerlab/builtins.hpp"
#include "jokerlab/ext.hpp"
#include "jokerlab/resolution.hpp"

using namespace jokerlab;

TEST_SUITE("resolution_ext") {

TEST_CASE("Betti numbers over the quaternion group repeat with period four") {
    FiniteField f4 = FiniteField::f4();
    FreeResolution res = minimal_resolution(f4, make_q8(), 8);
    CHECK(res.ranks == std::vector<std::size_t>{1, 2, 2, 1, 1, 2, 2, 1, 1});
    CHECK_NOTHROW(verify_resolution(res));
    // Differentials compose to zero and entries are radical: re-check one stage
    // by hand through the copy augmentation.
    CHECK((copy_augmentation(res, 0) * res.differentials[0]).is_zero());
}

TEST_CASE("Betti numbers over the Klein four-group grow linearly") {
    FreeResolution res = minimal_resolution(FiniteField::f4(), make_klein4(), 5);
    CHECK(res.ranks == std::vector<std::size_t>{1, 2, 3, 4, 5, 6});
    CHECK_NOTHROW(verify_resolution(res));
}

TEST_CASE("resolutions over the prime field match") {
    FreeResolution res = minimal_resolution(FiniteField::f2(), make_q8(), 4);
    CHECK(res.ranks == std::vector<std::size_t>{1, 2, 2, 1, 1});
}

TEST_CASE("degree-1 classes are homomorphisms to the field") {
    FiniteField f4 = FiniteField::f4();
    FiniteGroup q8 = make_q8();
    ExtRing ext(minimal_resolution(f4, q8, 8));
    auto [u, v] = ext.generators_uv();
    CHECK(ext.evaluate_degree1(u, q8.index_of("i")) == f4.one());
    CHECK(ext.evaluate_degree1(u, q8.index_of("j")) == f4.zero());
    CHECK(ext.evaluate_degree1(v, q8.index_of("i")) == f4.zero());
    CHECK(ext.evaluate_degree1(v, q8.index_of("j")) == f4.one());
    CHECK(ext.evaluate_degree1(u, q8.index_of("k")) == f4.one());
    CHECK(ext.evaluate_degree1(v, q8.index_of("k")) == f4.one());
    CHECK(ext.evaluate_degree1(u, q8.index_of("-1")) == f4.zero());
}

TEST_CASE("the cohomology ring relations of the quaternion group") {
    FiniteField f4 = FiniteField::f4();
    ExtRing ext(minimal_resolution(f4, make_q8(), 8));
    auto [u, v] = ext.generators_uv();
    CohomClass uu = ext.cup(u, u), uv = ext.cup(u, v), vv = ext.cup(v, v);
    CHECK(uv.coeffs == ext.cup(v, u).coeffs);  // commutative in even context
    CHECK(ext.is_zero(ext.add(ext.add(uu, uv), vv)));
    CHECK(ext.is_zero(ext.cup(uu, u)));
    CHECK(ext.is_zero(ext.cup(vv, v)));
    CHECK(ext.is_zero(ext.add(ext.cup(uu, v), ext.cup(u, vv))));
    CHECK(!ext.is_zero(uu));
    CHECK(!ext.is_zero(uv));
    CHECK(!ext.is_zero(vv));
    // Associativity spot checks of the Yoneda product.
    CHECK(ext.cup(ext.cup(u, v), v).coeffs == ext.cup(u, ext.cup(v, v)).coeffs);
    CHECK(ext.cup(ext.cup(u, u), v).coeffs == ext.cup(u, ext.cup(u, v)).coeffs);
}

TEST_CASE("the periodicity class in degree four is central and nonnilpotent") {
    FiniteField f4 = FiniteField::f4();
    ExtRing ext(minimal_resolution(f4, make_q8(), 8));
    auto [u, v] = ext.generators_uv();
    CohomClass p4 = ext.make_class(4, {f4.one()});
    CHECK(!ext.is_zero(ext.cup(p4, p4)));
    CHECK(ext.cup(p4, u).coeffs == ext.cup(u, p4).coeffs);
    CHECK(ext.cup(p4, v).coeffs == ext.cup(v, p4).coeffs);
}

TEST_CASE("the triple bracket of the degree-1 conjugate pair") {
    FiniteField f4 = FiniteField::f4();
    ExtRing ext(minimal_resolution(f4, make_q8(), 8));
    auto [u, v] = ext.generators_uv();
    FieldElement w = f4.omega(), w2 = f4.omega2();
    CohomClass a = ext.add(u, ext.scale(w2, v));  // u + w2 v
    CohomClass b = ext.add(u, ext.scale(w, v));   // u + w v
    REQUIRE(ext.is_zero(ext.cup(a, b)));
    REQUIRE(ext.is_zero(ext.cup(b, a)));

    ExtRing::Massey m = ext.massey_triple(a, b, a);
    REQUIRE(m.indeterminacy.size() == 1);
    CohomClass uu = ext.cup(u, u), vv = ext.cup(v, v);
    // Indeterminacy is the line through u^2 + w v^2.
    CohomClass gen = ext.add(uu, ext.scale(w, vv));
    Matrix span(f4, 2, 1);
    span.set(0, 0, m.indeterminacy[0].coeffs[0]);
    span.set(1, 0, m.indeterminacy[0].coeffs[1]);
    Matrix x(f4, 2, 1);
    x.set(0, 0, gen.coeffs[0]);
    x.set(1, 0, gen.coeffs[1]);
    CHECK(in_column_span(span, x));
    // The bracket contains (u + w v)^2 = u^2 + w2 v^2.
    CohomClass sq = ext.cup(b, b);
    CHECK(sq.coeffs == ext.add(uu, ext.scale(w2, vv)).coeffs);
    CHECK(ext.massey_contains(m, sq));
    // The full coset has four elements including the square.
    auto elems = ext.massey_elements(m);
    CHECK(elems.size() == 4);
    bool found = false;
    for (const CohomClass& e : elems) found = found || e.coeffs == sq.coeffs;
    CHECK(found);
}

TEST_CASE("re-chosen nullhomotopies reproduce the bracket exactly") {
    FiniteField f4 = FiniteField::f4();
    ExtRing ext(minimal_resolution(f4, make_q8(), 8));
    auto [u, v] = ext.generators_uv();
    CohomClass a = ext.add(u, ext.scale(f4.omega2(), v));
    CohomClass b = ext.add(u, ext.scale(f4.omega(), v));
    ExtRing::Massey m = ext.massey_triple(a, b, a);
    for (unsigned variant : {1u, 2u}) {
        ExtRing::Massey again = ext.massey_triple(a, b, a, variant);
        CHECK(again.representative.coeffs == m.representative.coeffs);
        REQUIRE(again.indeterminacy.size() == 1);
        CHECK(again.indeterminacy[0].coeffs == m.indeterminacy[0].coeffs);
    }
}

TEST_CASE("the companion bracket contains the other square") {
    FiniteField f4 = FiniteField::f4();
    ExtRing ext(minimal_resolution(f4, make_q8(), 8));
    auto [u, v] = ext.generators_uv();
    CohomClass a = ext.add(u, ext.scale(f4.omega2(), v));
    CohomClass b = ext.add(u, ext.scale(f4.omega(), v));
    ExtRing::Massey mc = ext.massey_triple(b, a, b);
    CHECK(ext.massey_contains(mc, ext.cup(a, a)));
    CHECK(mc.indeterminacy.size() == 1);
}

TEST_CASE("degenerate and undefined brackets") {
    FiniteField f4 = FiniteField::f4();
    ExtRing ext(minimal_resolution(f4, make_q8(), 8));
    auto [u, v] = ext.generators_uv();
    ExtRing::Massey mz = ext.massey_triple(u, ext.zero_class(1), u);
    CHECK(ext.massey_contains(mz, ext.zero_class(2)));
    CHECK_THROWS_AS(ext.massey_triple(u, u, u), Error);  // u^2 != 0
}

}  // TEST_SUITE
