#include "doctest.h"

#include "jokerlab/builtins.hpp"
#include "jokerlab/stable.hpp"
#include "jokerlab/truncated.hpp"

using namespace jokerlab;

namespace {

Matrix mat(const FiniteField& f, std::string text) {
    for (char& c : text)
        if (c == ';') c = '\n';
    return Matrix::parse_text(f, text);
}

}  // namespace

TEST_SUITE("truncated") {

TEST_CASE("entrywise multiplicative lifts fail the plain matrix law") {
    FiniteField f4 = FiniteField::f4();
    GModule w3 = builtin_module("W3");
    std::size_t gi = w3.group().index_of("i");
    Z4Matrix a0 = Z4Matrix::teichmuller_lift(8, w3.rho(gi));
    CHECK(!(a0 * a0 * a0 * a0 == Z4Matrix::identity(8, 3)));
    Z4Matrix a1 = Z4Matrix::teichmuller_lift(8, mat(f4, "1 0 0; 1 1 0; w 1 1"));
    CHECK(!(a1 * a1 * a1 * a1 == Z4Matrix::identity(8, 3)));
    // But they do satisfy it after reduction mod 2.
    Matrix r = a0.residue(f4);
    CHECK((r * r * r * r).is_identity());
}

TEST_CASE("module lift reduces back exactly and stays endotrivial") {
    FiniteField f4 = FiniteField::f4();
    GModule w3 = builtin_module("W3");
    TruncatedModule lift = teichmuller_module_lift(w3, 8);
    GModule red = reduction(lift, f4);
    for (std::size_t g = 0; g < 8; ++g) CHECK(red.rho(g) == w3.rho(g));
    CHECK(endotrivial_truncated(lift));
}

TEST_CASE("the truncated rank-5 module reduces to the stably invertible one") {
    FiniteField f4 = FiniteField::f4();
    TruncatedModule joker = truncated_joker_module(8);
    REQUIRE(joker.rho.size() == 8);
    CHECK(joker.rho[0].rows() == 5);
    GModule red = reduction(joker, f4);
    CHECK(red.dim() == 5);
    CHECK(module_iso(red, builtin_module("W5")).has_value());
    CHECK(endotrivial_truncated(joker));
}

TEST_CASE("truncated endotriviality verdicts") {
    FiniteGroup q8 = make_q8();
    CHECK(!endotrivial_truncated(truncated_regular(8, q8)));
    CHECK(endotrivial_truncated(truncated_trivial(8, q8, 1)));
    CHECK(!endotrivial_truncated(truncated_trivial(8, q8, 2)));
}

TEST_CASE("truncated matrix arithmetic basics") {
    Z4Matrix id = Z4Matrix::identity(8, 3);
    CHECK(id.is_identity());
    CHECK((id - id).is_zero());
    CHECK(id * id == id);
    Z4Matrix two = id.scaled_pow2(1);
    CHECK(two + two == id.scaled_pow2(2));
    // residue_of_quotient divides out an exact power of two.
    FiniteField f4 = FiniteField::f4();
    CHECK(two.residue(f4).is_zero());
    CHECK(two.residue_of_quotient(f4, 1).is_identity());
    CHECK_THROWS_AS(id.residue_of_quotient(f4, 1), Error);
}

TEST_CASE("the one-sided ideal generated by the nilpotent word is not free of its residue rank") {
    FiniteField f4 = FiniteField::f4();
    FiniteGroup q8 = make_q8();
    Q8Words words = q8_words(f4);
    TruncatedModule reg = truncated_regular(8, q8);
    Z4Matrix lx(8, 8, 8), ly(8, 8, 8);
    for (std::size_t g = 0; g < 8; ++g) {
        FieldElement cx = words.x.at(g, 0), cy = words.y.at(g, 0);
        if (!cx.is_zero()) lx = lx + reg.rho[g].scaled(Z4Element::teichmuller(8, cx));
        if (!cy.is_zero()) ly = ly + reg.rho[g].scaled(Z4Element::teichmuller(8, cy));
    }
    Z4Matrix e0(8, 8, 1);
    e0.set(0, 0, Z4Element::one(8));
    Z4Matrix xy = lx * (ly * e0);
    Z4Matrix span(8, 8, 8);
    for (std::size_t g = 0; g < 8; ++g) {
        Z4Matrix col = reg.rho[g] * xy;
        for (std::size_t r = 0; r < 8; ++r) span.set(r, g, col.at(r, 0));
    }
    CHECK(span.residue(f4).rank() == 3);
    CHECK(z4_minimal_generators(span) > 3);
}

}  // TEST_SUITE
