#include "doctest.h"

#include "jokerlab/padic.hpp"

using namespace jokerlab;

TEST_SUITE("padic") {

TEST_CASE("square root of -7 on the 1 mod 4 branch") {
    CHECK(hensel_sqrt(-7, 4) == 5);
    CHECK(hensel_sqrt(-7, 5) == 21);
    CHECK(hensel_sqrt(-7, 6) == 53);
    CHECK(hensel_sqrt(-7, 7) == 53);
    CHECK(hensel_sqrt(-7, 8) == 181);
    CHECK(hensel_sqrt(-7, 8) % 8 == 5);
    CHECK((hensel_sqrt(-7, 8) * hensel_sqrt(-7, 8)) % 256 == (256 - 7) % 256);
    // Each precision is the truncation of the next: one coherent 2-adic root.
    for (unsigned p = 4; p < 30; ++p)
        CHECK(hensel_sqrt(-7, p) == (hensel_sqrt(-7, 30) & ((1ull << p) - 1)));
}

TEST_CASE("square roots of other odd squares mod powers of two") {
    CHECK(hensel_sqrt(17, 8) % 4 == 1);
    CHECK((hensel_sqrt(17, 20) * hensel_sqrt(17, 20)) % (1 << 20) == 17);
    CHECK_THROWS_AS(hensel_sqrt(3, 8), Error);  // 3 is not a square mod 8
}

TEST_CASE("arithmetic in the unramified quadratic extension") {
    FiniteField f4 = FiniteField::f4();
    unsigned m = 8;
    Z4Element w = Z4Element::omega(m);
    Z4Element w2 = w * w;
    CHECK(w2 == Z4Element::teichmuller(m, f4.omega2()));
    CHECK(w * w2 == Z4Element::one(m));
    CHECK(w + w2 + Z4Element::one(m) == Z4Element::zero(m));
    Z4Element z(m, 5, 7);
    CHECK(z * z.inverse() == Z4Element::one(m));
    CHECK(z.sigma().sigma() == z);
    CHECK((z * z.sigma()).b() == 0);  // the norm is rational
    Z4Element t3 = Z4Element::from_int(m, 3);
    CHECK(t3 * t3.inverse() == Z4Element::one(m));
}

TEST_CASE("the ramified quadratic order with S squared equal to 2") {
    FiniteField f4 = FiniteField::f4();
    unsigned m = 8;
    O2Element s = O2Element::s(m);
    CHECK(s * s == O2Element::from_int(m, 2));
    O2Element zw = O2Element::from_z4(Z4Element::omega(m));
    CHECK(s * zw == O2Element::from_z4(Z4Element::omega(m).sigma()) * s);
    O2Element q(Z4Element(m, 3, 2), Z4Element(m, 1, 7));
    CHECK(q.is_unit());
    CHECK(q * q.inverse() == O2Element::one(m));
    CHECK(q.inverse() * q == O2Element::one(m));
    O2Element r(Z4Element(m, 5, 254), Z4Element(m, 9, 3));
    CHECK(q.galois() * r.galois() == (q * r).galois());
    CHECK((q * r).times_s().div_s() == q * r);
    CHECK(s * q == q.galois() * s);  // the galois twist is conjugation by S
}

TEST_CASE("divisibility by powers of the uniformizer") {
    unsigned m = 8;
    O2Element s = O2Element::s(m);
    CHECK((s * s * s).divisible_by_s_power(3));
    CHECK(!(s * s * s).divisible_by_s_power(4));
    CHECK(O2Element::from_int(m, 4).divisible_by_s_power(4));
    CHECK(!O2Element::from_int(m, 4).divisible_by_s_power(5));
}

TEST_CASE("digit expansions determine elements exactly") {
    FiniteField f4 = FiniteField::f4();
    unsigned m = 8;
    for (std::uint64_t xa : {0ull, 1ull, 5ull, 77ull})
        for (std::uint64_t yb : {0ull, 3ull, 9ull}) {
            O2Element e(Z4Element(m, xa, yb * 5 + 1), Z4Element(m, yb, xa + 2));
            auto digits = teichmuller_digits(f4, e, 2 * m);
            CHECK(from_teichmuller_digits(f4, m, digits) == e);
        }
}

TEST_CASE("quaternion embedding satisfies the defining relations") {
    FiniteField f4 = FiniteField::f4();
    Q8Embedding emb = q8_embed(8);
    std::size_t gi = emb.q8.index_of("i"), gj = emb.q8.index_of("j"),
                gk = emb.q8.index_of("k");
    O2Element mone = O2Element::one(8).negated();
    CHECK(emb.images[gi] * emb.images[gi] == mone);
    CHECK(emb.images[gj] * emb.images[gj] == mone);
    CHECK(emb.images[gk] * emb.images[gk] == mone);
    CHECK(emb.images[gi] * emb.images[gj] == emb.images[gk]);
    // The full multiplication table is respected.
    for (std::size_t g = 0; g < 8; ++g)
        for (std::size_t h = 0; h < 8; ++h)
            CHECK(emb.images[g] * emb.images[h] == emb.images[emb.q8.mul(g, h)]);
}

TEST_CASE("leading digits of the embedded generators") {
    FiniteField f4 = FiniteField::f4();
    Q8Embedding emb = q8_embed(8);
    auto di = teichmuller_digits(f4, emb.images[emb.q8.index_of("i")], 3);
    auto dj = teichmuller_digits(f4, emb.images[emb.q8.index_of("j")], 3);
    auto dk = teichmuller_digits(f4, emb.images[emb.q8.index_of("k")], 3);
    CHECK(di[0] == f4.one());
    CHECK(di[1] == f4.one());
    CHECK(di[2] == f4.omega());
    CHECK(dj[0] == f4.one());
    CHECK(dj[1] == f4.omega2());
    CHECK(dj[2] == f4.omega());
    CHECK(dk[0] == f4.one());
    CHECK(dk[1] == f4.omega());
    CHECK(dk[2] == f4.omega());
}

TEST_CASE("all eight images rebuild from sixteen digits") {
    FiniteField f4 = FiniteField::f4();
    Q8Embedding emb = q8_embed(8);
    for (const O2Element& g : emb.images) {
        auto digits = teichmuller_digits(f4, g, 16);
        CHECK(from_teichmuller_digits(f4, 8, digits) == g);
    }
}

TEST_CASE("conjugation by embedded elements fixes the residue field") {
    FiniteField f4 = FiniteField::f4();
    Q8Embedding emb = q8_embed(8);
    O2Element tw = O2Element::from_z4(Z4Element::teichmuller(8, f4.omega()));
    for (const O2Element& g : emb.images)
        CHECK((g * tw * g.inverse()).residue(f4) == f4.omega());
}

TEST_CASE("precision bounds are enforced") {
    CHECK_THROWS_AS(hensel_sqrt(-7, 3), Error);
    CHECK_THROWS_AS(hensel_sqrt(-7, 63), Error);
    CHECK_THROWS_AS(q8_embed(2), Error);
}

}  // TEST_SUITE
