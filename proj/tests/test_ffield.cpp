#include "doctest.h"

#include "jokerlab/ffield.hpp"

using namespace jokerlab;

TEST_SUITE("ffield") {

TEST_CASE("omega arithmetic in the degree-2 field") {
    FiniteField f4 = FiniteField::f4();
    CHECK(f4.size() == 4);
    CHECK(f4.omega() * f4.omega() == f4.omega2());
    CHECK(f4.omega() * f4.omega2() == f4.one());
    CHECK(f4.omega() + f4.one() == f4.omega2());
    CHECK(f4.omega() + f4.omega2() == f4.one());
    CHECK(f4.omega().pow(3) == f4.one());
    CHECK(f4.omega().pow(-1) == f4.omega2());
}

TEST_CASE("multiplicative group is cyclic generated by omega") {
    FiniteField f4 = FiniteField::f4();
    FieldElement w = f4.omega();
    std::vector<FieldElement> seen{f4.one()};
    FieldElement cur = f4.one();
    for (int i = 0; i < 2; ++i) {
        cur = cur * w;
        for (const FieldElement& s : seen) CHECK(cur != s);
        seen.push_back(cur);
    }
    CHECK(cur * w == f4.one());
}

TEST_CASE("token rendering and parsing") {
    FiniteField f4 = FiniteField::f4();
    for (const char* tok : {"0", "1", "w", "w2"}) {
        CHECK(f4.parse(tok).str() == tok);
    }
    CHECK(f4.parse("w") == f4.omega());
    CHECK_THROWS_AS(f4.parse("q"), Error);
    FiniteField f2 = FiniteField::f2();
    CHECK(f2.parse("1").is_one());
    CHECK_THROWS_AS(f2.parse("w"), Error);
}

TEST_CASE("exhaustive field laws over f2 and f4") {
    for (const FiniteField& f : {FiniteField::f2(), FiniteField::f4()}) {
        std::vector<FieldElement> all = f.elements();
        CHECK(all.size() == f.size());
        for (const FieldElement& a : all) {
            CHECK(a + f.zero() == a);
            CHECK(a * f.one() == a);
            CHECK(a + a == f.zero());
            CHECK(a - a == f.zero());
            CHECK(a.frobenius() == a * a);
            if (!a.is_zero()) {
                CHECK(a * a.inverse() == f.one());
                CHECK(a / a == f.one());
            }
        }
        for (const FieldElement& a : all)
            for (const FieldElement& b : all) {
                CHECK(a + b == b + a);
                CHECK(a * b == b * a);
                CHECK((a + b).frobenius() == a.frobenius() + b.frobenius());
                for (const FieldElement& c : all) {
                    CHECK((a + b) + c == a + (b + c));
                    CHECK((a * b) * c == a * (b * c));
                    CHECK(a * (b + c) == a * b + a * c);
                }
            }
    }
}

TEST_CASE("frobenius is a field automorphism of order dividing the degree") {
    FiniteField f4 = FiniteField::f4();
    for (const FieldElement& a : f4.elements()) {
        CHECK(a.frobenius().frobenius() == a);
        for (const FieldElement& b : f4.elements())
            CHECK((a * b).frobenius() == a.frobenius() * b.frobenius());
    }
    CHECK(f4.omega().frobenius() == f4.omega2());
}

TEST_CASE("zero has no inverse") {
    FiniteField f4 = FiniteField::f4();
    CHECK_THROWS_AS(f4.zero().inverse(), Error);
}

}  // TEST_SUITE
