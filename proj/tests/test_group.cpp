#include "doctest.h"

#include "jokerlab/group.hpp"

using namespace jokerlab;

TEST_SUITE("group") {

TEST_CASE("quaternion group structure") {
    FiniteGroup q8 = make_q8();
    CHECK(q8.order() == 8);
    CHECK(q8.label() == "q8");
    std::size_t i = q8.index_of("i"), j = q8.index_of("j"), k = q8.index_of("k");
    CHECK(q8.name_of(q8.mul(i, j)) == "k");
    CHECK(q8.name_of(q8.mul(j, i)) == "-k");
    CHECK(q8.name_of(q8.mul(i, i)) == "-1");
    CHECK(q8.name_of(q8.mul(j, j)) == "-1");
    CHECK(q8.name_of(q8.mul(k, k)) == "-1");
    CHECK(q8.element_order(i) == 4);
    CHECK(q8.element_order(q8.index_of("-1")) == 2);
    CHECK(q8.inverse(i) == q8.index_of("-i"));
    CHECK(!q8.is_abelian());
    CHECK(q8.is_2_group());
    CHECK(q8.center() == std::vector<std::size_t>{0, q8.index_of("-1")});
}

TEST_CASE("the unique elementary abelian subgroup of the quaternion group") {
    FiniteGroup q8 = make_q8();
    auto subs = elementary_abelian_subgroups(q8, 2);
    REQUIRE(subs.size() == 1);
    CHECK(subs[0].order() == 2);
    CHECK(subs[0].contains(q8.index_of("-1")));
}

TEST_CASE("small groups") {
    CHECK(make_c3().order() == 3);
    CHECK(make_c3().is_abelian());
    CHECK(make_cyclic(5).order() == 5);
    CHECK(make_cyclic(5).element_order(1) == 5);
    FiniteGroup klein = make_klein4();
    CHECK(klein.order() == 4);
    for (std::size_t g = 1; g < 4; ++g) CHECK(klein.element_order(g) == 2);
    auto klein_subs = elementary_abelian_subgroups(klein, 2);
    CHECK(klein_subs.size() == 4);  // three lines and the whole group
}

TEST_CASE("the 24-element group is the cube-root extension of the quaternions") {
    G24 g24 = make_g24();
    CHECK(g24.group.order() == 24);
    CHECK(g24.group.label() == "g24");
    CHECK(g24.q8.order() == 8);
    CHECK(g24.q8.is_normal());
    CHECK(g24.c3.order() == 3);
    CHECK(g24.c3.members() == std::vector<std::size_t>{0, 8, 16});
    std::size_t w = g24.group.index_of("w");
    CHECK(g24.group.element_order(w) == 3);
    CHECK(g24.group.name_of(g24.group.conjugate(w, g24.group.index_of("i"))) == "j");
    CHECK(g24.group.name_of(g24.group.conjugate(w, g24.group.index_of("j"))) == "k");
    CHECK(g24.group.name_of(g24.group.conjugate(w, g24.group.index_of("k"))) == "i");
}

TEST_CASE("double cosets of the cube-root subgroup partition the group 3+3+9+9") {
    G24 g24 = make_g24();
    auto dcs = double_cosets(g24.group, g24.c3);
    REQUIRE(dcs.size() == 4);
    CHECK(dcs[0].elements.size() == 3);
    CHECK(dcs[1].elements.size() == 3);
    CHECK(dcs[2].elements.size() == 9);
    CHECK(dcs[3].elements.size() == 9);
    std::vector<bool> seen(24, false);
    for (const DoubleCoset& d : dcs)
        for (std::size_t g : d.elements) {
            CHECK(!seen[g]);
            seen[g] = true;
        }
    for (bool s : seen) CHECK(s);
}

TEST_CASE("left cosets are ordered by least representative") {
    G24 g24 = make_g24();
    auto cosets = left_cosets(g24.group, g24.c3);
    REQUIRE(cosets.size() == 8);
    for (std::size_t c = 0; c < 8; ++c) {
        CHECK(cosets[c].representative == c);
        CHECK(cosets[c].elements.size() == 3);
    }
}

TEST_CASE("subgroup reindexing preserves products") {
    G24 g24 = make_g24();
    Subgroup::AsGroup sub = g24.q8.as_group();
    CHECK(sub.group.order() == 8);
    for (std::size_t a = 0; a < 8; ++a)
        for (std::size_t b = 0; b < 8; ++b)
            CHECK(sub.to_parent[sub.group.mul(a, b)] ==
                  g24.group.mul(sub.to_parent[a], sub.to_parent[b]));
}

TEST_CASE("centralizers inside a subgroup") {
    FiniteGroup q8 = make_q8();
    Subgroup whole(q8, {0, 1, 2, 3, 4, 5, 6, 7});
    Subgroup c = centralizer_in(whole, q8.index_of("i"));
    CHECK(c.order() == 4);  // <i>
    CHECK(c.contains(q8.index_of("i")));
    CHECK(!c.contains(q8.index_of("j")));
}

TEST_CASE("malformed tables are rejected") {
    // A 2x2 "table" with a non-associative filling.
    CHECK_THROWS_AS(FiniteGroup::from_table("bad", {"1", "a", "b"},
                                            {{0, 1, 2}, {1, 0, 0}, {2, 0, 0}}, {}),
                    Error);
}

}  // TEST_SUITE
