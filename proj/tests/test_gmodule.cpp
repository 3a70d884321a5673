#include "doctest.h"

#include "jokerlab/builtins.hpp"
#include "jokerlab/gmodule.hpp"

using namespace jokerlab;

namespace {
Matrix mat(const FiniteField& f, std::string text) {
    for (char& c : text)
        if (c == ';') c = '\n';
    return Matrix::parse_text(f, text);
}
}  // namespace

TEST_SUITE("gmodule") {

TEST_CASE("construction verifies the action law exhaustively") {
    FiniteField f4 = FiniteField::f4();
    FiniteGroup q8 = make_q8();
    GModule reg = regular_module(f4, q8);
    for (std::size_t g = 0; g < 8; ++g)
        for (std::size_t h = 0; h < 8; ++h)
            CHECK(reg.rho(g) * reg.rho(h) == reg.rho(q8.mul(g, h)));
    // A family violating the law is rejected.
    std::vector<Matrix> bad(8, Matrix::identity(f4, 1));
    bad[q8.index_of("i")] = mat(f4, "w");  // i^4 = 1 forces order dividing 4; w has order 3
    CHECK_THROWS_AS(GModule(f4, q8, bad), Error);
}

TEST_CASE("module_from_action extends generators along the table") {
    FiniteField f4 = FiniteField::f4();
    FiniteGroup q8 = make_q8();
    GModule w3 = builtin_module("W3");
    GModule again = module_from_action(
        f4, q8,
        {{"i", w3.rho(q8.index_of("i"))}, {"j", w3.rho(q8.index_of("j"))}});
    for (std::size_t g = 0; g < 8; ++g) CHECK(again.rho(g) == w3.rho(g));
    // Inconsistent generator images are reported.
    CHECK_THROWS_AS(module_from_action(f4, q8,
                                       {{"i", mat(f4, "1 1; 0 1")},
                                        {"j", mat(f4, "1 0; 1 1")}}),
                    Error);
}

TEST_CASE("intertwiners are verified at construction") {
    GModule k1 = builtin_module("k");
    GModule w3 = builtin_module("W3");
    FiniteField f4 = k1.field();
    CHECK_NOTHROW(ModuleMap(k1, k1, Matrix::identity(f4, 1)));
    // The standard projection W3 -> k is not equivariant in these coordinates
    // unless it kills the radical; a random row is rejected.
    Matrix row(f4, 1, 3);
    row.set(0, 0, f4.one());
    row.set(0, 1, f4.one());
    CHECK_THROWS_AS(ModuleMap(w3, k1, row), Error);
}

TEST_CASE("tensor, dual, hom dimensions and laws") {
    GModule w3 = builtin_module("W3");
    GModule jp = builtin_module("Jprime");
    GModule t = tensor(w3, jp);
    CHECK(t.dim() == 15);
    GModule d = dual(w3);
    CHECK(d.dim() == 3);
    const FiniteGroup& q8 = w3.group();
    for (std::size_t g = 0; g < 8; ++g)
        CHECK(d.rho(g) == w3.rho(q8.inverse(g)).transpose());
    GModule h = hom_module(w3, jp);
    CHECK(h.dim() == 15);
    GModule s = direct_sum(w3, jp);
    CHECK(s.dim() == 8);
}

TEST_CASE("restriction to a subgroup") {
    GModule w3 = builtin_module("W3");
    const FiniteGroup& q8 = w3.group();
    Subgroup center(q8, {0, q8.index_of("-1")});
    GModule res = restrict_module(w3, center);
    CHECK(res.group().order() == 2);
    CHECK(res.dim() == 3);
    CHECK(res.rho(1) == w3.rho(q8.index_of("-1")));
}

TEST_CASE("stable subspaces give submodules and quotients") {
    GModule w3 = builtin_module("W3");
    FiniteField f4 = w3.field();
    Matrix fixed = fixed_point_basis(w3);
    REQUIRE(fixed.cols() == 1);
    SubmoduleResult sub = submodule_module(w3, fixed);
    CHECK(sub.module.dim() == 1);
    QuotientResult quot = quotient_module(w3, fixed);
    CHECK(quot.module.dim() == 2);
    // A non-stable subspace is rejected.
    Matrix unstable(f4, 3, 1);
    unstable.set(1, 0, f4.one());
    CHECK_THROWS_AS(submodule_module(w3, unstable), Error);
}

TEST_CASE("norm, radical, and fixed points of the regular module") {
    FiniteField f4 = FiniteField::f4();
    GModule reg = regular_module(f4, make_q8());
    CHECK(norm_matrix(reg).rank() == 1);
    CHECK(radical_subspace(reg).cols() == 7);
    CHECK(fixed_point_basis(reg).cols() == 1);
}

TEST_CASE("hom spaces between small modules") {
    GModule k1 = builtin_module("k");
    GModule w3 = builtin_module("W3");
    CHECK(hom_space(k1, k1).size() == 1);
    CHECK(hom_space(k1, w3).size() == 1);   // the fixed line
    CHECK(hom_space(w3, k1).size() == 1);   // the cofixed line
    for (const Matrix& m : hom_space(w3, w3)) {
        ModuleMap map(w3, w3, m);  // every basis element is a genuine intertwiner
        CHECK(map.matrix.rows() == 3);
    }
}

TEST_CASE("change of basis conjugates the action") {
    GModule w3 = builtin_module("W3");
    FiniteField f4 = w3.field();
    Matrix p = mat(f4, "1 1 0; 0 1 w; 0 0 1");
    GModule moved = change_basis(w3, p);
    auto pinv = p.inverse();
    REQUIRE(pinv.has_value());
    for (std::size_t g = 0; g < 8; ++g)
        CHECK(moved.rho(g) == p * w3.rho(g) * *pinv);
    CHECK_THROWS_AS(change_basis(w3, mat(f4, "1 1 0; 1 1 0; 0 0 1")), Error);
}

TEST_CASE("cyclic quotient builtins carry the dashed central action") {
    // dim 3, and rho(-1) - I has rank 1: the central element moves the bottom
    // class to the top one.
    for (const char* name : {"Mprime", "Mdoubleprime"}) {
        GModule m = builtin_module(name);
        CHECK(m.dim() == 3);
        const FiniteGroup& q8 = m.group();
        Matrix shifted = m.rho(q8.index_of("-1")) + Matrix::identity(m.field(), 3);
        CHECK(shifted.rank() == 1);
    }
}

}  // TEST_SUITE
