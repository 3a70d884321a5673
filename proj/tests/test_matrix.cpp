#include "doctest.h"

#include "jokerlab/matrix.hpp"

using namespace jokerlab;

namespace {
Matrix mat(const FiniteField& f, std::string text) {
    for (char& c : text)
        if (c == ';') c = '\n';
    return Matrix::parse_text(f, text);
}
}  // namespace

TEST_SUITE("matrix") {

TEST_CASE("text round trip") {
    FiniteField f4 = FiniteField::f4();
    Matrix m = mat(f4, "1 w 0; 0 w2 1");
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 3);
    CHECK(m.at(0, 1) == f4.omega());
    CHECK(Matrix::parse_text(f4, m.to_text()) == m);
    CHECK_THROWS_AS(mat(f4, "1 w; 0"), Error);  // ragged rows
    CHECK_THROWS_AS(mat(f4, "1 q"), Error);     // bad token
}

TEST_CASE("arithmetic and identities") {
    FiniteField f4 = FiniteField::f4();
    Matrix a = mat(f4, "1 w; 0 1");
    Matrix b = mat(f4, "1 w2; 0 1");
    CHECK(a * b == mat(f4, "1 1; 0 1"));  // w + w2 = 1
    CHECK(a + a == Matrix(f4, 2, 2));
    CHECK((a * Matrix::identity(f4, 2)) == a);
    CHECK(a.scaled(f4.omega()) == mat(f4, "w w2; 0 w"));
    CHECK(a.transpose() == mat(f4, "1 0; w 1"));
    CHECK(Matrix::identity(f4, 3).is_identity());
    CHECK(Matrix(f4, 2, 3).is_zero());
}

TEST_CASE("row reduction, rank, kernel") {
    FiniteField f4 = FiniteField::f4();
    Matrix m = mat(f4, "1 w w2; 0 1 1; 1 0 w2");  // row3 = row1 + w * row2
    CHECK(m.rank() == 2);
    Rref r = m.rref();
    CHECK(r.rank == 2);
    CHECK(r.pivot_cols == std::vector<std::size_t>{0, 1});
    Matrix ker = m.kernel_basis();
    CHECK(ker.cols() == 1);
    CHECK((m * ker).is_zero());
}

TEST_CASE("solve and inverse") {
    FiniteField f4 = FiniteField::f4();
    Matrix a = mat(f4, "1 w; w2 0");
    auto inv = a.inverse();
    REQUIRE(inv.has_value());
    CHECK((a * *inv).is_identity());
    CHECK((*inv * a).is_identity());
    Matrix rhs = mat(f4, "w2; 1");
    auto x = a.solve(rhs);
    REQUIRE(x.has_value());
    CHECK(a * *x == rhs);
    Matrix singular = mat(f4, "1 1; 1 1");
    CHECK(!singular.inverse().has_value());
    CHECK(!singular.solve(mat(f4, "1; 0")).has_value());
    CHECK(singular.solve(mat(f4, "1; 1")).has_value());
}

TEST_CASE("concatenation and column span") {
    FiniteField f4 = FiniteField::f4();
    Matrix a = mat(f4, "1; 0");
    Matrix b = mat(f4, "w; 1");
    Matrix ab = hcat(a, b);
    CHECK(ab.cols() == 2);
    CHECK(ab.rank() == 2);
    CHECK(vcat(a, b).rows() == 4);
    CHECK(in_column_span(ab, mat(f4, "w2; w")));
    Matrix narrow = mat(f4, "1; 1");
    CHECK(in_column_span(narrow, mat(f4, "w; w")));
    CHECK(!in_column_span(narrow, mat(f4, "1; 0")));
    Matrix basis = column_space_basis(mat(f4, "1 w 0; 1 w 1"));
    CHECK(basis.cols() == 2);
}

TEST_CASE("kronecker product respects multiplication") {
    FiniteField f4 = FiniteField::f4();
    Matrix a = mat(f4, "1 w; 0 1");
    Matrix b = mat(f4, "w2 0; 1 1");
    Matrix c = mat(f4, "1 1; w 0");
    Matrix d = mat(f4, "0 w; 1 w2");
    CHECK(kronecker(a * c, b * d) == kronecker(a, b) * kronecker(c, d));
    CHECK(kronecker(Matrix::identity(f4, 2), Matrix::identity(f4, 3)).is_identity());
}

TEST_CASE("submatrix and column access") {
    FiniteField f4 = FiniteField::f4();
    Matrix m = mat(f4, "1 w w2; 0 1 1; 1 0 w2");
    CHECK(m.submatrix(0, 1, 2, 2) == mat(f4, "w w2; 1 1"));
    CHECK(m.column(2) == mat(f4, "w2; 1; w2"));
}

}  // TEST_SUITE
