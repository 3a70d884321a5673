#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "jokerlab/ffield.hpp"

namespace jokerlab {

struct Rref;

/* Dense matrix over a FiniteField, row major.  All row reduction is
 * deterministic: pivots are the first nonzero entry in column order. */
class Matrix {
public:
    Matrix(FiniteField field, std::size_t rows, std::size_t cols);

    static Matrix identity(FiniteField field, std::size_t n);
    static Matrix from_rows(FiniteField field,
                            const std::vector<std::vector<FieldElement>>& rows);
    static Matrix parse_text(FiniteField field, const std::string& text);

    FiniteField field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    FieldElement at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, const FieldElement& v);

    unsigned bits_at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
    void set_bits(std::size_t r, std::size_t c, unsigned bits);

    Matrix operator+(const Matrix& rhs) const;
    Matrix operator*(const Matrix& rhs) const;
    Matrix scaled(const FieldElement& s) const;
    bool operator==(const Matrix& rhs) const;
    bool operator!=(const Matrix& rhs) const { return !(*this == rhs); }

    bool is_zero() const;
    bool is_identity() const;
    Matrix transpose() const;

    Rref rref() const;
    std::size_t rank() const;

    /* Columns form a basis of the right kernel. */
    Matrix kernel_basis() const;

    /* One solution X of this * X = rhs, free variables set to zero. */
    std::optional<Matrix> solve(const Matrix& rhs) const;
    std::optional<Matrix> inverse() const;

    Matrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    Matrix column(std::size_t c) const;

    std::string to_text() const;

private:
    void require_same_field(const Matrix& rhs) const;
    FiniteField field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint8_t> e_;
};

/* Row reduction result: reduced row echelon form, pivot columns, rank. */
struct Rref {
    Matrix reduced;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank;
};

Matrix kronecker(const Matrix& a, const Matrix& b);
Matrix hcat(const Matrix& a, const Matrix& b);
Matrix vcat(const Matrix& a, const Matrix& b);

/* Basis of the intersection-free column span: returns a matrix whose columns
 * are a deterministic echelon basis of the column space of m. */
Matrix column_space_basis(const Matrix& m);

/* True when v (a column) lies in the column span of basis. */
bool in_column_span(const Matrix& basis, const Matrix& v);

}  // namespace jokerlab
