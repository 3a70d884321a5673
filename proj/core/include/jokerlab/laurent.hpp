#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jokerlab/ffield.hpp"

namespace jokerlab {

/* Laurent polynomial in one variable u over a finite field.  Terms are kept
 * sparse; no zero coefficients are stored, so the zero polynomial is the
 * empty term map.  Token syntax, used by parse and str: a sum of terms
 * joined by '+', each term "c", "u", "u^e" or "c*u^e" with c a field token
 * and e a (possibly negative) integer, e.g. "w*u^-1+u^3". */
class LaurentElement {
public:
    explicit LaurentElement(FiniteField field);  // zero
    static LaurentElement monomial(const FieldElement& coeff, long exp);
    static LaurentElement constant(const FieldElement& coeff);
    static LaurentElement u_power(const FiniteField& field, long exp);
    static LaurentElement parse(const FiniteField& field, std::string_view text);

    FiniteField field() const { return field_; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monomial() const { return coeffs_.size() == 1; }
    FieldElement coeff(long exp) const;
    /* Terms in ascending exponent order. */
    std::vector<std::pair<long, FieldElement>> terms() const;

    LaurentElement operator+(const LaurentElement& rhs) const;
    LaurentElement operator-(const LaurentElement& rhs) const;  // equals + in char 2
    LaurentElement operator*(const LaurentElement& rhs) const;
    bool operator==(const LaurentElement& rhs) const;
    bool operator!=(const LaurentElement& rhs) const { return !(*this == rhs); }

    LaurentElement scaled(const FieldElement& c) const;
    LaurentElement shifted(long exp) const;  // multiply by u^exp

    std::string str() const;

private:
    void add_term(long exp, unsigned bits);

    FiniteField field_;
    std::map<long, unsigned> coeffs_;  // exponent -> nonzero coefficient bits
};

/* Dense matrix with Laurent entries.  Columns are images, matching Matrix.
 * Text form: one row per line, entries separated by spaces (Laurent tokens
 * contain no spaces). */
class LaurentMatrix {
public:
    LaurentMatrix(FiniteField field, std::size_t rows, std::size_t cols);  // zero
    static LaurentMatrix identity(const FiniteField& field, std::size_t n);
    static LaurentMatrix parse_text(const FiniteField& field, std::string_view text);

    FiniteField field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const LaurentElement& at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, const LaurentElement& value);

    LaurentMatrix operator+(const LaurentMatrix& rhs) const;
    LaurentMatrix operator*(const LaurentMatrix& rhs) const;
    bool operator==(const LaurentMatrix& rhs) const;
    bool operator!=(const LaurentMatrix& rhs) const { return !(*this == rhs); }

    LaurentMatrix scaled(const LaurentElement& c) const;
    LaurentMatrix column(std::size_t c) const;
    bool is_zero() const;

    std::string to_text() const;

private:
    FiniteField field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<LaurentElement> entries_;
};

}  // namespace jokerlab
