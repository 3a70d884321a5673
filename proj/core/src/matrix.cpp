#include "jokerlab/matrix.hpp"

#include <sstream>

#include "jokerlab/ffield_tables.hpp"

namespace jokerlab {

Matrix::Matrix(FiniteField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), e_(rows * cols, 0) {}

Matrix Matrix::identity(FiniteField field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.e_[i * n + i] = 1;
    return m;
}

Matrix Matrix::from_rows(FiniteField field,
                         const std::vector<std::vector<FieldElement>>& rows) {
    if (rows.empty()) return Matrix(field, 0, 0);
    std::size_t nc = rows.front().size();
    Matrix m(field, rows.size(), nc);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != nc) throw Error("ragged row list");
        for (std::size_t c = 0; c < nc; ++c) m.set(r, c, rows[r][c]);
    }
    return m;
}

Matrix Matrix::parse_text(FiniteField field, const std::string& text) {
    std::vector<std::vector<unsigned>> rows;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::istringstream toks(line);
        std::vector<unsigned> row;
        std::string tok;
        while (toks >> tok) row.push_back(field.parse(tok).bits());
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) return Matrix(field, 0, 0);
    std::size_t nc = rows.front().size();
    Matrix m(field, rows.size(), nc);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != nc)
            throw Error("matrix text has rows of unequal length");
        for (std::size_t c = 0; c < nc; ++c) m.e_[r * nc + c] = rows[r][c];
    }
    return m;
}

FieldElement Matrix::at(std::size_t r, std::size_t c) const {
    return field_.element(e_[r * cols_ + c]);
}

void Matrix::set(std::size_t r, std::size_t c, const FieldElement& v) {
    if (!(v.field() == field_)) throw Error("elements belong to different fields");
    e_[r * cols_ + c] = static_cast<std::uint8_t>(v.bits());
}

void Matrix::set_bits(std::size_t r, std::size_t c, unsigned bits) {
    e_[r * cols_ + c] = static_cast<std::uint8_t>(bits);
}

void Matrix::require_same_field(const Matrix& rhs) const {
    if (!(field_ == rhs.field_)) throw Error("matrices over different fields");
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    require_same_field(rhs);
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw Error("matrix addition shape mismatch");
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i)
        out.e_[i] = e_[i] ^ rhs.e_[i];  /* char 2: addition is xor of coefficient bits */
    return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    require_same_field(rhs);
    if (cols_ != rhs.rows_)
        throw Error("matrix product shape mismatch");
    const detail::FieldTables* t = field_.tables();
    Matrix out(field_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            unsigned a = e_[i * cols_ + k];
            if (!a) continue;
            const std::uint8_t* brow = &rhs.e_[k * rhs.cols_];
            std::uint8_t* orow = &out.e_[i * rhs.cols_];
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                orow[j] ^= t->multiply(a, brow[j]);
        }
    }
    return out;
}

Matrix Matrix::scaled(const FieldElement& s) const {
    if (!(s.field() == field_)) throw Error("elements belong to different fields");
    const detail::FieldTables* t = field_.tables();
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i)
        out.e_[i] = t->multiply(s.bits(), e_[i]);
    return out;
}

bool Matrix::operator==(const Matrix& rhs) const {
    return field_ == rhs.field_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ &&
           e_ == rhs.e_;
}

bool Matrix::is_zero() const {
    for (auto b : e_)
        if (b) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (e_[r * cols_ + c] != (r == c ? 1u : 0u)) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix out(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            out.e_[c * rows_ + r] = e_[r * cols_ + c];
    return out;
}

Rref Matrix::rref() const {
    Matrix m = *this;
    const detail::FieldTables* t = field_.tables();
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols_ && lead < rows_; ++col) {
        std::size_t piv = lead;
        while (piv < rows_ && m.e_[piv * cols_ + col] == 0) ++piv;
        if (piv == rows_) continue;
        if (piv != lead)
            for (std::size_t c = 0; c < cols_; ++c)
                std::swap(m.e_[piv * cols_ + c], m.e_[lead * cols_ + c]);
        unsigned inv = t->inv[m.e_[lead * cols_ + col]];
        if (inv != 1)
            for (std::size_t c = col; c < cols_; ++c)
                m.e_[lead * cols_ + c] = t->multiply(inv, m.e_[lead * cols_ + c]);
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == lead) continue;
            unsigned f = m.e_[r * cols_ + col];
            if (!f) continue;
            for (std::size_t c = col; c < cols_; ++c)
                m.e_[r * cols_ + c] ^= t->multiply(f, m.e_[lead * cols_ + c]);
        }
        pivots.push_back(col);
        ++lead;
    }
    std::size_t rank = pivots.size();
    return Rref{std::move(m), std::move(pivots), rank};
}

std::size_t Matrix::rank() const { return rref().rank; }

Matrix Matrix::kernel_basis() const {
    Rref r = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : r.pivot_cols) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix k(field_, cols_, free_cols.size());
    const detail::FieldTables* t = field_.tables();
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        std::size_t fc = free_cols[j];
        k.e_[fc * k.cols_ + j] = 1;
        for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) {
            unsigned v = r.reduced.e_[i * cols_ + fc];
            /* pivot row i forces x[pivot_i] = -sum over free cols; char 2 drops the sign */
            k.e_[r.pivot_cols[i] * k.cols_ + j] = static_cast<std::uint8_t>(v);
        }
    }
    (void)t;
    return k;
}

std::optional<Matrix> Matrix::solve(const Matrix& rhs) const {
    require_same_field(rhs);
    if (rhs.rows_ != rows_) throw Error("solve: rhs row count mismatch");
    Matrix aug = hcat(*this, rhs);
    Rref r = aug.rref();
    /* inconsistent when a pivot lands in the rhs block */
    for (auto p : r.pivot_cols)
        if (p >= cols_) return std::nullopt;
    Matrix x(field_, cols_, rhs.cols_);
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) {
        std::size_t pc = r.pivot_cols[i];
        for (std::size_t j = 0; j < rhs.cols_; ++j)
            x.e_[pc * x.cols_ + j] = r.reduced.e_[i * aug.cols_ + cols_ + j];
    }
    return x;
}

std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    auto x = solve(identity(field_, rows_));
    if (!x) return std::nullopt;
    if (!((*this * *x).is_identity()) || !((*x * *this).is_identity()))
        return std::nullopt;
    return x;
}

Matrix Matrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nr,
                         std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw Error("submatrix out of range");
    Matrix out(field_, nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c)
            out.e_[r * nc + c] = e_[(r0 + r) * cols_ + (c0 + c)];
    return out;
}

Matrix Matrix::column(std::size_t c) const { return submatrix(0, c, rows_, 1); }

std::string Matrix::to_text() const {
    std::ostringstream out;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) out << ' ';
            out << at(r, c).str();
        }
        out << '\n';
    }
    return out.str();
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
    if (!(a.field() == b.field())) throw Error("matrices over different fields");
    const detail::FieldTables* t = a.field().tables();
    Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            unsigned av = a.bits_at(i, j);
            if (!av) continue;
            for (std::size_t r = 0; r < b.rows(); ++r)
                for (std::size_t c = 0; c < b.cols(); ++c)
                    out.set_bits(i * b.rows() + r, j * b.cols() + c,
                                 t->multiply(av, b.bits_at(r, c)));
        }
    return out;
}

Matrix hcat(const Matrix& a, const Matrix& b) {
    if (!(a.field() == b.field())) throw Error("matrices over different fields");
    if (a.rows() != b.rows()) throw Error("hcat row count mismatch");
    Matrix out(a.field(), a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) out.set_bits(r, c, a.bits_at(r, c));
        for (std::size_t c = 0; c < b.cols(); ++c)
            out.set_bits(r, a.cols() + c, b.bits_at(r, c));
    }
    return out;
}

Matrix vcat(const Matrix& a, const Matrix& b) {
    if (!(a.field() == b.field())) throw Error("matrices over different fields");
    if (a.cols() != b.cols()) throw Error("vcat column count mismatch");
    Matrix out(a.field(), a.rows() + b.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out.set_bits(r, c, a.bits_at(r, c));
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
            out.set_bits(a.rows() + r, c, b.bits_at(r, c));
    return out;
}

Matrix column_space_basis(const Matrix& m) {
    Rref r = m.transpose().rref();
    Matrix out(m.field(), m.rows(), r.rank);
    for (std::size_t i = 0; i < r.rank; ++i)
        for (std::size_t c = 0; c < m.rows(); ++c)
            out.set_bits(c, i, r.reduced.bits_at(i, c));
    return out;
}

bool in_column_span(const Matrix& basis, const Matrix& v) {
    return basis.solve(v).has_value();
}

}  // namespace jokerlab
