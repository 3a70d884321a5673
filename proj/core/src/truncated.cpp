#include "jokerlab/truncated.hpp"

#include <string>
#include <utility>

#include "jokerlab/coaction.hpp"
#include "jokerlab/stable.hpp"

namespace jokerlab {

namespace {

void require_same_shape(const Z4Matrix& a, const Z4Matrix& b) {
    if (a.prec_bits() != b.prec_bits())
        throw Error("Z4 matrices have different precisions");
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error("Z4 matrix dimensions do not match");
}

}  // namespace

Z4Matrix::Z4Matrix(unsigned prec_bits, std::size_t rows, std::size_t cols)
    : prec_(prec_bits), rows_(rows), cols_(cols),
      e_(rows * cols, Z4Element::zero(prec_bits)) {}

Z4Matrix Z4Matrix::identity(unsigned prec_bits, std::size_t n) {
    Z4Matrix m(prec_bits, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Z4Element::one(prec_bits));
    return m;
}

Z4Matrix Z4Matrix::teichmuller_lift(unsigned prec_bits, const Matrix& reduction) {
    Z4Matrix m(prec_bits, reduction.rows(), reduction.cols());
    for (std::size_t r = 0; r < reduction.rows(); ++r)
        for (std::size_t c = 0; c < reduction.cols(); ++c)
            m.set(r, c, Z4Element::teichmuller(prec_bits, reduction.at(r, c)));
    return m;
}

const Z4Element& Z4Matrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw Error("Z4 matrix index out of range");
    return e_[r * cols_ + c];
}

void Z4Matrix::set(std::size_t r, std::size_t c, const Z4Element& v) {
    if (r >= rows_ || c >= cols_) throw Error("Z4 matrix index out of range");
    if (v.prec_bits() != prec_) throw Error("Z4 matrix entry has the wrong precision");
    e_[r * cols_ + c] = v;
}

Z4Matrix Z4Matrix::operator+(const Z4Matrix& rhs) const {
    require_same_shape(*this, rhs);
    Z4Matrix out(prec_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] + rhs.e_[i];
    return out;
}

Z4Matrix Z4Matrix::operator-(const Z4Matrix& rhs) const {
    require_same_shape(*this, rhs);
    Z4Matrix out(prec_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] - rhs.e_[i];
    return out;
}

Z4Matrix Z4Matrix::operator*(const Z4Matrix& rhs) const {
    if (prec_ != rhs.prec_) throw Error("Z4 matrices have different precisions");
    if (cols_ != rhs.rows_) throw Error("Z4 matrix dimensions do not match");
    Z4Matrix out(prec_, rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Z4Element& v = e_[r * cols_ + k];
            if (v == Z4Element::zero(prec_)) continue;
            for (std::size_t c = 0; c < rhs.cols_; ++c)
                out.e_[r * rhs.cols_ + c] =
                    out.e_[r * rhs.cols_ + c] + v * rhs.e_[k * rhs.cols_ + c];
        }
    return out;
}

bool Z4Matrix::operator==(const Z4Matrix& rhs) const {
    if (prec_ != rhs.prec_ || rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] != rhs.e_[i]) return false;
    return true;
}

Z4Matrix Z4Matrix::scaled(const Z4Element& s) const {
    Z4Matrix out(prec_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] * s;
    return out;
}

Z4Matrix Z4Matrix::scaled_pow2(unsigned t) const {
    return scaled(Z4Element::from_int(prec_, std::int64_t(1) << t));
}

Z4Matrix Z4Matrix::column(std::size_t c) const {
    Z4Matrix out(prec_, rows_, 1);
    for (std::size_t r = 0; r < rows_; ++r) out.set(r, 0, at(r, c));
    return out;
}

bool Z4Matrix::is_zero() const {
    Z4Element z = Z4Element::zero(prec_);
    for (const Z4Element& v : e_)
        if (v != z) return false;
    return true;
}

bool Z4Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    return *this == identity(prec_, rows_);
}

Matrix Z4Matrix::residue(const FiniteField& f4) const { return residue_of_quotient(f4, 0); }

Matrix Z4Matrix::residue_of_quotient(const FiniteField& f4, unsigned t) const {
    Matrix out(f4, rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            Z4Element v = at(r, c);
            for (unsigned s = 0; s < t; ++s) {
                if (!v.is_even())
                    throw Error("Z4 matrix entry is not divisible by the requested power of 2");
                v = v.half();
            }
            out.set(r, c, v.residue(f4));
        }
    return out;
}

TruncatedModule truncated_regular(unsigned prec_bits, const FiniteGroup& group) {
    std::size_t n = group.order();
    std::vector<Z4Matrix> rho;
    rho.reserve(n);
    for (std::size_t g = 0; g < n; ++g) {
        Z4Matrix m(prec_bits, n, n);
        for (std::size_t h = 0; h < n; ++h)
            m.set(group.mul(g, h), h, Z4Element::one(prec_bits));
        rho.push_back(std::move(m));
    }
    return TruncatedModule{prec_bits, group, std::move(rho)};
}

TruncatedModule truncated_trivial(unsigned prec_bits, const FiniteGroup& group,
                                  std::size_t dim) {
    std::vector<Z4Matrix> rho(group.order(), Z4Matrix::identity(prec_bits, dim));
    return TruncatedModule{prec_bits, group, std::move(rho)};
}

TruncatedModule teichmuller_module_lift(const GModule& m, unsigned prec_bits) {
    std::vector<Z4Matrix> rho;
    rho.reserve(m.group().order());
    for (std::size_t g = 0; g < m.group().order(); ++g)
        rho.push_back(Z4Matrix::teichmuller_lift(prec_bits, m.rho(g)));
    return TruncatedModule{prec_bits, m.group(), std::move(rho)};
}

GModule reduction(const TruncatedModule& m, const FiniteField& f4) {
    std::vector<Matrix> rho;
    rho.reserve(m.rho.size());
    for (const Z4Matrix& z : m.rho) rho.push_back(z.residue(f4));
    return GModule(f4, m.group, std::move(rho));
}

TruncatedModule truncated_joker_module(unsigned prec_bits) {
    FiniteField f4 = FiniteField::f4();
    Q8Embedding emb = q8_embed(prec_bits);
    CoactionEvaluation ev =
        evaluate_coaction(builtin_coaction_spec("three_cell"), f4, emb);
    GModule joker = syzygy(ev.left_module);
    return teichmuller_module_lift(joker, prec_bits);
}

bool endotrivial_truncated(const TruncatedModule& m) {
    std::size_t n = m.group.order();
    if (m.rho.size() != n) throw Error("one matrix per group element is required");
    if (!m.group.is_2_group())
        throw Error("the truncated endotriviality test applies to 2-groups");
    std::size_t d = m.rho[0].rows();
    for (const Z4Matrix& z : m.rho) {
        if (z.rows() != d || z.cols() != d)
            throw Error("action matrices must be square and of equal size");
        if (z.prec_bits() != m.prec_bits)
            throw Error("action matrices must share the stated precision");
    }
    if (!m.rho[m.group.identity()].is_identity())
        throw Error("the identity element must act as the identity matrix");
    FiniteField f4 = FiniteField::f4();
    for (std::size_t g = 0; g < n; ++g)
        if (m.rho[g].residue(f4).rank() != d)
            throw Error("action matrix of " + m.group.name_of(g) +
                        " has non-unit determinant over the truncated ring");
    return endotrivial(reduction(m, f4));
}

std::size_t z4_minimal_generators(const Z4Matrix& columns) {
    std::size_t rows = columns.rows();
    std::size_t cols = columns.cols();
    unsigned prec = columns.prec_bits();
    std::vector<std::vector<Z4Element>> w(
        rows, std::vector<Z4Element>(cols, Z4Element::zero(prec)));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) w[r][c] = columns.at(r, c);
    std::vector<bool> row_done(rows, false), col_done(cols, false);
    std::size_t count = 0;
    for (unsigned level = 0; level < prec; ++level) {
        bool found = true;
        while (found) {
            found = false;
            std::size_t pr = rows, pc = cols;
            for (std::size_t c = 0; c < cols && pc == cols; ++c) {
                if (col_done[c]) continue;
                for (std::size_t r = 0; r < rows; ++r) {
                    if (row_done[r]) continue;
                    if (w[r][c].is_unit()) { pr = r; pc = c; break; }
                }
            }
            if (pc == cols) break;
            found = true;
            ++count;
            Z4Element inv = w[pr][pc].inverse();
            for (std::size_t c = 0; c < cols; ++c) {
                if (col_done[c] || c == pc) continue;
                Z4Element f = w[pr][c] * inv;
                if (f == Z4Element::zero(prec)) continue;
                for (std::size_t r = 0; r < rows; ++r) {
                    if (row_done[r]) continue;
                    w[r][c] = w[r][c] - f * w[r][pc];
                }
            }
            row_done[pr] = true;
            col_done[pc] = true;
        }
        bool all_zero = true;
        for (std::size_t r = 0; r < rows; ++r) {
            if (row_done[r]) continue;
            for (std::size_t c = 0; c < cols; ++c) {
                if (col_done[c]) continue;
                if (w[r][c] != Z4Element::zero(prec)) all_zero = false;
            }
        }
        if (all_zero) break;
        for (std::size_t r = 0; r < rows; ++r) {
            if (row_done[r]) continue;
            for (std::size_t c = 0; c < cols; ++c) {
                if (col_done[c]) continue;
                if (!w[r][c].is_even()) throw Error("a non-unit Z4 entry must be even");
                w[r][c] = w[r][c].half();
            }
        }
    }
    return count;
}

}  // namespace jokerlab
