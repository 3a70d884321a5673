#pragma once

#include <cstddef>
#include <vector>

#include "jokerlab/gmodule.hpp"
#include "jokerlab/padic.hpp"

namespace jokerlab {

/* Dense matrix over Z4 = W(F4) at a fixed precision 2^prec_bits. */
class Z4Matrix {
public:
    Z4Matrix(unsigned prec_bits, std::size_t rows, std::size_t cols);

    static Z4Matrix identity(unsigned prec_bits, std::size_t n);
    /* Entrywise Teichmuller lift of an F4 matrix. */
    static Z4Matrix teichmuller_lift(unsigned prec_bits, const Matrix& reduction);

    unsigned prec_bits() const { return prec_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Z4Element& at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, const Z4Element& v);

    Z4Matrix operator+(const Z4Matrix& rhs) const;
    Z4Matrix operator-(const Z4Matrix& rhs) const;
    Z4Matrix operator*(const Z4Matrix& rhs) const;
    bool operator==(const Z4Matrix& rhs) const;
    bool operator!=(const Z4Matrix& rhs) const { return !(*this == rhs); }

    Z4Matrix scaled(const Z4Element& s) const;
    Z4Matrix scaled_pow2(unsigned t) const;
    Z4Matrix column(std::size_t c) const;

    bool is_zero() const;
    bool is_identity() const;

    /* Entrywise image in the residue field. */
    Matrix residue(const FiniteField& f4) const;
    /* Entrywise (entry / 2^t) mod 2; throws unless 2^t divides every entry,
     * i.e. unless the matrix vanishes at level t. */
    Matrix residue_of_quotient(const FiniteField& f4, unsigned t) const;

private:
    unsigned prec_;
    std::size_t rows_, cols_;
    std::vector<Z4Element> e_;
};

/* Action data over the truncated ring R = Z4 mod 2^prec_bits: one R-matrix
 * per group element.  This is the matrix part of a module over a skew group
 * ring R<G>; the twisting of the coefficient action is not carried here, so
 * no multiplicative law is imposed on the R-matrices themselves.  (Entrywise
 * multiplicative lifts genuinely fail the plain law: over Z4 the lift of a
 * unipotent matrix U satisfies U^4 = I only mod 2.)  What is verifiable, and
 * what endotrivial_truncated checks, is the residue story: the reduction
 * mod 2 must be an exact F4[G]-module. */
struct TruncatedModule {
    unsigned prec_bits;
    FiniteGroup group;
    std::vector<Z4Matrix> rho;
};

TruncatedModule truncated_regular(unsigned prec_bits, const FiniteGroup& group);
TruncatedModule truncated_trivial(unsigned prec_bits, const FiniteGroup& group,
                                  std::size_t dim);

/* Entrywise Teichmuller lift of every action matrix. */
TruncatedModule teichmuller_module_lift(const GModule& m, unsigned prec_bits);

/* Reduction mod the maximal ideal (2); the verified GModule constructor
 * certifies that the residue matrices form an exact group action. */
GModule reduction(const TruncatedModule& m, const FiniteField& f4);

/* The rank-5 module over R obtained from the three-cell coaction: evaluate
 * the coaction into the 3-dimensional module, present that as a quotient of
 * the group algebra, take the kernel of the presentation with its induced
 * action, and lift the kernel's action matrices to Teichmuller
 * representatives.  Free of rank 5 over R; its reduction is the
 * 5-dimensional stably invertible module. */
TruncatedModule truncated_joker_module(unsigned prec_bits);

/* Endotriviality over the truncated local ring R, tested as: every action
 * matrix has R-entries of the stated precision and unit determinant (unit
 * over R exactly when the residue matrix is invertible), the identity acts
 * as the identity, the reduction mod 2 is a well-defined F4[G]-module for
 * the 2-group G, and that reduction is endotrivial.  An R<G>-module that is
 * R-free with endotrivial reduction is itself endotrivial (idempotent
 * lifting over the complete local ring splits End(M) as R + projective), so
 * the residue verdict transfers. */
bool endotrivial_truncated(const TruncatedModule& m);

/* Minimal number of generators of the Z4-column span (the Smith rank over
 * the discrete valuation ring): unit-pivot elimination, then exact division
 * of the residual by 2, repeated. */
std::size_t z4_minimal_generators(const Z4Matrix& columns);

}  // namespace jokerlab
