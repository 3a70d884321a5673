#pragma once

#include <vector>

#include "jokerlab/gmodule.hpp"

namespace jokerlab {

/* Elements of a group algebra are coordinate columns over the regular module;
 * products are taken through left-multiplication operators. */
Matrix algebra_mul(const GModule& regular, const Matrix& a, const Matrix& b);
Matrix left_mult_operator(const GModule& regular, const Matrix& a);

/* Column span of all pairwise products u v, u in span(ubasis), v in span(vbasis). */
Matrix subspace_product(const GModule& regular, const Matrix& ubasis, const Matrix& vbasis);

/* Char-2 idempotent lifting by repeated squaring: e maps to e^2 until exact.
 * Requires e^2 = e modulo a nilpotent ideal; each squaring doubles the level
 * of agreement because the defect commutes with e. */
Matrix lift_idempotent(const GModule& regular, const Matrix& e0, unsigned max_rounds = 64);

/* Lifts and pairwise orthogonalizes a family summing to 1 modulo the radical;
 * the result is exact: e_i^2 = e_i, e_i e_j = 0, sum = 1. */
std::vector<Matrix> complete_orthogonal_idempotents(const GModule& regular,
                                                    const std::vector<Matrix>& seeds);

struct G24RepTheory {
    G24 g24;
    GModule regular;            // F4[G24], dim 24
    Matrix radical;             // basis of A I(Q8), dim 21
    std::vector<Matrix> idempotents;  // 3 exact orthogonal idempotents, sum 1
    std::vector<GModule> simples;     // 3 one-dimensional characters
    std::vector<GModule> projectives; // 3 left ideals A e_a, dim 8 each
};

/* Simple modules and projective indecomposables of F4[G24]: the radical is
 * A I(Q8) for the normal Sylow 2-subgroup, the quotient is F4[C3], and its
 * idempotents lift by repeated squaring. */
G24RepTheory g24_rep_theory();

}  // namespace jokerlab
