#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "jokerlab/group.hpp"
#include "jokerlab/laurent.hpp"
#include "jokerlab/matrix.hpp"

namespace jokerlab {

/* A group acting on the coefficient ring F[u, u^-1] by graded ring
 * automorphisms: g sends c u^k to phi_g(c) chi(g)^k u^k, where chi(g) is a
 * unit scalar and phi_g is identity or Frobenius.  Built through
 * graded_action, which checks the assignment is a homomorphism:
 * chi(gh) = phi_g(chi(h)) chi(g) and the automorphism parts multiply. */
struct GradedAlgebraAction {
    FiniteField field;
    FiniteGroup group;
    std::vector<FieldElement> chi;
    std::vector<bool> frobenius;
};

GradedAlgebraAction graded_action(const FiniteField& field, const FiniteGroup& group,
                                  std::vector<FieldElement> chi, std::vector<bool> frobenius);
GradedAlgebraAction trivial_graded_action(const FiniteField& field, const FiniteGroup& group);
/* The 24-element group scaling u: the quaternion part acts trivially and the
 * order-3 generator sends u to w^2 u, with no Frobenius component. */
GradedAlgebraAction g24_graded_action(const FiniteField& f4);

LaurentElement twist(const GradedAlgebraAction& action, std::size_t g, const LaurentElement& a);
LaurentMatrix twist(const GradedAlgebraAction& action, std::size_t g, const LaurentMatrix& m);

/* Element sum_g c_g g of the skew group ring A<G>.  Multiplication moves
 * group elements past coefficients by the twist: (a g)(b h) = a (g b) (gh). */
struct SkewElement {
    std::vector<LaurentElement> coeffs;  // indexed by group element
};

SkewElement skew_zero(const GradedAlgebraAction& action);
SkewElement skew_term(const GradedAlgebraAction& action, const LaurentElement& a, std::size_t g);
SkewElement skew_add(const GradedAlgebraAction& action, const SkewElement& a,
                     const SkewElement& b);
SkewElement skew_product(const GradedAlgebraAction& action, const SkewElement& a,
                         const SkewElement& b);
bool skew_equal(const SkewElement& a, const SkewElement& b);

/* Shared data for Hecke computations: the subgroup H and the left cosets xH
 * with canonical least-index representatives. */
struct HeckeContext {
    GradedAlgebraAction action;
    Subgroup subgroup;
    std::vector<Coset> cosets;          // ordered by representative
    std::vector<std::size_t> coset_of;  // group element -> coset index
};

HeckeContext hecke_context(const GradedAlgebraAction& action, const Subgroup& subgroup);

/* H-invariant element sum_x a_x xH of the free module on left cosets.
 * Coefficients are indexed like ctx.cosets; invariance means the coefficient
 * at (h x)H is the h-twist of the one at xH, for every h in H.  Verified at
 * construction by hecke_element. */
struct HeckeElement {
    std::vector<LaurentElement> coeffs;
};

HeckeElement hecke_element(const HeckeContext& ctx, std::vector<LaurentElement> coeffs);
HeckeElement hecke_unit(const HeckeContext& ctx);
HeckeElement hecke_add(const HeckeContext& ctx, const HeckeElement& a, const HeckeElement& b);
bool hecke_equal(const HeckeElement& a, const HeckeElement& b);
std::string hecke_str(const HeckeContext& ctx, const HeckeElement& a);

/* Basis of the H-fixed points of A{G/H} over the fixed subring of A.  One
 * candidate per double coset HxH and per exponent window (u^0 when H scales
 * u trivially; u^0, u^1, u^-1 for the cube-root twist), kept when the window
 * is constant on the stabilizer of xH in H.  Ordered window-major, then by
 * double-coset representative. */
std::vector<HeckeElement> hecke_basis(const HeckeContext& ctx);

/* Convolution product: sum over coset representatives x, y of
 * a_x (x b_y) (xy)H, re-normalized into canonical representatives.  The
 * result is representative-independent; hecke_mul_over recomputes it over a
 * caller-chosen transversal (one member per coset) to make that testable. */
HeckeElement hecke_mul(const HeckeContext& ctx, const HeckeElement& a, const HeckeElement& b);
HeckeElement hecke_mul_over(const HeckeContext& ctx, const HeckeElement& a,
                            const HeckeElement& b, const std::vector<std::size_t>& transversal);

/* Right G-module with graded coefficients: named basis vectors with even
 * integer degrees and one Laurent matrix per group element, columns are
 * images.  A coefficient passes the action of g by picking up the inverse
 * twist, z a g = (z g)(g^-1 a), so composition is rho(gh) = rho(h) (h^-1 rho(g))
 * and applying g to a coordinate column v gives rho(g) (g^-1 v).  Entries are
 * degree-homogeneous: the (r, c) entry is a u-monomial of exponent
 * (deg_c - deg_r)/2.  Built from generator matrices by completion; the stated
 * laws are verified over all element pairs. */
struct GradedGModule {
    GradedAlgebraAction action;
    std::vector<std::string> names;
    std::vector<long> degrees;
    std::vector<LaurentMatrix> rho;
};

GradedGModule graded_module_from_right_action(
    const GradedAlgebraAction& action, std::vector<std::string> names, std::vector<long> degrees,
    const std::vector<std::pair<std::string, LaurentMatrix>>& generators);

/* Image of the coordinate column v under the right action of g. */
LaurentMatrix graded_apply(const GradedGModule& m, std::size_t g, const LaurentMatrix& v);
bool is_h_fixed_vector(const GradedGModule& m, const Subgroup& subgroup, const LaurentMatrix& v);

/* Fixed-point action of a Hecke element on an H-fixed column: the sum of
 * a_x (m . x) over canonical coset representatives x.  The output is checked
 * H-fixed.  On a right module this composes contravariantly: the fixed
 * points form a right Hecke module, hecke_act(hecke_mul(a, b), m) equals
 * hecke_act(b, hecke_act(a, m)).  (The covariant form of the same law is
 * realized on A{G/H} itself, where the fixed-point action of a on b is
 * hecke_mul(a, b) and compatibility is exactly associativity.)  The sum is
 * taken over the canonical least-index transversal; hecke_act_over exposes
 * the dependence on that choice. */
LaurentMatrix hecke_act(const HeckeContext& ctx, const HeckeElement& a, const GradedGModule& m,
                        const LaurentMatrix& v);
LaurentMatrix hecke_act_over(const HeckeContext& ctx, const HeckeElement& a,
                             const GradedGModule& m, const LaurentMatrix& v,
                             const std::vector<std::size_t>& transversal);

/* Matrix of hecke_act on a spanning set of H-fixed standard basis vectors,
 * given by their indices; columns are images.  Errors if some image leaves
 * the span of the listed basis vectors. */
LaurentMatrix hecke_action_matrix(const HeckeContext& ctx, const HeckeElement& a,
                                  const GradedGModule& m,
                                  const std::vector<std::size_t>& fixed_basis);

/* Orbit-sum action of a double coset: for G = H |x N semidirect with n in N,
 * the double coset HnH acts on an H-fixed column by the sum of m . c over
 * the distinct H-conjugates c of n.  Agrees with hecke_act of the matching
 * window-0 basis element. */
LaurentMatrix double_coset_act(const HeckeContext& ctx, const Subgroup& complement,
                               std::size_t n, const GradedGModule& m, const LaurentMatrix& v);

/* The right action of the 24-element group on the completed three-cell
 * homology: basis z0, z4, z6 in degrees 0, 4, 6 over F4[u, u^-1]; the
 * quaternion generators act by the displayed columns and the order-3
 * generator fixes each basis vector (twisting u underneath).  All three
 * basis vectors are fixed by the order-3 subgroup, so fixed_basis lists
 * every index. */
struct G24FixedPointData {
    GradedGModule module;
    std::vector<std::size_t> fixed_basis;
};

G24FixedPointData g24_module_and_fixed_points(const FiniteField& f4);

/* Restriction of the action of g to degree-zero coordinates: conjugates
 * rho(g) by diag(u^(deg/2)) and reads the entries as field scalars.
 * Requires g to act trivially on coefficients, so this is meaningful only on
 * the subgroup acting trivially; the result is a right-action matrix over
 * the base field. */
Matrix normalized_restriction_matrix(const GradedGModule& m, std::size_t g);

}  // namespace jokerlab
