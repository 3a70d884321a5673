#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "jokerlab/resolution.hpp"

namespace jokerlab {

/* Element of Ext^degree(k, k) over a minimal resolution: the functional on
 * P_degree that is constant on each free copy, recorded by its per-copy
 * values.  Minimality makes every such functional a cocycle and none a
 * coboundary, so these coefficient vectors ARE the Ext classes. */
struct CohomClass {
    std::size_t degree;
    std::vector<FieldElement> coeffs;  // length = ranks[degree]
};

/* Ext^*_{kG}(k, k) computed on a minimal free resolution.  Products lift
 * classes to chain maps and compose; Massey triples additionally solve for
 * nullhomotopies.  Everything is deterministic: linear solves fix free
 * variables to zero, and the nullhomotopy variant parameter switches between
 * explicitly constructed alternatives. */
class ExtRing {
public:
    explicit ExtRing(FreeResolution res);

    const FreeResolution& resolution() const { return res_; }
    const FiniteField& field() const { return res_.field; }
    std::size_t max_degree() const { return res_.length(); }
    std::size_t betti(std::size_t degree) const { return res_.ranks.at(degree); }

    CohomClass zero_class(std::size_t degree) const;
    CohomClass make_class(std::size_t degree, std::vector<FieldElement> coeffs) const;
    bool is_zero(const CohomClass& c) const;
    CohomClass add(const CohomClass& a, const CohomClass& b) const;
    CohomClass scale(const FieldElement& s, const CohomClass& a) const;
    std::string str(const CohomClass& c) const;  // coefficients as 0,1,w,w2

    /* Ext^1(k, k) = Hom(G, k): the value of a degree-1 class on a group
     * element, computed by pulling g - 1 back through d_1. */
    FieldElement evaluate_degree1(const CohomClass& c, std::size_t g) const;

    /* The degree-1 basis normalized against the generators named i and j:
     * u(i) = 1, u(j) = 0, v(i) = 0, v(j) = 1. */
    std::pair<CohomClass, CohomClass> generators_uv() const;

    /* Chain map lifting c: component s maps P_{degree+s} -> P_s, for
     * s = 0 .. length - degree.  Component 0 composed with the augmentation
     * recovers the functional of c. */
    std::vector<Matrix> chain_map(const CohomClass& c) const;

    /* Yoneda/cup product via composition of chain maps. */
    CohomClass cup(const CohomClass& a, const CohomClass& b) const;

    struct Massey {
        CohomClass representative;
        std::vector<CohomClass> indeterminacy;  // echelon basis of the subspace
    };

    /* Triple Massey product <a, b, c>; defined only when a.b = b.c = 0.
     * The representative composes the lift of a with a nullhomotopy of b.c;
     * the indeterminacy is a.Ext + Ext.c.  nullhomotopy_variant = 0 uses the
     * plain deterministic solve; variant v >= 1 re-chooses the bottom of the
     * nullhomotopy by a kernel element and re-solves the higher stages.  On a
     * minimal resolution any two strict nullhomotopies differ at the bottom
     * by maps into the image of d_2, which the augmentation kills, so the
     * representative is reproduced exactly; re-choice never leaves the coset
     * representative + indeterminacy. */
    Massey massey_triple(const CohomClass& a, const CohomClass& b, const CohomClass& c,
                         unsigned nullhomotopy_variant = 0) const;

    bool massey_contains(const Massey& m, const CohomClass& x) const;

    /* Every element of the coset representative + span(indeterminacy); the
     * span must have at most max_elements points. */
    std::vector<CohomClass> massey_elements(const Massey& m,
                                            std::size_t max_elements = 256) const;

private:
    Matrix class_to_column(const CohomClass& c) const;
    CohomClass column_to_class(std::size_t degree, const Matrix& col) const;
    /* Extends generator images (one column per free copy of the source) to
     * the full equivariant map; the target copy count is rows / |G|. */
    Matrix equivariant_extend(const Matrix& gen_images) const;
    /* Nullhomotopy H of a composite chain map F (components P_{shift+s} -> P_s,
     * with augmentation composite zero): H_s : P_{shift+s} -> P_{s+1} with
     * d H_s + H_{s-1} d = F_s.  Stages 0 .. stages-1.  variant > 0 adds the
     * (variant-1)-th kernel vector of d_1 to every generator image at stage 0
     * before solving onward: a genuinely different valid nullhomotopy. */
    std::vector<Matrix> nullhomotopy(const std::vector<Matrix>& f, std::size_t shift,
                                     std::size_t stages, unsigned variant = 0) const;

    FreeResolution res_;
    GModule regular_;
};

}  // namespace jokerlab
