#pragma once

#include <optional>
#include <vector>

#include "jokerlab/gmodule.hpp"

namespace jokerlab {

/* m is isomorphic to regular^rank (+) remainder; witness columns list a basis
 * of m realizing that splitting (free blocks first, remainder last), so
 * rho_m(g) witness = witness blockdiag(reg(g)^rank, rho_rem(g)). */
struct StripFree {
    std::size_t rank;
    GModule remainder;
    Matrix witness;
};

/* Splits off all free summands over a 2-group algebra in characteristic 2.
 * The rank of the norm element counts free summands; each split is realized
 * by an explicit section and retraction. */
StripFree strip_free(const GModule& m);

struct ProjectiveCover {
    GModule cover;       // regular^t, t = dim of the top of m
    ModuleMap surjection;
};
ProjectiveCover projective_cover(const GModule& m);

/* Kernel of the projective cover; minimality (kernel inside rad of the cover)
 * is verified. */
GModule syzygy(const GModule& m);
GModule syzygy_power(const GModule& m, std::size_t n);

/* Indecomposable summands with embedding bases (columns in m coordinates).
 * Splitting idempotents are found by minimal-polynomial factorization of
 * deterministic pseudo-random endomorphisms; below dimension 3 the search is
 * exhaustive over the endomorphism space. */
struct Decomposition {
    std::vector<GModule> parts;
    std::vector<Matrix> bases;
};
Decomposition decompose(const GModule& m);

/* Invertible intertwiner m -> n, or nothing.  Complete for indecomposables
 * via the local endomorphism-ring criterion; decomposables are decomposed
 * first and matched factor by factor. */
std::optional<Matrix> module_iso(const GModule& m, const GModule& n);

/* Isomorphism after stripping free summands (2-groups). */
bool stable_iso(const GModule& m, const GModule& n);

/* Endotriviality: End(m) is trivial plus free.  Over a 2-group both the
 * direct criterion and the restriction-to-elementary-abelians criterion are
 * evaluated and compared; otherwise only the latter applies. */
bool endotrivial(const GModule& m);

}  // namespace jokerlab
