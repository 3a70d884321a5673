#pragma once

#include <cstddef>
#include <vector>

#include "jokerlab/gmodule.hpp"

namespace jokerlab {

/* Minimal free resolution ... -> P_1 -> P_0 -> k -> 0 of the trivial module
 * over a local group algebra (a 2-group in characteristic 2).  P_s is
 * k[G]^ranks[s] with coordinate (copy, element) at copy*|G| + element;
 * differentials[s-1] is the matrix of d_s : P_s -> P_{s-1}.  Minimality means
 * every differential entry lies in the radical (per-copy augmentation zero),
 * so the induced differentials on Hom(P_s, k) vanish and Ext^s(k, k) is the
 * full space k^ranks[s]. */
struct FreeResolution {
    FiniteField field;
    FiniteGroup group;
    std::vector<std::size_t> ranks;     // indexed 0..length
    std::vector<Matrix> differentials;  // differentials[s-1] = d_s, s = 1..length

    std::size_t length() const { return ranks.empty() ? 0 : ranks.size() - 1; }
};

/* Builds the resolution by repeatedly covering the kernel of the previous
 * differential: generators are a greedy basis of the kernel modulo its
 * radical, and each free copy maps onto one generator's orbit.  The result is
 * checked before returning; see verify_resolution. */
FreeResolution minimal_resolution(const FiniteField& field, const FiniteGroup& group,
                                  std::size_t length);

/* Checks d_s d_{s+1} = 0, exactness (rank d_{s+1} = nullity d_s, with
 * nullity d_0 read against the augmentation), and minimality (all entries in
 * the radical).  Throws Error with the failing stage on violation. */
void verify_resolution(const FreeResolution& res);

/* The augmentation row (1 1 ... 1) repeated per free copy: the functional
 * P_s -> k^ranks[s] collapsing each copy to its coefficient sum. */
Matrix copy_augmentation(const FreeResolution& res, std::size_t s);

}  // namespace jokerlab
