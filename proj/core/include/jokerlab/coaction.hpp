#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "jokerlab/gmodule.hpp"
#include "jokerlab/padic.hpp"

namespace jokerlab {

/* One summand of a coaction formula: coeff * u^u_power * prod alpha_r^e_r
 * applied to the named target basis element.  u_power records the graded
 * weight (deg source - deg target)/2 on the unnormalized basis; on the bar
 * basis x_{2k} -> u^-k x_{2k} it cancels, so evaluation sees only the alpha
 * monomial.  coeff is an F4 token (0, 1, w, w2) or "?" for an undetermined
 * scalar to be found by complete_coaction. */
struct CoactionTerm {
    std::size_t target;
    std::vector<unsigned> alpha;  // exponents of alpha_0, alpha_1, alpha_2, ...
    long u_power;
    std::string coeff;
};

/* Coaction of one basis element (one column of the future matrices). */
struct CoactionEntry {
    std::string source;  // basis element name, e.g. "zbar6"
    long degree;         // topological degree 2k of the unnormalized element
    std::vector<CoactionTerm> terms;
};

/* Formal coaction data for a finite bar-basis, triangular: each entry may
 * only hit targets with index <= its own, and the diagonal term must be a
 * power of alpha_0 with u_power 0. */
struct CoactionSpec {
    std::string name;
    std::vector<CoactionEntry> entries;
};

/* Structural validation: triangularity, degree consistency of u powers,
 * diagonal shape, known coefficient tokens.  Throws Error. */
void validate_coaction_spec(const CoactionSpec& spec);

/* True when some coefficient is the unknown marker. */
bool has_unknowns(const CoactionSpec& spec);

/* Built-in specs from the mapping-cone computations: cone_eta, cone_nu,
 * three_cell, cone_sigma, sigma_nu_partial (the last has four unknown
 * coefficients on its z0-column candidates). */
CoactionSpec builtin_coaction_spec(const std::string& name);
std::vector<std::string> builtin_coaction_names();

/* k-th Teichmuller digit of a unit, as an F4 scalar. */
FieldElement alpha_eval(const FiniteField& f4, std::size_t k, const O2Element& g);

enum class ActionSide { right, left };

/* Evaluates every alpha monomial at g and assembles the action matrix.
 * ActionSide::right gives the matrix of the right action in the displayed
 * convention (columns are coacted basis elements), so over a group the
 * assignment is an antihomomorphism M(g) M(h) = M(hg); ActionSide::left
 * transposes, giving an honest left action.  Unknown coefficients throw. */
Matrix coaction_matrix(const CoactionSpec& spec, const FiniteField& f4,
                       const O2Element& g, ActionSide side = ActionSide::right);

/* Full evaluation over an embedded group: one right matrix per element,
 * the 64-pair antihomomorphism law checked exactly, and the transposed
 * family repackaged (and re-verified) as a left module. */
struct CoactionEvaluation {
    std::vector<Matrix> right_matrices;  // indexed like emb.q8 elements
    GModule left_module;
};
CoactionEvaluation evaluate_coaction(const CoactionSpec& spec, const FiniteField& f4,
                                     const Q8Embedding& emb);

/* True when M(g) M(h) = M(hg) for all pairs (the right-matrix group law). */
bool right_matrices_form_action(const FiniteGroup& group,
                                const std::vector<Matrix>& right_matrices);

/* Brute-force completion of the unknown coefficients: every assignment of
 * F4 scalars to the "?" slots is evaluated and kept when the matrices form a
 * genuine group action.  Assignments are returned in increasing
 * lexicographic bit order, so the output is deterministic.  A fully known
 * spec returns itself as the sole completion (if its matrices form an
 * action); an inconsistent spec returns the empty set. */
struct CompletionReport {
    std::vector<std::vector<FieldElement>> assignments;  // one scalar per "?" slot
    std::vector<CoactionSpec> completed;                 // same order
    bool center_trivial_in_all;  // every completion fixes the center pointwise
};
CompletionReport complete_coaction(const CoactionSpec& spec, const FiniteField& f4,
                                   const Q8Embedding& emb);

}  // namespace jokerlab
