#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "jokerlab/group.hpp"
#include "jokerlab/matrix.hpp"

namespace jokerlab {

/* Finite-dimensional left module over k[G], stored as one invertible matrix
 * per group element (columns are images of basis vectors).  The full law
 * rho(g) rho(h) = rho(gh) is verified exhaustively at construction. */
class GModule {
public:
    GModule(FiniteField field, FiniteGroup group, std::vector<Matrix> rho);

    const FiniteField& field() const { return field_; }
    const FiniteGroup& group() const { return group_; }
    std::size_t dim() const { return dim_; }
    const Matrix& rho(std::size_t g) const { return (*rho_)[g]; }

private:
    FiniteField field_;
    FiniteGroup group_;
    std::size_t dim_;
    std::shared_ptr<const std::vector<Matrix>> rho_;
};

/* k[G]-linear map between modules over the same group; the intertwining law
 * matrix rho_src(g) = rho_tgt(g) matrix is verified at construction. */
struct ModuleMap {
    ModuleMap(GModule source_, GModule target_, Matrix matrix_);
    GModule source;
    GModule target;
    Matrix matrix;
};

/* Extends a generator assignment to all of G by completing along the
 * multiplication table; reports the violated word on inconsistency. */
GModule module_from_action(const FiniteField& field, const FiniteGroup& group,
                           const std::vector<std::pair<std::string, Matrix>>& generators);

/* Conjugated action p rho(g) p^-1; p holds the new coordinates of the old
 * basis vectors. */
GModule change_basis(const GModule& m, const Matrix& p);

GModule trivial_module(const FiniteField& field, const FiniteGroup& group,
                       std::size_t dim = 1);
/* Left regular module: basis indexed by group elements, g e_h = e_{gh}. */
GModule regular_module(const FiniteField& field, const FiniteGroup& group);

GModule tensor(const GModule& m, const GModule& n);
GModule dual(const GModule& m);
GModule hom_module(const GModule& m, const GModule& n);  // dual(m) tensor n
GModule direct_sum(const GModule& m, const GModule& n);
GModule restrict_module(const GModule& m, const Subgroup& h);

/* Module on a G-stable subspace; basis columns must be independent. */
struct SubmoduleResult {
    GModule module;
    ModuleMap inclusion;
};
SubmoduleResult submodule_module(const GModule& m, const Matrix& basis);

/* Quotient by a G-stable subspace, on a complement of standard basis vectors. */
struct QuotientResult {
    GModule module;
    ModuleMap projection;
};
QuotientResult quotient_module(const GModule& m, const Matrix& sub_basis);

Matrix norm_matrix(const GModule& m);  // sum of all rho(g)
/* Columns span sum over g of im(rho(g) - I), the radical for a p-group in
 * characteristic p. */
Matrix radical_subspace(const GModule& m);
Matrix fixed_point_basis(const GModule& m);

/* Basis of the space of intertwiners m -> n (each matrix dim n x dim m). */
std::vector<Matrix> hom_space(const GModule& m, const GModule& n);

}  // namespace jokerlab
