#include "jokerlab/hecke.hpp"

#include <algorithm>
#include <optional>
#include <queue>
#include <set>
#include <sstream>

namespace jokerlab {

namespace {

void require_same_context(const GradedAlgebraAction& action, const SkewElement& a) {
    if (a.coeffs.size() != action.group.order())
        throw Error("skew element does not match the group");
    for (const LaurentElement& c : a.coeffs)
        if (c.field() != action.field) throw Error("skew element over a different field");
}

/* Coefficients must be H-invariant: the value at (h x)H is the h-twist of
 * the value at xH. */
void require_fixed_coefficients(const HeckeContext& ctx,
                                const std::vector<LaurentElement>& coeffs, const char* what) {
    for (std::size_t c = 0; c < ctx.cosets.size(); ++c) {
        std::size_t x = ctx.cosets[c].representative;
        for (std::size_t h : ctx.subgroup.members()) {
            std::size_t target = ctx.coset_of[ctx.action.group.mul(h, x)];
            if (coeffs[target] != twist(ctx.action, h, coeffs[c])) throw Error(what);
        }
    }
}

std::vector<std::size_t> canonical_transversal(const HeckeContext& ctx) {
    std::vector<std::size_t> reps;
    reps.reserve(ctx.cosets.size());
    for (const Coset& c : ctx.cosets) reps.push_back(c.representative);
    return reps;
}

void require_transversal(const HeckeContext& ctx, const std::vector<std::size_t>& reps) {
    if (reps.size() != ctx.cosets.size())
        throw Error("transversal must pick one member per coset");
    for (std::size_t c = 0; c < reps.size(); ++c) {
        if (reps[c] >= ctx.action.group.order() || ctx.coset_of[reps[c]] != c)
            throw Error("transversal member lies outside its coset");
    }
}

void require_column(const GradedGModule& m, const LaurentMatrix& v) {
    if (v.rows() != m.names.size() || v.cols() != 1)
        throw Error("vector shape does not match the module");
    if (v.field() != m.action.field) throw Error("vector over a different field");
}

LaurentMatrix standard_column(const GradedGModule& m, std::size_t index) {
    LaurentMatrix v(m.action.field, m.names.size(), 1);
    v.set(index, 0, LaurentElement::constant(m.action.field.one()));
    return v;
}

}  // namespace

GradedAlgebraAction graded_action(const FiniteField& field, const FiniteGroup& group,
                                  std::vector<FieldElement> chi, std::vector<bool> frobenius) {
    if (chi.size() != group.order() || frobenius.size() != group.order())
        throw Error("grading action needs one scalar and one automorphism per element");
    for (const FieldElement& c : chi) {
        if (c.field() != field) throw Error("grading scalar over a different field");
        if (c.is_zero()) throw Error("grading scalar must be a unit");
    }
    if (!chi[group.identity()].is_one() || frobenius[group.identity()])
        throw Error("grading action must fix the identity");
    GradedAlgebraAction out{field, group, std::move(chi), std::move(frobenius)};
    for (std::size_t g = 0; g < group.order(); ++g)
        for (std::size_t h = 0; h < group.order(); ++h) {
            std::size_t gh = group.mul(g, h);
            FieldElement moved = out.frobenius[g] ? out.chi[h].frobenius() : out.chi[h];
            if (out.chi[gh] != moved * out.chi[g] ||
                out.frobenius[gh] != (out.frobenius[g] != out.frobenius[h]))
                throw Error("grading action is not a homomorphism at " + group.name_of(g) +
                            ", " + group.name_of(h));
        }
    return out;
}

GradedAlgebraAction trivial_graded_action(const FiniteField& field, const FiniteGroup& group) {
    return graded_action(field, group,
                         std::vector<FieldElement>(group.order(), field.one()),
                         std::vector<bool>(group.order(), false));
}

GradedAlgebraAction g24_graded_action(const FiniteField& f4) {
    G24 g24 = make_g24();
    std::vector<FieldElement> chi;
    chi.reserve(24);
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t q = 0; q < 8; ++q) chi.push_back(f4.omega().pow(2 * static_cast<long>(a)));
    return graded_action(f4, g24.group, std::move(chi), std::vector<bool>(24, false));
}

LaurentElement twist(const GradedAlgebraAction& action, std::size_t g, const LaurentElement& a) {
    if (g >= action.group.order()) throw Error("twist by an element out of range");
    LaurentElement out(action.field);
    for (const auto& [exp, coeff] : a.terms()) {
        FieldElement moved = action.frobenius[g] ? coeff.frobenius() : coeff;
        out = out + LaurentElement::monomial(moved * action.chi[g].pow(exp), exp);
    }
    return out;
}

LaurentMatrix twist(const GradedAlgebraAction& action, std::size_t g, const LaurentMatrix& m) {
    LaurentMatrix out(m.field(), m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out.set(r, c, twist(action, g, m.at(r, c)));
    return out;
}

SkewElement skew_zero(const GradedAlgebraAction& action) {
    return SkewElement{std::vector<LaurentElement>(action.group.order(),
                                                   LaurentElement(action.field))};
}

SkewElement skew_term(const GradedAlgebraAction& action, const LaurentElement& a,
                      std::size_t g) {
    if (g >= action.group.order()) throw Error("skew term element out of range");
    SkewElement out = skew_zero(action);
    out.coeffs[g] = out.coeffs[g] + a;
    return out;
}

SkewElement skew_add(const GradedAlgebraAction& action, const SkewElement& a,
                     const SkewElement& b) {
    require_same_context(action, a);
    require_same_context(action, b);
    SkewElement out = skew_zero(action);
    for (std::size_t g = 0; g < action.group.order(); ++g)
        out.coeffs[g] = a.coeffs[g] + b.coeffs[g];
    return out;
}

SkewElement skew_product(const GradedAlgebraAction& action, const SkewElement& a,
                         const SkewElement& b) {
    require_same_context(action, a);
    require_same_context(action, b);
    SkewElement out = skew_zero(action);
    for (std::size_t g = 0; g < action.group.order(); ++g) {
        if (a.coeffs[g].is_zero()) continue;
        for (std::size_t h = 0; h < action.group.order(); ++h) {
            if (b.coeffs[h].is_zero()) continue;
            std::size_t gh = action.group.mul(g, h);
            out.coeffs[gh] = out.coeffs[gh] + a.coeffs[g] * twist(action, g, b.coeffs[h]);
        }
    }
    return out;
}

bool skew_equal(const SkewElement& a, const SkewElement& b) {
    return a.coeffs == b.coeffs;
}

HeckeContext hecke_context(const GradedAlgebraAction& action, const Subgroup& subgroup) {
    if (subgroup.parent() != action.group)
        throw Error("subgroup does not live in the acting group");
    std::vector<Coset> cosets = left_cosets(action.group, subgroup);
    std::vector<std::size_t> coset_of(action.group.order(), 0);
    for (std::size_t c = 0; c < cosets.size(); ++c)
        for (std::size_t g : cosets[c].elements) coset_of[g] = c;
    return HeckeContext{action, subgroup, std::move(cosets), std::move(coset_of)};
}

HeckeElement hecke_element(const HeckeContext& ctx, std::vector<LaurentElement> coeffs) {
    if (coeffs.size() != ctx.cosets.size())
        throw Error("hecke element needs one coefficient per coset");
    for (const LaurentElement& c : coeffs)
        if (c.field() != ctx.action.field) throw Error("hecke element over a different field");
    require_fixed_coefficients(ctx, coeffs, "hecke element coefficients are not H-fixed");
    return HeckeElement{std::move(coeffs)};
}

HeckeElement hecke_unit(const HeckeContext& ctx) {
    std::vector<LaurentElement> coeffs(ctx.cosets.size(), LaurentElement(ctx.action.field));
    coeffs[ctx.coset_of[ctx.action.group.identity()]] =
        LaurentElement::constant(ctx.action.field.one());
    return hecke_element(ctx, std::move(coeffs));
}

HeckeElement hecke_add(const HeckeContext& ctx, const HeckeElement& a, const HeckeElement& b) {
    if (a.coeffs.size() != ctx.cosets.size() || b.coeffs.size() != ctx.cosets.size())
        throw Error("hecke sum over mismatched contexts");
    std::vector<LaurentElement> coeffs;
    coeffs.reserve(ctx.cosets.size());
    for (std::size_t c = 0; c < ctx.cosets.size(); ++c)
        coeffs.push_back(a.coeffs[c] + b.coeffs[c]);
    return hecke_element(ctx, std::move(coeffs));
}

bool hecke_equal(const HeckeElement& a, const HeckeElement& b) {
    return a.coeffs == b.coeffs;
}

std::string hecke_str(const HeckeContext& ctx, const HeckeElement& a) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t c = 0; c < ctx.cosets.size(); ++c) {
        if (a.coeffs[c].is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        std::string coeff = a.coeffs[c].str();
        if (coeff != "1") out << '(' << coeff << ')' << '*';
        out << ctx.action.group.name_of(ctx.cosets[c].representative) << 'H';
    }
    if (first) out << '0';
    return out.str();
}

std::vector<HeckeElement> hecke_basis(const HeckeContext& ctx) {
    const FiniteGroup& group = ctx.action.group;
    bool twisted = false;
    for (std::size_t h : ctx.subgroup.members())
        if (!ctx.action.chi[h].is_one() || ctx.action.frobenius[h]) twisted = true;
    std::vector<long> windows{0};
    if (twisted) {
        for (std::size_t h : ctx.subgroup.members())
            if (!ctx.action.chi[h].pow(3).is_one() || ctx.action.frobenius[h])
                throw Error("grading twist on the subgroup is not by cube roots of unity");
        windows = {0, 1, -1};
    }
    std::vector<DoubleCoset> doubles = double_cosets(group, ctx.subgroup);
    std::vector<HeckeElement> out;
    for (long window : windows) {
        for (const DoubleCoset& d : doubles) {
            std::vector<LaurentElement> coeffs(ctx.cosets.size(),
                                               LaurentElement(ctx.action.field));
            LaurentElement seed = LaurentElement::u_power(ctx.action.field, window);
            bool consistent = true;
            for (std::size_t h : ctx.subgroup.members()) {
                std::size_t c = ctx.coset_of[group.mul(h, d.representative)];
                LaurentElement value = twist(ctx.action, h, seed);
                if (coeffs[c].is_zero())
                    coeffs[c] = value;
                else if (coeffs[c] != value)
                    consistent = false;
            }
            if (consistent) out.push_back(hecke_element(ctx, std::move(coeffs)));
        }
    }
    return out;
}

HeckeElement hecke_mul_over(const HeckeContext& ctx, const HeckeElement& a,
                            const HeckeElement& b,
                            const std::vector<std::size_t>& transversal) {
    if (a.coeffs.size() != ctx.cosets.size() || b.coeffs.size() != ctx.cosets.size())
        throw Error("hecke product over mismatched contexts");
    require_transversal(ctx, transversal);
    const FiniteGroup& group = ctx.action.group;
    std::vector<LaurentElement> coeffs(ctx.cosets.size(), LaurentElement(ctx.action.field));
    for (std::size_t cx = 0; cx < ctx.cosets.size(); ++cx) {
        if (a.coeffs[cx].is_zero()) continue;
        std::size_t x = transversal[cx];
        for (std::size_t cy = 0; cy < ctx.cosets.size(); ++cy) {
            if (b.coeffs[cy].is_zero()) continue;
            std::size_t target = ctx.coset_of[group.mul(x, transversal[cy])];
            coeffs[target] =
                coeffs[target] + a.coeffs[cx] * twist(ctx.action, x, b.coeffs[cy]);
        }
    }
    require_fixed_coefficients(ctx, coeffs,
                               "hecke product escaped the fixed points: the coefficient "
                               "twist is inconsistent with the group action");
    return HeckeElement{std::move(coeffs)};
}

HeckeElement hecke_mul(const HeckeContext& ctx, const HeckeElement& a, const HeckeElement& b) {
    return hecke_mul_over(ctx, a, b, canonical_transversal(ctx));
}

GradedGModule graded_module_from_right_action(
    const GradedAlgebraAction& action, std::vector<std::string> names, std::vector<long> degrees,
    const std::vector<std::pair<std::string, LaurentMatrix>>& generators) {
    const FiniteGroup& group = action.group;
    const std::size_t n = names.size();
    if (degrees.size() != n) throw Error("module needs one degree per basis name");
    if (generators.empty()) throw Error("module needs at least one generator matrix");
    std::vector<std::optional<LaurentMatrix>> rho(group.order());
    rho[group.identity()] = LaurentMatrix::identity(action.field, n);
    std::vector<std::size_t> gen_indices;
    for (const auto& [name, matrix] : generators) {
        std::size_t g = group.index_of(name);
        if (matrix.rows() != n || matrix.cols() != n || matrix.field() != action.field)
            throw Error("generator matrix shape does not match the basis");
        if (rho[g] && *rho[g] != matrix)
            throw Error("right action is inconsistent at " + name);
        rho[g] = matrix;
        gen_indices.push_back(g);
    }
    /* Complete by right multiplication.  A coefficient passes the action of s
     * by picking up the inverse twist, z a s = (z s)(s^-1 a), so the matrices
     * compose as rho(g s) = rho(s) (s^-1 rho(g)). */
    std::queue<std::size_t> frontier;
    for (std::size_t g = 0; g < group.order(); ++g)
        if (rho[g]) frontier.push(g);
    while (!frontier.empty()) {
        std::size_t g = frontier.front();
        frontier.pop();
        for (std::size_t s : gen_indices) {
            std::size_t gs = group.mul(g, s);
            LaurentMatrix candidate = *rho[s] * twist(action, group.inverse(s), *rho[g]);
            if (!rho[gs]) {
                rho[gs] = candidate;
                frontier.push(gs);
            } else if (*rho[gs] != candidate) {
                throw Error("right action is inconsistent at " + group.name_of(gs));
            }
        }
    }
    for (std::size_t g = 0; g < group.order(); ++g)
        if (!rho[g]) throw Error("generator matrices do not reach " + group.name_of(g));
    GradedGModule out{action, std::move(names), std::move(degrees), {}};
    out.rho.reserve(group.order());
    for (std::size_t g = 0; g < group.order(); ++g) out.rho.push_back(*rho[g]);
    /* Full composition law, including the coefficient twist. */
    for (std::size_t g = 0; g < group.order(); ++g)
        for (std::size_t h = 0; h < group.order(); ++h) {
            if (out.rho[group.mul(g, h)] !=
                out.rho[h] * twist(action, group.inverse(h), out.rho[g]))
                throw Error("right action violates composition at " + group.name_of(g) + ", " +
                            group.name_of(h));
        }
    /* Degree bookkeeping: the (r, c) entry moves degree deg_c to deg_r, so it
     * must be a u-monomial of exponent (deg_c - deg_r)/2. */
    for (std::size_t g = 0; g < group.order(); ++g)
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                const LaurentElement& entry = out.rho[g].at(r, c);
                if (entry.is_zero()) continue;
                long gap = out.degrees[c] - out.degrees[r];
                if (gap % 2 != 0 || !entry.is_monomial() ||
                    entry.terms().front().first != gap / 2)
                    throw Error("action entry is not degree-homogeneous at " +
                                group.name_of(g));
            }
    return out;
}

LaurentMatrix graded_apply(const GradedGModule& m, std::size_t g, const LaurentMatrix& v) {
    if (g >= m.action.group.order()) throw Error("module action element out of range");
    if (v.rows() != m.names.size()) throw Error("vector shape does not match the module");
    return m.rho[g] * twist(m.action, m.action.group.inverse(g), v);
}

bool is_h_fixed_vector(const GradedGModule& m, const Subgroup& subgroup,
                       const LaurentMatrix& v) {
    for (std::size_t h : subgroup.members())
        if (graded_apply(m, h, v) != v) return false;
    return true;
}

LaurentMatrix hecke_act_over(const HeckeContext& ctx, const HeckeElement& a,
                             const GradedGModule& m, const LaurentMatrix& v,
                             const std::vector<std::size_t>& transversal) {
    if (m.action.group != ctx.action.group || m.action.field != ctx.action.field)
        throw Error("module and hecke algebra have different contexts");
    if (a.coeffs.size() != ctx.cosets.size())
        throw Error("hecke element does not match the context");
    require_transversal(ctx, transversal);
    require_column(m, v);
    if (!is_h_fixed_vector(m, ctx.subgroup, v))
        throw Error("vector is not fixed by the subgroup");
    LaurentMatrix out(m.action.field, v.rows(), 1);
    for (std::size_t c = 0; c < ctx.cosets.size(); ++c) {
        if (a.coeffs[c].is_zero()) continue;
        out = out + graded_apply(m, transversal[c], v).scaled(a.coeffs[c]);
    }
    if (!is_h_fixed_vector(m, ctx.subgroup, out))
        throw Error("fixed-point action output escaped the fixed points");
    return out;
}

LaurentMatrix hecke_act(const HeckeContext& ctx, const HeckeElement& a, const GradedGModule& m,
                        const LaurentMatrix& v) {
    return hecke_act_over(ctx, a, m, v, canonical_transversal(ctx));
}

LaurentMatrix hecke_action_matrix(const HeckeContext& ctx, const HeckeElement& a,
                                  const GradedGModule& m,
                                  const std::vector<std::size_t>& fixed_basis) {
    LaurentMatrix out(ctx.action.field, fixed_basis.size(), fixed_basis.size());
    for (std::size_t col = 0; col < fixed_basis.size(); ++col) {
        LaurentMatrix image = hecke_act(ctx, a, m, standard_column(m, fixed_basis[col]));
        std::vector<bool> listed(m.names.size(), false);
        for (std::size_t idx : fixed_basis) listed[idx] = true;
        for (std::size_t r = 0; r < image.rows(); ++r)
            if (!listed[r] && !image.at(r, 0).is_zero())
                throw Error("action image leaves the listed fixed basis");
        for (std::size_t row = 0; row < fixed_basis.size(); ++row)
            out.set(row, col, image.at(fixed_basis[row], 0));
    }
    return out;
}

LaurentMatrix double_coset_act(const HeckeContext& ctx, const Subgroup& complement,
                               std::size_t n, const GradedGModule& m, const LaurentMatrix& v) {
    const FiniteGroup& group = ctx.action.group;
    if (complement.parent() != group) throw Error("complement does not live in the group");
    if (!complement.is_normal()) throw Error("complement must be normal");
    if (complement.order() * ctx.subgroup.order() != group.order())
        throw Error("subgroup and complement do not factor the group");
    for (std::size_t shared : complement.members())
        if (shared != group.identity() && ctx.subgroup.contains(shared))
            throw Error("subgroup and complement overlap");
    if (!complement.contains(n)) throw Error("element is outside the normal complement");
    require_column(m, v);
    if (!is_h_fixed_vector(m, ctx.subgroup, v))
        throw Error("vector is not fixed by the subgroup");
    std::set<std::size_t> conjugates;
    for (std::size_t h : ctx.subgroup.members()) conjugates.insert(group.conjugate(h, n));
    LaurentMatrix out(m.action.field, v.rows(), 1);
    for (std::size_t c : conjugates) out = out + graded_apply(m, c, v);
    if (!is_h_fixed_vector(m, ctx.subgroup, out))
        throw Error("double coset action output escaped the fixed points");
    return out;
}

G24FixedPointData g24_module_and_fixed_points(const FiniteField& f4) {
    GradedAlgebraAction action = g24_graded_action(f4);
    LaurentMatrix mi = LaurentMatrix::parse_text(f4,
                                                 "1 u^2 w*u^3\n"
                                                 "0 1 u\n"
                                                 "0 0 1");
    LaurentMatrix mj = LaurentMatrix::parse_text(f4,
                                                 "1 w*u^2 w*u^3\n"
                                                 "0 1 w2*u\n"
                                                 "0 0 1");
    LaurentMatrix mw = LaurentMatrix::identity(f4, 3);
    GradedGModule module = graded_module_from_right_action(
        action, {"z0", "z4", "z6"}, {0, 4, 6}, {{"i", mi}, {"j", mj}, {"w", mw}});
    Subgroup c3(action.group, {0, 8, 16});
    std::vector<std::size_t> fixed;
    for (std::size_t idx = 0; idx < module.names.size(); ++idx) {
        if (!is_h_fixed_vector(module, c3, standard_column(module, idx)))
            throw Error("basis vector is not fixed by the order 3 subgroup");
        fixed.push_back(idx);
    }
    return G24FixedPointData{std::move(module), std::move(fixed)};
}

Matrix normalized_restriction_matrix(const GradedGModule& m, std::size_t g) {
    if (g >= m.action.group.order()) throw Error("restriction element out of range");
    if (!m.action.chi[g].is_one() || m.action.frobenius[g])
        throw Error("element twists the coefficients, restriction is not scalar");
    const std::size_t n = m.names.size();
    Matrix out(m.action.field, n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            const LaurentElement& entry = m.rho[g].at(r, c);
            if (entry.is_zero()) continue;
            long gap = m.degrees[c] - m.degrees[r];
            if (gap % 2 != 0) throw Error("basis degrees do not normalize");
            out.set(r, c, entry.coeff(gap / 2));
        }
    return out;
}

}  // namespace jokerlab
