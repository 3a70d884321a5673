#include "jokerlab/gmodule.hpp"

#include <algorithm>
#include <deque>

namespace jokerlab {

GModule::GModule(FiniteField field, FiniteGroup group, std::vector<Matrix> rho)
    : field_(std::move(field)), group_(std::move(group)), dim_(0) {
    if (rho.size() != group_.order())
        throw Error("action table must have one matrix per group element");
    dim_ = rho.empty() ? 0 : rho.front().rows();
    for (const auto& m : rho) {
        if (!(m.field() == field_)) throw Error("action matrix over the wrong field");
        if (m.rows() != dim_ || m.cols() != dim_)
            throw Error("action matrices must be square of equal size");
    }
    if (!rho[group_.identity()].is_identity())
        throw Error("identity element must act as the identity matrix");
    for (std::size_t a = 0; a < group_.order(); ++a)
        for (std::size_t b = 0; b < group_.order(); ++b)
            if (rho[a] * rho[b] != rho[group_.mul(a, b)])
                throw Error("action does not respect the group law at " +
                            group_.name_of(a) + " * " + group_.name_of(b));
    rho_ = std::make_shared<const std::vector<Matrix>>(std::move(rho));
}

ModuleMap::ModuleMap(GModule source_, GModule target_, Matrix matrix_)
    : source(std::move(source_)), target(std::move(target_)), matrix(std::move(matrix_)) {
    if (source.group() != target.group())
        throw Error("module map endpoints live over different groups");
    if (!(source.field() == target.field()))
        throw Error("module map endpoints live over different fields");
    if (matrix.rows() != target.dim() || matrix.cols() != source.dim())
        throw Error("module map matrix has the wrong shape");
    for (std::size_t g = 0; g < source.group().order(); ++g)
        if (matrix * source.rho(g) != target.rho(g) * matrix)
            throw Error("module map does not intertwine the actions");
}

GModule module_from_action(const FiniteField& field, const FiniteGroup& group,
                           const std::vector<std::pair<std::string, Matrix>>& generators) {
    if (generators.empty()) throw Error("no generator matrices given");
    const std::size_t dim = generators.front().second.rows();
    const std::size_t n = group.order();
    std::vector<std::optional<Matrix>> known(n);
    std::vector<std::string> word(n);
    known[group.identity()] = Matrix::identity(field, dim);
    word[group.identity()] = "1";

    struct Gen {
        std::size_t idx;
        std::string name;
        Matrix matrix;
    };
    std::vector<Gen> gens;
    for (const auto& [name, mat] : generators) {
        if (!(mat.field() == field)) throw Error("generator matrix over the wrong field");
        if (mat.rows() != dim || mat.cols() != dim)
            throw Error("generator matrices must be square of equal size");
        std::size_t idx = group.index_of(name);
        if (known[idx]) {
            if (*known[idx] != mat)
                throw Error("conflicting matrices supplied for generator '" + name + "'");
        } else {
            known[idx] = mat;
            word[idx] = name;
        }
        gens.push_back(Gen{idx, name, mat});
    }

    std::deque<std::size_t> queue;
    for (std::size_t g = 0; g < n; ++g)
        if (known[g]) queue.push_back(g);
    while (!queue.empty()) {
        std::size_t x = queue.front();
        queue.pop_front();
        for (const auto& [s, wname, smat] : gens) {
            std::size_t y = group.mul(x, s);
            Matrix candidate = *known[x] * smat;
            std::string yword = x == group.identity() ? wname : word[x] + "*" + wname;
            if (!known[y]) {
                known[y] = std::move(candidate);
                word[y] = yword;
                queue.push_back(y);
            } else if (*known[y] != candidate) {
                throw Error("action is inconsistent: words '" + word[y] + "' and '" +
                            yword + "' give different matrices for element '" +
                            group.name_of(y) + "'");
            }
        }
    }
    std::vector<Matrix> rho;
    rho.reserve(n);
    for (std::size_t g = 0; g < n; ++g) {
        if (!known[g])
            throw Error("the given generators do not generate the group");
        rho.push_back(std::move(*known[g]));
    }
    return GModule(field, group, std::move(rho));
}

GModule change_basis(const GModule& m, const Matrix& p) {
    auto pinv = p.inverse();
    if (!pinv) throw Error("change of basis matrix is singular");
    std::vector<Matrix> rho;
    rho.reserve(m.group().order());
    for (std::size_t g = 0; g < m.group().order(); ++g)
        rho.push_back(p * m.rho(g) * *pinv);
    return GModule(m.field(), m.group(), std::move(rho));
}

GModule trivial_module(const FiniteField& field, const FiniteGroup& group,
                       std::size_t dim) {
    std::vector<Matrix> rho(group.order(), Matrix::identity(field, dim));
    return GModule(field, group, std::move(rho));
}

GModule regular_module(const FiniteField& field, const FiniteGroup& group) {
    std::vector<Matrix> rho;
    rho.reserve(group.order());
    for (std::size_t g = 0; g < group.order(); ++g) {
        Matrix m(field, group.order(), group.order());
        for (std::size_t h = 0; h < group.order(); ++h)
            m.set_bits(group.mul(g, h), h, 1);
        rho.push_back(std::move(m));
    }
    return GModule(field, group, std::move(rho));
}

namespace {

void require_compatible(const GModule& m, const GModule& n) {
    if (m.group() != n.group()) throw Error("modules live over different groups");
    if (!(m.field() == n.field())) throw Error("modules live over different fields");
}

}  // namespace

GModule tensor(const GModule& m, const GModule& n) {
    require_compatible(m, n);
    std::vector<Matrix> rho;
    rho.reserve(m.group().order());
    for (std::size_t g = 0; g < m.group().order(); ++g)
        rho.push_back(kronecker(m.rho(g), n.rho(g)));
    return GModule(m.field(), m.group(), std::move(rho));
}

GModule dual(const GModule& m) {
    std::vector<Matrix> rho;
    rho.reserve(m.group().order());
    for (std::size_t g = 0; g < m.group().order(); ++g)
        rho.push_back(m.rho(m.group().inverse(g)).transpose());
    return GModule(m.field(), m.group(), std::move(rho));
}

GModule hom_module(const GModule& m, const GModule& n) {
    return tensor(dual(m), n);
}

GModule direct_sum(const GModule& m, const GModule& n) {
    require_compatible(m, n);
    std::vector<Matrix> rho;
    rho.reserve(m.group().order());
    for (std::size_t g = 0; g < m.group().order(); ++g) {
        Matrix s(m.field(), m.dim() + n.dim(), m.dim() + n.dim());
        for (std::size_t r = 0; r < m.dim(); ++r)
            for (std::size_t c = 0; c < m.dim(); ++c)
                s.set_bits(r, c, m.rho(g).bits_at(r, c));
        for (std::size_t r = 0; r < n.dim(); ++r)
            for (std::size_t c = 0; c < n.dim(); ++c)
                s.set_bits(m.dim() + r, m.dim() + c, n.rho(g).bits_at(r, c));
        rho.push_back(std::move(s));
    }
    return GModule(m.field(), m.group(), std::move(rho));
}

GModule restrict_module(const GModule& m, const Subgroup& h) {
    if (h.parent() != m.group()) throw Error("subgroup of a different group");
    Subgroup::AsGroup ag = h.as_group();
    std::vector<Matrix> rho;
    rho.reserve(ag.to_parent.size());
    for (auto parent_idx : ag.to_parent) rho.push_back(m.rho(parent_idx));
    return GModule(m.field(), ag.group, std::move(rho));
}

SubmoduleResult submodule_module(const GModule& m, const Matrix& basis) {
    if (basis.rows() != m.dim()) throw Error("submodule basis has the wrong height");
    if (basis.rank() != basis.cols()) throw Error("submodule basis columns are dependent");
    std::vector<Matrix> rho;
    rho.reserve(m.group().order());
    for (std::size_t g = 0; g < m.group().order(); ++g) {
        auto x = basis.solve(m.rho(g) * basis);
        if (!x) throw Error("subspace is not stable under the action");
        rho.push_back(std::move(*x));
    }
    GModule sub(m.field(), m.group(), std::move(rho));
    ModuleMap incl(sub, m, basis);
    return SubmoduleResult{std::move(sub), std::move(incl)};
}

QuotientResult quotient_module(const GModule& m, const Matrix& sub_basis) {
    if (sub_basis.rows() != m.dim()) throw Error("subspace basis has the wrong height");
    const std::size_t s = sub_basis.rank();
    if (s != sub_basis.cols()) throw Error("subspace basis columns are dependent");
    Matrix full = sub_basis;
    for (std::size_t c = 0; c < m.dim() && full.cols() < m.dim(); ++c) {
        Matrix e(m.field(), m.dim(), 1);
        e.set_bits(c, 0, 1);
        Matrix cand = hcat(full, e);
        if (cand.rank() == cand.cols()) full = std::move(cand);
    }
    if (full.cols() != m.dim()) throw Error("could not complete the subspace basis");
    Matrix pinv = *full.inverse();
    const std::size_t q = m.dim() - s;
    std::vector<Matrix> rho;
    rho.reserve(m.group().order());
    for (std::size_t g = 0; g < m.group().order(); ++g) {
        Matrix conj = pinv * m.rho(g) * full;
        if (!conj.submatrix(s, 0, q, s).is_zero())
            throw Error("subspace is not stable under the action");
        rho.push_back(conj.submatrix(s, s, q, q));
    }
    GModule quot(m.field(), m.group(), std::move(rho));
    ModuleMap proj(m, quot, pinv.submatrix(s, 0, q, m.dim()));
    return QuotientResult{std::move(quot), std::move(proj)};
}

Matrix norm_matrix(const GModule& m) {
    Matrix n(m.field(), m.dim(), m.dim());
    for (std::size_t g = 0; g < m.group().order(); ++g) n = n + m.rho(g);
    return n;
}

Matrix radical_subspace(const GModule& m) {
    Matrix stacked(m.field(), m.dim(), 0);
    Matrix eye = Matrix::identity(m.field(), m.dim());
    for (std::size_t g = 1; g < m.group().order(); ++g)
        stacked = hcat(stacked, m.rho(g) + eye);
    return column_space_basis(stacked);
}

Matrix fixed_point_basis(const GModule& m) {
    Matrix stacked(m.field(), 0, m.dim());
    Matrix eye = Matrix::identity(m.field(), m.dim());
    for (std::size_t g = 1; g < m.group().order(); ++g)
        stacked = vcat(stacked, m.rho(g) + eye);
    return stacked.kernel_basis();
}

std::vector<Matrix> hom_space(const GModule& m, const GModule& n) {
    require_compatible(m, n);
    const FiniteGroup& g = m.group();
    /* Intertwiner equation per element, vectorized column-major:
     * (I (x) rho_n(g) + rho_m(g)^T (x) I) vec F = 0.  Generators suffice when
     * they generate; otherwise fall back to all elements. */
    std::vector<std::size_t> glist;
    for (const auto& [name, idx] : g.generators()) {
        glist.push_back(idx);
        (void)name;
    }
    if (glist.empty() || g.closure(glist).size() != g.order()) {
        glist.clear();
        for (std::size_t x = 1; x < g.order(); ++x) glist.push_back(x);
    }
    const std::size_t vec_dim = m.dim() * n.dim();
    Matrix eye_m = Matrix::identity(m.field(), m.dim());
    Matrix eye_n = Matrix::identity(m.field(), n.dim());
    Matrix stacked(m.field(), 0, vec_dim);
    for (auto x : glist) {
        Matrix block = kronecker(eye_m, n.rho(x)) + kronecker(m.rho(x).transpose(), eye_n);
        stacked = vcat(stacked, block);
    }
    Matrix kern = stacked.kernel_basis();
    std::vector<Matrix> out;
    out.reserve(kern.cols());
    for (std::size_t j = 0; j < kern.cols(); ++j) {
        Matrix f(m.field(), n.dim(), m.dim());
        for (std::size_t c = 0; c < m.dim(); ++c)
            for (std::size_t r = 0; r < n.dim(); ++r)
                f.set_bits(r, c, kern.bits_at(c * n.dim() + r, j));
        for (std::size_t x = 0; x < g.order(); ++x)
            if (f * m.rho(x) != n.rho(x) * f)
                throw Error("computed intertwiner fails the full check");
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace jokerlab
