#include "jokerlab/stable.hpp"

#include <algorithm>
#include <random>

namespace jokerlab {

namespace {

Matrix block_diag(const Matrix& a, const Matrix& b) {
    Matrix out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out.set_bits(r, c, a.bits_at(r, c));
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
            out.set_bits(a.rows() + r, a.cols() + c, b.bits_at(r, c));
    return out;
}

bool is_invertible(const Matrix& m) {
    return m.rows() == m.cols() && m.rank() == m.rows();
}

}  // namespace

StripFree strip_free(const GModule& m) {
    if (!m.group().is_2_group())
        throw Error("free-summand stripping requires a 2-group");
    const FiniteGroup& g = m.group();
    const std::size_t n = g.order();
    const GModule reg = regular_module(m.field(), g);

    GModule cur = m;
    std::vector<Matrix> steps;
    while (cur.dim() > 0) {
        Matrix norm = norm_matrix(cur);
        if (norm.is_zero()) break;
        std::size_t vc = cur.dim();
        for (std::size_t c = 0; c < cur.dim(); ++c)
            if (!norm.column(c).is_zero()) { vc = c; break; }
        /* Section: e_h -> rho(h) v.  Nonzero norm image makes it injective,
         * and injections from the regular module split. */
        Matrix v(m.field(), cur.dim(), 1);
        v.set_bits(vc, 0, 1);
        Matrix section(m.field(), cur.dim(), n);
        for (std::size_t h = 0; h < n; ++h) {
            Matrix img = cur.rho(h) * v;
            for (std::size_t r = 0; r < cur.dim(); ++r)
                section.set_bits(r, h, img.bits_at(r, 0));
        }
        std::vector<Matrix> homs = hom_space(cur, reg);
        std::optional<Matrix> retraction;
        for (const auto& psi : homs) {
            Matrix comp = psi * section;
            if (auto inv = comp.inverse()) {
                retraction = *inv * psi;
                break;
            }
        }
        if (!retraction) throw Error("free splitting unexpectedly failed");
        Matrix kern = (*retraction).kernel_basis();
        if (kern.cols() + n != cur.dim())
            throw Error("free splitting produced a wrong complement dimension");
        std::vector<Matrix> rem_rho;
        rem_rho.reserve(n);
        for (std::size_t x = 0; x < n; ++x) {
            auto sol = kern.solve(cur.rho(x) * kern);
            if (!sol) throw Error("free splitting complement is not stable");
            rem_rho.push_back(std::move(*sol));
        }
        steps.push_back(hcat(section, kern));
        cur = GModule(m.field(), g, std::move(rem_rho));
    }

    Matrix witness = Matrix::identity(m.field(), cur.dim());
    for (std::size_t i = steps.size(); i-- > 0;)
        witness = steps[i] * block_diag(Matrix::identity(m.field(), n), witness);

    StripFree out{steps.size(), cur, std::move(witness)};

    GModule model = out.remainder;
    for (std::size_t i = 0; i < out.rank; ++i) model = direct_sum(reg, model);
    for (std::size_t x = 0; x < g.order(); ++x)
        if (m.rho(x) * out.witness != out.witness * model.rho(x))
            throw Error("free splitting witness fails to intertwine");
    if (!is_invertible(out.witness))
        throw Error("free splitting witness is singular");
    return out;
}

ProjectiveCover projective_cover(const GModule& m) {
    if (!m.group().is_2_group())
        throw Error("projective covers are implemented for 2-groups");
    const FiniteGroup& g = m.group();
    const std::size_t n = g.order();
    Matrix rad = radical_subspace(m);
    /* Greedily lift a basis of m / rad m from standard basis vectors. */
    std::vector<std::size_t> tops;
    Matrix span = rad;
    for (std::size_t c = 0; c < m.dim(); ++c) {
        Matrix e(m.field(), m.dim(), 1);
        e.set_bits(c, 0, 1);
        Matrix cand = hcat(span, e);
        if (cand.rank() == span.rank() + 1) {
            tops.push_back(c);
            span = std::move(cand);
        }
    }
    const std::size_t t = tops.size();

    GModule cover = trivial_module(m.field(), g, 0);
    const GModule reg = regular_module(m.field(), g);
    for (std::size_t i = 0; i < t; ++i)
        cover = i == 0 ? reg : direct_sum(cover, reg);
    if (t == 0) cover = trivial_module(m.field(), g, 0);

    Matrix c(m.field(), m.dim(), t * n);
    for (std::size_t a = 0; a < t; ++a) {
        for (std::size_t h = 0; h < n; ++h) {
            Matrix v(m.field(), m.dim(), 1);
            v.set_bits(tops[a], 0, 1);
            Matrix img = m.rho(h) * v;
            for (std::size_t r = 0; r < m.dim(); ++r)
                c.set_bits(r, a * n + h, img.bits_at(r, 0));
        }
    }
    if (c.rank() != m.dim()) throw Error("projective cover map is not surjective");
    ModuleMap surj(cover, m, std::move(c));
    return ProjectiveCover{std::move(cover), std::move(surj)};
}

GModule syzygy(const GModule& m) {
    ProjectiveCover pc = projective_cover(m);
    const std::size_t n = m.group().order();
    Matrix kern = pc.surjection.matrix.kernel_basis();
    /* Minimality: the kernel sits inside rad of the cover, i.e. every column
     * has augmentation zero in each free block. */
    for (std::size_t j = 0; j < kern.cols(); ++j) {
        for (std::size_t a = 0; a * n < kern.rows(); ++a) {
            FieldElement aug = m.field().zero();
            for (std::size_t h = 0; h < n; ++h)
                aug = aug + kern.at(a * n + h, j);
            if (!aug.is_zero()) throw Error("projective cover kernel is not minimal");
        }
    }
    return submodule_module(pc.cover, kern).module;
}

GModule syzygy_power(const GModule& m, std::size_t n) {
    GModule cur = m;
    for (std::size_t i = 0; i < n; ++i) cur = syzygy(cur);
    return cur;
}

namespace {

/* Polynomials over the coefficient field, low degree first, no trailing zeros. */
using Poly = std::vector<FieldElement>;

Poly poly_trim(Poly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

Poly poly_mul(const FiniteField& f, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, f.zero());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
    return poly_trim(std::move(out));
}

/* Remainder of a by monic b. */
Poly poly_mod(const FiniteField&, Poly a, const Poly& b) {
    a = poly_trim(std::move(a));
    while (a.size() >= b.size()) {
        FieldElement lead = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = a[shift + i] + lead * b[i];
        a = poly_trim(std::move(a));
    }
    return a;
}

Poly poly_div_exact(const FiniteField& f, Poly a, const Poly& b) {
    Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, f.zero());
    while (a.size() >= b.size()) {
        FieldElement lead = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = lead;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = a[shift + i] + lead * b[i];
        a = poly_trim(std::move(a));
    }
    if (!a.empty()) throw Error("polynomial division left a remainder");
    return poly_trim(std::move(q));
}

Matrix vec_of(const Matrix& m) {
    Matrix v(m.field(), m.rows() * m.cols(), 1);
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (std::size_t r = 0; r < m.rows(); ++r)
            v.set_bits(c * m.rows() + r, 0, m.bits_at(r, c));
    return v;
}

Poly min_poly(const Matrix& phi) {
    const FiniteField f = phi.field();
    Matrix basis(f, phi.rows() * phi.cols(), 0);
    Matrix power = Matrix::identity(f, phi.rows());
    for (std::size_t k = 0;; ++k) {
        Matrix w = vec_of(power);
        if (hcat(basis, w).rank() == basis.cols()) {
            Matrix coeffs = *basis.solve(w);
            Poly mp(k + 1, f.zero());
            for (std::size_t i = 0; i < k; ++i) mp[i] = coeffs.at(i, 0);
            mp[k] = f.one();
            return mp;
        }
        basis = hcat(basis, w);
        power = power * phi;
    }
}

Matrix eval_poly(const Matrix& phi, const Poly& p) {
    const FiniteField f = phi.field();
    Matrix acc(f, phi.rows(), phi.rows());
    Matrix power = Matrix::identity(f, phi.rows());
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (!p[i].is_zero()) acc = acc + power.scaled(p[i]);
        if (i + 1 < p.size()) power = power * phi;
    }
    return acc;
}

/* Smallest-degree nontrivial monic divisor (necessarily irreducible), found by
 * trial division; the search is capped at degree 6, plenty for the minimal
 * polynomials that arise at this scale. */
std::optional<Poly> smallest_factor(const FiniteField& f, const Poly& mp) {
    const std::size_t deg = mp.size() - 1;
    const unsigned q = f.size();
    for (std::size_t d = 1; 2 * d <= deg && d <= 6; ++d) {
        std::size_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= q;
        for (std::size_t idx = 0; idx < count; ++idx) {
            Poly cand(d + 1, f.zero());
            std::size_t rest = idx;
            for (std::size_t i = 0; i < d; ++i) {
                cand[i] = f.element(static_cast<unsigned>(rest % q));
                rest /= q;
            }
            cand[d] = f.one();
            if (poly_mod(f, mp, cand).empty()) return cand;
        }
    }
    return std::nullopt;
}

/* G-stable complementary pair from a coprime factor split of the minimal
 * polynomial of an endomorphism, or nothing. */
std::optional<std::pair<Matrix, Matrix>> fitting_split(const GModule& m,
                                                       const Matrix& phi) {
    const FiniteField f = m.field();
    Poly mp = min_poly(phi);
    if (mp.size() < 2) return std::nullopt;
    auto p = smallest_factor(f, mp);
    if (!p) return std::nullopt;  // irreducible minimal polynomial
    Poly pe = *p;
    Poly rest = poly_div_exact(f, mp, *p);
    while (poly_mod(f, rest, *p).empty()) {
        pe = poly_mul(f, pe, *p);
        rest = poly_div_exact(f, rest, *p);
    }
    if (rest.size() < 2) return std::nullopt;  // single irreducible power
    Matrix u = eval_poly(phi, pe).kernel_basis();
    Matrix v = eval_poly(phi, rest).kernel_basis();
    if (u.cols() == 0 || v.cols() == 0 || u.cols() + v.cols() != m.dim())
        throw Error("coprime splitting produced wrong dimensions");
    return std::make_pair(std::move(u), std::move(v));
}

std::optional<std::pair<Matrix, Matrix>> find_split(const GModule& m) {
    std::vector<Matrix> ends = hom_space(m, m);
    if (ends.size() <= 1) return std::nullopt;
    const FiniteField f = m.field();

    if (m.dim() < 3) {
        /* Exhaustive idempotent search over the endomorphism space. */
        std::size_t count = 1;
        for (std::size_t i = 0; i < ends.size(); ++i) count *= f.size();
        for (std::size_t idx = 0; idx < count; ++idx) {
            Matrix e(f, m.dim(), m.dim());
            std::size_t rest = idx;
            for (const auto& basis_elt : ends) {
                unsigned digit = static_cast<unsigned>(rest % f.size());
                rest /= f.size();
                if (digit) e = e + basis_elt.scaled(f.element(digit));
            }
            if (e.is_zero() || e.is_identity() || e * e != e) continue;
            Matrix image = column_space_basis(e);
            Matrix kern = e.kernel_basis();
            return std::make_pair(std::move(image), std::move(kern));
        }
        return std::nullopt;
    }

    for (const auto& phi : ends)
        if (auto s = fitting_split(m, phi)) return s;
    for (std::size_t a = 0; a < ends.size(); ++a)
        for (std::size_t b = a + 1; b < ends.size(); ++b)
            if (auto s = fitting_split(m, ends[a] + ends[b])) return s;

    std::mt19937 rng(0x4a4b5250u);
    for (int attempt = 0; attempt < 200; ++attempt) {
        Matrix phi(f, m.dim(), m.dim());
        for (const auto& basis_elt : ends) {
            unsigned digit = static_cast<unsigned>(rng() % f.size());
            if (digit) phi = phi + basis_elt.scaled(f.element(digit));
        }
        if (auto s = fitting_split(m, phi)) return s;
    }
    return std::nullopt;  // treated as indecomposable at this scale
}

void decompose_into(const GModule& m, const Matrix& ambient_basis,
                    Decomposition& out) {
    if (m.dim() == 0) return;
    auto split = find_split(m);
    if (!split) {
        out.parts.push_back(m);
        out.bases.push_back(ambient_basis);
        return;
    }
    for (const Matrix& part_basis : {split->first, split->second}) {
        SubmoduleResult sub = submodule_module(m, part_basis);
        decompose_into(sub.module, ambient_basis * part_basis, out);
    }
}

}  // namespace

Decomposition decompose(const GModule& m) {
    Decomposition out;
    decompose_into(m, Matrix::identity(m.field(), m.dim()), out);
    return out;
}

std::optional<Matrix> module_iso(const GModule& m, const GModule& n) {
    if (m.group() != n.group()) throw Error("modules live over different groups");
    if (!(m.field() == n.field())) throw Error("modules live over different fields");
    if (m.dim() != n.dim()) return std::nullopt;
    if (m.dim() == 0) return Matrix(m.field(), 0, 0);

    std::vector<Matrix> fwd = hom_space(m, n);
    std::vector<Matrix> bwd = hom_space(n, m);
    /* Complete for indecomposables: some composite avoids the radical of the
     * local endomorphism ring exactly when an isomorphism exists. */
    for (const auto& f : fwd)
        for (const auto& g : bwd)
            if (is_invertible(g * f)) return f;

    Decomposition dm = decompose(m);
    Decomposition dn = decompose(n);
    if (dm.parts.size() <= 1 && dn.parts.size() <= 1) return std::nullopt;
    if (dm.parts.size() != dn.parts.size()) return std::nullopt;

    const std::size_t parts = dm.parts.size();
    std::vector<bool> used(parts, false);
    std::vector<Matrix> blocks;
    std::vector<std::size_t> match(parts);
    for (std::size_t i = 0; i < parts; ++i) {
        bool found = false;
        for (std::size_t j = 0; j < parts && !found; ++j) {
            if (used[j]) continue;
            if (auto t = module_iso(dm.parts[i], dn.parts[j])) {
                used[j] = true;
                match[i] = j;
                blocks.push_back(*t);
                found = true;
            }
        }
        if (!found) return std::nullopt;
    }
    Matrix bm(m.field(), m.dim(), 0);
    for (const auto& b : dm.bases) bm = hcat(bm, b);
    Matrix bm_inv = *bm.inverse();
    Matrix t(m.field(), n.dim(), m.dim());
    std::size_t offset = 0;
    for (std::size_t i = 0; i < parts; ++i) {
        const std::size_t d = dm.parts[i].dim();
        Matrix rows = bm_inv.submatrix(offset, 0, d, m.dim());
        t = t + dn.bases[match[i]] * blocks[i] * rows;
        offset += d;
    }
    for (std::size_t g = 0; g < m.group().order(); ++g)
        if (t * m.rho(g) != n.rho(g) * t)
            throw Error("assembled isomorphism fails to intertwine");
    if (!is_invertible(t)) return std::nullopt;
    return t;
}

bool stable_iso(const GModule& m, const GModule& n) {
    StripFree sm = strip_free(m);
    StripFree sn = strip_free(n);
    return module_iso(sm.remainder, sn.remainder).has_value();
}

namespace {

bool endo_trivial_direct(const GModule& m) {
    StripFree sf = strip_free(hom_module(m, m));
    if (sf.remainder.dim() != 1) return false;
    return module_iso(sf.remainder, trivial_module(m.field(), m.group())).has_value();
}

}  // namespace

bool endotrivial(const GModule& m) {
    if (m.dim() == 0) return false;
    bool chouinard = true;
    for (const Subgroup& e : elementary_abelian_subgroups(m.group(), 2))
        chouinard = chouinard && endo_trivial_direct(restrict_module(m, e));
    if (m.group().is_2_group()) {
        bool direct = endo_trivial_direct(m);
        if (direct != chouinard)
            throw Error("endotriviality criteria disagree");
        return direct;
    }
    return chouinard;
}

}  // namespace jokerlab
