#include "jokerlab/ext.hpp"

#include <string>

namespace jokerlab {

namespace {

Matrix aug_rows(const FiniteField& field, std::size_t order, std::size_t copies) {
    Matrix a(field, copies, copies * order);
    for (std::size_t t = 0; t < copies; ++t)
        for (std::size_t g = 0; g < order; ++g) a.set(t, t * order + g, field.one());
    return a;
}

}  // namespace

ExtRing::ExtRing(FreeResolution res)
    : res_(std::move(res)), regular_(regular_module(res_.field, res_.group)) {
    verify_resolution(res_);
}

CohomClass ExtRing::zero_class(std::size_t degree) const {
    return CohomClass{degree,
                      std::vector<FieldElement>(betti(degree), res_.field.zero())};
}

CohomClass ExtRing::make_class(std::size_t degree, std::vector<FieldElement> coeffs) const {
    if (degree > max_degree()) throw Error("class degree exceeds resolution length");
    if (coeffs.size() != betti(degree))
        throw Error("class coefficient count does not match the Betti number");
    for (const FieldElement& c : coeffs)
        if (c.field() != res_.field) throw Error("class coefficients from a foreign field");
    return CohomClass{degree, std::move(coeffs)};
}

bool ExtRing::is_zero(const CohomClass& c) const {
    for (const FieldElement& x : c.coeffs)
        if (!x.is_zero()) return false;
    return true;
}

CohomClass ExtRing::add(const CohomClass& a, const CohomClass& b) const {
    if (a.degree != b.degree) throw Error("adding classes of different degrees");
    CohomClass out = a;
    for (std::size_t t = 0; t < out.coeffs.size(); ++t)
        out.coeffs[t] = out.coeffs[t] + b.coeffs[t];
    return out;
}

CohomClass ExtRing::scale(const FieldElement& s, const CohomClass& a) const {
    CohomClass out = a;
    for (FieldElement& x : out.coeffs) x = s * x;
    return out;
}

std::string ExtRing::str(const CohomClass& c) const {
    std::string out = "[";
    for (std::size_t t = 0; t < c.coeffs.size(); ++t) {
        if (t) out += ", ";
        out += c.coeffs[t].str();
    }
    return out + "]";
}

Matrix ExtRing::class_to_column(const CohomClass& c) const {
    Matrix col(res_.field, c.coeffs.size(), 1);
    for (std::size_t t = 0; t < c.coeffs.size(); ++t) col.set(t, 0, c.coeffs[t]);
    return col;
}

CohomClass ExtRing::column_to_class(std::size_t degree, const Matrix& col) const {
    std::vector<FieldElement> coeffs;
    for (std::size_t t = 0; t < col.rows(); ++t) coeffs.push_back(col.at(t, 0));
    return make_class(degree, std::move(coeffs));
}

Matrix ExtRing::equivariant_extend(const Matrix& gen_images) const {
    const std::size_t n = res_.group.order();
    const std::size_t src_copies = gen_images.cols();
    Matrix out(res_.field, gen_images.rows(), src_copies * n);
    const std::size_t tgt_copies = gen_images.rows() / n;
    Matrix eye = Matrix::identity(res_.field, tgt_copies);
    for (std::size_t g = 0; g < n; ++g) {
        Matrix moved = kronecker(eye, regular_.rho(g)) * gen_images;
        for (std::size_t t = 0; t < src_copies; ++t)
            for (std::size_t r = 0; r < moved.rows(); ++r)
                out.set_bits(r, t * n + g, moved.bits_at(r, t));
    }
    return out;
}

FieldElement ExtRing::evaluate_degree1(const CohomClass& c, std::size_t g) const {
    if (c.degree != 1) throw Error("group evaluation needs a degree-1 class");
    if (g >= res_.group.order()) throw Error("group element out of range");
    if (g == res_.group.identity()) return res_.field.zero();
    const std::size_t n = res_.group.order();
    Matrix rhs(res_.field, n, 1);
    rhs.set(0, 0, res_.field.one());
    rhs.set(g, 0, res_.field.one());  // e_g - e_1 in characteristic 2
    auto w = res_.differentials.at(0).solve(rhs);
    if (!w) throw Error("g - 1 is not in the image of d_1; resolution broken");
    Matrix sums = aug_rows(res_.field, n, betti(1)) * *w;
    FieldElement val = res_.field.zero();
    for (std::size_t t = 0; t < betti(1); ++t) val = val + c.coeffs[t] * sums.at(t, 0);
    return val;
}

std::pair<CohomClass, CohomClass> ExtRing::generators_uv() const {
    const auto& gens = res_.group.generators();
    auto it_i = gens.find("i");
    auto it_j = gens.find("j");
    if (it_i == gens.end() || it_j == gens.end())
        throw Error("normalized degree-1 generators need group generators named i and j");
    if (betti(1) != 2) throw Error("normalized generators need a 2-dimensional Ext^1");

    Matrix eval(res_.field, 2, 2);
    for (std::size_t t = 0; t < 2; ++t) {
        std::vector<FieldElement> e(2, res_.field.zero());
        e[t] = res_.field.one();
        CohomClass basis = make_class(1, e);
        eval.set(t, 0, evaluate_degree1(basis, it_i->second));
        eval.set(t, 1, evaluate_degree1(basis, it_j->second));
    }
    Matrix lhs = eval.transpose();
    Matrix want(res_.field, 2, 2);  // columns: u-values, v-values on (i, j)
    want.set(0, 0, res_.field.one());
    want.set(1, 1, res_.field.one());
    auto sol = lhs.solve(want);
    if (!sol) throw Error("evaluation pairing on Ext^1 is degenerate");
    return {column_to_class(1, sol->column(0)), column_to_class(1, sol->column(1))};
}

std::vector<Matrix> ExtRing::chain_map(const CohomClass& c) const {
    const std::size_t n = res_.group.order();
    const std::size_t p = c.degree;
    if (p > max_degree()) throw Error("class degree exceeds resolution length");

    std::vector<Matrix> f;
    Matrix gen0(res_.field, n, betti(p));
    for (std::size_t t = 0; t < betti(p); ++t) gen0.set(0, t, c.coeffs[t]);
    f.push_back(equivariant_extend(gen0));

    for (std::size_t s = 1; p + s <= max_degree(); ++s) {
        const Matrix& d_high = res_.differentials.at(p + s - 1);  // d_{p+s}
        const Matrix& d_low = res_.differentials.at(s - 1);       // d_s
        Matrix gen_cols(res_.field, d_high.rows(), betti(p + s));
        for (std::size_t t = 0; t < betti(p + s); ++t)
            for (std::size_t r = 0; r < d_high.rows(); ++r)
                gen_cols.set_bits(r, t, d_high.bits_at(r, t * n));
        auto v = d_low.solve(f.back() * gen_cols);
        if (!v) throw Error("chain map lifting failed; resolution not exact");
        f.push_back(equivariant_extend(*v));
    }
    return f;
}

CohomClass ExtRing::cup(const CohomClass& a, const CohomClass& b) const {
    const std::size_t n = res_.group.order();
    std::size_t deg = a.degree + b.degree;
    if (deg > max_degree()) throw Error("cup product exceeds resolution length");
    std::vector<Matrix> fa = chain_map(a);
    std::vector<Matrix> fb = chain_map(b);
    Matrix bottom = fa.at(0) * fb.at(a.degree);
    std::vector<FieldElement> coeffs;
    for (std::size_t t = 0; t < betti(deg); ++t) {
        FieldElement s = res_.field.zero();
        for (std::size_t r = 0; r < bottom.rows(); ++r) s = s + bottom.at(r, t * n);
        coeffs.push_back(s);
    }
    return make_class(deg, std::move(coeffs));
}

std::vector<Matrix> ExtRing::nullhomotopy(const std::vector<Matrix>& f, std::size_t shift,
                                          std::size_t stages, unsigned variant) const {
    const std::size_t n = res_.group.order();
    if (stages > f.size()) throw Error("nullhomotopy needs more composite stages");
    if (!(aug_rows(res_.field, n, 1) * f.at(0)).is_zero())
        throw Error("nullhomotopy of a chain map with nonzero class");

    std::vector<Matrix> h;
    for (std::size_t s = 0; s < stages; ++s) {
        Matrix rhs_full = f.at(s);
        if (s > 0) rhs_full = rhs_full + h.back() * res_.differentials.at(shift + s - 1);
        Matrix gen_cols(res_.field, rhs_full.rows(), betti(shift + s));
        for (std::size_t t = 0; t < betti(shift + s); ++t)
            for (std::size_t r = 0; r < rhs_full.rows(); ++r)
                gen_cols.set_bits(r, t, rhs_full.bits_at(r, t * n));
        auto v = res_.differentials.at(s).solve(gen_cols);
        if (!v) throw Error("nullhomotopy solve failed; resolution not exact");
        if (s == 0 && variant > 0) {
            Matrix kb = res_.differentials.at(0).kernel_basis();
            if (kb.cols() == 0)
                throw Error("d_1 has no kernel: no alternative nullhomotopy exists");
            Matrix alt = kb.column((variant - 1) % kb.cols());
            for (std::size_t t = 0; t < v->cols(); ++t)
                for (std::size_t r = 0; r < v->rows(); ++r)
                    v->set(r, t, v->at(r, t) + alt.at(r, 0));
        }
        h.push_back(equivariant_extend(*v));
    }

    /* Exact check of d H_s + H_{s-1} d = f_s. */
    for (std::size_t s = 0; s < stages; ++s) {
        Matrix lhs = res_.differentials.at(s) * h.at(s);
        if (s > 0) lhs = lhs + h.at(s - 1) * res_.differentials.at(shift + s - 1);
        if (!(lhs == f.at(s))) throw Error("nullhomotopy identity violated");
    }
    return h;
}

ExtRing::Massey ExtRing::massey_triple(const CohomClass& a, const CohomClass& b,
                                       const CohomClass& c,
                                       unsigned nullhomotopy_variant) const {
    const std::size_t n = res_.group.order();
    const std::size_t p = a.degree, q = b.degree, r = c.degree;
    if (p == 0 || q == 0 || r == 0)
        throw Error("massey products need positive-degree classes");
    const std::size_t target = p + q + r - 1;
    if (target > max_degree() || p + q > max_degree() || q + r > max_degree())
        throw Error("massey product exceeds resolution length");

    CohomClass ab = cup(a, b);
    if (!is_zero(ab))
        throw Error("massey product undefined: the product of the first two classes is " +
                    str(ab));
    CohomClass bc = cup(b, c);
    if (!is_zero(bc))
        throw Error("massey product undefined: the product of the last two classes is " +
                    str(bc));

    std::vector<Matrix> fa = chain_map(a);
    std::vector<Matrix> fb = chain_map(b);
    std::vector<Matrix> fc = chain_map(c);

    /* Composite of the lifts of b and c, stages 0 .. p-1 (enough for K_{p-1}),
     * plus a witness nullhomotopy of the a,b composite at stage 0. */
    std::vector<Matrix> composite_bc;
    for (std::size_t s = 0; s < p; ++s) composite_bc.push_back(fb.at(s) * fc.at(q + s));
    std::vector<Matrix> composite_ab{fa.at(0) * fb.at(p)};
    nullhomotopy(composite_ab, p + q, 1);

    std::vector<Matrix> k = nullhomotopy(composite_bc, q + r, p, nullhomotopy_variant);

    Matrix bottom = fa.at(0) * k.at(p - 1);
    std::vector<FieldElement> coeffs;
    for (std::size_t t = 0; t < betti(target); ++t) {
        FieldElement s = res_.field.zero();
        for (std::size_t row = 0; row < bottom.rows(); ++row)
            s = s + bottom.at(row, t * n);
        coeffs.push_back(s);
    }
    CohomClass rep = make_class(target, std::move(coeffs));

    /* Indeterminacy a.Ext^{q+r-1} + Ext^{p+q-1}.c as an echelon basis. */
    Matrix span(res_.field, betti(target), 0);
    auto push = [&](const CohomClass& x) { span = hcat(span, class_to_column(x)); };
    for (std::size_t t = 0; t < betti(q + r - 1); ++t) {
        std::vector<FieldElement> e(betti(q + r - 1), res_.field.zero());
        e[t] = res_.field.one();
        push(cup(a, make_class(q + r - 1, e)));
    }
    for (std::size_t t = 0; t < betti(p + q - 1); ++t) {
        std::vector<FieldElement> e(betti(p + q - 1), res_.field.zero());
        e[t] = res_.field.one();
        push(cup(make_class(p + q - 1, e), c));
    }
    Matrix echelon = column_space_basis(span);
    std::vector<CohomClass> indet;
    for (std::size_t t = 0; t < echelon.cols(); ++t)
        indet.push_back(column_to_class(target, echelon.column(t)));
    return Massey{rep, indet};
}

bool ExtRing::massey_contains(const Massey& m, const CohomClass& x) const {
    if (x.degree != m.representative.degree) return false;
    Matrix span(res_.field, x.coeffs.size(), 0);
    for (const CohomClass& c : m.indeterminacy) span = hcat(span, class_to_column(c));
    Matrix diff = class_to_column(add(x, m.representative));  // x - rep in char 2
    return in_column_span(span, diff);
}

std::vector<CohomClass> ExtRing::massey_elements(const Massey& m,
                                                 std::size_t max_elements) const {
    const std::size_t qsize = res_.field.size();
    std::size_t count = 1;
    for (std::size_t t = 0; t < m.indeterminacy.size(); ++t) {
        count *= qsize;
        if (count > max_elements)
            throw Error("massey coset too large to enumerate");
    }
    std::vector<CohomClass> out;
    std::vector<FieldElement> scalars = res_.field.elements();
    for (std::size_t code = 0; code < count; ++code) {
        CohomClass e = m.representative;
        std::size_t c = code;
        for (const CohomClass& basis : m.indeterminacy) {
            e = add(e, scale(scalars[c % qsize], basis));
            c /= qsize;
        }
        out.push_back(e);
    }
    return out;
}

}  // namespace jokerlab
