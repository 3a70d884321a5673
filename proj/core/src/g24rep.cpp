#include "jokerlab/g24rep.hpp"

namespace jokerlab {

Matrix left_mult_operator(const GModule& regular, const Matrix& a) {
    Matrix op(regular.field(), regular.dim(), regular.dim());
    for (std::size_t g = 0; g < regular.group().order(); ++g)
        if (!a.at(g, 0).is_zero()) op = op + regular.rho(g).scaled(a.at(g, 0));
    return op;
}

Matrix algebra_mul(const GModule& regular, const Matrix& a, const Matrix& b) {
    return left_mult_operator(regular, a) * b;
}

Matrix subspace_product(const GModule& regular, const Matrix& ubasis,
                        const Matrix& vbasis) {
    Matrix products(regular.field(), regular.dim(), 0);
    for (std::size_t i = 0; i < ubasis.cols(); ++i) {
        Matrix op = left_mult_operator(regular, ubasis.column(i));
        products = hcat(products, op * vbasis);
    }
    return column_space_basis(products);
}

Matrix lift_idempotent(const GModule& regular, const Matrix& e0, unsigned max_rounds) {
    Matrix e = e0;
    for (unsigned round = 0; round < max_rounds; ++round) {
        Matrix sq = algebra_mul(regular, e, e);
        if (sq == e) return e;
        e = std::move(sq);
    }
    throw Error("idempotent lifting did not converge");
}

std::vector<Matrix> complete_orthogonal_idempotents(const GModule& regular,
                                                    const std::vector<Matrix>& seeds) {
    if (seeds.empty()) throw Error("no idempotent seeds given");
    Matrix unit(regular.field(), regular.dim(), 1);
    unit.set(regular.group().identity(), 0, regular.field().one());

    std::vector<Matrix> out;
    Matrix used(regular.field(), regular.dim(), 1);  // sum of accepted idempotents
    for (std::size_t s = 0; s + 1 < seeds.size(); ++s) {
        Matrix e = lift_idempotent(regular, seeds[s]);
        /* Push into the corner (1 - used) A (1 - used), then re-lift. */
        Matrix corner = unit + used;  // char 2: 1 - used
        Matrix cop = left_mult_operator(regular, corner);
        Matrix rop = left_mult_operator(regular, e);
        Matrix pushed = cop * (rop * corner);
        e = lift_idempotent(regular, pushed);
        out.push_back(e);
        used = used + e;
    }
    Matrix last = unit + used;
    if (algebra_mul(regular, last, last) != last)
        throw Error("leftover idempotent is not exact");
    out.push_back(last);
    for (std::size_t a = 0; a < out.size(); ++a)
        for (std::size_t b = 0; b < out.size(); ++b) {
            if (a == b) continue;
            if (!algebra_mul(regular, out[a], out[b]).is_zero())
                throw Error("lifted idempotents are not orthogonal");
        }
    return out;
}

G24RepTheory g24_rep_theory() {
    const FiniteField f4 = FiniteField::f4();
    G24 g24 = make_g24();
    GModule reg = regular_module(f4, g24.group);

    /* Radical = A I(Q8): span of g (q - 1) over g in G24, q in Q8. */
    Matrix spanning(f4, 24, 0);
    for (std::size_t g = 0; g < 24; ++g) {
        for (std::size_t q = 1; q < 8; ++q) {
            Matrix v(f4, 24, 1);
            v.set(g24.group.mul(g, q), 0, f4.one());
            v.set(g, 0, v.at(g, 0) + f4.one());
            spanning = hcat(spanning, v);
        }
    }
    Matrix radical = column_space_basis(spanning);
    if (radical.cols() != 21) throw Error("radical of F4[G24] has unexpected dimension");

    /* F4[C3] idempotents: e_a = sum_b w^{-ab} (w-element b); 1/3 = 1 in char 2. */
    const std::size_t widx = g24.group.index_of("w");
    std::vector<Matrix> seeds;
    for (unsigned a = 0; a < 3; ++a) {
        Matrix e(f4, 24, 1);
        std::size_t wb = g24.group.identity();
        for (unsigned b = 0; b < 3; ++b) {
            long exp = -static_cast<long>(a) * static_cast<long>(b);
            e.set(wb, 0, f4.omega().pow(exp));
            wb = g24.group.mul(wb, widx);
        }
        seeds.push_back(std::move(e));
    }
    std::vector<Matrix> idempotents = complete_orthogonal_idempotents(reg, seeds);

    /* Characters: Q8 acts trivially, w acts by w^a. */
    std::vector<GModule> simples;
    for (unsigned a = 0; a < 3; ++a) {
        std::vector<Matrix> rho;
        for (std::size_t g = 0; g < 24; ++g) {
            Matrix m(f4, 1, 1);
            m.set(0, 0, f4.omega().pow(static_cast<long>(a) * static_cast<long>(g / 8)));
            rho.push_back(std::move(m));
        }
        simples.emplace_back(f4, g24.group, std::move(rho));
    }

    std::vector<GModule> projectives;
    for (const Matrix& e : idempotents) {
        Matrix images(f4, 24, 0);
        for (std::size_t g = 0; g < 24; ++g) images = hcat(images, reg.rho(g) * e);
        Matrix basis = column_space_basis(images);
        projectives.push_back(submodule_module(reg, basis).module);
    }

    return G24RepTheory{std::move(g24),        std::move(reg),     std::move(radical),
                        std::move(idempotents), std::move(simples), std::move(projectives)};
}

}  // namespace jokerlab
