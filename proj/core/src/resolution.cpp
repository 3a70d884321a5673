#include "jokerlab/resolution.hpp"

#include <string>

namespace jokerlab {

namespace {

/* Block-diagonal action of g on k[G]^copies. */
Matrix block_action(const GModule& regular, std::size_t copies, std::size_t g) {
    Matrix eye = Matrix::identity(regular.field(), copies);
    return kronecker(eye, regular.rho(g));
}

/* Per-copy augmentation row vector for k[G]^copies. */
Matrix augmentation_rows(const FiniteField& field, std::size_t order, std::size_t copies) {
    Matrix a(field, copies, copies * order);
    for (std::size_t t = 0; t < copies; ++t)
        for (std::size_t g = 0; g < order; ++g) a.set(t, t * order + g, field.one());
    return a;
}

void require_radical_columns(const FiniteField& field, std::size_t order,
                             std::size_t copies, const Matrix& cols, const char* what) {
    for (std::size_t c = 0; c < cols.cols(); ++c)
        for (std::size_t t = 0; t < copies; ++t) {
            FieldElement s = field.zero();
            for (std::size_t g = 0; g < order; ++g) s = s + cols.at(t * order + g, c);
            if (!s.is_zero())
                throw Error(std::string(what) + ": entries escape the radical");
        }
}

}  // namespace

Matrix copy_augmentation(const FreeResolution& res, std::size_t s) {
    return augmentation_rows(res.field, res.group.order(), res.ranks.at(s));
}

FreeResolution minimal_resolution(const FiniteField& field, const FiniteGroup& group,
                                  std::size_t length) {
    if (!group.is_2_group())
        throw Error("minimal resolutions require a local group algebra: "
                    "the group must be a 2-group over a characteristic-2 field");
    GModule regular = regular_module(field, group);
    const std::size_t n = group.order();

    FreeResolution res{field, group, {1}, {}};

    /* Kernel of the augmentation k[G] -> k. */
    Matrix kernel = augmentation_rows(field, n, 1).kernel_basis();

    for (std::size_t s = 1; s <= length; ++s) {
        const std::size_t prev_copies = res.ranks.back();
        require_radical_columns(field, n, prev_copies, kernel,
                                "minimal_resolution: kernel");

        /* Radical of the kernel submodule: span of (g - 1) K. */
        Matrix rad(field, kernel.rows(), 0);
        for (std::size_t g = 1; g < n; ++g) {
            Matrix shifted = block_action(regular, prev_copies, g) * kernel + kernel;
            rad = hcat(rad, shifted);
        }
        Matrix span = column_space_basis(rad);

        /* Greedy minimal generators: kernel columns independent mod radical. */
        std::vector<std::size_t> gen_cols;
        for (std::size_t c = 0; c < kernel.cols(); ++c) {
            Matrix col = kernel.column(c);
            if (!in_column_span(span, col)) {
                gen_cols.push_back(c);
                span = column_space_basis(hcat(span, col));
            }
        }
        const std::size_t copies = gen_cols.size();

        Matrix d(field, prev_copies * n, copies * n);
        for (std::size_t t = 0; t < copies; ++t) {
            Matrix gen = kernel.column(gen_cols[t]);
            for (std::size_t g = 0; g < n; ++g) {
                Matrix img = block_action(regular, prev_copies, g) * gen;
                for (std::size_t r = 0; r < img.rows(); ++r)
                    d.set_bits(r, t * n + g, img.bits_at(r, 0));
            }
        }
        if (d.rank() != kernel.cols())
            throw Error("minimal_resolution: chosen generators fail to span the kernel");

        res.ranks.push_back(copies);
        res.differentials.push_back(d);
        kernel = d.kernel_basis();
    }

    verify_resolution(res);
    return res;
}

void verify_resolution(const FreeResolution& res) {
    const std::size_t n = res.group.order();
    if (res.ranks.empty() || res.ranks[0] != 1)
        throw Error("verify_resolution: rank of P_0 must be 1");
    if (res.differentials.size() + 1 != res.ranks.size())
        throw Error("verify_resolution: rank/differential count mismatch");

    Matrix aug = augmentation_rows(res.field, n, 1);
    for (std::size_t s = 1; s < res.ranks.size(); ++s) {
        const Matrix& d = res.differentials[s - 1];
        if (d.rows() != res.ranks[s - 1] * n || d.cols() != res.ranks[s] * n)
            throw Error("verify_resolution: differential " + std::to_string(s) +
                        " has the wrong shape");
        require_radical_columns(res.field, n, res.ranks[s - 1], d,
                                "verify_resolution: differential");

        /* d_{s-1} d_s = 0, with d_0 the augmentation. */
        Matrix upstream = (s == 1) ? aug : res.differentials[s - 2];
        if (!(upstream * d).is_zero())
            throw Error("verify_resolution: d d != 0 at stage " + std::to_string(s));

        /* Exactness: image of d_s spans the kernel of d_{s-1}. */
        std::size_t nullity = upstream.cols() - upstream.rank();
        if (d.rank() != nullity)
            throw Error("verify_resolution: not exact at stage " + std::to_string(s - 1));
    }
}

}  // namespace jokerlab
