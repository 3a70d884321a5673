#include "jokerlab/builtins.hpp"

#include "jokerlab/stable.hpp"

namespace jokerlab {

Q8Words q8_words(const FiniteField& field) {
    if (field.degree() != 2) throw Error("the word elements live over the degree 2 field");
    const FiniteGroup q8 = make_q8();
    const GModule reg = regular_module(field, q8);
    const std::size_t gi = 2, gj = 4, gk = 6;

    Matrix lx = reg.rho(gi).scaled(field.omega()) + reg.rho(gj).scaled(field.omega2()) +
                reg.rho(gk);
    Matrix ly = reg.rho(gi).scaled(field.omega2()) + reg.rho(gj).scaled(field.omega()) +
                reg.rho(gk);

    Matrix one(field, 8, 1);
    one.set(0, 0, field.one());
    Matrix x(field, 8, 1);
    x.set(gi, 0, field.omega());
    x.set(gj, 0, field.omega2());
    x.set(gk, 0, field.one());
    Matrix y(field, 8, 1);
    y.set(gi, 0, field.omega2());
    y.set(gj, 0, field.omega());
    y.set(gk, 0, field.one());

    Matrix yx = ly * x;
    Matrix xy = lx * y;
    Matrix xyx = lx * yx;
    Matrix yxy = ly * xy;
    Matrix xyxy = lx * yxy;
    return Q8Words{std::move(lx), std::move(ly), std::move(one), std::move(x),
                   std::move(y),  std::move(yx), std::move(xy),  std::move(xyx),
                   std::move(yxy), std::move(xyxy)};
}

Matrix q8_ideal_span(const FiniteField& field, const Matrix& v) {
    const FiniteGroup q8 = make_q8();
    const GModule reg = regular_module(field, q8);
    Matrix images(field, 8, 0);
    for (std::size_t g = 0; g < 8; ++g) images = hcat(images, reg.rho(g) * v);
    return column_space_basis(images);
}

GModule builtin_module(const std::string& name) {
    const FiniteField f4 = FiniteField::f4();
    const FiniteGroup q8 = make_q8();
    if (name == "k") return trivial_module(f4, q8);
    if (name == "regular") return regular_module(f4, q8);
    if (name == "W3") {
        Matrix mi = Matrix::parse_text(f4, "1 0 0\n1 1 0\n0 1 1");
        Matrix mj = Matrix::parse_text(f4, "1 0 0\nw 1 0\n0 w2 1");
        return module_from_action(f4, q8, {{"i", mi}, {"j", mj}});
    }
    if (name == "W5") return syzygy(builtin_module("W3"));
    Q8Words w = q8_words(f4);
    if (name == "Lprime")
        return submodule_module(regular_module(f4, q8), q8_ideal_span(f4, w.xy)).module;
    if (name == "Ldoubleprime")
        return submodule_module(regular_module(f4, q8), q8_ideal_span(f4, w.yx)).module;
    if (name == "Jprime")
        return quotient_module(regular_module(f4, q8), q8_ideal_span(f4, w.xy)).module;
    if (name == "Jdoubleprime")
        return quotient_module(regular_module(f4, q8), q8_ideal_span(f4, w.yx)).module;
    if (name == "Mprime")
        return quotient_module(regular_module(f4, q8), q8_ideal_span(f4, w.x)).module;
    if (name == "Mdoubleprime")
        return quotient_module(regular_module(f4, q8), q8_ideal_span(f4, w.y)).module;
    throw Error("unknown builtin module '" + name + "'");
}

std::vector<std::string> builtin_module_names() {
    return {"k",      "regular",     "W3",     "W5",           "Mprime",
            "Mdoubleprime", "Jprime", "Jdoubleprime", "Lprime", "Ldoubleprime"};
}

}  // namespace jokerlab
