#pragma once

#include <string>
#include <vector>

#include "jokerlab/gmodule.hpp"

namespace jokerlab {

/* The distinguished elements X = w i + w2 j + k and Y = w2 i + w j + k of
 * F4[Q8], their left-multiplication operators on the regular module, and the
 * eight words 1, X, Y, YX, XY, XYX, YXY, XYXY as coordinate vectors. */
struct Q8Words {
    Matrix left_x;  // 8x8 operator
    Matrix left_y;
    Matrix one, x, y, yx, xy, xyx, yxy, xyxy;  // 8x1 columns
};
Q8Words q8_words(const FiniteField& field);

/* Left ideal k[Q8] v: column span of all rho(g) v inside the regular module. */
Matrix q8_ideal_span(const FiniteField& field, const Matrix& v);

/* Named F4[Q8]-modules:
 *   k, regular, W3, W5 (= syzygy of W3),
 *   Lprime = k[Q8]{XY}, Ldoubleprime = k[Q8]{YX},
 *   Jprime = k[Q8]/Lprime, Jdoubleprime = k[Q8]/Ldoubleprime,
 *   Mprime = k[Q8]/k[Q8]{X}, Mdoubleprime = k[Q8]/k[Q8]{Y}. */
GModule builtin_module(const std::string& name);
std::vector<std::string> builtin_module_names();

}  // namespace jokerlab
