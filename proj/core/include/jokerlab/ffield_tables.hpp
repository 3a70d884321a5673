#pragma once

#include <cstdint>
#include <vector>

namespace jokerlab::detail {

/* Precomputed arithmetic tables for one GF(2^k); owned via shared_ptr by
 * FiniteField and borrowed raw inside linear algebra inner loops. */
struct FieldTables {
    unsigned degree = 0;
    unsigned modulus = 0;
    unsigned size = 0;
    std::vector<std::uint8_t> mul;  // size*size
    std::vector<std::uint8_t> inv;  // size, inv[0] unused

    std::uint8_t multiply(unsigned a, unsigned b) const { return mul[a * size + b]; }
};

}  // namespace jokerlab::detail
