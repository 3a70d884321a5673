#pragma once

#include <cstdint>
#include <vector>

#include "jokerlab/ffield.hpp"
#include "jokerlab/group.hpp"

namespace jokerlab {

/* Square root of n in the 2-adic integers, returned mod 2^prec_bits.
 * Requires n = 1 mod 8 (else no root exists); among the four roots the one
 * with root = 1 mod 4 is returned, so results at different precisions are
 * coherent.  prec_bits must be in [4, 62]. */
std::uint64_t hensel_sqrt(std::int64_t n, unsigned prec_bits);

/* Element a + b omega of the ring of Witt vectors of F4 (the unramified
 * quadratic extension of the 2-adic integers), where omega^2 + omega + 1 = 0.
 * Components are stored mod 2^prec_bits; prec_bits is at most 32 and all
 * arithmetic is exact at that precision. */
class Z4Element {
public:
    Z4Element(unsigned prec_bits, std::uint64_t a, std::uint64_t b);

    static Z4Element from_int(unsigned prec_bits, std::int64_t n);
    static Z4Element zero(unsigned prec_bits);
    static Z4Element one(unsigned prec_bits);
    static Z4Element omega(unsigned prec_bits);
    /* The Teichmuller (multiplicative) lift of an F4 element: one of
     * 0, 1, omega, omega^2 = -1-omega, the exact cube roots of 1 and 0. */
    static Z4Element teichmuller(unsigned prec_bits, const FieldElement& r);

    unsigned prec_bits() const { return prec_; }
    std::uint64_t a() const { return a_; }
    std::uint64_t b() const { return b_; }

    Z4Element operator+(const Z4Element& rhs) const;
    Z4Element operator-(const Z4Element& rhs) const;
    Z4Element operator*(const Z4Element& rhs) const;
    Z4Element negated() const;
    bool operator==(const Z4Element& rhs) const;
    bool operator!=(const Z4Element& rhs) const { return !(*this == rhs); }

    /* The nontrivial Galois automorphism omega -> omega^2. */
    Z4Element sigma() const;
    /* z sigma(z) = a^2 - a b + b^2, a plain 2-adic integer. */
    std::uint64_t norm() const;
    bool is_unit() const;  // norm is odd
    Z4Element inverse() const;
    /* Exact division by 2; both components must be even. */
    Z4Element half() const;
    bool is_even() const;

    /* Image in the residue field F4 = Z4 / 2Z4. */
    FieldElement residue(const FiniteField& f4) const;

private:
    std::uint64_t mask() const;
    unsigned prec_;
    std::uint64_t a_, b_;
};

/* Element x + y S of the maximal order of the 2-adic quaternion division
 * algebra presented as Z4<S> with S^2 = 2 and S z = sigma(z) S.  S generates
 * the maximal two-sided ideal; components are exact mod 2^prec_bits, so
 * elements are known mod S^(2 prec_bits). */
class O2Element {
public:
    O2Element(Z4Element x, Z4Element y);

    static O2Element from_z4(const Z4Element& x);
    static O2Element from_int(unsigned prec_bits, std::int64_t n);
    static O2Element zero(unsigned prec_bits);
    static O2Element one(unsigned prec_bits);
    static O2Element s(unsigned prec_bits);

    unsigned prec_bits() const { return x_.prec_bits(); }
    const Z4Element& x() const { return x_; }
    const Z4Element& y() const { return y_; }

    O2Element operator+(const O2Element& rhs) const;
    O2Element operator-(const O2Element& rhs) const;
    O2Element operator*(const O2Element& rhs) const;
    O2Element negated() const;
    bool operator==(const O2Element& rhs) const;
    bool operator!=(const O2Element& rhs) const { return !(*this == rhs); }

    /* x + y S is a unit iff its reduced norm N(x) - 2 N(y) is odd; the
     * inverse is (sigma(x) - y S) / (N(x) - 2 N(y)). */
    bool is_unit() const;
    O2Element inverse() const;

    /* The automorphism x + y S -> sigma(x) + sigma(y) S; equals conjugation
     * by S, the lift of Frobenius on the unramified part. */
    O2Element galois() const;

    /* Right multiplication by S: (x + y S) S = 2y + x S. */
    O2Element times_s() const;
    /* Exact right division by S; the constant term x must be even. */
    O2Element div_s() const;

    /* Image in the residue field F4 = O2 / S O2 (only x matters mod 2). */
    FieldElement residue(const FiniteField& f4) const;

    /* True when S^n divides this element, n <= prec_bits. */
    bool divisible_by_s_power(unsigned n) const;

private:
    Z4Element x_, y_;
};

/* The Teichmuller digits a_0 .. a_(count-1) in F4 of z = sum a_r S^r; each
 * a_r is the residue of the corresponding multiplicative representative.
 * count must be at most 2 * prec_bits, the precision of z in powers of S. */
std::vector<FieldElement> teichmuller_digits(const FiniteField& f4, const O2Element& z,
                                             std::size_t count);

/* Rebuilds sum a_r S^r from digits; inverse of teichmuller_digits mod S^count. */
O2Element from_teichmuller_digits(const FiniteField& f4, unsigned prec_bits,
                                  const std::vector<FieldElement>& digits);

/* An embedding of the quaternion group into the units of O2:
 *   i = u + v S,  j = u + v omega^2 S,  k = u + v omega S,
 * with u = (1 + 2 omega^2)/3 and v = -u (1 - 2 omega)/sqrt(-7).
 * images is indexed like make_q8(): 1, -1, i, -i, j, -j, k, -k. */
struct Q8Embedding {
    FiniteGroup q8;
    std::vector<O2Element> images;
};
Q8Embedding q8_embed(unsigned prec_bits);

}  // namespace jokerlab
