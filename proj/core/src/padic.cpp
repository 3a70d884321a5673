#include "jokerlab/padic.hpp"

#include <cstdint>

#include "jokerlab/ffield.hpp"

namespace jokerlab {

namespace {

std::uint64_t mask_bits(unsigned prec) { return (prec >= 64) ? ~0ull : ((1ull << prec) - 1); }

/* Inverse of an odd integer mod 2^prec by Newton iteration; each step doubles
 * the number of correct low bits. */
std::uint64_t odd_inverse(std::uint64_t n, unsigned prec) {
    if ((n & 1) == 0) throw Error("attempt to invert an even 2-adic integer");
    std::uint64_t m = mask_bits(prec);
    std::uint64_t x = 1;
    for (unsigned bits = 1; bits < prec; bits *= 2)
        x = (x * (2 - n * x)) & m;
    return x & m;
}

}  // namespace

std::uint64_t hensel_sqrt(std::int64_t n, unsigned prec_bits) {
    if (prec_bits < 4 || prec_bits > 62)
        throw Error("hensel_sqrt precision must be between 4 and 62 bits");
    /* Unsigned wraparound is exact arithmetic mod 2^64, so the full 64-bit
     * image of n supports comparisons at every level used below. */
    std::uint64_t a = static_cast<std::uint64_t>(n);
    if ((a & 7) != 1) throw Error("2-adic square roots exist only for integers = 1 mod 8");
    /* Invariant entering step t: s = root mod 2^t and s^2 = a mod 2^(t+1),
     * where root is the unique square root of n that is 1 mod 4.  Seed at
     * t = 3 from a mod 16; step t adds 2^t exactly when s^2 != a mod 2^(t+2),
     * which restores both congruences one level higher. */
    std::uint64_t s = ((a & 15) == 1) ? 1 : 5;
    for (unsigned t = 3; t < prec_bits; ++t) {
        std::uint64_t m = (t + 2 >= 64) ? ~0ull : ((1ull << (t + 2)) - 1);
        if (((s * s) & m) != (a & m)) s += 1ull << t;
    }
    return s & mask_bits(prec_bits);
}

Z4Element::Z4Element(unsigned prec_bits, std::uint64_t a, std::uint64_t b) : prec_(prec_bits) {
    if (prec_ < 1 || prec_ > 32) throw Error("Z4 precision must be between 1 and 32 bits");
    a_ = a & mask();
    b_ = b & mask();
}

std::uint64_t Z4Element::mask() const { return mask_bits(prec_); }

Z4Element Z4Element::from_int(unsigned prec_bits, std::int64_t n) {
    return Z4Element(prec_bits, static_cast<std::uint64_t>(n), 0);
}
Z4Element Z4Element::zero(unsigned prec_bits) { return Z4Element(prec_bits, 0, 0); }
Z4Element Z4Element::one(unsigned prec_bits) { return Z4Element(prec_bits, 1, 0); }
Z4Element Z4Element::omega(unsigned prec_bits) { return Z4Element(prec_bits, 0, 1); }

Z4Element Z4Element::teichmuller(unsigned prec_bits, const FieldElement& r) {
    if (r.field().degree() != 2) throw Error("Teichmuller lifts are defined over F4");
    switch (r.bits()) {
        case 0: return zero(prec_bits);
        case 1: return one(prec_bits);
        case 2: return omega(prec_bits);
        default: return Z4Element(prec_bits, ~0ull, ~0ull);  // omega^2 = -1 - omega
    }
}

Z4Element Z4Element::operator+(const Z4Element& rhs) const {
    if (prec_ != rhs.prec_) throw Error("Z4 elements have different precisions");
    return Z4Element(prec_, a_ + rhs.a_, b_ + rhs.b_);
}
Z4Element Z4Element::operator-(const Z4Element& rhs) const {
    if (prec_ != rhs.prec_) throw Error("Z4 elements have different precisions");
    return Z4Element(prec_, a_ - rhs.a_, b_ - rhs.b_);
}
Z4Element Z4Element::operator*(const Z4Element& rhs) const {
    if (prec_ != rhs.prec_) throw Error("Z4 elements have different precisions");
    /* (a + b w)(c + d w) with w^2 = -1 - w. */
    std::uint64_t ac = a_ * rhs.a_, bd = b_ * rhs.b_;
    std::uint64_t cross = a_ * rhs.b_ + b_ * rhs.a_;
    return Z4Element(prec_, ac - bd, cross - bd);
}
Z4Element Z4Element::negated() const { return Z4Element(prec_, ~a_ + 1, ~b_ + 1); }

bool Z4Element::operator==(const Z4Element& rhs) const {
    return prec_ == rhs.prec_ && a_ == rhs.a_ && b_ == rhs.b_;
}

Z4Element Z4Element::sigma() const { return Z4Element(prec_, a_ - b_, ~b_ + 1); }

std::uint64_t Z4Element::norm() const { return (a_ * a_ - a_ * b_ + b_ * b_) & mask(); }

bool Z4Element::is_unit() const { return (norm() & 1) != 0; }

Z4Element Z4Element::inverse() const {
    if (!is_unit()) throw Error("Z4 element is not a unit");
    std::uint64_t ninv = odd_inverse(norm(), prec_);
    return sigma() * Z4Element(prec_, ninv, 0);
}

Z4Element Z4Element::half() const {
    if ((a_ & 1) != 0 || (b_ & 1) != 0)
        throw Error("Z4 element is not divisible by 2");
    /* One bit of precision is consumed; the top bit of the result is kept as
     * storage but callers must only rely on bits below prec-1. */
    return Z4Element(prec_, a_ >> 1, b_ >> 1);
}

bool Z4Element::is_even() const { return (a_ & 1) == 0 && (b_ & 1) == 0; }

FieldElement Z4Element::residue(const FiniteField& f4) const {
    if (f4.degree() != 2) throw Error("the residue field of Z4 is F4");
    return f4.element(static_cast<unsigned>((a_ & 1) | ((b_ & 1) << 1)));
}

O2Element::O2Element(Z4Element x, Z4Element y) : x_(x), y_(y) {
    if (x_.prec_bits() != y_.prec_bits()) throw Error("O2 components have different precisions");
}

O2Element O2Element::from_z4(const Z4Element& x) {
    return O2Element(x, Z4Element::zero(x.prec_bits()));
}
O2Element O2Element::from_int(unsigned prec_bits, std::int64_t n) {
    return from_z4(Z4Element::from_int(prec_bits, n));
}
O2Element O2Element::zero(unsigned prec_bits) { return from_int(prec_bits, 0); }
O2Element O2Element::one(unsigned prec_bits) { return from_int(prec_bits, 1); }
O2Element O2Element::s(unsigned prec_bits) {
    return O2Element(Z4Element::zero(prec_bits), Z4Element::one(prec_bits));
}

O2Element O2Element::operator+(const O2Element& rhs) const {
    return O2Element(x_ + rhs.x_, y_ + rhs.y_);
}
O2Element O2Element::operator-(const O2Element& rhs) const {
    return O2Element(x_ - rhs.x_, y_ - rhs.y_);
}
O2Element O2Element::operator*(const O2Element& rhs) const {
    /* (x1 + y1 S)(x2 + y2 S) = x1 x2 + 2 y1 sigma(y2) + (x1 y2 + y1 sigma(x2)) S. */
    const Z4Element two = Z4Element::from_int(prec_bits(), 2);
    return O2Element(x_ * rhs.x_ + two * (y_ * rhs.y_.sigma()),
                     x_ * rhs.y_ + y_ * rhs.x_.sigma());
}
O2Element O2Element::negated() const { return O2Element(x_.negated(), y_.negated()); }

bool O2Element::operator==(const O2Element& rhs) const { return x_ == rhs.x_ && y_ == rhs.y_; }

bool O2Element::is_unit() const { return x_.is_unit(); }

O2Element O2Element::inverse() const {
    /* (x + y S)(sigma(x) - y S) = N(x) - 2 N(y), central and odd for units. */
    if (!is_unit()) throw Error("O2 element is not a unit");
    std::uint64_t m = mask_bits(prec_bits());
    std::uint64_t n = (x_.norm() - 2 * y_.norm()) & m;
    Z4Element ninv(prec_bits(), odd_inverse(n, prec_bits()), 0);
    return O2Element(ninv * x_.sigma(), (ninv * y_).negated());
}

O2Element O2Element::galois() const { return O2Element(x_.sigma(), y_.sigma()); }

O2Element O2Element::times_s() const {
    const Z4Element two = Z4Element::from_int(prec_bits(), 2);
    return O2Element(two * y_, x_);
}

O2Element O2Element::div_s() const { return O2Element(y_, x_.half()); }

FieldElement O2Element::residue(const FiniteField& f4) const { return x_.residue(f4); }

bool O2Element::divisible_by_s_power(unsigned n) const {
    if (n > prec_bits()) throw Error("S-divisibility test beyond stored precision");
    unsigned t = n / 2;
    std::uint64_t even_mask = mask_bits(n - t);  // 2^(t+1) - 1 when n odd, else 2^t - 1
    std::uint64_t odd_mask = mask_bits(t);
    return (x_.a() & even_mask) == 0 && (x_.b() & even_mask) == 0 &&
           (y_.a() & odd_mask) == 0 && (y_.b() & odd_mask) == 0;
}

std::vector<FieldElement> teichmuller_digits(const FiniteField& f4, const O2Element& z,
                                             std::size_t count) {
    if (count > 2 * z.prec_bits())
        throw Error("requested more Teichmuller digits than the stored precision supports");
    std::vector<FieldElement> out;
    out.reserve(count);
    O2Element cur = z;
    for (std::size_t r = 0; r < count; ++r) {
        FieldElement d = cur.residue(f4);
        out.push_back(d);
        O2Element lift = O2Element::from_z4(Z4Element::teichmuller(cur.prec_bits(), d));
        cur = (cur - lift).div_s();
    }
    return out;
}

O2Element from_teichmuller_digits(const FiniteField& f4, unsigned prec_bits,
                                  const std::vector<FieldElement>& digits) {
    if (f4.degree() != 2) throw Error("Teichmuller digits are F4 elements");
    O2Element acc = O2Element::zero(prec_bits);
    for (std::size_t r = digits.size(); r-- > 0;)
        acc = O2Element::from_z4(Z4Element::teichmuller(prec_bits, digits[r])) + acc.times_s();
    return acc;
}

Q8Embedding q8_embed(unsigned prec_bits) {
    const Z4Element w = Z4Element::omega(prec_bits);
    const Z4Element one = Z4Element::one(prec_bits);
    const Z4Element two = Z4Element::from_int(prec_bits, 2);
    const Z4Element three_inv = Z4Element::from_int(prec_bits, 3).inverse();
    /* u = (1 + 2 omega^2)/3 = (-1 - 2 omega)/3 has trace zero and norm 1/3. */
    const Z4Element u = (one + two * (w * w)) * three_inv;
    /* a = (1 - 2 omega)/sqrt(-7); then v = -u a has norm -N(u) N(a) = 1/3. */
    const Z4Element root = Z4Element::from_int(
        prec_bits, static_cast<std::int64_t>(hensel_sqrt(-7, prec_bits)));
    const Z4Element aparam = (one - two * w) * root.inverse();
    const Z4Element v = (u * aparam).negated();

    const O2Element qi(u, v);
    const O2Element qj(u, v * (w * w));
    const O2Element qk(u, v * w);
    const O2Element e = O2Element::one(prec_bits);

    Q8Embedding out{make_q8(), {}};
    out.images = {e,  e.negated(),  qi, qi.negated(),
                  qj, qj.negated(), qk, qk.negated()};
    for (std::size_t g = 0; g < 8; ++g)
        for (std::size_t h = 0; h < 8; ++h)
            if (out.images[g] * out.images[h] != out.images[out.q8.mul(g, h)])
                throw Error("quaternion embedding images fail the group law");
    return out;
}

}  // namespace jokerlab
