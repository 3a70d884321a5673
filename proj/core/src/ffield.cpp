#include "jokerlab/ffield.hpp"

#include <algorithm>

#include "jokerlab/ffield_tables.hpp"

namespace jokerlab {

namespace detail {

namespace {

unsigned poly_degree(unsigned bits) {
    unsigned d = 0;
    while (bits >> (d + 1)) ++d;
    return d;
}

unsigned poly_mod(unsigned a, unsigned m) {
    const unsigned dm = poly_degree(m);
    while (a >> dm) {
        unsigned da = poly_degree(a);
        a ^= m << (da - dm);
    }
    return a;
}

unsigned poly_mulmod(unsigned a, unsigned b, unsigned m) {
    unsigned acc = 0;
    while (b) {
        if (b & 1u) acc ^= a;
        b >>= 1;
        a <<= 1;
        a = poly_mod(a, m);
    }
    return acc;
}

/* Returns 0 if irreducible over GF(2), otherwise a nontrivial factor. */
unsigned find_factor(unsigned m) {
    const unsigned d = poly_degree(m);
    if (d == 0) return 1;
    for (unsigned fd = 1; 2 * fd <= d; ++fd) {
        for (unsigned f = (1u << fd); f < (2u << fd); ++f) {
            if (poly_mod(m, f) == 0) return f;
        }
    }
    return 0;
}

}  // namespace

}  // namespace detail

std::string poly_bits_to_string(unsigned bits) {
    if (bits == 0) return "0";
    std::string out;
    for (int d = static_cast<int>(detail::poly_degree(bits)); d >= 0; --d) {
        if (!(bits >> d & 1u)) continue;
        if (!out.empty()) out += "+";
        if (d == 0)
            out += "1";
        else if (d == 1)
            out += "x";
        else
            out += "x^" + std::to_string(d);
    }
    return out;
}

FiniteField::FiniteField(std::shared_ptr<const detail::FieldTables> data) : data_(std::move(data)) {}

FiniteField FiniteField::make(unsigned degree, unsigned modulus_bits) {
    if (degree < 1 || degree > 8) throw Error("field degree must be between 1 and 8");
    if (detail::poly_degree(modulus_bits) != degree)
        throw Error("modulus degree does not match the requested field degree");
    if (unsigned f = detail::find_factor(modulus_bits))
        throw Error("modulus " + poly_bits_to_string(modulus_bits) +
                    " is reducible, divisible by " + poly_bits_to_string(f));

    auto t = std::make_shared<detail::FieldTables>();
    t->degree = degree;
    t->modulus = modulus_bits;
    t->size = 1u << degree;
    t->mul.assign(static_cast<std::size_t>(t->size) * t->size, 0);
    for (unsigned a = 0; a < t->size; ++a)
        for (unsigned b = 0; b < t->size; ++b)
            t->mul[a * t->size + b] =
                static_cast<std::uint8_t>(detail::poly_mulmod(a, b, modulus_bits));
    t->inv.assign(t->size, 0);
    for (unsigned a = 1; a < t->size; ++a) {
        for (unsigned b = 1; b < t->size; ++b) {
            if (t->mul[a * t->size + b] == 1) {
                t->inv[a] = static_cast<std::uint8_t>(b);
                break;
            }
        }
    }
    return FiniteField(std::move(t));
}

FiniteField FiniteField::f2() {
    static FiniteField f = make(1, 0b11);
    return f;
}

FiniteField FiniteField::f4() {
    static FiniteField f = make(2, 0b111);
    return f;
}

unsigned FiniteField::degree() const { return data_->degree; }
unsigned FiniteField::modulus_bits() const { return data_->modulus; }
unsigned FiniteField::size() const { return data_->size; }

bool FiniteField::operator==(const FiniteField& other) const {
    return data_->degree == other.data_->degree && data_->modulus == other.data_->modulus;
}

FieldElement FiniteField::zero() const { return FieldElement(*this, 0); }
FieldElement FiniteField::one() const { return FieldElement(*this, 1); }

FieldElement FiniteField::omega() const {
    if (degree() != 2) throw Error("omega is only defined in the degree 2 field");
    return FieldElement(*this, 0b10);
}

FieldElement FiniteField::omega2() const {
    if (degree() != 2) throw Error("omega is only defined in the degree 2 field");
    return FieldElement(*this, 0b11);
}

FieldElement FiniteField::element(unsigned bits) const {
    if (bits >= size()) throw Error("element bits out of range for this field");
    return FieldElement(*this, bits);
}

FieldElement FiniteField::parse(std::string_view token) const {
    if (token == "0") return zero();
    if (token == "1") return one();
    if (degree() == 2) {
        if (token == "w") return omega();
        if (token == "w2") return omega2();
    }
    if (degree() > 2) {
        unsigned v = 0;
        bool any = false;
        for (char c : token) {
            if (c < '0' || c > '9') { any = false; break; }
            v = v * 10 + static_cast<unsigned>(c - '0');
            any = true;
        }
        if (any && v < size()) return element(v);
    }
    throw Error("cannot parse field element token '" + std::string(token) + "'");
}

std::vector<FieldElement> FiniteField::elements() const {
    std::vector<FieldElement> out;
    out.reserve(size());
    for (unsigned b = 0; b < size(); ++b) out.push_back(FieldElement(*this, b));
    return out;
}

namespace {
void require_same_field(const FieldElement& a, const FieldElement& b) {
    if (a.field() != b.field()) throw Error("elements belong to different fields");
}
}  // namespace

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
    require_same_field(*this, rhs);
    return FieldElement(field_, bits_ ^ rhs.bits_);
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const { return *this + rhs; }

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
    require_same_field(*this, rhs);
    return FieldElement(field_, field_.tables()->multiply(bits_, rhs.bits_));
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const { return *this * rhs.inverse(); }

bool FieldElement::operator==(const FieldElement& rhs) const {
    require_same_field(*this, rhs);
    return bits_ == rhs.bits_;
}

FieldElement FieldElement::inverse() const {
    if (bits_ == 0) throw Error("division by zero");
    return FieldElement(field_, field_.tables()->inv[bits_]);
}

FieldElement FieldElement::frobenius() const { return *this * *this; }

FieldElement FieldElement::pow(long e) const {
    if (bits_ == 0) {
        if (e < 0) throw Error("division by zero");
        return e == 0 ? field_.one() : *this;
    }
    const long group = static_cast<long>(field_.size()) - 1;
    long r = e % group;
    if (r < 0) r += group;
    FieldElement acc = field_.one();
    FieldElement base = *this;
    while (r) {
        if (r & 1) acc = acc * base;
        base = base * base;
        r >>= 1;
    }
    return acc;
}

std::string FieldElement::str() const {
    if (bits_ == 0) return "0";
    if (bits_ == 1) return "1";
    if (field_.degree() == 2) return bits_ == 2 ? "w" : "w2";
    return std::to_string(bits_);
}

}  // namespace jokerlab
