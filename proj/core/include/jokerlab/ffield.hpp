#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace jokerlab {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {
struct FieldTables;
}

class FieldElement;

/* GF(2^k) for 1 <= k <= 8, given by an irreducible modulus over GF(2).
 * Value type with shared immutable tables; two fields are the same exactly
 * when degree and modulus agree. */
class FiniteField {
public:
    static FiniteField make(unsigned degree, unsigned modulus_bits);
    static FiniteField f2();
    static FiniteField f4();

    unsigned degree() const;
    unsigned modulus_bits() const;
    unsigned size() const;

    bool operator==(const FiniteField& other) const;
    bool operator!=(const FiniteField& other) const { return !(*this == other); }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement omega() const;   // class of x, degree 2 only
    FieldElement omega2() const;  // omega squared
    FieldElement element(unsigned bits) const;
    FieldElement parse(std::string_view token) const;

    std::vector<FieldElement> elements() const;

    const detail::FieldTables* tables() const { return data_.get(); }

private:
    explicit FiniteField(std::shared_ptr<const detail::FieldTables> data);
    std::shared_ptr<const detail::FieldTables> data_;
};

class FieldElement {
public:
    FieldElement() = delete;

    FiniteField field() const { return field_; }
    unsigned bits() const { return bits_; }
    bool is_zero() const { return bits_ == 0; }
    bool is_one() const { return bits_ == 1; }

    FieldElement operator+(const FieldElement& rhs) const;
    FieldElement operator-(const FieldElement& rhs) const;  // equals + in char 2
    FieldElement operator*(const FieldElement& rhs) const;
    FieldElement operator/(const FieldElement& rhs) const;
    bool operator==(const FieldElement& rhs) const;
    bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }

    FieldElement inverse() const;
    FieldElement frobenius() const;  // a -> a^2
    FieldElement pow(long e) const;

    std::string str() const;

private:
    friend class FiniteField;
    FieldElement(FiniteField f, unsigned bits) : field_(std::move(f)), bits_(bits) {}
    FiniteField field_;
    unsigned bits_;
};

/* Renders a GF(2) polynomial from its bit representation, e.g. 0b111 -> "x^2+x+1". */
std::string poly_bits_to_string(unsigned bits);

}  // namespace jokerlab
