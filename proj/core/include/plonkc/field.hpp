#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace plonkc {

// Prime field parameterized by a runtime modulus. The default is the
// Goldilocks prime 2^64 - 2^32 + 1; tiny primes (5, 7, ...) are used by the
// exhaustive test oracles. Primality is verified by trial division for
// moduli below 2^20 and assumed for larger moduli.
struct FieldSpec {
    std::uint64_t modulus;

    explicit FieldSpec(std::uint64_t m);

    static FieldSpec goldilocks();

    bool operator==(const FieldSpec& other) const { return modulus == other.modulus; }
    bool operator!=(const FieldSpec& other) const { return modulus != other.modulus; }
};

inline constexpr std::uint64_t kGoldilocksModulus = 0xffffffff00000001ull;

// Canonically reduced field element. Elements remember their modulus so
// cross-field operations can be rejected.
class FieldElement {
  public:
    FieldElement() : value_(0), modulus_(kGoldilocksModulus) {}
    FieldElement(std::uint64_t value, const FieldSpec& spec)
        : value_(value % spec.modulus), modulus_(spec.modulus) {}

    static FieldElement from_signed(std::int64_t v, const FieldSpec& spec);

    std::uint64_t value() const { return value_; }
    std::uint64_t modulus() const { return modulus_; }
    FieldSpec spec() const { return FieldSpec(modulus_); }

    bool is_zero() const { return value_ == 0; }
    bool is_one() const { return value_ == 1; }

    FieldElement operator+(const FieldElement& rhs) const;
    FieldElement operator-(const FieldElement& rhs) const;
    FieldElement operator*(const FieldElement& rhs) const;
    FieldElement operator-() const;

    // Multiplicative inverse; throws std::domain_error for zero so callers
    // that care (the isZero oracle) can branch on the input instead.
    FieldElement inv() const;

    // Square-and-multiply. 0^0 = 1, so a monomial with multiplicity zero is
    // the empty product.
    FieldElement pow(std::uint64_t exponent) const;

    bool operator==(const FieldElement& rhs) const {
        return value_ == rhs.value_ && modulus_ == rhs.modulus_;
    }
    bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }
    bool operator<(const FieldElement& rhs) const { return value_ < rhs.value_; }

    // Decimal string; JSON uses this to avoid 64-bit precision loss.
    std::string to_decimal() const { return std::to_string(value_); }

  private:
    void check_same_field(const FieldElement& rhs) const;

    std::uint64_t value_;
    std::uint64_t modulus_;
};

FieldElement parse_decimal(const std::string& text, const FieldSpec& spec);

}  // namespace plonkc
