#include "plonkc/field.hpp"

namespace plonkc {

namespace {

bool trial_division_prime(std::uint64_t m) {
    if (m < 2) return false;
    if (m % 2 == 0) return m == 2;
    for (std::uint64_t d = 3; d * d <= m; d += 2) {
        if (m % d == 0) return false;
    }
    return true;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

}  // namespace

FieldSpec::FieldSpec(std::uint64_t m) : modulus(m) {
    if (m < 2) {
        throw std::invalid_argument("field modulus must be at least 2");
    }
    if (m < (1ull << 20) && !trial_division_prime(m)) {
        throw std::invalid_argument("field modulus " + std::to_string(m) + " is not prime");
    }
}

FieldSpec FieldSpec::goldilocks() { return FieldSpec(kGoldilocksModulus); }

FieldElement FieldElement::from_signed(std::int64_t v, const FieldSpec& spec) {
    if (v >= 0) return FieldElement(static_cast<std::uint64_t>(v), spec);
    std::uint64_t mag = static_cast<std::uint64_t>(-(v + 1)) + 1;
    std::uint64_t reduced = mag % spec.modulus;
    return FieldElement(reduced == 0 ? 0 : spec.modulus - reduced, spec);
}

void FieldElement::check_same_field(const FieldElement& rhs) const {
    if (modulus_ != rhs.modulus_) {
        throw std::invalid_argument("field mismatch: modulus " + std::to_string(modulus_) +
                                    " vs " + std::to_string(rhs.modulus_));
    }
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
    check_same_field(rhs);
    FieldElement out = *this;
    std::uint64_t sum = value_ + rhs.value_;  // modulus < 2^64 - 2^32, no overflow for canonical inputs
    if (sum < value_ || sum >= modulus_) sum -= modulus_;
    out.value_ = sum;
    return out;
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
    check_same_field(rhs);
    FieldElement out = *this;
    out.value_ = value_ >= rhs.value_ ? value_ - rhs.value_ : modulus_ - (rhs.value_ - value_);
    return out;
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
    check_same_field(rhs);
    FieldElement out = *this;
    out.value_ = mul_mod(value_, rhs.value_, modulus_);
    return out;
}

FieldElement FieldElement::operator-() const {
    FieldElement out = *this;
    out.value_ = value_ == 0 ? 0 : modulus_ - value_;
    return out;
}

FieldElement FieldElement::inv() const {
    if (value_ == 0) {
        throw std::domain_error("zero has no multiplicative inverse");
    }
    // Extended Euclid over signed 128-bit intermediates.
    __int128 t = 0, new_t = 1;
    __int128 r = static_cast<__int128>(modulus_), new_r = static_cast<__int128>(value_);
    while (new_r != 0) {
        __int128 q = r / new_r;
        __int128 tmp_t = t - q * new_t;
        t = new_t;
        new_t = tmp_t;
        __int128 tmp_r = r - q * new_r;
        r = new_r;
        new_r = tmp_r;
    }
    if (t < 0) t += static_cast<__int128>(modulus_);
    FieldElement out = *this;
    out.value_ = static_cast<std::uint64_t>(t);
    return out;
}

FieldElement FieldElement::pow(std::uint64_t exponent) const {
    FieldElement result(1, FieldSpec(modulus_));
    FieldElement base = *this;
    while (exponent > 0) {
        if (exponent & 1) result = result * base;
        base = base * base;
        exponent >>= 1;
    }
    return result;
}

FieldElement parse_decimal(const std::string& text, const FieldSpec& spec) {
    if (text.empty()) throw std::invalid_argument("empty field element literal");
    std::size_t pos = 0;
    bool negative = text[0] == '-';
    if (negative) pos = 1;
    unsigned __int128 acc = 0;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (c < '0' || c > '9') {
            throw std::invalid_argument("invalid field element literal: " + text);
        }
        acc = acc * 10 + static_cast<unsigned>(c - '0');
        acc %= spec.modulus;
    }
    FieldElement value(static_cast<std::uint64_t>(acc), spec);
    return negative ? -value : value;
}

}  // namespace plonkc
