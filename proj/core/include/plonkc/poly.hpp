#pragma once

#include <cstdint>
#include <map>
#include <set>

#include "plonkc/circuit.hpp"
#include "plonkc/field.hpp"

namespace plonkc {

// Sparse multivariate polynomial over wire-indexed variables. Used by the
// boolean-rewrite pass and by circuit flattening for symbolic substitution.
class MultiPoly {
  public:
    // var id -> exponent; empty map is the constant monomial.
    using Key = std::map<WireId, std::uint32_t>;

    explicit MultiPoly(const FieldSpec& spec) : spec_(spec) {}

    static MultiPoly constant(FieldElement v);
    static MultiPoly var(WireId w, const FieldSpec& spec);

    FieldSpec spec() const { return spec_; }
    const std::map<Key, FieldElement>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    std::size_t degree() const;
    std::set<WireId> vars() const;

    MultiPoly operator+(const MultiPoly& rhs) const;
    MultiPoly operator-(const MultiPoly& rhs) const;
    MultiPoly operator*(const MultiPoly& rhs) const;
    MultiPoly scaled(const FieldElement& c) const;
    MultiPoly pow(std::uint32_t e) const;

    MultiPoly substituted(WireId w, const MultiPoly& replacement) const;

    // x^k -> x for every variable in bool_vars (valid when those variables
    // only take values in {0,1}).
    MultiPoly exponents_reduced(const std::set<WireId>& bool_vars) const;

    FieldElement eval(const std::map<WireId, FieldElement>& assignment) const;

    // Coefficient of the given monomial (zero if absent).
    FieldElement coeff(const Key& k) const;

    bool operator==(const MultiPoly& rhs) const {
        return spec_ == rhs.spec_ && terms_ == rhs.terms_;
    }

  private:
    void add_term(const Key& k, const FieldElement& c);

    FieldSpec spec_;
    std::map<Key, FieldElement> terms_;
};

}  // namespace plonkc
