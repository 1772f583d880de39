#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "plonkc/circuit.hpp"
#include "plonkc/field.hpp"
#include "plonkc/tables.hpp"
#include "plonkc/witness.hpp"

namespace plonkc {

// coeff * prod(constants[const_slots]) * prod(wires[wire_slots]). Slots are
// indices into the owning constrained vector; multiplicities are repeats.
struct Monomial {
    FieldElement coeff;
    std::vector<std::size_t> const_slots;
    std::vector<std::size_t> wire_slots;
};

struct Identity {
    std::vector<Monomial> monomials;
};

struct ConstrainedVector {
    std::vector<WireId> wires;
    std::vector<FieldElement> constants;
    std::vector<Identity> identities;
};

struct LookupConstraint {
    std::vector<WireId> wires;
    std::string table;
};

struct ConstraintSystem {
    std::vector<ConstrainedVector> cvs;
    std::vector<LookupConstraint> lookups;
    TableRegistry tables;
};

// Throws std::out_of_range when a slot index exceeds the supplied vectors.
FieldElement eval_identity(const Identity& id, const std::vector<FieldElement>& wire_vals,
                           const std::vector<FieldElement>& const_vals);

std::size_t identity_degree(const Identity& id);
std::size_t cv_degree(const ConstrainedVector& cv);

// False (not an error) when a referenced wire is unset, so brute-force
// enumeration can probe partial candidates uniformly.
bool sat_cv(const ConstrainedVector& cv, const Trace& t);
bool sat(const ConstraintSystem& cs, const Trace& t);

// One constrained vector (or lookup constraint) per gate, in gate order.
ConstraintSystem gen_cs(const Circuit& c, const FieldSpec& spec,
                        const TableRegistry& tables = default_tables());

// The standard identities, parameterized by wire slot so tabulation can
// compare them structurally.
Identity id_arith(const FieldSpec& spec);  // slots: wires (l,r,o), constants (ql,qr,qo,qm,qc)
Identity id_bool(std::size_t wire_slot, const FieldSpec& spec);

// The isZero constrained vector over wires (i, r, o). The printed form of
// this gate omits i*o = 0 and consequently admits o = 1 for nonzero i (take
// r = 0); the completion closes that gap. The uncompleted variant is kept
// for the regression test that demonstrates the difference.
ConstrainedVector is_zero_cv(WireId i, WireId r, WireId o, const FieldSpec& spec,
                             bool with_product_completion = true);

// Human-readable polynomial, e.g. "q0*w0 + q1*w1 - w2" with the given slot
// name prefixes.
std::string render_identity(const Identity& id, const std::string& wire_prefix = "w",
                            const std::string& const_prefix = "q");

}  // namespace plonkc
