#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "plonkc/circuit.hpp"
#include "plonkc/field.hpp"
#include "plonkc/tables.hpp"

namespace plonkc {

// Value-representation tag carried by builder handles. Bool/U4/U32 record
// the range discipline attached to the wire.
enum class ReprTag { SValue, Bool, U4, U32 };

struct Repr {
    WireId wire = 0;
    ReprTag tag = ReprTag::SValue;
};

// Input domains drive the property harness's samplers.
enum class Domain { Field, Bool, U4, U32 };

struct InputSpec {
    WireId wire = 0;
    Domain domain = Domain::Field;
};

struct BuiltCircuit {
    Circuit circuit;
    CircuitSignature sig;
    TableRegistry tables;
    std::vector<InputSpec> inputs;
    // Every wire known boolean, and the subset that is boolean only by the
    // input's typed contract (no in-circuit check).
    std::set<WireId> bool_facts;
    std::set<WireId> assumed_bool;
};

struct RangeCheckResult {
    Repr low;
    std::vector<Repr> chunks;
};

// Mutable build environment: allocates wires, accumulates gates in Seq
// order, pools constants, and tracks boolean facts. Single-owner.
class Env {
  public:
    explicit Env(const FieldSpec& spec) : spec_(spec), tables_(default_tables()) {}

    FieldSpec spec() const { return spec_; }
    TableRegistry& tables() { return tables_; }

    Repr input();
    // Boolean by contract: no check is emitted, the wire is assumed in
    // {0,1}. Callers feeding untyped values must use assert_bool instead.
    Repr input_bool();
    // Constrained on entry: nibble decomposition plus range lookups.
    Repr input_u32();

    Repr constant(FieldElement v);

    Repr add(Repr a, Repr b);
    Repr sub(Repr a, Repr b);
    Repr mul(Repr a, Repr b);
    // coeff*a + offset, one gate.
    Repr affine(Repr a, FieldElement coeff, FieldElement offset);

    Repr logic_not(Repr a);
    Repr logic_and(Repr a, Repr b);
    Repr logic_or(Repr a, Repr b);
    Repr logic_xor(Repr a, Repr b);

    Repr assert_bool(Repr a);
    Repr is_zero(Repr a);

    Repr reduce_terms(const std::vector<FieldElement>& coeffs, const std::vector<Repr>& terms);

    Repr range_check_u4(Repr a);
    // bits must be a positive multiple of 4, at most 64. For bits > 32 the
    // result's `low` is a fresh wire recomposing the 32 low bits; otherwise
    // `low` is the argument itself.
    RangeCheckResult range_check_n(Repr a, std::uint32_t bits);

    BuiltCircuit finish(const std::vector<Repr>& outputs);

  private:
    WireId fresh();
    Repr emit_arith(WireId l, WireId r, FieldElement ql, FieldElement qr, FieldElement qm,
                    FieldElement qc);
    Repr require_bool(Repr a, const char* op) const;

    FieldSpec spec_;
    WireId next_wire_ = 0;
    std::vector<GateInstance> gates_;
    TableRegistry tables_;
    std::map<std::uint64_t, WireId> constant_pool_;
    std::vector<InputSpec> inputs_;
    std::set<WireId> bool_facts_;
    std::set<WireId> assumed_bool_;
};

}  // namespace plonkc
