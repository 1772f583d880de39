#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "plonkc/field.hpp"

namespace plonkc {

using WireId = std::uint32_t;

enum class GateOp {
    Constant,
    Arith,
    BoolCheck,
    IsZero,
    Fma,
    LinComb,
    Lookup,
    Decompose,
};

std::string gate_op_name(GateOp op);

// One gate instance: kind, wiring and configuration constants. Aux wires are
// oracle-populated intermediates (the inverse wire of isZero) that are
// neither inputs nor outputs of the gate.
struct GateInstance {
    GateOp op = GateOp::Constant;
    std::vector<WireId> inputs;
    std::vector<WireId> aux;
    std::vector<WireId> outputs;
    std::vector<FieldElement> constants;
    std::string table;            // Lookup only
    std::uint32_t chunk_count = 0;  // Decompose only
    std::uint32_t chunk_bits = 0;   // Decompose only

    static GateInstance constant(WireId out, FieldElement q);
    // Constants in the order ql, qr, qo, qm, qc; qo must be nonzero.
    static GateInstance arith(WireId l, WireId r, WireId out,
                              FieldElement ql, FieldElement qr, FieldElement qo,
                              FieldElement qm, FieldElement qc);
    static GateInstance bool_check(WireId in);
    static GateInstance is_zero(WireId in, WireId inv_aux, WireId out);
    static GateInstance fma(WireId a, WireId b, WireId c, WireId d,
                            FieldElement c0, FieldElement c1);
    static GateInstance lin_comb(std::vector<WireId> terms, WireId out,
                                 std::vector<FieldElement> coeffs);
    static GateInstance lookup(std::string table, std::vector<WireId> wires);
    static GateInstance decompose(WireId in, std::vector<WireId> chunks, std::uint32_t bits);

    // Throws std::invalid_argument when the arity table is violated.
    void check_arity() const;

    // Wires written by this gate (aux then outputs).
    std::vector<WireId> defined_wires() const;

    // Key fields only: wiring of inputs plus configuration. Used by CSE.
    bool same_computation(const GateInstance& other) const;
};

struct Violation {
    std::string path;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

struct CircuitSignature {
    std::vector<WireId> inputs;   // ascending
    std::vector<WireId> outputs;  // declared order

    bool operator==(const CircuitSignature& o) const {
        return inputs == o.inputs && outputs == o.outputs;
    }
};

// Circuits are immutable trees of gates with sequential and parallel
// composition. Construction goes through the static factories.
class Circuit {
  public:
    enum class Tag { Nil, Gate, Seq, Par };

    Circuit() : Circuit(nil()) {}

    static Circuit nil();
    static Circuit gate(GateInstance g);
    static Circuit seq(Circuit left, Circuit right);
    static Circuit par(Circuit left, Circuit right);
    static Circuit from_gates(const std::vector<GateInstance>& gates);

    Tag tag() const { return node_->tag; }
    const GateInstance& gate_instance() const { return node_->g; }
    Circuit left() const { return Circuit(node_->left); }
    Circuit right() const { return Circuit(node_->right); }

    // Deterministic linearization: Seq and Par both left-then-right.
    std::vector<GateInstance> gates_in_order() const;

    // One past the largest wire id mentioned anywhere; 0 for Nil.
    WireId wire_count() const;

    std::map<std::string, std::size_t> stats() const;

  private:
    struct Node {
        Tag tag;
        GateInstance g;
        std::shared_ptr<const Node> left;
        std::shared_ptr<const Node> right;
    };

    explicit Circuit(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

// Checks single static assignment, def-before-use and Par isolation. All
// violations are reported as data; an empty report means well-formed.
ValidationReport validate(const Circuit& c);

// Inputs are the wires read but never defined. Outputs default to gate
// outputs that no later gate consumes; a declared set overrides the default
// and must be a subset of the defined wires.
CircuitSignature signature(const Circuit& c,
                           const std::optional<std::vector<WireId>>& declared_outputs = std::nullopt);

std::map<std::string, std::size_t> merge_stats(std::map<std::string, std::size_t> a,
                                               const std::map<std::string, std::size_t>& b);

}  // namespace plonkc
