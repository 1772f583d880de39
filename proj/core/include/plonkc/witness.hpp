#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plonkc/circuit.hpp"
#include "plonkc/field.hpp"
#include "plonkc/tables.hpp"

namespace plonkc {

// Partial assignment of field elements to wire positions. Slots are
// write-once during generation.
class Trace {
  public:
    explicit Trace(const FieldSpec& spec, std::size_t width = 0)
        : modulus_(spec.modulus), slots_(width) {}

    FieldSpec spec() const { return FieldSpec(modulus_); }
    std::size_t width() const { return slots_.size(); }

    bool is_set(WireId w) const { return w < slots_.size() && slots_[w].has_value(); }

    std::optional<FieldElement> get(WireId w) const {
        if (!is_set(w)) return std::nullopt;
        return FieldElement(*slots_[w], FieldSpec(modulus_));
    }

    // Throws std::logic_error on an attempted overwrite.
    void set(WireId w, const FieldElement& value);

    // Unchecked assignment, for brute-force enumeration only.
    void assign(WireId w, const FieldElement& value);

    bool operator==(const Trace& other) const {
        return modulus_ == other.modulus_ && slots_ == other.slots_;
    }

    const std::vector<std::optional<std::uint64_t>>& raw() const { return slots_; }

  private:
    std::uint64_t modulus_;
    std::vector<std::optional<std::uint64_t>> slots_;
};

// Result of trace generation: either a trace or a diagnostic explaining the
// failure. Equality of results ignores the diagnostic.
struct TraceResult {
    std::optional<Trace> trace;
    std::string failure;

    bool ok() const { return trace.has_value(); }
    static TraceResult success(Trace t) { return {std::move(t), ""}; }
    static TraceResult fail(std::string why) { return {std::nullopt, std::move(why)}; }
};

// Per-gate semantics: extends the trace with the gate's aux/output values or
// reports an assertion failure. Returns empty on success.
std::string gate_trace(const GateInstance& g, Trace& t, const TableRegistry& tables);

// Functional semantics of a circuit: deterministically extends the initial
// trace gate by gate, failing on missing inputs or failed assertions.
TraceResult gen_trace(const Circuit& c, const Trace& initial,
                      const TableRegistry& tables = {});

// The equivalence used by soundness and preservation checks: traces agree at
// every input and output position of the signature (aux and intermediate
// positions are ignored), or both are absent.
bool trace_equiv(const CircuitSignature& sig, const std::optional<Trace>& t1,
                 const std::optional<Trace>& t2);

}  // namespace plonkc
