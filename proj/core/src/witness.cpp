#include "plonkc/witness.hpp"

#include <stdexcept>

namespace plonkc {

void Trace::set(WireId w, const FieldElement& value) {
    if (value.modulus() != modulus_) {
        throw std::invalid_argument("trace/value field mismatch");
    }
    if (w >= slots_.size()) slots_.resize(w + 1);
    if (slots_[w].has_value()) {
        throw std::logic_error("trace slot " + std::to_string(w) + " written twice");
    }
    slots_[w] = value.value();
}

void Trace::assign(WireId w, const FieldElement& value) {
    if (w >= slots_.size()) slots_.resize(w + 1);
    slots_[w] = value.value();
}

namespace {

std::string unset_input(const GateInstance& g, WireId w) {
    return gate_op_name(g.op) + " gate: input wire " + std::to_string(w) + " is unset";
}

}  // namespace

std::string gate_trace(const GateInstance& g, Trace& t, const TableRegistry& tables) {
    const FieldSpec spec = t.spec();
    auto need = [&](WireId w) -> FieldElement {
        auto v = t.get(w);
        if (!v) throw std::runtime_error(unset_input(g, w));
        return *v;
    };
    try {
        switch (g.op) {
            case GateOp::Constant:
                t.set(g.outputs[0], g.constants[0]);
                break;
            case GateOp::Arith: {
                FieldElement l = need(g.inputs[0]);
                FieldElement r = need(g.inputs[1]);
                const auto& q = g.constants;
                // ql*l + qr*r + qo*o + qm*l*r + qc = 0, solved for o.
                FieldElement o = -(q[0] * l + q[1] * r + q[3] * l * r + q[4]) * q[2].inv();
                t.set(g.outputs[0], o);
                break;
            }
            case GateOp::BoolCheck: {
                FieldElement i = need(g.inputs[0]);
                if (i.value() > 1) {
                    return "boolCheck failed: value " + i.to_decimal() + " not in {0,1}";
                }
                break;
            }
            case GateOp::IsZero: {
                FieldElement i = need(g.inputs[0]);
                if (i.is_zero()) {
                    t.set(g.aux[0], FieldElement(0, spec));
                    t.set(g.outputs[0], FieldElement(1, spec));
                } else {
                    t.set(g.aux[0], i.inv());
                    t.set(g.outputs[0], FieldElement(0, spec));
                }
                break;
            }
            case GateOp::Fma: {
                FieldElement a = need(g.inputs[0]);
                FieldElement b = need(g.inputs[1]);
                FieldElement c = need(g.inputs[2]);
                t.set(g.outputs[0], g.constants[0] * a * b + g.constants[1] * c);
                break;
            }
            case GateOp::LinComb: {
                FieldElement acc(0, spec);
                for (std::size_t i = 0; i < g.inputs.size(); ++i) {
                    acc = acc + g.constants[i] * need(g.inputs[i]);
                }
                t.set(g.outputs[0], acc);
                break;
            }
            case GateOp::Lookup: {
                auto it = tables.find(g.table);
                if (it == tables.end()) {
                    return "lookup failed: unknown table " + g.table;
                }
                std::vector<std::uint64_t> tuple;
                tuple.reserve(g.inputs.size());
                for (WireId w : g.inputs) tuple.push_back(need(w).value());
                if (!it->second.contains(tuple)) {
                    return "lookup failed: tuple not in table " + g.table;
                }
                break;
            }
            case GateOp::Decompose: {
                FieldElement x = need(g.inputs[0]);
                std::uint64_t value = x.value();
                const std::uint32_t total_bits = g.chunk_count * g.chunk_bits;
                if (total_bits < 64 && value >= (1ull << total_bits)) {
                    return "decompose failed: value " + x.to_decimal() + " exceeds " +
                           std::to_string(total_bits) + " bits";
                }
                const std::uint64_t mask = (g.chunk_bits == 64)
                                               ? ~0ull
                                               : ((1ull << g.chunk_bits) - 1);
                for (std::uint32_t i = 0; i < g.chunk_count; ++i) {
                    std::uint64_t chunk = (value >> (i * g.chunk_bits)) & mask;
                    t.set(g.outputs[i], FieldElement(chunk, spec));
                }
                break;
            }
        }
    } catch (const std::runtime_error& e) {
        return e.what();
    }
    return "";
}

TraceResult gen_trace(const Circuit& c, const Trace& initial, const TableRegistry& tables) {
    static const TableRegistry fallback = default_tables();
    const TableRegistry& active = tables.empty() ? fallback : tables;
    Trace t = initial;
    std::size_t index = 0;
    for (const auto& g : c.gates_in_order()) {
        std::string failure = gate_trace(g, t, active);
        if (!failure.empty()) {
            return TraceResult::fail("gate[" + std::to_string(index) + "] " + failure);
        }
        ++index;
    }
    return TraceResult::success(std::move(t));
}

bool trace_equiv(const CircuitSignature& sig, const std::optional<Trace>& t1,
                 const std::optional<Trace>& t2) {
    if (!t1 && !t2) return true;
    if (!t1 || !t2) return false;
    auto same_at = [&](WireId w) {
        auto a = t1->get(w);
        auto b = t2->get(w);
        if (!a && !b) return true;
        if (!a || !b) return false;
        return *a == *b;
    };
    for (WireId w : sig.inputs) {
        if (!same_at(w)) return false;
    }
    for (WireId w : sig.outputs) {
        if (!same_at(w)) return false;
    }
    return true;
}

}  // namespace plonkc
