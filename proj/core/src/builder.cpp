#include "plonkc/builder.hpp"

#include <stdexcept>

namespace plonkc {

WireId Env::fresh() { return next_wire_++; }

Repr Env::input() {
    WireId w = fresh();
    inputs_.push_back({w, Domain::Field});
    return {w, ReprTag::SValue};
}

Repr Env::input_bool() {
    WireId w = fresh();
    inputs_.push_back({w, Domain::Bool});
    bool_facts_.insert(w);
    assumed_bool_.insert(w);
    return {w, ReprTag::Bool};
}

Repr Env::input_u32() {
    WireId w = fresh();
    inputs_.push_back({w, Domain::U32});
    Repr handle{w, ReprTag::U32};
    range_check_n(handle, 32);
    return handle;
}

Repr Env::constant(FieldElement v) {
    if (v.modulus() != spec_.modulus) throw std::invalid_argument("constant from wrong field");
    auto it = constant_pool_.find(v.value());
    if (it != constant_pool_.end()) return {it->second, ReprTag::SValue};
    WireId w = fresh();
    gates_.push_back(GateInstance::constant(w, v));
    constant_pool_[v.value()] = w;
    return {w, ReprTag::SValue};
}

Repr Env::emit_arith(WireId l, WireId r, FieldElement ql, FieldElement qr, FieldElement qm,
                     FieldElement qc) {
    WireId o = fresh();
    gates_.push_back(
        GateInstance::arith(l, r, o, ql, qr, FieldElement::from_signed(-1, spec_), qm, qc));
    return {o, ReprTag::SValue};
}

Repr Env::add(Repr a, Repr b) {
    FieldElement one(1, spec_), zero(0, spec_);
    return emit_arith(a.wire, b.wire, one, one, zero, zero);
}

Repr Env::sub(Repr a, Repr b) {
    FieldElement one(1, spec_), zero(0, spec_);
    return emit_arith(a.wire, b.wire, one, -one, zero, zero);
}

Repr Env::mul(Repr a, Repr b) {
    FieldElement one(1, spec_), zero(0, spec_);
    return emit_arith(a.wire, b.wire, zero, zero, one, zero);
}

Repr Env::affine(Repr a, FieldElement coeff, FieldElement offset) {
    FieldElement zero(0, spec_);
    return emit_arith(a.wire, a.wire, coeff, zero, zero, offset);
}

Repr Env::require_bool(Repr a, const char* op) const {
    if (a.tag != ReprTag::Bool) {
        throw std::invalid_argument(std::string(op) + " requires a Bool-tagged operand");
    }
    return a;
}

Repr Env::logic_not(Repr a) {
    require_bool(a, "not");
    Repr o = affine(a, FieldElement::from_signed(-1, spec_), FieldElement(1, spec_));
    return assert_bool(o);
}

Repr Env::logic_and(Repr a, Repr b) {
    require_bool(a, "and");
    require_bool(b, "and");
    Repr o = mul(a, b);
    return assert_bool(o);
}

Repr Env::logic_or(Repr a, Repr b) {
    require_bool(a, "or");
    require_bool(b, "or");
    // a + b - a*b, one gate.
    FieldElement one(1, spec_), zero(0, spec_);
    Repr o = emit_arith(a.wire, b.wire, one, one, -one, zero);
    return assert_bool(o);
}

Repr Env::logic_xor(Repr a, Repr b) {
    // (a /\ ~b) \/ (~a /\ b)
    Repr nb = logic_not(b);
    Repr t1 = logic_and(a, nb);
    Repr na = logic_not(a);
    Repr t2 = logic_and(na, b);
    return logic_or(t1, t2);
}

Repr Env::assert_bool(Repr a) {
    gates_.push_back(GateInstance::bool_check(a.wire));
    bool_facts_.insert(a.wire);
    return {a.wire, ReprTag::Bool};
}

Repr Env::is_zero(Repr a) {
    WireId r = fresh();
    WireId o = fresh();
    gates_.push_back(GateInstance::is_zero(a.wire, r, o));
    bool_facts_.insert(o);
    return {o, ReprTag::Bool};
}

Repr Env::reduce_terms(const std::vector<FieldElement>& coeffs, const std::vector<Repr>& terms) {
    if (coeffs.empty() || coeffs.size() != terms.size()) {
        throw std::invalid_argument("reduce_terms: coefficient/term length mismatch");
    }
    FieldElement one(1, spec_), zero(0, spec_);
    Repr acc = affine(terms[0], coeffs[0], zero);
    for (std::size_t i = 1; i < terms.size(); ++i) {
        acc = emit_arith(acc.wire, terms[i].wire, one, coeffs[i], zero, zero);
    }
    return acc;
}

Repr Env::range_check_u4(Repr a) {
    if (!tables_.count("u4")) throw std::invalid_argument("u4 table not registered");
    gates_.push_back(GateInstance::lookup("u4", {a.wire}));
    return {a.wire, ReprTag::U4};
}

RangeCheckResult Env::range_check_n(Repr a, std::uint32_t bits) {
    if (bits == 0 || bits % 4 != 0 || bits > 64) {
        throw std::invalid_argument("range_check_n: bits must be a positive multiple of 4, <= 64");
    }
    const std::uint32_t k = bits / 4;
    std::vector<WireId> chunk_wires;
    chunk_wires.reserve(k);
    for (std::uint32_t i = 0; i < k; ++i) chunk_wires.push_back(fresh());
    gates_.push_back(GateInstance::decompose(a.wire, chunk_wires, 4));
    RangeCheckResult out;
    for (WireId n : chunk_wires) {
        out.chunks.push_back(range_check_u4({n, ReprTag::SValue}));
    }
    if (bits > 32) {
        std::vector<WireId> low_terms(chunk_wires.begin(), chunk_wires.begin() + 8);
        std::vector<FieldElement> weights;
        FieldElement w(1, spec_), base(16, spec_);
        for (std::size_t i = 0; i < 8; ++i) {
            weights.push_back(w);
            w = w * base;
        }
        WireId low = fresh();
        gates_.push_back(GateInstance::lin_comb(low_terms, low, weights));
        out.low = {low, ReprTag::U32};
    } else {
        out.low = {a.wire, bits == 32 ? ReprTag::U32 : ReprTag::SValue};
    }
    return out;
}

BuiltCircuit Env::finish(const std::vector<Repr>& outputs) {
    BuiltCircuit out;
    out.circuit = Circuit::from_gates(gates_);
    std::vector<WireId> declared;
    declared.reserve(outputs.size());
    for (const Repr& r : outputs) declared.push_back(r.wire);
    out.sig = signature(out.circuit, declared);
    // Inferred inputs must be exactly the declared ones; anything else is a
    // builder bug (a gate reading a never-allocated wire).
    std::set<WireId> declared_inputs;
    for (const auto& in : inputs_) declared_inputs.insert(in.wire);
    for (WireId w : out.sig.inputs) {
        if (!declared_inputs.count(w)) {
            throw std::logic_error("wire " + std::to_string(w) + " read but never defined");
        }
    }
    out.tables = tables_;
    out.inputs = inputs_;
    out.bool_facts = bool_facts_;
    out.assumed_bool = assumed_bool_;
    return out;
}

}  // namespace plonkc
