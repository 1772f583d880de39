#include "plonkc/constraints.hpp"

#include <algorithm>
#include <stdexcept>

namespace plonkc {

FieldElement eval_identity(const Identity& id, const std::vector<FieldElement>& wire_vals,
                           const std::vector<FieldElement>& const_vals) {
    if (id.monomials.empty()) {
        throw std::invalid_argument("identity with no monomials");
    }
    const FieldSpec spec = id.monomials.front().coeff.spec();
    FieldElement acc(0, spec);
    for (const auto& m : id.monomials) {
        FieldElement term = m.coeff;
        for (std::size_t s : m.const_slots) term = term * const_vals.at(s);
        for (std::size_t s : m.wire_slots) term = term * wire_vals.at(s);
        acc = acc + term;
    }
    return acc;
}

std::size_t identity_degree(const Identity& id) {
    std::size_t deg = 0;
    for (const auto& m : id.monomials) deg = std::max(deg, m.wire_slots.size());
    return deg;
}

std::size_t cv_degree(const ConstrainedVector& cv) {
    std::size_t deg = 0;
    for (const auto& id : cv.identities) deg = std::max(deg, identity_degree(id));
    return deg;
}

bool sat_cv(const ConstrainedVector& cv, const Trace& t) {
    std::vector<FieldElement> wire_vals;
    wire_vals.reserve(cv.wires.size());
    for (WireId w : cv.wires) {
        auto v = t.get(w);
        if (!v) return false;
        wire_vals.push_back(*v);
    }
    for (const auto& id : cv.identities) {
        if (!eval_identity(id, wire_vals, cv.constants).is_zero()) return false;
    }
    return true;
}

bool sat(const ConstraintSystem& cs, const Trace& t) {
    for (const auto& cv : cs.cvs) {
        if (!sat_cv(cv, t)) return false;
    }
    for (const auto& lk : cs.lookups) {
        auto it = cs.tables.find(lk.table);
        if (it == cs.tables.end()) return false;
        std::vector<std::uint64_t> tuple;
        tuple.reserve(lk.wires.size());
        for (WireId w : lk.wires) {
            auto v = t.get(w);
            if (!v) return false;
            tuple.push_back(v->value());
        }
        if (!it->second.contains(tuple)) return false;
    }
    return true;
}

Identity id_arith(const FieldSpec& spec) {
    FieldElement one(1, spec);
    return Identity{{
        {one, {0}, {0}},     // ql*l
        {one, {1}, {1}},     // qr*r
        {one, {2}, {2}},     // qo*o
        {one, {3}, {0, 1}},  // qm*l*r
        {one, {4}, {}},      // qc
    }};
}

Identity id_bool(std::size_t wire_slot, const FieldSpec& spec) {
    FieldElement one(1, spec);
    return Identity{{
        {one, {}, {wire_slot, wire_slot}},
        {-one, {}, {wire_slot}},
    }};
}

ConstrainedVector is_zero_cv(WireId i, WireId r, WireId o, const FieldSpec& spec,
                             bool with_product_completion) {
    FieldElement one(1, spec);
    ConstrainedVector cv;
    cv.wires = {i, r, o};
    // o + i*r - 1 = 0
    cv.identities.push_back(Identity{{
        {one, {}, {2}},
        {one, {}, {0, 1}},
        {-one, {}, {}},
    }});
    if (with_product_completion) {
        // i*o = 0
        cv.identities.push_back(Identity{{{one, {}, {0, 2}}}});
    }
    cv.identities.push_back(id_bool(2, spec));
    return cv;
}

namespace {

ConstrainedVector gate_cv(const GateInstance& g, const FieldSpec& spec) {
    FieldElement one(1, spec);
    ConstrainedVector cv;
    switch (g.op) {
        case GateOp::Constant:
            cv.wires = {g.outputs[0]};
            cv.constants = {g.constants[0]};
            cv.identities.push_back(Identity{{{one, {}, {0}}, {-one, {0}, {}}}});
            break;
        case GateOp::Arith:
            cv.wires = {g.inputs[0], g.inputs[1], g.outputs[0]};
            cv.constants = g.constants;
            cv.identities.push_back(id_arith(spec));
            break;
        case GateOp::BoolCheck:
            cv.wires = {g.inputs[0]};
            cv.identities.push_back(id_bool(0, spec));
            break;
        case GateOp::IsZero:
            return is_zero_cv(g.inputs[0], g.aux[0], g.outputs[0], spec);
        case GateOp::Fma:
            // c0*a*b + c1*c - d = 0
            cv.wires = {g.inputs[0], g.inputs[1], g.inputs[2], g.outputs[0]};
            cv.constants = g.constants;
            cv.identities.push_back(Identity{{
                {one, {0}, {0, 1}},
                {one, {1}, {2}},
                {-one, {}, {3}},
            }});
            break;
        case GateOp::LinComb: {
            cv.wires = g.inputs;
            cv.wires.push_back(g.outputs[0]);
            cv.constants = g.constants;
            Identity id;
            for (std::size_t i = 0; i < g.inputs.size(); ++i) {
                id.monomials.push_back({one, {i}, {i}});
            }
            id.monomials.push_back({-one, {}, {g.inputs.size()}});
            cv.identities.push_back(std::move(id));
            break;
        }
        case GateOp::Decompose: {
            // sum n_i * 2^(b*i) - x = 0; the weights are literal monomial
            // coefficients, chunk ranges are enforced by paired lookups.
            cv.wires = {g.inputs[0]};
            for (WireId n : g.outputs) cv.wires.push_back(n);
            Identity id;
            FieldElement weight = one;
            FieldElement base(1ull << g.chunk_bits, spec);
            for (std::size_t i = 0; i < g.outputs.size(); ++i) {
                id.monomials.push_back({weight, {}, {i + 1}});
                weight = weight * base;
            }
            id.monomials.push_back({-one, {}, {0}});
            cv.identities.push_back(std::move(id));
            break;
        }
        case GateOp::Lookup:
            throw std::logic_error("lookup gates have no constrained vector");
    }
    return cv;
}

}  // namespace

ConstraintSystem gen_cs(const Circuit& c, const FieldSpec& spec, const TableRegistry& tables) {
    ConstraintSystem cs;
    cs.tables = tables;
    for (const auto& g : c.gates_in_order()) {
        if (g.op == GateOp::Lookup) {
            cs.lookups.push_back({g.inputs, g.table});
        } else {
            cs.cvs.push_back(gate_cv(g, spec));
        }
    }
    return cs;
}

namespace {

void render_slots(std::string& out, const std::vector<std::size_t>& slots,
                  const std::string& prefix) {
    for (std::size_t s : slots) {
        if (!out.empty()) out += "*";
        out += prefix + std::to_string(s);
    }
}

}  // namespace

std::string render_identity(const Identity& id, const std::string& wire_prefix,
                            const std::string& const_prefix) {
    std::string out;
    for (const auto& m : id.monomials) {
        FieldElement coeff = m.coeff;
        std::uint64_t p = coeff.modulus();
        bool negative = coeff.value() > p / 2;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        std::uint64_t magnitude = negative ? p - coeff.value() : coeff.value();
        std::string factors;
        render_slots(factors, m.const_slots, const_prefix);
        render_slots(factors, m.wire_slots, wire_prefix);
        if (factors.empty()) {
            out += std::to_string(magnitude);
        } else {
            if (magnitude != 1) out += std::to_string(magnitude) + "*";
            out += factors;
        }
    }
    if (out.empty()) out = "0";
    return out;
}

}  // namespace plonkc
