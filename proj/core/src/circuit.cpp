#include "plonkc/circuit.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace plonkc {

std::string gate_op_name(GateOp op) {
    switch (op) {
        case GateOp::Constant: return "Constant";
        case GateOp::Arith: return "Arith";
        case GateOp::BoolCheck: return "BoolCheck";
        case GateOp::IsZero: return "IsZero";
        case GateOp::Fma: return "FMA";
        case GateOp::LinComb: return "LinComb";
        case GateOp::Lookup: return "Lookup";
        case GateOp::Decompose: return "Decompose";
    }
    return "Unknown";
}

GateInstance GateInstance::constant(WireId out, FieldElement q) {
    GateInstance g;
    g.op = GateOp::Constant;
    g.outputs = {out};
    g.constants = {q};
    g.check_arity();
    return g;
}

GateInstance GateInstance::arith(WireId l, WireId r, WireId out,
                                 FieldElement ql, FieldElement qr, FieldElement qo,
                                 FieldElement qm, FieldElement qc) {
    GateInstance g;
    g.op = GateOp::Arith;
    g.inputs = {l, r};
    g.outputs = {out};
    g.constants = {ql, qr, qo, qm, qc};
    g.check_arity();
    return g;
}

GateInstance GateInstance::bool_check(WireId in) {
    GateInstance g;
    g.op = GateOp::BoolCheck;
    g.inputs = {in};
    g.check_arity();
    return g;
}

GateInstance GateInstance::is_zero(WireId in, WireId inv_aux, WireId out) {
    GateInstance g;
    g.op = GateOp::IsZero;
    g.inputs = {in};
    g.aux = {inv_aux};
    g.outputs = {out};
    g.check_arity();
    return g;
}

GateInstance GateInstance::fma(WireId a, WireId b, WireId c, WireId d,
                               FieldElement c0, FieldElement c1) {
    GateInstance g;
    g.op = GateOp::Fma;
    g.inputs = {a, b, c};
    g.outputs = {d};
    g.constants = {c0, c1};
    g.check_arity();
    return g;
}

GateInstance GateInstance::lin_comb(std::vector<WireId> terms, WireId out,
                                    std::vector<FieldElement> coeffs) {
    GateInstance g;
    g.op = GateOp::LinComb;
    g.inputs = std::move(terms);
    g.outputs = {out};
    g.constants = std::move(coeffs);
    g.check_arity();
    return g;
}

GateInstance GateInstance::lookup(std::string table, std::vector<WireId> wires) {
    GateInstance g;
    g.op = GateOp::Lookup;
    g.table = std::move(table);
    g.inputs = std::move(wires);
    g.check_arity();
    return g;
}

GateInstance GateInstance::decompose(WireId in, std::vector<WireId> chunks, std::uint32_t bits) {
    GateInstance g;
    g.op = GateOp::Decompose;
    g.inputs = {in};
    g.outputs = std::move(chunks);
    g.chunk_count = static_cast<std::uint32_t>(g.outputs.size());
    g.chunk_bits = bits;
    g.check_arity();
    return g;
}

void GateInstance::check_arity() const {
    auto fail = [this](const std::string& why) {
        throw std::invalid_argument(gate_op_name(op) + " gate: " + why);
    };
    switch (op) {
        case GateOp::Constant:
            if (inputs.size() != 0 || aux.size() != 0 || outputs.size() != 1 || constants.size() != 1)
                fail("expects 0 in / 0 aux / 1 out / 1 const");
            break;
        case GateOp::Arith:
            if (inputs.size() != 2 || aux.size() != 0 || outputs.size() != 1 || constants.size() != 5)
                fail("expects 2 in / 0 aux / 1 out / 5 const");
            if (constants[2].is_zero()) fail("qo must be nonzero");
            break;
        case GateOp::BoolCheck:
            if (inputs.size() != 1 || aux.size() != 0 || outputs.size() != 0 || constants.size() != 0)
                fail("expects 1 in / 0 aux / 0 out / 0 const");
            break;
        case GateOp::IsZero:
            if (inputs.size() != 1 || aux.size() != 1 || outputs.size() != 1 || constants.size() != 0)
                fail("expects 1 in / 1 aux / 1 out / 0 const");
            break;
        case GateOp::Fma:
            if (inputs.size() != 3 || aux.size() != 0 || outputs.size() != 1 || constants.size() != 2)
                fail("expects 3 in / 0 aux / 1 out / 2 const");
            break;
        case GateOp::LinComb:
            if (inputs.empty() || aux.size() != 0 || outputs.size() != 1 ||
                constants.size() != inputs.size())
                fail("expects k in / 0 aux / 1 out / k const, k >= 1");
            break;
        case GateOp::Lookup:
            if (inputs.empty() || aux.size() != 0 || outputs.size() != 0 || constants.size() != 0)
                fail("expects m in / 0 aux / 0 out / 0 const");
            if (table.empty()) fail("missing table name");
            break;
        case GateOp::Decompose:
            if (inputs.size() != 1 || aux.size() != 0 || outputs.empty() || constants.size() != 0)
                fail("expects 1 in / 0 aux / k out / 0 const");
            if (chunk_count != outputs.size()) fail("chunk count mismatch");
            if (chunk_bits < 1 || chunk_bits > 16) fail("chunk bits must be in 1..16");
            break;
    }
}

std::vector<WireId> GateInstance::defined_wires() const {
    std::vector<WireId> out = aux;
    out.insert(out.end(), outputs.begin(), outputs.end());
    return out;
}

bool GateInstance::same_computation(const GateInstance& other) const {
    return op == other.op && inputs == other.inputs && constants == other.constants &&
           table == other.table && chunk_count == other.chunk_count &&
           chunk_bits == other.chunk_bits;
}

Circuit Circuit::nil() {
    auto node = std::make_shared<Node>();
    node->tag = Tag::Nil;
    return Circuit(std::move(node));
}

Circuit Circuit::gate(GateInstance g) {
    g.check_arity();
    auto node = std::make_shared<Node>();
    node->tag = Tag::Gate;
    node->g = std::move(g);
    return Circuit(std::move(node));
}

Circuit Circuit::seq(Circuit left, Circuit right) {
    auto node = std::make_shared<Node>();
    node->tag = Tag::Seq;
    node->left = left.node_;
    node->right = right.node_;
    return Circuit(std::move(node));
}

Circuit Circuit::par(Circuit left, Circuit right) {
    auto node = std::make_shared<Node>();
    node->tag = Tag::Par;
    node->left = left.node_;
    node->right = right.node_;
    return Circuit(std::move(node));
}

Circuit Circuit::from_gates(const std::vector<GateInstance>& gates) {
    Circuit c = nil();
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        c = seq(gate(*it), c);
    }
    return c;
}

std::vector<GateInstance> Circuit::gates_in_order() const {
    std::vector<GateInstance> out;
    std::function<void(const Node*)> walk = [&](const Node* n) {
        switch (n->tag) {
            case Tag::Nil: break;
            case Tag::Gate: out.push_back(n->g); break;
            case Tag::Seq:
            case Tag::Par:
                walk(n->left.get());
                walk(n->right.get());
                break;
        }
    };
    walk(node_.get());
    return out;
}

WireId Circuit::wire_count() const {
    WireId max_plus_one = 0;
    for (const auto& g : gates_in_order()) {
        for (auto v : {&g.inputs, &g.aux, &g.outputs}) {
            for (WireId w : *v) max_plus_one = std::max(max_plus_one, w + 1);
        }
    }
    return max_plus_one;
}

std::map<std::string, std::size_t> Circuit::stats() const {
    std::map<std::string, std::size_t> counts;
    for (const auto& g : gates_in_order()) counts[gate_op_name(g.op)]++;
    return counts;
}

std::map<std::string, std::size_t> merge_stats(std::map<std::string, std::size_t> a,
                                               const std::map<std::string, std::size_t>& b) {
    for (const auto& [k, v] : b) a[k] += v;
    return a;
}

namespace {

struct WalkState {
    std::set<WireId> defined;
    std::vector<Violation> violations;
};

// Returns the wires defined and read within the subtree rooted at the node.
struct SubtreeUse {
    std::set<WireId> defined;
    std::set<WireId> read;
};

SubtreeUse check_node(const Circuit& c, const std::string& path, WalkState& st) {
    SubtreeUse use;
    switch (c.tag()) {
        case Circuit::Tag::Nil:
            break;
        case Circuit::Tag::Gate: {
            const GateInstance& g = c.gate_instance();
            try {
                g.check_arity();
            } catch (const std::invalid_argument& e) {
                st.violations.push_back({path, e.what()});
            }
            for (WireId w : g.inputs) {
                use.read.insert(w);
            }
            for (WireId w : g.defined_wires()) {
                if (st.defined.count(w)) {
                    st.violations.push_back({path, "wire " + std::to_string(w) +
                                                       " defined more than once"});
                }
                st.defined.insert(w);
                use.defined.insert(w);
            }
            break;
        }
        case Circuit::Tag::Seq: {
            SubtreeUse l = check_node(c.left(), path + "/seq.l", st);
            SubtreeUse r = check_node(c.right(), path + "/seq.r", st);
            use.defined.insert(l.defined.begin(), l.defined.end());
            use.defined.insert(r.defined.begin(), r.defined.end());
            use.read.insert(l.read.begin(), l.read.end());
            use.read.insert(r.read.begin(), r.read.end());
            break;
        }
        case Circuit::Tag::Par: {
            SubtreeUse l = check_node(c.left(), path + "/par.l", st);
            SubtreeUse r = check_node(c.right(), path + "/par.r", st);
            for (WireId w : r.read) {
                if (l.defined.count(w)) {
                    st.violations.push_back({path, "par right branch reads wire " +
                                                       std::to_string(w) +
                                                       " defined by the left branch"});
                }
            }
            for (WireId w : l.read) {
                if (r.defined.count(w)) {
                    st.violations.push_back({path, "par left branch reads wire " +
                                                       std::to_string(w) +
                                                       " defined by the right branch"});
                }
            }
            use.defined.insert(l.defined.begin(), l.defined.end());
            use.defined.insert(r.defined.begin(), r.defined.end());
            use.read.insert(l.read.begin(), l.read.end());
            use.read.insert(r.read.begin(), r.read.end());
            break;
        }
    }
    return use;
}

}  // namespace

ValidationReport validate(const Circuit& c) {
    WalkState st;
    check_node(c, "", st);

    // Def-before-use over the canonical linearization. Wires never defined
    // anywhere are circuit inputs and are exempt.
    std::set<WireId> defined_anywhere = [&] {
        std::set<WireId> all;
        for (const auto& g : c.gates_in_order()) {
            for (WireId w : g.defined_wires()) all.insert(w);
        }
        return all;
    }();
    std::set<WireId> seen;
    std::size_t index = 0;
    for (const auto& g : c.gates_in_order()) {
        for (WireId w : g.inputs) {
            if (defined_anywhere.count(w) && !seen.count(w)) {
                st.violations.push_back({"gate[" + std::to_string(index) + "]",
                                         "wire " + std::to_string(w) + " used before defined"});
            }
        }
        for (WireId w : g.defined_wires()) seen.insert(w);
        ++index;
    }
    ValidationReport report;
    report.violations = std::move(st.violations);
    return report;
}

CircuitSignature signature(const Circuit& c,
                           const std::optional<std::vector<WireId>>& declared_outputs) {
    std::set<WireId> defined;
    std::set<WireId> read;
    std::vector<GateInstance> gates = c.gates_in_order();
    for (const auto& g : gates) {
        for (WireId w : g.inputs) read.insert(w);
        for (WireId w : g.defined_wires()) defined.insert(w);
    }

    CircuitSignature sig;
    for (WireId w : read) {
        if (!defined.count(w)) sig.inputs.push_back(w);
    }

    if (declared_outputs) {
        for (WireId w : *declared_outputs) {
            if (!defined.count(w)) {
                throw std::invalid_argument("declared output wire " + std::to_string(w) +
                                            " is not defined by the circuit");
            }
        }
        sig.outputs = *declared_outputs;
    } else {
        for (const auto& g : gates) {
            for (WireId w : g.outputs) {
                if (!read.count(w)) sig.outputs.push_back(w);
            }
        }
        std::sort(sig.outputs.begin(), sig.outputs.end());
        sig.outputs.erase(std::unique(sig.outputs.begin(), sig.outputs.end()), sig.outputs.end());
    }
    return sig;
}

}  // namespace plonkc
