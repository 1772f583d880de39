#include "plonkc/verify.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace plonkc {

FieldElement sample_domain(Domain d, const FieldSpec& spec, std::mt19937_64& rng) {
    switch (d) {
        case Domain::Field:
            return FieldElement(std::uniform_int_distribution<std::uint64_t>(
                                    0, spec.modulus - 1)(rng),
                                spec);
        case Domain::Bool:
            return FieldElement(rng() & 1, spec);
        case Domain::U4:
            return FieldElement(std::uniform_int_distribution<std::uint64_t>(0, 15)(rng) %
                                    spec.modulus,
                                spec);
        case Domain::U32: {
            std::uint64_t hi = std::min<std::uint64_t>(spec.modulus - 1, 0xffffffffull);
            return FieldElement(std::uniform_int_distribution<std::uint64_t>(0, hi)(rng), spec);
        }
    }
    throw std::logic_error("unreachable");
}

std::vector<FieldElement> sample_inputs(const std::vector<InputSpec>& inputs,
                                        const FieldSpec& spec, std::mt19937_64& rng) {
    std::vector<FieldElement> out;
    out.reserve(inputs.size());
    for (const auto& in : inputs) out.push_back(sample_domain(in.domain, spec, rng));
    return out;
}

Trace input_trace(const BuiltCircuit& built, const std::vector<FieldElement>& values) {
    if (values.size() != built.inputs.size()) {
        throw std::invalid_argument("expected " + std::to_string(built.inputs.size()) +
                                    " input values, got " + std::to_string(values.size()));
    }
    Trace t(values.empty() ? FieldSpec::goldilocks() : values.front().spec(),
            built.circuit.wire_count());
    for (std::size_t i = 0; i < values.size(); ++i) t.set(built.inputs[i].wire, values[i]);
    return t;
}

PassContext make_context(const BuiltCircuit& built, const FieldSpec& spec, Profile profile) {
    PassContext ctx{spec, built.sig, {}, {}, profile};
    ctx.sig = built.sig;
    ctx.assumed_bool = built.assumed_bool;
    ctx.bool_tagged = built.bool_facts;
    ctx.profile = profile;
    return ctx;
}

CheckReport check_completeness(const BuiltGadget& g, const FieldSpec& spec, std::size_t samples,
                               std::uint64_t seed) {
    CheckReport rep;
    rep.property = "completeness";
    std::mt19937_64 rng(seed);
    ConstraintSystem cs = gen_cs(g.built.circuit, spec, g.built.tables);
    for (std::size_t i = 0; i < samples; ++i) {
        ++rep.cases;
        std::vector<FieldElement> in = sample_inputs(g.built.inputs, spec, rng);
        TraceResult res = gen_trace(g.built.circuit, input_trace(g.built, in), g.built.tables);
        if (!res.ok()) {
            rep.failures.push_back(g.name + ": generator failed on a valid input (" +
                                   res.failure + ")");
            continue;
        }
        if (!sat(cs, *res.trace)) {
            rep.failures.push_back(g.name + ": generated trace rejected by the constraints");
        }
        if (g.reference) {
            std::vector<FieldElement> expected = g.reference(in);
            for (std::size_t j = 0; j < g.built.sig.outputs.size(); ++j) {
                auto got = res.trace->get(g.built.sig.outputs[j]);
                if (!got || *got != expected.at(j)) {
                    rep.failures.push_back(g.name + ": output disagrees with the reference");
                }
            }
        }
    }
    return rep;
}

namespace {

void check_budget(const FieldSpec& spec, std::size_t width) {
    long double total = 1;
    for (std::size_t i = 0; i < width; ++i) {
        total *= static_cast<long double>(spec.modulus);
        if (total > 1e8L) {
            throw std::length_error("enumeration budget exceeded: modulus^" +
                                    std::to_string(width) + " > 1e8");
        }
    }
}

}  // namespace

std::vector<Trace> enumerate_satisfying(const ConstraintSystem& cs, std::size_t width,
                                        const FieldSpec& spec) {
    check_budget(spec, width);
    // Constraints indexed by the last wire they mention, so a violated
    // identity prunes the subtree as soon as its wires are assigned.
    std::vector<std::vector<const ConstrainedVector*>> cvs_at(width);
    std::vector<std::vector<const LookupConstraint*>> lks_at(width);
    for (const auto& cv : cs.cvs) {
        WireId last = 0;
        for (WireId w : cv.wires) last = std::max(last, w);
        if (last >= width) throw std::invalid_argument("constraint wire beyond width");
        cvs_at[last].push_back(&cv);
    }
    for (const auto& lk : cs.lookups) {
        WireId last = 0;
        for (WireId w : lk.wires) last = std::max(last, w);
        if (last >= width) throw std::invalid_argument("lookup wire beyond width");
        lks_at[last].push_back(&lk);
    }

    std::vector<Trace> out;
    Trace t(spec, width);
    std::function<void(std::size_t)> go = [&](std::size_t slot) {
        if (slot == width) {
            out.push_back(t);
            return;
        }
        for (std::uint64_t v = 0; v < spec.modulus; ++v) {
            t.assign(static_cast<WireId>(slot), FieldElement(v, spec));
            bool ok = true;
            for (const auto* cv : cvs_at[slot]) ok = ok && sat_cv(*cv, t);
            for (const auto* lk : lks_at[slot]) {
                if (!ok) break;
                auto it = cs.tables.find(lk->table);
                if (it == cs.tables.end()) {
                    ok = false;
                    break;
                }
                std::vector<std::uint64_t> tuple;
                for (WireId w : lk->wires) tuple.push_back(t.get(w)->value());
                ok = it->second.contains(tuple);
            }
            if (ok) go(slot + 1);
        }
        // Leave the slot assigned; the next sibling overwrites it.
    };
    if (width == 0) return {t};
    go(0);
    return out;
}

std::vector<std::vector<FieldElement>> enumerate_satisfying_gate(const CustomGate& gate,
                                                                 const FieldSpec& spec) {
    check_budget(spec, gate.width);
    std::vector<std::vector<const Identity*>> ids_at(gate.width);
    for (const auto& id : gate.identities) {
        std::size_t last = 0;
        for (const auto& m : id.monomials) {
            for (std::size_t s : m.wire_slots) last = std::max(last, s);
        }
        ids_at[last].push_back(&id);
    }
    std::vector<std::vector<FieldElement>> out;
    std::vector<FieldElement> vals(gate.width, FieldElement(0, spec));
    static const std::vector<FieldElement> no_consts;
    std::function<void(std::size_t)> go = [&](std::size_t slot) {
        if (slot == gate.width) {
            out.push_back(vals);
            return;
        }
        for (std::uint64_t v = 0; v < spec.modulus; ++v) {
            vals[slot] = FieldElement(v, spec);
            bool ok = true;
            for (const auto* id : ids_at[slot]) {
                ok = ok && eval_identity(*id, vals, no_consts).is_zero();
            }
            if (ok) go(slot + 1);
        }
    };
    if (gate.width == 0) return {vals};
    go(0);
    return out;
}

CheckReport check_soundness_bruteforce(const BuiltGadget& g, const FieldSpec& spec) {
    CheckReport rep;
    rep.property = "soundness";
    ConstraintSystem cs = gen_cs(g.built.circuit, spec, g.built.tables);
    std::size_t width = g.built.circuit.wire_count();
    for (const Trace& t : enumerate_satisfying(cs, width, spec)) {
        ++rep.cases;
        Trace seed(spec, width);
        for (WireId w : g.built.sig.inputs) seed.set(w, *t.get(w));
        TraceResult res = gen_trace(g.built.circuit, seed, g.built.tables);
        if (!trace_equiv(g.built.sig, res.trace, t)) {
            std::string detail = g.name + ": satisfying trace (";
            for (const auto& slot : t.raw()) {
                detail += slot ? std::to_string(*slot) : std::string("_");
                detail += " ";
            }
            detail += res.ok() ? ") diverges from the generated trace"
                               : ") accepted but the generator fails: " + res.failure;
            rep.failures.push_back(detail);
        }
    }
    return rep;
}

CheckReport check_preservation(const std::string& pass_id, const BuiltGadget& g,
                               const FieldSpec& spec, std::size_t samples, std::uint64_t seed) {
    CheckReport rep;
    rep.property = "preservation:" + pass_id;
    PassContext ctx = make_context(g.built, spec, Profile::boojum());
    Circuit transformed = run_pass(pass_id, g.built.circuit, ctx).circuit;
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        ++rep.cases;
        std::vector<FieldElement> in = sample_inputs(g.built.inputs, spec, rng);
        if (i % 2 == 1 && !in.empty()) {
            // Mutate one coordinate. Typed contracts are respected (a Bool
            // input stays boolean) except for U32, whose range discipline is
            // in-circuit and must survive the pass.
            std::size_t k = rng() % in.size();
            Domain d = g.built.inputs[k].domain;
            in[k] = d == Domain::U32 ? sample_domain(Domain::Field, spec, rng)
                                     : sample_domain(d, spec, rng);
        }
        TraceResult before = gen_trace(g.built.circuit, input_trace(g.built, in), g.built.tables);
        TraceResult after = gen_trace(transformed, input_trace(g.built, in), g.built.tables);
        if (!trace_equiv(g.built.sig, before.trace, after.trace)) {
            std::string detail = g.name + " under " + pass_id + ": input (";
            for (const auto& v : in) detail += v.to_decimal() + " ";
            detail += ") " + std::string(before.ok() ? "succeeds" : "fails") + " originally but " +
                      (after.ok() ? "succeeds" : "fails") + " afterwards";
            if (before.ok() && after.ok()) detail += " with different io values";
            rep.failures.push_back(detail);
        }
    }
    return rep;
}

}  // namespace plonkc
