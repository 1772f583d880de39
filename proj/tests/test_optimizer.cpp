#include <doctest.h>

#include <algorithm>

#include "plonkc/builder.hpp"
#include "plonkc/gadgets.hpp"
#include "plonkc/optimizer.hpp"
#include "plonkc/verify.hpp"
#include "plonkc/witness.hpp"

using namespace plonkc;

namespace {
const FieldSpec f7(7);
FieldElement fe(std::int64_t v) { return FieldElement::from_signed(v, f7); }

std::size_t total_gates(const Circuit& c) {
    std::size_t n = 0;
    for (const auto& [k, v] : c.stats()) n += v;
    return n;
}

PassContext bare_context(const Circuit& c, const FieldSpec& spec,
                         Profile profile = Profile::plonk()) {
    return PassContext{spec, signature(c), {}, {}, profile};
}

// One Field input, one affine copy, a doubled boolean assertion on the copy.
BuiltGadget bool_demo_gadget(const FieldSpec& spec) {
    Env env(spec);
    Repr x = env.input();
    Repr y = env.affine(x, FieldElement(1, spec), FieldElement(0, spec));
    env.assert_bool(y);
    env.assert_bool(y);
    BuiltGadget g;
    g.name = "bool_demo";
    g.built = env.finish({y});
    FieldSpec s = spec;
    g.reference = [s](const std::vector<FieldElement>& in) {
        return std::vector<FieldElement>{in.at(0)};
    };
    return g;
}
}  // namespace

TEST_CASE("linear_inline substitutes an affine producer") {
    // x1 = 2*x0 + 3; x2 = x1 + w + x1*w  (ql=1, qr=1, qo=-1, qm=1, qc=0)
    Circuit c = Circuit::from_gates({
        GateInstance::arith(0, 0, 1, fe(2), fe(0), fe(-1), fe(0), fe(3)),
        GateInstance::arith(1, 2, 3, fe(1), fe(1), fe(-1), fe(1), fe(0)),
    });
    PassResult r = linear_inline(c, bare_context(c, f7));
    CHECK(r.applications > 0);
    auto gates = r.circuit.gates_in_order();
    const GateInstance* consumer = nullptr;
    for (const auto& g : gates) {
        if (g.op == GateOp::Arith && g.outputs[0] == 3) consumer = &g;
    }
    REQUIRE(consumer != nullptr);
    // Left substitution: (ql*a, qr + qm*b, qo, qm*a, ql*b + qc) = (2, 4, -1, 2, 3).
    CHECK(consumer->inputs == std::vector<WireId>{0, 2});
    CHECK(consumer->constants[0].value() == 2);
    CHECK(consumer->constants[1].value() == 4);
    CHECK(consumer->constants[2].value() == f7.modulus - 1);
    CHECK(consumer->constants[3].value() == 2);
    CHECK(consumer->constants[4].value() == 3);
}

TEST_CASE("boolean_reduce collapses the xor cascade") {
    BuiltGadget g = build_gadget("xor", f7);
    PassContext ctx = make_context(g.built, f7);
    PassResult r = boolean_reduce(g.built.circuit, ctx);
    CHECK(r.applications > 0);
    auto stats = r.circuit.stats();
    CHECK(stats["BoolCheck"] == 0);  // all five provable from the input facts

    // The rewritten circuit still computes xor on the full truth table.
    for (std::uint64_t a = 0; a < 2; ++a) {
        for (std::uint64_t b = 0; b < 2; ++b) {
            Trace t(f7, r.circuit.wire_count());
            t.set(g.built.inputs[0].wire, FieldElement(a, f7));
            t.set(g.built.inputs[1].wire, FieldElement(b, f7));
            TraceResult res = gen_trace(r.circuit, t, g.built.tables);
            REQUIRE(res.ok());
            CHECK(res.trace->get(g.built.sig.outputs[0])->value() == (a ^ b));
        }
    }
}

TEST_CASE("boolean_reduce rejects assumed facts on defined wires") {
    Circuit c = Circuit::from_gates({GateInstance::constant(0, fe(1))});
    PassContext ctx = bare_context(c, f7);
    ctx.assumed_bool = {0};
    CHECK_THROWS_AS(boolean_reduce(c, ctx), std::invalid_argument);
}

TEST_CASE("cse merges identical computations") {
    Circuit c = Circuit::from_gates({
        GateInstance::arith(0, 1, 2, fe(0), fe(0), fe(-1), fe(1), fe(0)),
        GateInstance::arith(0, 1, 3, fe(0), fe(0), fe(-1), fe(1), fe(0)),
        GateInstance::arith(2, 3, 4, fe(1), fe(1), fe(-1), fe(0), fe(0)),
    });
    PassContext ctx = PassContext{f7, signature(c, std::vector<WireId>{4}), {}, {},
                                  Profile::plonk()};
    PassResult r = cse(c, ctx);
    CHECK(r.applications == 1);
    auto gates = dce(r.circuit, ctx).circuit.gates_in_order();
    CHECK(gates.size() == 2);
    // The surviving consumer reads the first duplicate twice.
    CHECK(gates.back().inputs == std::vector<WireId>{2, 2});
}

TEST_CASE("dedup_assertions drops repeated checks") {
    Circuit c = Circuit::from_gates({
        GateInstance::constant(0, fe(1)),
        GateInstance::bool_check(0),
        GateInstance::bool_check(0),
        GateInstance::lookup("u4", {0}),
        GateInstance::lookup("u4", {0}),
    });
    PassResult r = dedup_assertions(c, bare_context(c, f7));
    CHECK(r.applications == 2);
    auto stats = r.circuit.stats();
    CHECK(stats["BoolCheck"] == 1);
    CHECK(stats["Lookup"] == 1);
}

TEST_CASE("to_profile folds a linear chain into one lin_comb") {
    Env env(f7);
    Repr a = env.input(), b = env.input(), c = env.input();
    Repr o = env.reduce_terms({fe(2), fe(1), fe(1)}, {a, b, c});
    BuiltCircuit built = env.finish({o});
    CHECK(built.circuit.stats()["Arith"] == 3);

    PassContext ctx = make_context(built, f7, Profile::boojum());
    Circuit lowered = dce(to_profile(built.circuit, ctx).circuit, ctx).circuit;
    auto gates = lowered.gates_in_order();
    REQUIRE(gates.size() == 1);
    CHECK(gates[0].op == GateOp::LinComb);
    CHECK(gates[0].inputs.size() == 4);  // padded to the profile width
    CHECK(gates[0].constants[0].value() == 2);
    CHECK(gates[0].constants[1].value() == 1);
    CHECK(gates[0].constants[2].value() == 1);
    CHECK(gates[0].constants[3].value() == 0);
}

TEST_CASE("to_profile is the identity for the plonk profile") {
    BuiltGadget g = build_gadget("toy_poseidon_round", f7);
    PassContext ctx = make_context(g.built, f7, Profile::plonk());
    PassResult r = to_profile(g.built.circuit, ctx);
    CHECK(r.applications == 0);
    CHECK(r.circuit.stats() == g.built.circuit.stats());
}

TEST_CASE("dce keeps assertions and output producers") {
    Circuit c = Circuit::from_gates({
        GateInstance::constant(0, fe(1)),
        GateInstance::constant(1, fe(2)),  // dead
        GateInstance::arith(0, 0, 2, fe(1), fe(1), fe(-1), fe(0), fe(0)),
        GateInstance::bool_check(0),
    });
    PassContext ctx = PassContext{f7, signature(c, std::vector<WireId>{2}), {}, {},
                                  Profile::plonk()};
    PassResult r = dce(c, ctx);
    CHECK(r.applications == 1);
    auto stats = r.circuit.stats();
    CHECK(stats["Constant"] == 1);
    CHECK(stats["BoolCheck"] == 1);
    CHECK(stats["Arith"] == 1);
}

TEST_CASE("optimize reaches a fixpoint and is idempotent") {
    for (const char* id : {"chained_add", "xor", "toy_poseidon_round"}) {
        BuiltGadget g = build_gadget(id, f7);
        PassContext ctx = make_context(g.built, f7, Profile::boojum());
        OptimizeResult first = optimize(g.built.circuit, ctx);
        OptimizeResult second = optimize(first.circuit, ctx);
        std::size_t reapplied = 0;
        for (const auto& rep : second.reports) reapplied += rep.applications;
        CHECK(reapplied == 0);
        CHECK(second.circuit.stats() == first.circuit.stats());
    }
}

TEST_CASE("optimize strictly shrinks the arithmetic-heavy gadgets") {
    for (const char* id : {"xor", "toy_poseidon_round", "sha_expansion_step"}) {
        FieldSpec spec = std::string(id) == "sha_expansion_step" ? FieldSpec::goldilocks() : f7;
        BuiltGadget g = build_gadget(id, spec);
        PassContext ctx = make_context(g.built, spec, Profile::boojum());
        OptimizeResult r = optimize(g.built.circuit, ctx);
        CHECK(total_gates(r.circuit) < total_gates(g.built.circuit));
    }
}

TEST_CASE("optimized sha keeps strictly fewer lookups") {
    FieldSpec spec = FieldSpec::goldilocks();
    BuiltGadget g = build_gadget("sha_expansion_step", spec);
    PassContext ctx = make_context(g.built, spec, Profile::boojum());
    OptimizeResult r = optimize(g.built.circuit, ctx);
    CHECK(r.circuit.stats()["Lookup"] < g.built.circuit.stats()["Lookup"]);
    CHECK(check_discipline(r.circuit, ctx).ok());
}

TEST_CASE("discipline audit flags dropped range lookups") {
    // Replica of the decompose-without-checks bug: chunk lookups omitted.
    FieldSpec g = FieldSpec::goldilocks();
    Circuit buggy = Circuit::from_gates({
        GateInstance::decompose(0, {1, 2, 3, 4, 5, 6, 7, 8}, 4),
        GateInstance::lookup("u4", {1}),  // only the first chunk is checked
    });
    PassContext ctx{g, signature(buggy), {}, {}, Profile::plonk()};
    DisciplineReport rep = check_discipline(buggy, ctx);
    CHECK_FALSE(rep.ok());
    CHECK(rep.violations.size() == 7);

    Circuit fixed = Circuit::seq(buggy, Circuit::from_gates({
        GateInstance::lookup("u4", {2}), GateInstance::lookup("u4", {3}),
        GateInstance::lookup("u4", {4}), GateInstance::lookup("u4", {5}),
        GateInstance::lookup("u4", {6}), GateInstance::lookup("u4", {7}),
        GateInstance::lookup("u4", {8}),
    }));
    CHECK(check_discipline(fixed, ctx).ok());
}

TEST_CASE("discipline audit flags boolean tags without constraints") {
    BuiltGadget g = bool_demo_gadget(f7);
    PassContext ctx = make_context(g.built, f7);
    CHECK(check_discipline(g.built.circuit, ctx).ok());
    Circuit mutated = mutant_drop_assertions(g.built.circuit, ctx).circuit;
    CHECK_FALSE(check_discipline(mutated, ctx).ok());
}

TEST_CASE("the mutant pass is caught by the preservation check") {
    BuiltGadget g = bool_demo_gadget(f7);
    CheckReport dropped = check_preservation("mutant_drop_assertions", g, f7, 512, 11);
    CHECK_FALSE(dropped.ok());  // input 2: original trace fails, mutant succeeds
    CheckReport dedup = check_preservation("dedup_assertions", g, f7, 512, 11);
    CHECK(dedup.ok());
}

TEST_CASE("run_pass rejects unknown pass names") {
    Circuit c = Circuit::from_gates({GateInstance::constant(0, fe(1))});
    CHECK_THROWS_AS(run_pass("nope", c, bare_context(c, f7)), std::invalid_argument);
    for (const auto& name : default_passes()) {
        CHECK_NOTHROW(run_pass(name, c, bare_context(c, f7)));
    }
}

TEST_CASE("flatten fuses chained multiply-add into one identity") {
    BuiltGadget g = build_gadget("chained_add", f7);
    CustomGate gate = flatten(g.built.circuit, 8, f7, g.built.sig.outputs);
    CHECK(gate.width == 4);  // three inputs plus the retained output
    CHECK(gate.identities.size() == 1);
    CHECK(gate.max_degree == 2);
}

TEST_CASE("flatten respects the degree bound") {
    BuiltGadget g = build_gadget("toy_poseidon_round", f7);
    CustomGate fused = flatten(g.built.circuit, 8, f7, g.built.sig.outputs);
    CHECK(fused.width == 6);  // 3 state inputs + 3 outputs
    CHECK(fused.identities.size() == 3);
    CHECK(fused.max_degree == 5);

    CustomGate bounded = flatten(g.built.circuit, 4, f7, g.built.sig.outputs);
    CHECK(bounded.max_degree <= 4);
    CHECK(bounded.width > fused.width);  // extra retained intermediates
    for (const auto& id : bounded.identities) CHECK(identity_degree(id) <= 4);
}

TEST_CASE("flatten rejects lookups and trivial bounds") {
    BuiltGadget sha = build_gadget("sha_expansion_step", FieldSpec::goldilocks());
    CHECK_THROWS_AS(flatten(sha.built.circuit, 8, FieldSpec::goldilocks()),
                    std::invalid_argument);
    BuiltGadget g = build_gadget("chained_add", f7);
    CHECK_THROWS_AS(flatten(g.built.circuit, 1, f7), std::invalid_argument);
}

TEST_CASE("flattened gate accepts exactly the circuit's io behavior") {
    BuiltGadget g = build_gadget("toy_poseidon_round", f7);
    CustomGate gate = flatten(g.built.circuit, 8, f7, g.built.sig.outputs);
    auto sols = enumerate_satisfying_gate(gate, f7);
    CHECK(sols.size() == 343);  // fully determined by the 3 state inputs

    // Each solution matches the witness generator on the same inputs.
    std::map<WireId, std::size_t> slot_of;
    for (std::size_t s = 0; s < gate.witness_map.size(); ++s) slot_of[gate.witness_map[s]] = s;
    for (const auto& sol : sols) {
        Trace t(f7, g.built.circuit.wire_count());
        for (const auto& in : g.built.inputs) t.set(in.wire, sol[slot_of.at(in.wire)]);
        TraceResult r = gen_trace(g.built.circuit, t, g.built.tables);
        REQUIRE(r.ok());
        for (WireId w : g.built.sig.outputs) {
            CHECK(r.trace->get(w)->value() == sol[slot_of.at(w)].value());
        }
    }
}
