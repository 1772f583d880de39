#include <doctest.h>

#include "plonkc/gadgets.hpp"
#include "plonkc/serialize.hpp"

using namespace plonkc;

namespace {
const FieldSpec f5(5);
const FieldSpec f7(7);
FieldElement fe(std::int64_t v) { return FieldElement::from_signed(v, f7); }
}  // namespace

TEST_CASE("circuit json round-trip covers every gate kind") {
    Circuit original = Circuit::from_gates({
        GateInstance::constant(0, fe(3)),
        GateInstance::arith(0, 0, 1, fe(1), fe(2), fe(-1), fe(3), fe(4)),
        GateInstance::bool_check(1),
        GateInstance::is_zero(1, 2, 3),
        GateInstance::fma(0, 1, 3, 4, fe(-2), fe(1)),
        GateInstance::lin_comb({0, 1, 4}, 5, {fe(1), fe(2), fe(3)}),
        GateInstance::lookup("u4", {5}),
        GateInstance::decompose(5, {6, 7}, 4),
    });
    Circuit back = circuit_from_json(circuit_to_json(original), f7);
    auto a = original.gates_in_order();
    auto b = back.gates_in_order();
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].same_computation(b[i]));
        CHECK(a[i].outputs == b[i].outputs);
        CHECK(a[i].aux == b[i].aux);
    }
    // Serialization is stable.
    CHECK(circuit_to_json(original) == circuit_to_json(back));
}

TEST_CASE("circuit json preserves seq/par structure") {
    Circuit c = Circuit::par(Circuit::gate(GateInstance::constant(0, fe(1))),
                             Circuit::gate(GateInstance::constant(1, fe(2))));
    std::string text = circuit_to_json(c);
    CHECK(text.find("par") != std::string::npos);
    Circuit back = circuit_from_json(text, f7);
    CHECK(back.tag() == Circuit::Tag::Par);
}

TEST_CASE("bad circuit json is rejected") {
    CHECK_THROWS_AS(circuit_from_json("{", f7), std::invalid_argument);
    CHECK_THROWS_AS(circuit_from_json(R"({"kind":"gate","op":"Nope"})", f7),
                    std::invalid_argument);
}

TEST_CASE("trace json uses decimal strings and null for unset slots") {
    Trace t(f7, 3);
    t.set(0, fe(5));
    t.set(2, fe(-1));
    CHECK(trace_to_json(t) == R"(["5",null,"6"])");
}

TEST_CASE("goldilocks values survive the string encoding") {
    FieldSpec g = FieldSpec::goldilocks();
    Trace t(g, 1);
    t.set(0, FieldElement(g.modulus - 1, g));
    CHECK(trace_to_json(t) == R"(["18446744069414584320"])");
}

TEST_CASE("table json round-trip") {
    BuiltGadget gadget = build_gadget("chained_add", f5);
    ConstraintSystem cs = gen_cs(gadget.built.circuit, f5, gadget.built.tables);
    PlonkishTable table = tabulate(cs, f5);
    PlonkishTable back = table_from_json(table_to_json(table));

    CHECK(back.spec == table.spec);
    CHECK(back.wire_columns == table.wire_columns);
    CHECK(back.base_constant_columns == table.base_constant_columns);
    REQUIRE(back.rows.size() == table.rows.size());
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        CHECK(back.rows[i].wires == table.rows[i].wires);
        CHECK(back.rows[i].constants == table.rows[i].constants);
    }
    CHECK(table_to_json(back) == table_to_json(table));

    // The parsed table checks traces identically.
    Trace good(f5, 5);
    std::size_t idx = 0;
    for (std::uint64_t v : {2ull, 3ull, 4ull, 1ull, 0ull}) {  // 2*3=6=1; 1+4=5=0
        good.assign(idx++, FieldElement(v, f5));
    }
    CHECK(sat_plonkish(table, good));
    CHECK(sat_plonkish(back, good));
    good.assign(4, FieldElement(3, f5));
    CHECK_FALSE(sat_plonkish(back, good));
}

TEST_CASE("table csv renders canonical constants") {
    BuiltGadget gadget = build_gadget("chained_add", f5);
    ConstraintSystem cs = gen_cs(gadget.built.circuit, f5, gadget.built.tables);
    PlonkishTable table = tabulate(cs, f5);
    CHECK(table_to_csv(table) ==
          "w0,w1,w2,q0,q1,q2,q3,q4,s0\n"
          "0,1,3,0,0,4,1,0,1\n"
          "3,2,4,1,1,4,0,0,1\n");
}

TEST_CASE("constraint system and custom gate exports are well-formed json") {
    BuiltGadget gadget = build_gadget("toy_poseidon_round", f7);
    ConstraintSystem cs = gen_cs(gadget.built.circuit, f7, gadget.built.tables);
    std::string cs_text = cs_to_json(cs);
    CHECK(cs_text.find("\"identities\"") != std::string::npos);

    CustomGate gate = flatten(gadget.built.circuit, 8, f7, gadget.built.sig.outputs);
    std::string gate_text = custom_gate_to_json(gate, f7);
    CHECK(gate_text.find("\"width\": 6") != std::string::npos);
    CHECK(gate_text.find("\"max_degree\": 5") != std::string::npos);
}
