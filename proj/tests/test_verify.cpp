#include <doctest.h>

#include "plonkc/verify.hpp"

using namespace plonkc;

namespace {
const FieldSpec f5(5);
const FieldSpec f7(7);
}  // namespace

TEST_CASE("domain samplers respect their ranges") {
    FieldSpec g = FieldSpec::goldilocks();
    std::mt19937_64 rng(1);
    for (int i = 0; i < 500; ++i) {
        CHECK(sample_domain(Domain::Bool, g, rng).value() <= 1);
        CHECK(sample_domain(Domain::U4, g, rng).value() < 16);
        CHECK(sample_domain(Domain::U32, g, rng).value() < (1ull << 32));
        CHECK(sample_domain(Domain::Field, f7, rng).value() < 7);
    }
}

TEST_CASE("input_trace seeds declared input wires") {
    BuiltGadget g = build_gadget("chained_add", f7);
    std::vector<FieldElement> in = {FieldElement(1, f7), FieldElement(2, f7),
                                    FieldElement(3, f7)};
    Trace t = input_trace(g.built, in);
    CHECK(t.get(g.built.inputs[0].wire)->value() == 1);
    CHECK_FALSE(t.is_set(g.built.sig.outputs[0]));
    CHECK_THROWS_AS(input_trace(g.built, {FieldElement(1, f7)}), std::invalid_argument);
}

TEST_CASE("enumeration counts free inputs exactly") {
    BuiltGadget g = build_gadget("chained_add", f5);
    ConstraintSystem cs = gen_cs(g.built.circuit, f5, g.built.tables);
    auto sols = enumerate_satisfying(cs, g.built.circuit.wire_count(), f5);
    CHECK(sols.size() == 125);  // 5^3 inputs; both intermediates are determined
    for (const auto& t : sols) CHECK(sat(cs, t));
}

TEST_CASE("enumeration budget guard") {
    ConstraintSystem empty;
    CHECK_THROWS_AS(enumerate_satisfying(empty, 13, f5), std::length_error);  // 5^13 > 1e8
    CHECK(enumerate_satisfying(empty, 0, f5).size() == 1);
}

TEST_CASE("completeness holds for every gadget") {
    for (const auto& id : gadget_ids()) {
        for (std::uint64_t p : std::vector<std::uint64_t>{7, kGoldilocksModulus}) {
            FieldSpec spec(p);
            BuiltGadget g = build_gadget(id, spec);
            CheckReport rep = check_completeness(g, spec, 300, 99);
            INFO(id, " over p=", p, ": ", rep.failures.empty() ? "" : rep.failures.front());
            CHECK(rep.ok());
            CHECK(rep.cases == 300);
        }
    }
}

TEST_CASE("soundness by brute force over the 5-element field") {
    for (const char* id : {"chained_add", "xor", "is_zero_demo"}) {
        BuiltGadget g = build_gadget(id, f5);
        CheckReport rep = check_soundness_bruteforce(g, f5);
        INFO(id, ": ", rep.failures.empty() ? "" : rep.failures.front());
        CHECK(rep.ok());
        CHECK(rep.cases > 0);
    }
}

TEST_CASE("every default pass preserves gadget semantics") {
    for (const auto& pass : default_passes()) {
        for (const auto& id : gadget_ids()) {
            FieldSpec spec = id == "sha_expansion_step" ? FieldSpec::goldilocks() : f7;
            BuiltGadget g = build_gadget(id, spec);
            std::size_t samples = id == "sha_expansion_step" ? 60 : 300;
            CheckReport rep = check_preservation(pass, g, spec, samples, 7);
            INFO(pass, " on ", id, ": ", rep.failures.empty() ? "" : rep.failures.front());
            CHECK(rep.ok());
        }
    }
}
