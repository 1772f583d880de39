#include <doctest.h>

#include <algorithm>

#include "plonkc/constraints.hpp"
#include "plonkc/gadgets.hpp"

using namespace plonkc;

namespace {
const FieldSpec f7(7);
const FieldSpec f5(5);
FieldElement fe(std::int64_t v) { return FieldElement::from_signed(v, f7); }

// All (i, r, o) triples over the given field satisfying the constrained vector.
std::vector<std::vector<std::uint64_t>> satisfying_triples(const ConstrainedVector& cv,
                                                           const FieldSpec& spec) {
    std::vector<std::vector<std::uint64_t>> out;
    for (std::uint64_t i = 0; i < spec.modulus; ++i) {
        for (std::uint64_t r = 0; r < spec.modulus; ++r) {
            for (std::uint64_t o = 0; o < spec.modulus; ++o) {
                Trace t(spec, 3);
                t.assign(0, FieldElement(i, spec));
                t.assign(1, FieldElement(r, spec));
                t.assign(2, FieldElement(o, spec));
                if (sat_cv(cv, t)) out.push_back({i, r, o});
            }
        }
    }
    return out;
}
}  // namespace

TEST_CASE("identity evaluation") {
    // q0*w0 + q1*w1 + q2*w2 + q3*w0*w1 + q4 at wires (3,5,1), mul-gate constants.
    Identity id = id_arith(f7);
    std::vector<FieldElement> wires = {fe(3), fe(5), fe(1)};
    std::vector<FieldElement> mul = {fe(0), fe(0), fe(-1), fe(1), fe(0)};
    CHECK(eval_identity(id, wires, mul).value() == 0);  // 3*5 - 1 = 14 = 0 (mod 7)
    std::vector<FieldElement> all_ones = {fe(1), fe(1), fe(1), fe(1), fe(1)};
    CHECK(eval_identity(id, wires, all_ones).value() == 4);  // 3+5+1+15+1 = 25 = 4 (mod 7)
    CHECK((fe(3) + fe(5) + fe(1) + fe(3) * fe(5) + fe(1)).value() == 4);
    CHECK_THROWS_AS(eval_identity(id, {fe(1)}, mul), std::out_of_range);
}

TEST_CASE("boolean identity") {
    Identity id = id_bool(0, f7);
    CHECK(eval_identity(id, {fe(0)}, {}).value() == 0);
    CHECK(eval_identity(id, {fe(1)}, {}).value() == 0);
    CHECK(eval_identity(id, {fe(2)}, {}).value() == 2);  // 4 - 2
    CHECK(identity_degree(id) == 2);
    CHECK(identity_degree(id_arith(f7)) == 2);
}

TEST_CASE("identity rendering") {
    CHECK(render_identity(id_arith(f7)) == "q0*w0 + q1*w1 + q2*w2 + q3*w0*w1 + q4");
    CHECK(render_identity(id_bool(0, f7)) == "w0*w0 - w0");
    CHECK(render_identity(Identity{}) == "0");
}

TEST_CASE("is_zero constrained vector: completion closes the soundness gap") {
    ConstrainedVector completed = is_zero_cv(0, 1, 2, f5);
    ConstrainedVector paper_literal = is_zero_cv(0, 1, 2, f5, /*with_product_completion=*/false);

    auto strict = satisfying_triples(completed, f5);
    auto relaxed = satisfying_triples(paper_literal, f5);
    CHECK(strict.size() == 9);
    CHECK(relaxed.size() == 13);

    // The literal form admits claiming "is zero" for a nonzero input.
    std::vector<std::uint64_t> counterexample = {2, 0, 1};
    CHECK(std::count(relaxed.begin(), relaxed.end(), counterexample) == 1);
    CHECK(std::count(strict.begin(), strict.end(), counterexample) == 0);

    // Every strict solution is also a relaxed one.
    for (const auto& t : strict) {
        CHECK(std::count(relaxed.begin(), relaxed.end(), t) == 1);
    }
}

TEST_CASE("gen_cs compiles gates one-to-one and accepts generated traces") {
    BuiltGadget g = build_gadget("chained_add", f7);
    ConstraintSystem cs = gen_cs(g.built.circuit, f7, g.built.tables);
    CHECK(cs.cvs.size() == 2);
    CHECK(cs.lookups.empty());

    Trace init(f7, g.built.circuit.wire_count());
    init.set(0, fe(2));
    init.set(1, fe(3));
    init.set(2, fe(4));
    TraceResult r = gen_trace(g.built.circuit, init, g.built.tables);
    REQUIRE(r.ok());
    CHECK(sat(cs, *r.trace));

    Trace tampered = *r.trace;
    tampered.assign(4, fe(0));  // 2*3 + 4 = 10 = 3, not 0
    CHECK_FALSE(sat(cs, tampered));
}

TEST_CASE("lookup gates become lookup constraints") {
    BuiltGadget g = build_gadget("sha_expansion_step", FieldSpec::goldilocks());
    ConstraintSystem cs = gen_cs(g.built.circuit, FieldSpec::goldilocks(), g.built.tables);
    auto stats = g.built.circuit.stats();
    CHECK(cs.lookups.size() == stats["Lookup"]);
    CHECK(cs.cvs.size() == stats["Arith"] + stats["Decompose"] + stats["LinComb"]);
    CHECK(cs.tables.count("u4") == 1);
}

TEST_CASE("sat_cv is false on unset wires") {
    ConstrainedVector cv = is_zero_cv(0, 1, 2, f7);
    Trace t(f7, 3);
    t.set(0, fe(0));
    CHECK_FALSE(sat_cv(cv, t));
}

TEST_CASE("cv degree") {
    CHECK(cv_degree(is_zero_cv(0, 1, 2, f7)) == 2);
}
