#include <doctest.h>

#include "plonkc/gadgets.hpp"
#include "plonkc/tabulation.hpp"
#include "plonkc/verify.hpp"

using namespace plonkc;

namespace {
const FieldSpec f5(5);
const FieldSpec f7(7);

std::vector<std::uint64_t> constant_values(const Row& r) {
    std::vector<std::uint64_t> out;
    for (const auto& c : r.constants) out.push_back(c.value());
    return out;
}
}  // namespace

TEST_CASE("chained multiply-add tabulates to the two known rows") {
    BuiltGadget g = build_gadget("chained_add", f5);
    ConstraintSystem cs = gen_cs(g.built.circuit, f5, g.built.tables);
    PlonkishTable table = tabulate(cs, f5);

    CHECK(table.wire_columns == 3);
    CHECK(table.base_constant_columns == 5);
    CHECK(table.identities.size() == 1);
    REQUIRE(table.rows.size() == 2);

    // Row 1: multiplication (ql,qr,qo,qm,qc) = (0,0,-1,1,0); row 2:
    // addition (1,1,-1,0,0); selector 1 on both. -1 = 4 over F_5.
    CHECK(table.rows[0].wires == std::vector<WireId>{0, 1, 3});
    CHECK(constant_values(table.rows[0]) == std::vector<std::uint64_t>{0, 0, 4, 1, 0, 1});
    CHECK(table.rows[1].wires == std::vector<WireId>{3, 2, 4});
    CHECK(constant_values(table.rows[1]) == std::vector<std::uint64_t>{1, 1, 4, 0, 0, 1});
}

TEST_CASE("identities are shared up to slot renaming") {
    // Arith row, a boolean check, and an uncompleted is-zero block: the
    // boolean identity w*w - w appears in both of the last two, so only two
    // registered identities (and two selector columns) remain, and the
    // boolean check row is remapped onto the is-zero identity's slot.
    ConstraintSystem cs;
    ConstrainedVector arith;
    arith.wires = {0, 1, 2};
    arith.constants = {FieldElement(1, f5), FieldElement(1, f5),
                       FieldElement::from_signed(-1, f5), FieldElement(0, f5),
                       FieldElement(0, f5)};
    arith.identities = {id_arith(f5)};
    ConstrainedVector boolean;
    boolean.wires = {2};
    boolean.identities = {id_bool(0, f5)};
    ConstrainedVector zero = is_zero_cv(2, 3, 4, f5, /*with_product_completion=*/false);
    cs.cvs = {arith, boolean, zero};

    PlonkishTable table = tabulate(cs, f5);
    CHECK(table.identities.size() == 3);  // arith + the two is-zero identities
    REQUIRE(table.rows.size() == 3);

    auto selectors = [&](const Row& r) {
        std::vector<std::uint64_t> out;
        for (std::size_t i = table.base_constant_columns; i < r.constants.size(); ++i) {
            out.push_back(r.constants[i].value());
        }
        return out;
    };
    // Identity registration order: the rigid two-identity is-zero block
    // registers first, then the arith identity; the boolean check reuses
    // the is-zero block's boolean identity.
    CHECK(selectors(table.rows[0]) == std::vector<std::uint64_t>{0, 0, 1});
    CHECK(selectors(table.rows[1]) == std::vector<std::uint64_t>{0, 1, 0});
    CHECK(selectors(table.rows[2]) == std::vector<std::uint64_t>{1, 1, 0});

    // The boolean row was permuted onto the is-zero boolean identity, which
    // constrains the o slot (index 2); the spare slots repeat the wire.
    CHECK(table.rows[1].wires == std::vector<WireId>{2, 2, 2});
}

TEST_CASE("oversized constrained vectors are rejected") {
    BuiltGadget g = build_gadget("chained_add", f5);
    ConstraintSystem cs = gen_cs(g.built.circuit, f5, g.built.tables);
    CHECK_THROWS_AS(tabulate(cs, f5, 2), std::invalid_argument);
}

TEST_CASE("lookups share rows with matching leading wires") {
    ConstraintSystem cs;
    ConstrainedVector boolean;
    boolean.wires = {0};
    boolean.identities = {id_bool(0, f5)};
    cs.cvs = {boolean};
    cs.lookups = {{{0}, "u4"}, {{3}, "u4"}};
    cs.tables = default_tables();

    PlonkishTable table = tabulate(cs, f5);
    REQUIRE(table.rows.size() == 2);  // lookup {0} merged, lookup {3} standalone
    REQUIRE(table.lookups.size() == 2);
    CHECK(table.lookups[0].row == 0);
    CHECK(table.lookups[1].row == 1);
    // The standalone lookup row has every selector off.
    for (std::size_t i = table.base_constant_columns; i < table.rows[1].constants.size(); ++i) {
        CHECK(table.rows[1].constants[i].value() == 0);
    }
}

TEST_CASE("tabulation is faithful: exhaustive small-field equivalence") {
    for (const char* id : {"chained_add", "xor", "is_zero_demo"}) {
        BuiltGadget g = build_gadget(id, f5);
        ConstraintSystem cs = gen_cs(g.built.circuit, f5, g.built.tables);
        PlonkishTable table = tabulate(cs, f5);
        std::size_t width = g.built.circuit.wire_count();
        REQUIRE(width <= 8);

        std::vector<std::uint64_t> values(width, 0);
        bool done = false;
        std::size_t agreements = 0;
        while (!done) {
            Trace t(f5, width);
            for (std::size_t i = 0; i < width; ++i) t.assign(i, FieldElement(values[i], f5));
            CHECK(sat(cs, t) == sat_plonkish(table, t));
            ++agreements;
            std::size_t i = 0;
            while (i < width && ++values[i] == 5) values[i++] = 0;
            done = i == width;
        }
        CHECK(agreements > 0);
    }
}

TEST_CASE("tabulation is faithful on random large-field traces") {
    FieldSpec g = FieldSpec::goldilocks();
    std::mt19937_64 rng(2024);
    for (const char* id : {"toy_poseidon_round", "sha_expansion_step"}) {
        BuiltGadget gadget = build_gadget(id, g);
        ConstraintSystem cs = gen_cs(gadget.built.circuit, g, gadget.built.tables);
        PlonkishTable table = tabulate(cs, g);
        std::size_t width = gadget.built.circuit.wire_count();

        std::size_t accepted = 0;
        for (int k = 0; k < 1000; ++k) {
            Trace t(g, width);
            if (k % 2 == 0) {
                // Valid trace from the generator, possibly tampered.
                std::vector<FieldElement> in = sample_inputs(gadget.built.inputs, g, rng);
                Trace seeded = input_trace(gadget.built, in);
                TraceResult r = gen_trace(gadget.built.circuit, seeded, gadget.built.tables);
                REQUIRE(r.ok());
                t = *r.trace;
                if (k % 4 == 2) t.assign(rng() % width, FieldElement(rng(), g));
            } else {
                for (std::size_t i = 0; i < width; ++i) t.assign(i, FieldElement(rng(), g));
            }
            bool direct = sat(cs, t);
            CHECK(direct == sat_plonkish(table, t));
            if (direct) ++accepted;
        }
        CHECK(accepted > 0);  // the untampered generator traces must pass
    }
}
