#pragma once

#include <functional>
#include <string>
#include <vector>

#include "plonkc/builder.hpp"

namespace plonkc {

// A corpus circuit paired with its plain reference semantics, for the
// property harness, the CLI, and the benchmarks.
struct BuiltGadget {
    std::string name;
    BuiltCircuit built;
    std::function<std::vector<FieldElement>(const std::vector<FieldElement>&)> reference;
};

// Bodies, reusable inside larger builds.
Repr chained_add(Env& env, Repr i1, Repr i2, Repr i3);
Repr xor_gadget(Env& env, Repr a, Repr b);
std::vector<Repr> toy_poseidon_round(Env& env, const std::vector<Repr>& state,
                                     const std::vector<FieldElement>& round_constants);
Repr sha_expansion_step(Env& env, Repr a, Repr b, Repr c, Repr d);

// Registry: chained_add, xor, is_zero_demo, toy_poseidon_round (round
// constants 1,2,3), sha_expansion_step (16-step expansion loop over a
// 4-word window).
std::vector<std::string> gadget_ids();
BuiltGadget build_gadget(const std::string& id, const FieldSpec& spec);

}  // namespace plonkc
