#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "plonkc/constraints.hpp"
#include "plonkc/gadgets.hpp"
#include "plonkc/optimizer.hpp"

namespace plonkc {

struct CheckReport {
    std::string property;
    std::size_t cases = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

// Uniform draw from an input's declared domain.
FieldElement sample_domain(Domain d, const FieldSpec& spec, std::mt19937_64& rng);
std::vector<FieldElement> sample_inputs(const std::vector<InputSpec>& inputs,
                                        const FieldSpec& spec, std::mt19937_64& rng);

// Trace seeded with the given values at the gadget's input wires.
Trace input_trace(const BuiltCircuit& built, const std::vector<FieldElement>& values);

PassContext make_context(const BuiltCircuit& built, const FieldSpec& spec,
                         Profile profile = Profile::plonk());

// Whenever the generator succeeds on a sampled valid input, the compiled
// system must accept the trace; the reference function must agree too.
CheckReport check_completeness(const BuiltGadget& g, const FieldSpec& spec, std::size_t samples,
                               std::uint64_t seed);

// All satisfying assignments of `width` wires, lexicographic. Backtracks
// with early identity checks, so fully-constrained systems stay cheap.
// Throws std::length_error when modulus^width exceeds the budget of 1e8.
std::vector<Trace> enumerate_satisfying(const ConstraintSystem& cs, std::size_t width,
                                        const FieldSpec& spec);

// Satisfying slot assignments of a flattened gate, same budget rule.
std::vector<std::vector<FieldElement>> enumerate_satisfying_gate(const CustomGate& gate,
                                                                 const FieldSpec& spec);

// Every satisfying trace of the compiled system must agree with the
// generator on the circuit's input/output positions.
CheckReport check_soundness_bruteforce(const BuiltGadget& g, const FieldSpec& spec);

// The pass must not change observable behavior: valid and mutated inputs
// give equivalent traces, with generation failures agreeing as failures.
CheckReport check_preservation(const std::string& pass_id, const BuiltGadget& g,
                               const FieldSpec& spec, std::size_t samples, std::uint64_t seed);

}  // namespace plonkc
