#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "plonkc/circuit.hpp"
#include "plonkc/constraints.hpp"

namespace plonkc {

struct Profile {
    enum class Kind { PlonkArith, BoojumLike };
    Kind kind = Kind::PlonkArith;
    std::size_t lc_width = 4;

    static Profile plonk() { return {Kind::PlonkArith, 4}; }
    static Profile boojum(std::size_t lc_width = 4) { return {Kind::BoojumLike, lc_width}; }
};

// What passes need beyond the gate tree: the signature to preserve, the
// input wires that are boolean by typed contract, and the target profile.
struct PassContext {
    FieldSpec spec;
    CircuitSignature sig;
    std::set<WireId> assumed_bool;
    // All wires the builder tagged boolean; the discipline audit insists
    // each keeps (or can derive) a boolean constraint after optimization.
    std::set<WireId> bool_tagged;
    Profile profile = Profile::plonk();
};

struct PassResult {
    Circuit circuit;
    std::size_t applications = 0;
};

struct PassReport {
    std::string name;
    std::size_t applications = 0;
    std::map<std::string, std::size_t> before;
    std::map<std::string, std::size_t> after;
};

// Arith gates x = ql*b + qm*b^2 + qc with b boolean are linearized, gates
// whose expanded polynomial collapses over boolean facts are rewritten, and
// boolean checks provable from the remaining constraints are dropped.
// Throws std::invalid_argument if an assumed fact names a defined wire.
PassResult boolean_reduce(const Circuit& c, const PassContext& ctx);

// Substitutes single-variable linear producers x1 = a*x0 + b into arith
// consumers on either side; producers are cleaned up by dce.
PassResult linear_inline(const Circuit& c, const PassContext& ctx);

PassResult cse(const Circuit& c, const PassContext& ctx);
PassResult dedup_assertions(const Circuit& c, const PassContext& ctx);

// PlonkArith is the identity transform; BoojumLike collapses linear chains
// into LinComb gates of the profile's width and lowers remaining arith
// gates to FMA form around a pooled constant-one wire.
PassResult to_profile(const Circuit& c, const PassContext& ctx);

// Removes gates not reachable from the signature outputs or from assertion
// gates (BoolCheck / Lookup / Decompose, which can fail and are observable).
PassResult dce(const Circuit& c, const PassContext& ctx);

// Deliberately unsound pass used by the harness to prove the preservation
// check has teeth: drops every BoolCheck.
PassResult mutant_drop_assertions(const Circuit& c, const PassContext& ctx);

std::vector<std::string> default_passes();
PassResult run_pass(const std::string& name, const Circuit& c, const PassContext& ctx);

struct OptimizeResult {
    Circuit circuit;
    std::vector<PassReport> reports;
};

// Runs the pass list repeatedly until the stats stop changing (at most
// max_iterations rounds), then re-validates the soundness discipline and
// throws std::logic_error if it is violated.
OptimizeResult optimize(const Circuit& c, const PassContext& ctx,
                        const std::vector<std::string>& passes = default_passes(),
                        std::size_t max_iterations = 10);

struct DisciplineReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Static soundness-discipline audit: every Decompose output wire must keep
// at least one Lookup, and every boolean-tagged wire must either carry a
// boolean constraint or be derivable from constrained/assumed facts.
DisciplineReport check_discipline(const Circuit& c, const PassContext& ctx);

// One flattened constrained vector: identities over slot indices with
// literal coefficients; witness_map sends each slot to its circuit wire.
struct CustomGate {
    std::size_t width = 0;
    std::vector<Identity> identities;
    std::size_t max_degree = 0;
    std::vector<WireId> witness_map;
};

// Symbolic inlining bounded by identity degree. Intermediates whose
// substitution would exceed the bound are kept as explicit gate wires.
// Throws std::invalid_argument on lookup gates or max_degree < 2.
CustomGate flatten(const Circuit& c, std::size_t max_degree, const FieldSpec& spec,
                   const std::optional<std::vector<WireId>>& declared_outputs = std::nullopt);

}  // namespace plonkc
