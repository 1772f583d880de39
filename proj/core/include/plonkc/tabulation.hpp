#pragma once

#include <string>
#include <vector>

#include "plonkc/constraints.hpp"

namespace plonkc {

struct Row {
    std::vector<WireId> wires;
    std::vector<FieldElement> constants;  // base constants then selectors
};

struct LookupEntry {
    std::size_t row = 0;
    std::size_t width = 0;
    std::string table;
};

// Fixed-geometry table: identities[i] applies to a row iff the row's
// selector constant at column base_constant_columns + i is one.
struct PlonkishTable {
    FieldSpec spec = FieldSpec::goldilocks();
    std::size_t wire_columns = 0;
    std::size_t base_constant_columns = 0;
    std::vector<Identity> identities;
    std::vector<Row> rows;
    std::vector<LookupEntry> lookups;
    TableRegistry tables;
};

// One row per constrained vector plus standalone rows for lookups that do
// not share a row's leading wires. Identities are deduplicated up to a
// renaming of slots; rows whose identity uses other slots are permuted to
// the registered placement. Throws std::invalid_argument when a cv exceeds
// max_width.
PlonkishTable tabulate(const ConstraintSystem& cs, const FieldSpec& spec,
                       std::size_t max_width = 16);

bool sat_plonkish(const PlonkishTable& t, const Trace& trace);

}  // namespace plonkc
