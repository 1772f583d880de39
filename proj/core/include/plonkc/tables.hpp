#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace plonkc {

// A finite lookup table: a named set of tuples of canonical field values.
struct TableDef {
    std::string name;
    std::size_t arity = 1;
    std::set<std::vector<std::uint64_t>> rows;

    bool contains(const std::vector<std::uint64_t>& tuple) const { return rows.count(tuple) > 0; }
};

using TableRegistry = std::map<std::string, TableDef>;

// The 4-bit range table used by nibble decompositions.
TableDef u4_table();

TableRegistry default_tables();

}  // namespace plonkc
