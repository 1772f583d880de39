#include "plonkc/tables.hpp"

namespace plonkc {

TableDef u4_table() {
    TableDef t;
    t.name = "u4";
    t.arity = 1;
    for (std::uint64_t v = 0; v < 16; ++v) t.rows.insert({v});
    return t;
}

TableRegistry default_tables() {
    TableRegistry r;
    TableDef u4 = u4_table();
    r[u4.name] = u4;
    return r;
}

}  // namespace plonkc
