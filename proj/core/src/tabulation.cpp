#include "plonkc/tabulation.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

namespace plonkc {

namespace {

// Relabels wire and constant slots by first occurrence so two identities
// that differ only in slot numbering share a canonical key.
struct CanonicalForm {
    std::string key;
    std::map<std::size_t, std::size_t> wire_to_canon;
    std::map<std::size_t, std::size_t> const_to_canon;
};

CanonicalForm canonicalize(const Identity& id) {
    CanonicalForm cf;
    auto relabel = [](std::map<std::size_t, std::size_t>& m, std::size_t s) {
        auto [it, fresh] = m.emplace(s, m.size());
        return it->second;
    };
    for (const auto& mono : id.monomials) {
        cf.key += mono.coeff.to_decimal() + "|c";
        for (std::size_t s : mono.const_slots) {
            cf.key += std::to_string(relabel(cf.const_to_canon, s)) + ",";
        }
        cf.key += "|w";
        for (std::size_t s : mono.wire_slots) {
            cf.key += std::to_string(relabel(cf.wire_to_canon, s)) + ",";
        }
        cf.key += ";";
    }
    return cf;
}

bool same_slots(const Identity& a, const Identity& b) {
    if (a.monomials.size() != b.monomials.size()) return false;
    for (std::size_t i = 0; i < a.monomials.size(); ++i) {
        const auto& ma = a.monomials[i];
        const auto& mb = b.monomials[i];
        if (ma.coeff != mb.coeff || ma.const_slots != mb.const_slots ||
            ma.wire_slots != mb.wire_slots) {
            return false;
        }
    }
    return true;
}

struct Selector {
    Identity identity;  // registered placement
    CanonicalForm canon;
};

// Slot placement plan for one row: where each cv wire/constant lands.
struct Placement {
    std::map<std::size_t, std::size_t> wire;   // cv slot -> row slot
    std::map<std::size_t, std::size_t> konst;  // cv slot -> row slot

    bool add(std::map<std::size_t, std::size_t>& m, std::size_t from, std::size_t to) {
        auto [it, fresh] = m.emplace(from, to);
        return it->second == to;
    }
};

}  // namespace

PlonkishTable tabulate(const ConstraintSystem& cs, const FieldSpec& spec, std::size_t max_width) {
    PlonkishTable t;
    t.spec = spec;
    t.tables = cs.tables;
    for (const auto& cv : cs.cvs) {
        if (cv.wires.size() > max_width) {
            throw std::invalid_argument("constrained vector with " +
                                        std::to_string(cv.wires.size()) +
                                        " wires exceeds the table width limit");
        }
        t.wire_columns = std::max(t.wire_columns, cv.wires.size());
        t.base_constant_columns = std::max(t.base_constant_columns, cv.constants.size());
    }
    for (const auto& lk : cs.lookups) {
        t.wire_columns = std::max(t.wire_columns, lk.wires.size());
    }

    std::vector<Selector> selectors;
    auto find_exact = [&](const Identity& id) -> std::optional<std::size_t> {
        for (std::size_t i = 0; i < selectors.size(); ++i) {
            if (same_slots(selectors[i].identity, id)) return i;
        }
        return std::nullopt;
    };
    auto find_by_key = [&](const std::string& key) -> std::optional<std::size_t> {
        for (std::size_t i = 0; i < selectors.size(); ++i) {
            if (selectors[i].canon.key == key) return i;
        }
        return std::nullopt;
    };

    // Multi-identity cvs register first: their placements are rigid, and
    // single-identity cvs (boolean checks) can be permuted to match.
    for (const auto& cv : cs.cvs) {
        if (cv.identities.size() < 2) continue;
        for (const auto& id : cv.identities) {
            if (!find_exact(id)) selectors.push_back({id, canonicalize(id)});
        }
    }
    for (const auto& cv : cs.cvs) {
        if (cv.identities.size() >= 2) continue;
        for (const auto& id : cv.identities) {
            if (find_exact(id)) continue;
            if (find_by_key(canonicalize(id).key)) continue;  // remapped at row build
            selectors.push_back({id, canonicalize(id)});
        }
    }

    // Row construction.
    for (const auto& cv : cs.cvs) {
        std::vector<std::size_t> active;
        Placement plan;
        bool consistent = true;
        const bool rigid = cv.identities.size() >= 2;
        for (const auto& id : cv.identities) {
            std::optional<std::size_t> sel = find_exact(id);
            if (sel) {
                // Identity mapping: cv slots land on their own indices.
                for (const auto& mono : id.monomials) {
                    for (std::size_t s : mono.wire_slots) {
                        consistent = consistent && plan.add(plan.wire, s, s);
                    }
                    for (std::size_t s : mono.const_slots) {
                        consistent = consistent && plan.add(plan.konst, s, s);
                    }
                }
                active.push_back(*sel);
                continue;
            }
            CanonicalForm cf = canonicalize(id);
            sel = rigid ? std::nullopt : find_by_key(cf.key);
            if (!sel) throw std::logic_error("tabulate: identity was not registered");
            // Compose: cv slot -> canonical -> registered slot.
            const CanonicalForm& reg = selectors[*sel].canon;
            std::map<std::size_t, std::size_t> canon_wire, canon_const;
            for (const auto& [slot, canon] : reg.wire_to_canon) canon_wire[canon] = slot;
            for (const auto& [slot, canon] : reg.const_to_canon) canon_const[canon] = slot;
            for (const auto& [slot, canon] : cf.wire_to_canon) {
                consistent = consistent && plan.add(plan.wire, slot, canon_wire.at(canon));
            }
            for (const auto& [slot, canon] : cf.const_to_canon) {
                consistent = consistent && plan.add(plan.konst, slot, canon_const.at(canon));
            }
            active.push_back(*sel);
        }
        if (!consistent) {
            throw std::logic_error("tabulate: conflicting slot placements within one row");
        }
        Row row;
        row.wires.assign(t.wire_columns, 0);
        std::vector<bool> set(t.wire_columns, false);
        row.constants.assign(t.base_constant_columns, FieldElement(0, spec));
        for (const auto& [from, to] : plan.wire) {
            row.wires[to] = cv.wires.at(from);
            set[to] = true;
        }
        for (const auto& [from, to] : plan.konst) row.constants[to] = cv.constants.at(from);
        // Don't-care slots take the row's first placed wire.
        WireId filler = 0;
        for (std::size_t i = 0; i < set.size(); ++i) {
            if (set[i]) {
                filler = row.wires[i];
                break;
            }
        }
        for (std::size_t i = 0; i < set.size(); ++i) {
            if (!set[i]) row.wires[i] = filler;
        }
        t.rows.push_back(std::move(row));
        // Selector values appended once all selectors are known; remember
        // the active set by stashing it temporarily.
        t.rows.back().constants.reserve(t.base_constant_columns + selectors.size());
        std::vector<FieldElement> sels(selectors.size(), FieldElement(0, spec));
        for (std::size_t s : active) sels[s] = FieldElement(1, spec);
        t.rows.back().constants.insert(t.rows.back().constants.end(), sels.begin(), sels.end());
    }

    for (const auto& sel : selectors) t.identities.push_back(sel.identity);

    // Lookups: share a cv row when its leading wires already match, else a
    // standalone all-selectors-off row.
    std::vector<bool> row_has_lookup(t.rows.size(), false);
    for (const auto& lk : cs.lookups) {
        std::optional<std::size_t> target;
        for (std::size_t i = 0; i < t.rows.size() && !target; ++i) {
            if (row_has_lookup[i]) continue;
            bool match = true;
            for (std::size_t j = 0; j < lk.wires.size() && match; ++j) {
                match = t.rows[i].wires[j] == lk.wires[j];
            }
            if (match) target = i;
        }
        if (!target) {
            Row row;
            row.wires = lk.wires;
            while (row.wires.size() < t.wire_columns) row.wires.push_back(row.wires.front());
            row.constants.assign(t.base_constant_columns + selectors.size(),
                                 FieldElement(0, spec));
            t.rows.push_back(std::move(row));
            row_has_lookup.push_back(true);
            target = t.rows.size() - 1;
        } else {
            row_has_lookup[*target] = true;
        }
        t.lookups.push_back({*target, lk.wires.size(), lk.table});
    }
    return t;
}

bool sat_plonkish(const PlonkishTable& t, const Trace& trace) {
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < t.identities.size(); ++i) {
            if (row.constants.at(t.base_constant_columns + i).is_zero()) continue;
            std::vector<FieldElement> wire_vals;
            wire_vals.reserve(row.wires.size());
            bool resolved = true;
            for (WireId w : row.wires) {
                auto v = trace.get(w);
                if (!v) {
                    resolved = false;
                    break;
                }
                wire_vals.push_back(*v);
            }
            if (!resolved) return false;
            if (!eval_identity(t.identities[i], wire_vals, row.constants).is_zero()) {
                return false;
            }
        }
    }
    for (const auto& lk : t.lookups) {
        auto it = t.tables.find(lk.table);
        if (it == t.tables.end()) return false;
        const Row& row = t.rows.at(lk.row);
        std::vector<std::uint64_t> tuple;
        for (std::size_t j = 0; j < lk.width; ++j) {
            auto v = trace.get(row.wires[j]);
            if (!v) return false;
            tuple.push_back(v->value());
        }
        if (!it->second.contains(tuple)) return false;
    }
    return true;
}

}  // namespace plonkc
