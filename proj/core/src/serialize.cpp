#include "plonkc/serialize.hpp"

#include <json.hpp>

namespace plonkc {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json fe(const FieldElement& v) { return v.to_decimal(); }

FieldElement fe_parse(const ordered_json& j, const FieldSpec& spec) {
    return parse_decimal(j.get<std::string>(), spec);
}

ordered_json gate_to_json(const GateInstance& g) {
    ordered_json j;
    j["op"] = gate_op_name(g.op);
    j["inputs"] = g.inputs;
    j["aux"] = g.aux;
    j["outputs"] = g.outputs;
    ordered_json consts = ordered_json::array();
    for (const auto& c : g.constants) consts.push_back(fe(c));
    j["constants"] = consts;
    if (g.op == GateOp::Lookup) j["table"] = g.table;
    if (g.op == GateOp::Decompose) {
        j["chunk_count"] = g.chunk_count;
        j["chunk_bits"] = g.chunk_bits;
    }
    return j;
}

GateInstance gate_from_json(const ordered_json& j, const FieldSpec& spec) {
    GateInstance g;
    std::string op = j.at("op").get<std::string>();
    const std::map<std::string, GateOp> ops = {
        {"Constant", GateOp::Constant}, {"Arith", GateOp::Arith},
        {"BoolCheck", GateOp::BoolCheck}, {"IsZero", GateOp::IsZero},
        {"FMA", GateOp::Fma},           {"LinComb", GateOp::LinComb},
        {"Lookup", GateOp::Lookup},     {"Decompose", GateOp::Decompose}};
    auto it = ops.find(op);
    if (it == ops.end()) throw std::invalid_argument("unknown gate op: " + op);
    g.op = it->second;
    g.inputs = j.at("inputs").get<std::vector<WireId>>();
    g.aux = j.at("aux").get<std::vector<WireId>>();
    g.outputs = j.at("outputs").get<std::vector<WireId>>();
    for (const auto& c : j.at("constants")) g.constants.push_back(fe_parse(c, spec));
    if (j.contains("table")) g.table = j.at("table").get<std::string>();
    if (j.contains("chunk_count")) g.chunk_count = j.at("chunk_count").get<std::uint32_t>();
    if (j.contains("chunk_bits")) g.chunk_bits = j.at("chunk_bits").get<std::uint32_t>();
    g.check_arity();
    return g;
}

ordered_json node_to_json(const Circuit& c) {
    ordered_json j;
    switch (c.tag()) {
        case Circuit::Tag::Nil:
            j["kind"] = "nil";
            break;
        case Circuit::Tag::Gate:
            j["kind"] = "gate";
            j["gate"] = gate_to_json(c.gate_instance());
            break;
        case Circuit::Tag::Seq:
        case Circuit::Tag::Par:
            j["kind"] = c.tag() == Circuit::Tag::Seq ? "seq" : "par";
            j["left"] = node_to_json(c.left());
            j["right"] = node_to_json(c.right());
            break;
    }
    return j;
}

Circuit node_from_json(const ordered_json& j, const FieldSpec& spec) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "nil") return Circuit::nil();
    if (kind == "gate") return Circuit::gate(gate_from_json(j.at("gate"), spec));
    Circuit left = node_from_json(j.at("left"), spec);
    Circuit right = node_from_json(j.at("right"), spec);
    if (kind == "seq") return Circuit::seq(left, right);
    if (kind == "par") return Circuit::par(left, right);
    throw std::invalid_argument("unknown circuit node kind: " + kind);
}

ordered_json identity_to_json(const Identity& id) {
    ordered_json j;
    j["polynomial"] = render_identity(id);
    ordered_json monos = ordered_json::array();
    for (const auto& m : id.monomials) {
        ordered_json mj;
        mj["coeff"] = fe(m.coeff);
        mj["const_slots"] = m.const_slots;
        mj["wire_slots"] = m.wire_slots;
        monos.push_back(mj);
    }
    j["monomials"] = monos;
    return j;
}

Identity identity_from_json(const ordered_json& j, const FieldSpec& spec) {
    Identity id;
    for (const auto& mj : j.at("monomials")) {
        Monomial m{fe_parse(mj.at("coeff"), spec),
                   mj.at("const_slots").get<std::vector<std::size_t>>(),
                   mj.at("wire_slots").get<std::vector<std::size_t>>()};
        id.monomials.push_back(std::move(m));
    }
    return id;
}

ordered_json tables_to_json(const TableRegistry& tables) {
    ordered_json j = ordered_json::object();
    for (const auto& [name, def] : tables) {
        ordered_json rows = ordered_json::array();
        for (const auto& row : def.rows) rows.push_back(row);
        j[name] = rows;
    }
    return j;
}

TableRegistry tables_from_json(const ordered_json& j) {
    TableRegistry out;
    for (auto it = j.begin(); it != j.end(); ++it) {
        TableDef def;
        def.name = it.key();
        for (const auto& row : it.value()) {
            std::vector<std::uint64_t> tuple = row.get<std::vector<std::uint64_t>>();
            def.arity = tuple.size();
            def.rows.insert(std::move(tuple));
        }
        out[def.name] = std::move(def);
    }
    return out;
}

}  // namespace

std::string circuit_to_json(const Circuit& c) { return node_to_json(c).dump(2); }

Circuit circuit_from_json(const std::string& text, const FieldSpec& spec) {
    try {
        return node_from_json(ordered_json::parse(text), spec);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("invalid circuit json: ") + e.what());
    }
}

std::string trace_to_json(const Trace& t) {
    ordered_json j = ordered_json::array();
    for (const auto& slot : t.raw()) {
        if (slot) {
            j.push_back(std::to_string(*slot));
        } else {
            j.push_back(nullptr);
        }
    }
    return j.dump();
}

std::string cs_to_json(const ConstraintSystem& cs) {
    ordered_json j;
    ordered_json cvs = ordered_json::array();
    for (const auto& cv : cs.cvs) {
        ordered_json cj;
        cj["wires"] = cv.wires;
        ordered_json consts = ordered_json::array();
        for (const auto& c : cv.constants) consts.push_back(fe(c));
        cj["constants"] = consts;
        ordered_json ids = ordered_json::array();
        for (const auto& id : cv.identities) ids.push_back(identity_to_json(id));
        cj["identities"] = ids;
        cvs.push_back(cj);
    }
    j["constrained_vectors"] = cvs;
    ordered_json lks = ordered_json::array();
    for (const auto& lk : cs.lookups) {
        lks.push_back({{"wires", lk.wires}, {"table", lk.table}});
    }
    j["lookups"] = lks;
    j["tables"] = tables_to_json(cs.tables);
    return j.dump(2);
}

std::string custom_gate_to_json(const CustomGate& gate, const FieldSpec& spec) {
    ordered_json j;
    j["field_modulus"] = std::to_string(spec.modulus);
    j["width"] = gate.width;
    j["max_degree"] = gate.max_degree;
    j["witness_map"] = gate.witness_map;
    ordered_json ids = ordered_json::array();
    for (const auto& id : gate.identities) ids.push_back(identity_to_json(id));
    j["identities"] = ids;
    return j.dump(2);
}

std::string table_to_json(const PlonkishTable& t) {
    ordered_json j;
    j["field_modulus"] = std::to_string(t.spec.modulus);
    j["wire_columns"] = t.wire_columns;
    ordered_json col_names = ordered_json::array();
    for (std::size_t i = 0; i < t.base_constant_columns; ++i) {
        col_names.push_back("q" + std::to_string(i));
    }
    for (std::size_t i = 0; i < t.identities.size(); ++i) {
        col_names.push_back("s" + std::to_string(i));
    }
    j["constant_columns"] = col_names;
    ordered_json ids = ordered_json::array();
    for (std::size_t i = 0; i < t.identities.size(); ++i) {
        ordered_json ij = identity_to_json(t.identities[i]);
        ordered_json with_sel;
        with_sel["selector"] = "s" + std::to_string(i);
        with_sel["polynomial"] = ij["polynomial"];
        with_sel["monomials"] = ij["monomials"];
        ids.push_back(with_sel);
    }
    j["identities"] = ids;
    ordered_json rows = ordered_json::array();
    for (const auto& row : t.rows) {
        ordered_json rj;
        rj["wires"] = row.wires;
        ordered_json consts = ordered_json::array();
        for (const auto& c : row.constants) consts.push_back(fe(c));
        rj["constants"] = consts;
        rows.push_back(rj);
    }
    j["rows"] = rows;
    ordered_json lks = ordered_json::array();
    for (const auto& lk : t.lookups) {
        lks.push_back({{"row", lk.row}, {"width", lk.width}, {"table", lk.table}});
    }
    j["lookup"] = lks;
    j["tables"] = tables_to_json(t.tables);
    return j.dump(2);
}

PlonkishTable table_from_json(const std::string& text) try {
    ordered_json j = ordered_json::parse(text);
    PlonkishTable t;
    t.spec = FieldSpec(std::stoull(j.at("field_modulus").get<std::string>()));
    t.wire_columns = j.at("wire_columns").get<std::size_t>();
    std::size_t selector_count = j.at("identities").size();
    t.base_constant_columns = j.at("constant_columns").size() - selector_count;
    for (const auto& ij : j.at("identities")) {
        t.identities.push_back(identity_from_json(ij, t.spec));
    }
    for (const auto& rj : j.at("rows")) {
        Row row;
        row.wires = rj.at("wires").get<std::vector<WireId>>();
        for (const auto& c : rj.at("constants")) row.constants.push_back(fe_parse(c, t.spec));
        t.rows.push_back(std::move(row));
    }
    for (const auto& lj : j.at("lookup")) {
        t.lookups.push_back({lj.at("row").get<std::size_t>(), lj.at("width").get<std::size_t>(),
                             lj.at("table").get<std::string>()});
    }
    t.tables = tables_from_json(j.at("tables"));
    return t;
} catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("invalid table json: ") + e.what());
}

std::string table_to_csv(const PlonkishTable& t) {
    std::string out;
    for (std::size_t i = 0; i < t.wire_columns; ++i) {
        if (!out.empty()) out += ",";
        out += "w" + std::to_string(i);
    }
    for (std::size_t i = 0; i < t.base_constant_columns; ++i) {
        out += ",q" + std::to_string(i);
    }
    for (std::size_t i = 0; i < t.identities.size(); ++i) {
        out += ",s" + std::to_string(i);
    }
    out += "\n";
    for (const auto& row : t.rows) {
        std::string line;
        for (WireId w : row.wires) {
            if (!line.empty()) line += ",";
            line += std::to_string(w);
        }
        for (const auto& c : row.constants) line += "," + c.to_decimal();
        out += line + "\n";
    }
    return out;
}

std::string pass_reports_to_json(const std::vector<PassReport>& reports) {
    ordered_json j = ordered_json::array();
    for (const auto& r : reports) {
        ordered_json rj;
        rj["pass"] = r.name;
        rj["applications"] = r.applications;
        rj["before"] = r.before;
        rj["after"] = r.after;
        j.push_back(rj);
    }
    return j.dump(2);
}

std::string check_report_to_json(const CheckReport& report) {
    ordered_json j;
    j["property"] = report.property;
    j["cases"] = report.cases;
    j["failures"] = report.failures;
    j["ok"] = report.ok();
    return j.dump(2);
}

}  // namespace plonkc
