#pragma once

#include <string>

#include "plonkc/circuit.hpp"
#include "plonkc/constraints.hpp"
#include "plonkc/optimizer.hpp"
#include "plonkc/tabulation.hpp"
#include "plonkc/verify.hpp"
#include "plonkc/witness.hpp"

namespace plonkc {

// JSON wire formats. Field elements appear as decimal strings so 64-bit
// values survive JSON number parsing; wire ids are plain integers.

std::string circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const std::string& text, const FieldSpec& spec);

std::string trace_to_json(const Trace& t);

std::string cs_to_json(const ConstraintSystem& cs);

std::string custom_gate_to_json(const CustomGate& gate, const FieldSpec& spec);

std::string table_to_json(const PlonkishTable& t);
PlonkishTable table_from_json(const std::string& text);
std::string table_to_csv(const PlonkishTable& t);

std::string pass_reports_to_json(const std::vector<PassReport>& reports);
std::string check_report_to_json(const CheckReport& report);

}  // namespace plonkc
