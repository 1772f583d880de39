#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "plonkc/gadgets.hpp"
#include "plonkc/optimizer.hpp"
#include "plonkc/serialize.hpp"
#include "plonkc/tabulation.hpp"
#include "plonkc/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTrace = 3;
constexpr int kExitProperty = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

plonkc::FieldSpec parse_field(const std::string& name) {
    if (name == "goldilocks") return plonkc::FieldSpec::goldilocks();
    try {
        std::size_t pos = 0;
        std::uint64_t m = std::stoull(name, &pos);
        if (pos != name.size()) throw std::invalid_argument(name);
        return plonkc::FieldSpec(m);
    } catch (const std::exception&) {
        throw UsageError("unknown field '" + name + "' (expected goldilocks or a prime modulus)");
    }
}

std::string default_field_name() {
    const char* env = std::getenv("PLONKC_FIELD");
    return env ? std::string(env) : std::string("goldilocks");
}

plonkc::BuiltGadget load_gadget(const std::string& id, const plonkc::FieldSpec& spec) {
    try {
        return plonkc::build_gadget(id, spec);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

void emit(const std::string& data, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << data << "\n";
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::ios_base::failure("cannot open output file: " + out_path);
    f << data << "\n";
    if (!f) throw std::ios_base::failure("write failed: " + out_path);
}

void print_stats(const std::string& label, const std::map<std::string, std::size_t>& stats) {
    std::size_t total = 0;
    std::cerr << label << ":";
    for (const auto& [k, v] : stats) {
        std::cerr << " " << k << "=" << v;
        total += v;
    }
    std::cerr << " total=" << total << "\n";
}

std::vector<plonkc::FieldElement> parse_inputs(const std::string& text,
                                               const plonkc::FieldSpec& spec) {
    std::vector<plonkc::FieldElement> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(plonkc::parse_decimal(item, spec));
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("bad --input: ") + e.what());
        }
    }
    return out;
}

std::vector<std::string> parse_passes(const std::string& text) {
    if (text.empty()) return plonkc::default_passes();
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"plonkc: circuit builder, optimizer, and table compiler"};
    app.require_subcommand(1);

    std::string field_name = default_field_name();
    std::string gadget_id;
    std::string profile_name = "plonk";
    std::string passes_text;
    std::string input_text;
    std::string out_path;
    std::string format = "json";
    std::string property;
    std::size_t max_degree = 8;
    std::size_t samples = 1000;
    std::uint64_t seed = 1;

    auto add_common = [&](CLI::App* cmd, bool with_gadget = true) {
        cmd->add_option("--field", field_name, "field: goldilocks or a prime modulus");
        cmd->add_option("--out", out_path, "write data output to this file instead of stdout");
        if (with_gadget) cmd->add_option("gadget", gadget_id, "gadget id")->required();
    };

    CLI::App* cmd_build = app.add_subcommand("build", "build a gadget and print its circuit");
    add_common(cmd_build);

    CLI::App* cmd_stats = app.add_subcommand("stats", "print gate counts by kind");
    add_common(cmd_stats);

    CLI::App* cmd_trace = app.add_subcommand("trace", "run the witness generator");
    add_common(cmd_trace);
    cmd_trace->add_option("--input", input_text, "comma-separated input values")->required();

    CLI::App* cmd_pipeline =
        app.add_subcommand("pipeline", "build, optimize, compile, and tabulate");
    add_common(cmd_pipeline);
    cmd_pipeline->add_option("--profile", profile_name, "plonk|boojum")
        ->check(CLI::IsMember({"plonk", "boojum"}));
    cmd_pipeline->add_option("--passes", passes_text, "comma-separated pass list");
    cmd_pipeline->add_option("--format", format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));

    CLI::App* cmd_tabulate =
        app.add_subcommand("tabulate", "compile the unoptimized circuit to a table");
    add_common(cmd_tabulate);
    cmd_tabulate->add_option("--format", format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));

    CLI::App* cmd_flatten = app.add_subcommand("flatten", "fuse a gadget into one custom gate");
    add_common(cmd_flatten);
    cmd_flatten->add_option("--max-degree", max_degree, "identity degree bound");

    CLI::App* cmd_verify = app.add_subcommand("verify", "run a property check");
    add_common(cmd_verify, /*with_gadget=*/false);
    cmd_verify->add_option("--gadget", gadget_id, "gadget id")->required();
    cmd_verify
        ->add_option("--property", property, "completeness|soundness|preservation")
        ->required()
        ->check(CLI::IsMember({"completeness", "soundness", "preservation"}));
    cmd_verify->add_option("--samples", samples, "samples per check");
    cmd_verify->add_option("--seed", seed, "random seed");
    cmd_verify->add_option("--passes", passes_text, "passes to check (preservation only)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        plonkc::FieldSpec spec = parse_field(field_name);

        if (cmd_build->parsed()) {
            plonkc::BuiltGadget g = load_gadget(gadget_id, spec);
            print_stats(gadget_id, g.built.circuit.stats());
            emit(plonkc::circuit_to_json(g.built.circuit), out_path);
            return kExitOk;
        }

        if (cmd_stats->parsed()) {
            plonkc::BuiltGadget g = load_gadget(gadget_id, spec);
            std::ostringstream json;
            json << "{";
            bool first = true;
            for (const auto& [k, v] : g.built.circuit.stats()) {
                json << (first ? "" : ",") << "\"" << k << "\":" << v;
                first = false;
            }
            json << "}";
            emit(json.str(), out_path);
            return kExitOk;
        }

        if (cmd_trace->parsed()) {
            plonkc::BuiltGadget g = load_gadget(gadget_id, spec);
            std::vector<plonkc::FieldElement> values = parse_inputs(input_text, spec);
            if (values.size() != g.built.inputs.size()) {
                throw UsageError("gadget '" + gadget_id + "' takes " +
                                 std::to_string(g.built.inputs.size()) + " inputs, got " +
                                 std::to_string(values.size()));
            }
            plonkc::Trace initial = plonkc::input_trace(g.built, values);
            plonkc::TraceResult result =
                plonkc::gen_trace(g.built.circuit, initial, g.built.tables);
            if (!result.ok()) {
                std::cerr << "trace generation failed: " << result.failure << "\n";
                return kExitTrace;
            }
            emit(plonkc::trace_to_json(*result.trace), out_path);
            return kExitOk;
        }

        if (cmd_pipeline->parsed()) {
            plonkc::BuiltGadget g = load_gadget(gadget_id, spec);
            plonkc::Profile profile = profile_name == "boojum" ? plonkc::Profile::boojum()
                                                               : plonkc::Profile::plonk();
            plonkc::PassContext ctx = plonkc::make_context(g.built, spec, profile);
            print_stats("before", g.built.circuit.stats());
            plonkc::OptimizeResult opt =
                plonkc::optimize(g.built.circuit, ctx, parse_passes(passes_text));
            print_stats("after", opt.circuit.stats());
            std::cerr << plonkc::pass_reports_to_json(opt.reports) << "\n";
            plonkc::ConstraintSystem cs = plonkc::gen_cs(opt.circuit, spec, g.built.tables);
            plonkc::PlonkishTable table = plonkc::tabulate(cs, spec);
            std::cerr << "table: " << table.rows.size() << " rows, " << table.wire_columns
                      << " wire columns, " << table.identities.size() << " identities\n";
            emit(format == "csv" ? plonkc::table_to_csv(table) : plonkc::table_to_json(table),
                 out_path);
            return kExitOk;
        }

        if (cmd_tabulate->parsed()) {
            plonkc::BuiltGadget g = load_gadget(gadget_id, spec);
            plonkc::ConstraintSystem cs =
                plonkc::gen_cs(g.built.circuit, spec, g.built.tables);
            plonkc::PlonkishTable table = plonkc::tabulate(cs, spec);
            std::cerr << "table: " << table.rows.size() << " rows, " << table.wire_columns
                      << " wire columns, " << table.identities.size() << " identities\n";
            emit(format == "csv" ? plonkc::table_to_csv(table) : plonkc::table_to_json(table),
                 out_path);
            return kExitOk;
        }

        if (cmd_flatten->parsed()) {
            plonkc::BuiltGadget g = load_gadget(gadget_id, spec);
            plonkc::CustomGate gate;
            try {
                gate = plonkc::flatten(g.built.circuit, max_degree, spec,
                                       g.built.sig.outputs);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            std::cerr << "custom gate: width " << gate.width << ", " << gate.identities.size()
                      << " identities, max degree " << gate.max_degree << "\n";
            emit(plonkc::custom_gate_to_json(gate, spec), out_path);
            return kExitOk;
        }

        if (cmd_verify->parsed()) {
            plonkc::BuiltGadget g = load_gadget(gadget_id, spec);
            std::vector<plonkc::CheckReport> reports;
            if (property == "completeness") {
                reports.push_back(plonkc::check_completeness(g, spec, samples, seed));
            } else if (property == "soundness") {
                reports.push_back(plonkc::check_soundness_bruteforce(g, spec));
            } else {
                for (const std::string& pass : parse_passes(passes_text)) {
                    reports.push_back(plonkc::check_preservation(pass, g, spec, samples, seed));
                }
            }
            std::ostringstream json;
            json << "[";
            bool failed = false;
            for (std::size_t i = 0; i < reports.size(); ++i) {
                json << (i ? "," : "") << plonkc::check_report_to_json(reports[i]);
                if (!reports[i].ok()) failed = true;
                std::cerr << reports[i].property << ": " << reports[i].cases << " cases, "
                          << reports[i].failures.size() << " failures\n";
            }
            json << "]";
            emit(json.str(), out_path);
            return failed ? kExitProperty : kExitOk;
        }

        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
}
