// paralogic — decide sequents in classical logic and three paradefinite
// relatives, print truth tables and proof trees, translate four-valued
// sequents into classical ones, and enumerate the gap between logics.

#include "paralogic/embedding.hpp"
#include "paralogic/enumerate.hpp"
#include "paralogic/json_io.hpp"
#include "paralogic/parser.hpp"
#include "paralogic/printer.hpp"
#include "paralogic/prover.hpp"
#include "paralogic/selfcheck.hpp"
#include "paralogic/semantics.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>

namespace {

using paralogic::logic_id;
using ordered_json = nlohmann::ordered_json;

constexpr int exit_ok = 0;
constexpr int exit_invalid_or_failed = 1;
constexpr int exit_usage = 2;
constexpr int exit_resource = 3;
constexpr int exit_internal = 4;

struct global_options {
    std::string format = "text";
    std::size_t max_atoms = paralogic::default_atom_cap;
    std::uint64_t seed = 0;

    bool json() const { return format == "json"; }
};

std::size_t default_max_atoms() {
    if (const char* env = std::getenv("PARALOGIC_MAX_ATOMS")) {
        char* end = nullptr;
        unsigned long parsed = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && parsed > 0)
            return static_cast<std::size_t>(parsed);
        std::cerr << "warning: ignoring invalid PARALOGIC_MAX_ATOMS value '"
                  << env << "'\n";
    }
    return paralogic::default_atom_cap;
}

std::string read_argument(const std::string& arg) {
    if (arg != "-")
        return arg;
    return {std::istreambuf_iterator<char>(std::cin),
            std::istreambuf_iterator<char>()};
}

logic_id parse_logic_or_throw(const std::string& name) {
    if (auto id = paralogic::parse_logic(name))
        return *id;
    throw CLI::ValidationError("--logic",
                               "unknown logic '" + name +
                                   "' (expected cl, lp, k3 or bdl)");
}

std::uint64_t elapsed_us(std::chrono::steady_clock::time_point start) {
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::microseconds>(
            std::chrono::steady_clock::now() - start)
            .count());
}

ordered_json valuation_json(const paralogic::valuation& v) {
    return ordered_json::parse(paralogic::to_json(v));
}

int run_check(const global_options& global, const std::string& logic_name,
              const std::string& engine, bool witness,
              const std::string& input) {
    logic_id id = parse_logic_or_throw(logic_name);
    bool general = engine == "general";
    if (general && id != logic_id::cl)
        throw CLI::ValidationError(
            "--engine", "the general engine decides classical logic only");

    paralogic::sequent s = paralogic::parse_sequent(read_argument(input));
    paralogic::prover_options options;
    options.build_proof = witness;

    auto start = std::chrono::steady_clock::now();
    paralogic::proof_result result =
        general ? paralogic::prove_cl_general(s, options)
                : paralogic::prove(id, s, options);
    std::uint64_t us = elapsed_us(start);

    // The displayed countermodel is the canonical first witness in
    // valuation-enumeration order; the prover's own leaf extraction is
    // shown under --witness.
    std::optional<paralogic::valuation> canonical;
    if (!result.valid()) {
        if (paralogic::atoms_of(s).size() <= global.max_atoms)
            canonical = paralogic::countermodel(id, s, global.max_atoms);
        if (!canonical)
            canonical = result.counter();
    }

    if (global.json()) {
        ordered_json out;
        out["command"] = "check";
        out["logic"] = std::string(paralogic::name_of(id));
        out["engine"] = general ? "general" : "uniform";
        out["sequent"] = paralogic::to_string(s);
        out["valid"] = result.valid();
        if (!result.valid()) {
            out["countermodel"] = valuation_json(*canonical);
            if (witness) {
                out["open_leaf"] = paralogic::to_string(*result.open_leaf());
                out["leaf_countermodel"] = valuation_json(*result.counter());
            }
        } else if (witness && result.proof()) {
            out["proof"] =
                ordered_json::parse(paralogic::to_json(*result.proof()));
        }
        out["nodes_visited"] = result.nodes_visited();
        out["elapsed_us"] = us;
        std::cout << out.dump() << '\n';
    } else {
        std::cout << (result.valid() ? "VALID" : "INVALID") << '\n';
        if (!result.valid()) {
            std::cout << "countermodel: " << paralogic::to_string(*canonical)
                      << '\n';
            if (witness) {
                std::cout << "open leaf: "
                          << paralogic::to_string(*result.open_leaf()) << '\n'
                          << "leaf countermodel: "
                          << paralogic::to_string(*result.counter()) << '\n';
            }
        } else if (witness && result.proof()) {
            std::cout << paralogic::to_text(*result.proof());
        }
    }
    return result.valid() ? exit_ok : exit_invalid_or_failed;
}

int run_classify(const global_options& global, const std::string& input) {
    paralogic::sequent s = paralogic::parse_sequent(read_argument(input));
    paralogic::classification c = paralogic::classify(s);
    if (global.json()) {
        ordered_json verdicts;
        for (logic_id id : paralogic::all_logics)
            verdicts[std::string(paralogic::name_of(id))] = c[id];
        ordered_json out;
        out["command"] = "classify";
        out["sequent"] = paralogic::to_string(s);
        out["verdicts"] = std::move(verdicts);
        std::cout << out.dump() << '\n';
    } else {
        for (logic_id id : paralogic::all_logics)
            std::cout << paralogic::name_of(id) << (c[id] ? "\tVALID" : "\tINVALID")
                      << '\n';
    }
    return exit_ok;
}

int run_table(const global_options& global, const std::string& logic_name,
              const std::string& input) {
    logic_id id = parse_logic_or_throw(logic_name);
    paralogic::formula f = paralogic::parse_formula(read_argument(input));
    paralogic::truth_table table =
        paralogic::make_truth_table(id, f, global.max_atoms);
    if (global.json()) {
        ordered_json out;
        out["command"] = "table";
        ordered_json body = ordered_json::parse(paralogic::to_json(table));
        for (auto& [key, value] : body.items())
            out[key] = std::move(value);
        std::cout << out.dump() << '\n';
    } else {
        std::cout << paralogic::format_truth_table(table);
    }
    return exit_ok;
}

int run_embed(const global_options& global, const std::string& input) {
    paralogic::sequent s = paralogic::parse_sequent(read_argument(input));
    paralogic::sequent translated = paralogic::embed_sequent(s);
    paralogic::prover_options fast;
    fast.build_proof = false;
    bool bdl_valid = paralogic::prove(logic_id::bdl, s, fast).valid();
    bool cl_valid = paralogic::prove(logic_id::cl, translated, fast).valid();
    if (global.json()) {
        ordered_json out;
        out["command"] = "embed";
        out["source"] = paralogic::to_string(s);
        out["translated"] = paralogic::to_string(translated);
        out["bdl_source_valid"] = bdl_valid;
        out["cl_translated_valid"] = cl_valid;
        std::cout << out.dump() << '\n';
    } else {
        std::cout << "source:     " << paralogic::to_string(s) << '\n'
                  << "translated: " << paralogic::to_string(translated) << '\n'
                  << "bdl(source):     "
                  << (bdl_valid ? "VALID" : "INVALID") << '\n'
                  << "cl(translated):  " << (cl_valid ? "VALID" : "INVALID")
                  << '\n';
    }
    return exit_ok;
}

int run_diff(const global_options& global, const std::string& from_name,
             const std::string& to_name, std::size_t atoms, std::size_t depth,
             std::size_t per_side, std::uint64_t limit) {
    logic_id from = parse_logic_or_throw(from_name);
    logic_id to = parse_logic_or_throw(to_name);

    std::vector<paralogic::formula> stock =
        paralogic::enumerate_formulas(atoms, depth);
    std::optional<paralogic::designation_oracle> oracle;
    if (atoms <= 3)
        oracle.emplace(stock, atoms);

    paralogic::prover_options fast;
    fast.build_proof = false;
    std::uint64_t scanned = 0, found = 0;
    bool inconsistent = false;

    paralogic::for_each_sequent_index(
        stock.size(), per_side,
        [&](std::span<const std::size_t> left,
            std::span<const std::size_t> right) {
            ++scanned;
            paralogic::sequent s = paralogic::make_sequent(stock, left, right);
            if (!paralogic::prove(from, s, fast).valid() ||
                paralogic::prove(to, s, fast).valid())
                return true;

            // Every emitted item is verified against the matrix oracle.
            bool oracle_from =
                oracle ? oracle->consequence(from, left, right)
                       : paralogic::matrix_consequence(from, s,
                                                       global.max_atoms);
            bool oracle_to = oracle
                                 ? oracle->consequence(to, left, right)
                                 : paralogic::matrix_consequence(
                                       to, s, global.max_atoms);
            if (!oracle_from || oracle_to) {
                std::cerr << "internal error: prover and matrix oracle "
                             "disagree on "
                          << paralogic::to_string(s) << '\n';
                inconsistent = true;
                return false;
            }

            std::optional<paralogic::valuation> witness =
                paralogic::countermodel(to, s, global.max_atoms);
            ++found;
            if (global.json()) {
                ordered_json line;
                line["sequent"] = paralogic::to_string(s);
                line["countermodel"] =
                    witness ? valuation_json(*witness) : ordered_json();
                std::cout << line.dump() << '\n';
            } else {
                std::cout << paralogic::to_string(s) << "  ::  "
                          << (witness ? paralogic::to_string(*witness)
                                      : std::string("-"))
                          << '\n';
            }
            return limit == 0 || found < limit;
        });

    if (inconsistent)
        return exit_internal;
    if (global.json()) {
        ordered_json summary;
        summary["summary"] =
            ordered_json{{"scanned", scanned}, {"found", found}};
        std::cout << summary.dump() << '\n';
    } else {
        std::cout << "# scanned " << scanned << " sequents, found " << found
                  << '\n';
    }
    return exit_ok;
}

int run_selftest(const global_options& global, std::size_t atoms,
                 std::size_t depth, std::size_t per_side,
                 std::uint64_t samples, std::uint64_t axiom_samples) {
    paralogic::battery_params params;
    params.atoms = atoms;
    params.depth = depth;
    params.per_side = per_side;
    params.samples = samples;
    params.seed = global.seed;

    paralogic::battery_report battery = paralogic::run_battery(params);

    paralogic::axiom_check_params axiom_params;
    axiom_params.samples = axiom_samples;
    axiom_params.seed = global.seed == 0 ? 1 : global.seed;
    paralogic::axiom_report axioms = paralogic::run_axiom_checks(axiom_params);

    bool pass = battery.ok() && axioms.ok();

    if (global.json()) {
        ordered_json out;
        out["command"] = "selftest";
        out["battery"] = {
            {"sequents", battery.sequents},
            {"prover_matrix_disagreements",
             battery.prover_matrix_disagreements},
            {"general_disagreements", battery.general_disagreements},
            {"inclusion_violations", battery.inclusion_violations},
            {"ablation_disagreements", battery.ablation_disagreements},
            {"embedding_disagreements", battery.embedding_disagreements},
            {"invalid_verdicts", battery.invalid_verdicts},
            {"countermodel_failures", battery.countermodel_failures},
            {"proofs_audited", battery.proofs_audited},
            {"proof_audit_failures", battery.proof_audit_failures},
            {"crosschecks", battery.crosschecks},
            {"crosscheck_failures", battery.crosscheck_failures},
        };
        out["axioms"] = {
            {"overlap_checked", axioms.overlap_checked},
            {"overlap_failures", axioms.overlap_failures},
            {"weakening_checked", axioms.weakening_checked},
            {"weakening_failures", axioms.weakening_failures},
            {"cut_checked", axioms.cut_checked},
            {"cut_failures", axioms.cut_failures},
            {"structurality_checked", axioms.structurality_checked},
            {"structurality_failures", axioms.structurality_failures},
            {"nontriviality_ok", axioms.nontriviality_ok},
            {"deduction_checked", axioms.deduction_checked},
            {"deduction_failures", axioms.deduction_failures},
            {"general_negation_checked", axioms.general_negation_checked},
            {"general_negation_failures", axioms.general_negation_failures},
            {"bdl_counterexample_ok", axioms.bdl_counterexample_ok},
        };
        out["pass"] = pass;
        std::cout << out.dump() << '\n';
    } else {
        std::cout << "battery: " << battery.sequents << " sequents ("
                  << atoms << " atoms, depth " << depth << ", per side "
                  << per_side << (samples ? ", sampled" : ", exhaustive")
                  << ")\n"
                  << "  prover/matrix disagreements:  "
                  << battery.prover_matrix_disagreements << '\n'
                  << "  general-engine disagreements: "
                  << battery.general_disagreements << '\n'
                  << "  inclusion violations:         "
                  << battery.inclusion_violations << '\n'
                  << "  ablation disagreements:       "
                  << battery.ablation_disagreements << '\n'
                  << "  embedding disagreements:      "
                  << battery.embedding_disagreements << '\n'
                  << "  countermodel failures:        "
                  << battery.countermodel_failures << " (of "
                  << battery.invalid_verdicts << " invalid verdicts)\n"
                  << "  proof audits:                 "
                  << battery.proofs_audited << " ("
                  << battery.proof_audit_failures << " failures)\n"
                  << "  oracle cross-checks:          " << battery.crosschecks
                  << " (" << battery.crosscheck_failures << " failures)\n";
        std::cout << "axioms: overlap " << axioms.overlap_checked << '/'
                  << axioms.overlap_failures << ", weakening "
                  << axioms.weakening_checked << '/'
                  << axioms.weakening_failures << ", cut "
                  << axioms.cut_checked << '/' << axioms.cut_failures
                  << ", structurality " << axioms.structurality_checked << '/'
                  << axioms.structurality_failures << ", deduction "
                  << axioms.deduction_checked << '/'
                  << axioms.deduction_failures << ", general-negation "
                  << axioms.general_negation_checked << '/'
                  << axioms.general_negation_failures << '\n'
                  << "  non-triviality: "
                  << (axioms.nontriviality_ok ? "ok" : "FAILED")
                  << ", BDL counterexample: "
                  << (axioms.bdl_counterexample_ok ? "ok" : "FAILED") << '\n';
        for (const std::string& failure : battery.failures)
            std::cout << "  failure: " << failure << '\n';
        for (const std::string& failure : axioms.failures)
            std::cout << "  failure: " << failure << '\n';
        std::cout << "selftest: " << (pass ? "PASS" : "FAIL") << '\n';
    }
    return pass ? exit_ok : exit_invalid_or_failed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Decision procedures for classical logic and its paraconsistent, "
        "paracomplete and four-valued relatives"};
    app.require_subcommand(1);
    app.fallthrough();

    global_options global;
    global.max_atoms = default_max_atoms();
    app.add_option("--format", global.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--max-atoms", global.max_atoms,
                   "Atom cap for brute-force evaluation (env "
                   "PARALOGIC_MAX_ATOMS)")
        ->capture_default_str();
    app.add_option("--seed", global.seed, "Seed for sampled runs")
        ->capture_default_str();

    // check
    std::string check_logic, check_engine = "uniform", check_input;
    bool check_witness = false;
    CLI::App* check =
        app.add_subcommand("check", "Decide a sequent in one logic");
    check->add_option("--logic", check_logic, "cl, lp, k3 or bdl")
        ->required();
    check->add_option("--engine", check_engine,
                      "uniform (all logics) or general (cl only)")
        ->check(CLI::IsMember({"uniform", "general"}))
        ->capture_default_str();
    check->add_flag("--witness", check_witness,
                    "Print the proof tree / open-leaf details");
    check->add_option("sequent", check_input, "Sequent text, or - for stdin")
        ->required();

    // classify
    std::string classify_input;
    CLI::App* classify_cmd =
        app.add_subcommand("classify", "Decide a sequent in all four logics");
    classify_cmd
        ->add_option("sequent", classify_input, "Sequent text, or - for stdin")
        ->required();

    // table
    std::string table_logic, table_input;
    CLI::App* table =
        app.add_subcommand("table", "Print a truth table for a formula");
    table->add_option("--logic", table_logic, "cl, lp, k3 or bdl")->required();
    table->add_option("formula", table_input, "Formula text, or - for stdin")
        ->required();

    // embed
    std::string embed_input;
    CLI::App* embed = app.add_subcommand(
        "embed", "Translate a sequent into classical logic and compare");
    embed->add_option("sequent", embed_input, "Sequent text, or - for stdin")
        ->required();

    // diff
    std::string diff_from, diff_to;
    std::size_t diff_atoms = 2, diff_depth = 1, diff_per_side = 1;
    std::uint64_t diff_limit = 0;
    CLI::App* diff = app.add_subcommand(
        "diff", "Stream sequents valid in one logic but not another");
    diff->add_option("--from", diff_from, "Logic expected to validate")
        ->required();
    diff->add_option("--to", diff_to, "Logic expected to refute")->required();
    diff->add_option("--atoms", diff_atoms, "Enumeration atoms")
        ->capture_default_str();
    diff->add_option("--depth", diff_depth, "Enumeration depth")
        ->capture_default_str();
    diff->add_option("--per-side", diff_per_side, "Formulas per side")
        ->capture_default_str();
    diff->add_option("--limit", diff_limit, "Stop after this many hits (0 = all)")
        ->capture_default_str();

    // selftest
    std::size_t st_atoms = 2, st_depth = 1, st_per_side = 1;
    std::uint64_t st_samples = 0, st_axiom_samples = 1000;
    CLI::App* selftest = app.add_subcommand(
        "selftest", "Cross-check the prover, semantics and embedding");
    selftest->add_option("--atoms", st_atoms, "Enumeration atoms")
        ->capture_default_str();
    selftest->add_option("--depth", st_depth, "Enumeration depth")
        ->capture_default_str();
    selftest->add_option("--per-side", st_per_side, "Formulas per side")
        ->capture_default_str();
    selftest
        ->add_option("--samples", st_samples,
                     "Sample this many sequents instead of exhausting")
        ->capture_default_str();
    selftest
        ->add_option("--axiom-samples", st_axiom_samples,
                     "Samples per axiom property and logic")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*check)
            return run_check(global, check_logic, check_engine, check_witness,
                             check_input);
        if (*classify_cmd)
            return run_classify(global, classify_input);
        if (*table)
            return run_table(global, table_logic, table_input);
        if (*embed)
            return run_embed(global, embed_input);
        if (*diff)
            return run_diff(global, diff_from, diff_to, diff_atoms, diff_depth,
                            diff_per_side, diff_limit);
        if (*selftest)
            return run_selftest(global, st_atoms, st_depth, st_per_side,
                                st_samples, st_axiom_samples);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const paralogic::resource_limit_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_resource;
    } catch (const paralogic::parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const paralogic::atom_collision_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return exit_internal;
    }
    return exit_usage;
}
