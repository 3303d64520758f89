// Acceptance gate for the whole project: sweeps large sequent domains
// comparing every component against every other, checks the axiomatic
// properties of the decided consequence relations, and prints one
// PASS/FAIL line per criterion.  Exits nonzero if any criterion fails.
//
// Domains (2-atom formula stocks unless stated):
//   A  depth <= 1, up to 2 formulas per side   -- exhaustive, 315,844
//   B  depth <= 2, up to 1 formula per side    -- exhaustive, 10,916,416
//   C  depth <= 2, up to 2 formulas per side   -- seeded sample (the full
//      space holds ~2.98e13 sequents; see PARALOGIC_ACCEPT_* below)
//   D  3 atoms, depth <= 1, up to 2 per side   -- exhaustive, 2,550,409
//
// Environment knobs:
//   PARALOGIC_ACCEPT_SAMPLES  sample count for domain C (default 200000)
//   PARALOGIC_ACCEPT_FULL=1   exhaust domain C instead of sampling (the
//                             full walk needs years of CPU time; provided
//                             so the sampled default is an explicit,
//                             overridable choice rather than a silent one)

#include "paralogic/selfcheck.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

using namespace paralogic;

namespace {

struct domain_run {
    const char* label;
    battery_params params;
    battery_report report;
    double seconds = 0.0;
};

double run_one(domain_run& d) {
    auto start = std::chrono::steady_clock::now();
    std::uint64_t last_percent = 101;
    d.report = run_battery(d.params, [&](std::uint64_t done,
                                         std::uint64_t total) {
        if (total == 0)
            return;
        std::uint64_t percent = done * 100 / total;
        if (percent != last_percent && percent % 10 == 0) {
            std::fprintf(stderr, "  [%s] %3llu%%\r", d.label,
                         static_cast<unsigned long long>(percent));
            std::fflush(stderr);
            last_percent = percent;
        }
    });
    d.seconds = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    std::fprintf(stderr, "\n");
    std::printf("domain %s: %s sequents in %.1fs (valid per logic: "
                "cl %llu, lp %llu, k3 %llu, bdl %llu)\n",
                d.label,
                std::to_string(d.report.sequents).c_str(), d.seconds,
                static_cast<unsigned long long>(d.report.valid_count[0]),
                static_cast<unsigned long long>(d.report.valid_count[1]),
                static_cast<unsigned long long>(d.report.valid_count[2]),
                static_cast<unsigned long long>(d.report.valid_count[3]));
    return d.seconds;
}

bool criterion(int number, const char* title, bool pass,
               const std::string& detail) {
    std::printf("criterion %d %s  %s: %s\n", number, pass ? "PASS" : "FAIL",
                title, detail.c_str());
    return pass;
}

std::string num(std::uint64_t v) { return std::to_string(v); }

} // namespace

int main() {
    std::uint64_t sample_count = 200'000;
    if (const char* env = std::getenv("PARALOGIC_ACCEPT_SAMPLES"))
        sample_count = std::strtoull(env, nullptr, 10);
    bool full = false;
    if (const char* env = std::getenv("PARALOGIC_ACCEPT_FULL"))
        full = env[0] == '1';

    domain_run domains[4] = {
        {"A", {}, {}, 0.0},
        {"B", {}, {}, 0.0},
        {"C", {}, {}, 0.0},
        {"D", {}, {}, 0.0},
    };
    domains[0].params.atoms = 2;
    domains[0].params.depth = 1;
    domains[0].params.per_side = 2;

    domains[1].params.atoms = 2;
    domains[1].params.depth = 2;
    domains[1].params.per_side = 1;

    domains[2].params.atoms = 2;
    domains[2].params.depth = 2;
    domains[2].params.per_side = 2;
    domains[2].params.samples = full ? 0 : sample_count;
    domains[2].params.seed = 20260817;

    domains[3].params.atoms = 3;
    domains[3].params.depth = 1;
    domains[3].params.per_side = 2;

    if (full)
        std::printf("note: PARALOGIC_ACCEPT_FULL is set; domain C will walk "
                    "~2.98e13 sequents exhaustively.\n");

    double battery_seconds = 0.0;
    for (domain_run& d : domains)
        battery_seconds += run_one(d);

    axiom_check_params axiom_params;
    axiom_params.samples = 1000;
    axiom_params.seed = 1;
    axiom_report axioms = run_axiom_checks(axiom_params);

    // Aggregates across all four domains.
    std::uint64_t sequents = 0, prover_matrix = 0, general = 0, inclusion = 0,
                  cl_minus_bdl = 0, shape = 0, ablation = 0, embedding = 0,
                  invalid = 0, counter_fail = 0, audited = 0, audit_fail = 0,
                  crosschecks = 0, crosscheck_fail = 0;
    for (const domain_run& d : domains) {
        sequents += d.report.sequents;
        prover_matrix += d.report.prover_matrix_disagreements;
        general += d.report.general_disagreements;
        inclusion += d.report.inclusion_violations;
        cl_minus_bdl += d.report.cl_minus_bdl;
        shape += d.report.shape_violations;
        ablation += d.report.ablation_disagreements;
        embedding += d.report.embedding_disagreements;
        invalid += d.report.invalid_verdicts;
        counter_fail += d.report.countermodel_failures;
        audited += d.report.proofs_audited;
        audit_fail += d.report.proof_audit_failures;
        crosschecks += d.report.crosschecks;
        crosscheck_fail += d.report.crosscheck_failures;
    }

    for (const domain_run& d : domains)
        for (const std::string& failure : d.report.failures)
            std::printf("  failure [%s]: %s\n", d.label, failure.c_str());
    for (const std::string& failure : axioms.failures)
        std::printf("  failure [axioms]: %s\n", failure.c_str());

    std::printf("proof audits: %s trees fully checked, %s failures; "
                "oracle cross-checks: %s, %s failures\n",
                num(audited).c_str(), num(audit_fail).c_str(),
                num(crosschecks).c_str(), num(crosscheck_fail).c_str());

    bool all = true;

    all &= criterion(
        1, "prover agrees with the matrix semantics",
        prover_matrix == 0 && battery_seconds < 300.0,
        num(4 * sequents) + " prover-vs-matrix comparisons (4 logics x " +
            num(sequents) + " sequents), " + num(prover_matrix) +
            " disagreements, " + std::to_string(battery_seconds).substr(0, 5) +
            "s total; the 2-atom depth<=2 space is exhausted at depth 1 "
            "(domain A) and at one formula per side (domain B), and sampled "
            "with " +
            (full ? std::string("a full walk")
                  : num(domains[2].params.samples) + " seeded draws") +
            " at two per side (domain C; full size ~2.98e13)");

    all &= criterion(2, "general-negation classical engine matches",
                     general == 0,
                     num(sequents) + " sequents, " + num(general) +
                         " verdict differences between prove_cl_general and "
                         "the uniform classical engine");

    all &= criterion(
        3, "validity inclusions hold",
        inclusion == 0,
        "bdl=>lp, bdl=>k3, lp=>cl, k3=>cl checked on every sequent "
        "(including the 3-atom domain D), " +
            num(inclusion) + " violations");

    all &= criterion(
        4, "the classical surplus needs gluts or gaps",
        shape == 0 && cl_minus_bdl > 0 && ablation == 0,
        num(cl_minus_bdl) +
            " sequents valid classically but not four-valuedly, every "
            "countermodel used b or n (" +
            num(shape) +
            " exceptions); law-flag ablations reproduced lp and k3 exactly (" +
            num(ablation) + " differences)");

    all &= criterion(
        5, "the literal-renaming embedding preserves and reflects validity",
        embedding == 0,
        "prove(bdl, s) compared with prove(cl, embed(s)) on every sequent, " +
            num(embedding) + " mismatches");

    all &= criterion(
        6, "the decided relations satisfy overlap, weakening, cut, "
           "structurality and are non-trivial",
        axioms.overlap_failures == 0 && axioms.weakening_failures == 0 &&
            axioms.cut_failures == 0 && axioms.structurality_failures == 0 &&
            axioms.overlap_checked >= 4000 &&
            axioms.weakening_checked >= 4000 && axioms.cut_checked >= 4000 &&
            axioms.structurality_checked >= 4000 && axioms.nontriviality_ok,
        num(axioms.overlap_checked) + "+" + num(axioms.weakening_checked) +
            "+" + num(axioms.cut_checked) + "+" +
            num(axioms.structurality_checked) +
            " instances across the four logics, 0 failures required, got " +
            num(axioms.overlap_failures + axioms.weakening_failures +
                axioms.cut_failures + axioms.structurality_failures) +
            "; p |- q invalid everywhere: " +
            (axioms.nontriviality_ok ? "yes" : "NO"));

    all &= criterion(
        7, "deduction and general-negation biconditionals",
        axioms.deduction_failures == 0 && axioms.deduction_checked >= 4000 &&
            axioms.general_negation_failures == 0 &&
            axioms.general_negation_checked >= 1000 &&
            axioms.bdl_counterexample_ok,
        num(axioms.deduction_checked) + " deduction instances (>=1000 per "
            "logic), " +
            num(axioms.deduction_failures) + " failures; " +
            num(axioms.general_negation_checked) +
            " classical general-negation instances, " +
            num(axioms.general_negation_failures) +
            " failures; negation-shift fails four-valuedly as required "
            "(~p |- ~p holds, ~p, p |- does not): " +
            (axioms.bdl_counterexample_ok ? "yes" : "NO"));

    all &= criterion(
        8, "every Invalid verdict carries a refuting valuation",
        counter_fail == 0 && invalid > 0,
        num(invalid) + " Invalid verdicts, every countermodel re-evaluated "
            "in-carrier and refuting, " +
            num(counter_fail) + " failures");

    bool integrity = audit_fail == 0 && crosscheck_fail == 0;
    if (!integrity) {
        std::printf("internal integrity FAIL: proof audits or oracle "
                    "cross-checks failed\n");
        all = false;
    }

    std::printf("acceptance: %s\n", all ? "PASS" : "FAIL");
    return all ? 0 : 1;
}
