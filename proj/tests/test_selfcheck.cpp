#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "paralogic/enumerate.hpp"
#include "paralogic/selfcheck.hpp"
#include "paralogic/semantics.hpp"

#include <vector>

using namespace paralogic;

TEST_CASE("designation oracle agrees with direct matrix consequence") {
    std::vector<formula> stock = enumerate_formulas(2, 1);
    designation_oracle oracle(stock, 2);
    CHECK(oracle.atom_count() == 2);

    // Exhaust singleton-side sequents and compare against the
    // brute-force evaluator the oracle is meant to accelerate.
    for_each_sequent_index(
        stock.size(), 1,
        [&](std::span<const std::size_t> li, std::span<const std::size_t> ri) {
            sequent s = make_sequent(stock, li, ri);
            for (logic_id id : all_logics)
                REQUIRE(oracle.consequence(id, li, ri) ==
                        matrix_consequence(id, s));
            return true;
        });
}

TEST_CASE("oracle rejects stocks over three atoms") {
    std::vector<formula> stock = enumerate_formulas(4, 0);
    CHECK_THROWS_AS(designation_oracle(stock, 4), resource_limit_error);
}

TEST_CASE("small exhaustive battery is green") {
    battery_params params;
    params.atoms = 2;
    params.depth = 1;
    params.per_side = 1;
    battery_report report = run_battery(params);

    CHECK(report.ok());
    CHECK(report.sequents == 1156); // 34^2 side subsets
    CHECK(report.prover_matrix_disagreements == 0);
    CHECK(report.general_disagreements == 0);
    CHECK(report.inclusion_violations == 0);
    CHECK(report.ablation_disagreements == 0);
    CHECK(report.embedding_disagreements == 0);
    CHECK(report.countermodel_failures == 0);
    CHECK(report.proof_audit_failures == 0);
    CHECK(report.crosscheck_failures == 0);
    CHECK(report.invalid_verdicts > 0);
    CHECK(report.proofs_audited > 0);
    CHECK(report.crosschecks > 0);
    CHECK(report.failures.empty());
    // Validity shrinks monotonically toward the four-valued base.
    CHECK(report.valid_count[0] >= report.valid_count[1]);
    CHECK(report.valid_count[0] >= report.valid_count[2]);
    CHECK(report.valid_count[1] >= report.valid_count[3]);
    CHECK(report.valid_count[2] >= report.valid_count[3]);
    CHECK(report.cl_minus_bdl > 0);
}

TEST_CASE("sampled battery visits the requested number of sequents") {
    battery_params params;
    params.atoms = 2;
    params.depth = 2;
    params.per_side = 2;
    params.samples = 500;
    params.seed = 42;
    battery_report report = run_battery(params);
    CHECK(report.ok());
    CHECK(report.sequents == 500);
}

TEST_CASE("sampling is deterministic per seed") {
    battery_params params;
    params.atoms = 2;
    params.depth = 1;
    params.per_side = 2;
    params.samples = 300;
    params.seed = 11;
    battery_report a = run_battery(params);
    battery_report b = run_battery(params);
    CHECK(a.valid_count == b.valid_count);
    CHECK(a.invalid_verdicts == b.invalid_verdicts);

    params.seed = 12;
    battery_report c = run_battery(params);
    // Different seed, different draw (overwhelmingly likely).
    CHECK(a.invalid_verdicts != c.invalid_verdicts);
}

TEST_CASE("progress callback observes the walk") {
    battery_params params;
    params.atoms = 1;
    params.depth = 1;
    params.per_side = 1;
    std::uint64_t calls = 0, last_done = 0, total_seen = 0;
    run_battery(params, [&](std::uint64_t done, std::uint64_t total) {
        ++calls;
        last_done = done;
        total_seen = total;
    });
    CHECK(calls >= 1);
    CHECK(last_done == total_seen); // final report is complete
    CHECK(total_seen == 289);       // 17^2
}

TEST_CASE("axiom checks pass at moderate sample counts") {
    axiom_check_params params;
    params.samples = 400;
    params.seed = 5;
    axiom_report report = run_axiom_checks(params);

    CHECK(report.ok());
    CHECK(report.overlap_checked == 400 * 4);
    CHECK(report.weakening_checked == 400 * 4);
    CHECK(report.cut_checked == 400 * 4);
    CHECK(report.structurality_checked == 400 * 4);
    CHECK(report.deduction_checked == 400 * 4);
    CHECK(report.general_negation_checked == 400);
    CHECK(report.overlap_failures == 0);
    CHECK(report.weakening_failures == 0);
    CHECK(report.cut_failures == 0);
    CHECK(report.structurality_failures == 0);
    CHECK(report.deduction_failures == 0);
    CHECK(report.general_negation_failures == 0);
    CHECK(report.nontriviality_ok);
    CHECK(report.bdl_counterexample_ok);
    CHECK(report.failures.empty());
}

TEST_CASE("battery covers the audit and crosscheck strides") {
    battery_params params;
    params.atoms = 1;
    params.depth = 1;
    params.per_side = 2;
    params.audit_stride = 1;
    params.audit_all_proofs = false;
    params.crosscheck_stride = 1;
    battery_report report = run_battery(params);
    CHECK(report.ok());
    // Every sequent was cross-checked; every valid verdict audited.
    CHECK(report.crosschecks == report.sequents);
    std::uint64_t valid_total = 0;
    for (std::uint64_t v : report.valid_count)
        valid_total += v;
    CHECK(report.proofs_audited == valid_total);
}
