#pragma once

// Bulk verification machinery: an eval-based designation oracle that is
// independent of the prover, and batteries that sweep sequent spaces
// comparing the prover, the general classical engine, the embedding and
// the matrix semantics against each other.  Used by the CLI selftest
// subcommand and by the acceptance suite.

#include "paralogic/embedding.hpp"
#include "paralogic/enumerate.hpp"
#include "paralogic/formula.hpp"
#include "paralogic/logic.hpp"
#include "paralogic/prover.hpp"
#include "paralogic/semantics.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace paralogic {

/// For every stock formula and logic, a bitmask of the valuation grid
/// points (carrier^atoms, in valuation-enumeration order) at which the
/// formula is designated.  Built directly from eval, so consequence
/// judgments derived from it are an oracle independent of the prover.
/// Supports up to 3 atoms (4^3 = 64 grid points in a 64-bit mask).
class designation_oracle {
public:
    designation_oracle(const std::vector<formula>& stock,
                       std::size_t atom_count);

    /// True iff every grid valuation designating all left members
    /// designates some right member (indices into the stock).
    bool consequence(logic_id id, std::span<const std::size_t> left,
                     std::span<const std::size_t> right) const {
        const auto& masks = masks_[static_cast<std::size_t>(id)];
        std::uint64_t premises = full_[static_cast<std::size_t>(id)];
        for (std::size_t i : left)
            premises &= masks[i];
        std::uint64_t conclusions = 0;
        for (std::size_t i : right)
            conclusions |= masks[i];
        return (premises & ~conclusions) == 0;
    }

    std::size_t atom_count() const noexcept { return atom_count_; }

private:
    std::size_t atom_count_;
    std::array<std::vector<std::uint64_t>, 4> masks_;
    std::array<std::uint64_t, 4> full_{};
};

/// Parameters for one battery sweep over a sequent space.
struct battery_params {
    std::size_t atoms = 2;
    std::size_t depth = 1;
    std::size_t per_side = 2;
    /// 0 = exhaustive walk of the space; otherwise draw this many seeded
    /// samples (side sizes uniform in 0..per_side, members uniform).
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    /// Run the law-flag ablation comparisons (prove_with_laws vs lp/k3).
    bool ablations = true;
    /// Build and audit full proof trees for every valid verdict (else
    /// only every audit_stride-th sequent gets the full treatment).
    bool audit_all_proofs = false;
    std::uint64_t audit_stride = 97;
    /// Every Nth sequent, cross-check the mask oracle against a direct
    /// matrix_consequence call and the index-built embedding against
    /// embed_sequent.
    std::uint64_t crosscheck_stride = 997;
    std::size_t formula_cap = default_formula_cap;
};

struct battery_report {
    std::uint64_t sequents = 0;
    std::array<std::uint64_t, 4> valid_count{}; // prover, per logic
    // Criterion: prover agrees with the matrix oracle (all four logics).
    std::uint64_t prover_matrix_disagreements = 0;
    // Criterion: general classical engine agrees with the uniform one.
    std::uint64_t general_disagreements = 0;
    // Criterion: BDL-valid => LP,K3-valid; LP,K3-valid => CL-valid.
    std::uint64_t inclusion_violations = 0;
    // Criterion: CL-valid & BDL-invalid sequents have a countermodel
    // using b or n somewhere.
    std::uint64_t cl_minus_bdl = 0;
    std::uint64_t shape_violations = 0;
    // Criterion: flag ablations reproduce LP and K3 verbatim.
    std::uint64_t ablation_disagreements = 0;
    // Criterion: prove(BDL, s) iff prove(CL, embed_sequent(s)).
    std::uint64_t embedding_disagreements = 0;
    // Criterion: every Invalid carries a refuting in-carrier valuation.
    std::uint64_t invalid_verdicts = 0;
    std::uint64_t countermodel_failures = 0;
    // Audits and oracle cross-checks.
    std::uint64_t proofs_audited = 0;
    std::uint64_t proof_audit_failures = 0;
    std::uint64_t crosschecks = 0;
    std::uint64_t crosscheck_failures = 0;

    std::vector<std::string> failures; // first few, human-readable

    bool ok() const {
        return prover_matrix_disagreements == 0 &&
               general_disagreements == 0 && inclusion_violations == 0 &&
               shape_violations == 0 && ablation_disagreements == 0 &&
               embedding_disagreements == 0 && countermodel_failures == 0 &&
               proof_audit_failures == 0 && crosscheck_failures == 0;
    }
};

using progress_fn = std::function<void(std::uint64_t done,
                                       std::uint64_t total)>;

/// Sweep the sequent space given by params (exhaustively or sampled) and
/// run every comparison above on each sequent.  total = 0 in the
/// progress callback means the total is not known in advance.
battery_report run_battery(const battery_params& params,
                           const progress_fn& progress = {});

/// Parameters for the sampled axiom/property checks.
struct axiom_check_params {
    std::size_t atoms = 2;
    std::size_t depth = 2;
    std::size_t per_side = 2;
    std::uint64_t samples = 1000; // per logic, per property
    std::uint64_t seed = 1;
    std::size_t formula_cap = default_formula_cap;
};

struct axiom_report {
    // Scott axioms on the decided relation, all four logics.
    std::uint64_t overlap_checked = 0, overlap_failures = 0;
    std::uint64_t weakening_checked = 0, weakening_failures = 0;
    std::uint64_t cut_checked = 0, cut_failures = 0;
    // Structurality: valid sequent stays valid under substitution.
    std::uint64_t structurality_checked = 0, structurality_failures = 0;
    // Non-triviality: "p |- q" invalid in all four logics.
    bool nontriviality_ok = false;
    // Deduction biconditional on the matrix relation, per logic.
    std::uint64_t deduction_checked = 0, deduction_failures = 0;
    // General-negation biconditional for CL; BDL counterexample exists.
    std::uint64_t general_negation_checked = 0;
    std::uint64_t general_negation_failures = 0;
    bool bdl_counterexample_ok = false;

    std::vector<std::string> failures;

    bool ok() const {
        return overlap_failures == 0 && weakening_failures == 0 &&
               cut_failures == 0 && structurality_failures == 0 &&
               nontriviality_ok && deduction_failures == 0 &&
               general_negation_failures == 0 && bdl_counterexample_ok;
    }
};

axiom_report run_axiom_checks(const axiom_check_params& params);

} // namespace paralogic
