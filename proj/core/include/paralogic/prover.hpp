#pragma once

// Terminating backward proof search.  One uniform rule set (14
// connective rules plus 2 inert removals) serves all four logics; the
// logics differ only in which closure conditions fire at atomic leaves
// (LNC requires the lnc flag, LEM the lem flag).  Every rule strictly
// shrinks the premises under the measure that charges atoms and falsum
// 1, a negation 1 and a binary connective 2 (a plain node count would
// tie on the de-Morgan-style rules), so search terminates; every rule
// is reversible at the designation level, so an open leaf yields a
// countermodel for the root sequent.
//
// A second, classical-only engine replaces the negation-specific rules
// and the LNC/LEM closures with the two general negation rules (move the
// negated formula across the turnstile).

#include "paralogic/formula.hpp"
#include "paralogic/logic.hpp"
#include "paralogic/semantics.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace paralogic {

enum class rule_side : std::uint8_t { left, right };

/// Descriptor of one reduction rule, for documentation and tooling; the
/// premise builders themselves are hard-coded in the engine.
struct rule_info {
    std::string_view name;
    rule_side side;
    std::string_view shape;  // principal-formula shape, e.g. "~(A & B)"
    unsigned premises;       // 1 or 2
    std::string_view scheme; // "conclusion  <=  premise ; premise"
};

/// The uniform rule set. Identical for every logic id; the id parameter
/// documents intent at call sites.
std::span<const rule_info> rule_set(logic_id id);

/// Rules of the classical general-negation engine.
std::span<const rule_info> rule_set_cl_general();

enum class closure_kind : std::uint8_t {
    overlap,
    falsum_left,
    not_falsum_right,
    lnc,
    lem,
};

std::string_view to_string(closure_kind k);

struct closure_reason {
    closure_kind kind;
    /// Overlap: the shared formula; LNC/LEM: the atom; otherwise absent.
    std::optional<formula> witness;
};

/// Closure test for atomic sequents (only literals and ⊥/~⊥ members),
/// applied in the fixed precedence overlap > falsum-left >
/// not-falsum-right > LNC > LEM.  Throws non_atomic_sequent_error on
/// reducible input.
std::optional<closure_reason> closure(logic_id id, const sequent& s);

enum class principal_policy : std::uint8_t {
    /// First reducible formula of the left side in canonical order, else
    /// first of the right side (the default, and the documented order).
    leftmost,
    /// Mirror image: last reducible formula of the right side, else last
    /// of the left.  Exists to test that verdicts are order-independent.
    rightmost,
};

struct prover_options {
    principal_policy policy = principal_policy::leftmost;
    /// When false, Valid results carry no proof tree (bulk verification
    /// fast path); verdicts, countermodels and leaf choice are unchanged.
    bool build_proof = true;
};

class proof_node {
public:
    /// Closed leaf.
    proof_node(sequent conclusion, closure_reason reason);
    /// Inner node.
    proof_node(sequent conclusion, std::string_view rule, formula principal,
               std::vector<proof_node> premises);

    const sequent& conclusion() const noexcept { return conclusion_; }
    bool is_leaf() const noexcept { return closed_by_.has_value(); }
    const closure_reason& closed_by() const { return *closed_by_; }
    std::string_view rule() const noexcept { return rule_; }
    const formula& principal() const { return *principal_; }
    const std::vector<proof_node>& premises() const noexcept {
        return premises_;
    }

private:
    sequent conclusion_;
    std::optional<closure_reason> closed_by_;
    std::string_view rule_;
    std::optional<formula> principal_;
    std::vector<proof_node> premises_;
};

/// Indented text rendering of a proof tree.
std::string to_text(const proof_node& root);

class proof_result {
public:
    bool valid() const noexcept { return valid_; }
    /// Present iff valid and proof construction was requested.
    const std::optional<proof_node>& proof() const noexcept { return proof_; }
    /// Present iff invalid: the first refuting valuation found, read off
    /// the first open leaf in depth-first search order, extended to every
    /// atom of the root sequent.
    const std::optional<valuation>& counter() const noexcept {
        return counter_;
    }
    /// The open leaf the countermodel was read from.
    const std::optional<sequent>& open_leaf() const noexcept {
        return open_leaf_;
    }
    /// Number of sequents visited by the search.
    std::uint64_t nodes_visited() const noexcept { return nodes_; }

    static proof_result make_valid(std::optional<proof_node> proof,
                                   std::uint64_t nodes);
    static proof_result make_invalid(valuation counter, sequent open_leaf,
                                     std::uint64_t nodes);

private:
    bool valid_ = false;
    std::optional<proof_node> proof_;
    std::optional<valuation> counter_;
    std::optional<sequent> open_leaf_;
    std::uint64_t nodes_ = 0;
};

proof_result prove(logic_id id, const sequent& s,
                   const prover_options& options = {});

/// Same engine with explicit law flags (the four logic ids map onto the
/// four flag combinations; exposed directly so ablations are expressible).
proof_result prove_with_laws(law_flags laws, const sequent& s,
                             const prover_options& options = {});

/// Classical-only engine with general negation rules; countermodels are
/// two-valued.
proof_result prove_cl_general(const sequent& s,
                              const prover_options& options = {});

/// Validity of s in each of the four logics.
struct classification {
    std::array<bool, 4> valid{};

    bool operator[](logic_id id) const {
        return valid[static_cast<std::size_t>(id)];
    }
    bool& operator[](logic_id id) {
        return valid[static_cast<std::size_t>(id)];
    }
    bool operator==(const classification&) const = default;
};

classification classify(const sequent& s);

} // namespace paralogic
