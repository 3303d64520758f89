#pragma once

// Negation normal form and the literal-renaming embedding of the
// four-valued logic into classical logic: push negation down to atoms,
// then treat each negated atom ~p as an independent fresh atom p_neg.
// NNF preserves designation (not value) under every valuation of every
// logic; the embedding preserves and reflects validity between the
// four-valued logic and classical logic.

#include "paralogic/errors.hpp"
#include "paralogic/formula.hpp"

#include <string_view>

namespace paralogic {

/// Reserved suffix for renamed negative literals.  Source formulas whose
/// atoms already end in this suffix are rejected by rename_literals.
inline constexpr std::string_view renamed_atom_suffix = "_neg";

/// True iff negation occurs only directly above atoms.
bool is_nnf(const formula& f);

/// A formula certified to be in negation normal form.
class nnf_formula {
public:
    /// Throws std::invalid_argument unless is_nnf(f).
    explicit nnf_formula(formula f);

    const formula& get() const noexcept { return value_; }

private:
    formula value_;
};

/// Exhaustively applies ~~A => A, ~(A & B) => ~A | ~B,
/// ~(A | B) => ~A & ~B, ~(A -> B) => A & ~B, ~# => # -> #.
nnf_formula nnf(const formula& f);

/// Replace each literal ~p by the atom p_neg; the result contains no
/// negation.  Throws atom_collision_error if any source atom already
/// ends in the reserved suffix.
formula rename_literals(const nnf_formula& f);

/// rename_literals(nnf(f)).
formula embed_formula(const formula& f);

/// Apply embed_formula to every member on both sides.  The translated
/// sequent is classically valid iff the source is valid four-valuedly.
sequent embed_sequent(const sequent& s);

} // namespace paralogic
