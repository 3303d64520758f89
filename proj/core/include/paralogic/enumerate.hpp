#pragma once

// Bounded exhaustive enumeration of formulas and of sequent index
// spaces, used by the self-test suites and the diff subcommand.
//
// Formula order (deterministic, frozen):
//   * formulas are grouped in layers by exact depth, shallower first;
//   * layer 0 is the atoms in declaration order, then falsum;
//   * layer d+1 lists negations ~A with depth(A) = d in layer order,
//     then conjunctions, disjunctions and implications in that order,
//     each block running row-major over (A, B) pairs drawn from the
//     enumeration so far (A outer, B inner) and keeping exactly the
//     pairs whose deeper operand has depth d.
//
// The first atoms are named p, q, r, s, u, v, w, x; "t" is skipped so
// atom names never read like the truth value t in countermodel output.

#include "paralogic/errors.hpp"
#include "paralogic/formula.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace paralogic {

inline constexpr std::size_t default_formula_cap = 1'000'000;
inline constexpr std::size_t max_enumeration_atoms = 8;

/// Names of the first atom_count enumeration atoms.
std::vector<std::string> enumeration_atoms(std::size_t atom_count);

/// Closed-form count of formulas over atom_count atoms with depth at
/// most max_depth: c(0) = a+1, c(d+1) = (a+1) + c(d) + 3*c(d)^2.
/// Saturates at uint64 max on overflow.
std::uint64_t count_formulas(std::size_t atom_count, std::size_t max_depth);

/// Every formula over the first atom_count atoms with depth <= max_depth,
/// exactly once, in the frozen order above.  Throws resource_limit_error
/// if the closed-form count exceeds cap.
std::vector<formula> enumerate_formulas(std::size_t atom_count,
                                        std::size_t max_depth,
                                        std::size_t cap = default_formula_cap);

/// Number of subsets of {0..stock_size-1} with at most per_side elements.
std::uint64_t count_side_subsets(std::size_t stock_size, std::size_t per_side);

/// Visit every subset of {0..stock_size-1} with at most max_size
/// elements: the empty set first, then sizes ascending, combinations in
/// lexicographic order within a size.  The visitor receives the sorted
/// index span and returns false to stop early; the function returns
/// false iff stopped.
template <class F>
bool for_each_side_subset(std::size_t n, std::size_t max_size, F&& visit) {
    std::vector<std::size_t> idx;
    if (!visit(std::span<const std::size_t>(idx)))
        return false;
    for (std::size_t k = 1; k <= max_size && k <= n; ++k) {
        idx.resize(k);
        for (std::size_t i = 0; i < k; ++i)
            idx[i] = i;
        while (true) {
            if (!visit(std::span<const std::size_t>(idx)))
                return false;
            // Advance to the next combination in lexicographic order.
            std::size_t i = k;
            while (i > 0 && idx[i - 1] == n - k + (i - 1))
                --i;
            if (i == 0)
                break;
            ++idx[i - 1];
            for (std::size_t j = i; j < k; ++j)
                idx[j] = idx[j - 1] + 1;
        }
    }
    return true;
}

/// Visit every (left, right) pair of side subsets, left outer and right
/// inner, both in for_each_side_subset order.  Returns false iff the
/// visitor stopped the walk.
template <class F>
bool for_each_sequent_index(std::size_t stock_size, std::size_t per_side,
                            F&& visit) {
    return for_each_side_subset(
        stock_size, per_side, [&](std::span<const std::size_t> left) {
            return for_each_side_subset(
                stock_size, per_side,
                [&](std::span<const std::size_t> right) {
                    return visit(left, right);
                });
        });
}

/// Materialize a sequent from stock indices.
sequent make_sequent(const std::vector<formula>& stock,
                     std::span<const std::size_t> left,
                     std::span<const std::size_t> right);

} // namespace paralogic
