#pragma once

// Many-valued matrix semantics.  All four logics share one four-valued
// operation table; a logic's matrix is the restriction to its carrier
// (the tables are closed over every carrier).  Values:
//
//   t  true only        designated
//   b  both             designated, absent under LNC
//   n  neither          absent under LEM
//   f  false only
//
// Truth order: f < b < t and f < n < t with b, n incomparable;
// conjunction is meet, disjunction join, negation swaps t/f and fixes
// b and n.  Implication ignores degrees: a -> b is b when a is
// designated and t otherwise.  Equivalences hold at the designation
// level, not the value level (e.g. ~(p -> q) and p & ~q differ in value
// at v(p)=b, v(q)=n but are designated together).

#include "paralogic/errors.hpp"
#include "paralogic/formula.hpp"
#include "paralogic/logic.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace paralogic {

enum class truth_value : std::uint8_t { t = 0, b = 1, n = 2, f = 3 };

std::string_view to_string(truth_value v);
std::optional<truth_value> parse_truth_value(std::string_view text);

/// Truth-order comparison (partial: b and n are incomparable).
bool truth_le(truth_value a, truth_value b);

/// Default bound on distinct atoms per brute-force evaluation call.
inline constexpr std::size_t default_atom_cap = 8;

class matrix {
public:
    static const matrix& for_logic(logic_id id);

    logic_id id() const noexcept { return spec_->id; }
    const logic_spec& logic() const noexcept { return *spec_; }

    /// Carrier values in the order t, b, n, f restricted to this logic.
    std::span<const truth_value> carrier() const noexcept {
        return {carrier_.data(), carrier_size_};
    }
    bool in_carrier(truth_value v) const noexcept {
        return in_carrier_[static_cast<std::size_t>(v)];
    }
    bool designated(truth_value v) const noexcept {
        return v == truth_value::t || v == truth_value::b;
    }

    truth_value negation_of(truth_value a) const noexcept;
    truth_value conjunction_of(truth_value a, truth_value b) const noexcept;
    truth_value disjunction_of(truth_value a, truth_value b) const noexcept;
    truth_value implication_of(truth_value a, truth_value b) const noexcept;
    truth_value falsum_value() const noexcept { return truth_value::f; }

private:
    explicit matrix(const logic_spec& spec);

    const logic_spec* spec_;
    std::array<truth_value, 4> carrier_{};
    std::size_t carrier_size_ = 0;
    std::array<bool, 4> in_carrier_{};
};

/// Finite assignment of truth values to atom names; iteration follows
/// insertion order.
class valuation {
public:
    using entry = std::pair<std::string, truth_value>;

    valuation() = default;

    /// Insert or overwrite.
    void assign(std::string atom, truth_value v);
    const truth_value* lookup(std::string_view atom) const noexcept;

    bool empty() const noexcept { return entries_.empty(); }
    std::size_t size() const noexcept { return entries_.size(); }
    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }

    bool operator==(const valuation&) const = default;

private:
    std::vector<entry> entries_;
};

/// "p = b, q = n" (insertion order).
std::string to_string(const valuation& v);

/// Evaluate under the matrix of the given logic.  Throws
/// missing_atom_error if the valuation misses an atom of f and
/// std::invalid_argument if it assigns a value outside the carrier.
truth_value eval(const matrix& m, const valuation& v, const formula& f);
truth_value eval(logic_id id, const valuation& v, const formula& f);

/// Walk every valuation of the given atoms into the carrier of m, in
/// the frozen order: values cycle t, b, n, f (restricted), the last
/// atom varying fastest.  Stops early when the visitor returns false.
void for_each_valuation(const matrix& m, std::span<const std::string> atoms,
                        const std::function<bool(const valuation&)>& visit);

/// Brute-force consequence: true iff every carrier valuation of the
/// sequent's atoms that designates all of the left side designates some
/// member of the right side.  Throws resource_limit_error when the
/// sequent has more than atom_cap distinct atoms.
bool matrix_consequence(logic_id id, const sequent& s,
                        std::size_t atom_cap = default_atom_cap);

/// First refuting valuation in enumeration order, if any; absent iff
/// matrix_consequence holds.
std::optional<valuation> countermodel(logic_id id, const sequent& s,
                                      std::size_t atom_cap = default_atom_cap);

struct truth_table_row {
    valuation inputs;
    truth_value value;
    bool designated;
};

struct truth_table {
    logic_id logic;
    formula subject;
    std::vector<std::string> atoms;
    std::vector<truth_table_row> rows;
};

/// One row per valuation in enumeration order.
truth_table make_truth_table(logic_id id, const formula& f,
                             std::size_t atom_cap = default_atom_cap);

/// Aligned text rendering; designated rows are marked with '*'.
std::string format_truth_table(const truth_table& table);

} // namespace paralogic
