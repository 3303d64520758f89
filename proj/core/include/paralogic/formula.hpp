#pragma once

// Immutable propositional formulas over atoms, falsum, negation,
// conjunction, disjunction and implication.  Formulas are cheap to copy
// (shared, refcounted nodes) and safe to share across threads once built.

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace paralogic {

enum class connective : std::uint8_t {
    atom,
    falsum,
    negation,
    conjunction,
    disjunction,
    implication,
};

class formula {
public:
    struct node;
    using node_ptr = std::shared_ptr<const node>;

    /// Atoms are nonempty names matching [a-z][a-z0-9_]*; anything else
    /// throws std::invalid_argument.  The grammar keeps printing and
    /// re-parsing a total round trip.
    static formula atom(std::string name);
    static formula falsum();
    static formula negation(formula body);
    static formula conjunction(formula lhs, formula rhs);
    static formula disjunction(formula lhs, formula rhs);
    static formula implication(formula lhs, formula rhs);

    connective kind() const noexcept;
    bool is_atom() const noexcept { return kind() == connective::atom; }
    bool is_falsum() const noexcept { return kind() == connective::falsum; }
    bool is_negation() const noexcept { return kind() == connective::negation; }
    bool is_binary() const noexcept {
        return kind() == connective::conjunction ||
               kind() == connective::disjunction ||
               kind() == connective::implication;
    }

    /// Valid only for atoms.
    const std::string& atom_name() const;
    /// Valid only for negations.
    formula body() const;
    /// Valid only for binary connectives.
    formula lhs() const;
    formula rhs() const;

    /// Number of symbol occurrences: atoms and falsum weigh 1, negation
    /// adds 1, binary connectives add 1 plus both operands.
    std::uint32_t weight() const noexcept;
    /// Connective nesting depth: atoms and falsum have depth 0.
    std::uint32_t depth() const noexcept;

    /// Total canonical order: by weight, then connective, then atom name
    /// or operands left-to-right.  Structural equality coincides with
    /// equivalence under this order.
    std::strong_ordering operator<=>(const formula& other) const noexcept;
    bool operator==(const formula& other) const noexcept;

    /// Stable identity pointer for the underlying node (diagnostics and
    /// fast-path equality only; never null).
    const node* raw() const noexcept { return node_.get(); }

private:
    explicit formula(node_ptr n) noexcept : node_(std::move(n)) {}

    node_ptr node_;
};

struct formula::node {
    connective kind;
    std::uint32_t weight;
    std::uint32_t depth;
    std::string name;   // atoms only
    node_ptr lhs;       // negation body lives here
    node_ptr rhs;       // binary connectives only
};

inline connective formula::kind() const noexcept { return node_->kind; }
inline std::uint32_t formula::weight() const noexcept { return node_->weight; }
inline std::uint32_t formula::depth() const noexcept { return node_->depth; }
inline formula formula::body() const {
    if (node_->kind != connective::negation)
        throw std::logic_error("body() called on a non-negation");
    return formula(node_->lhs);
}
inline formula formula::lhs() const {
    if (node_->kind < connective::conjunction)
        throw std::logic_error("lhs() called on a non-binary formula");
    return formula(node_->lhs);
}
inline formula formula::rhs() const {
    if (node_->kind < connective::conjunction)
        throw std::logic_error("rhs() called on a non-binary formula");
    return formula(node_->rhs);
}

/// Convenience composition operators, mirroring the concrete syntax
/// precedences: ~a, a & b, a | b, a >> b (implication).  Note that >> is
/// left-associative in C++ while implication is right-associative in the
/// logic, so chained uses need explicit parentheses.
inline formula operator~(formula a) { return formula::negation(std::move(a)); }
inline formula operator&(formula a, formula b) {
    return formula::conjunction(std::move(a), std::move(b));
}
inline formula operator|(formula a, formula b) {
    return formula::disjunction(std::move(a), std::move(b));
}
inline formula operator>>(formula a, formula b) {
    return formula::implication(std::move(a), std::move(b));
}

/// Atom names in order of first occurrence, left to right.
std::vector<std::string> atoms_of(const formula& f);

/// Finite map from atom names to replacement formulas; atoms not bound
/// are left unchanged (identity elsewhere).
class substitution {
public:
    substitution() = default;

    void bind(std::string atom, formula value);
    const formula* lookup(std::string_view atom) const noexcept;
    bool empty() const noexcept { return map_.empty(); }
    std::size_t size() const noexcept { return map_.size(); }

private:
    std::map<std::string, formula, std::less<>> map_;
};

/// Capture-free simultaneous substitution.
formula substitute(const substitution& s, const formula& f);

/// A two-sided sequent with set semantics: each side is kept sorted in
/// canonical formula order with duplicates removed, so structurally equal
/// sequents compare equal regardless of construction order.
class sequent {
public:
    sequent() = default;
    sequent(std::vector<formula> left, std::vector<formula> right);

    const std::vector<formula>& left() const noexcept { return left_; }
    const std::vector<formula>& right() const noexcept { return right_; }

    bool empty() const noexcept { return left_.empty() && right_.empty(); }
    /// Sum of the weights of all member formulas.
    std::uint64_t weight() const noexcept;

    std::strong_ordering operator<=>(const sequent& other) const noexcept;
    bool operator==(const sequent& other) const noexcept;

private:
    std::vector<formula> left_;
    std::vector<formula> right_;
};

/// Atom names over both sides, in order of first occurrence (left side
/// first, each side left to right).
std::vector<std::string> atoms_of(const sequent& s);

/// Apply a substitution to every member formula.
sequent substitute(const substitution& s, const sequent& q);

namespace detail {
/// Sort in canonical order and drop structural duplicates, in place.
void normalize_side(std::vector<formula>& side);
/// Insert into a normalized vector unless already present.
void insert_sorted(std::vector<formula>& side, const formula& f);
/// True if the normalized vector contains f.
bool contains_sorted(const std::vector<formula>& side, const formula& f);
} // namespace detail

} // namespace paralogic
