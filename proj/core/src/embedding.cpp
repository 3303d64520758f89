#include "paralogic/embedding.hpp"

#include <stdexcept>

namespace paralogic {

namespace {

formula nnf_positive(const formula& f);

// Negation normal form of ~g.
formula nnf_negative(const formula& g) {
    switch (g.kind()) {
    case connective::atom:
        return ~g;
    case connective::falsum:
        // No primitive top in the signature; # -> # is designated under
        // every valuation of every matrix.
        return formula::falsum() >> formula::falsum();
    case connective::negation:
        return nnf_positive(g.body());
    case connective::conjunction:
        return nnf_negative(g.lhs()) | nnf_negative(g.rhs());
    case connective::disjunction:
        return nnf_negative(g.lhs()) & nnf_negative(g.rhs());
    default: // ~(A -> B)
        return nnf_positive(g.lhs()) & nnf_negative(g.rhs());
    }
}

formula nnf_positive(const formula& f) {
    switch (f.kind()) {
    case connective::atom:
    case connective::falsum:
        return f;
    case connective::negation:
        return nnf_negative(f.body());
    default: {
        formula lhs = nnf_positive(f.lhs());
        formula rhs = nnf_positive(f.rhs());
        if (lhs.raw() == f.lhs().raw() && rhs.raw() == f.rhs().raw())
            return f;
        switch (f.kind()) {
        case connective::conjunction:
            return std::move(lhs) & std::move(rhs);
        case connective::disjunction:
            return std::move(lhs) | std::move(rhs);
        default:
            return std::move(lhs) >> std::move(rhs);
        }
    }
    }
}

formula rename_node(const formula& f) {
    switch (f.kind()) {
    case connective::atom:
    case connective::falsum:
        return f;
    case connective::negation:
        // NNF guarantees the body is an atom.
        return formula::atom(f.body().atom_name() +
                             std::string(renamed_atom_suffix));
    default: {
        formula lhs = rename_node(f.lhs());
        formula rhs = rename_node(f.rhs());
        if (lhs.raw() == f.lhs().raw() && rhs.raw() == f.rhs().raw())
            return f;
        switch (f.kind()) {
        case connective::conjunction:
            return std::move(lhs) & std::move(rhs);
        case connective::disjunction:
            return std::move(lhs) | std::move(rhs);
        default:
            return std::move(lhs) >> std::move(rhs);
        }
    }
    }
}

} // namespace

bool is_nnf(const formula& f) {
    switch (f.kind()) {
    case connective::atom:
    case connective::falsum:
        return true;
    case connective::negation:
        return f.body().is_atom();
    default:
        return is_nnf(f.lhs()) && is_nnf(f.rhs());
    }
}

nnf_formula::nnf_formula(formula f) : value_(std::move(f)) {
    if (!is_nnf(value_))
        throw std::invalid_argument(
            "formula is not in negation normal form");
}

nnf_formula nnf(const formula& f) { return nnf_formula(nnf_positive(f)); }

formula rename_literals(const nnf_formula& f) {
    for (const std::string& atom : atoms_of(f.get()))
        if (atom.ends_with(renamed_atom_suffix))
            throw atom_collision_error(atom);
    return rename_node(f.get());
}

formula embed_formula(const formula& f) { return rename_literals(nnf(f)); }

sequent embed_sequent(const sequent& s) {
    std::vector<formula> left, right;
    left.reserve(s.left().size());
    right.reserve(s.right().size());
    for (const formula& f : s.left())
        left.push_back(embed_formula(f));
    for (const formula& f : s.right())
        right.push_back(embed_formula(f));
    return sequent(std::move(left), std::move(right));
}

} // namespace paralogic
