#include "paralogic/semantics.hpp"

#include "paralogic/printer.hpp"

#include <algorithm>
#include <stdexcept>

namespace paralogic {

namespace {

constexpr truth_value T = truth_value::t;
constexpr truth_value B = truth_value::b;
constexpr truth_value N = truth_value::n;
constexpr truth_value F = truth_value::f;

// Shared four-valued tables, indexed by truth_value.  Conjunction is the
// meet and disjunction the join of the truth order; both stay inside
// every carrier ({t,f}, {t,b,f}, {t,n,f}), as does the implication.
constexpr truth_value neg_table[4] = {F, B, N, T};

constexpr truth_value conj_table[4][4] = {
    /* t */ {T, B, N, F},
    /* b */ {B, B, F, F},
    /* n */ {N, F, N, F},
    /* f */ {F, F, F, F},
};

constexpr truth_value disj_table[4][4] = {
    /* t */ {T, T, T, T},
    /* b */ {T, B, T, B},
    /* n */ {T, T, N, N},
    /* f */ {T, B, N, F},
};

// a -> b is b when a is designated, t otherwise ("ignore degrees").
constexpr truth_value impl_table[4][4] = {
    /* t */ {T, B, N, F},
    /* b */ {T, B, N, F},
    /* n */ {T, T, T, T},
    /* f */ {T, T, T, T},
};

std::size_t ix(truth_value v) { return static_cast<std::size_t>(v); }

truth_value eval_node(const matrix& m, const valuation& v,
                      const formula::node* n) {
    switch (n->kind) {
    case connective::atom: {
        const truth_value* value = v.lookup(n->name);
        if (!value)
            throw missing_atom_error(n->name);
        if (!m.in_carrier(*value))
            throw std::invalid_argument(
                "valuation assigns " + std::string(to_string(*value)) +
                " to atom '" + n->name + "', outside the " +
                std::string(m.logic().name) + " carrier");
        return *value;
    }
    case connective::falsum:
        return m.falsum_value();
    case connective::negation:
        return m.negation_of(eval_node(m, v, n->lhs.get()));
    case connective::conjunction:
        return m.conjunction_of(eval_node(m, v, n->lhs.get()),
                                eval_node(m, v, n->rhs.get()));
    case connective::disjunction:
        return m.disjunction_of(eval_node(m, v, n->lhs.get()),
                                eval_node(m, v, n->rhs.get()));
    default:
        return m.implication_of(eval_node(m, v, n->lhs.get()),
                                eval_node(m, v, n->rhs.get()));
    }
}

std::vector<std::string> checked_atoms(const sequent& s, std::size_t atom_cap) {
    std::vector<std::string> atoms = atoms_of(s);
    if (atoms.size() > atom_cap)
        throw resource_limit_error(
            "sequent has " + std::to_string(atoms.size()) +
                " distinct atoms, atom cap is " + std::to_string(atom_cap),
            atom_cap, atoms.size());
    return atoms;
}

} // namespace

std::string_view to_string(truth_value v) {
    switch (v) {
    case T: return "t";
    case B: return "b";
    case N: return "n";
    default: return "f";
    }
}

std::optional<truth_value> parse_truth_value(std::string_view text) {
    if (text == "t") return T;
    if (text == "b") return B;
    if (text == "n") return N;
    if (text == "f") return F;
    return std::nullopt;
}

bool truth_le(truth_value a, truth_value b) {
    if (a == b || a == F || b == T)
        return true;
    return false;
}

matrix::matrix(const logic_spec& spec) : spec_(&spec) {
    for (truth_value v : {T, B, N, F}) {
        if ((v == B && spec.laws.lnc) || (v == N && spec.laws.lem))
            continue;
        carrier_[carrier_size_++] = v;
        in_carrier_[ix(v)] = true;
    }
}

const matrix& matrix::for_logic(logic_id id) {
    static const matrix instances[4] = {
        matrix(logic_for(logic_id::cl)), matrix(logic_for(logic_id::lp)),
        matrix(logic_for(logic_id::k3)), matrix(logic_for(logic_id::bdl))};
    return instances[static_cast<std::size_t>(id)];
}

truth_value matrix::negation_of(truth_value a) const noexcept {
    return neg_table[ix(a)];
}

truth_value matrix::conjunction_of(truth_value a, truth_value b) const noexcept {
    return conj_table[ix(a)][ix(b)];
}

truth_value matrix::disjunction_of(truth_value a, truth_value b) const noexcept {
    return disj_table[ix(a)][ix(b)];
}

truth_value matrix::implication_of(truth_value a, truth_value b) const noexcept {
    return impl_table[ix(a)][ix(b)];
}

void valuation::assign(std::string atom, truth_value v) {
    for (entry& e : entries_) {
        if (e.first == atom) {
            e.second = v;
            return;
        }
    }
    entries_.emplace_back(std::move(atom), v);
}

const truth_value* valuation::lookup(std::string_view atom) const noexcept {
    for (const entry& e : entries_)
        if (e.first == atom)
            return &e.second;
    return nullptr;
}

std::string to_string(const valuation& v) {
    std::string out;
    for (const auto& [atom, value] : v) {
        if (!out.empty())
            out += ", ";
        out += atom;
        out += " = ";
        out += to_string(value);
    }
    return out;
}

truth_value eval(const matrix& m, const valuation& v, const formula& f) {
    return eval_node(m, v, f.raw());
}

truth_value eval(logic_id id, const valuation& v, const formula& f) {
    return eval_node(matrix::for_logic(id), v, f.raw());
}

void for_each_valuation(const matrix& m, std::span<const std::string> atoms,
                        const std::function<bool(const valuation&)>& visit) {
    std::span<const truth_value> carrier = m.carrier();
    std::vector<std::size_t> odometer(atoms.size(), 0);
    while (true) {
        {
            valuation current;
            for (std::size_t i = 0; i < atoms.size(); ++i)
                current.assign(atoms[i], carrier[odometer[i]]);
            if (!visit(current))
                return;
        }
        // Advance, last atom fastest.
        std::size_t i = atoms.size();
        while (i > 0) {
            if (++odometer[i - 1] < carrier.size())
                break;
            odometer[i - 1] = 0;
            --i;
        }
        if (i == 0)
            return;
    }
}

bool matrix_consequence(logic_id id, const sequent& s, std::size_t atom_cap) {
    return !countermodel(id, s, atom_cap).has_value();
}

std::optional<valuation> countermodel(logic_id id, const sequent& s,
                                      std::size_t atom_cap) {
    const matrix& m = matrix::for_logic(id);
    std::vector<std::string> atoms = checked_atoms(s, atom_cap);
    std::optional<valuation> witness;
    for_each_valuation(m, atoms, [&](const valuation& v) {
        for (const formula& f : s.left())
            if (!m.designated(eval(m, v, f)))
                return true; // premise not designated; not a counterexample
        for (const formula& f : s.right())
            if (m.designated(eval(m, v, f)))
                return true; // some conclusion designated
        witness = v;
        return false;
    });
    return witness;
}

truth_table make_truth_table(logic_id id, const formula& f,
                             std::size_t atom_cap) {
    const matrix& m = matrix::for_logic(id);
    std::vector<std::string> atoms = atoms_of(f);
    if (atoms.size() > atom_cap)
        throw resource_limit_error(
            "formula has " + std::to_string(atoms.size()) +
                " distinct atoms, atom cap is " + std::to_string(atom_cap),
            atom_cap, atoms.size());

    truth_table table{id, f, atoms, {}};
    for_each_valuation(m, atoms, [&](const valuation& v) {
        truth_value value = eval(m, v, f);
        table.rows.push_back({v, value, m.designated(value)});
        return true;
    });
    return table;
}

std::string format_truth_table(const truth_table& table) {
    std::string subject = to_string(table.subject);
    std::vector<std::size_t> widths;
    widths.reserve(table.atoms.size());
    for (const std::string& atom : table.atoms)
        widths.push_back(atom.size());

    std::string out;
    auto pad = [&](std::string_view text, std::size_t width) {
        out += text;
        for (std::size_t i = text.size(); i < width; ++i)
            out += ' ';
    };

    for (std::size_t i = 0; i < table.atoms.size(); ++i) {
        pad(table.atoms[i], widths[i]);
        out += " | ";
    }
    out += subject;
    out += '\n';
    for (std::size_t w : widths) {
        out.append(w, '-');
        out += "-+-";
    }
    out.append(subject.size(), '-');
    out += '\n';
    for (const truth_table_row& row : table.rows) {
        for (std::size_t i = 0; i < table.atoms.size(); ++i) {
            const truth_value* v = row.inputs.lookup(table.atoms[i]);
            pad(v ? to_string(*v) : "?", widths[i]);
            out += " | ";
        }
        out += to_string(row.value);
        if (row.designated)
            out += " *";
        out += '\n';
    }
    return out;
}

} // namespace paralogic
