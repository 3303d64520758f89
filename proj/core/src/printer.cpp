#include "paralogic/printer.hpp"

#include <ostream>

namespace paralogic {

namespace {

// Binding strengths: implication 1, disjunction 2, conjunction 3,
// negation 4, atoms and falsum 5.
int precedence(connective k) {
    switch (k) {
    case connective::implication: return 1;
    case connective::disjunction: return 2;
    case connective::conjunction: return 3;
    case connective::negation: return 4;
    default: return 5;
    }
}

void render(const formula& f, int min_prec, std::string& out) {
    int prec = precedence(f.kind());
    bool parens = prec < min_prec;
    if (parens)
        out += '(';
    switch (f.kind()) {
    case connective::atom:
        out += f.atom_name();
        break;
    case connective::falsum:
        out += '#';
        break;
    case connective::negation:
        out += '~';
        render(f.body(), prec, out);
        break;
    case connective::conjunction:
        render(f.lhs(), prec, out);
        out += " & ";
        render(f.rhs(), prec + 1, out);
        break;
    case connective::disjunction:
        render(f.lhs(), prec, out);
        out += " | ";
        render(f.rhs(), prec + 1, out);
        break;
    case connective::implication:
        render(f.lhs(), prec + 1, out);
        out += " -> ";
        render(f.rhs(), prec, out);
        break;
    }
    if (parens)
        out += ')';
}

void render_side(const std::vector<formula>& side, std::string& out) {
    for (std::size_t i = 0; i < side.size(); ++i) {
        if (i > 0)
            out += ", ";
        render(side[i], 0, out);
    }
}

} // namespace

std::string to_string(const formula& f) {
    std::string out;
    render(f, 0, out);
    return out;
}

std::string to_string(const sequent& s) {
    std::string out;
    render_side(s.left(), out);
    if (!s.left().empty())
        out += ' ';
    out += "|-";
    if (!s.right().empty())
        out += ' ';
    render_side(s.right(), out);
    return out;
}

std::ostream& operator<<(std::ostream& os, const formula& f) {
    return os << to_string(f);
}

std::ostream& operator<<(std::ostream& os, const sequent& s) {
    return os << to_string(s);
}

} // namespace paralogic
