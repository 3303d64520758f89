#include "paralogic/prover.hpp"

#include "paralogic/printer.hpp"

#include <algorithm>

namespace paralogic {

namespace {

constexpr rule_info uniform_rules[] = {
    // Stated-direction rules.
    {"and_right", rule_side::right, "A & B", 2,
     "G |- D, A & B  <=  G |- D, A ; G |- D, B"},
    {"or_left", rule_side::left, "A | B", 2,
     "A | B, G |- D  <=  A, G |- D ; B, G |- D"},
    {"impl_right", rule_side::right, "A -> B", 1,
     "G |- D, A -> B  <=  A, G |- D, B"},
    {"not_not_left", rule_side::left, "~~A", 1, "~~A, G |- D  <=  A, G |- D"},
    {"not_and_left", rule_side::left, "~(A & B)", 2,
     "~(A & B), G |- D  <=  ~A, G |- D ; ~B, G |- D"},
    {"not_or_right", rule_side::right, "~(A | B)", 2,
     "G |- D, ~(A | B)  <=  G |- D, ~A ; G |- D, ~B"},
    {"not_impl_left", rule_side::left, "~(A -> B)", 1,
     "~(A -> B), G |- D  <=  A, ~B, G |- D"},
    // Derived duals.
    {"and_left", rule_side::left, "A & B", 1,
     "A & B, G |- D  <=  A, B, G |- D"},
    {"or_right", rule_side::right, "A | B", 1,
     "G |- D, A | B  <=  G |- D, A, B"},
    {"impl_left", rule_side::left, "A -> B", 2,
     "A -> B, G |- D  <=  G |- D, A ; B, G |- D"},
    {"not_not_right", rule_side::right, "~~A", 1,
     "G |- D, ~~A  <=  G |- D, A"},
    {"not_and_right", rule_side::right, "~(A & B)", 1,
     "G |- D, ~(A & B)  <=  G |- D, ~A, ~B"},
    {"not_or_left", rule_side::left, "~(A | B)", 1,
     "~(A | B), G |- D  <=  ~A, ~B, G |- D"},
    {"not_impl_right", rule_side::right, "~(A -> B)", 2,
     "G |- D, ~(A -> B)  <=  G |- D, A ; G |- D, ~B"},
    // Inert removals.
    {"discard_falsum_right", rule_side::right, "#", 1,
     "G |- D, #  <=  G |- D"},
    {"discard_not_falsum_left", rule_side::left, "~#", 1,
     "~#, G |- D  <=  G |- D"},
};

constexpr rule_info general_rules[] = {
    {"and_right", rule_side::right, "A & B", 2,
     "G |- D, A & B  <=  G |- D, A ; G |- D, B"},
    {"or_left", rule_side::left, "A | B", 2,
     "A | B, G |- D  <=  A, G |- D ; B, G |- D"},
    {"impl_right", rule_side::right, "A -> B", 1,
     "G |- D, A -> B  <=  A, G |- D, B"},
    {"and_left", rule_side::left, "A & B", 1,
     "A & B, G |- D  <=  A, B, G |- D"},
    {"or_right", rule_side::right, "A | B", 1,
     "G |- D, A | B  <=  G |- D, A, B"},
    {"impl_left", rule_side::left, "A -> B", 2,
     "A -> B, G |- D  <=  G |- D, A ; B, G |- D"},
    {"not_left_general", rule_side::left, "~A", 1,
     "~A, G |- D  <=  G |- D, A"},
    {"not_right_general", rule_side::right, "~A", 1,
     "G |- D, ~A  <=  A, G |- D"},
    {"discard_falsum_right", rule_side::right, "#", 1,
     "G |- D, #  <=  G |- D"},
};

bool reducible_left(const formula::node* n, bool general) {
    switch (n->kind) {
    case connective::atom:
    case connective::falsum:
        return false;
    case connective::negation:
        // ~atom is a literal for the uniform engine; the general engine
        // moves every negation across.
        return general || n->lhs->kind != connective::atom;
    default:
        return true;
    }
}

bool reducible_right(const formula::node* n, bool general) {
    switch (n->kind) {
    case connective::atom:
        return false;
    case connective::falsum:
        return true; // inert removal
    case connective::negation:
        if (general)
            return true;
        // ~atom is a literal, ~# a closure condition.
        return n->lhs->kind != connective::atom &&
               n->lhs->kind != connective::falsum;
    default:
        return true;
    }
}

std::vector<formula> minus(const std::vector<formula>& side, std::size_t i) {
    std::vector<formula> out;
    out.reserve(side.size() - 1);
    out.insert(out.end(), side.begin(), side.begin() + i);
    out.insert(out.end(), side.begin() + i + 1, side.end());
    return out;
}

std::vector<formula> plus(std::vector<formula> side, const formula& f) {
    detail::insert_sorted(side, f);
    return side;
}

struct premise {
    std::vector<formula> left;
    std::vector<formula> right;
};

struct expansion {
    std::string_view rule;
    premise premises[2];
    unsigned count = 0;
};

class engine {
public:
    engine(law_flags laws, bool general, const prover_options& options)
        : laws_(laws), general_(general), options_(options) {}

    proof_result run(const sequent& root) {
        std::optional<proof_node> proof;
        bool valid = search(root.left(), root.right(),
                            options_.build_proof ? &proof : nullptr);
        if (valid)
            return proof_result::make_valid(std::move(proof), nodes_);
        valuation counter = extract_countermodel(root);
        return proof_result::make_invalid(std::move(counter),
                                          std::move(*open_leaf_), nodes_);
    }

private:
    struct selection {
        bool found = false;
        rule_side side = rule_side::left;
        std::size_t index = 0;
    };

    selection select(const std::vector<formula>& left,
                     const std::vector<formula>& right) const {
        if (options_.policy == principal_policy::leftmost) {
            for (std::size_t i = 0; i < left.size(); ++i)
                if (reducible_left(left[i].raw(), general_))
                    return {true, rule_side::left, i};
            for (std::size_t i = 0; i < right.size(); ++i)
                if (reducible_right(right[i].raw(), general_))
                    return {true, rule_side::right, i};
        } else {
            for (std::size_t i = right.size(); i-- > 0;)
                if (reducible_right(right[i].raw(), general_))
                    return {true, rule_side::right, i};
            for (std::size_t i = left.size(); i-- > 0;)
                if (reducible_left(left[i].raw(), general_))
                    return {true, rule_side::left, i};
        }
        return {};
    }

    expansion expand(const std::vector<formula>& left,
                     const std::vector<formula>& right,
                     const selection& sel) const {
        expansion e;
        if (sel.side == rule_side::left) {
            const formula& p = left[sel.index];
            std::vector<formula> rest = minus(left, sel.index);
            switch (p.kind()) {
            case connective::conjunction:
                e.rule = "and_left";
                e.premises[0] = {plus(plus(std::move(rest), p.lhs()), p.rhs()),
                                 right};
                e.count = 1;
                break;
            case connective::disjunction:
                e.rule = "or_left";
                e.premises[0] = {plus(rest, p.lhs()), right};
                e.premises[1] = {plus(std::move(rest), p.rhs()), right};
                e.count = 2;
                break;
            case connective::implication:
                e.rule = "impl_left";
                e.premises[0] = {rest, plus(right, p.lhs())};
                e.premises[1] = {plus(std::move(rest), p.rhs()), right};
                e.count = 2;
                break;
            default: { // negation
                formula g = p.body();
                if (general_) {
                    e.rule = "not_left_general";
                    e.premises[0] = {std::move(rest), plus(right, g)};
                    e.count = 1;
                    break;
                }
                switch (g.kind()) {
                case connective::falsum:
                    e.rule = "discard_not_falsum_left";
                    e.premises[0] = {std::move(rest), right};
                    e.count = 1;
                    break;
                case connective::negation:
                    e.rule = "not_not_left";
                    e.premises[0] = {plus(std::move(rest), g.body()), right};
                    e.count = 1;
                    break;
                case connective::conjunction:
                    e.rule = "not_and_left";
                    e.premises[0] = {plus(rest, ~g.lhs()), right};
                    e.premises[1] = {plus(std::move(rest), ~g.rhs()), right};
                    e.count = 2;
                    break;
                case connective::disjunction:
                    e.rule = "not_or_left";
                    e.premises[0] = {
                        plus(plus(std::move(rest), ~g.lhs()), ~g.rhs()), right};
                    e.count = 1;
                    break;
                default: // ~(A -> B)
                    e.rule = "not_impl_left";
                    e.premises[0] = {
                        plus(plus(std::move(rest), g.lhs()), ~g.rhs()), right};
                    e.count = 1;
                    break;
                }
                break;
            }
            }
        } else {
            const formula& p = right[sel.index];
            std::vector<formula> rest = minus(right, sel.index);
            switch (p.kind()) {
            case connective::falsum:
                e.rule = "discard_falsum_right";
                e.premises[0] = {left, std::move(rest)};
                e.count = 1;
                break;
            case connective::conjunction:
                e.rule = "and_right";
                e.premises[0] = {left, plus(rest, p.lhs())};
                e.premises[1] = {left, plus(std::move(rest), p.rhs())};
                e.count = 2;
                break;
            case connective::disjunction:
                e.rule = "or_right";
                e.premises[0] = {
                    left, plus(plus(std::move(rest), p.lhs()), p.rhs())};
                e.count = 1;
                break;
            case connective::implication:
                e.rule = "impl_right";
                e.premises[0] = {plus(left, p.lhs()),
                                 plus(std::move(rest), p.rhs())};
                e.count = 1;
                break;
            default: { // negation
                formula g = p.body();
                if (general_) {
                    e.rule = "not_right_general";
                    e.premises[0] = {plus(left, g), std::move(rest)};
                    e.count = 1;
                    break;
                }
                switch (g.kind()) {
                case connective::negation:
                    e.rule = "not_not_right";
                    e.premises[0] = {left, plus(std::move(rest), g.body())};
                    e.count = 1;
                    break;
                case connective::conjunction:
                    e.rule = "not_and_right";
                    e.premises[0] = {
                        left, plus(plus(std::move(rest), ~g.lhs()), ~g.rhs())};
                    e.count = 1;
                    break;
                case connective::disjunction:
                    e.rule = "not_or_right";
                    e.premises[0] = {left, plus(rest, ~g.lhs())};
                    e.premises[1] = {left, plus(std::move(rest), ~g.rhs())};
                    e.count = 2;
                    break;
                default: // ~(A -> B)
                    e.rule = "not_impl_right";
                    e.premises[0] = {left, plus(rest, g.lhs())};
                    e.premises[1] = {left, plus(std::move(rest), ~g.rhs())};
                    e.count = 2;
                    break;
                }
                break;
            }
            }
        }
        return e;
    }

    std::optional<closure_reason>
    check_closure(const std::vector<formula>& left,
                  const std::vector<formula>& right) const {
        // Overlap: first shared formula in canonical order.
        for (std::size_t i = 0, j = 0; i < left.size() && j < right.size();) {
            auto c = left[i] <=> right[j];
            if (c == std::strong_ordering::equal)
                return closure_reason{closure_kind::overlap, left[i]};
            if (c < 0)
                ++i;
            else
                ++j;
        }
        if (detail::contains_sorted(left, formula::falsum()))
            return closure_reason{closure_kind::falsum_left, std::nullopt};
        if (general_)
            return std::nullopt;
        static const formula not_falsum = ~formula::falsum();
        if (detail::contains_sorted(right, not_falsum))
            return closure_reason{closure_kind::not_falsum_right,
                                  std::nullopt};
        if (laws_.lnc) {
            for (const formula& f : left)
                if (f.is_negation() && f.raw()->lhs->kind == connective::atom &&
                    detail::contains_sorted(left, f.body()))
                    return closure_reason{closure_kind::lnc, f.body()};
        }
        if (laws_.lem) {
            for (const formula& f : right)
                if (f.is_negation() && f.raw()->lhs->kind == connective::atom &&
                    detail::contains_sorted(right, f.body()))
                    return closure_reason{closure_kind::lem, f.body()};
        }
        return std::nullopt;
    }

    bool search(std::vector<formula> left, std::vector<formula> right,
                std::optional<proof_node>* out) {
        ++nodes_;
        selection sel = select(left, right);
        if (!sel.found) {
            if (auto reason = check_closure(left, right)) {
                if (out)
                    out->emplace(sequent(std::move(left), std::move(right)),
                                 std::move(*reason));
                return true;
            }
            open_leaf_.emplace(std::move(left), std::move(right));
            return false;
        }

        expansion e = expand(left, right, sel);
        formula principal = sel.side == rule_side::left ? left[sel.index]
                                                        : right[sel.index];
        std::vector<proof_node> children;
        if (out)
            children.reserve(e.count);
        for (unsigned i = 0; i < e.count; ++i) {
            std::optional<proof_node> child;
            if (!search(std::move(e.premises[i].left),
                        std::move(e.premises[i].right), out ? &child : nullptr))
                return false;
            if (out)
                children.push_back(std::move(*child));
        }
        if (out)
            out->emplace(sequent(std::move(left), std::move(right)), e.rule,
                         std::move(principal), std::move(children));
        return true;
    }

    valuation extract_countermodel(const sequent& root) const {
        const std::vector<formula>& left = open_leaf_->left();
        const std::vector<formula>& right = open_leaf_->right();
        truth_value untouched =
            laws_.lem ? truth_value::f : truth_value::n;
        valuation v;
        for (const std::string& name : atoms_of(root)) {
            formula p = formula::atom(name);
            formula np = ~p;
            bool pl = detail::contains_sorted(left, p);
            bool npl = detail::contains_sorted(left, np);
            bool pr = detail::contains_sorted(right, p);
            bool npr = detail::contains_sorted(right, np);
            truth_value value;
            if (pl && npl)
                value = truth_value::b;
            else if (pl)
                value = truth_value::t;
            else if (npl)
                value = truth_value::f;
            else if (pr && npr)
                value = truth_value::n;
            else if (pr)
                value = truth_value::f;
            else if (npr)
                value = truth_value::t;
            else
                value = untouched;
            v.assign(name, value);
        }
        return v;
    }

    law_flags laws_;
    bool general_;
    prover_options options_;
    std::uint64_t nodes_ = 0;
    std::optional<sequent> open_leaf_;
};

} // namespace

std::span<const rule_info> rule_set(logic_id) { return uniform_rules; }

std::span<const rule_info> rule_set_cl_general() { return general_rules; }

std::string_view to_string(closure_kind k) {
    switch (k) {
    case closure_kind::overlap: return "overlap";
    case closure_kind::falsum_left: return "falsum_left";
    case closure_kind::not_falsum_right: return "not_falsum_right";
    case closure_kind::lnc: return "lnc";
    default: return "lem";
    }
}

std::optional<closure_reason> closure(logic_id id, const sequent& s) {
    auto atomic_member = [](const formula& f) {
        if (f.is_atom() || f.is_falsum())
            return true;
        return f.is_negation() && (f.raw()->lhs->kind == connective::atom ||
                                   f.raw()->lhs->kind == connective::falsum);
    };
    for (const formula& f : s.left())
        if (!atomic_member(f))
            throw non_atomic_sequent_error(
                "closure requires an atomic sequent; '" + to_string(f) +
                "' is reducible");
    for (const formula& f : s.right())
        if (!atomic_member(f))
            throw non_atomic_sequent_error(
                "closure requires an atomic sequent; '" + to_string(f) +
                "' is reducible");

    const std::vector<formula>& left = s.left();
    const std::vector<formula>& right = s.right();
    for (std::size_t i = 0, j = 0; i < left.size() && j < right.size();) {
        auto c = left[i] <=> right[j];
        if (c == std::strong_ordering::equal)
            return closure_reason{closure_kind::overlap, left[i]};
        if (c < 0)
            ++i;
        else
            ++j;
    }
    if (detail::contains_sorted(left, formula::falsum()))
        return closure_reason{closure_kind::falsum_left, std::nullopt};
    static const formula not_falsum = ~formula::falsum();
    if (detail::contains_sorted(right, not_falsum))
        return closure_reason{closure_kind::not_falsum_right, std::nullopt};
    const law_flags laws = logic_for(id).laws;
    if (laws.lnc) {
        for (const formula& f : left)
            if (f.is_negation() && f.raw()->lhs->kind == connective::atom &&
                detail::contains_sorted(left, f.body()))
                return closure_reason{closure_kind::lnc, f.body()};
    }
    if (laws.lem) {
        for (const formula& f : right)
            if (f.is_negation() && f.raw()->lhs->kind == connective::atom &&
                detail::contains_sorted(right, f.body()))
                return closure_reason{closure_kind::lem, f.body()};
    }
    return std::nullopt;
}

proof_node::proof_node(sequent conclusion, closure_reason reason)
    : conclusion_(std::move(conclusion)), closed_by_(std::move(reason)) {}

proof_node::proof_node(sequent conclusion, std::string_view rule,
                       formula principal, std::vector<proof_node> premises)
    : conclusion_(std::move(conclusion)), rule_(rule),
      principal_(std::move(principal)), premises_(std::move(premises)) {}

namespace {

void render_node(const proof_node& n, int depth, std::string& out) {
    out.append(static_cast<std::size_t>(depth) * 2, ' ');
    out += to_string(n.conclusion());
    if (n.is_leaf()) {
        out += "  (closed: ";
        out += to_string(n.closed_by().kind);
        if (n.closed_by().witness) {
            out += " on ";
            out += to_string(*n.closed_by().witness);
        }
        out += ')';
    } else {
        out += "  (";
        out += n.rule();
        out += " on ";
        out += to_string(n.principal());
        out += ')';
    }
    out += '\n';
    for (const proof_node& child : n.premises())
        render_node(child, depth + 1, out);
}

} // namespace

std::string to_text(const proof_node& root) {
    std::string out;
    render_node(root, 0, out);
    return out;
}

proof_result proof_result::make_valid(std::optional<proof_node> proof,
                                      std::uint64_t nodes) {
    proof_result r;
    r.valid_ = true;
    r.proof_ = std::move(proof);
    r.nodes_ = nodes;
    return r;
}

proof_result proof_result::make_invalid(valuation counter, sequent open_leaf,
                                        std::uint64_t nodes) {
    proof_result r;
    r.valid_ = false;
    r.counter_ = std::move(counter);
    r.open_leaf_ = std::move(open_leaf);
    r.nodes_ = nodes;
    return r;
}

proof_result prove(logic_id id, const sequent& s,
                   const prover_options& options) {
    return prove_with_laws(logic_for(id).laws, s, options);
}

proof_result prove_with_laws(law_flags laws, const sequent& s,
                             const prover_options& options) {
    return engine(laws, /*general=*/false, options).run(s);
}

proof_result prove_cl_general(const sequent& s, const prover_options& options) {
    return engine(logic_for(logic_id::cl).laws, /*general=*/true, options)
        .run(s);
}

classification classify(const sequent& s) {
    classification c;
    prover_options options;
    options.build_proof = false;
    for (logic_id id : all_logics)
        c[id] = prove(id, s, options).valid();
    return c;
}

} // namespace paralogic
