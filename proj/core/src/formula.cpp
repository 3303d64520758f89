#include "paralogic/formula.hpp"

#include <algorithm>
#include <stdexcept>

namespace paralogic {

namespace {

bool valid_atom_name(std::string_view name) {
    if (name.empty() || name[0] < 'a' || name[0] > 'z')
        return false;
    return std::all_of(name.begin() + 1, name.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    });
}

formula::node_ptr make_node(connective kind, std::uint32_t weight,
                            std::uint32_t depth, std::string name,
                            formula::node_ptr lhs, formula::node_ptr rhs) {
    return std::make_shared<const formula::node>(formula::node{
        kind, weight, depth, std::move(name), std::move(lhs), std::move(rhs)});
}

std::strong_ordering compare_nodes(const formula::node* a,
                                   const formula::node* b) {
    if (a == b)
        return std::strong_ordering::equal;
    if (a->weight != b->weight)
        return a->weight <=> b->weight;
    if (a->kind != b->kind)
        return static_cast<std::uint8_t>(a->kind) <=>
               static_cast<std::uint8_t>(b->kind);
    switch (a->kind) {
    case connective::atom:
        return a->name <=> b->name;
    case connective::falsum:
        return std::strong_ordering::equal;
    case connective::negation:
        return compare_nodes(a->lhs.get(), b->lhs.get());
    default: {
        auto c = compare_nodes(a->lhs.get(), b->lhs.get());
        if (c != std::strong_ordering::equal)
            return c;
        return compare_nodes(a->rhs.get(), b->rhs.get());
    }
    }
}

void collect_atoms(const formula::node* n, std::vector<std::string>& out) {
    switch (n->kind) {
    case connective::atom:
        if (std::find(out.begin(), out.end(), n->name) == out.end())
            out.push_back(n->name);
        return;
    case connective::falsum:
        return;
    case connective::negation:
        collect_atoms(n->lhs.get(), out);
        return;
    default:
        collect_atoms(n->lhs.get(), out);
        collect_atoms(n->rhs.get(), out);
        return;
    }
}

} // namespace

formula formula::atom(std::string name) {
    if (!valid_atom_name(name))
        throw std::invalid_argument(
            "invalid atom name '" + name +
            "' (expected a lowercase letter followed by [a-z0-9_]*)");
    return formula(make_node(connective::atom, 1, 0, std::move(name), nullptr,
                             nullptr));
}

formula formula::falsum() {
    static const node_ptr instance =
        make_node(connective::falsum, 1, 0, {}, nullptr, nullptr);
    return formula(instance);
}

formula formula::negation(formula body) {
    auto weight = body.weight() + 1;
    auto depth = body.depth() + 1;
    return formula(make_node(connective::negation, weight, depth, {},
                             std::move(body.node_), nullptr));
}

formula formula::conjunction(formula lhs, formula rhs) {
    auto weight = lhs.weight() + rhs.weight() + 1;
    auto depth = std::max(lhs.depth(), rhs.depth()) + 1;
    return formula(make_node(connective::conjunction, weight, depth, {},
                             std::move(lhs.node_), std::move(rhs.node_)));
}

formula formula::disjunction(formula lhs, formula rhs) {
    auto weight = lhs.weight() + rhs.weight() + 1;
    auto depth = std::max(lhs.depth(), rhs.depth()) + 1;
    return formula(make_node(connective::disjunction, weight, depth, {},
                             std::move(lhs.node_), std::move(rhs.node_)));
}

formula formula::implication(formula lhs, formula rhs) {
    auto weight = lhs.weight() + rhs.weight() + 1;
    auto depth = std::max(lhs.depth(), rhs.depth()) + 1;
    return formula(make_node(connective::implication, weight, depth, {},
                             std::move(lhs.node_), std::move(rhs.node_)));
}

const std::string& formula::atom_name() const {
    if (!is_atom())
        throw std::logic_error("atom_name() called on a non-atom");
    return node_->name;
}

std::strong_ordering formula::operator<=>(const formula& other) const noexcept {
    return compare_nodes(node_.get(), other.node_.get());
}

bool formula::operator==(const formula& other) const noexcept {
    return (*this <=> other) == std::strong_ordering::equal;
}

std::vector<std::string> atoms_of(const formula& f) {
    std::vector<std::string> out;
    collect_atoms(f.raw(), out);
    return out;
}

void substitution::bind(std::string atom, formula value) {
    map_.insert_or_assign(std::move(atom), std::move(value));
}

const formula* substitution::lookup(std::string_view atom) const noexcept {
    auto it = map_.find(atom);
    return it == map_.end() ? nullptr : &it->second;
}

formula substitute(const substitution& s, const formula& f) {
    if (s.empty())
        return f;
    switch (f.kind()) {
    case connective::atom:
        if (const formula* r = s.lookup(f.atom_name()))
            return *r;
        return f;
    case connective::falsum:
        return f;
    case connective::negation: {
        formula body = f.body();
        formula mapped = substitute(s, body);
        if (mapped.raw() == body.raw())
            return f;
        return formula::negation(std::move(mapped));
    }
    default: {
        formula lhs = f.lhs();
        formula rhs = f.rhs();
        formula mapped_lhs = substitute(s, lhs);
        formula mapped_rhs = substitute(s, rhs);
        if (mapped_lhs.raw() == lhs.raw() && mapped_rhs.raw() == rhs.raw())
            return f;
        switch (f.kind()) {
        case connective::conjunction:
            return formula::conjunction(std::move(mapped_lhs),
                                        std::move(mapped_rhs));
        case connective::disjunction:
            return formula::disjunction(std::move(mapped_lhs),
                                        std::move(mapped_rhs));
        default:
            return formula::implication(std::move(mapped_lhs),
                                        std::move(mapped_rhs));
        }
    }
    }
}

namespace detail {

void normalize_side(std::vector<formula>& side) {
    std::sort(side.begin(), side.end());
    side.erase(std::unique(side.begin(), side.end()), side.end());
}

void insert_sorted(std::vector<formula>& side, const formula& f) {
    auto it = std::lower_bound(side.begin(), side.end(), f);
    if (it == side.end() || !(*it == f))
        side.insert(it, f);
}

bool contains_sorted(const std::vector<formula>& side, const formula& f) {
    return std::binary_search(side.begin(), side.end(), f);
}

} // namespace detail

sequent::sequent(std::vector<formula> left, std::vector<formula> right)
    : left_(std::move(left)), right_(std::move(right)) {
    detail::normalize_side(left_);
    detail::normalize_side(right_);
}

std::uint64_t sequent::weight() const noexcept {
    std::uint64_t total = 0;
    for (const formula& f : left_)
        total += f.weight();
    for (const formula& f : right_)
        total += f.weight();
    return total;
}

std::strong_ordering sequent::operator<=>(const sequent& other) const noexcept {
    auto cmp_side = [](const std::vector<formula>& a,
                       const std::vector<formula>& b) {
        auto n = std::min(a.size(), b.size());
        for (std::size_t i = 0; i < n; ++i) {
            auto c = a[i] <=> b[i];
            if (c != std::strong_ordering::equal)
                return c;
        }
        return a.size() <=> b.size();
    };
    auto c = cmp_side(left_, other.left_);
    if (c != std::strong_ordering::equal)
        return c;
    return cmp_side(right_, other.right_);
}

bool sequent::operator==(const sequent& other) const noexcept {
    return (*this <=> other) == std::strong_ordering::equal;
}

std::vector<std::string> atoms_of(const sequent& s) {
    std::vector<std::string> out;
    for (const formula& f : s.left())
        collect_atoms(f.raw(), out);
    for (const formula& f : s.right())
        collect_atoms(f.raw(), out);
    return out;
}

sequent substitute(const substitution& s, const sequent& q) {
    std::vector<formula> left, right;
    left.reserve(q.left().size());
    right.reserve(q.right().size());
    for (const formula& f : q.left())
        left.push_back(substitute(s, f));
    for (const formula& f : q.right())
        right.push_back(substitute(s, f));
    return sequent(std::move(left), std::move(right));
}

} // namespace paralogic
