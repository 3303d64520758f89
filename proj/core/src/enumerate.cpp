#include "paralogic/enumerate.hpp"

#include <array>
#include <limits>

namespace paralogic {

namespace {

constexpr std::array<const char*, 8> atom_pool = {"p", "q", "r", "s",
                                                  "u", "v", "w", "x"};

constexpr std::uint64_t u64_max = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    return __builtin_add_overflow(a, b, &r) ? u64_max : r;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    return __builtin_mul_overflow(a, b, &r) ? u64_max : r;
}

} // namespace

std::vector<std::string> enumeration_atoms(std::size_t atom_count) {
    if (atom_count > max_enumeration_atoms)
        throw resource_limit_error(
            "enumeration supports at most " +
                std::to_string(max_enumeration_atoms) + " atoms, requested " +
                std::to_string(atom_count),
            max_enumeration_atoms, atom_count);
    std::vector<std::string> names;
    names.reserve(atom_count);
    for (std::size_t i = 0; i < atom_count; ++i)
        names.emplace_back(atom_pool[i]);
    return names;
}

std::uint64_t count_formulas(std::size_t atom_count, std::size_t max_depth) {
    std::uint64_t c = atom_count + 1;
    for (std::size_t d = 0; d < max_depth; ++d)
        c = sat_add(atom_count + 1, sat_add(c, sat_mul(3, sat_mul(c, c))));
    return c;
}

std::vector<formula> enumerate_formulas(std::size_t atom_count,
                                        std::size_t max_depth,
                                        std::size_t cap) {
    std::uint64_t total = count_formulas(atom_count, max_depth);
    if (total > cap)
        throw resource_limit_error(
            "enumeration of " + std::to_string(atom_count) + " atoms to depth " +
                std::to_string(max_depth) + " would produce " +
                (total == u64_max ? std::string(">= 2^64")
                                  : std::to_string(total)) +
                " formulas, cap is " + std::to_string(cap),
            cap, total == u64_max ? std::numeric_limits<std::size_t>::max()
                                  : static_cast<std::size_t>(total));

    std::vector<formula> out;
    out.reserve(static_cast<std::size_t>(total));
    for (const std::string& name : enumeration_atoms(atom_count))
        out.push_back(formula::atom(name));
    out.push_back(formula::falsum());

    std::size_t layer_begin = 0; // first index of exact depth d-1
    for (std::size_t d = 1; d <= max_depth; ++d) {
        std::size_t prefix_end = out.size(); // all formulas of depth < d
        for (std::size_t i = layer_begin; i < prefix_end; ++i)
            out.push_back(formula::negation(out[i]));
        auto emit_pairs = [&](connective k) {
            for (std::size_t i = 0; i < prefix_end; ++i) {
                for (std::size_t j = 0; j < prefix_end; ++j) {
                    if (i < layer_begin && j < layer_begin)
                        continue; // both operands too shallow for depth d
                    switch (k) {
                    case connective::conjunction:
                        out.push_back(formula::conjunction(out[i], out[j]));
                        break;
                    case connective::disjunction:
                        out.push_back(formula::disjunction(out[i], out[j]));
                        break;
                    default:
                        out.push_back(formula::implication(out[i], out[j]));
                        break;
                    }
                }
            }
        };
        emit_pairs(connective::conjunction);
        emit_pairs(connective::disjunction);
        emit_pairs(connective::implication);
        layer_begin = prefix_end;
    }
    return out;
}

std::uint64_t count_side_subsets(std::size_t stock_size, std::size_t per_side) {
    std::uint64_t total = 0;
    std::uint64_t choose = 1; // C(stock_size, k)
    for (std::size_t k = 0; k <= per_side; ++k) {
        total = sat_add(total, choose);
        if (k >= stock_size)
            break;
        // C(n, k+1) = C(n, k) * (n - k) / (k + 1), exact at every step
        choose = sat_mul(choose, stock_size - k) / (k + 1);
    }
    return total;
}

sequent make_sequent(const std::vector<formula>& stock,
                     std::span<const std::size_t> left,
                     std::span<const std::size_t> right) {
    std::vector<formula> l, r;
    l.reserve(left.size());
    r.reserve(right.size());
    for (std::size_t i : left)
        l.push_back(stock[i]);
    for (std::size_t i : right)
        r.push_back(stock[i]);
    return sequent(std::move(l), std::move(r));
}

} // namespace paralogic
