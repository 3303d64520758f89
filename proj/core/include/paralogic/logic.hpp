#pragma once

// The four logics, identified by which of the two classical laws they
// keep.  LNC (no gluts) removes the value b from the carrier; LEM (no
// gaps) removes n.  Keeping both yields classical logic, dropping both
// yields the four-valued base logic.

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace paralogic {

enum class logic_id : std::uint8_t { cl, lp, k3, bdl };

inline constexpr std::array<logic_id, 4> all_logics = {
    logic_id::cl, logic_id::lp, logic_id::k3, logic_id::bdl};

/// The two structural laws a logic may enforce.  They drive both the
/// carrier restriction (semantics) and the closure rules (prover).
struct law_flags {
    bool lnc; // law of non-contradiction: carrier excludes b
    bool lem; // law of excluded middle: carrier excludes n

    bool operator==(const law_flags&) const = default;
};

struct logic_spec {
    logic_id id;
    std::string_view name;
    std::string_view description;
    law_flags laws;
};

namespace detail {
inline constexpr std::array<logic_spec, 4> logic_table = {{
    {logic_id::cl, "cl", "classical logic", {true, true}},
    {logic_id::lp, "lp", "paraconsistent logic (gluts)", {false, true}},
    {logic_id::k3, "k3", "paracomplete logic (gaps)", {true, false}},
    {logic_id::bdl, "bdl", "four-valued logic (gluts and gaps)",
     {false, false}},
}};
} // namespace detail

constexpr const logic_spec& logic_for(logic_id id) {
    return detail::logic_table[static_cast<std::size_t>(id)];
}

constexpr std::string_view name_of(logic_id id) { return logic_for(id).name; }

constexpr std::optional<logic_id> parse_logic(std::string_view name) {
    for (logic_id id : all_logics)
        if (logic_for(id).name == name)
            return id;
    return std::nullopt;
}

} // namespace paralogic
