#pragma once

// Printing back to the concrete syntax with minimal parentheses.  The
// printer and parser are mutually inverse: parse(print(f)) == f for every
// formula, and print(parse(t)) normalizes whitespace and redundant
// parentheses in t.

#include "paralogic/formula.hpp"

#include <iosfwd>
#include <string>

namespace paralogic {

std::string to_string(const formula& f);

/// "A1, A2 |- B1"; an empty side prints as nothing, so the empty sequent
/// prints as "|-".
std::string to_string(const sequent& s);

std::ostream& operator<<(std::ostream& os, const formula& f);
std::ostream& operator<<(std::ostream& os, const sequent& s);

} // namespace paralogic
