#pragma once

// Structured serialization.  Shapes are frozen (documented in the README):
//
//   formula   {"tag":"atom","name":"p"} | {"tag":"falsum"}
//             | {"tag":"not","child":F} | {"tag":"and"|"or"|"implies",
//               "lhs":F,"rhs":F}
//   sequent   {"left":[F...],"right":[F...]}
//   valuation {"p":"b","q":"n"}                 (atom order preserved)
//   table     {"logic":L,"formula":S,"atoms":[...],"rows":[
//               {"inputs":V,"value":"t","designated":true}...]}
//   proof     {"sequent":S,"rule":R,"principal":S,"premises":[...]}
//             | {"sequent":S,"closure":{"kind":K,"witness":S?}}
//
// All output is single-line compact JSON with stable field order.

#include "paralogic/formula.hpp"
#include "paralogic/prover.hpp"
#include "paralogic/semantics.hpp"

#include <string>
#include <string_view>

namespace paralogic {

std::string to_json(const formula& f);
std::string to_json(const sequent& s);
std::string to_json(const valuation& v);
std::string to_json(const truth_table& table);
std::string to_json(const proof_node& n);

/// Inverse of to_json for formulas and sequents; raises parse_error on
/// malformed documents.
formula formula_from_json(std::string_view text);
sequent sequent_from_json(std::string_view text);

} // namespace paralogic
