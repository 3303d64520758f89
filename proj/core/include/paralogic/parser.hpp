#pragma once

// Concrete syntax:
//
//   formula  :=  impl
//   impl     :=  disj ('->' impl)?            right-associative
//   disj     :=  conj ('|' conj)*             left-associative
//   conj     :=  neg ('&' neg)*               left-associative
//   neg      :=  '~' neg | primary
//   primary  :=  atom | '#' | '(' formula ')'
//   sequent  :=  side '|-' side
//   side     :=  <empty> | formula (',' formula)*
//
// Atoms match [a-z][a-z0-9_]*; whitespace separates tokens and is
// otherwise ignored.  '|' followed immediately by '-' always reads as the
// turnstile.  Failures raise parse_error with the byte offset of the
// offending token and the tokens acceptable in its place.

#include "paralogic/errors.hpp"
#include "paralogic/formula.hpp"

#include <string_view>

namespace paralogic {

/// Parse a single formula; the whole input must be consumed.
formula parse_formula(std::string_view text);

/// Parse a sequent of the form "A1, ..., An |- B1, ..., Bm"; either side
/// may be empty.  The whole input must be consumed.
sequent parse_sequent(std::string_view text);

} // namespace paralogic
