#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace paralogic {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when the concrete syntax cannot be parsed.  Carries the byte
/// offset of the offending token and the set of token descriptions that
/// would have been accepted at that point.
class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t offset,
                std::vector<std::string> expected)
        : error(what), offset_(offset), expected_(std::move(expected)) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

/// Raised when an operation would exceed a configured resource bound
/// (atom-count caps, formula-stock caps, and the like).
class resource_limit_error : public error {
public:
    resource_limit_error(const std::string& what, std::size_t bound,
                         std::size_t requested)
        : error(what), bound_(bound), requested_(requested) {}

    std::size_t bound() const noexcept { return bound_; }
    std::size_t requested() const noexcept { return requested_; }

private:
    std::size_t bound_;
    std::size_t requested_;
};

/// Raised by evaluation when a valuation does not cover an atom of the
/// formula being evaluated.
class missing_atom_error : public error {
public:
    explicit missing_atom_error(const std::string& atom)
        : error("valuation does not assign a value to atom '" + atom + "'"),
          atom_(atom) {}

    const std::string& atom() const noexcept { return atom_; }

private:
    std::string atom_;
};

/// Raised by the literal-renaming translation when an input atom already
/// uses the reserved suffix for renamed negative literals.
class atom_collision_error : public error {
public:
    explicit atom_collision_error(const std::string& atom)
        : error("atom '" + atom + "' collides with the reserved suffix for renamed literals"),
          atom_(atom) {}

    const std::string& atom() const noexcept { return atom_; }

private:
    std::string atom_;
};

/// Raised when an operation defined only on atomic sequents (closure
/// detection, countermodel extraction) is handed a reducible one.
class non_atomic_sequent_error : public error {
public:
    explicit non_atomic_sequent_error(const std::string& what) : error(what) {}
};

} // namespace paralogic
