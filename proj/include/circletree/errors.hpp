#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace circletree {

// Violated precondition or malformed input. The CLI maps this to exit 1.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Broken internal invariant (rotation-system bug, impossible reduction state,
// catalog mismatch). The CLI maps this to exit 2.
struct InvariantError : std::logic_error {
  explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

// Catalog derivation did not reproduce the expected class structure.
struct CatalogError : InvariantError {
  explicit CatalogError(const std::string& what) : InvariantError(what) {}
};

// Unparseable text input; `pos` is the byte offset of the offending character.
struct ParseError : DomainError {
  std::size_t pos;
  ParseError(std::size_t pos_, const std::string& what)
      : DomainError(what + " (at position " + std::to_string(pos_) + ")"), pos(pos_) {}
};

}  // namespace circletree
