#pragma once

#include <stdexcept>
#include <string>

namespace tensorwalks {

// Bad input that the caller could have avoided (malformed spec text, bad
// flag values). Maps to CLI exit code 2.
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// A well-formed request that the data model cannot answer, e.g. a
// non-trivial target on a group that only carries invariant data.
// Maps to CLI exit code 3.
class UnsupportedError : public std::logic_error {
 public:
  explicit UnsupportedError(const std::string& what) : std::logic_error(what) {}
};

// Two routes that must agree did not, or a quantity that must be a
// nonnegative integer was not. Never rounded away. Maps to CLI exit code 4.
class ConsistencyError : public std::runtime_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

// Parse failure in the group specification language; carries the byte
// offset of the offending character.
class ParseError : public UsageError {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : UsageError(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace tensorwalks
