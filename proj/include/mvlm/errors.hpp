#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mvlm {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed structure: unknown component, foreign context, bad edge.
class StructuralError : public Error {
public:
  using Error::Error;
};

/// Valid objects combined in a way the operation does not accept
/// (mismatched state spaces, edge not present, and the like).
class DomainError : public Error {
public:
  using Error::Error;
};

/// An operation precondition was violated by the caller.
class ContractError : public Error {
public:
  using Error::Error;
};

/// A configured size cap would be exceeded.
class CapacityError : public Error {
public:
  CapacityError(std::string cap, std::uint64_t limit, std::string detail)
      : Error(detail + " exceeds the " + cap + " cap " + std::to_string(limit)),
        cap_(std::move(cap)),
        limit_(limit) {}

  const std::string& cap() const { return cap_; }
  std::uint64_t limit() const { return limit_; }

private:
  std::string cap_;
  std::uint64_t limit_;
};

/// Model text rejected; positions are 1-based.
class ParseError : public Error {
public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace mvlm
