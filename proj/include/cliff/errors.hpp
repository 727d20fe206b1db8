#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cliff {

// Root of every error the library throws. The CLI maps these to exit code 1.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Bad index, bad signature, mismatched operands.
class config_error : public error {
public:
  using error::error;
};

// Input outside an operation's domain (non-monomial grade, GF2 norm, ...).
class domain_error : public error {
public:
  using error::error;
};

// Operand rings or signatures do not agree, or a literal cannot live in the ring.
class ring_error : public error {
public:
  using error::error;
};

// Enumeration or dimension bound exceeded.
class bound_error : public error {
public:
  using error::error;
};

// Eigensolver contract violated (non-normal input, residual too large).
class numeric_error : public error {
public:
  using error::error;
};

class parse_error : public error {
public:
  parse_error(const std::string &msg, std::size_t line, std::size_t column)
      : error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

} // namespace cliff
