#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cdom {

// A precondition of a graph-theoretic operation does not hold
// (wrong graph class, disconnected input, empty set, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed textual input. `position` is a byte offset for graph6 and a
// 1-based line number for line-oriented formats.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Jacobi iteration did not reach the requested off-diagonal tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace cdom
