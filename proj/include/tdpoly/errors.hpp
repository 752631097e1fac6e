#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tdpoly {

/// Malformed graph input or surgery request (self-loop, bad index, missing edge).
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exponential routine was asked to run above its configured size limit.
class GuardExceeded : public std::runtime_error {
 public:
  GuardExceeded(const std::string& what, std::size_t order, std::size_t guard)
      : std::runtime_error(what + ": order " + std::to_string(order) +
                           " exceeds guard " + std::to_string(guard)),
        order_(order),
        guard_(guard) {}

  std::size_t order() const noexcept { return order_; }
  std::size_t guard() const noexcept { return guard_; }

 private:
  std::size_t order_;
  std::size_t guard_;
};

/// The pivot vertices do not satisfy the hypotheses of the requested identity.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// gamma_t requested for a graph with an isolated vertex.
class NoTotalDominatingSet : public std::domain_error {
 public:
  NoTotalDominatingSet() : std::domain_error("no total dominating set") {}
};

/// Family parameters outside the range where the construction or formula is defined.
class FamilyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace tdpoly
