#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace longcycle {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the caller's input does not hold.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A search ran out of its node-expansion budget. The search never returns an
/// approximate answer; the best value seen so far travels with the exception.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::int64_t nodes, int best_lower_bound)
      : Error(what), nodes_(nodes), best_(best_lower_bound) {}
  std::int64_t nodes() const { return nodes_; }
  int best_lower_bound() const { return best_; }

 private:
  std::int64_t nodes_;
  int best_;
};

}  // namespace longcycle
