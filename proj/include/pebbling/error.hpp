#pragma once

#include <stdexcept>
#include <string>

namespace pebbling {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define PEBBLING_DEFINE_ERROR(Name)          \
  class Name : public Error {                \
   public:                                   \
    using Error::Error;                      \
  }

// Graph construction.
PEBBLING_DEFINE_ERROR(InvalidGraph);
// Vectors or move lists index a different vertex set than the graph.
PEBBLING_DEFINE_ERROR(DimensionMismatch);
// A move list has a positive count on a pair that is not an edge.
PEBBLING_DEFINE_ERROR(EdgeViolation);
// Negative count in a non-extended configuration or a demand.
PEBBLING_DEFINE_ERROR(NegativeCount);
PEBBLING_DEFINE_ERROR(Overflow);
// Search gave up: node or state cap reached. Never means "unsolvable".
PEBBLING_DEFINE_ERROR(BudgetExceeded);
PEBBLING_DEFINE_ERROR(NotASolution);
PEBBLING_DEFINE_ERROR(NotALeaf);
PEBBLING_DEFINE_ERROR(SingletonGraph);
PEBBLING_DEFINE_ERROR(NotATree);
PEBBLING_DEFINE_ERROR(ZeroDemand);
PEBBLING_DEFINE_ERROR(MalformedInstance);
PEBBLING_DEFINE_ERROR(NotACover);

#undef PEBBLING_DEFINE_ERROR

// Text-format error carrying the 1-based line it was raised on (0 if unknown).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace pebbling
