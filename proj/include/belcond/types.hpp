#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace belcond {

// A subset of a frame of discernment, encoded as a bitmask: bit i set means
// the i-th frame element belongs to the subset.  Frames are capped at a few
// dozen elements, so 32 bits are plenty.
using Subset = std::uint32_t;

inline constexpr Subset kEmptySet = 0;

inline int subset_size(Subset s) { return std::popcount(s); }

inline bool subset_contains(Subset outer, Subset inner) {
  return (inner & ~outer) == 0;
}

inline bool intersects(Subset a, Subset b) { return (a & b) != 0; }

// All nonempty subsets of `a`, in ascending bitmask order.
std::vector<Subset> nonempty_subsets_of(Subset a);

namespace tol {
// Equality tolerance for analytic results and normalization checks.
inline constexpr double kAnalytic = 1e-9;
// Tolerance for sampled / iterative numerics.
inline constexpr double kSampled = 1e-6;
// Slack below zero before an entry counts as genuinely negative, and the
// threshold under which a denominator counts as zero.
inline constexpr double kStrict = 1e-12;
}  // namespace tol

// Base class for every domain error raised by the library.  I/O and syntax
// problems use ParseError instead; the CLI maps the two families to distinct
// exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Frames disagree between operands that must share one.
class FrameMismatch : public Error {
 public:
  using Error::Error;
};

// Frame construction failed (empty, too large, duplicate or blank labels).
class BadFrame : public Error {
 public:
  using Error::Error;
};

// Mass vector failed validation (negative entry or broken normalization).
class InvalidMass : public Error {
 public:
  using Error::Error;
};

// An operation that needs a nonempty event received the empty set.
class EmptyEvent : public Error {
 public:
  using Error::Error;
};

// Combination or conditioning left no compatible mass (kappa == 1).
class TotalConflict : public Error {
 public:
  using Error::Error;
};

// Geometric (ratio) conditioning on an event of zero belief.
class ZeroBelief : public Error {
 public:
  using Error::Error;
};

// Moebius inversion of the given set function produced a negative mass.
class NotABeliefFunction : public Error {
 public:
  using Error::Error;
};

// Convex combination weights are negative or do not sum to one.
class WeightMismatch : public Error {
 public:
  using Error::Error;
};

// Requested focal-element count is outside the feasible range.
class BadCount : public Error {
 public:
  using Error::Error;
};

// Input has the wrong frame size / event size for the operation.
class WrongDimensions : public Error {
 public:
  using Error::Error;
};

// A per-event denominator vanished; carries the offending event.
class UndefinedDenominator : public Error {
 public:
  UndefinedDenominator(Subset event, const std::string& what)
      : Error(what), event_(event) {}
  Subset event() const { return event_; }

 private:
  Subset event_;
};

// A conditional required by a combination is undefined at a focal element.
class UndefinedConditional : public Error {
 public:
  UndefinedConditional(Subset event, const std::string& what)
      : Error(what), event_(event) {}
  Subset event() const { return event_; }

 private:
  Subset event_;
};

}  // namespace belcond
