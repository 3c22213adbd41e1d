#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "belcond/types.hpp"

namespace belcond {

// An ordered frame of discernment.  Element order is fixed at construction
// and defines both the bit layout of Subset masks and the canonical spelling
// of subset keys ("x z" lists members in frame order, space-separated).
class Frame {
 public:
  static constexpr int kDefaultCap = 12;

  explicit Frame(std::vector<std::string> names, int cap = kDefaultCap);

  int size() const { return static_cast<int>(names_.size()); }
  std::size_t subset_count() const { return std::size_t{1} << size(); }
  Subset full() const { return static_cast<Subset>(subset_count() - 1); }
  Subset complement(Subset a) const { return full() & ~a; }
  Subset singleton(int i) const { return Subset{1} << i; }

  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }

  // Canonical key for a subset; the empty set yields "".
  std::string subset_key(Subset a) const;
  // Parses a space-separated list of element names (any order, duplicates
  // collapse).  Throws ParseError on an unknown name.
  Subset subset_from_key(const std::string& key) const;

  bool operator==(const Frame& other) const { return names_ == other.names_; }
  bool operator!=(const Frame& other) const { return !(*this == other); }

 private:
  std::vector<std::string> names_;
};

// Throws FrameMismatch unless both frames are identical.
void require_same_frame(const Frame& a, const Frame& b, const char* where);

}  // namespace belcond
