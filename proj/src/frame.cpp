#include "belcond/frame.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace belcond {

std::vector<Subset> nonempty_subsets_of(Subset a) {
  std::vector<Subset> out;
  out.reserve((std::size_t{1} << subset_size(a)) - 1);
  // (s - a) & a steps through the submasks of `a` in ascending order.
  for (Subset s = (a & (~a + 1)); s != 0; s = (s - a) & a) {
    out.push_back(s);
    if (s == a) break;
  }
  return out;
}

Frame::Frame(std::vector<std::string> names, int cap) : names_(std::move(names)) {
  if (cap < 1 || cap > 31) throw BadFrame("frame cap must be between 1 and 31");
  if (names_.empty()) throw BadFrame("frame needs at least one element");
  if (static_cast<int>(names_.size()) > cap) {
    throw BadFrame("frame has " + std::to_string(names_.size()) +
                   " elements, cap is " + std::to_string(cap));
  }
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw BadFrame("frame element labels must be nonempty");
    if (n.find(' ') != std::string::npos) {
      throw BadFrame("frame element label '" + n + "' may not contain spaces");
    }
    if (!seen.insert(n).second) {
      throw BadFrame("duplicate frame element label '" + n + "'");
    }
  }
}

std::string Frame::subset_key(Subset a) const {
  std::string out;
  for (int i = 0; i < size(); ++i) {
    if (a & singleton(i)) {
      if (!out.empty()) out += ' ';
      out += names_[i];
    }
  }
  return out;
}

Subset Frame::subset_from_key(const std::string& key) const {
  Subset out = kEmptySet;
  std::istringstream in(key);
  std::string word;
  while (in >> word) {
    auto it = std::find(names_.begin(), names_.end(), word);
    if (it == names_.end()) {
      throw ParseError("unknown frame element '" + word + "' in subset key '" +
                       key + "'");
    }
    out |= singleton(static_cast<int>(it - names_.begin()));
  }
  return out;
}

void require_same_frame(const Frame& a, const Frame& b, const char* where) {
  if (a != b) {
    throw FrameMismatch(std::string(where) + ": operands use different frames");
  }
}

}  // namespace belcond
