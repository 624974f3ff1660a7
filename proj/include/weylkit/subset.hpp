#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace weylkit {

// Subset of the simple-reflection labels {0, ..., rank-1}, stored as a bitmask.
// Labels are 0-based internally; the CLI and reports use 1-based "s1 s2 ..." syntax.
class SimpleSubset {
 public:
  SimpleSubset() = default;
  explicit SimpleSubset(std::uint32_t bits) : bits_(bits) {}
  static SimpleSubset full(int rank) { return SimpleSubset((1u << rank) - 1); }
  static SimpleSubset of(std::initializer_list<int> labels) {
    std::uint32_t b = 0;
    for (int s : labels) b |= (1u << s);
    return SimpleSubset(b);
  }

  std::uint32_t bits() const { return bits_; }
  bool contains(int s) const { return (bits_ >> s) & 1u; }
  bool empty() const { return bits_ == 0; }
  int size() const { return __builtin_popcount(bits_); }
  bool subset_of(SimpleSubset other) const { return (bits_ & ~other.bits_) == 0; }

  SimpleSubset with(int s) const { return SimpleSubset(bits_ | (1u << s)); }
  SimpleSubset without(int s) const { return SimpleSubset(bits_ & ~(1u << s)); }
  SimpleSubset intersect(SimpleSubset o) const { return SimpleSubset(bits_ & o.bits_); }
  SimpleSubset unite(SimpleSubset o) const { return SimpleSubset(bits_ | o.bits_); }

  std::vector<int> members() const {
    std::vector<int> out;
    for (int s = 0; s < 32; ++s)
      if (contains(s)) out.push_back(s);
    return out;
  }

  bool operator==(const SimpleSubset&) const = default;
  bool operator<(const SimpleSubset& o) const { return bits_ < o.bits_; }

  // "s1 s3" style label list; "-" for the empty set.
  std::string str() const {
    if (bits_ == 0) return "-";
    std::string out;
    for (int s : members()) {
      if (!out.empty()) out += ' ';
      out += 's' + std::to_string(s + 1);
    }
    return out;
  }

 private:
  std::uint32_t bits_ = 0;
};

// All subsets of `universe`, in increasing bitmask order.
inline std::vector<SimpleSubset> all_subsets(SimpleSubset universe) {
  std::vector<SimpleSubset> out;
  std::uint32_t u = universe.bits();
  // classic subset-of-mask enumeration
  std::uint32_t s = 0;
  while (true) {
    out.push_back(SimpleSubset(s));
    if (s == u) break;
    s = (s - u) & u;
  }
  return out;
}

}  // namespace weylkit
