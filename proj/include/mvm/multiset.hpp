#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace mvm {

using Count = std::int64_t;

// Exact arithmetic: wrap-around is a bug, not a feature. These throw
// std::overflow_error instead of overflowing silently.
Count checked_add(Count a, Count b);
Count checked_sub(Count a, Count b);
Count checked_mul(Count a, Count b);

// A multiset over the elements {0, ..., width-1}, stored as a vector of
// multiplicities. Immutable value type: all operations return new values.
class Multiset {
 public:
  // empty multiset over `width` elements
  explicit Multiset(std::size_t width);

  // from a multiplicity vector; counts must be non-negative
  explicit Multiset(std::vector<Count> counts);

  // copies * {elem}
  static Multiset uniform(std::size_t width, std::size_t elem, Count copies);
  static Multiset singleton(std::size_t width, std::size_t elem) {
    return uniform(width, elem, 1);
  }

  std::size_t width() const { return counts_.size(); }
  Count count(std::size_t elem) const;
  Count operator[](std::size_t elem) const { return count(elem); }

  // total multiplicity
  Count size() const;

  bool contains(std::size_t elem) const { return count(elem) > 0; }

  // this + scale * other; widths must agree, scale must be non-negative
  Multiset plus_scaled(const Multiset& other, Count scale) const;
  Multiset operator+(const Multiset& other) const {
    return plus_scaled(other, 1);
  }
  Multiset scaled(Count m) const;

  const std::vector<Count>& counts() const { return counts_; }

  // equality and lexicographic order on the multiplicity vector
  bool operator==(const Multiset&) const = default;
  auto operator<=>(const Multiset&) const = default;

 private:
  std::vector<Count> counts_;
};

}  // namespace mvm
