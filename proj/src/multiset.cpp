#include "mvm/multiset.hpp"

#include <stdexcept>
#include <string>

namespace mvm {

Count checked_add(Count a, Count b) {
  Count out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("count addition overflows: " +
                              std::to_string(a) + " + " + std::to_string(b));
  }
  return out;
}

Count checked_sub(Count a, Count b) {
  Count out;
  if (__builtin_sub_overflow(a, b, &out)) {
    throw std::overflow_error("count subtraction overflows: " +
                              std::to_string(a) + " - " + std::to_string(b));
  }
  return out;
}

Count checked_mul(Count a, Count b) {
  Count out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("count multiplication overflows: " +
                              std::to_string(a) + " * " + std::to_string(b));
  }
  return out;
}

Multiset::Multiset(std::size_t width) : counts_(width, 0) {
  if (width == 0) {
    throw std::invalid_argument("multiset width must be positive");
  }
}

Multiset::Multiset(std::vector<Count> counts) : counts_(std::move(counts)) {
  if (counts_.empty()) {
    throw std::invalid_argument("multiset width must be positive");
  }
  for (Count c : counts_) {
    if (c < 0) {
      throw std::invalid_argument("negative multiplicity " +
                                  std::to_string(c));
    }
  }
}

Multiset Multiset::uniform(std::size_t width, std::size_t elem, Count copies) {
  if (elem >= width) {
    throw std::invalid_argument("element index " + std::to_string(elem) +
                                " out of range for width " +
                                std::to_string(width));
  }
  if (copies < 0) {
    throw std::invalid_argument("negative multiplicity " +
                                std::to_string(copies));
  }
  Multiset out(width);
  out.counts_[elem] = copies;
  return out;
}

Count Multiset::count(std::size_t elem) const {
  if (elem >= counts_.size()) {
    throw std::invalid_argument("element index " + std::to_string(elem) +
                                " out of range for width " +
                                std::to_string(counts_.size()));
  }
  return counts_[elem];
}

Count Multiset::size() const {
  Count total = 0;
  for (Count c : counts_) total = checked_add(total, c);
  return total;
}

Multiset Multiset::plus_scaled(const Multiset& other, Count scale) const {
  if (other.width() != width()) {
    throw std::invalid_argument("multiset width mismatch: " +
                                std::to_string(width()) + " vs " +
                                std::to_string(other.width()));
  }
  if (scale < 0) {
    throw std::invalid_argument("negative scale " + std::to_string(scale));
  }
  Multiset out = *this;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    out.counts_[i] =
        checked_add(out.counts_[i], checked_mul(other.counts_[i], scale));
  }
  return out;
}

Multiset Multiset::scaled(Count m) const {
  if (m < 0) {
    throw std::invalid_argument("negative scale " + std::to_string(m));
  }
  Multiset out = *this;
  for (Count& c : out.counts_) c = checked_mul(c, m);
  return out;
}

}  // namespace mvm
