#include "mvm/table.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace mvm {

namespace {

std::string pos(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

MValTable::MValTable(Count n, std::size_t order, std::vector<Multiset> grid)
    : n_(n), k_(order), grid_(std::move(grid)) {
  if (n_ < 1) {
    throw std::invalid_argument("valuedness must be >= 1, got " +
                                std::to_string(n_));
  }
  if (k_ < 1) {
    throw std::invalid_argument("order must be >= 1");
  }
  if (grid_.size() != k_ * k_) {
    throw std::invalid_argument("table grid must have " +
                                std::to_string(k_ * k_) + " entries, got " +
                                std::to_string(grid_.size()));
  }
  for (std::size_t i = 0; i < k_; ++i) {
    for (std::size_t j = 0; j < k_; ++j) {
      const Multiset& e = grid_[i * k_ + j];
      if (e.width() != k_) {
        throw std::invalid_argument("entry " + pos(i, j) + " has width " +
                                    std::to_string(e.width()) +
                                    ", expected " + std::to_string(k_));
      }
      if (e.size() != n_) {
        throw std::invalid_argument("entry " + pos(i, j) + " has size " +
                                    std::to_string(e.size()) + ", expected " +
                                    std::to_string(n_));
      }
    }
  }
}

MValTable MValTable::order3(Count n, const Multiset& x11, const Multiset& x12,
                            const Multiset& x21, const Multiset& x22) {
  std::vector<Multiset> grid;
  grid.reserve(9);
  for (std::size_t j = 0; j < 3; ++j) grid.push_back(Multiset::uniform(3, j, n));
  grid.push_back(Multiset::uniform(3, 1, n));
  grid.push_back(x11);
  grid.push_back(x12);
  grid.push_back(Multiset::uniform(3, 2, n));
  grid.push_back(x21);
  grid.push_back(x22);
  return MValTable(n, 3, std::move(grid));
}

const Multiset& MValTable::entry(std::size_t i, std::size_t j) const {
  if (i >= k_ || j >= k_) {
    throw std::invalid_argument("entry index " + pos(i, j) +
                                " out of range for order " +
                                std::to_string(k_));
  }
  return grid_[i * k_ + j];
}

Multiset extend_product(const MValTable& t, const Multiset& a,
                        const Multiset& b) {
  const std::size_t k = t.order();
  if (a.width() != k || b.width() != k) {
    throw std::invalid_argument("multiset width does not match table order " +
                                std::to_string(k));
  }
  Multiset out(k);
  for (std::size_t u = 0; u < k; ++u) {
    if (a[u] == 0) continue;
    for (std::size_t v = 0; v < k; ++v) {
      if (b[v] == 0) continue;
      out = out.plus_scaled(t.entry(u, v), checked_mul(a[u], b[v]));
    }
  }
  return out;
}

std::vector<UnitViolation> check_unit(const MValTable& t) {
  const std::size_t k = t.order();
  std::vector<UnitViolation> out;
  for (std::size_t j = 0; j < k; ++j) {
    Multiset want = Multiset::uniform(k, j, t.valuedness());
    if (t.entry(MValTable::unit, j) != want) {
      out.push_back({MValTable::unit, j, t.entry(MValTable::unit, j)});
    }
    if (j != MValTable::unit && t.entry(j, MValTable::unit) != want) {
      out.push_back({j, MValTable::unit, t.entry(j, MValTable::unit)});
    }
  }
  return out;
}

std::optional<Violation> check_associativity(const MValTable& t) {
  const std::size_t k = t.order();
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      for (std::size_t z = 0; z < k; ++z) {
        Multiset lhs =
            extend_product(t, t.entry(x, y), Multiset::singleton(k, z));
        Multiset rhs =
            extend_product(t, Multiset::singleton(k, x), t.entry(y, z));
        if (lhs != rhs) {
          return Violation{{x, y, z}, std::move(lhs), std::move(rhs)};
        }
      }
    }
  }
  return std::nullopt;
}

MValTable diagonal(const MValTable& t, Count m) {
  if (m < 1) {
    throw std::invalid_argument("diagonal factor must be >= 1, got " +
                                std::to_string(m));
  }
  const std::size_t k = t.order();
  std::vector<Multiset> grid;
  grid.reserve(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      grid.push_back(t.entry(i, j).scaled(m));
    }
  }
  return MValTable(checked_mul(t.valuedness(), m), k, std::move(grid));
}

PrimitiveForm normalize(const MValTable& t) {
  const std::size_t k = t.order();
  Count g = t.valuedness();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      for (Count c : t.entry(i, j).counts()) g = std::gcd(g, c);
    }
  }
  std::vector<Multiset> grid;
  grid.reserve(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<Count> counts = t.entry(i, j).counts();
      for (Count& c : counts) c /= g;
      grid.push_back(Multiset(std::move(counts)));
    }
  }
  return PrimitiveForm{MValTable(t.valuedness() / g, k, std::move(grid))};
}

}  // namespace mvm
