#include "mvm/families.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace mvm {

namespace {

Multiset row3(Count a, Count b, Count c) {
  return Multiset(std::vector<Count>{a, b, c});
}

// exact a*b/d, insisting on divisibility; `what` names the derived entry
Count mul_div_exact(Count a, Count b, Count d, const char* what) {
  const Count num = checked_mul(a, b);
  if (num % d != 0) {
    throw std::invalid_argument(std::string(what) + " = " +
                                std::to_string(a) + "*" + std::to_string(b) +
                                "/" + std::to_string(d) +
                                " is not an integer");
  }
  return num / d;
}

Count non_negative(Count v, const char* what) {
  if (v < 0) {
    throw std::invalid_argument(std::string(what) + " = " +
                                std::to_string(v) + " is negative");
  }
  return v;
}

}  // namespace

MValTable make_xn(Count n) {
  if (n < 3) {
    throw std::invalid_argument("X_n needs n >= 3, got " + std::to_string(n));
  }
  return MValTable::order3(n, row3(1, 0, n - 1), row3(1, 1, n - 2),
                           row3(1, 1, n - 2), row3(1, 2, n - 3));
}

MValTable make_borovik(Count order) {
  if (order < 3) {
    throw std::invalid_argument("residue magma needs order >= 3, got " +
                                std::to_string(order));
  }
  const std::size_t k = static_cast<std::size_t>(order);
  std::vector<Multiset> grid;
  grid.reserve(k * k);
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      std::vector<Count> counts(k, 0);
      counts[(x + y) % k] += 1;
      counts[(x >= y ? x - y : y - x) % k] += 1;
      grid.push_back(Multiset(std::move(counts)));
    }
  }
  return MValTable(2, k, std::move(grid));
}

std::vector<MValTable> single_valued_order3() {
  auto t = [](Count a0, Count a1, Count a2, Count b0, Count b1, Count b2,
              Count d0, Count d1, Count d2, Count c0, Count c1, Count c2) {
    return MValTable::order3(1, row3(a0, a1, a2), row3(b0, b1, b2),
                             row3(d0, d1, d2), row3(c0, c1, c2));
  };
  return {
      t(1, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1),
      t(0, 0, 1, 1, 0, 0, 1, 0, 0, 0, 1, 0),
      t(0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1),
      t(0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 1, 0),
      t(0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1),
      t(0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1),
      t(0, 1, 0, 0, 0, 1, 0, 1, 0, 0, 0, 1),
  };
}

std::vector<Series> single_valued_order3_tags() {
  return {Series::B1, Series::B2, Series::B2, Series::B4,
          Series::B4, Series::B5, Series::B6};
}

MValTable make_b2tilde_4k3(Count k) {
  if (k < 1) {
    throw std::invalid_argument("the 4k+3 family needs k >= 1, got " +
                                std::to_string(k));
  }
  const Count n = 2 * k + 1;
  return MValTable::order3(n, row3(0, k, k + 1), row3(1, k, k),
                           row3(1, k, k), row3(0, k + 1, k));
}

MValTable make_star_form(const StarFormParams& p, StarForm which) {
  if (p.n < 1) {
    throw std::invalid_argument("star form needs n >= 1, got " +
                                std::to_string(p.n));
  }
  non_negative(p.a1, "a1");
  switch (which) {
    case StarForm::b1_tilde: {
      if (p.m1 <= 0 || p.m2 <= 0) {
        throw std::invalid_argument(
            "the ~B1 form needs positive unit multiplicities m1, m2");
      }
      const Count rest1 = non_negative(p.n - p.m1 - p.a1, "n - m1 - a1");
      // a12 = r*(n - m1 - a1) and a2 = r*(n - a12), with r = m2/m1 exact
      const Count a12 =
          non_negative(mul_div_exact(p.m2, rest1, p.m1, "a12"), "a12");
      const Count a2 = non_negative(
          mul_div_exact(p.m2, checked_sub(p.n, a12), p.m1, "a2"), "a2");
      const Count rest2 = non_negative(p.n - a12, "n - a12");
      const Count rest4 = non_negative(p.n - p.m2 - a2, "n - m2 - a2");
      return MValTable::order3(p.n, row3(p.m1, p.a1, rest1),
                               row3(0, a12, rest2), row3(0, a12, rest2),
                               row3(p.m2, a2, rest4));
    }
    case StarForm::b2_tilde: {
      const Count a = p.a1;
      const Count b0 = non_negative(p.n - 2 * a, "n - 2a");
      const Count rest = non_negative(p.n - a, "n - a");
      return MValTable::order3(p.n, row3(0, a, rest), row3(b0, a, a),
                               row3(b0, a, a), row3(0, rest, a));
    }
  }
  throw std::invalid_argument("unknown star form");
}

}  // namespace mvm
