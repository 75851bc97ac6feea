#include "doctest.h"

#include <limits>
#include <stdexcept>

#include "mvm/multiset.hpp"

using mvm::Count;
using mvm::Multiset;

namespace {
constexpr Count kMax = std::numeric_limits<Count>::max();
constexpr Count kMin = std::numeric_limits<Count>::min();
}  // namespace

TEST_CASE("checked arithmetic refuses to wrap") {
  CHECK(mvm::checked_add(2, 3) == 5);
  CHECK(mvm::checked_sub(2, 3) == -1);
  CHECK(mvm::checked_mul(-4, 5) == -20);
  CHECK_THROWS_AS(mvm::checked_add(kMax, 1), std::overflow_error);
  CHECK_THROWS_AS(mvm::checked_sub(kMin, 1), std::overflow_error);
  CHECK_THROWS_AS(mvm::checked_mul(kMax / 2, 3), std::overflow_error);
  CHECK(mvm::checked_mul(kMax / 2, 2) == kMax - 1);
}

TEST_CASE("multiset construction and lookup") {
  const Multiset m(std::vector<Count>{1, 0, 2});
  CHECK(m.width() == 3);
  CHECK(m.size() == 3);
  CHECK(m[0] == 1);
  CHECK(m[2] == 2);
  CHECK(m.contains(0));
  CHECK(!m.contains(1));
  CHECK_THROWS_AS(m.count(3), std::invalid_argument);

  const Multiset empty(3);
  CHECK(empty.size() == 0);
  CHECK(empty.width() == 3);

  CHECK_THROWS_AS(Multiset(std::vector<Count>{1, -1, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Multiset(std::vector<Count>{}), std::invalid_argument);
  CHECK_THROWS_AS(Multiset(0), std::invalid_argument);
}

TEST_CASE("uniform and singleton") {
  CHECK(Multiset::uniform(3, 1, 4) == Multiset(std::vector<Count>{0, 4, 0}));
  CHECK(Multiset::singleton(3, 2) == Multiset(std::vector<Count>{0, 0, 1}));
  CHECK_THROWS_AS(Multiset::uniform(3, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(Multiset::uniform(3, 0, -1), std::invalid_argument);
}

TEST_CASE("addition and scaling") {
  const Multiset a(std::vector<Count>{1, 0, 2});
  const Multiset b(std::vector<Count>{0, 3, 1});
  CHECK(a + b == Multiset(std::vector<Count>{1, 3, 3}));
  CHECK(a.plus_scaled(b, 2) == Multiset(std::vector<Count>{1, 6, 4}));
  CHECK(a.plus_scaled(b, 0) == a);
  CHECK(a.scaled(3) == Multiset(std::vector<Count>{3, 0, 6}));
  CHECK_THROWS_AS(a.plus_scaled(Multiset(2), 1), std::invalid_argument);
  CHECK_THROWS_AS(a.plus_scaled(b, -1), std::invalid_argument);
  CHECK_THROWS_AS(a.scaled(-2), std::invalid_argument);

  const Multiset huge(std::vector<Count>{kMax / 2, 0, 0});
  CHECK_THROWS_AS(huge + huge + huge, std::overflow_error);
  CHECK_THROWS_AS(huge.scaled(3), std::overflow_error);
  CHECK_THROWS_AS(huge.plus_scaled(huge, kMax), std::overflow_error);
}

TEST_CASE("ordering is lexicographic on multiplicities") {
  const Multiset a(std::vector<Count>{0, 2, 1});
  const Multiset b(std::vector<Count>{1, 0, 2});
  CHECK(a < b);
  CHECK(a == Multiset(std::vector<Count>{0, 2, 1}));
  CHECK(b > a);
}
