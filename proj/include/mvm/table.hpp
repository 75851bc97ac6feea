#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "mvm/multiset.hpp"

namespace mvm {

// Multiplication table of an n-valued magma on {x_0, ..., x_{k-1}}: the
// product x_i * x_j is a size-n multiset over the elements, stored as a
// multiplicity vector. Element 0 plays the role of the unit e; whether the
// unit law actually holds is checked separately (check_unit), so tables
// parsed with the unit check disabled are representable.
class MValTable {
 public:
  static constexpr std::size_t unit = 0;

  // grid is row-major, k*k entries, each a width-k multiset of size n
  MValTable(Count n, std::size_t order, std::vector<Multiset> grid);

  // order-3 table with unit row and column filled in; the four free
  // entries are x1*x1, x1*x2, x2*x1, x2*x2
  static MValTable order3(Count n, const Multiset& x11, const Multiset& x12,
                          const Multiset& x21, const Multiset& x22);

  Count valuedness() const { return n_; }
  std::size_t order() const { return k_; }

  const Multiset& entry(std::size_t i, std::size_t j) const;

  bool operator==(const MValTable&) const = default;
  auto operator<=>(const MValTable&) const = default;

 private:
  Count n_;
  std::size_t k_;
  std::vector<Multiset> grid_;
};

// an entry (row, col) where the unit law e*x = x*e = n*x fails
struct UnitViolation {
  std::size_t row;
  std::size_t col;
  Multiset actual;

  bool operator==(const UnitViolation&) const = default;
};

// a triple where (x*y)*z != x*(y*z); both sides are n^2-multisets
struct Violation {
  std::array<std::size_t, 3> triple;
  Multiset lhs;
  Multiset rhs;

  bool operator==(const Violation&) const = default;
};

// The product extended to multisets: sum over u in a, v in b of
// a[u]*b[v]*(x_u * x_v). Result has size n * |a| * |b|.
Multiset extend_product(const MValTable& t, const Multiset& a,
                        const Multiset& b);

// all entries in the unit row/column that violate e*x = x*e = n*x
std::vector<UnitViolation> check_unit(const MValTable& t);

// Checks [x*w : w in y*z] = [w*z : w in x*y] for every triple, in
// lexicographic order; returns the first violation, if any.
std::optional<Violation> check_associativity(const MValTable& t);

// scales every multiplicity by m, giving an (m*n)-valued table; m >= 1
MValTable diagonal(const MValTable& t, Count m);

// The gcd-reduced form of a table: dividing n and all multiplicities by
// their common gcd. Two tables are proportional exactly when their
// primitive forms coincide.
struct PrimitiveForm {
  MValTable form;

  Count valuedness() const { return form.valuedness(); }
  std::size_t order() const { return form.order(); }

  bool operator==(const PrimitiveForm&) const = default;
  // ordered by valuedness, then order, then the grid row-major
  auto operator<=>(const PrimitiveForm&) const = default;
};

PrimitiveForm normalize(const MValTable& t);

}  // namespace mvm
