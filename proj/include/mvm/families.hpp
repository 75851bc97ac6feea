#pragma once

#include <vector>

#include "mvm/classify.hpp"
#include "mvm/table.hpp"

namespace mvm {

// X_n on {e, x1, x2}: x1*x1 = (1,0,n-1), x1*x2 = x2*x1 = (1,1,n-2),
// x2*x2 = (1,2,n-3). A commutative non-reversible group for n >= 3.
MValTable make_xn(Count n);

// The 2-valued magma on the residues {0, ..., order-1} with
// x*y = [x+y mod order, |x-y| mod order] and unit 0. Satisfies the unit
// law but is not associative for order >= 3.
MValTable make_borovik(Count order);

// the seven single-valued monoids of order 3, pairwise non-isomorphic
std::vector<MValTable> single_valued_order3();

// their series, in the same order: B1, B2, B2, B4, B4, B5, B6
std::vector<Series> single_valued_order3_tags();

// The (2k+1)-valued group ((0,k,k+1),(1,k,k),(1,k,k),(0,k+1,k)); it is
// star-involutive via the swap and a coset group iff 4k+3 is a prime
// power. Requires k >= 1.
MValTable make_b2tilde_4k3(Count k);

// Templates for star-involutive groups. The ~B1 form is determined by
// m1 = m(x1), m2 = m(x2), a1 = a(x1) and n, with the remaining entries
// derived through the exact ratio r = m2/m1:
//   rows (m1, a1, n-m1-a1), (0, a12, n-a12) twice, (m2, a2, n-m2-a2)
//   where a12 = r*(n-m1-a1) and a2 = r*(n-a12).
// The ~B2 form is determined by a = a(x1) and n alone:
//   rows (0, a, n-a), (n-2a, a, a) twice, (0, n-a, a).
// Neither template guarantees associativity; run check_associativity.
enum class StarForm { b1_tilde, b2_tilde };

struct StarFormParams {
  Count m1 = 0;
  Count m2 = 0;
  Count a1 = 0;  // a(x1); the only parameter besides n for the ~B2 form
  Count n = 0;
};

MValTable make_star_form(const StarFormParams& p, StarForm which);

}  // namespace mvm
