#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mvm/table.hpp"

namespace mvm {

// Inv(x) = {y : x*y contains e and y*x contains e} for every element.
// All predicates below presume the table is a monoid (unit law and
// associativity hold); they are total functions regardless.
struct InverseReport {
  std::vector<std::vector<std::size_t>> inv;  // inv[x], sorted

  bool group() const;            // every Inv(x) non-empty
  Count inverse_map_count() const;  // number of maps inv with inv(x) in Inv(x)
};

InverseReport inverse_sets(const MValTable& t);

bool is_group(const MValTable& t);
bool is_commutative(const MValTable& t);

// Inv(x) is a singleton for every x
bool is_reversible(const MValTable& t);

// Inv(x) = {x} for every x
bool is_involutive(const MValTable& t);

// A unit-fixing involution inv such that
//   (i)  x*y contains e  iff  y = inv(x),
//   (ii) m(x) = m(inv(x)) where m(x) is the multiplicity of e in x*inv(x),
//   (iii) inv(x*y) = inv(y)*inv(x) elementwise.
struct StarWitness {
  std::vector<std::size_t> involution;
  std::vector<Count> unit_multiplicities;  // m(x) per element
};

// Searches unit-fixing involutions in lexicographic order (identity first,
// then the swap at order 3); none exists unless the table is a group.
std::optional<StarWitness> star_involutive_witness(const MValTable& t);

enum class CosetStatus { yes, no, unknown };

const char* to_string(CosetStatus s);

struct CosetReport {
  CosetStatus status;
  std::string reason;
};

// Decides coset realizability where a criterion is known: tables that are
// not star-involutive are No; a star-involutive table whose primitive form
// is ((0,k,k+1),(1,k,k),(1,k,k),(0,k+1,k)) at valuedness 2k+1 is Yes
// exactly when 4k+3 is a prime power; anything else is Unknown.
CosetReport coset_status(const MValTable& t);

// m = p^a with p prime, a >= 1; false for 1, error for m <= 0
bool is_prime_power(Count m);

}  // namespace mvm
