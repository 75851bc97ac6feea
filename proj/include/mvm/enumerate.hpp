#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mvm/classify.hpp"
#include "mvm/predicates.hpp"
#include "mvm/table.hpp"

namespace mvm {

struct EnumOptions {
  unsigned jobs = 1;        // worker threads; output is identical for any value
  bool allow_large = false;  // override the n > 30 capacity refusal
};

// Every order-3 n-valued monoid, in lexicographic order of the four free
// entries (x1*x1, x1*x2, x2*x1, x2*x2). The candidate space has
// C(n+2,2)^4 tables; n > 30 is refused unless allow_large is set.
std::vector<MValTable> enumerate_monoids(Count n, const EnumOptions& opts = {});

struct ClassEntry {
  PrimitiveForm key;
  MValTable representative;          // first member in enumeration order
  std::vector<SeriesMatch> series;   // matches of the representative
  std::vector<Series> orbit_series;  // union of matches over the orbit
  InverseReport inverses;
  bool group = false;
  bool commutative = false;
  bool reversible = false;
  bool involutive = false;
  std::optional<StarWitness> star;
  CosetReport coset;
};

// one entry per isomorphism class, sorted by canonical key
std::vector<ClassEntry> enumerate_classes(Count n, const EnumOptions& opts = {});

// The census of valuedness n plus every classification invariant checked
// against it. Any failed invariant lands in `problems`.
struct EnumReport {
  Count n = 0;
  std::size_t raw_count = 0;
  std::size_t class_count = 0;
  std::map<Series, std::size_t> per_series;  // classes; orbits may count twice
  std::vector<MValTable> unmatched;          // tables matching no series
  std::size_t group_count = 0;
  std::size_t commutative_group_count = 0;
  std::size_t reversible_count = 0;
  std::size_t involutive_count = 0;
  std::size_t star_count = 0;
  std::vector<std::string> problems;

  bool ok() const { return problems.empty(); }
};

// Enumerates and cross-checks the classification at valuedness n:
// every table matches exactly one series, every valid series
// instantiation is enumerated, groups are exactly the series instances
// with positive group criterion and are all commutative, the
// noncommutative classes are the two projection monoids, reversibility /
// involutivity match their parameter criteria, and the inclusion chain
// involutive => star-involutive => reversible (and coset => star) holds.
EnumReport verify_proposition(Count n, const EnumOptions& opts = {});

}  // namespace mvm
