#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mvm/table.hpp"

namespace mvm {

// the six series of order-3 n-valued monoids
enum class Series { B1, B2, B3, B4, B5, B6 };

const char* to_string(Series s);
std::optional<Series> series_from_string(const std::string& name);

// Named parameters in a fixed order, e.g. B2 -> {a0, a1, b0, b1}. Kept as
// an ordered list so serialization is stable.
using SeriesParams = std::vector<std::pair<std::string, Count>>;

struct SeriesMatch {
  Series series;
  SeriesParams params;

  bool operator==(const SeriesMatch&) const = default;
};

// All series whose template the table satisfies verbatim, with the
// parameters read off. Series membership is taken strictly: B1 requires
// a0 > 0 and B2 requires n - a0 - a1 > 0, so the degenerate shapes land
// in B3-B6 and every associative table matches exactly one series.
// Requires order 3.
std::vector<SeriesMatch> match_series(const MValTable& t);

// Rebuilds the series template from parameters at valuedness n; returns
// nullopt when a derived entry is negative or non-integral. B1 takes
// {a0, c0}, B2 {a0, a1, b0, b1}, B3 {c0, c1}, B4 {c1}, B5 and B6 nothing.
std::optional<MValTable> series_table(Series s, const SeriesParams& params,
                                      Count n);

// a bijection of elements fixing the unit: perm[old] = new, perm[0] = 0
using Relabeling = std::vector<std::size_t>;

MValTable relabel(const MValTable& t, const Relabeling& perm);

// Unit-preserving bijection phi with proportional multiplicities, i.e.
// normalize(t1) == normalize(relabel(t2, phi)). Candidates are tried in
// lexicographic order, so the identity comes before the swap. Orders must
// agree.
std::optional<Relabeling> find_isomorphism(const MValTable& t1,
                                           const MValTable& t2);

// The minimum of normalize(relabel(t, phi)) over all unit-fixing
// bijections phi. Two tables are isomorphic exactly when their canonical
// keys coincide, and the key is invariant under diagonal scaling.
PrimitiveForm canonical_key(const MValTable& t);

}  // namespace mvm
