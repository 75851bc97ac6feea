#include "mvm/enumerate.hpp"

#include "mvm/families.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

namespace mvm {

namespace {

using Vec3 = std::array<Count, 3>;

// all order-3 multiplicity vectors with sum n, lexicographically ascending
std::vector<Vec3> all_rows(Count n) {
  std::vector<Vec3> out;
  for (Count c0 = 0; c0 <= n; ++c0) {
    for (Count c1 = 0; c0 + c1 <= n; ++c1) {
      out.push_back({c0, c1, n - c0 - c1});
    }
  }
  return out;
}

// An order-3 grid in which some of the four free entries are still
// undecided. The unit row and column are always present, so a triple can
// be tested as soon as every entry it reaches carries a value.
struct PartialGrid {
  std::array<Vec3, 3> unit_row;
  std::array<const Vec3*, 4> free_entry = {nullptr, nullptr, nullptr,
                                           nullptr};

  explicit PartialGrid(Count n) {
    for (std::size_t j = 0; j < 3; ++j) {
      unit_row[j] = {0, 0, 0};
      unit_row[j][j] = n;
    }
  }

  const Vec3* at(std::size_t i, std::size_t j) const {
    if (i == 0) return &unit_row[j];
    if (j == 0) return &unit_row[i];
    return free_entry[(i - 1) * 2 + (j - 1)];
  }
};

enum class Tri { pass, fail, undecided };

Tri check_triple(const PartialGrid& g, std::size_t x, std::size_t y,
                 std::size_t z) {
  const Vec3* xy = g.at(x, y);
  const Vec3* yz = g.at(y, z);
  if (xy == nullptr || yz == nullptr) return Tri::undecided;
  Vec3 lhs = {0, 0, 0};
  Vec3 rhs = {0, 0, 0};
  for (std::size_t w = 0; w < 3; ++w) {
    if ((*xy)[w] != 0) {
      const Vec3* wz = g.at(w, z);
      if (wz == nullptr) return Tri::undecided;
      for (std::size_t u = 0; u < 3; ++u) lhs[u] += (*xy)[w] * (*wz)[u];
    }
    if ((*yz)[w] != 0) {
      const Vec3* xw = g.at(x, w);
      if (xw == nullptr) return Tri::undecided;
      for (std::size_t u = 0; u < 3; ++u) rhs[u] += (*yz)[w] * (*xw)[u];
    }
  }
  return lhs == rhs ? Tri::pass : Tri::fail;
}

// Triples through the unit are identities for any table satisfying the
// unit law ((e,y,z), (x,e,z) and (x,y,e) all reduce to n*(y*z) and
// friends), so the search only tests the eight triples of non-unit
// elements. verify_proposition re-runs the full checker over everything
// the search accepts.
constexpr std::array<std::array<std::size_t, 3>, 8> kFreeTriples = {{
    {1, 1, 1},
    {1, 1, 2},
    {1, 2, 1},
    {1, 2, 2},
    {2, 1, 1},
    {2, 1, 2},
    {2, 2, 1},
    {2, 2, 2},
}};

bool decided_triples_hold(const PartialGrid& g) {
  for (const auto& [x, y, z] : kFreeTriples) {
    if (check_triple(g, x, y, z) == Tri::fail) return false;
  }
  return true;
}

bool all_triples_pass(const PartialGrid& g) {
  for (const auto& [x, y, z] : kFreeTriples) {
    if (check_triple(g, x, y, z) != Tri::pass) return false;
  }
  return true;
}

Multiset to_multiset(const Vec3& v) {
  return Multiset(std::vector<Count>{v[0], v[1], v[2]});
}

// every monoid whose x1*x1 row is rows[first]; results are in
// lexicographic order of the remaining free entries
void enumerate_slice(Count n, const std::vector<Vec3>& rows,
                     std::size_t first, std::vector<MValTable>& out) {
  PartialGrid g(n);
  g.free_entry[0] = &rows[first];
  if (!decided_triples_hold(g)) return;
  for (const Vec3& e12 : rows) {
    g.free_entry[1] = &e12;
    if (!decided_triples_hold(g)) continue;
    for (const Vec3& e21 : rows) {
      g.free_entry[2] = &e21;
      if (!decided_triples_hold(g)) continue;
      for (const Vec3& e22 : rows) {
        g.free_entry[3] = &e22;
        if (all_triples_pass(g)) {
          out.push_back(MValTable::order3(n, to_multiset(rows[first]),
                                          to_multiset(e12), to_multiset(e21),
                                          to_multiset(e22)));
        }
      }
      g.free_entry[3] = nullptr;
    }
    g.free_entry[2] = nullptr;
  }
}

}  // namespace

std::vector<MValTable> enumerate_monoids(Count n, const EnumOptions& opts) {
  if (n < 1) {
    throw std::invalid_argument("valuedness must be >= 1, got " +
                                std::to_string(n));
  }
  if (n > 30 && !opts.allow_large) {
    const Count per_entry = (n + 1) * (n + 2) / 2;
    throw std::runtime_error(
        "refusing to search C(n+2,2)^4 = " + std::to_string(per_entry) +
        "^4 candidate tables at n = " + std::to_string(n) +
        "; allow_large (--allow-large) overrides");
  }
  if (opts.jobs < 1) {
    throw std::invalid_argument("jobs must be >= 1");
  }

  const std::vector<Vec3> rows = all_rows(n);
  std::vector<std::vector<MValTable>> slices(rows.size());

  const unsigned jobs =
      std::min<unsigned>(opts.jobs, static_cast<unsigned>(rows.size()));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      enumerate_slice(n, rows, i, slices[i]);
    }
  } else {
    // workers claim x1*x1 slices independently; concatenating the slices
    // in index order makes the output identical for any worker count
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t i = next.fetch_add(1); i < rows.size();
           i = next.fetch_add(1)) {
        enumerate_slice(n, rows, i, slices[i]);
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  std::vector<MValTable> out;
  for (auto& slice : slices) {
    for (auto& t : slice) out.push_back(std::move(t));
  }
  return out;
}

namespace {

std::vector<Series> orbit_series_tags(const MValTable& rep) {
  std::vector<Series> tags;
  const Relabeling swap = {0, 2, 1};
  for (const MValTable& member : {rep, relabel(rep, swap)}) {
    for (const SeriesMatch& m : match_series(member)) {
      if (std::find(tags.begin(), tags.end(), m.series) == tags.end()) {
        tags.push_back(m.series);
      }
    }
  }
  std::sort(tags.begin(), tags.end());
  return tags;
}

ClassEntry make_class_entry(PrimitiveForm key, const MValTable& rep) {
  ClassEntry e{std::move(key),
               rep,
               match_series(rep),
               orbit_series_tags(rep),
               inverse_sets(rep),
               false,
               false,
               false,
               false,
               star_involutive_witness(rep),
               coset_status(rep)};
  e.group = e.inverses.group();
  e.commutative = is_commutative(rep);
  e.reversible = is_reversible(rep);
  e.involutive = is_involutive(rep);
  return e;
}

}  // namespace

std::vector<ClassEntry> enumerate_classes(Count n, const EnumOptions& opts) {
  std::map<PrimitiveForm, MValTable> reps;
  for (const MValTable& t : enumerate_monoids(n, opts)) {
    reps.emplace(canonical_key(t), t);  // keeps the first member seen
  }
  std::vector<ClassEntry> out;
  out.reserve(reps.size());
  for (const auto& [key, rep] : reps) {
    out.push_back(make_class_entry(key, rep));
  }
  return out;
}

namespace {

Count param_value(const SeriesParams& params, const char* name) {
  for (const auto& [k, v] : params) {
    if (k == name) return v;
  }
  throw std::logic_error(std::string("series match lacks parameter ") + name);
}

std::string where(Count n, const MValTable& t) {
  std::string s = "n=" + std::to_string(n) + " table";
  for (std::size_t i = 1; i < 3; ++i) {
    for (std::size_t j = 1; j < 3; ++j) {
      s += " (";
      const auto& counts = t.entry(i, j).counts();
      for (std::size_t z = 0; z < counts.size(); ++z) {
        s += (z ? "," : "") + std::to_string(counts[z]);
      }
      s += ")";
    }
  }
  return s;
}

// the group / reversibility / involutivity criteria in terms of the
// series parameters, checked verbatim against the computed predicates
void check_predicate_criteria(const MValTable& t, const SeriesMatch& m,
                              Count n, std::vector<std::string>& problems) {
  const bool grp = is_group(t);
  bool expect_group = false;
  bool expect_involutive = false;
  bool expect_nonreversible = false;
  switch (m.series) {
    case Series::B1: {
      const Count a0 = param_value(m.params, "a0");
      const Count c0 = param_value(m.params, "c0");
      expect_group = a0 * c0 > 0;
      expect_involutive = expect_group;
      break;
    }
    case Series::B2: {
      const Count a0 = param_value(m.params, "a0");
      const Count a1 = param_value(m.params, "a1");
      const Count b0 = param_value(m.params, "b0");
      const Count b1 = param_value(m.params, "b1");
      const Count num = b0 * (n - b0 - b1) + a0 * b1 - a1 * b0;
      expect_group = b0 + a0 * num > 0;
      expect_involutive = expect_group && b0 == 0;
      expect_nonreversible = b0 * (a0 + num) > 0;
      break;
    }
    default:
      break;  // B3-B6 contain no groups
  }
  if (grp != expect_group) {
    problems.push_back("group criterion mismatch for " + where(n, t));
  }
  if (grp && !is_commutative(t)) {
    problems.push_back("noncommutative group at " + where(n, t));
  }
  if (is_reversible(t) != (grp && !expect_nonreversible)) {
    problems.push_back("reversibility criterion mismatch for " + where(n, t));
  }
  if (is_involutive(t) != expect_involutive) {
    problems.push_back("involutivity criterion mismatch for " + where(n, t));
  }
}

// every valid parameter instantiation of the six series at this n
std::vector<std::pair<SeriesMatch, MValTable>> all_instantiations(Count n) {
  std::vector<std::pair<SeriesMatch, MValTable>> out;
  auto add = [&](Series s, SeriesParams params) {
    if (auto t = series_table(s, params, n)) {
      out.push_back({{s, std::move(params)}, std::move(*t)});
    }
  };
  for (Count a0 = 1; a0 <= n; ++a0) {
    for (Count c0 = 0; c0 <= n; ++c0) {
      add(Series::B1, {{"a0", a0}, {"c0", c0}});
    }
  }
  for (Count a0 = 0; a0 < n; ++a0) {
    for (Count a1 = 0; a0 + a1 < n; ++a1) {
      for (Count b0 = 0; b0 <= n; ++b0) {
        for (Count b1 = 0; b0 + b1 <= n; ++b1) {
          add(Series::B2, {{"a0", a0}, {"a1", a1}, {"b0", b0}, {"b1", b1}});
        }
      }
    }
  }
  for (Count c0 = 0; c0 <= n; ++c0) {
    for (Count c1 = 0; c0 + c1 <= n; ++c1) {
      add(Series::B3, {{"c0", c0}, {"c1", c1}});
    }
  }
  for (Count c1 = 0; c1 <= n; ++c1) {
    add(Series::B4, {{"c1", c1}});
  }
  add(Series::B5, {});
  add(Series::B6, {});
  return out;
}

}  // namespace

EnumReport verify_proposition(Count n, const EnumOptions& opts) {
  EnumReport report;
  report.n = n;
  for (Series s : {Series::B1, Series::B2, Series::B3, Series::B4, Series::B5,
                   Series::B6}) {
    report.per_series[s] = 0;
  }

  const std::vector<MValTable> tables = enumerate_monoids(n, opts);
  report.raw_count = tables.size();

  const std::set<MValTable> table_set(tables.begin(), tables.end());
  std::map<PrimitiveForm, MValTable> reps;

  for (const MValTable& t : tables) {
    // guard for the pruned search: the full checker must agree
    if (!check_unit(t).empty()) {
      report.problems.push_back("unit law fails for accepted " + where(n, t));
    }
    if (check_associativity(t)) {
      report.problems.push_back("full associativity check fails for accepted " +
                                where(n, t));
    }

    const std::vector<SeriesMatch> matches = match_series(t);
    if (matches.empty()) {
      report.unmatched.push_back(t);
      report.problems.push_back("no series matches " + where(n, t));
      continue;
    }
    if (matches.size() != 1) {
      report.problems.push_back("several series match " + where(n, t));
    }
    const auto rebuilt = series_table(matches[0].series, matches[0].params, n);
    if (!rebuilt || *rebuilt != t) {
      report.problems.push_back("series reconstruction differs for " +
                                where(n, t));
    }
    check_predicate_criteria(t, matches[0], n, report.problems);
    reps.emplace(canonical_key(t), t);
  }

  // the converse direction: every valid instantiation is enumerated
  for (const auto& [match, t] : all_instantiations(n)) {
    if (table_set.find(t) == table_set.end()) {
      report.problems.push_back(std::string("instantiation of ") +
                                to_string(match.series) +
                                " missing from the enumeration: " +
                                where(n, t));
    }
  }

  report.class_count = reps.size();
  std::vector<PrimitiveForm> noncommutative_keys;
  for (const auto& [key, rep] : reps) {
    for (Series s : orbit_series_tags(rep)) ++report.per_series[s];
    const bool grp = is_group(rep);
    const bool comm = is_commutative(rep);
    if (grp) {
      ++report.group_count;
      if (comm) ++report.commutative_group_count;
    }
    if (!comm) noncommutative_keys.push_back(key);
    if (is_reversible(rep)) ++report.reversible_count;
    if (is_involutive(rep)) ++report.involutive_count;
    const auto star = star_involutive_witness(rep);
    if (star) ++report.star_count;

    // the inclusion chain
    if (is_involutive(rep) && !star) {
      report.problems.push_back("involutive class without star witness: " +
                                where(n, rep));
    }
    if (star && !is_reversible(rep)) {
      report.problems.push_back("star-involutive class not reversible: " +
                                where(n, rep));
    }
    if (coset_status(rep).status == CosetStatus::yes && !star) {
      report.problems.push_back("coset class without star witness: " +
                                where(n, rep));
    }
  }
  if (report.commutative_group_count != report.group_count) {
    report.problems.push_back("noncommutative group class at n=" +
                              std::to_string(n));
  }

  // the noncommutative classes are the diagonals of the two projection
  // monoids, nothing else
  const auto single = single_valued_order3();
  std::vector<PrimitiveForm> expected = {canonical_key(single[5]),
                                         canonical_key(single[6])};
  std::sort(expected.begin(), expected.end());
  std::sort(noncommutative_keys.begin(), noncommutative_keys.end());
  if (noncommutative_keys != expected) {
    report.problems.push_back(
        "noncommutative classes are not the two projection monoids at n=" +
        std::to_string(n));
  }

  return report;
}

}  // namespace mvm
