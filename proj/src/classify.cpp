#include "mvm/classify.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mvm {

namespace {

void require_order3(const MValTable& t, const char* who) {
  if (t.order() != 3) {
    throw std::invalid_argument(std::string(who) +
                                " supports order 3 only, got order " +
                                std::to_string(t.order()));
  }
}

Multiset row(Count a, Count b, Count c) {
  return Multiset(std::vector<Count>{a, b, c});
}

std::optional<Count> param(const SeriesParams& ps, const std::string& name) {
  for (const auto& [k, v] : ps) {
    if (k == name) return v;
  }
  return std::nullopt;
}

Count need(const SeriesParams& ps, const std::string& name) {
  auto v = param(ps, name);
  if (!v) {
    throw std::invalid_argument("missing series parameter " + name);
  }
  return *v;
}

// builds an order-3 table from the four free rows, or nullopt if any
// entry is negative
std::optional<MValTable> try_order3(Count n, Count a0, Count a1, Count a2,
                                    Count b0, Count b1, Count b2, Count d0,
                                    Count d1, Count d2, Count c0, Count c1,
                                    Count c2) {
  for (Count v : {a0, a1, a2, b0, b1, b2, d0, d1, d2, c0, c1, c2}) {
    if (v < 0) return std::nullopt;
  }
  return MValTable::order3(n, row(a0, a1, a2), row(b0, b1, b2),
                           row(d0, d1, d2), row(c0, c1, c2));
}

// the three derived entries of the B2 fourth row; nullopt when negative
// or not divisible by n - a0 - a1
std::optional<std::array<Count, 3>> b2_fourth_row(Count n, Count a0, Count a1,
                                                  Count b0, Count b1) {
  const Count d = n - a0 - a1;
  if (d <= 0) return std::nullopt;
  const Count b2 = checked_sub(checked_sub(n, b0), b1);
  if (b2 < 0) return std::nullopt;
  const Count n0 = checked_sub(
      checked_add(checked_mul(b0, b2), checked_mul(a0, b1)),
      checked_mul(a1, b0));
  const Count n1 = checked_mul(checked_add(b0, b1), checked_sub(n, b1));
  const Count n2 = checked_add(
      checked_add(checked_mul(b2, b2),
                  checked_mul(n, checked_sub(b1, checked_add(a0, a1)))),
      checked_sub(checked_mul(a1, b0), checked_mul(a0, b1)));
  if (n0 < 0 || n1 < 0 || n2 < 0) return std::nullopt;
  if (n0 % d != 0 || n1 % d != 0 || n2 % d != 0) return std::nullopt;
  return std::array<Count, 3>{n0 / d, n1 / d, n2 / d};
}

}  // namespace

const char* to_string(Series s) {
  switch (s) {
    case Series::B1: return "B1";
    case Series::B2: return "B2";
    case Series::B3: return "B3";
    case Series::B4: return "B4";
    case Series::B5: return "B5";
    case Series::B6: return "B6";
  }
  throw std::invalid_argument("unknown series value");
}

std::optional<Series> series_from_string(const std::string& name) {
  for (Series s : {Series::B1, Series::B2, Series::B3, Series::B4, Series::B5,
                   Series::B6}) {
    if (name == to_string(s)) return s;
  }
  return std::nullopt;
}

std::vector<SeriesMatch> match_series(const MValTable& t) {
  require_order3(t, "match_series");
  const Count n = t.valuedness();
  const Multiset& r1 = t.entry(1, 1);
  const Multiset& r2 = t.entry(1, 2);
  const Multiset& r3 = t.entry(2, 1);
  const Multiset& r4 = t.entry(2, 2);
  const Multiset all1 = Multiset::uniform(3, 1, n);
  const Multiset all2 = Multiset::uniform(3, 2, n);

  std::vector<SeriesMatch> out;

  // B1: (a0, n-a0, 0), (0,0,n), (0,0,n), (c0, c0*n/a0, rest); a0 > 0
  if (r1[0] > 0 && r1[2] == 0 && r2 == all2 && r3 == all2) {
    const Count a0 = r1[0];
    const Count c0 = r4[0];
    if (checked_mul(c0, n) % a0 == 0) {
      const Count q = checked_mul(c0, n) / a0;
      if (c0 + q <= n && r4 == row(c0, q, n - c0 - q)) {
        out.push_back({Series::B1, {{"a0", a0}, {"c0", c0}}});
      }
    }
  }

  // B2: first row free with a2 > 0, middle rows equal, fourth row derived
  if (r1[2] > 0 && r2 == r3) {
    const Count a0 = r1[0], a1 = r1[1], b0 = r2[0], b1 = r2[1];
    if (auto fourth = b2_fourth_row(n, a0, a1, b0, b1)) {
      if (r4 == row((*fourth)[0], (*fourth)[1], (*fourth)[2])) {
        out.push_back(
            {Series::B2, {{"a0", a0}, {"a1", a1}, {"b0", b0}, {"b1", b1}}});
      }
    }
  }

  // B3: (0,n,0) thrice, fourth row free
  if (r1 == all1 && r2 == all1 && r3 == all1) {
    out.push_back({Series::B3, {{"c0", r4[0]}, {"c1", r4[1]}}});
  }

  // B4: (0,n,0), (0,0,n), (0,0,n), (0, c1, n-c1)
  if (r1 == all1 && r2 == all2 && r3 == all2 && r4[0] == 0) {
    out.push_back({Series::B4, {{"c1", r4[1]}}});
  }

  // B5 and B6: the two projection monoids
  if (r1 == all1 && r2 == all1 && r3 == all2 && r4 == all2) {
    out.push_back({Series::B5, {}});
  }
  if (r1 == all1 && r2 == all2 && r3 == all1 && r4 == all2) {
    out.push_back({Series::B6, {}});
  }

  return out;
}

std::optional<MValTable> series_table(Series s, const SeriesParams& params,
                                      Count n) {
  if (n < 1) {
    throw std::invalid_argument("valuedness must be >= 1, got " +
                                std::to_string(n));
  }
  switch (s) {
    case Series::B1: {
      const Count a0 = need(params, "a0"), c0 = need(params, "c0");
      if (a0 <= 0 || a0 > n || c0 < 0) return std::nullopt;
      if (checked_mul(c0, n) % a0 != 0) return std::nullopt;
      const Count q = checked_mul(c0, n) / a0;
      return try_order3(n, a0, n - a0, 0, 0, 0, n, 0, 0, n, c0, q,
                        n - c0 - q);
    }
    case Series::B2: {
      const Count a0 = need(params, "a0"), a1 = need(params, "a1");
      const Count b0 = need(params, "b0"), b1 = need(params, "b1");
      if (a0 < 0 || a1 < 0 || b0 < 0 || b1 < 0) return std::nullopt;
      auto fourth = b2_fourth_row(n, a0, a1, b0, b1);
      if (!fourth) return std::nullopt;
      return try_order3(n, a0, a1, n - a0 - a1, b0, b1, n - b0 - b1, b0, b1,
                        n - b0 - b1, (*fourth)[0], (*fourth)[1], (*fourth)[2]);
    }
    case Series::B3: {
      const Count c0 = need(params, "c0"), c1 = need(params, "c1");
      return try_order3(n, 0, n, 0, 0, n, 0, 0, n, 0, c0, c1, n - c0 - c1);
    }
    case Series::B4: {
      const Count c1 = need(params, "c1");
      return try_order3(n, 0, n, 0, 0, 0, n, 0, 0, n, 0, c1, n - c1);
    }
    case Series::B5:
      return try_order3(n, 0, n, 0, 0, n, 0, 0, 0, n, 0, 0, n);
    case Series::B6:
      return try_order3(n, 0, n, 0, 0, 0, n, 0, n, 0, 0, 0, n);
  }
  throw std::invalid_argument("unknown series value");
}

MValTable relabel(const MValTable& t, const Relabeling& perm) {
  const std::size_t k = t.order();
  if (perm.size() != k) {
    throw std::invalid_argument("relabeling has " +
                                std::to_string(perm.size()) +
                                " entries, expected " + std::to_string(k));
  }
  std::vector<bool> seen(k, false);
  for (std::size_t v : perm) {
    if (v >= k || seen[v]) {
      throw std::invalid_argument("relabeling is not a permutation");
    }
    seen[v] = true;
  }
  if (perm[MValTable::unit] != MValTable::unit) {
    throw std::invalid_argument("relabeling must fix the unit");
  }
  std::vector<Multiset> grid(k * k, Multiset(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<Count> counts(k, 0);
      for (std::size_t z = 0; z < k; ++z) {
        counts[perm[z]] = t.entry(i, j)[z];
      }
      grid[perm[i] * k + perm[j]] = Multiset(std::move(counts));
    }
  }
  return MValTable(t.valuedness(), k, std::move(grid));
}

namespace {

// all unit-fixing permutations, lexicographically, identity first
std::vector<Relabeling> unit_fixing_permutations(std::size_t k) {
  Relabeling perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Relabeling> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return out;
}

}  // namespace

std::optional<Relabeling> find_isomorphism(const MValTable& t1,
                                           const MValTable& t2) {
  if (t1.order() != t2.order()) {
    throw std::invalid_argument("order mismatch: " +
                                std::to_string(t1.order()) + " vs " +
                                std::to_string(t2.order()));
  }
  const PrimitiveForm target = normalize(t2);
  for (const Relabeling& perm : unit_fixing_permutations(t1.order())) {
    if (normalize(relabel(t1, perm)) == target) return perm;
  }
  return std::nullopt;
}

PrimitiveForm canonical_key(const MValTable& t) {
  std::optional<PrimitiveForm> best;
  for (const Relabeling& perm : unit_fixing_permutations(t.order())) {
    PrimitiveForm candidate = normalize(relabel(t, perm));
    if (!best || candidate < *best) best = std::move(candidate);
  }
  return *best;
}

}  // namespace mvm
