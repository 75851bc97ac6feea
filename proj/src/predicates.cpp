#include "mvm/predicates.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mvm {

bool InverseReport::group() const {
  return std::all_of(inv.begin(), inv.end(),
                     [](const auto& s) { return !s.empty(); });
}

Count InverseReport::inverse_map_count() const {
  Count total = 1;
  for (const auto& s : inv) {
    total = checked_mul(total, static_cast<Count>(s.size()));
  }
  return total;
}

InverseReport inverse_sets(const MValTable& t) {
  const std::size_t k = t.order();
  InverseReport out;
  out.inv.resize(k);
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      if (t.entry(x, y).contains(MValTable::unit) &&
          t.entry(y, x).contains(MValTable::unit)) {
        out.inv[x].push_back(y);
      }
    }
  }
  return out;
}

bool is_group(const MValTable& t) { return inverse_sets(t).group(); }

bool is_commutative(const MValTable& t) {
  const std::size_t k = t.order();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (t.entry(i, j) != t.entry(j, i)) return false;
    }
  }
  return true;
}

bool is_reversible(const MValTable& t) {
  const auto report = inverse_sets(t);
  return std::all_of(report.inv.begin(), report.inv.end(),
                     [](const auto& s) { return s.size() == 1; });
}

bool is_involutive(const MValTable& t) {
  const auto report = inverse_sets(t);
  for (std::size_t x = 0; x < report.inv.size(); ++x) {
    if (report.inv[x] != std::vector<std::size_t>{x}) return false;
  }
  return true;
}

namespace {

// all unit-fixing involutions, in lexicographic order of the mapping
// vector; the identity comes first
void involutions_rec(std::vector<std::size_t>& map, std::size_t next,
                     std::vector<std::vector<std::size_t>>& out) {
  const std::size_t k = map.size();
  while (next < k && map[next] != k) ++next;
  if (next == k) {
    out.push_back(map);
    return;
  }
  // fixed point first: keeps the enumeration lexicographic
  map[next] = next;
  involutions_rec(map, next + 1, out);
  for (std::size_t other = next + 1; other < k; ++other) {
    if (map[other] != k) continue;
    map[next] = other;
    map[other] = next;
    involutions_rec(map, next + 1, out);
    map[other] = k;
  }
  map[next] = k;
}

std::vector<std::vector<std::size_t>> unit_fixing_involutions(std::size_t k) {
  std::vector<std::size_t> map(k, k);  // k marks "unassigned"
  map[MValTable::unit] = MValTable::unit;
  std::vector<std::vector<std::size_t>> out;
  involutions_rec(map, 1, out);
  return out;
}

Multiset apply_to_elements(const Multiset& m,
                           const std::vector<std::size_t>& sigma) {
  std::vector<Count> counts(m.width(), 0);
  for (std::size_t z = 0; z < m.width(); ++z) counts[sigma[z]] = m[z];
  return Multiset(std::move(counts));
}

bool star_conditions_hold(const MValTable& t,
                          const std::vector<std::size_t>& sigma) {
  const std::size_t k = t.order();
  // (i) x*y contains e exactly when y = sigma(x)
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      if (t.entry(x, y).contains(MValTable::unit) != (y == sigma[x])) {
        return false;
      }
    }
  }
  // (ii) m(x) = m(sigma(x))
  for (std::size_t x = 0; x < k; ++x) {
    if (t.entry(x, sigma[x])[MValTable::unit] !=
        t.entry(sigma[x], sigma[sigma[x]])[MValTable::unit]) {
      return false;
    }
  }
  // (iii) sigma(x*y) = sigma(y)*sigma(x)
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      if (apply_to_elements(t.entry(x, y), sigma) !=
          t.entry(sigma[y], sigma[x])) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

std::optional<StarWitness> star_involutive_witness(const MValTable& t) {
  if (!is_group(t)) return std::nullopt;
  for (const auto& sigma : unit_fixing_involutions(t.order())) {
    if (!star_conditions_hold(t, sigma)) continue;
    StarWitness w;
    w.involution = sigma;
    for (std::size_t x = 0; x < t.order(); ++x) {
      w.unit_multiplicities.push_back(t.entry(x, sigma[x])[MValTable::unit]);
    }
    return w;
  }
  return std::nullopt;
}

const char* to_string(CosetStatus s) {
  switch (s) {
    case CosetStatus::yes: return "Yes";
    case CosetStatus::no: return "No";
    case CosetStatus::unknown: return "Unknown";
  }
  throw std::invalid_argument("unknown coset status");
}

bool is_prime_power(Count m) {
  if (m <= 0) {
    throw std::invalid_argument("is_prime_power needs a positive argument, got " +
                                std::to_string(m));
  }
  if (m == 1) return false;
  for (Count p = 2; p <= m / p; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    return m == 1;
  }
  return true;  // m is prime
}

CosetReport coset_status(const MValTable& t) {
  if (!star_involutive_witness(t)) {
    return {CosetStatus::no, "not star-involutive"};
  }
  const PrimitiveForm pf = normalize(t);
  const Count ns = pf.valuedness();
  if (pf.order() == 3 && ns % 2 == 1) {
    const Count k = (ns - 1) / 2;
    auto vec = [](Count a, Count b, Count c) {
      return Multiset(std::vector<Count>{a, b, c});
    };
    const MValTable want = MValTable::order3(
        ns, vec(0, k, k + 1), vec(1, k, k), vec(1, k, k), vec(0, k + 1, k));
    if (pf.form == want) {
      const Count v = 4 * k + 3;
      if (is_prime_power(v)) {
        return {CosetStatus::yes, "primitive form is the 4k+3 family at k=" +
                                      std::to_string(k) + " and " +
                                      std::to_string(v) + " is a prime power"};
      }
      return {CosetStatus::no, "primitive form is the 4k+3 family at k=" +
                                   std::to_string(k) + " but " +
                                   std::to_string(v) + " is not a prime power"};
    }
  }
  return {CosetStatus::unknown,
          "star-involutive but outside the 4k+3 family"};
}

}  // namespace mvm
