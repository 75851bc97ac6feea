// Acceptance battery: ten end-to-end criteria, one PASS/FAIL line each.
// Exits non-zero when any criterion fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mvm/cli.hpp"
#include "mvm/classify.hpp"
#include "mvm/enumerate.hpp"
#include "mvm/families.hpp"
#include "mvm/io.hpp"
#include "mvm/predicates.hpp"
#include "mvm/report.hpp"
#include "mvm/table.hpp"

namespace {

using mvm::canonical_key;
using mvm::ClassEntry;
using mvm::Count;
using mvm::MValTable;
using mvm::Series;
using mvm::SeriesMatch;

Count param(const SeriesMatch& m, const std::string& name) {
  for (const auto& [key, value] : m.params) {
    if (key == name) return value;
  }
  throw std::logic_error("no parameter " + name);
}

std::string show_triple(const std::array<std::size_t, 3>& t) {
  return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
         std::to_string(t[2]) + ")";
}

// ---- criterion bodies; they append failures to `errors` ----

void criterion1(std::vector<std::string>& errors, std::string& note) {
  const auto entries = mvm::enumerate_classes(1);
  if (entries.size() != 7) {
    errors.push_back("expected 7 classes at n=1, got " +
                     std::to_string(entries.size()));
    return;
  }
  const auto printed = mvm::single_valued_order3();
  std::set<mvm::PrimitiveForm> class_keys, printed_keys;
  for (const ClassEntry& e : entries) class_keys.insert(e.key);
  for (const MValTable& t : printed) printed_keys.insert(canonical_key(t));
  if (printed_keys.size() != 7) {
    errors.push_back("the seven printed tables are not pairwise distinct");
  }
  if (class_keys != printed_keys) {
    errors.push_back(
        "classes at n=1 do not biject with the seven printed tables");
  }
  // the tag multiset of the printed transversal
  std::multiset<Series> tags;
  for (const MValTable& t : printed) {
    const auto matches = mvm::match_series(t);
    if (matches.size() != 1) {
      errors.push_back("a printed table matches " +
                       std::to_string(matches.size()) + " series");
      continue;
    }
    tags.insert(matches.front().series);
  }
  const std::multiset<Series> expected = {Series::B1, Series::B2, Series::B2,
                                          Series::B4, Series::B4, Series::B5,
                                          Series::B6};
  if (tags != expected) {
    errors.push_back("series tags differ from {B1,B2,B2,B4,B4,B5,B6}");
  }
  if (mvm::single_valued_order3_tags() !=
      std::vector<Series>(
          {Series::B1, Series::B2, Series::B2, Series::B4, Series::B4,
           Series::B5, Series::B6})) {
    errors.push_back("published tag order disagrees with the classifier");
  }
  note = "7 classes = 7 printed tables (by canonical key), tags "
         "{B1,B2,B2,B4,B4,B5,B6}";
}

void criterion2(std::vector<std::string>& errors, std::string& note) {
  std::size_t total = 0;
  for (Count n = 1; n <= 6; ++n) {
    const auto report = mvm::verify_proposition(n, {4, false});
    total += report.raw_count;
    if (!report.unmatched.empty()) {
      errors.push_back("n=" + std::to_string(n) + ": " +
                       std::to_string(report.unmatched.size()) +
                       " tables match no series");
    }
    for (const std::string& p : report.problems) {
      errors.push_back("n=" + std::to_string(n) + ": " + p);
    }
  }
  note = std::to_string(total) +
         " tables over n=1..6, all matched, every valid instantiation "
         "enumerated";
}

void criterion3(std::vector<std::string>& errors, std::string& note) {
  const auto seven = mvm::single_valued_order3();
  const std::set<mvm::PrimitiveForm> projections = {
      canonical_key(seven[5]), canonical_key(seven[6])};
  std::size_t groups = 0, noncomm = 0;
  for (Count n = 1; n <= 6; ++n) {
    for (const ClassEntry& e : mvm::enumerate_classes(n)) {
      if (e.group) {
        ++groups;
        if (!e.commutative) {
          errors.push_back("noncommutative group at n=" + std::to_string(n));
        }
      }
      if (!e.commutative) {
        ++noncomm;
        if (projections.count(e.key) == 0) {
          errors.push_back(
              "noncommutative class is not a projection monoid at n=" +
              std::to_string(n));
        }
      }
    }
  }
  note = std::to_string(groups) + " group classes all commutative; " +
         std::to_string(noncomm) +
         " noncommutative classes, every one a projection monoid";
}

void criterion4(std::vector<std::string>& errors, std::string& note) {
  std::size_t checked = 0;
  for (Count n = 1; n <= 6; ++n) {
    for (const MValTable& t : mvm::enumerate_monoids(n)) {
      const auto matches = mvm::match_series(t);
      if (matches.size() != 1) {
        errors.push_back("table matches " + std::to_string(matches.size()) +
                         " series at n=" + std::to_string(n));
        continue;
      }
      const SeriesMatch& m = matches.front();
      bool exp_group = false, exp_rev = false, exp_inv = false;
      if (m.series == Series::B1) {
        exp_group = param(m, "a0") * param(m, "c0") > 0;
        exp_rev = exp_group;
        exp_inv = exp_group;
      } else if (m.series == Series::B2) {
        const Count a0 = param(m, "a0"), a1 = param(m, "a1");
        const Count b0 = param(m, "b0"), b1 = param(m, "b1");
        const Count num = b0 * (n - b0 - b1) + a0 * b1 - a1 * b0;
        exp_group = b0 + a0 * num > 0;
        exp_rev = exp_group && b0 * (a0 + num) == 0;
        exp_inv = exp_group && b0 == 0;
      }
      if (mvm::is_group(t) != exp_group) {
        errors.push_back("group criterion misses at n=" + std::to_string(n));
      }
      if (mvm::is_reversible(t) != exp_rev) {
        errors.push_back("reversibility criterion misses at n=" +
                         std::to_string(n));
      }
      if (mvm::is_involutive(t) != exp_inv) {
        errors.push_back("involutivity criterion misses at n=" +
                         std::to_string(n));
      }
      ++checked;
    }
  }
  note = "group/reversible/involutive match the parameter inequalities on "
         "all " +
         std::to_string(checked) + " tables, n=1..6";
}

void criterion5(std::vector<std::string>& errors, std::string& note) {
  for (Count n = 3; n <= 12; ++n) {
    const MValTable t = mvm::make_xn(n);
    const std::string at = "X_" + std::to_string(n) + ": ";
    if (mvm::check_associativity(t)) {
      errors.push_back(at + "not associative");
      continue;
    }
    const auto inv = mvm::inverse_sets(t);
    if (!inv.group()) errors.push_back(at + "not a group");
    const std::vector<std::size_t> both = {1, 2};
    if (inv.inv[1] != both || inv.inv[2] != both) {
      errors.push_back(at + "Inv sets differ from {x1,x2}");
    }
    if (inv.inverse_map_count() != 4) {
      errors.push_back(at + "inverse map count != 4");
    }
    const auto matches = mvm::match_series(t);
    if (matches.size() != 1 || matches.front().series != Series::B2 ||
        param(matches.front(), "a0") != 1 ||
        param(matches.front(), "a1") != 0 ||
        param(matches.front(), "b0") != 1 ||
        param(matches.front(), "b1") != 1) {
      errors.push_back(at + "does not match B2 with (1,0,1,1)");
    }
    if (mvm::is_reversible(t)) errors.push_back(at + "reversible");
    if (mvm::star_involutive_witness(t)) {
      errors.push_back(at + "unexpected star witness");
    }
    if (mvm::coset_status(t).status != mvm::CosetStatus::no) {
      errors.push_back(at + "coset status is not No");
    }
  }
  note = "X_n for n=3..12: B2(1,0,1,1) groups, Inv={x1,x2}, 4 inverse maps, "
         "non-reversible, no star witness, coset No";
}

void criterion6(std::vector<std::string>& errors, std::string& note) {
  for (Count n : {5, 7, 9}) {
    const auto v = mvm::check_associativity(mvm::make_borovik(n));
    const std::string at = "order " + std::to_string(n) + ": ";
    if (!v) {
      errors.push_back(at + "no associativity violation found");
      continue;
    }
    const std::array<std::size_t, 3> expected_triple = {
        1, 1, static_cast<std::size_t>(n - 1)};
    if (v->triple != expected_triple) {
      errors.push_back(at + "first violation at " + show_triple(v->triple) +
                       ", expected " + show_triple(expected_triple));
    }
    // lhs multiset {n-1, n-1, 1, n-3}, rhs {1, 1, n-1, n-3}
    std::vector<Count> lhs(static_cast<std::size_t>(n), 0);
    std::vector<Count> rhs(static_cast<std::size_t>(n), 0);
    lhs[1] += 1;
    lhs[static_cast<std::size_t>(n - 3)] += 1;
    lhs[static_cast<std::size_t>(n - 1)] += 2;
    rhs[1] += 2;
    rhs[static_cast<std::size_t>(n - 3)] += 1;
    rhs[static_cast<std::size_t>(n - 1)] += 1;
    if (v->lhs.counts() != lhs || v->rhs.counts() != rhs) {
      errors.push_back(at + "violation multisets differ from "
                            "{n-1,n-1,1,n-3} vs {1,1,n-1,n-3}");
    }
  }
  note = "residue magma fails at (1,1,n-1) with multisets {n-1,n-1,1,n-3} vs "
         "{1,1,n-1,n-3} for n=5,7,9";
}

void criterion7(std::vector<std::string>& errors, std::string& note) {
  for (Count k = 1; k <= 4; ++k) {
    const MValTable t = mvm::make_b2tilde_4k3(k);
    const std::string at = "k=" + std::to_string(k) + ": ";
    const auto w = mvm::star_involutive_witness(t);
    if (!w) {
      errors.push_back(at + "no star witness");
      continue;
    }
    if (w->involution != std::vector<std::size_t>({0, 2, 1})) {
      errors.push_back(at + "witness is not the swap");
    }
    if (w->unit_multiplicities !=
        std::vector<Count>({2 * k + 1, 1, 1})) {
      errors.push_back(at + "m(x) != 1");
    }
  }
  const std::map<Count, mvm::CosetStatus> expected = {
      {1, mvm::CosetStatus::yes},
      {2, mvm::CosetStatus::yes},
      {3, mvm::CosetStatus::no}};
  for (const auto& [k, status] : expected) {
    if (mvm::coset_status(mvm::make_b2tilde_4k3(k)).status != status) {
      errors.push_back("coset status wrong at k=" + std::to_string(k));
    }
  }
  note = "4k+3 family: swap witness with m(x)=1 for k=1..4; coset Yes,Yes,No "
         "for k=1,2,3 (7, 11 prime; 15 not)";
}

void criterion8(std::vector<std::string>& errors, std::string& note) {
  // canonical keys survive diagonal scaling
  for (Count n = 1; n <= 4; ++n) {
    for (const ClassEntry& e : mvm::enumerate_classes(n)) {
      for (Count m : {2, 3}) {
        if (canonical_key(mvm::diagonal(e.representative, m)) != e.key) {
          errors.push_back("diagonal scaling changed a key at n=" +
                           std::to_string(n));
        }
      }
    }
  }

  // find_isomorphism succeeds exactly when keys coincide
  const auto corpus = mvm::enumerate_monoids(2);
  for (const MValTable& a : corpus) {
    for (const MValTable& b : corpus) {
      const bool same_key = canonical_key(a) == canonical_key(b);
      const auto phi = mvm::find_isomorphism(a, b);
      if (same_key != phi.has_value()) {
        errors.push_back("find_isomorphism disagrees with key equality");
      }
      if (phi && mvm::normalize(mvm::relabel(b, *phi)).form !=
                     mvm::normalize(a).form) {
        errors.push_back("returned bijection is not an isomorphism");
      }
    }
  }

  // self-dual tables are isomorphic to their swap relabelings
  const mvm::Relabeling swap = {0, 2, 1};
  std::size_t self_dual = 0;
  for (Count n = 1; n <= 4; ++n) {
    for (const MValTable& t : mvm::enumerate_monoids(n)) {
      const auto matches = mvm::match_series(t);
      if (matches.size() != 1 || matches.front().series != Series::B2) {
        continue;
      }
      const SeriesMatch& m = matches.front();
      const Count a0 = param(m, "a0"), a1 = param(m, "a1");
      const Count b0 = param(m, "b0"), b1 = param(m, "b1");
      const bool dual = b0 == n - 2 * (a0 + a1) && b1 == a0 + a1 &&
                        n - b0 - b1 == a0 + a1;
      if (!dual) continue;
      ++self_dual;
      if (!mvm::find_isomorphism(t, mvm::relabel(t, swap))) {
        errors.push_back("self-dual table not isomorphic to its swap at n=" +
                         std::to_string(n));
      }
    }
  }
  if (self_dual == 0) errors.push_back("no self-dual table in the corpus");

  // the four cross-series isomorphism clauses, read off the corpus
  std::size_t cross_pairs = 0;
  std::vector<std::pair<MValTable, SeriesMatch>> tagged;
  for (Count n = 1; n <= 3; ++n) {
    for (const MValTable& t : mvm::enumerate_monoids(n)) {
      const auto matches = mvm::match_series(t);
      if (matches.size() == 1) tagged.emplace_back(t, matches.front());
    }
  }
  auto clause = [&](const SeriesMatch& m1, Count n1, const SeriesMatch& m2,
                    Count n2) -> std::optional<bool> {
    if (m1.series == Series::B1 && m2.series == Series::B3) {
      return param(m1, "c0") == 0 && param(m2, "c1") == 0 &&
             param(m1, "a0") * n2 == param(m2, "c0") * n1;
    }
    if (m1.series == Series::B2 && m2.series == Series::B3) {
      const Count a0 = param(m1, "a0"), a1 = param(m1, "a1");
      const Count a2 = n1 - a0 - a1;
      const Count c0 = param(m2, "c0"), c1 = param(m2, "c1");
      return param(m1, "b0") == 0 && param(m1, "b1") == 0 &&
             a0 * n2 == c0 * n1 && a1 * n2 == (n2 - c0 - c1) * n1 &&
             a2 * n2 == c1 * n1;
    }
    if (m1.series == Series::B2 && m2.series == Series::B4) {
      return param(m1, "a0") == 0 && param(m1, "b0") == 0 &&
             param(m1, "b1") == n1 &&
             param(m1, "a1") * n2 == (n2 - param(m2, "c1")) * n1;
    }
    if (m1.series == Series::B3 && m2.series == Series::B4) {
      return param(m1, "c0") == 0 && param(m1, "c1") == 0 &&
             param(m2, "c1") == 0;
    }
    return std::nullopt;
  };
  for (const auto& [t1, m1] : tagged) {
    for (const auto& [t2, m2] : tagged) {
      const auto predicted = clause(m1, t1.valuedness(), m2, t2.valuedness());
      if (!predicted) continue;
      ++cross_pairs;
      if ((canonical_key(t1) == canonical_key(t2)) != *predicted) {
        errors.push_back(std::string("cross-series clause ") +
                         mvm::to_string(m1.series) + "/" +
                         mvm::to_string(m2.series) +
                         " disagrees with key equality");
      }
    }
  }
  note = "keys invariant under diagonal scaling (n<=4, m=2,3); "
         "find_isomorphism == key equality on the n=2 corpus; " +
         std::to_string(self_dual) + " self-dual tables isomorphic to their "
         "swaps; 4 cross-series clauses verified on " +
         std::to_string(cross_pairs) + " pairs";
}

void criterion9(std::vector<std::string>& errors, std::string& note) {
  bool rev_not_star = false, star_not_inv = false, group_not_rev = false;
  for (Count n = 1; n <= 6; ++n) {
    for (const ClassEntry& e : mvm::enumerate_classes(n)) {
      const bool star = e.star.has_value();
      if (e.coset.status == mvm::CosetStatus::yes && !star) {
        errors.push_back("coset Yes without star witness at n=" +
                         std::to_string(n));
      }
      if (star && !e.reversible) {
        errors.push_back("star witness without reversibility at n=" +
                         std::to_string(n));
      }
      if (e.involutive && !star) {
        errors.push_back("involutive without star witness at n=" +
                         std::to_string(n));
      }
      rev_not_star |= e.reversible && !star;
      star_not_inv |= star && !e.involutive;
      group_not_rev |= e.group && !e.reversible;
    }
  }
  if (!rev_not_star) errors.push_back("no reversible class without a star witness");
  if (!star_not_inv) errors.push_back("no star class without involutivity");
  if (!group_not_rev) errors.push_back("no group without reversibility");
  // named-family witnesses: X_3 is a non-reversible group; the k=3 member
  // of the 4k+3 family is star-involutive yet not a coset group
  if (mvm::is_reversible(mvm::make_xn(3))) {
    errors.push_back("X_3 unexpectedly reversible");
  }
  const MValTable b2t3 = mvm::make_b2tilde_4k3(3);
  if (!mvm::star_involutive_witness(b2t3) ||
      mvm::coset_status(b2t3).status != mvm::CosetStatus::no) {
    errors.push_back("k=3 family member is not a star/coset strictness "
                     "witness");
  }
  // the B1-group discrepancy must surface as a flag, not a failure
  const auto results = mvm::corollary_report({6, 12, 4});
  bool flagged = false;
  for (const mvm::CheckResult& r : results) {
    if (r.status == mvm::CheckResult::Status::fail) {
      errors.push_back("corollary check failed: " + r.name + " — " + r.detail);
    }
    flagged |= r.name == "star-involutive groups" &&
               r.status == mvm::CheckResult::Status::flagged;
  }
  if (!flagged) {
    errors.push_back("B1-group star discrepancy did not surface as a flag");
  }
  note = "coset => star => reversible and involutive => star over n=1..6, "
         "all strict; B1-group star behavior flagged, not asserted";
}

void criterion10(std::vector<std::string>& errors, std::string& note) {
  auto run = [](const std::string& jobs) {
    std::istringstream input;
    std::ostringstream diag;
    return mvm::cli::run({"enumerate", "--n", "4", "--classes", "--jobs",
                          jobs},
                         input, diag);
  };
  const auto one = run("1");
  const auto eight = run("8");
  if (one.exit_code != 0 || eight.exit_code != 0) {
    errors.push_back("enumerate exited non-zero");
  }
  if (one.payload != eight.payload) {
    errors.push_back("outputs differ between --jobs 1 and --jobs 8");
  }
  note = "enumerate --n 4 --classes is byte-identical for --jobs 1 and "
         "--jobs 8 (" +
         std::to_string(one.payload.size()) + " bytes)";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    void (*body)(std::vector<std::string>&, std::string&);
    double budget_seconds;  // 0 = unbounded
  };
  const std::vector<Criterion> criteria = {
      {1, "seven isomorphism classes at n=1", criterion1, 1.0},
      {2, "series completeness for n=1..6", criterion2, 60.0},
      {3, "groups commutative, noncommutative = projections", criterion3, 0},
      {4, "parameter criteria for group/reversible/involutive", criterion4, 0},
      {5, "X_n family properties for n=3..12", criterion5, 1.0},
      {6, "residue magma counterexample at n=5,7,9", criterion6, 0},
      {7, "4k+3 family star witnesses and coset criterion", criterion7, 0},
      {8, "isomorphism machinery", criterion8, 60.0},
      {9, "inclusion chain with strictness witnesses", criterion9, 0},
      {10, "worker-count determinism", criterion10, 0},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    std::vector<std::string> errors;
    std::string note;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(errors, note);
    } catch (const std::exception& e) {
      errors.push_back(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (c.budget_seconds > 0 && seconds >= c.budget_seconds) {
      errors.push_back("took " + std::to_string(seconds) +
                       "s, budget " + std::to_string(c.budget_seconds) + "s");
    }
    const bool pass = errors.empty();
    failures += pass ? 0 : 1;
    std::ostringstream line;
    line << "[criterion " << c.id << "] " << (pass ? "PASS" : "FAIL") << " "
         << c.title;
    if (pass) {
      line << " — " << note;
    } else {
      std::size_t shown = 0;
      for (const std::string& e : errors) {
        if (shown++ == 4) {
          line << "; and " << (errors.size() - 4) << " more";
          break;
        }
        line << (shown == 1 ? " — " : "; ") << e;
      }
    }
    if (c.budget_seconds > 0) {
      std::ostringstream stamp;
      stamp.setf(std::ios::fixed);
      stamp.precision(3);
      stamp << seconds;
      line << " (" << stamp.str() << "s, budget "
           << static_cast<int>(c.budget_seconds) << "s)";
    }
    std::cout << line.str() << "\n";
  }
  std::cout << (failures == 0 ? "all 10 criteria pass"
                              : std::to_string(failures) +
                                    " of 10 criteria fail")
            << "\n";
  return failures == 0 ? 0 : 1;
}
