#include "mvm/io.hpp"

#include <algorithm>
#include <cstdint>
#include <istream>
#include <iterator>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace mvm {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string elem_name(std::size_t i) {
  return i == 0 ? std::string("e") : "x" + std::to_string(i);
}

Count get_count(const ordered_json& j, const std::string& where) {
  if (!j.is_number_integer()) {
    throw ParseError(where + " must be an integer");
  }
  if (j.is_number_unsigned() &&
      j.get<std::uint64_t>() >
          static_cast<std::uint64_t>(std::numeric_limits<Count>::max())) {
    throw ParseError(where + " is too large");
  }
  return j.get<Count>();
}

ordered_json counts_json(const Multiset& m) {
  return ordered_json(m.counts());
}

ordered_json table_json(const MValTable& t) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < t.order(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < t.order(); ++j) {
      row.push_back(counts_json(t.entry(i, j)));
    }
    rows.push_back(std::move(row));
  }
  return ordered_json{
      {"n", t.valuedness()}, {"order", t.order()}, {"unit", 0},
      {"rows", std::move(rows)}};
}

ordered_json match_json(const SeriesMatch& m) {
  ordered_json params = ordered_json::object();
  for (const auto& [name, value] : m.params) {
    params[name] = value;
  }
  return ordered_json{{"series", to_string(m.series)},
                      {"params", std::move(params)}};
}

ordered_json star_json(const std::optional<StarWitness>& w) {
  if (!w) return nullptr;
  return ordered_json{{"involution", w->involution},
                      {"m", w->unit_multiplicities}};
}

ordered_json inv_sets_json(const InverseReport& r) {
  ordered_json out = ordered_json::object();
  for (std::size_t x = 1; x < r.inv.size(); ++x) {
    out[std::to_string(x)] = r.inv[x];
  }
  return out;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

MValTable parse_table(const std::string& text, const ParseOptions& opts) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) {
    throw ParseError("top level must be an object");
  }
  for (const auto& [key, value] : j.items()) {
    if (key != "n" && key != "order" && key != "unit" && key != "rows") {
      throw ParseError("unexpected field \"" + key + "\"");
    }
  }
  for (const char* field : {"n", "order", "unit", "rows"}) {
    if (!j.contains(field)) {
      throw ParseError(std::string("missing field \"") + field + "\"");
    }
  }

  const Count n = get_count(j["n"], "\"n\"");
  if (n < 1) throw ParseError("\"n\" must be >= 1");
  const Count order_count = get_count(j["order"], "\"order\"");
  if (order_count < 1) throw ParseError("\"order\" must be >= 1");
  const auto k = static_cast<std::size_t>(order_count);
  const Count unit = get_count(j["unit"], "\"unit\"");
  if (unit < 0 || unit >= order_count) {
    throw ParseError("\"unit\" must name an element, 0 <= unit < order");
  }

  const ordered_json& rows = j["rows"];
  if (!rows.is_array() || rows.size() != k) {
    throw ParseError("\"rows\" must be an array of " + std::to_string(k) +
                     " rows");
  }
  std::vector<std::vector<std::vector<Count>>> raw(
      k, std::vector<std::vector<Count>>(k));
  for (std::size_t i = 0; i < k; ++i) {
    const ordered_json& row = rows[i];
    if (!row.is_array() || row.size() != k) {
      throw ParseError("rows[" + std::to_string(i) + "] must be an array of " +
                       std::to_string(k) + " entries");
    }
    for (std::size_t jcol = 0; jcol < k; ++jcol) {
      const ordered_json& cell = row[jcol];
      const std::string at =
          "rows[" + std::to_string(i) + "][" + std::to_string(jcol) + "]";
      if (!cell.is_array() || cell.size() != k) {
        throw ParseError(at + " must list " + std::to_string(k) +
                         " multiplicities");
      }
      Count sum = 0;
      std::vector<Count> counts(k);
      for (std::size_t z = 0; z < k; ++z) {
        counts[z] = get_count(cell[z], at + "[" + std::to_string(z) + "]");
        if (counts[z] < 0) {
          throw ParseError(at + "[" + std::to_string(z) +
                           "] must be non-negative");
        }
        sum = checked_add(sum, counts[z]);
      }
      if (sum != n) {
        throw ParseError("entries of " + at + " sum to " +
                         std::to_string(sum) + ", expected n = " +
                         std::to_string(n));
      }
      raw[i][jcol] = std::move(counts);
    }
  }

  // move a non-zero declared unit to index 0 by swapping the two labels
  std::vector<std::size_t> perm(k);
  for (std::size_t i = 0; i < k; ++i) perm[i] = i;
  if (unit != 0) {
    std::swap(perm[0], perm[static_cast<std::size_t>(unit)]);
  }
  std::vector<Multiset> grid;
  grid.reserve(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t jcol = 0; jcol < k; ++jcol) {
      std::vector<Count> counts(k);
      for (std::size_t z = 0; z < k; ++z) {
        counts[perm[z]] = raw[i][jcol][z];
      }
      grid.push_back(Multiset(std::move(counts)));
    }
  }
  std::vector<Multiset> placed(grid);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t jcol = 0; jcol < k; ++jcol) {
      placed[perm[i] * k + perm[jcol]] = grid[i * k + jcol];
    }
  }

  MValTable t = [&] {
    try {
      return MValTable(n, k, std::move(placed));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }();

  if (!opts.allow_nonunital) {
    const auto violations = check_unit(t);
    if (!violations.empty()) {
      const UnitViolation& v = violations.front();
      std::string s = "unit law fails: " + elem_name(v.row) + "*" +
                      elem_name(v.col) + " = (";
      const auto& counts = v.actual.counts();
      for (std::size_t z = 0; z < counts.size(); ++z) {
        s += (z ? "," : "") + std::to_string(counts[z]);
      }
      s += "), expected " + std::to_string(n) + " copies of " +
           elem_name(v.row == 0 ? v.col : v.row);
      throw ParseError(s);
    }
  }
  return t;
}

MValTable parse_table(std::istream& in, const ParseOptions& opts) {
  std::string text(std::istreambuf_iterator<char>(in),
                   std::istreambuf_iterator<char>{});
  return parse_table(text, opts);
}

std::string table_to_json(const MValTable& t) { return dump(table_json(t)); }

std::string tables_to_json(const std::vector<MValTable>& ts) {
  ordered_json arr = ordered_json::array();
  for (const MValTable& t : ts) arr.push_back(table_json(t));
  return dump(arr);
}

std::string matches_to_json(const std::vector<SeriesMatch>& ms) {
  ordered_json arr = ordered_json::array();
  for (const SeriesMatch& m : ms) arr.push_back(match_json(m));
  return dump(arr);
}

std::string violation_to_json(const Violation& v) {
  return dump(ordered_json{{"triple", v.triple},
                           {"lhs", counts_json(v.lhs)},
                           {"rhs", counts_json(v.rhs)}});
}

std::string unit_violations_to_json(const std::vector<UnitViolation>& vs) {
  ordered_json arr = ordered_json::array();
  for (const UnitViolation& v : vs) {
    arr.push_back(ordered_json{
        {"row", v.row}, {"col", v.col}, {"actual", counts_json(v.actual)}});
  }
  return dump(arr);
}

std::string predicate_report_json(const MValTable& t) {
  const InverseReport inv = inverse_sets(t);
  return dump(ordered_json{{"group", inv.group()},
                           {"commutative", is_commutative(t)},
                           {"reversible", is_reversible(t)},
                           {"involutive", is_involutive(t)},
                           {"star_involutive",
                            star_json(star_involutive_witness(t))},
                           {"coset", to_string(coset_status(t).status)},
                           {"inv_sets", inv_sets_json(inv)}});
}

namespace {

ordered_json class_entry_json(const ClassEntry& e) {
  ordered_json series = ordered_json::array();
  for (const SeriesMatch& m : e.series) series.push_back(match_json(m));
  ordered_json orbit = ordered_json::array();
  for (Series s : e.orbit_series) orbit.push_back(to_string(s));
  return ordered_json{{"key", table_json(e.key.form)},
                      {"representative", table_json(e.representative)},
                      {"series", std::move(series)},
                      {"orbit_series", std::move(orbit)},
                      {"group", e.group},
                      {"commutative", e.commutative},
                      {"reversible", e.reversible},
                      {"involutive", e.involutive},
                      {"star_involutive", star_json(e.star)},
                      {"coset", to_string(e.coset.status)},
                      {"coset_reason", e.coset.reason},
                      {"inverse_map_count", e.inverses.inverse_map_count()},
                      {"inv_sets", inv_sets_json(e.inverses)}};
}

}  // namespace

std::string class_entries_to_json(const std::vector<ClassEntry>& entries) {
  ordered_json arr = ordered_json::array();
  for (const ClassEntry& e : entries) arr.push_back(class_entry_json(e));
  return dump(arr);
}

std::string enum_report_to_json(const EnumReport& report) {
  ordered_json per_series = ordered_json::object();
  for (const auto& [s, count] : report.per_series) {
    per_series[to_string(s)] = count;
  }
  ordered_json unmatched = ordered_json::array();
  for (const MValTable& t : report.unmatched) unmatched.push_back(table_json(t));
  return dump(ordered_json{{"n", report.n},
                           {"raw_count", report.raw_count},
                           {"class_count", report.class_count},
                           {"per_series", std::move(per_series)},
                           {"unmatched", std::move(unmatched)},
                           {"group_count", report.group_count},
                           {"commutative_group_count",
                            report.commutative_group_count},
                           {"reversible_count", report.reversible_count},
                           {"involutive_count", report.involutive_count},
                           {"star_count", report.star_count},
                           {"problems", report.problems},
                           {"ok", report.ok()}});
}

namespace {

const char* to_string(CheckResult::Status s) {
  switch (s) {
    case CheckResult::Status::ok:
      return "ok";
    case CheckResult::Status::fail:
      return "fail";
    case CheckResult::Status::flagged:
      return "flagged";
  }
  return "?";
}

}  // namespace

std::string check_results_to_json(const std::vector<CheckResult>& results) {
  ordered_json arr = ordered_json::array();
  for (const CheckResult& r : results) {
    arr.push_back(ordered_json{{"name", r.name},
                               {"status", to_string(r.status)},
                               {"detail", r.detail}});
  }
  return dump(arr);
}

namespace {

std::string flat_counts(const MValTable& t, char sep) {
  std::string s;
  for (std::size_t i = 0; i < t.order(); ++i) {
    for (std::size_t j = 0; j < t.order(); ++j) {
      for (Count c : t.entry(i, j).counts()) {
        if (!s.empty()) s += sep;
        s += std::to_string(c);
      }
    }
  }
  return s;
}

std::string csv_header(const MValTable& t) {
  std::string s = "n,order";
  for (std::size_t i = 0; i < t.order(); ++i) {
    for (std::size_t j = 0; j < t.order(); ++j) {
      for (std::size_t z = 0; z < t.order(); ++z) {
        s += ",r" + std::to_string(i) + "c" + std::to_string(j) + "m" +
             std::to_string(z);
      }
    }
  }
  return s;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string s;
  for (const std::string& p : parts) {
    if (!s.empty()) s += sep;
    s += p;
  }
  return s;
}

std::string describe_match(const SeriesMatch& m) {
  std::string s = to_string(m.series);
  if (m.params.empty()) return s;
  s += "(";
  for (std::size_t i = 0; i < m.params.size(); ++i) {
    if (i) s += ";";
    s += m.params[i].first + "=" + std::to_string(m.params[i].second);
  }
  return s + ")";
}

std::string entries_line(const MValTable& t) {
  std::string s;
  for (std::size_t i = 1; i < t.order(); ++i) {
    for (std::size_t j = 1; j < t.order(); ++j) {
      s += "(";
      const auto& counts = t.entry(i, j).counts();
      for (std::size_t z = 0; z < counts.size(); ++z) {
        s += (z ? "," : "") + std::to_string(counts[z]);
      }
      s += ")";
    }
  }
  return s;
}

}  // namespace

std::string tables_to_csv(const std::vector<MValTable>& ts) {
  if (ts.empty()) return "n,order\n";
  for (const MValTable& t : ts) {
    if (t.order() != ts.front().order()) {
      throw std::invalid_argument("csv output needs tables of one order");
    }
  }
  std::string s = csv_header(ts.front()) + "\n";
  for (const MValTable& t : ts) {
    s += std::to_string(t.valuedness()) + "," + std::to_string(t.order()) +
         "," + flat_counts(t, ',') + "\n";
  }
  return s;
}

std::string class_entries_to_csv(const std::vector<ClassEntry>& entries) {
  std::string s =
      "n,order,representative,series,orbit_series,group,commutative,"
      "reversible,involutive,star_involutive,coset\n";
  for (const ClassEntry& e : entries) {
    std::vector<std::string> matches;
    for (const SeriesMatch& m : e.series) matches.push_back(describe_match(m));
    std::vector<std::string> orbit;
    for (Series t : e.orbit_series) orbit.push_back(to_string(t));
    s += std::to_string(e.representative.valuedness()) + "," +
         std::to_string(e.representative.order()) + "," +
         entries_line(e.representative) + "," + join(matches, "|") + "," +
         join(orbit, "|") + "," + (e.group ? "true" : "false") + "," +
         (e.commutative ? "true" : "false") + "," +
         (e.reversible ? "true" : "false") + "," +
         (e.involutive ? "true" : "false") + "," +
         (e.star ? "true" : "false") + "," + to_string(e.coset.status) + "\n";
  }
  return s;
}

namespace {

std::string align_columns(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (row.size() > widths.size()) widths.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) {
      widths[i] = std::max(widths[i], row[i].size());
    }
  }
  std::string s;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) line += "  ";
      line += row[i];
      if (i + 1 < row.size()) {
        line.append(widths[i] - row[i].size(), ' ');
      }
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    s += line + "\n";
  }
  return s;
}

std::string cell_text(const Multiset& m) {
  std::string s = "(";
  const auto& counts = m.counts();
  for (std::size_t z = 0; z < counts.size(); ++z) {
    s += (z ? "," : "") + std::to_string(counts[z]);
  }
  return s + ")";
}

}  // namespace

std::string render_table(const MValTable& t) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> head = {"*"};
  for (std::size_t j = 0; j < t.order(); ++j) head.push_back(elem_name(j));
  rows.push_back(std::move(head));
  for (std::size_t i = 0; i < t.order(); ++i) {
    std::vector<std::string> row = {elem_name(i)};
    for (std::size_t j = 0; j < t.order(); ++j) {
      row.push_back(cell_text(t.entry(i, j)));
    }
    rows.push_back(std::move(row));
  }
  return "n = " + std::to_string(t.valuedness()) + ", order = " +
         std::to_string(t.order()) + ", unit = e\n" + align_columns(rows);
}

std::string render_class_entries(const std::vector<ClassEntry>& entries) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"#", "representative", "series", "orbit", "group", "comm",
                  "rev", "inv", "star", "coset"});
  std::size_t index = 1;
  for (const ClassEntry& e : entries) {
    std::vector<std::string> matches;
    for (const SeriesMatch& m : e.series) matches.push_back(describe_match(m));
    std::vector<std::string> orbit;
    for (Series s : e.orbit_series) orbit.push_back(to_string(s));
    rows.push_back({std::to_string(index++), entries_line(e.representative),
                    join(matches, "|"), join(orbit, "|"),
                    e.group ? "yes" : "no", e.commutative ? "yes" : "no",
                    e.reversible ? "yes" : "no", e.involutive ? "yes" : "no",
                    e.star ? "yes" : "no", to_string(e.coset.status)});
  }
  return align_columns(rows);
}

std::string render_check_results(const std::vector<CheckResult>& results) {
  std::vector<std::vector<std::string>> rows;
  std::size_t ok = 0, flagged = 0, failed = 0;
  for (const CheckResult& r : results) {
    const char* mark = "?";
    switch (r.status) {
      case CheckResult::Status::ok:
        mark = "[ ok ]";
        ++ok;
        break;
      case CheckResult::Status::fail:
        mark = "[FAIL]";
        ++failed;
        break;
      case CheckResult::Status::flagged:
        mark = "[flag]";
        ++flagged;
        break;
    }
    rows.push_back({mark, r.name, r.detail});
  }
  std::string s = align_columns(rows);
  s += std::to_string(results.size()) + " checks: " + std::to_string(ok) +
       " ok, " + std::to_string(flagged) + " flagged, " +
       std::to_string(failed) + " failed\n";
  return s;
}

}  // namespace mvm
