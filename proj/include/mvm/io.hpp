#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mvm/classify.hpp"
#include "mvm/enumerate.hpp"
#include "mvm/predicates.hpp"
#include "mvm/report.hpp"
#include "mvm/table.hpp"

namespace mvm {

// schema or validation problem in table input; the message names the
// first offending piece
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseOptions {
  bool allow_nonunital = false;
};

// Parses the JSON table schema
//   {"n": 3, "order": 3, "unit": 0, "rows": [[[3,0,0], ...], ...]}
// rejecting wrong dimensions, negative counts, row sums != n and (unless
// allow_nonunital) unit-law violations. A non-zero declared unit is moved
// to index 0 by swapping labels.
MValTable parse_table(const std::string& text, const ParseOptions& opts = {});
MValTable parse_table(std::istream& in, const ParseOptions& opts = {});

std::string table_to_json(const MValTable& t);
std::string tables_to_json(const std::vector<MValTable>& ts);
std::string matches_to_json(const std::vector<SeriesMatch>& ms);
std::string violation_to_json(const Violation& v);
std::string unit_violations_to_json(const std::vector<UnitViolation>& vs);

// {"group": ..., "commutative": ..., "reversible": ..., "involutive": ...,
//  "star_involutive": null | {...}, "coset": "...", "inv_sets": {...}}
std::string predicate_report_json(const MValTable& t);

std::string class_entries_to_json(const std::vector<ClassEntry>& entries);
std::string enum_report_to_json(const EnumReport& report);
std::string check_results_to_json(const std::vector<CheckResult>& results);

// csv with one line per table, multiplicities flattened row-major
std::string tables_to_csv(const std::vector<MValTable>& ts);
std::string class_entries_to_csv(const std::vector<ClassEntry>& entries);

// human-aligned text
std::string render_table(const MValTable& t);
std::string render_class_entries(const std::vector<ClassEntry>& entries);
std::string render_check_results(const std::vector<CheckResult>& results);

}  // namespace mvm
