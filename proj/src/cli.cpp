#include "mvm/cli.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "mvm/enumerate.hpp"
#include "mvm/families.hpp"
#include "mvm/io.hpp"
#include "mvm/report.hpp"

namespace mvm::cli {

namespace {

// "-" is standard input; anything else is a file path
MValTable load_table(const std::string& source, std::istream& input,
                     const ParseOptions& opts) {
  if (source == "-") return parse_table(input, opts);
  std::ifstream file(source);
  if (!file) throw ParseError("cannot open " + source);
  return parse_table(file, opts);
}

CommandOutcome run_check(const std::string& source, Count borovik_n,
                         bool allow_nonunital, std::istream& input,
                         std::ostream& diag) {
  MValTable t = [&] {
    if (source == "borovik") {
      if (borovik_n < 0) throw ParseError("check borovik requires --n");
      return make_borovik(borovik_n);
    }
    return load_table(source, input, {allow_nonunital});
  }();

  const auto unit_violations = check_unit(t);
  if (!unit_violations.empty()) {
    diag << "unit law fails at " << unit_violations.size() << " entries\n";
    return {1, unit_violations_to_json(unit_violations)};
  }
  if (const auto v = check_associativity(t)) {
    diag << "associativity fails at (" << v->triple[0] << "," << v->triple[1]
         << "," << v->triple[2] << ")\n";
    return {1, violation_to_json(*v)};
  }
  return {0, predicate_report_json(t)};
}

CommandOutcome run_classify(const std::string& source, std::istream& input,
                            std::ostream& diag) {
  const MValTable t = load_table(source, input, {});
  if (const auto v = check_associativity(t)) {
    diag << "not associative, nothing to classify\n";
    return {1, violation_to_json(*v)};
  }
  const auto matches = match_series(t);
  if (matches.empty()) {
    diag << "associative table matching no series; this contradicts the "
            "classification\n";
    return {1, matches_to_json(matches)};
  }
  return {0, matches_to_json(matches)};
}

CommandOutcome run_enumerate(Count n, bool classes, unsigned jobs,
                             const std::string& format, bool allow_large) {
  const EnumOptions opts{jobs, allow_large};
  if (classes) {
    const auto entries = enumerate_classes(n, opts);
    if (format == "csv") return {0, class_entries_to_csv(entries)};
    if (format == "table") return {0, render_class_entries(entries)};
    return {0, class_entries_to_json(entries)};
  }
  const auto tables = enumerate_monoids(n, opts);
  if (format == "csv") return {0, tables_to_csv(tables)};
  if (format == "table") {
    std::string s;
    for (const MValTable& t : tables) {
      if (!s.empty()) s += "\n";
      s += render_table(t);
    }
    return {0, s};
  }
  return {0, tables_to_json(tables)};
}

CommandOutcome run_family(const std::string& which, Count n, Count k,
                          Count m1, Count m2, Count a1) {
  auto need = [&](Count value, const char* flag) {
    if (value < 0) {
      throw std::invalid_argument("family " + which + " requires " + flag);
    }
    return value;
  };
  if (which == "xn") return {0, table_to_json(make_xn(need(n, "--n")))};
  if (which == "borovik") {
    return {0, table_to_json(make_borovik(need(n, "--n")))};
  }
  if (which == "single-valued") {
    return {0, tables_to_json(single_valued_order3())};
  }
  if (which == "b2tilde") {
    return {0, table_to_json(make_b2tilde_4k3(need(k, "--k")))};
  }
  // starb1
  const StarFormParams p{need(m1, "--m1"), need(m2, "--m2"),
                         need(a1, "--a1"), need(n, "--n")};
  return {0, table_to_json(make_star_form(p, StarForm::b1_tilde))};
}

CommandOutcome run_report(Count n_max, Count xn_max, unsigned jobs,
                          const std::string& format, std::ostream& diag) {
  const auto results = corollary_report({n_max, xn_max, jobs});
  const bool passed = all_passed(results);
  if (!passed) diag << "some checks failed\n";
  const int code = passed ? 0 : 1;
  if (format == "table") return {code, render_check_results(results)};
  return {code, check_results_to_json(results)};
}

}  // namespace

CommandOutcome run(const std::vector<std::string>& args, std::istream& input,
                   std::ostream& diag) {
  CLI::App app{"exact arithmetic for n-valued monoids of order 3"};
  app.name("mvm");
  app.require_subcommand(1);

  std::string check_source;
  Count check_n = -1;
  bool allow_nonunital = false;
  CLI::App* check = app.add_subcommand(
      "check", "validate a table and report its predicates");
  check->add_option("table", check_source,
                    "table file, - for stdin, or 'borovik'")
      ->required();
  check->add_option("--n", check_n, "order of the borovik magma");
  check->add_flag("--allow-nonunital", allow_nonunital,
                  "load tables that break the unit law");

  std::string classify_source;
  CLI::App* classify = app.add_subcommand(
      "classify", "match a table against the six series");
  classify->add_option("table", classify_source, "table file or - for stdin")
      ->required();

  Count enum_n = 0;
  bool enum_classes = false;
  unsigned enum_jobs = 1;
  std::string enum_format = "json";
  bool enum_allow_large = false;
  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "list all monoids (or classes) of a given valuedness");
  enumerate->add_option("--n", enum_n, "valuedness")->required();
  enumerate->add_flag("--classes", enum_classes,
                      "deduplicate into isomorphism classes");
  enumerate->add_option("--jobs", enum_jobs, "worker threads");
  enumerate->add_option("--format", enum_format, "json, csv or table")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  enumerate->add_flag("--allow-large", enum_allow_large,
                      "search beyond n = 30");

  std::string family_which;
  Count family_n = -1, family_k = -1, family_m1 = -1, family_m2 = -1,
        family_a1 = -1;
  CLI::App* family = app.add_subcommand(
      "family", "emit one of the named table families as JSON");
  family
      ->add_option("which", family_which,
                   "xn, borovik, single-valued, b2tilde or starb1")
      ->required()
      ->check(CLI::IsMember(
          {"xn", "borovik", "single-valued", "b2tilde", "starb1"}));
  family->add_option("--n", family_n, "valuedness (xn, starb1) or order (borovik)");
  family->add_option("--k", family_k, "parameter of the 4k+3 family");
  family->add_option("--m1", family_m1, "unit multiplicity m(x1)");
  family->add_option("--m2", family_m2, "unit multiplicity m(x2)");
  family->add_option("--a1", family_a1, "multiplicity a(x1)");

  std::string report_what;
  Count report_n_max = 4;
  Count report_xn_max = 12;
  unsigned report_jobs = 1;
  std::string report_format = "json";
  CLI::App* report = app.add_subcommand(
      "report", "re-derive the classification and its corollaries");
  report->add_option("what", report_what, "only 'corollaries' exists")
      ->required()
      ->check(CLI::IsMember({"corollaries"}));
  report->add_option("--n-max", report_n_max, "verify valuedness 1..n-max");
  report->add_option("--xn-max", report_xn_max, "check X_n up to this n");
  report->add_option("--jobs", report_jobs, "worker threads");
  report->add_option("--format", report_format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return {0, app.help()};
  } catch (const CLI::ParseError& e) {
    diag << e.what() << "\n";
    return {2, ""};
  }

  try {
    if (check->parsed()) {
      return run_check(check_source, check_n, allow_nonunital, input, diag);
    }
    if (classify->parsed()) {
      return run_classify(classify_source, input, diag);
    }
    if (enumerate->parsed()) {
      return run_enumerate(enum_n, enum_classes, enum_jobs, enum_format,
                           enum_allow_large);
    }
    if (family->parsed()) {
      return run_family(family_which, family_n, family_k, family_m1,
                        family_m2, family_a1);
    }
    if (report->parsed()) {
      return run_report(report_n_max, report_xn_max, report_jobs,
                        report_format, diag);
    }
  } catch (const ParseError& e) {
    diag << "input error: " << e.what() << "\n";
    return {2, ""};
  } catch (const std::invalid_argument& e) {
    diag << "invalid argument: " << e.what() << "\n";
    return {2, ""};
  } catch (const std::overflow_error& e) {
    diag << "arithmetic overflow: " << e.what() << "\n";
    return {2, ""};
  } catch (const std::runtime_error& e) {
    diag << e.what() << "\n";
    return {2, ""};
  }
  diag << "no subcommand selected\n";
  return {2, ""};
}

}  // namespace mvm::cli
