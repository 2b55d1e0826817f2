// Command line front end: enumeration, classification, predicate checks,
// verification against the bundled reference tables, and the rational
// cross checks.
//
// Exit codes: 0 when evaluation succeeded and nothing disagreed (a false
// predicate verdict from `check` is still a successful evaluation), 2 when
// verification or a cross check found a mismatch, 1 on usage or input
// errors. Data goes to stdout (or --output); run metadata and timings go
// to stderr. Output bytes do not depend on --jobs.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "hommag/embedded_fixture.hpp"
#include "hommag/hommag.hpp"

namespace {

using Clock = std::chrono::steady_clock;

int64_t ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               start)
      .count();
}

// Writes data to --output or stdout; a trailing newline is the caller's
// business.
void emit(const std::string& data, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << data;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) {
    throw std::invalid_argument("cannot open output file: " + output_path);
  }
  out << data;
}

hommag::ReportFormat parse_format(const std::string& name) {
  auto format = hommag::format_from_name(name);
  if (!format) {
    throw std::invalid_argument("unknown format: " + name);
  }
  return *format;
}

struct CommonArgs {
  int order = 2;
  bool totals_only = false;
  bool count_only = false;
  int jobs = 1;
  std::string format = "text";
  std::string output;
};

int cmd_enumerate(const CommonArgs& args) {
  auto start = Clock::now();
  hommag::TableEnumerator tables(args.order, args.totals_only);
  if (args.count_only) {
    emit(std::to_string(tables.size()) + "\n", args.output);
  } else {
    std::string out;
    for (std::uint64_t i = 0; i < tables.size(); ++i) {
      out += hommag::encode(tables.at(i));
      out.push_back('\n');
    }
    emit(out, args.output);
  }
  std::cerr << "enumerated " << tables.size() << " tables of order "
            << args.order << (args.totals_only ? " (totals only)" : "")
            << " in " << ms_since(start) << " ms\n";
  return 0;
}

int cmd_classify(const CommonArgs& args) {
  auto start = Clock::now();
  if (args.count_only) {
    std::uint64_t n =
        hommag::count_classes(args.order, args.totals_only, args.jobs);
    emit(std::to_string(n) + "\n", args.output);
    std::cerr << "counted " << n << " classes of order " << args.order
              << " in " << ms_since(start) << " ms, jobs=" << args.jobs
              << "\n";
    return 0;
  }
  hommag::ClassificationReport report =
      hommag::classify(args.order, args.totals_only, args.jobs);
  emit(hommag::render_classification(report, parse_format(args.format)),
       args.output);
  std::cerr << "classified order " << args.order << " into "
            << report.classes.size() << " classes in " << ms_since(start)
            << " ms, jobs=" << args.jobs << "\n";
  return 0;
}

int cmd_check(const std::string& table_code, const std::string& kind_name,
              const std::string& alpha_code) {
  auto kind = hommag::predicate_from_name(kind_name);
  if (!kind) {
    throw std::invalid_argument("unknown predicate kind: " + kind_name);
  }
  hommag::PartialMagma m = hommag::decode_table(table_code);
  hommag::CheckResult result;
  if (hommag::takes_alpha(*kind)) {
    if (alpha_code.empty()) {
      throw std::invalid_argument("predicate kind '" + kind_name +
                                  "' needs --alpha");
    }
    result = hommag::check_predicate(*kind, m,
                                     hommag::decode_map(alpha_code));
  } else {
    if (!alpha_code.empty()) {
      throw std::invalid_argument("predicate kind '" + kind_name +
                                  "' takes no --alpha");
    }
    result = hommag::check_predicate(*kind, m);
  }
  std::cout << kind_name << " on " << table_code;
  if (!alpha_code.empty()) {
    std::cout << " with alpha " << alpha_code;
  }
  std::cout << ": " << (result.holds ? "true" : "false");
  if (result.witness) {
    std::cout << ", fails at " << result.witness->describe();
  }
  std::cout << "\n";
  // A false verdict is still a successful evaluation.
  return 0;
}

int cmd_verify_paper(const CommonArgs& args) {
  if (args.order != 2) {
    throw std::invalid_argument("the bundled reference tables cover order 2");
  }
  auto start = Clock::now();
  hommag::PaperFixture fixture =
      hommag::parse_fixture(hommag::embedded_fixture_text);
  hommag::ClassificationReport report =
      hommag::classify(fixture.order, false, args.jobs);
  hommag::VerificationOutcome outcome =
      hommag::verify_against_paper(report, fixture);
  outcome.append(hommag::as_verification(
      hommag::cross_check_theorem2(fixture.order), "theorem2-grid"));
  emit(hommag::render_verification(outcome, parse_format(args.format)),
       args.output);
  std::cerr << "verified " << outcome.items.size() << " claims in "
            << ms_since(start) << " ms, jobs=" << args.jobs << ", "
            << outcome.mismatch_count() << " mismatches\n";
  return outcome.all_match() ? 0 : 2;
}

int cmd_algebra_check(const std::string& table_code,
                      const std::string& alpha_code, int trials,
                      std::uint64_t seed) {
  hommag::PartialMagma m = hommag::decode_table(table_code);
  hommag::PartialMap a = hommag::decode_map(alpha_code);
  hommag::HomAlgebraInstance h(m, a);

  // Each line shows the rational-coefficient verdict next to the pointwise
  // one; the two computations are independent and must agree.
  struct Row {
    const char* name;
    bool algebra;
    bool pointwise;
  };
  const Row rows[] = {
      {"multiplicative / partial-endo", hommag::is_multiplicative(h),
       hommag::is_partial_endomorphism(m, a)},
      {"partially-multiplicative / weak-partial-endo",
       hommag::is_partially_basis_multiplicative(h),
       hommag::is_weak_partial_endomorphism(m, a)},
      {"hom-associative / hom-assoc", hommag::is_hom_associative_algebra(h),
       hommag::is_hom_associative(m, a)},
      {"partially-hom-associative / partial-hom-assoc",
       hommag::is_partially_basis_hom_associative(h),
       hommag::is_partially_hom_associative(m, a)},
      {"associative / assoc", hommag::is_associative_algebra(m),
       hommag::is_associative(m)},
      {"partially-associative / partial-assoc",
       hommag::is_partially_basis_associative(m),
       hommag::is_partially_associative(m)},
  };
  bool consistent = true;
  for (const Row& row : rows) {
    bool agree = row.algebra == row.pointwise;
    consistent = consistent && agree;
    std::cout << row.name << ": algebra=" << (row.algebra ? "true" : "false")
              << " pointwise=" << (row.pointwise ? "true" : "false")
              << (agree ? "" : "  <-- disagree") << "\n";
  }
  bool bilinear = hommag::randomized_bilinear_check(h, trials, seed);
  std::cout << "random bilinear extension (" << trials << " trials, seed "
            << seed << "): " << (bilinear ? "consistent" : "violated")
            << "\n";
  return (consistent && bilinear) ? 0 : 2;
}

int cmd_report(const std::string& input_path, const std::string& format,
               const std::string& output_path) {
  std::ifstream in(input_path);
  if (!in) {
    throw std::invalid_argument("cannot open input file: " + input_path);
  }
  nlohmann::json doc = nlohmann::json::parse(in);
  hommag::ClassificationReport report = hommag::classification_from_json(doc);
  emit(hommag::render_classification(report, parse_format(format)),
       output_path);
  std::cerr << "rendered " << report.classes.size() << " classes from "
            << input_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Partial multiplication tables: enumeration, classification, "
      "twisting-map predicates and rational cross checks"};
  app.require_subcommand(1);

  CommonArgs enum_args;
  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "List (or count) all tables of an order");
  enumerate->add_option("--order", enum_args.order, "Carrier size")
      ->default_val(2);
  enumerate->add_flag("--totals-only", enum_args.totals_only,
                      "Only everywhere-defined tables");
  enumerate->add_flag("--count-only", enum_args.count_only,
                      "Print only the number of tables");
  enumerate->add_option("--output", enum_args.output, "Write data here");

  CommonArgs classify_args;
  classify_args.format = "json";
  CLI::App* classify = app.add_subcommand(
      "classify", "Group tables into classes with their twisting-map sets");
  classify->add_option("--order", classify_args.order, "Carrier size")
      ->default_val(2);
  classify->add_flag("--totals-only", classify_args.totals_only,
                     "Only everywhere-defined tables");
  classify->add_flag("--count-only", classify_args.count_only,
                     "Print only the number of classes");
  classify->add_option("--format", classify_args.format,
                       "json, csv, markdown or text")
      ->default_val("json");
  classify->add_option("--jobs", classify_args.jobs,
                       "Worker threads (output does not depend on this)")
      ->default_val(1);
  classify->add_option("--output", classify_args.output, "Write data here");

  std::string check_table;
  std::string check_kind;
  std::string check_alpha;
  CLI::App* check =
      app.add_subcommand("check", "Evaluate one predicate on one table");
  check->add_option("--table", check_table, "Table code")->required();
  check->add_option("--kind", check_kind,
                    "weak-partial-endo, partial-endo, endo, "
                    "partial-hom-assoc, hom-assoc, partial-assoc or assoc")
      ->required();
  check->add_option("--alpha", check_alpha,
                    "Twisting map code (for the kinds that take one)");

  CommonArgs verify_args;
  CLI::App* verify = app.add_subcommand(
      "verify-paper",
      "Recompute everything and compare against the bundled reference "
      "tables");
  verify->add_option("--order", verify_args.order, "Carrier size")
      ->default_val(2);
  verify->add_option("--format", verify_args.format,
                     "text, json, csv or markdown")
      ->default_val("text");
  verify->add_option("--jobs", verify_args.jobs,
                     "Worker threads (output does not depend on this)")
      ->default_val(1);
  verify->add_option("--output", verify_args.output, "Write data here");

  std::string algebra_table;
  std::string algebra_alpha;
  int algebra_trials = 64;
  std::uint64_t algebra_seed = 1;
  CLI::App* algebra = app.add_subcommand(
      "algebra-check",
      "Compare the rational-coefficient route with the pointwise one for a "
      "single table and map");
  algebra->add_option("--table", algebra_table, "Table code")->required();
  algebra->add_option("--alpha", algebra_alpha, "Twisting map code")
      ->required();
  algebra->add_option("--trials", algebra_trials,
                      "Random vector triples to test")
      ->default_val(64);
  algebra->add_option("--seed", algebra_seed, "Random engine seed")
      ->default_val(1);

  std::string report_input;
  std::string report_format = "markdown";
  std::string report_output;
  CLI::App* report = app.add_subcommand(
      "report", "Render a saved classification (JSON) in another format");
  report->add_option("--input", report_input, "Classification JSON file")
      ->required();
  report->add_option("--format", report_format, "json, csv, markdown or text")
      ->default_val("markdown");
  report->add_option("--output", report_output, "Write data here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (enumerate->parsed()) {
      return cmd_enumerate(enum_args);
    }
    if (classify->parsed()) {
      return cmd_classify(classify_args);
    }
    if (check->parsed()) {
      return cmd_check(check_table, check_kind, check_alpha);
    }
    if (verify->parsed()) {
      return cmd_verify_paper(verify_args);
    }
    if (algebra->parsed()) {
      return cmd_algebra_check(algebra_table, algebra_alpha, algebra_trials,
                               algebra_seed);
    }
    if (report->parsed()) {
      return cmd_report(report_input, report_format, report_output);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
