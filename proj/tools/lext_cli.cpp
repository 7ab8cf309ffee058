// lext: enumerate pattern-avoiding linear extensions of heap and rectangular
// posets, print their inversion polynomials, and run verification sweeps.
//
// Exit status: 0 success / all checks PASS, 1 a check FAILed, 2 usage error.

#include <cstdio>
#include <iostream>
#include <limits>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lext/heap.hpp"
#include "lext/oeis.hpp"
#include "lext/permutation.hpp"
#include "lext/poset.hpp"
#include "lext/qpoly.hpp"
#include "lext/theorems.hpp"
#include "lext/verify.hpp"

namespace {

using nlohmann::json;
using namespace lext;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json to_json(const BigInt& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() &&
      value <= std::numeric_limits<std::int64_t>::max())
    return value.convert_to<std::int64_t>();
  return value.str();
}

json to_json(const QPolynomial& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(json::array({e, to_json(c)}));
  return terms;
}

json to_json(const Permutation& p) { return json(std::vector<int>(p.entries().begin(), p.entries().end())); }

struct PosetSpec {
  enum class Kind { rect, heap } kind;
  int a;
  int b;
};

// "rect:s,t" or "heap:n,k".
PosetSpec parse_poset_spec(const std::string& text) {
  const auto colon = text.find(':');
  const auto comma = text.find(',', colon == std::string::npos ? 0 : colon);
  if (colon == std::string::npos || comma == std::string::npos)
    throw UsageError("malformed poset spec '" + text + "' (expected rect:s,t or heap:n,k)");
  const std::string family = text.substr(0, colon);
  PosetSpec spec{};
  if (family == "rect") spec.kind = PosetSpec::Kind::rect;
  else if (family == "heap") spec.kind = PosetSpec::Kind::heap;
  else throw UsageError("unknown poset family '" + family + "'");
  try {
    std::size_t used_a = 0, used_b = 0;
    const std::string first = text.substr(colon + 1, comma - colon - 1);
    const std::string second = text.substr(comma + 1);
    spec.a = std::stoi(first, &used_a);
    spec.b = std::stoi(second, &used_b);
    if (used_a != first.size() || used_b != second.size()) throw std::invalid_argument("junk");
  } catch (const std::exception&) {
    throw UsageError("malformed poset spec '" + text + "'");
  }
  if (spec.kind == PosetSpec::Kind::rect && (spec.a < 1 || spec.b < 1))
    throw UsageError("rect:s,t needs s >= 1 and t >= 1");
  if (spec.kind == PosetSpec::Kind::heap && (spec.a < 1 || spec.b < 2))
    throw UsageError("heap:n,k needs n >= 1 and k >= 2");
  return spec;
}

LabeledPoset build_poset(const PosetSpec& spec) {
  return spec.kind == PosetSpec::Kind::rect ? rectangular_poset(spec.a, spec.b)
                                            : complete_kary_tree(spec.a, spec.b);
}

void require_choice(const std::string& value, std::initializer_list<const char*> choices,
                    const std::string& option) {
  for (const char* c : choices)
    if (value == c) return;
  throw UsageError("invalid " + option + " '" + value + "'");
}

void print_permutations(const std::vector<Permutation>& items, const std::string& format,
                        const json& header, const char* key) {
  if (format == "json") {
    json out = header;
    out[key] = json::array();
    for (const auto& p : items) out[key].push_back(to_json(p));
    std::cout << out.dump() << '\n';
  } else if (format == "csv") {
    for (const auto& p : items) {
      std::string line;
      for (int v : p.entries()) line += (line.empty() ? "" : ",") + std::to_string(v);
      std::cout << line << '\n';
    }
  } else {
    for (const auto& p : items) std::cout << p.to_string() << '\n';
  }
}

void print_count(const BigInt& count, const std::string& format, json header) {
  if (format == "json") {
    header["count"] = to_json(count);
    std::cout << header.dump() << '\n';
  } else if (format == "csv") {
    std::cout << "count\n" << count.str() << '\n';
  } else {
    std::cout << count.str() << '\n';
  }
}

void print_polynomial(const QPolynomial& p, const std::string& format, json header) {
  if (format == "json") {
    header["polynomial"] = to_json(p);
    std::cout << header.dump() << '\n';
  } else if (format == "csv") {
    std::cout << "exponent,coefficient\n";
    for (const auto& [e, c] : p.terms()) std::cout << e << ',' << c.str() << '\n';
  } else {
    std::cout << p.to_string() << '\n';
  }
}

int print_report(const Report& report) {
  for (const auto& line : report.checks) {
    std::cout << (line.passed ? "PASS " : "FAIL ") << line.label;
    if (!line.detail.empty()) std::cout << "  [" << line.detail << "]";
    std::cout << '\n';
  }
  for (const auto& note : report.notes) std::cout << "INFO " << note << '\n';
  std::cout << (report.passed() ? "PASS" : "FAIL") << '\n';
  return report.passed() ? kExitOk : kExitFail;
}

oeis::Client make_client(bool offline) {
  auto options = oeis::default_options();
  options.offline = offline;
  return oeis::Client(std::move(options));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pattern-avoiding linear extensions of heap and rectangular posets"};
  app.require_subcommand(1);

  std::string poset_text;
  std::string avoid_text;
  std::string mode = "list";
  std::string format = "text";
  bool dump = false;
  auto* extensions = app.add_subcommand("extensions", "Linear extensions of rect:s,t or heap:n,k");
  extensions->add_option("--poset", poset_text, "rect:s,t or heap:n,k")->required();
  extensions->add_option("--avoid", avoid_text, "Comma-separated patterns, e.g. 1243,2143");
  extensions->add_option("--mode", mode, "list | count | polynomial");
  extensions->add_option("--format", format, "text | json | csv");
  extensions->add_flag("--dump", dump, "Print the cover relation before the result");

  std::string heap_mode = "list";
  auto* heaps = app.add_subcommand("heaps", "Heap readings avoiding patterns (H_n^k)");
  heaps->add_option("--poset", poset_text, "heap:n,k")->required();
  heaps->add_option("--avoid", avoid_text, "Comma-separated patterns");
  heaps->add_option("--mode", heap_mode, "list | count");
  heaps->add_option("--format", format, "text | json | csv");

  int growth_k = 2;
  int max_n = 0;
  std::string growth_format = "csv";
  auto* growth = app.add_subcommand("growth", "Counts |H_n^k(T)| and count^(1/n) as CSV");
  growth->add_option("--k", growth_k, "Arity");
  growth->add_option("--avoid", avoid_text, "Comma-separated patterns");
  growth->add_option("--max-n", max_n, "Largest n")->required();
  growth->add_option("--format", growth_format, "csv | json");

  std::string poly_kind;
  int poly_index = 0;
  auto* poly = app.add_subcommand("poly", "Closed-form polynomials");
  poly->add_option("kind", poly_kind, "thm2 | thm3 | thm4 | fs | h")->required();
  poly->add_option("index", poly_index, "t for thm2, s for thm3/thm4/fs, l for h")->required();
  poly->add_option("--format", format, "text | json | csv");

  int trunc = verify::Defaults::series_order;
  auto* series = app.add_subcommand("series", "Expand the F_s generating function in x");
  series->add_option("--trunc", trunc, "Truncation order");
  series->add_option("--format", format, "text | json");

  std::string target;
  int max_s = 0;
  int max_t = 0;
  bool offline = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification sweep");
  verify_cmd
      ->add_option("target", target,
                   "thm2 | thm3 | thm4 | thm4-partition | series | thm5 | claim | bounds | all")
      ->required();
  verify_cmd->add_option("--max-s", max_s, "Largest s");
  verify_cmd->add_option("--max-t", max_t, "Largest t");
  verify_cmd->add_option("--max-n", max_n, "Largest n");
  verify_cmd->add_option("--trunc", trunc, "Series truncation order");
  verify_cmd->add_flag("--offline", offline, "Never touch the network");

  std::string oeis_action;
  std::string oeis_arg;
  auto* oeis_cmd = app.add_subcommand("oeis", "Fetch OEIS terms or compare a diagonal of F_s");
  oeis_cmd->add_option("action", oeis_action, "fetch | compare")->required();
  oeis_cmd->add_option("arg", oeis_arg, "Sequence id (fetch) or diagonal q3|2s-2|s-1|s|s+1|s+2")
      ->required();
  oeis_cmd->add_option("--max-s", max_s, "Largest s for compare");
  oeis_cmd->add_flag("--offline", offline, "Never touch the network");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*extensions) {
      require_choice(mode, {"list", "count", "polynomial"}, "--mode");
      require_choice(format, {"text", "json", "csv"}, "--format");
      const auto poset = build_poset(parse_poset_spec(poset_text));
      const PatternSet patterns = PatternSet::parse(avoid_text);
      if (dump) std::cout << poset.dump();
      const json header = {{"poset", poset_text}, {"avoid", patterns.to_string()}};
      if (mode == "list")
        print_permutations(list_linear_extensions(poset, patterns), format, header, "extensions");
      else if (mode == "count")
        print_count(count_linear_extensions(poset, patterns), format, header);
      else
        print_polynomial(inversion_polynomial(poset, patterns), format, header);
      return kExitOk;
    }
    if (*heaps) {
      require_choice(heap_mode, {"list", "count"}, "--mode");
      require_choice(format, {"text", "json", "csv"}, "--format");
      const auto spec = parse_poset_spec(poset_text);
      if (spec.kind != PosetSpec::Kind::heap) throw UsageError("heaps needs --poset heap:n,k");
      const PatternSet patterns = PatternSet::parse(avoid_text);
      const json header = {{"poset", poset_text}, {"avoid", patterns.to_string()}};
      if (heap_mode == "list")
        print_permutations(list_heaps(spec.a, spec.b, patterns), format, header, "heaps");
      else
        print_count(count_heaps(spec.a, spec.b, patterns), format, header);
      return kExitOk;
    }
    if (*growth) {
      require_choice(growth_format, {"csv", "json"}, "--format");
      if (growth_k < 2 || max_n < 1) throw UsageError("growth needs --k >= 2 and --max-n >= 1");
      const auto table = growth_table(growth_k, PatternSet::parse(avoid_text), max_n);
      if (growth_format == "csv") {
        std::cout << table.to_csv();
      } else {
        json rows = json::array();
        for (const auto& row : table.rows) {
          char buf[64];
          std::snprintf(buf, sizeof buf, "%.6f", row.root);
          rows.push_back({{"n", row.n}, {"count", to_json(row.count)}, {"b_n", std::string(buf)}});
        }
        std::cout << json{{"k", growth_k}, {"avoid", table.patterns.to_string()}, {"rows", rows}}.dump()
                  << '\n';
      }
      return kExitOk;
    }
    if (*poly) {
      require_choice(poly_kind, {"thm2", "thm3", "thm4", "fs", "h"}, "kind");
      require_choice(format, {"text", "json", "csv"}, "--format");
      QPolynomial p;
      if (poly_kind == "thm2") p = thm2_closed_form(poly_index);
      else if (poly_kind == "thm3") p = thm3_closed_form(poly_index);
      else if (poly_kind == "thm4") p = thm4_closed_form(poly_index);
      else if (poly_kind == "fs") p = fs_polynomial(poly_index);
      else p = h_polynomial(poly_index);
      print_polynomial(p, format, {{"kind", poly_kind}, {"index", poly_index}});
      return kExitOk;
    }
    if (*series) {
      require_choice(format, {"text", "json"}, "--format");
      const XSeries a = a_series_expand(trunc);
      if (format == "json") {
        json coefficients = json::array();
        for (int s = 0; s <= trunc; ++s) coefficients.push_back(to_json(a[s]));
        std::cout << json{{"trunc", trunc}, {"coefficients", coefficients}}.dump() << '\n';
      } else {
        for (int s = 0; s <= trunc; ++s) std::cout << "x^" << s << ": " << a[s].to_string() << '\n';
      }
      return kExitOk;
    }
    if (*verify_cmd) {
      using D = verify::Defaults;
      const auto pick = [](int value, int fallback) { return value > 0 ? value : fallback; };
      Report report;
      const bool all = target == "all";
      bool known = all;
      if (all || target == "thm2") {
        known = true;
        const int t = pick(max_t, D::thm2_max_t);
        report.append(verify::thm2(t, std::min(t, D::thm2_structure_max_t)));
      }
      if (all || target == "thm3") {
        known = true;
        report.append(verify::thm3(pick(max_s, D::thm3_max_s)));
      }
      if (all || target == "thm4") {
        known = true;
        report.append(verify::thm4(pick(max_s, D::thm4_max_s)));
      }
      if (all || target == "thm4-partition") {
        known = true;
        report.append(verify::thm4_partition(pick(max_s, D::thm4_max_s)));
      }
      if (all || target == "series") {
        known = true;
        report.append(verify::series(trunc));
      }
      if (all || target == "thm5") {
        known = true;
        report.append(verify::thm5(make_client(offline), pick(max_s, D::thm5_max_s), D::thm5_min_overlap));
      }
      if (all || target == "claim") {
        known = true;
        report.append(verify::claim(pick(max_n, D::claim_max_n), D::suffix_max_n));
      }
      if (all || target == "bounds") {
        known = true;
        report.append(verify::bounds(pick(max_n, D::bounds_max_n), D::heap_321_max_n));
      }
      if (!known) throw UsageError("unknown verify target '" + target + "'");
      return print_report(report);
    }
    if (*oeis_cmd) {
      const auto client = make_client(offline);
      if (oeis_action == "fetch") {
        const auto seq = client.fetch(oeis_arg);
        for (const auto& w : seq.warnings) std::cerr << "warning: " << w << '\n';
        std::cout << "# " << seq.id << " source=" << oeis::source_name(seq.source) << '\n';
        for (std::size_t i = 0; i < seq.terms.size(); ++i)
          std::cout << seq.offset + static_cast<long>(i) << ' ' << seq.terms[i].str() << '\n';
        return kExitOk;
      }
      if (oeis_action == "compare") {
        const auto kind = parse_diagonal(oeis_arg);
        if (!kind) throw UsageError("unknown diagonal '" + oeis_arg + "'");
        const int s_max = max_s > 0 ? max_s : verify::Defaults::thm5_max_s;
        const auto computed = diagonal_coefficients(*kind, s_max);
        const auto seq = client.fetch(diagonal_oeis_id(*kind));
        const auto alignment =
            oeis::align_and_compare(computed, seq, verify::Defaults::thm5_min_overlap);
        for (const auto& w : seq.warnings) std::cerr << "warning: " << w << '\n';
        std::cout << (alignment.passed ? "PASS " : "FAIL ") << seq.id << " ("
                  << oeis::source_name(seq.source) << ") " << alignment.detail << '\n';
        return alignment.passed ? kExitOk : kExitFail;
      }
      throw UsageError("unknown oeis action '" + oeis_action + "'");
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const std::invalid_argument& e) {  // ValidationError, ParameterError, FormatError
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const oeis::UnavailableError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
