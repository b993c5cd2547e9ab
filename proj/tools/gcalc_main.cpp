// gcalc — command-line surface for the exact graph-series calculus.
//
// Subcommands:
//   enum       list the canonical graphs of one weight with metadata
//   table1     per-family counts of stable graphs for weights 0..K
//   series     print a named coefficient series through a maximum weight
//   verify     run an identity suite and report counterexamples
//   karabegov  low-order obstruction fixtures and determinant fuzzing
//
// Exit codes: 0 success / all checks pass, 1 verification failure, 2 usage or
// configuration error. Stdout is byte-identical for identical configuration
// (including --seed); measured wall time goes to stderr and is embedded in
// the output only under --timings.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gcalc/enumerate.hpp"
#include "gcalc/golden.hpp"
#include "gcalc/graph.hpp"
#include "gcalc/karabegov.hpp"
#include "gcalc/rational.hpp"
#include "gcalc/report.hpp"
#include "gcalc/series.hpp"
#include "gcalc/spectral.hpp"
#include "gcalc/suites.hpp"

namespace {

using gcalc::EnumSpec;
using gcalc::Family;
using gcalc::GraphSeries;
using gcalc::PointedGraph;
using gcalc::Rational;
using gcalc::Stability;
using gcalc::VerificationReport;
using nlohmann::json;

constexpr const char* kSchema = "gcalc/1";
constexpr unsigned long long kDefaultSeed = 20240814ULL;

// ---------------------------------------------------------------------------
// Small formatting helpers
// ---------------------------------------------------------------------------

Stability parse_stability(const std::string& s) {
  if (s == "stable") return Stability::kStable;
  if (s == "ss") return Stability::kSemistable;
  if (s == "scon") return Stability::kScon;
  throw std::invalid_argument("unknown stability mode: " + s);
}

Family parse_family(const std::string& s) {
  if (s == "all") return Family::kAll;
  if (s == "b") return Family::kB;
  if (s == "bt") return Family::kBT;
  if (s == "s") return Family::kS;
  throw std::invalid_argument("unknown graph class: " + s);
}

const char* family_name(Family f) {
  switch (f) {
    case Family::kAll: return "all";
    case Family::kB: return "b";
    case Family::kBT: return "bt";
    case Family::kS: return "s";
  }
  return "?";
}

std::vector<std::string> family_names(const PointedGraph& g) {
  std::vector<std::string> out;
  if (g.marked_count() != 1 || !g.strongly_connected()) return out;
  for (Family f : gcalc::classify_family(g)) out.push_back(family_name(f));
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string latex_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') {
      out += "\\textbar{}";
    } else {
      out += c;
    }
  }
  return out;
}

std::string rational_latex(const Rational& r) {
  if (r.den() == 1) return "$" + std::to_string(r.num()) + "$";
  long long n = r.num();
  std::string sign = n < 0 ? "-" : "";
  if (n < 0) n = -n;
  return "$" + sign + "\\tfrac{" + std::to_string(n) + "}{" + std::to_string(r.den()) + "}$";
}

json rational_json(const Rational& r) { return json{{"num", r.num()}, {"den", r.den()}}; }

// One listed graph, with or without a series coefficient.
struct Row {
  std::string key;
  long long weight = 0;
  long long edges = 0;
  long long aut = 0;
  long long det = 0;
  std::vector<std::string> families;
  std::optional<Rational> coefficient;
};

Row make_row(const PointedGraph& g, std::optional<Rational> coeff = std::nullopt) {
  Row row;
  row.key = g.canonical_key();
  row.weight = g.weight();
  row.edges = g.edge_count();
  row.aut = g.aut_order();
  row.det = gcalc::char_det(g.ordinary_part());
  row.families = family_names(g);
  row.coefficient = std::move(coeff);
  return row;
}

// ---------------------------------------------------------------------------
// Output assembly
// ---------------------------------------------------------------------------

// Every format carries the configuration echo: JSON as a "config" object,
// text/CSV as leading "# key value" lines, LaTeX as "% key value" comments.
using Config = std::vector<std::pair<std::string, std::string>>;

std::string config_comments(const Config& config, const std::string& prefix) {
  std::string out = prefix + " schema " + kSchema + "\n";
  for (const auto& [k, v] : config) out += prefix + " " + k + " " + v + "\n";
  return out;
}

json config_json(const Config& config) {
  json j = json::object();
  for (const auto& [k, v] : config) j[k] = v;
  return j;
}

std::string render_rows(const std::string& command, const Config& config,
                        const std::vector<Row>& rows, const std::string& format,
                        bool with_coefficient) {
  if (format == "json") {
    json j;
    j["schema"] = kSchema;
    j["command"] = command;
    j["config"] = config_json(config);
    json terms = json::array();
    for (const Row& r : rows) {
      json t;
      t["key"] = r.key;
      t["weight"] = r.weight;
      t["edges"] = r.edges;
      t["aut"] = r.aut;
      t["det"] = r.det;
      t["families"] = r.families;
      if (with_coefficient) t["coefficient"] = rational_json(*r.coefficient);
      terms.push_back(std::move(t));
    }
    j[with_coefficient ? "terms" : "rows"] = std::move(terms);
    return j.dump(2) + "\n";
  }
  if (format == "csv") {
    std::string out = config_comments(config, "#");
    out += with_coefficient ? "key,weight,num,den,edges,aut,det,families\n"
                            : "key,weight,edges,aut,det,families\n";
    for (const Row& r : rows) {
      out += csv_escape(r.key) + "," + std::to_string(r.weight) + ",";
      if (with_coefficient) {
        out += std::to_string(r.coefficient->num()) + "," + std::to_string(r.coefficient->den()) +
               ",";
      }
      out += std::to_string(r.edges) + "," + std::to_string(r.aut) + "," + std::to_string(r.det) +
             "," + csv_escape(join(r.families, ";")) + "\n";
    }
    return out;
  }
  if (format == "latex") {
    std::string out = config_comments(config, "%");
    out += with_coefficient ? "\\begin{tabular}{rlr}\n\\hline\nweight & graph & coefficient "
                              "\\\\\n\\hline\n"
                            : "\\begin{tabular}{rlrrl}\n\\hline\nweight & graph & aut & det & "
                              "families \\\\\n\\hline\n";
    for (const Row& r : rows) {
      if (with_coefficient) {
        out += std::to_string(r.weight) + " & \\texttt{" + latex_escape(r.key) + "} & " +
               rational_latex(*r.coefficient) + " \\\\\n";
      } else {
        out += std::to_string(r.weight) + " & \\texttt{" + latex_escape(r.key) + "} & " +
               std::to_string(r.aut) + " & " + std::to_string(r.det) + " & " +
               join(r.families, ";") + " \\\\\n";
      }
    }
    out += "\\hline\n\\end{tabular}\n";
    return out;
  }
  // text
  std::string out = config_comments(config, "#");
  for (const Row& r : rows) {
    out += "weight=" + std::to_string(r.weight);
    if (with_coefficient) out += " coeff=" + r.coefficient->to_string();
    out += " edges=" + std::to_string(r.edges) + " aut=" + std::to_string(r.aut) +
           " det=" + std::to_string(r.det) + " families=" + join(r.families, ";") +
           " key=" + r.key + "\n";
  }
  return out;
}

std::string render_report(const std::string& command, const VerificationReport& report,
                          const std::string& format) {
  if (format == "json") {
    json j;
    j["schema"] = kSchema;
    j["command"] = command;
    j["report"] = json::parse(gcalc::to_json(report));
    return j.dump(2) + "\n";
  }
  if (format == "csv") {
    Config config{{"command", command},
                  {"suite", report.suite},
                  {"config", report.config},
                  {"instances", std::to_string(report.instance_count)},
                  {"passed", std::to_string(report.pass_count)},
                  {"wall_ms", std::to_string(report.wall_ms)},
                  {"pass", report.pass() ? "true" : "false"}};
    std::string out = config_comments(config, "#");
    out += "suite,key,expected,actual\n";
    for (const auto& f : report.failures) {
      out += csv_escape(report.suite) + "," + csv_escape(f.key) + "," + csv_escape(f.expected) +
             "," + csv_escape(f.actual) + "\n";
    }
    return out;
  }
  if (format == "latex") {
    std::string out = "% schema " + std::string(kSchema) + "\n% command " + command + "\n";
    out += "\\begin{tabular}{lrrl}\n\\hline\nsuite & instances & passed & result \\\\\n\\hline\n";
    out += latex_escape(report.suite) + " & " + std::to_string(report.instance_count) + " & " +
           std::to_string(report.pass_count) + " & " + (report.pass() ? "pass" : "FAIL") +
           " \\\\\n\\hline\n\\end{tabular}\n";
    if (!report.failures.empty()) {
      out += "\\begin{tabular}{lll}\n\\hline\ninstance & expected & actual \\\\\n\\hline\n";
      for (const auto& f : report.failures) {
        out += "\\texttt{" + latex_escape(f.key) + "} & " + latex_escape(f.expected) + " & " +
               latex_escape(f.actual) + " \\\\\n";
      }
      out += "\\hline\n\\end{tabular}\n";
    }
    return out;
  }
  // text
  std::string out;
  out += "# schema " + std::string(kSchema) + "\n";
  out += "# command " + command + "\n";
  out += "suite " + report.suite + "\n";
  out += "config " + report.config + "\n";
  out += "instances " + std::to_string(report.instance_count) + "\n";
  out += "passed " + std::to_string(report.pass_count) + "\n";
  out += "wall_ms " + std::to_string(report.wall_ms) + "\n";
  out += std::string("pass ") + (report.pass() ? "true" : "false") + "\n";
  for (const auto& f : report.failures) {
    out += "FAIL " + f.key + " expected=" + f.expected + " actual=" + f.actual + "\n";
  }
  return out;
}

int emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return 0;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open output file: " << out_path << "\n";
    return 2;
  }
  f << payload;
  return f.good() ? 0 : 2;
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

struct OutputOpts {
  std::string format = "text";
  std::string out;
  bool timings = false;
};

void add_output_opts(CLI::App* cmd, OutputOpts* o) {
  cmd->add_option("--format", o->format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "latex", "text"}))
      ->capture_default_str();
  cmd->add_option("--out", o->out, "Write the output to this file instead of stdout");
  cmd->add_flag("--timings", o->timings,
                "Embed measured wall time in the output (off keeps output byte-stable)");
}

long long elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                               start)
      .count();
}

struct EnumOpts {
  int points = 1;
  int weight = 0;
  std::string family = "all";
  std::string stability = "stable";
  int max_ordinary = -1;
  OutputOpts output;
};

int cmd_enum(const EnumOpts& o) {
  EnumSpec spec;
  spec.marked = o.points;
  spec.weight = o.weight;
  spec.stability = parse_stability(o.stability);
  spec.family = parse_family(o.family);
  if (o.max_ordinary >= 0) spec.max_ordinary = o.max_ordinary;
  std::vector<Row> rows;
  for (const PointedGraph& g : gcalc::enumerate_graphs(spec)) rows.push_back(make_row(g));
  Config config{{"command", "enum"},
                {"points", std::to_string(o.points)},
                {"weight", std::to_string(o.weight)},
                {"class", o.family},
                {"stability", o.stability},
                {"max-ordinary", o.max_ordinary >= 0 ? std::to_string(o.max_ordinary) : "none"},
                {"rows", std::to_string(rows.size())}};
  return emit(render_rows("enum", config, rows, o.output.format, false), o.output.out);
}

struct Table1Opts {
  int max_weight = 6;
  bool check = false;
  OutputOpts output;
};

int cmd_table1(const Table1Opts& o) {
  if (o.max_weight < 0) throw std::invalid_argument("--max-weight must be >= 0");
  gcalc::CountTable counts = gcalc::count_table(o.max_weight);
  struct Mismatch {
    std::string family;
    int weight;
    long long expected, actual;
  };
  std::vector<Mismatch> mismatches;
  bool checked = o.check;
  if (checked) {
    const gcalc::golden::StableCounts& want = gcalc::golden::stable_counts();
    int limit = std::min<int>(o.max_weight, static_cast<int>(want.all.size()) - 1);
    auto diff_row = [&](const std::string& name, const std::vector<long long>& got,
                        const std::vector<long long>& expected) {
      for (int k = 0; k <= limit; ++k) {
        if (got[k] != expected[k]) mismatches.push_back({name, k, expected[k], got[k]});
      }
    };
    diff_row("all", counts.all, want.all);
    diff_row("b", counts.b, want.b);
    diff_row("bt", counts.bt, want.bt);
    diff_row("s", counts.s, want.s);
  }
  bool check_pass = mismatches.empty();

  Config config{{"command", "table1"},
                {"max-weight", std::to_string(o.max_weight)},
                {"check", checked ? (check_pass ? "pass" : "fail") : "off"}};
  const std::vector<std::pair<std::string, const std::vector<long long>*>> named_rows = {
      {"all", &counts.all}, {"b", &counts.b}, {"bt", &counts.bt}, {"s", &counts.s}};

  std::string payload;
  if (o.output.format == "json") {
    json j;
    j["schema"] = kSchema;
    j["command"] = "table1";
    j["config"] = config_json(config);
    json rows = json::object();
    for (const auto& [name, row] : named_rows) rows[name] = *row;
    j["rows"] = std::move(rows);
    if (checked) {
      json diffs = json::array();
      for (const auto& m : mismatches) {
        diffs.push_back(json{{"family", m.family},
                             {"weight", m.weight},
                             {"expected", m.expected},
                             {"actual", m.actual}});
      }
      j["check"] = json{{"pass", check_pass}, {"mismatches", std::move(diffs)}};
    }
    payload = j.dump(2) + "\n";
  } else if (o.output.format == "csv") {
    payload = config_comments(config, "#");
    payload += "family";
    for (int k = 0; k <= o.max_weight; ++k) payload += ",k" + std::to_string(k);
    payload += "\n";
    for (const auto& [name, row] : named_rows) {
      payload += name;
      for (long long v : *row) payload += "," + std::to_string(v);
      payload += "\n";
    }
  } else if (o.output.format == "latex") {
    payload = config_comments(config, "%");
    payload += "\\begin{tabular}{l";
    for (int k = 0; k <= o.max_weight; ++k) payload += "r";
    payload += "}\n\\hline\nclass";
    for (int k = 0; k <= o.max_weight; ++k) payload += " & $k=" + std::to_string(k) + "$";
    payload += " \\\\\n\\hline\n";
    for (const auto& [name, row] : named_rows) {
      payload += name;
      for (long long v : *row) payload += " & " + std::to_string(v);
      payload += " \\\\\n";
    }
    payload += "\\hline\n\\end{tabular}\n";
  } else {
    payload = config_comments(config, "#");
    for (const auto& [name, row] : named_rows) {
      payload += name + ":";
      for (long long v : *row) payload += " " + std::to_string(v);
      payload += "\n";
    }
    for (const auto& m : mismatches) {
      payload += "CHECK-FAIL family=" + m.family + " weight=" + std::to_string(m.weight) +
                 " expected=" + std::to_string(m.expected) + " actual=" + std::to_string(m.actual) +
                 "\n";
    }
  }
  int rc = emit(payload, o.output.out);
  if (rc != 0) return rc;
  return check_pass ? 0 : 1;
}

struct SeriesOpts {
  std::string which;
  int max_weight = 0;
  std::string stability = "stable";
  int max_ordinary = -1;
  OutputOpts output;
};

int cmd_series(const SeriesOpts& o) {
  Stability mode = parse_stability(o.stability);
  int vmax = o.max_ordinary;
  // In scon mode the graph class is infinite per weight; when the caller
  // gives no explicit cap, apply the documented default of max-weight + 1
  // (every weight-k graph reachable by composition fits in k+1 ordinary
  // vertices).
  if (mode == Stability::kScon && vmax < 0) vmax = o.max_weight + 1;

  GraphSeries series = [&]() -> GraphSeries {
    if (o.which == "berezin") return gcalc::berezin_series(o.max_weight, mode, vmax);
    if (o.which == "bt-inverse") return gcalc::bt_inverse_series(o.max_weight, mode, vmax);
    if (o.which == "kbw") return gcalc::kbw_series(o.max_weight, mode, vmax);
    if (o.which == "kbw-inverse") return gcalc::kbw_inverse_series(o.max_weight, mode, vmax);
    if (o.which == "bergman-log") return gcalc::bergman_log_series(o.max_weight);
    if (o.which == "bt-star")
      return gcalc::to_star(gcalc::bt_inverse_series(o.max_weight, mode, vmax));
    if (o.which == "kbw-star") return gcalc::to_star(gcalc::kbw_series(o.max_weight, mode, vmax));
    throw std::invalid_argument("unknown series selector: " + o.which);
  }();

  std::vector<Row> rows;
  for (const auto& [key, coeff] : series.terms()) {
    rows.push_back(make_row(PointedGraph::from_key(key), coeff));
  }
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return std::tie(a.weight, a.key) < std::tie(b.weight, b.key);
  });

  Config config{{"command", "series"},
                {"which", o.which},
                {"max-weight", std::to_string(o.max_weight)},
                {"stability", o.stability},
                {"max-ordinary", vmax >= 0 ? std::to_string(vmax) : "none"},
                {"terms", std::to_string(rows.size())}};
  return emit(render_rows("series", config, rows, o.output.format, true), o.output.out);
}

struct VerifyOpts {
  std::string suite;
  int max_weight = -1;
  int max_ordinary = -1;
  long long trials = -1;
  unsigned long long seed = kDefaultSeed;
  OutputOpts output;
};

int cmd_verify(const VerifyOpts& o, std::chrono::steady_clock::time_point start) {
  auto pick = [](long long value, long long fallback) { return value >= 0 ? value : fallback; };
  VerificationReport rep;
  if (o.suite == "inversion") {
    rep = gcalc::suites::run_inversion_suite(static_cast<int>(pick(o.max_weight, 3)),
                                             pick(o.trials, 500), o.seed);
  } else if (o.suite == "acyclic-sum") {
    rep = gcalc::suites::run_acyclic_sum_suite(static_cast<int>(pick(o.max_weight, 3)),
                                               pick(o.trials, 500), o.seed);
  } else if (o.suite == "substitution") {
    rep = gcalc::suites::run_substitution_suite(static_cast<int>(pick(o.max_weight, 3)));
  } else if (o.suite == "subdivision-sign") {
    rep = gcalc::suites::run_subdivision_suite(static_cast<int>(pick(o.max_weight, 3)));
  } else if (o.suite == "coefficient-theorem") {
    rep = gcalc::suites::run_coefficient_theorem_suite(static_cast<int>(pick(o.max_weight, 3)),
                                                       pick(o.trials, 1000), o.seed);
  } else if (o.suite == "compose-inverse") {
    rep = gcalc::suites::run_compose_inverse_suite(static_cast<int>(pick(o.max_weight, 3)),
                                                   static_cast<int>(pick(o.max_ordinary, 3)));
  } else if (o.suite == "associativity") {
    rep = gcalc::suites::run_associativity_suite(static_cast<int>(pick(o.max_weight, 2)),
                                                 static_cast<int>(pick(o.max_ordinary, 4)));
  } else if (o.suite == "karabegov") {
    rep = gcalc::suites::run_karabegov_suite(pick(o.trials, 200), o.seed);
  } else if (o.suite == "tables") {
    rep = gcalc::suites::run_tables_suite(static_cast<int>(pick(o.max_weight, 6)));
  } else {
    throw std::invalid_argument("unknown suite selector: " + o.suite);
  }
  rep.wall_ms = o.output.timings ? elapsed_ms(start) : 0;
  int rc = emit(render_report("verify", rep, o.output.format), o.output.out);
  if (rc != 0) return rc;
  return rep.pass() ? 0 : 1;
}

struct KarabegovOpts {
  std::string obstruction_case;
  int order = 0;
  bool fuzz = false;
  long long trials = 200;
  unsigned long long seed = kDefaultSeed;
  OutputOpts output;
};

int cmd_karabegov(const KarabegovOpts& o, std::chrono::steady_clock::time_point start) {
  gcalc::ObstructionCase which = o.obstruction_case == "bt" ? gcalc::ObstructionCase::kBT
                                 : o.obstruction_case == "berezin"
                                     ? gcalc::ObstructionCase::kBerezin
                                     : gcalc::ObstructionCase::kDualKbw;
  VerificationReport rep = gcalc::low_order_obstruction_check(which, o.order);
  if (o.fuzz) {
    rep.config += " fuzz-trials=" + std::to_string(o.trials) + " seed=" + std::to_string(o.seed);
    rep.absorb(gcalc::suites::run_det_factorization_fuzz(o.trials, o.seed));
  }
  rep.wall_ms = o.output.timings ? elapsed_ms(start) : 0;
  int rc = emit(render_report("karabegov", rep, o.output.format), o.output.out);
  if (rc != 0) return rc;
  return rep.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gcalc — exact graph-series calculus for Berezin-type star products"};
  app.require_subcommand(1);

  EnumOpts enum_opts;
  CLI::App* enum_cmd = app.add_subcommand("enum", "List canonical graphs of one weight");
  enum_cmd->add_option("--points", enum_opts.points, "Number of marked vertices (0-3)")
      ->capture_default_str();
  enum_cmd->add_option("--weight", enum_opts.weight, "Graph weight |E| - #ordinary")->required();
  enum_cmd->add_option("--class", enum_opts.family, "Family filter (one-pointed only)")
      ->check(CLI::IsMember({"all", "b", "bt", "s"}))
      ->capture_default_str();
  enum_cmd->add_option("--stability", enum_opts.stability, "Ordinary-vertex degree condition")
      ->check(CLI::IsMember({"stable", "ss", "scon"}))
      ->capture_default_str();
  enum_cmd->add_option("--max-ordinary", enum_opts.max_ordinary,
                       "Cap on ordinary vertices (required for scon)");
  add_output_opts(enum_cmd, &enum_opts.output);

  Table1Opts table1_opts;
  CLI::App* table1_cmd =
      app.add_subcommand("table1", "Stable graph counts per family for weights 0..K");
  table1_cmd->add_option("--max-weight", table1_opts.max_weight, "Largest weight column")
      ->capture_default_str();
  table1_cmd->add_flag("--check", table1_opts.check,
                       "Compare against the embedded reference counts (k <= 6); mismatch exits 1");
  add_output_opts(table1_cmd, &table1_opts.output);

  SeriesOpts series_opts;
  CLI::App* series_cmd = app.add_subcommand("series", "Print a coefficient series by weight");
  series_cmd->add_option("--which", series_opts.which, "Series selector")
      ->check(CLI::IsMember({"berezin", "bt-inverse", "bergman-log", "kbw", "kbw-inverse",
                             "bt-star", "kbw-star"}))
      ->required();
  series_cmd->add_option("--max-weight", series_opts.max_weight, "Truncation weight")->required();
  series_cmd->add_option("--stability", series_opts.stability, "Generation mode")
      ->check(CLI::IsMember({"stable", "ss", "scon"}))
      ->capture_default_str();
  series_cmd->add_option("--max-ordinary", series_opts.max_ordinary,
                         "Ordinary-vertex cap (scon default: max-weight + 1)");
  add_output_opts(series_cmd, &series_opts.output);

  VerifyOpts verify_opts;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Run an identity suite");
  verify_cmd->add_option("--suite", verify_opts.suite, "Suite selector")
      ->check(CLI::IsMember({"inversion", "acyclic-sum", "substitution", "subdivision-sign",
                             "coefficient-theorem", "compose-inverse", "associativity",
                             "karabegov", "tables"}))
      ->required();
  verify_cmd->add_option("--max-weight", verify_opts.max_weight,
                         "Weight bound (suite-specific default)");
  verify_cmd->add_option("--max-ordinary", verify_opts.max_ordinary,
                         "Ordinary-vertex bound (suite-specific default)");
  verify_cmd->add_option("--trials", verify_opts.trials,
                         "Randomized trial count (suite-specific default)");
  verify_cmd->add_option("--seed", verify_opts.seed, "Seed for randomized trials")
      ->capture_default_str();
  add_output_opts(verify_cmd, &verify_opts.output);

  KarabegovOpts karabegov_opts;
  CLI::App* karabegov_cmd =
      app.add_subcommand("karabegov", "Low-order obstruction fixtures (and optional det fuzzing)");
  karabegov_cmd->add_option("--case", karabegov_opts.obstruction_case, "Quantization case")
      ->check(CLI::IsMember({"bt", "berezin", "dual-kbw"}))
      ->required();
  karabegov_cmd->add_option("--order", karabegov_opts.order, "Obstruction order (0-2)")
      ->check(CLI::Range(0, 2))
      ->required();
  karabegov_cmd->add_flag("--fuzz", karabegov_opts.fuzz,
                          "Also run the randomized determinant-factorization suite");
  karabegov_cmd->add_option("--trials", karabegov_opts.trials, "Fuzz trial count")
      ->capture_default_str();
  karabegov_cmd->add_option("--seed", karabegov_opts.seed, "Seed for fuzz trials")
      ->capture_default_str();
  add_output_opts(karabegov_cmd, &karabegov_opts.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  auto start = std::chrono::steady_clock::now();
  int rc = 2;
  try {
    if (app.got_subcommand(enum_cmd)) {
      rc = cmd_enum(enum_opts);
    } else if (app.got_subcommand(table1_cmd)) {
      rc = cmd_table1(table1_opts);
    } else if (app.got_subcommand(series_cmd)) {
      rc = cmd_series(series_opts);
    } else if (app.got_subcommand(verify_cmd)) {
      rc = cmd_verify(verify_opts, start);
    } else if (app.got_subcommand(karabegov_cmd)) {
      rc = cmd_karabegov(karabegov_opts, start);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cerr << "wall_ms=" << elapsed_ms(start) << "\n";
  return rc;
}
