#include "cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "leecodes/codes.hpp"
#include "leecodes/criterion.hpp"
#include "leecodes/io.hpp"
#include "leecodes/lee.hpp"
#include "leecodes/symfun.hpp"
#include "leecodes/witness.hpp"

namespace leecodes::cli {

namespace {

using u64 = std::uint64_t;

// Input problems detected after CLI11 parsing; reported like usage errors.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<u64> parse_list(const std::string& text, const char* what) {
  std::vector<u64> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    u64 v = 0;
    const char* first = text.data() + pos;
    const char* last = text.data() + comma;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (first == last || ec != std::errc{} || ptr != last) {
      throw InputError(std::string("malformed ") + what + ": '" + text + "'");
    }
    values.push_back(v);
    pos = comma + 1;
  }
  return values;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << body)) throw InputError("cannot write " + path);
}

struct Settings {
  u64 n = 0;
  u64 e = 0;
  u64 x_max = 0;
  std::optional<u64> q;
  std::string thresholds;
  std::string per_n;
  std::string out_file;
  std::string code_file;
  std::string kind;
  u64 param = 0;
  std::string x_list;
  std::optional<u64> k_max;
  std::optional<u64> node_limit;
  unsigned threads = 1;
  bool json = false;
  bool csv = false;
  bool count_only = false;
  bool all = false;
  bool no_symmetry = false;
};

int do_check(const Settings& s, std::ostream& out, std::ostream& err) {
  const auto report = criterion::check_n(s.n);
  out << io::to_json(report) << '\n';
  err << "n=" << report.n << " p=" << report.p << " verdict=" << criterion::to_string(report.verdict) << '\n';
  return kExitOk;
}

int do_scan(const Settings& s, std::ostream& out, std::ostream& err) {
  std::vector<u64> thresholds;
  if (!s.thresholds.empty()) {
    thresholds = parse_list(s.thresholds, "threshold list");
  } else {
    for (u64 t : {10u, 100u, 1000u, 10000u}) {
      if (t <= s.x_max) thresholds.push_back(t);
    }
    if (thresholds.empty() || thresholds.back() != s.x_max) thresholds.push_back(s.x_max);
  }
  criterion::ScanOptions options;
  options.threads = s.threads;
  options.collect_reports = !s.per_n.empty();
  const auto result = criterion::scan(s.x_max, thresholds, options);
  if (!s.per_n.empty()) {
    std::string body;
    for (const auto& r : result.reports) body += io::to_json(r) + '\n';
    write_file(s.per_n, body);
  }
  out << io::to_csv(result.table);
  const auto& t = result.table;
  err << "scanned n <= " << s.x_max << ": " << t.prime_counts.back() << " prime, " << t.applicable_counts.back()
      << " with nonexistence proven\n";
  return kExitOk;
}

int do_sphere(const Settings& s, std::ostream& out, std::ostream&) {
  if (s.q && *s.q < 2 * s.e + 1) throw InputError("--q must be at least 2e+1");
  if (s.count_only) {
    out << lee::sphere_size(s.n, s.e) << '\n';
    return kExitOk;
  }
  const auto sphere = lee::enumerate_sphere(s.n, s.e, s.q);
  std::string body;
  for (const auto& pt : sphere.points) {
    for (std::size_t i = 0; i < pt.size(); ++i) {
      if (i) body += ' ';
      body += std::to_string(pt[i]);
    }
    body += '\n';
  }
  out << body;
  return kExitOk;
}

int do_construct(const Settings& s, std::ostream& out, std::ostream& err) {
  codes::GwFamily family;
  if (s.kind == "gw1") {
    family = codes::GwFamily::Dim1;
  } else if (s.kind == "gw2") {
    family = codes::GwFamily::Dim2;
  } else if (s.kind == "gwn1") {
    family = codes::GwFamily::Radius1;
  } else {
    throw InputError("unknown construction '" + s.kind + "' (expected gw1, gw2 or gwn1)");
  }
  const auto code = codes::construct_gw(family, s.param);
  const std::string body = io::to_json(code) + '\n';
  if (s.out_file.empty()) {
    out << body;
  } else {
    write_file(s.out_file, body);
    err << "wrote " << s.out_file << '\n';
  }
  return kExitOk;
}

int do_verify(const Settings& s, std::ostream& out, std::ostream& err) {
  const auto code = io::code_from_json(read_file(s.code_file));
  const auto result = codes::verify(code);
  out << io::to_json(result) << '\n';
  err << "n=" << code.n << " e=" << code.e << " q=" << code.q << '\n';
  return kExitOk;
}

int do_search(const Settings& s, std::ostream& out, std::ostream& err) {
  witness::SearchOptions options;
  options.find_all = s.all;
  options.node_limit = s.node_limit;
  options.symmetry = !s.no_symmetry;
  options.threads = s.threads;
  const auto outcome = witness::search(s.n, options);
  out << io::to_json(outcome) << '\n';
  err << outcome.witnesses.size() << " witness(es), " << outcome.nodes_explored << " nodes, "
      << (outcome.exhausted ? "exhausted" : "not exhausted") << " (" << outcome.symmetry_classes_note << ")\n";
  return kExitOk;
}

int do_verify_witness(const Settings& s, std::ostream& out, std::ostream&) {
  witness::Witness w;
  w.n = s.n;
  w.p = criterion::sphere_prime_candidate(s.n);
  w.x = parse_list(s.x_list, "x-list");
  if (w.x.size() != s.n) throw InputError("x-list must contain exactly n values");
  const u64 k_max = s.k_max.value_or(symfun::default_k_cap(s.n));
  if (k_max == 0) throw InputError("--kmax must be positive");
  out << io::to_json(symfun::audit(w, k_max)) << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Perfect Lee code toolkit: nonexistence criterion, tiling verification, witness search"};
  app.name("leecodes");
  app.require_subcommand(1);
  Settings s;

  auto* check = app.add_subcommand("check", "Evaluate the nonexistence criterion for one n");
  check->add_option("n", s.n, "dimension")->required()->check(CLI::PositiveNumber);
  check->add_flag("--json", s.json, "JSON report (the default and only format)");

  auto* scan = app.add_subcommand("scan", "Count prime 2n^2+2n+1 and proven n up to xmax");
  scan->add_option("xmax", s.x_max, "largest n")->required()->check(CLI::PositiveNumber);
  scan->add_flag("--csv", s.csv, "CSV table (the default and only format)");
  scan->add_option("--thresholds", s.thresholds, "comma-separated ascending thresholds");
  scan->add_option("--threads", s.threads, "worker threads")->check(CLI::Range(1u, 1024u));
  scan->add_option("--per-n", s.per_n, "write one JSON report per n to this JSONL file");

  auto* sphere = app.add_subcommand("sphere", "Enumerate the Lee sphere S(n,e) or S(n,e,q)");
  sphere->add_option("n", s.n, "dimension")->required()->check(CLI::PositiveNumber);
  sphere->add_option("e", s.e, "radius")->required()->check(CLI::NonNegativeNumber);
  sphere->add_option("--q", s.q, "torus modulus (>= 2e+1)");
  sphere->add_flag("--count-only", s.count_only, "print only the cardinality");

  auto* construct = app.add_subcommand("construct", "Emit a Golomb-Welch perfect code as JSON");
  construct->add_option("kind", s.kind, "gw1 (e) | gw2 (e) | gwn1 (n)")->required();
  construct->add_option("param", s.param, "e or n")->required()->check(CLI::PositiveNumber);
  construct->add_option("--out", s.out_file, "write to file instead of stdout");

  auto* verify = app.add_subcommand("verify", "Check a code file for perfectness");
  verify->add_option("codefile", s.code_file, "code JSON")->required();

  auto* search = app.add_subcommand("search-witness", "Exhaustive search for bijective homomorphisms");
  search->add_option("n", s.n, "dimension")->required()->check(CLI::PositiveNumber);
  search->add_flag("--all", s.all, "collect every witness");
  search->add_option("--node-limit", s.node_limit, "stop after N placements");
  search->add_flag("--no-symmetry", s.no_symmetry, "disable symmetry reduction");
  search->add_option("--threads", s.threads, "worker threads")->check(CLI::Range(1u, 1024u));

  auto* verify_witness = app.add_subcommand("verify-witness", "Check a candidate witness and its algebra");
  verify_witness->add_option("n", s.n, "dimension")->required()->check(CLI::PositiveNumber);
  verify_witness->add_option("x-list", s.x_list, "comma-separated x_1,...,x_n")->required();
  verify_witness->add_option("--kmax", s.k_max, "largest k for the identity and vanishing checks");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (check->parsed()) return do_check(s, out, err);
    if (scan->parsed()) return do_scan(s, out, err);
    if (sphere->parsed()) return do_sphere(s, out, err);
    if (construct->parsed()) return do_construct(s, out, err);
    if (verify->parsed()) return do_verify(s, out, err);
    if (search->parsed()) return do_search(s, out, err);
    if (verify_witness->parsed()) return do_verify_witness(s, out, err);
  } catch (const codes::TooLargeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitGuard;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace leecodes::cli
