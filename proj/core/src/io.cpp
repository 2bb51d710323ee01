#include "leecodes/io.hpp"

#include <json.hpp>
#include <sstream>

namespace leecodes::io {

namespace {

using json = nlohmann::ordered_json;
using criterion::Exponent;
using u64 = std::uint64_t;

json parse(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

// Runs `body` and rewraps JSON type/key errors as std::invalid_argument.
template <typename F>
auto guarded(F&& body) {
  try {
    return body();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("unexpected JSON shape: ") + e.what());
  }
}

json exponent_to_json(const std::optional<Exponent>& e) {
  if (!e) return nullptr;
  switch (e->kind()) {
    case Exponent::Kind::Finite: return e->value();
    case Exponent::Kind::Infinite: return "infinite";
    case Exponent::Kind::ExceedsN: return "gt_n";
  }
  return nullptr;
}

std::optional<Exponent> exponent_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  if (j.is_number_unsigned()) return Exponent::finite(j.get<u64>());
  if (j == "infinite") return Exponent::infinite();
  if (j == "gt_n") return Exponent::exceeds_n();
  throw std::invalid_argument("bad exponent value: " + j.dump());
}

criterion::Verdict verdict_from_string(const std::string& s) {
  for (auto v : {criterion::Verdict::CompositeP, criterion::Verdict::CriterionSilent,
                 criterion::Verdict::NonexistenceProven}) {
    if (criterion::to_string(v) == s) return v;
  }
  throw std::invalid_argument("unknown verdict: " + s);
}

std::string_view status_name(codes::Status s) {
  switch (s) {
    case codes::Status::Perfect: return "perfect";
    case codes::Status::PackingOnly: return "packing_only";
    case codes::Status::NotPacking: return "not_packing";
  }
  return "unknown";
}

json indices(const std::vector<u64>& v) {
  json arr = json::array();
  for (u64 k : v) arr.push_back(k);
  return arr;
}

}  // namespace

std::string to_json(const criterion::CriterionReport& r) {
  json j;
  j["n"] = r.n;
  j["p"] = r.p;
  j["p_is_prime"] = r.p_is_prime;
  j["a"] = exponent_to_json(r.a);
  j["b"] = exponent_to_json(r.b);
  j["solution"] = r.solution ? json::array({r.solution->x, r.solution->y}) : json(nullptr);
  j["verdict"] = criterion::to_string(r.verdict);
  return j.dump();
}

criterion::CriterionReport report_from_json(std::string_view text) {
  const json j = parse(text);
  return guarded([&] {
    criterion::CriterionReport r;
    r.n = j.at("n").get<u64>();
    r.p = j.at("p").get<u64>();
    r.p_is_prime = j.at("p_is_prime").get<bool>();
    r.a = exponent_from_json(j.at("a"));
    r.b = exponent_from_json(j.at("b"));
    if (const auto& s = j.at("solution"); !s.is_null()) {
      r.solution = criterion::Solution{s.at(0).get<u64>(), s.at(1).get<u64>()};
    }
    r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    return r;
  });
}

std::string to_csv(const criterion::ScanTable& t) {
  std::ostringstream out;
  out << "threshold,prime_count,applicable_count\n";
  for (std::size_t i = 0; i < t.thresholds.size(); ++i) {
    out << t.thresholds[i] << ',' << t.prime_counts[i] << ',' << t.applicable_counts[i] << '\n';
  }
  return out.str();
}

criterion::ScanTable scan_table_from_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != "threshold,prime_count,applicable_count") {
    throw std::invalid_argument("missing scan table header");
  }
  criterion::ScanTable t;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    u64 a, b, c;
    char s1, s2;
    if (!(row >> a >> s1 >> b >> s2 >> c) || s1 != ',' || s2 != ',' || !row.eof()) {
      throw std::invalid_argument("malformed scan table row: " + line);
    }
    t.thresholds.push_back(a);
    t.prime_counts.push_back(b);
    t.applicable_counts.push_back(c);
  }
  return t;
}

std::string to_json(const codes::CodeSpec& c) {
  json j;
  j["n"] = c.n;
  j["e"] = c.e;
  j["q"] = c.q;
  struct Repr {
    json operator()(const codes::Homomorphism& h) const {
      return json{{"type", "homomorphism"}, {"p", h.p}, {"x", h.x}};
    }
    json operator()(const codes::Centers& ct) const { return json{{"type", "centers"}, {"points", ct.points}}; }
    json operator()(const codes::Lattice& l) const { return json{{"type", "lattice"}, {"basis", l.basis}}; }
  };
  j["repr"] = std::visit(Repr{}, c.repr);
  return j.dump();
}

codes::CodeSpec code_from_json(std::string_view text) {
  const json j = parse(text);
  return guarded([&] {
    codes::CodeSpec c;
    c.n = j.at("n").get<std::size_t>();
    c.e = j.at("e").get<u64>();
    c.q = j.at("q").get<u64>();
    const auto& repr = j.at("repr");
    const auto type = repr.at("type").get<std::string>();
    if (type == "homomorphism") {
      c.repr = codes::Homomorphism{repr.at("p").get<u64>(), repr.at("x").get<std::vector<u64>>()};
    } else if (type == "centers") {
      c.repr = codes::Centers{repr.at("points").get<std::vector<codes::Point>>()};
    } else if (type == "lattice") {
      c.repr = codes::Lattice{repr.at("basis").get<std::vector<std::vector<std::int64_t>>>()};
    } else {
      throw std::invalid_argument("unknown representation type: " + type);
    }
    return c;
  });
}

std::string to_json(const codes::VerificationResult& v) {
  json j;
  j["status"] = status_name(v.status);
  if (!v.witness) {
    j["witness"] = nullptr;
  } else {
    json w;
    w["point"] = v.witness->point;
    if (!v.witness->centers.empty()) w["centers"] = v.witness->centers;
    j["witness"] = std::move(w);
  }
  return j.dump();
}

codes::VerificationResult verification_from_json(std::string_view text) {
  const json j = parse(text);
  return guarded([&] {
    codes::VerificationResult v;
    const auto status = j.at("status").get<std::string>();
    if (status == "perfect") {
      v.status = codes::Status::Perfect;
    } else if (status == "packing_only") {
      v.status = codes::Status::PackingOnly;
    } else if (status == "not_packing") {
      v.status = codes::Status::NotPacking;
    } else {
      throw std::invalid_argument("unknown status: " + status);
    }
    if (const auto& w = j.at("witness"); !w.is_null()) {
      codes::VerificationWitness vw;
      vw.point = w.at("point").get<codes::Point>();
      if (w.contains("centers")) vw.centers = w.at("centers").get<std::vector<codes::Point>>();
      v.witness = std::move(vw);
    }
    return v;
  });
}

std::string to_json(const witness::SearchOutcome& s) {
  json j;
  json ws = json::array();
  for (const auto& w : s.witnesses) ws.push_back(w.x);
  j["witnesses"] = std::move(ws);
  j["exhausted"] = s.exhausted;
  j["nodes"] = s.nodes_explored;
  return j.dump();
}

witness::SearchOutcome search_outcome_from_json(std::string_view text, std::size_t n) {
  const json j = parse(text);
  const u64 p = criterion::sphere_prime_candidate(n);
  return guarded([&] {
    witness::SearchOutcome s;
    for (const auto& w : j.at("witnesses")) {
      auto x = w.get<std::vector<u64>>();
      if (x.size() != n) throw std::invalid_argument("witness has wrong length");
      s.witnesses.push_back(witness::Witness{n, p, std::move(x)});
    }
    s.exhausted = j.at("exhausted").get<bool>();
    s.nodes_explored = j.at("nodes").get<u64>();
    return s;
  });
}

std::string to_json(const symfun::WitnessAudit& a) {
  json j;
  j["bijective"] = a.bijective;
  json identity = json::object();
  for (const auto& c : a.identity) identity[std::to_string(c.k)] = c.holds();
  j["identity"] = std::move(identity);
  j["power_sums_vanish"] = json{{"checked", indices(a.vanishing.power_sum_checked)}, {"failed", indices(a.vanishing.power_sum_failed)}};
  j["elementary_vanish"] =
      json{{"checked", indices(a.vanishing.elementary_checked)}, {"failed", indices(a.vanishing.elementary_failed)}};
  j["e_n_nonzero"] = a.vanishing.e_n_nonzero;
  j["n_in_X"] = a.vanishing.n_in_x;
  return j.dump();
}

}  // namespace leecodes::io
