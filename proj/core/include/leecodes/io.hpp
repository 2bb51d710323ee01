#pragma once

// Text formats shared by the CLI and anything scripting against it. JSON
// output is compact, single-line and key-ordered as documented, so equal
// values always serialize to identical bytes. Parsers throw
// std::invalid_argument on malformed input.

#include <string>
#include <string_view>

#include "leecodes/codes.hpp"
#include "leecodes/criterion.hpp"
#include "leecodes/symfun.hpp"
#include "leecodes/witness.hpp"

namespace leecodes::io {

/// {"n","p","p_is_prime","a","b","solution","verdict"}; a is an integer,
/// "infinite" or "gt_n"; b an integer or "gt_n"; both null for composite p;
/// solution is [x, y] or null.
std::string to_json(const criterion::CriterionReport& r);
criterion::CriterionReport report_from_json(std::string_view text);

/// Header `threshold,prime_count,applicable_count`, one row per threshold.
std::string to_csv(const criterion::ScanTable& t);
criterion::ScanTable scan_table_from_csv(std::string_view text);

/// {"n","e","q","repr":{"type":"homomorphism","p","x"} |
///  {"type":"centers","points"} | {"type":"lattice","basis"}}
std::string to_json(const codes::CodeSpec& c);
codes::CodeSpec code_from_json(std::string_view text);

/// {"status":"perfect"|"packing_only"|"not_packing","witness":null |
///  {"point":[...]} | {"point":[...],"centers":[[...],[...]]}}
std::string to_json(const codes::VerificationResult& v);
codes::VerificationResult verification_from_json(std::string_view text);

/// {"witnesses":[[...],...],"exhausted":bool,"nodes":int}
std::string to_json(const witness::SearchOutcome& s);
witness::SearchOutcome search_outcome_from_json(std::string_view text, std::size_t n);

/// {"bijective","identity":{"1":bool,...},"power_sums_vanish":{"checked","failed"},
///  "elementary_vanish":{"checked","failed"},"e_n_nonzero","n_in_X"}
std::string to_json(const symfun::WitnessAudit& a);

}  // namespace leecodes::io
