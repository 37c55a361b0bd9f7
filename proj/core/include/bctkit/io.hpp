#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bctkit/table.hpp"
#include "bctkit/claims.hpp"
#include "bctkit/vecfun.hpp"

namespace bctkit {

std::string_view toolkit_version() noexcept;

// CSV layout: one metadata line
//   # bctkit,kind=DDT,n=4,modulus=0x13,polynomial=x^4+x+1,d=3,version=0.1.0
// followed by q rows of q comma-separated counts, row index = a.
// Requires full storage.
void write_table_csv(std::ostream& out, const UniformityTable& table, const Function& f);

struct LoadedTable {
  UniformityTable table;
  std::string d;  // exponent or "lut"
  std::string version;
};
LoadedTable read_table_csv(std::istream& in);

// {"kind", "n", "modulus", "polynomial", "d", "version",
//  "rows": {"a": [[value, multiplicity], ...]}, "column0": [...],
//  "max_nontrivial", "witnesses": [[a, b, count], ...]}
void write_table_json(std::ostream& out, const UniformityTable& table, const Function& f);

std::string report_to_json(const AnalysisReport& report, bool include_runtime = true);
std::string report_to_text(const AnalysisReport& report);

// Verification manifest: toolkit version, field moduli used, outcomes, overall pass.
std::string manifest_to_json(const std::vector<VerificationOutcome>& outcomes);

std::string search_to_json(const Field& field, const std::vector<AnalysisReport>& reports);

}  // namespace bctkit
