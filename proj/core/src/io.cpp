#include "bctkit/io.hpp"

#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "bctkit/errors.hpp"

namespace bctkit {
namespace {

using nlohmann::ordered_json;

#ifndef BCTKIT_VERSION
#define BCTKIT_VERSION "0.0.0"
#endif

std::string exponent_label(const std::optional<std::uint64_t>& d) {
  return d ? std::to_string(*d) : "lut";
}

ordered_json field_json(const Field& field) {
  return {{"n", field.degree()},
          {"modulus", field.modulus_hex()},
          {"polynomial", field.modulus_polynomial()}};
}

ordered_json cells_json(const std::vector<Cell>& cells) {
  ordered_json out = ordered_json::array();
  for (const Cell& c : cells) out.push_back({c.a, c.b, c.count});
  return out;
}

}  // namespace

std::string_view toolkit_version() noexcept { return BCTKIT_VERSION; }

void write_table_csv(std::ostream& out, const UniformityTable& table, const Function& f) {
  if (!table.is_full()) {
    throw BudgetExceeded("CSV export needs a full table (n <= " +
                             std::to_string(kFullTableMaxDegree) + "); use the JSON spectra",
                         static_cast<double>(table.order()) * table.order());
  }
  const Field& field = table.field();
  out << "# bctkit,kind=" << to_string(table.kind()) << ",n=" << field.degree()
      << ",modulus=" << field.modulus_hex() << ",polynomial=" << field.modulus_polynomial()
      << ",d=" << exponent_label(f.exponent()) << ",version=" << toolkit_version() << '\n';
  for (std::uint32_t a = 0; a < table.order(); ++a) {
    const auto row = table.row(a);
    for (std::uint32_t b = 0; b < row.size(); ++b) {
      if (b != 0) out << ',';
      out << row[b];
    }
    out << '\n';
  }
}

LoadedTable read_table_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || !line.starts_with("# bctkit")) {
    throw InvalidArgument("missing '# bctkit' metadata line");
  }
  std::map<std::string, std::string> meta;
  std::stringstream fields(line.substr(2));
  std::string item;
  while (std::getline(fields, item, ',')) {
    if (auto eq = item.find('='); eq != std::string::npos) {
      meta[item.substr(0, eq)] = item.substr(eq + 1);
    }
  }
  for (const char* key : {"kind", "n", "modulus"}) {
    if (!meta.contains(key)) throw InvalidArgument(std::string("metadata lacks '") + key + "'");
  }
  const Field field = Field::make(std::stoi(meta["n"]), gf2poly::parse(meta["modulus"]));
  const TableKind kind = parse_table_kind(meta["kind"]);

  const std::size_t q = field.order();
  std::vector<std::uint32_t> counts;
  counts.reserve(q * q);
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream cells(line);
    std::size_t cols = 0;
    while (std::getline(cells, item, ',')) {
      counts.push_back(static_cast<std::uint32_t>(std::stoul(item)));
      ++cols;
    }
    if (cols != q) {
      throw InvalidArgument("CSV row " + std::to_string(rows) + " has " + std::to_string(cols) +
                            " columns, expected " + std::to_string(q));
    }
    ++rows;
  }
  if (rows != q) {
    throw InvalidArgument("CSV has " + std::to_string(rows) + " rows, expected " +
                          std::to_string(q));
  }
  return {UniformityTable::from_full(kind, field, std::move(counts)), meta["d"], meta["version"]};
}

void write_table_json(std::ostream& out, const UniformityTable& table, const Function& f) {
  ordered_json j;
  j["kind"] = std::string(to_string(table.kind()));
  j.update(field_json(table.field()));
  j["d"] = exponent_label(f.exponent());
  j["version"] = std::string(toolkit_version());
  ordered_json rows = ordered_json::object();
  ordered_json column0 = ordered_json::array();
  for (std::uint32_t a = 0; a < table.order(); ++a) {
    const RowSpectrum r = table.row_spectrum(a);
    ordered_json spectrum = ordered_json::array();
    for (const auto& e : r.merged()) spectrum.push_back({e.value, e.multiplicity});
    rows[std::to_string(a)] = std::move(spectrum);
    column0.push_back(r.at_zero);
  }
  j["rows"] = std::move(rows);
  j["column0"] = std::move(column0);
  j["max_nontrivial"] = table.max_nontrivial();
  j["witnesses"] = cells_json(table.witnesses());
  out << j.dump() << '\n';
}

namespace {

ordered_json report_json(const AnalysisReport& r, bool include_runtime) {
  ordered_json j;
  j["field"] = field_json(r.field);
  if (r.exponent) {
    j["d"] = *r.exponent;
  } else {
    j["d"] = "lut";
  }
  if (!r.coset.empty()) j["coset"] = r.coset;
  j["degenerate"] = r.degenerate;
  j["permutation"] = r.permutation;
  j["apn"] = r.apn;
  if (r.locally_apn) {
    j["locally_apn"] = *r.locally_apn;
  } else {
    j["locally_apn"] = "n/a";
  }
  j["delta"] = r.delta;
  j["boomerang"] = r.boomerang;
  j["witnesses"] = {{"delta", cells_json(r.delta_witnesses)},
                    {"boomerang", cells_json(r.boomerang_witnesses)}};
  if (r.witnesses_verified) {
    j["witnesses_verified"] = *r.witnesses_verified;
  } else {
    j["witnesses_verified"] = "n/a";
  }
  if (include_runtime) j["runtime_ms"] = r.runtime_ms;
  return j;
}

}  // namespace

std::string report_to_json(const AnalysisReport& report, bool include_runtime) {
  return report_json(report, include_runtime).dump(2);
}

std::string report_to_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << "field        GF(2^" << r.field.degree() << ") mod " << r.field.modulus_polynomial()
      << " (" << r.field.modulus_hex() << ")\n";
  out << "function     " << (r.exponent ? "x^" + std::to_string(*r.exponent) : "lut")
      << (r.degenerate ? "  [degenerate: constant map]" : "") << '\n';
  out << "permutation  " << (r.permutation ? "yes" : "no") << '\n';
  out << "apn          " << (r.apn ? "yes" : "no") << '\n';
  out << "locally-apn  " << (r.locally_apn ? (*r.locally_apn ? "yes" : "no") : "n/a") << '\n';
  out << "delta        " << r.delta << '\n';
  out << "boomerang    " << r.boomerang << '\n';
  auto cells = [&](const std::vector<Cell>& cs) {
    for (const Cell& c : cs) out << " (" << c.a << "," << c.b << ")";
    out << '\n';
  };
  out << "delta at    ";
  cells(r.delta_witnesses);
  out << "boomerang at";
  cells(r.boomerang_witnesses);
  out << "runtime      " << r.runtime_ms << " ms\n";
  return out.str();
}

std::string manifest_to_json(const std::vector<VerificationOutcome>& outcomes) {
  ordered_json j;
  j["toolkit"] = "bctkit";
  j["version"] = std::string(toolkit_version());
  std::map<int, std::uint32_t> moduli;
  bool all_pass = true;
  ordered_json list = ordered_json::array();
  for (const auto& o : outcomes) {
    moduli[o.n] = o.modulus;
    all_pass = all_pass && o.pass;
    ordered_json item;
    item["claim_id"] = o.claim_id;
    item["parameters"] = {{"n", o.n}, {"m", o.m}};
    if (o.d) {
      item["parameters"]["d"] = *o.d;
    } else {
      item["parameters"]["d"] = "lut";
    }
    auto quantities = [](const std::vector<Quantity>& qs) {
      ordered_json out = ordered_json::object();
      for (const auto& q : qs) out[q.name] = q.value;
      return out;
    };
    item["expected"] = quantities(o.expected);
    item["observed"] = quantities(o.observed);
    item["pass"] = o.pass;
    if (!o.note.empty()) item["note"] = o.note;
    list.push_back(std::move(item));
  }
  ordered_json mods = ordered_json::object();
  for (auto [n, modulus] : moduli) mods[std::to_string(n)] = gf2poly::to_hex(modulus);
  j["field_moduli"] = std::move(mods);
  j["outcomes"] = std::move(list);
  j["passed"] = all_pass;
  return j.dump(2);
}

std::string search_to_json(const Field& field, const std::vector<AnalysisReport>& reports) {
  ordered_json j;
  j["field"] = field_json(field);
  j["version"] = std::string(toolkit_version());
  ordered_json list = ordered_json::array();
  for (const auto& r : reports) list.push_back(report_json(r, false));
  j["results"] = std::move(list);
  return j.dump(2);
}

}  // namespace bctkit
