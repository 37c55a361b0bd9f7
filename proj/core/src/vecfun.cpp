#include "bctkit/vecfun.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>

#include "bctkit/errors.hpp"

namespace bctkit {

Function Function::power_map(const Field& field, std::uint64_t d) {
  const std::uint64_t reduced = d % (field.order() - 1);
  auto values = std::make_shared<std::vector<std::uint32_t>>(field.order());
  for (std::uint32_t x = 0; x < field.order(); ++x) {
    (*values)[x] = field.pow(Elem{x}, reduced).value;
  }
  return Function(field, reduced, std::move(values));
}

Function Function::from_lut(const Field& field, std::vector<std::uint32_t> table) {
  if (table.size() != field.order()) {
    throw InvalidArgument("lookup table has " + std::to_string(table.size()) +
                          " entries, expected " + std::to_string(field.order()));
  }
  for (std::size_t x = 0; x < table.size(); ++x) {
    if (table[x] >= field.order()) {
      throw InvalidArgument("lookup table entry " + std::to_string(x) + " = " +
                            std::to_string(table[x]) + " is outside the field");
    }
  }
  return Function(field, std::nullopt,
                  std::make_shared<const std::vector<std::uint32_t>>(std::move(table)));
}

Elem Function::eval(Elem x) const {
  if (!field_.contains(x)) throw InvalidArgument("argument outside the field");
  if (exponent_) return field_.pow(x, *exponent_);
  return Elem{(*values_)[x.value]};
}

Function Function::to_lut() const {
  std::vector<std::uint32_t> table(order());
  for (std::uint32_t x = 0; x < order(); ++x) table[x] = eval(Elem{x}).value;
  return from_lut(field_, std::move(table));
}

bool Function::is_permutation() const {
  if (exponent_) return std::gcd(*exponent_, std::uint64_t{order() - 1}) == 1;
  return is_bijective(*values_);
}

std::string Function::label() const {
  return exponent_ ? "x^" + std::to_string(*exponent_) : "lut";
}

bool is_bijective(std::span<const std::uint32_t> table) {
  std::vector<bool> seen(table.size(), false);
  for (auto v : table) {
    if (v >= table.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Function read_lut(std::istream& in, const Field& field) {
  std::vector<std::uint32_t> table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    std::string_view token(line.data() + first, last - first + 1);

    int base = 10;
    if (token.starts_with("0x") || token.starts_with("0X")) {
      token.remove_prefix(2);
      base = 16;
    }
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value, base);
    if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) {
      throw InvalidArgument("lookup table line " + std::to_string(line_no) +
                            ": not an integer");
    }
    if (value >= field.order()) {
      throw InvalidArgument("lookup table line " + std::to_string(line_no) + ": value " +
                            std::to_string(value) + " is outside the field");
    }
    table.push_back(static_cast<std::uint32_t>(value));
  }
  return Function::from_lut(field, std::move(table));
}

Function load_lut_file(const std::filesystem::path& path, const Field& field) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open lookup table file " + path.string());
  return read_lut(in, field);
}

void write_lut(std::ostream& out, const Function& f) {
  for (auto v : f.values()) out << v << '\n';
}

}  // namespace bctkit
