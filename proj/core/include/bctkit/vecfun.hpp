#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bctkit/gf2n.hpp"

namespace bctkit {

// A function GF(2^n) -> GF(2^n), given either as a power map x^d or as an
// explicit lookup table. The full value table is materialized at
// construction so table builders can index it directly.
class Function {
 public:
  // The exponent is reduced modulo 2^n - 1. A reduced exponent of 0 denotes
  // the constant map x -> 1 (0^0 = 1) and is flagged degenerate.
  static Function power_map(const Field& field, std::uint64_t d);
  // Throws InvalidArgument when the table length is not 2^n or a value is
  // outside the field.
  static Function from_lut(const Field& field, std::vector<std::uint32_t> table);

  const Field& field() const noexcept { return field_; }
  std::uint32_t order() const noexcept { return field_.order(); }

  bool is_power_map() const noexcept { return exponent_.has_value(); }
  // Reduced exponent, for power maps only.
  std::optional<std::uint64_t> exponent() const noexcept { return exponent_; }
  bool is_degenerate() const noexcept { return exponent_ && *exponent_ == 0; }

  // Power maps evaluate x^d directly; LUTs index the table.
  Elem eval(Elem x) const;
  std::uint32_t operator()(std::uint32_t x) const noexcept { return (*values_)[x]; }
  std::span<const std::uint32_t> values() const noexcept { return *values_; }

  // Pointwise-equal LUT form.
  Function to_lut() const;

  // gcd(d, 2^n - 1) = 1 for power maps, a bijectivity scan otherwise.
  bool is_permutation() const;

  // "x^7" or "lut".
  std::string label() const;

 private:
  Function(Field field, std::optional<std::uint64_t> exponent,
           std::shared_ptr<const std::vector<std::uint32_t>> values)
      : field_(field), exponent_(exponent), values_(std::move(values)) {}

  Field field_;
  std::optional<std::uint64_t> exponent_;
  std::shared_ptr<const std::vector<std::uint32_t>> values_;
};

bool is_bijective(std::span<const std::uint32_t> table);

// LUT text format: one integer per line (decimal or 0x-hex), q lines, line
// index = input value. Blank lines and '#' comments are ignored.
Function read_lut(std::istream& in, const Field& field);
Function load_lut_file(const std::filesystem::path& path, const Field& field);
void write_lut(std::ostream& out, const Function& f);

}  // namespace bctkit
