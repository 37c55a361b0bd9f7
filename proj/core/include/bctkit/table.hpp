#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "bctkit/gf2n.hpp"

namespace bctkit {

enum class TableKind { ddt, bct };

std::string_view to_string(TableKind kind) noexcept;
// Accepts "ddt"/"DDT" and "bct"/"BCT".
TableKind parse_table_kind(std::string_view text);

struct SpectrumEntry {
  std::uint64_t value = 0;
  std::uint64_t multiplicity = 0;

  friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

// Multiset of the counts in one table row. Column b = 0 is kept apart
// because the two uniformities treat it differently.
struct RowSpectrum {
  std::uint64_t at_zero = 0;
  std::vector<SpectrumEntry> nonzero;  // over b != 0, ascending by value

  static RowSpectrum from_row(std::span<const std::uint64_t> row);

  // Whole-row multiset, b = 0 included.
  std::vector<SpectrumEntry> merged() const;
  std::uint64_t max_nonzero() const noexcept;

  friend bool operator==(const RowSpectrum&, const RowSpectrum&) = default;
};

// One table cell, used for witnesses of a maximum.
struct Cell {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  std::uint64_t count = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
};

enum class Strategy {
  automatic,            // power maps use the a = 1 reduction, LUTs are naive
  naive,                // every row computed from its defining equation
  power_map_reduction,  // rows a != 0 rescaled from row a = 1
};

enum class Storage { full, row_spectra };

struct TableOptions {
  unsigned threads = 0;
  Strategy strategy = Strategy::automatic;
  // Unset: full for n <= kFullTableMaxDegree, row spectra above.
  std::optional<Storage> storage;
};

inline constexpr int kFullTableMaxDegree = 10;
inline constexpr std::size_t kMaxWitnesses = 16;

// A DDT or BCT, stored either as a q x q matrix of 32-bit counts or as
// per-row spectra. Row a = 0 is always present but never enters the maximum;
// for a BCT column b = 0 is excluded as well.
class UniformityTable {
 public:
  using RowFn = std::function<std::vector<std::uint64_t>(std::uint32_t)>;

  // Computes every row with row_fn (in parallel) and stores it in the
  // requested layout. Throws Error on 32-bit overflow of a full table.
  static UniformityTable assemble(TableKind kind, const Field& field, Storage storage,
                                  const RowFn& row_fn, unsigned threads);
  static UniformityTable from_full(TableKind kind, const Field& field,
                                   std::vector<std::uint32_t> counts);
  static UniformityTable from_spectra(TableKind kind, const Field& field,
                                      std::vector<RowSpectrum> rows, std::vector<Cell> witnesses);

  TableKind kind() const noexcept { return kind_; }
  const Field& field() const noexcept { return field_; }
  std::uint32_t order() const noexcept { return field_.order(); }
  Storage storage() const noexcept { return storage_; }
  bool is_full() const noexcept { return storage_ == Storage::full; }

  // Full storage only; throws UnsupportedInput otherwise.
  std::uint32_t entry(std::uint32_t a, std::uint32_t b) const;
  std::span<const std::uint32_t> row(std::uint32_t a) const;

  RowSpectrum row_spectrum(std::uint32_t a) const;

  // Max over a != 0 and all b (DDT), or over a != 0, b != 0 (BCT).
  std::uint64_t max_nontrivial() const noexcept { return max_; }
  // Cells attaining max_nontrivial(), row-major, at most kMaxWitnesses.
  const std::vector<Cell>& witnesses() const noexcept { return witnesses_; }

 private:
  UniformityTable(TableKind kind, const Field& field, Storage storage)
      : kind_(kind), field_(field), storage_(storage) {}

  void finish_from_full();

  TableKind kind_;
  Field field_;
  Storage storage_;
  std::vector<std::uint32_t> full_;
  std::vector<RowSpectrum> spectra_;
  std::uint64_t max_ = 0;
  std::vector<Cell> witnesses_;
};

Storage default_storage(const Field& field) noexcept;

}  // namespace bctkit
