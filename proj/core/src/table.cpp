#include "bctkit/table.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

#include "bctkit/errors.hpp"
#include "bctkit/parallel.hpp"

namespace bctkit {

std::string_view to_string(TableKind kind) noexcept {
  return kind == TableKind::ddt ? "DDT" : "BCT";
}

TableKind parse_table_kind(std::string_view text) {
  if (text == "ddt" || text == "DDT") return TableKind::ddt;
  if (text == "bct" || text == "BCT") return TableKind::bct;
  throw InvalidArgument("unknown table kind '" + std::string(text) + "'");
}

RowSpectrum RowSpectrum::from_row(std::span<const std::uint64_t> row) {
  RowSpectrum spectrum;
  if (row.empty()) return spectrum;
  spectrum.at_zero = row[0];
  std::map<std::uint64_t, std::uint64_t> counts;
  for (std::size_t b = 1; b < row.size(); ++b) ++counts[row[b]];
  spectrum.nonzero.reserve(counts.size());
  for (auto [value, mult] : counts) spectrum.nonzero.push_back({value, mult});
  return spectrum;
}

std::vector<SpectrumEntry> RowSpectrum::merged() const {
  std::vector<SpectrumEntry> out = nonzero;
  auto it = std::lower_bound(out.begin(), out.end(), at_zero,
                             [](const SpectrumEntry& e, std::uint64_t v) { return e.value < v; });
  if (it != out.end() && it->value == at_zero) {
    ++it->multiplicity;
  } else {
    out.insert(it, {at_zero, 1});
  }
  return out;
}

std::uint64_t RowSpectrum::max_nonzero() const noexcept {
  return nonzero.empty() ? 0 : nonzero.back().value;
}

Storage default_storage(const Field& field) noexcept {
  return field.degree() <= kFullTableMaxDegree ? Storage::full : Storage::row_spectra;
}

namespace {

bool in_max_range(TableKind kind, std::uint32_t b) { return kind == TableKind::ddt || b != 0; }

struct RowSummary {
  std::uint64_t max = 0;
  std::vector<std::uint32_t> argmax;
};

RowSummary summarize(TableKind kind, std::span<const std::uint64_t> row) {
  RowSummary s;
  for (std::uint32_t b = 0; b < row.size(); ++b) {
    if (!in_max_range(kind, b)) continue;
    if (row[b] > s.max) {
      s.max = row[b];
      s.argmax.clear();
    }
    if (row[b] == s.max && s.argmax.size() < kMaxWitnesses) s.argmax.push_back(b);
  }
  return s;
}

}  // namespace

UniformityTable UniformityTable::assemble(TableKind kind, const Field& field, Storage storage,
                                          const RowFn& row_fn, unsigned threads) {
  UniformityTable t(kind, field, storage);
  const std::uint32_t q = field.order();
  std::vector<RowSummary> summaries(q);
  if (storage == Storage::full) {
    t.full_.assign(std::size_t{q} * q, 0);
  } else {
    t.spectra_.resize(q);
  }

  parallel_for(q, threads, [&](std::size_t ai) {
    const auto a = static_cast<std::uint32_t>(ai);
    const std::vector<std::uint64_t> row = row_fn(a);
    if (row.size() != q) throw Error("row function returned a row of the wrong length");
    if (a != 0) summaries[a] = summarize(kind, row);
    if (storage == Storage::full) {
      std::uint32_t* dst = t.full_.data() + std::size_t{a} * q;
      for (std::uint32_t b = 0; b < q; ++b) {
        if (row[b] > std::numeric_limits<std::uint32_t>::max()) {
          throw Error("table entry overflows 32 bits at (" + std::to_string(a) + ", " +
                      std::to_string(b) + ")");
        }
        dst[b] = static_cast<std::uint32_t>(row[b]);
      }
    } else {
      t.spectra_[a] = RowSpectrum::from_row(row);
    }
  });

  for (std::uint32_t a = 1; a < q; ++a) t.max_ = std::max(t.max_, summaries[a].max);
  for (std::uint32_t a = 1; a < q && t.witnesses_.size() < kMaxWitnesses; ++a) {
    if (summaries[a].max != t.max_) continue;
    for (auto b : summaries[a].argmax) {
      if (t.witnesses_.size() == kMaxWitnesses) break;
      t.witnesses_.push_back({a, b, t.max_});
    }
  }
  return t;
}

UniformityTable UniformityTable::from_full(TableKind kind, const Field& field,
                                           std::vector<std::uint32_t> counts) {
  const std::size_t q = field.order();
  if (counts.size() != q * q) {
    throw InvalidArgument("full table needs " + std::to_string(q * q) + " entries, got " +
                          std::to_string(counts.size()));
  }
  UniformityTable t(kind, field, Storage::full);
  t.full_ = std::move(counts);
  t.finish_from_full();
  return t;
}

void UniformityTable::finish_from_full() {
  const std::uint32_t q = order();
  max_ = 0;
  witnesses_.clear();
  for (std::uint32_t a = 1; a < q; ++a) {
    for (std::uint32_t b = 0; b < q; ++b) {
      if (in_max_range(kind_, b)) max_ = std::max<std::uint64_t>(max_, entry(a, b));
    }
  }
  for (std::uint32_t a = 1; a < q && witnesses_.size() < kMaxWitnesses; ++a) {
    for (std::uint32_t b = 0; b < q && witnesses_.size() < kMaxWitnesses; ++b) {
      if (in_max_range(kind_, b) && entry(a, b) == max_) witnesses_.push_back({a, b, max_});
    }
  }
}

UniformityTable UniformityTable::from_spectra(TableKind kind, const Field& field,
                                              std::vector<RowSpectrum> rows,
                                              std::vector<Cell> witnesses) {
  if (rows.size() != field.order()) {
    throw InvalidArgument("row spectra must cover all " + std::to_string(field.order()) + " rows");
  }
  UniformityTable t(kind, field, Storage::row_spectra);
  t.spectra_ = std::move(rows);
  for (std::uint32_t a = 1; a < t.order(); ++a) {
    const RowSpectrum& r = t.spectra_[a];
    std::uint64_t row_max = r.max_nonzero();
    if (kind == TableKind::ddt) row_max = std::max(row_max, r.at_zero);
    t.max_ = std::max(t.max_, row_max);
  }
  for (const Cell& c : witnesses) {
    if (c.count == t.max_ && t.witnesses_.size() < kMaxWitnesses) t.witnesses_.push_back(c);
  }
  return t;
}

std::uint32_t UniformityTable::entry(std::uint32_t a, std::uint32_t b) const {
  if (!is_full()) throw UnsupportedInput("table is stored as row spectra; cells are unavailable");
  return full_[std::size_t{a} * order() + b];
}

std::span<const std::uint32_t> UniformityTable::row(std::uint32_t a) const {
  if (!is_full()) throw UnsupportedInput("table is stored as row spectra; rows are unavailable");
  return std::span<const std::uint32_t>(full_).subspan(std::size_t{a} * order(), order());
}

RowSpectrum UniformityTable::row_spectrum(std::uint32_t a) const {
  if (!is_full()) return spectra_.at(a);
  const auto r = row(a);
  std::vector<std::uint64_t> wide(r.begin(), r.end());
  return RowSpectrum::from_row(wide);
}

}  // namespace bctkit
