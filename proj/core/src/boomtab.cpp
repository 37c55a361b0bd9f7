#include "bctkit/boomtab.hpp"

#include <algorithm>
#include <bit>
#include <span>
#include <cmath>
#include <cstdint>
#include <string>

#include "bctkit/errors.hpp"

namespace bctkit {
namespace {

// In-place Walsh-Hadamard transform, unnormalized.
void walsh_hadamard(std::vector<std::int64_t>& v) {
  for (std::size_t len = 1; len < v.size(); len <<= 1) {
    for (std::size_t i = 0; i < v.size(); i += len << 1) {
      for (std::size_t j = i; j < i + len; ++j) {
        const std::int64_t u = v[j];
        const std::int64_t w = v[j + len];
        v[j] = u + w;
        v[j + len] = u - w;
      }
    }
  }
}

// row[b] += |{(i, j) : values[i] ^ values[j] = b}|
void add_pair_counts(std::span<const std::uint32_t> values, std::vector<std::uint64_t>& row) {
  const std::size_t q = row.size();
  const std::size_t s = values.size();
  const auto log_q = static_cast<std::size_t>(std::bit_width(q));
  if (s * s <= q * log_q) {
    row[0] += s;
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = i + 1; j < s; ++j) row[values[i] ^ values[j]] += 2;
    }
    return;
  }
  // Autocorrelation of the histogram: W^-1 (W h)^2. Intermediate values are
  // bounded by q * s^2 <= 2^60 for n <= 20.
  std::vector<std::int64_t> hist(q, 0);
  for (auto v : values) ++hist[v];
  walsh_hadamard(hist);
  for (auto& h : hist) h *= h;
  walsh_hadamard(hist);
  for (std::size_t b = 0; b < q; ++b) row[b] += static_cast<std::uint64_t>(hist[b]) / q;
}

std::vector<std::uint64_t> rescale_row(const Function& f, const std::vector<std::uint64_t>& row_one,
                                       Elem a) {
  const Field& field = f.field();
  const std::uint32_t scale = field.pow(a, *f.exponent()).value;
  std::vector<std::uint64_t> out(f.order(), 0);
  for (std::uint32_t b = 0; b < f.order(); ++b) out[field.mul_raw(b, scale)] = row_one[b];
  return out;
}

std::string degree_limit_message(const char* route, int limit, double cost) {
  return std::string(route) + " BCT is limited to n <= " + std::to_string(limit) +
         " (estimated " + std::to_string(cost) + " pair operations)";
}

}  // namespace

std::vector<std::uint64_t> bct_row(const Function& f, Elem a) {
  const std::uint32_t q = f.order();

  // Counting sort of x by D_a f(x); each bucket stores the values f(x).
  std::vector<std::uint32_t> offset(q + 1, 0);
  for (std::uint32_t x = 0; x < q; ++x) ++offset[(f(x) ^ f(x ^ a.value)) + 1];
  for (std::uint32_t k = 0; k < q; ++k) offset[k + 1] += offset[k];
  std::vector<std::uint32_t> cursor(offset.begin(), offset.end() - 1);
  std::vector<std::uint32_t> bucketed(q);
  for (std::uint32_t x = 0; x < q; ++x) bucketed[cursor[f(x) ^ f(x ^ a.value)]++] = f(x);

  std::vector<std::uint64_t> row(q, 0);
  const std::span<const std::uint32_t> all(bucketed);
  for (std::uint32_t k = 0; k < q; ++k) {
    if (offset[k + 1] > offset[k]) {
      add_pair_counts(all.subspan(offset[k], offset[k + 1] - offset[k]), row);
    }
  }
  return row;
}

std::uint64_t bct_entry(const Function& f, Elem a, Elem b) { return bct_row(f, a)[b.value]; }

std::vector<std::uint64_t> bct_row_powermap(const Function& f, Elem a) {
  if (!f.is_power_map()) throw UnsupportedInput("the power-map row reduction requires a power map");
  if (a.value == 0) throw DomainError("the power-map row reduction needs a != 0");
  return rescale_row(f, bct_row(f, Elem{1}), a);
}

std::vector<std::pair<Elem, Elem>> bct_solutions(const Function& f, Elem a, Elem b) {
  const std::uint32_t q = f.order();
  std::vector<std::vector<std::uint32_t>> buckets(q);
  for (std::uint32_t x = 0; x < q; ++x) buckets[f(x) ^ f(x ^ a.value)].push_back(x);

  std::vector<std::pair<Elem, Elem>> out;
  for (const auto& bucket : buckets) {
    for (auto x : bucket) {
      for (auto y : bucket) {
        if ((f(x) ^ f(y)) == b.value) out.emplace_back(Elem{x}, Elem{y});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

InverseBoomerang::InverseBoomerang(const Function& f) : f_(f), inverse_(f.order()) {
  if (!f.is_permutation()) {
    throw UnsupportedInput("the inverse-based BCT is defined for permutations only");
  }
  for (std::uint32_t x = 0; x < f.order(); ++x) inverse_[f(x)] = x;
}

std::uint64_t InverseBoomerang::entry(Elem a, Elem b) const {
  std::uint64_t count = 0;
  for (std::uint32_t x = 0; x < f_.order(); ++x) {
    const std::uint32_t lhs = inverse_[f_(x) ^ b.value] ^ inverse_[f_(x ^ a.value) ^ b.value];
    if (lhs == a.value) ++count;
  }
  return count;
}

std::uint64_t bct_entry_inverse(const Function& f, Elem a, Elem b) {
  return InverseBoomerang(f).entry(a, b);
}

double bct_cost_estimate(int n) {
  // q rows, each at least q bucketing steps plus ~2q pair updates.
  return 3.0 * std::ldexp(1.0, 2 * n);
}

UniformityTable bct(const Function& f, const TableOptions& options) {
  const Field& field = f.field();
  const int n = field.degree();
  const Storage storage = options.storage.value_or(default_storage(field));
  if (storage == Storage::full && n > kFullTableMaxDegree) {
    throw BudgetExceeded("full BCT storage is limited to n <= " +
                             std::to_string(kFullTableMaxDegree) + "; use row spectra",
                         bct_cost_estimate(n));
  }

  Strategy strategy = options.strategy;
  if (strategy == Strategy::automatic) {
    strategy = f.is_power_map() ? Strategy::power_map_reduction : Strategy::naive;
  }

  if (strategy == Strategy::naive) {
    if (n > kBctNaiveMaxDegree) {
      throw BudgetExceeded(degree_limit_message("naive", kBctNaiveMaxDegree, bct_cost_estimate(n)),
                           bct_cost_estimate(n));
    }
    return UniformityTable::assemble(
        TableKind::bct, field, storage, [&](std::uint32_t a) { return bct_row(f, Elem{a}); },
        options.threads);
  }

  if (!f.is_power_map()) throw UnsupportedInput("the power-map row reduction requires a power map");
  if (n > kBctReductionMaxDegree) {
    const double cost = 3.0 * std::ldexp(1.0, n);
    throw BudgetExceeded(degree_limit_message("power-map", kBctReductionMaxDegree, cost), cost);
  }

  const std::vector<std::uint64_t> row_one = bct_row(f, Elem{1});
  const std::vector<std::uint64_t> row_zero = bct_row(f, Elem{0});

  if (storage == Storage::full) {
    return UniformityTable::assemble(
        TableKind::bct, field, storage,
        [&](std::uint32_t a) { return a == 0 ? row_zero : rescale_row(f, row_one, Elem{a}); },
        options.threads);
  }

  const RowSpectrum one = RowSpectrum::from_row(row_one);
  std::vector<RowSpectrum> rows(f.order(), one);
  rows[0] = RowSpectrum::from_row(row_zero);
  std::vector<Cell> witnesses;
  const std::uint64_t best = one.max_nonzero();
  for (std::uint32_t b = 1; b < f.order() && witnesses.size() < kMaxWitnesses; ++b) {
    if (row_one[b] == best) witnesses.push_back({1, b, best});
  }
  return UniformityTable::from_spectra(TableKind::bct, field, std::move(rows),
                                       std::move(witnesses));
}

std::uint64_t boomerang_uniformity(const UniformityTable& table) {
  if (table.kind() != TableKind::bct) throw InvalidArgument("boomerang uniformity needs a BCT");
  return table.max_nontrivial();
}

}  // namespace bctkit
