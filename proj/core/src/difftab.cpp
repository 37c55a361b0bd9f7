#include "bctkit/difftab.hpp"

#include <cmath>
#include <string>

#include "bctkit/errors.hpp"

namespace bctkit {

std::uint64_t ddt_entry(const Function& f, Elem a, Elem b) {
  std::uint64_t count = 0;
  for (std::uint32_t x = 0; x < f.order(); ++x) {
    if ((f(x ^ a.value) ^ f(x)) == b.value) ++count;
  }
  return count;
}

std::vector<std::uint64_t> ddt_row(const Function& f, Elem a) {
  std::vector<std::uint64_t> row(f.order(), 0);
  for (std::uint32_t x = 0; x < f.order(); ++x) ++row[f(x ^ a.value) ^ f(x)];
  return row;
}

namespace {

// out[b * a^d] = row_one[b]; multiplication by the nonzero a^d permutes
// the columns and fixes b = 0.
std::vector<std::uint64_t> rescale_row(const Function& f, const std::vector<std::uint64_t>& row_one,
                                       Elem a) {
  const Field& field = f.field();
  const std::uint32_t scale = field.pow(a, *f.exponent()).value;
  std::vector<std::uint64_t> out(f.order(), 0);
  for (std::uint32_t b = 0; b < f.order(); ++b) out[field.mul_raw(b, scale)] = row_one[b];
  return out;
}

void require_power_map(const Function& f, const char* what) {
  if (!f.is_power_map()) throw UnsupportedInput(std::string(what) + " requires a power map");
}

}  // namespace

std::vector<std::uint64_t> ddt_row_powermap(const Function& f, Elem a) {
  require_power_map(f, "the power-map row reduction");
  if (a.value == 0) throw DomainError("the power-map row reduction needs a != 0");
  return rescale_row(f, ddt_row(f, Elem{1}), a);
}

UniformityTable ddt(const Function& f, const TableOptions& options) {
  const Field& field = f.field();
  const Storage storage = options.storage.value_or(default_storage(field));
  if (storage == Storage::full && field.degree() > kFullTableMaxDegree) {
    throw BudgetExceeded("full DDT storage is limited to n <= " +
                             std::to_string(kFullTableMaxDegree) + "; use row spectra",
                         std::ldexp(1.0, 2 * field.degree()));
  }

  Strategy strategy = options.strategy;
  if (strategy == Strategy::automatic) {
    strategy = f.is_power_map() ? Strategy::power_map_reduction : Strategy::naive;
  }

  if (strategy == Strategy::naive) {
    if (field.degree() > kDdtNaiveMaxDegree) {
      const double cost = std::ldexp(1.0, 2 * field.degree());
      throw BudgetExceeded("naive DDT above n = " + std::to_string(kDdtNaiveMaxDegree) +
                               " refused: about " + std::to_string(cost) + " evaluations",
                           cost);
    }
    return UniformityTable::assemble(
        TableKind::ddt, field, storage, [&](std::uint32_t a) { return ddt_row(f, Elem{a}); },
        options.threads);
  }

  require_power_map(f, "the power-map row reduction");
  const std::vector<std::uint64_t> row_one = ddt_row(f, Elem{1});
  std::vector<std::uint64_t> row_zero(f.order(), 0);
  row_zero[0] = f.order();

  if (storage == Storage::full) {
    return UniformityTable::assemble(
        TableKind::ddt, field, storage,
        [&](std::uint32_t a) { return a == 0 ? row_zero : rescale_row(f, row_one, Elem{a}); },
        options.threads);
  }

  // Every row a != 0 is a column permutation of row 1 fixing b = 0, so it
  // has the same spectrum.
  const RowSpectrum one = RowSpectrum::from_row(row_one);
  std::vector<RowSpectrum> rows(f.order(), one);
  rows[0] = RowSpectrum::from_row(row_zero);
  std::vector<Cell> witnesses;
  std::uint64_t best = 0;
  for (auto v : row_one) best = std::max(best, v);
  for (std::uint32_t b = 0; b < f.order() && witnesses.size() < kMaxWitnesses; ++b) {
    if (row_one[b] == best) witnesses.push_back({1, b, best});
  }
  return UniformityTable::from_spectra(TableKind::ddt, field, std::move(rows),
                                       std::move(witnesses));
}

std::uint64_t differential_uniformity(const UniformityTable& table) {
  if (table.kind() != TableKind::ddt) {
    throw InvalidArgument("differential uniformity needs a DDT");
  }
  return table.max_nontrivial();
}

bool is_locally_apn(const Function& f) {
  if (!f.is_power_map()) {
    throw UnsupportedInput("locally-APN is defined for power maps only");
  }
  const auto row = ddt_row(f, Elem{1});
  for (std::uint32_t b = 2; b < f.order(); ++b) {
    if (row[b] > 2) return false;
  }
  return true;
}

bool is_apn(const Function& f, unsigned threads) {
  TableOptions options;
  options.threads = threads;
  options.storage = Storage::row_spectra;
  return differential_uniformity(ddt(f, options)) == 2;
}

}  // namespace bctkit
