#include "bctkit/claims.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <mutex>
#include <set>

#include "bctkit/boomtab.hpp"
#include "bctkit/difftab.hpp"
#include "bctkit/errors.hpp"
#include "bctkit/parallel.hpp"

namespace bctkit {
namespace {

std::int64_t as_int(std::uint64_t v) { return static_cast<std::int64_t>(v); }

VerificationOutcome make_outcome(std::string claim_id, const Function& f, int m) {
  VerificationOutcome out;
  out.claim_id = std::move(claim_id);
  out.n = f.field().degree();
  out.m = m;
  out.d = f.exponent();
  out.modulus = f.field().modulus();
  return out;
}

void settle(VerificationOutcome& out) { out.pass = out.expected == out.observed; }

std::uint64_t row_max(const std::vector<std::uint64_t>& row, std::uint32_t from) {
  std::uint64_t best = 0;
  for (std::uint32_t b = from; b < row.size(); ++b) best = std::max(best, row[b]);
  return best;
}

void check_m_range(int m, int lo, int hi, const char* what) {
  if (m < lo || m > hi) {
    throw InvalidArgument(std::string(what) + ": m = " + std::to_string(m) + " outside [" +
                          std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

// Nonzero b for which the a = 1 system has a solution (x, y) with x in {0, 1}.
std::set<std::uint32_t> boundary_b_values(const Function& f) {
  std::set<std::uint32_t> out;
  for (std::uint32_t x : {0u, 1u}) {
    for (std::uint32_t y = 0; y < f.order(); ++y) {
      const std::uint32_t b = f(x) ^ f(y);
      if (b != 0 && (f(x ^ 1) ^ f(y ^ 1)) == b) out.insert(b);
    }
  }
  return out;
}

UniformityTable spectra_table(const Function& f, TableKind kind, unsigned threads,
                              Strategy strategy = Strategy::automatic) {
  TableOptions options;
  options.threads = threads;
  options.strategy = strategy;
  options.storage = Storage::row_spectra;
  return kind == TableKind::ddt ? ddt(f, options) : bct(f, options);
}

}  // namespace

std::uint64_t recount_cell(const Function& f, TableKind kind, std::uint32_t a, std::uint32_t b) {
  const std::uint32_t q = f.order();
  std::uint64_t count = 0;
  if (kind == TableKind::ddt) {
    for (std::uint32_t x = 0; x < q; ++x) count += (f(x ^ a) ^ f(x)) == b;
    return count;
  }
  for (std::uint32_t x = 0; x < q; ++x) {
    for (std::uint32_t y = 0; y < q; ++y) {
      count += (f(x) ^ f(y)) == b && (f(x ^ a) ^ f(y ^ a)) == b;
    }
  }
  return count;
}

AnalysisReport analyze(const Function& f, const TableOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  AnalysisReport report;
  report.field = f.field();
  report.exponent = f.exponent();
  report.degenerate = f.is_degenerate();
  report.permutation = f.is_permutation();

  const UniformityTable d = ddt(f, options);
  const UniformityTable b = bct(f, options);
  report.delta = differential_uniformity(d);
  report.boomerang = boomerang_uniformity(b);
  report.apn = report.delta == 2;
  if (f.is_power_map()) report.locally_apn = is_locally_apn(f);
  report.delta_witnesses = d.witnesses();
  report.boomerang_witnesses = b.witnesses();

  if (f.field().degree() <= kWitnessRecheckMaxDegree) {
    bool ok = true;
    for (const Cell& c : report.delta_witnesses) {
      ok = ok && recount_cell(f, TableKind::ddt, c.a, c.b) == c.count;
    }
    for (const Cell& c : report.boomerang_witnesses) {
      ok = ok && recount_cell(f, TableKind::bct, c.a, c.b) == c.count;
    }
    report.witnesses_verified = ok;
  }

  report.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

Function family_map(int m) {
  check_m_range(m, 2, 8, "x^(2^m-1) family");
  return Function::power_map(Field::make(2 * m), (std::uint64_t{1} << m) - 1);
}

VerificationOutcome verify_family_row_one(int m) {
  check_m_range(m, 2, 8, "x^(2^m-1) row-one check");
  const Function f = family_map(m);
  const auto row = ddt_row(f, Elem{1});
  const std::uint64_t off_f2 = row_max(row, 2);

  VerificationOutcome out = make_outcome("family.row_one", f, m);
  out.expected = {{"ddt(1,0)", (std::int64_t{1} << m) - 2},
                  {"ddt(1,1)", m % 2 == 0 ? 2 : 4},
                  {"max ddt(1,b) for b outside F2 is <= 2", 1}};
  out.observed = {{"ddt(1,0)", as_int(row[0])},
                  {"ddt(1,1)", as_int(row[1])},
                  {"max ddt(1,b) for b outside F2 is <= 2", off_f2 <= 2 ? 1 : 0}};
  out.note = "max ddt(1,b) off F2 = " + std::to_string(off_f2);
  settle(out);
  return out;
}

VerificationOutcome verify_odd_family(int m, unsigned threads) {
  check_m_range(m, 3, 7, "odd-m boomerang check");
  if (m % 2 == 0) throw PreconditionError("odd-m boomerang check needs odd m, got " + std::to_string(m));
  const Function f = family_map(m);
  const Field& field = f.field();

  const std::uint64_t boomerang =
      boomerang_uniformity(spectra_table(f, TableKind::bct, threads));
  const std::vector<Elem> roots = field.cube_roots_of_unity();
  std::set<std::uint32_t> cube_roots;
  for (Elem r : roots) cube_roots.insert(r.value);

  VerificationOutcome out = make_outcome("family.odd_m", f, m);
  out.expected = {{"boomerang_uniformity", 4},
                  {"solutions with x in {0,1} exactly for b in {1,w,w^2}", 1}};
  out.observed = {{"boomerang_uniformity", as_int(boomerang)},
                  {"solutions with x in {0,1} exactly for b in {1,w,w^2}",
                   boundary_b_values(f) == cube_roots ? 1 : 0}};

  if (m == 3) {
    TableOptions naive;
    naive.threads = threads;
    naive.strategy = Strategy::naive;
    out.expected.push_back({"boomerang_uniformity (naive full table)", 4});
    out.observed.push_back(
        {"boomerang_uniformity (naive full table)", as_int(boomerang_uniformity(bct(f, naive)))});

    const Elem w = roots[1];
    const Elem w2 = roots[2];
    const auto solutions = bct_solutions(f, Elem{1}, Elem{1});
    const std::vector<std::pair<Elem, Elem>> wanted{
        {Elem{0}, Elem{1}}, {Elem{1}, Elem{0}}, {w, w2}, {w2, w}};
    const bool all_present = std::all_of(wanted.begin(), wanted.end(), [&](const auto& p) {
      return std::binary_search(solutions.begin(), solutions.end(), p);
    });
    out.expected.push_back({"b=1 solutions include (0,1),(1,0),(w,w^2),(w^2,w)", 1});
    out.observed.push_back(
        {"b=1 solutions include (0,1),(1,0),(w,w^2),(w^2,w)", all_present ? 1 : 0});
  }
  settle(out);
  return out;
}

VerificationOutcome verify_even_family(int m, unsigned threads) {
  check_m_range(m, 2, 8, "even-m boomerang check");
  if (m % 2 != 0) throw PreconditionError("even-m boomerang check needs even m, got " + std::to_string(m));
  const Function f = family_map(m);
  const std::uint64_t boomerang =
      boomerang_uniformity(spectra_table(f, TableKind::bct, threads));

  VerificationOutcome out = make_outcome("family.even_m", f, m);
  out.expected = {{"boomerang_uniformity", 2},
                  {"solutions with x in {0,1} only for b = 1", 1}};
  out.observed = {{"boomerang_uniformity", as_int(boomerang)},
                  {"solutions with x in {0,1} only for b = 1",
                   boundary_b_values(f) == std::set<std::uint32_t>{1} ? 1 : 0}};
  settle(out);
  return out;
}

VerificationOutcome verify_apn_boomerang(const Function& f, unsigned threads) {
  const std::uint64_t delta = differential_uniformity(spectra_table(f, TableKind::ddt, threads));
  if (delta != 2) {
    throw PreconditionError(f.label() + " is not APN (differential uniformity " +
                            std::to_string(delta) + ")");
  }
  VerificationOutcome out = make_outcome("apn.boomerang_two", f, 0);
  out.expected = {{"boomerang_uniformity", 2}};
  out.observed = {
      {"boomerang_uniformity",
       as_int(boomerang_uniformity(spectra_table(f, TableKind::bct, threads)))}};
  settle(out);
  return out;
}

VerificationOutcome verify_permutation_b2(const Function& f, unsigned threads) {
  const std::uint64_t boomerang =
      boomerang_uniformity(spectra_table(f, TableKind::bct, threads));
  const std::uint64_t delta = differential_uniformity(spectra_table(f, TableKind::ddt, threads));

  if (f.is_permutation()) {
    if (boomerang != 2) {
      throw PreconditionError(f.label() + " has boomerang uniformity " +
                              std::to_string(boomerang) + ", not 2");
    }
    VerificationOutcome out = make_outcome("permutation_b2", f, 0);
    out.expected = {{"differential_uniformity", 2}};
    out.observed = {{"differential_uniformity", as_int(delta)}};
    settle(out);
    return out;
  }

  if (boomerang == 2 && delta != 2) {
    VerificationOutcome out = make_outcome("permutation_b2.converse_counterexample", f, 0);
    out.expected = {{"permutation", 0}, {"boomerang_uniformity", 2}, {"apn", 0}};
    out.observed = {{"permutation", 0}, {"boomerang_uniformity", 2}, {"apn", 0}};
    out.note = "non-permutation with boomerang uniformity 2 and differential uniformity " +
               std::to_string(delta) + ": the converse fails without bijectivity";
    settle(out);
    return out;
  }
  throw PreconditionError(f.label() + " is not a permutation");
}

VerificationOutcome verify_example(const std::string& claim_id, int n, std::uint64_t d,
                                   std::vector<Quantity> expected, unsigned threads) {
  const Function f = Function::power_map(Field::make(n), d);
  TableOptions options;
  options.threads = threads;
  const AnalysisReport r = analyze(f, options);

  VerificationOutcome out = make_outcome(claim_id, f, n % 2 == 0 ? n / 2 : 0);
  for (const Quantity& want : expected) {
    std::int64_t got = -1;
    if (want.name == "differential_uniformity") got = as_int(r.delta);
    else if (want.name == "boomerang_uniformity") got = as_int(r.boomerang);
    else if (want.name == "permutation") got = r.permutation;
    else if (want.name == "apn") got = r.apn;
    else if (want.name == "locally_apn") got = r.locally_apn.value_or(false);
    else throw InvalidArgument("unknown example quantity '" + want.name + "'");
    out.observed.push_back({want.name, got});
  }
  out.expected = std::move(expected);
  settle(out);
  return out;
}

std::vector<Elem> family_quartic_roots(const Field& field, Elem b) {
  if (field.degree() % 2 != 0) throw InvalidArgument("the quartic needs a field of even degree");
  const std::uint64_t sub = std::uint64_t{1} << (field.degree() / 2);  // 2^m
  const Elem b_s = field.pow(b, sub);
  const Elem b_s1 = field.mul(b_s, b);
  const Elem b_s2 = field.mul(b_s1, b);
  const Elem c4 = b_s2;
  const Elem c2 = Elem{b_s2.value ^ b_s1.value ^ b_s.value ^ b.value};
  const Elem c1 = Elem{b_s1.value ^ b_s.value ^ b.value};

  std::vector<Elem> roots;
  for (std::uint32_t v = 2; v < field.order(); ++v) {
    const Elem x{v};
    const Elem x2 = field.square(x);
    const Elem x4 = field.square(x2);
    if ((field.mul(c4, x4).value ^ field.mul(c2, x2).value ^ field.mul(c1, x).value) == 0) {
      roots.push_back(x);
    }
  }
  return roots;
}

std::uint64_t ddt_row_sum_violations(const UniformityTable& ddt) {
  if (ddt.kind() != TableKind::ddt) throw InvalidArgument("row sums are checked on a DDT");
  std::uint64_t bad = 0;
  for (std::uint32_t a = 0; a < ddt.order(); ++a) {
    std::uint64_t sum = 0;
    for (const auto& e : ddt.row_spectrum(a).merged()) sum += e.value * e.multiplicity;
    bad += sum != ddt.order();
  }
  return bad;
}

std::uint64_t odd_entry_violations(const UniformityTable& table) {
  std::uint64_t bad = 0;
  for (std::uint32_t a = 0; a < table.order(); ++a) {
    const RowSpectrum r = table.row_spectrum(a);
    if (table.kind() == TableKind::ddt) {
      if (a == 0) continue;
      bad += r.at_zero % 2;
    }
    for (const auto& e : r.nonzero) bad += (e.value % 2) * e.multiplicity;
  }
  return bad;
}

std::uint64_t dominance_violations(const UniformityTable& ddt, const UniformityTable& bct) {
  if (!ddt.is_full() || !bct.is_full() || ddt.order() != bct.order()) {
    throw InvalidArgument("dominance is checked on two full tables of the same field");
  }
  std::uint64_t bad = 0;
  for (std::uint32_t a = 1; a < ddt.order(); ++a) {
    for (std::uint32_t b = 1; b < ddt.order(); ++b) bad += ddt.entry(a, b) > bct.entry(a, b);
  }
  return bad;
}

std::uint64_t frobenius_violations(const Function& power_map) {
  if (!power_map.is_power_map()) throw UnsupportedInput("Frobenius invariance needs a power map");
  const Field& field = power_map.field();
  const auto d_row = ddt_row(power_map, Elem{1});
  const auto b_row = bct_row(power_map, Elem{1});
  std::uint64_t bad = 0;
  for (std::uint32_t b = 0; b < field.order(); ++b) {
    const std::uint32_t b2 = field.mul_raw(b, b);
    bad += d_row[b2] != d_row[b];
    bad += b_row[b2] != b_row[b];
  }
  return bad;
}

std::uint64_t quartic_containment_violations(int m) {
  const Function f = family_map(m);
  const Field& field = f.field();
  std::vector<std::vector<std::uint32_t>> solutions(field.order());
  for (std::uint32_t x = 0; x < field.order(); ++x) solutions[f(x ^ 1) ^ f(x)].push_back(x);

  std::uint64_t bad = 0;
  for (std::uint32_t b = 2; b < field.order(); ++b) {
    const auto roots = family_quartic_roots(field, Elem{b});
    for (auto x : solutions[b]) bad += !std::binary_search(roots.begin(), roots.end(), Elem{x});
  }
  return bad;
}

std::vector<std::uint64_t> cyclotomic_coset(std::uint64_t d, int n) {
  const std::uint64_t modulus = (std::uint64_t{1} << n) - 1;
  std::set<std::uint64_t> members;
  std::uint64_t e = d % modulus;
  for (int i = 0; i < n; ++i) {
    members.insert(e);
    e = (2 * e) % modulus;
  }
  return {members.begin(), members.end()};
}

std::uint64_t cyclotomic_representative(std::uint64_t d, int n) {
  return cyclotomic_coset(d, n).front();
}

std::vector<AnalysisReport> search_b_lt_delta(const Field& field, const SearchOptions& options) {
  const int n = field.degree();
  if (n > kSearchMaxDegree) {
    const double cost = std::ldexp(1.0, 3 * n);
    throw BudgetExceeded("exponent search is limited to n <= " +
                             std::to_string(kSearchMaxDegree),
                         cost);
  }
  const std::uint64_t top = field.order() - 2;
  std::vector<std::uint64_t> reps;
  for (std::uint64_t d = 2; d <= top; ++d) {
    if (cyclotomic_representative(d, n) == d) reps.push_back(d);
  }

  std::vector<std::optional<AnalysisReport>> found(reps.size());
  parallel_for(reps.size(), options.threads, [&](std::size_t i) {
    const Function f = Function::power_map(field, reps[i]);
    const std::uint64_t delta = row_max(ddt_row(f, Elem{1}), 0);
    const std::uint64_t boomerang = row_max(bct_row(f, Elem{1}), 1);
    if (boomerang >= delta) return;

    TableOptions naive;
    naive.threads = 1;
    naive.strategy = Strategy::naive;
    AnalysisReport report = analyze(f, naive);
    if (report.delta != delta || report.boomerang != boomerang) {
      throw Error("row-one screening of x^" + std::to_string(reps[i]) +
                  " disagrees with the naive tables");
    }
    report.coset = cyclotomic_coset(reps[i], n);
    found[i] = std::move(report);
  });

  std::vector<AnalysisReport> out;
  for (auto& r : found) {
    if (r) out.push_back(std::move(*r));
  }
  return out;
}

std::vector<VerificationOutcome> verify_all(int max_m, unsigned threads) {
  if (max_m < 2 || max_m > 8) {
    throw InvalidArgument("max_m = " + std::to_string(max_m) + " outside [2, 8]");
  }
  std::vector<VerificationOutcome> out;
  for (int m = 2; m <= max_m; ++m) out.push_back(verify_family_row_one(m));
  for (int m = 3; m <= std::min(max_m, 7); m += 2) out.push_back(verify_odd_family(m, threads));
  for (int m = 2; m <= max_m; m += 2) out.push_back(verify_even_family(m, threads));

  // Table invariants on the family maps small enough for naive full tables.
  for (int m = 2; m <= std::min(max_m, 4); ++m) {
    const Function f = family_map(m);
    TableOptions naive;
    naive.threads = threads;
    naive.strategy = Strategy::naive;
    naive.storage = Storage::full;
    TableOptions reduced = naive;
    reduced.strategy = Strategy::power_map_reduction;
    const UniformityTable dn = ddt(f, naive);
    const UniformityTable bn = bct(f, naive);
    const UniformityTable dr = ddt(f, reduced);
    const UniformityTable br = bct(f, reduced);

    auto invariant = [&](const std::string& id, std::uint64_t violations) {
      VerificationOutcome o = make_outcome("invariant." + id, f, m);
      o.expected = {{"violations", 0}};
      o.observed = {{"violations", as_int(violations)}};
      settle(o);
      out.push_back(std::move(o));
    };
    std::uint64_t scaling = 0;
    for (std::uint32_t a = 0; a < f.order(); ++a) {
      scaling += !std::ranges::equal(dn.row(a), dr.row(a));
      scaling += !std::ranges::equal(bn.row(a), br.row(a));
    }
    invariant("ddt_row_sums", ddt_row_sum_violations(dn));
    invariant("even_entries", odd_entry_violations(dn) + odd_entry_violations(bn));
    invariant("ddt_le_bct", dominance_violations(dn, bn));
    invariant("power_map_scaling", scaling);
    invariant("frobenius", frobenius_violations(f));
    invariant("quartic_contains_solutions", quartic_containment_violations(m));
  }

  // Claims about specific functions whose field fits in n <= 2 max_m.
  const int n_max = 2 * max_m;
  if (n_max >= 6) {
    out.push_back(verify_example("example.x7_F64", 6, 7,
                                 {{"differential_uniformity", 6},
                                  {"boomerang_uniformity", 4},
                                  {"permutation", 0},
                                  {"locally_apn", 1}},
                                 threads));
  }
  if (n_max >= 8) {
    out.push_back(verify_example("example.x15_F256", 8, 15,
                                 {{"differential_uniformity", 14}, {"boomerang_uniformity", 2}},
                                 threads));
    out.push_back(verify_example("example.x45_F256", 8, 45,
                                 {{"differential_uniformity", 14},
                                  {"boomerang_uniformity", 2},
                                  {"locally_apn", 1}},
                                 threads));
    out.push_back(verify_permutation_b2(Function::power_map(Field::make(8), 15), threads));
  }
  for (int n = 4; n <= std::min(n_max, 8); ++n) {
    const Function cube = Function::power_map(Field::make(n), 3);
    out.push_back(verify_apn_boomerang(cube, threads));
    if (cube.is_permutation()) out.push_back(verify_permutation_b2(cube, threads));
  }
  return out;
}

}  // namespace bctkit
