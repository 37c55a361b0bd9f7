#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bctkit/table.hpp"
#include "bctkit/vecfun.hpp"

namespace bctkit {

// Per-function summary of both tables.
struct AnalysisReport {
  Field field = Field::make(2);
  std::optional<std::uint64_t> exponent;  // nullopt for LUTs
  bool degenerate = false;
  bool permutation = false;
  bool apn = false;
  std::optional<bool> locally_apn;  // power maps only
  std::uint64_t delta = 0;
  std::uint64_t boomerang = 0;
  std::vector<Cell> delta_witnesses;
  std::vector<Cell> boomerang_witnesses;
  // Set for n <= kWitnessRecheckMaxDegree, where every witness was recounted
  // by direct enumeration.
  std::optional<bool> witnesses_verified;
  std::vector<std::uint64_t> coset;  // filled by the exponent search
  std::int64_t runtime_ms = 0;
};

inline constexpr int kWitnessRecheckMaxDegree = 8;

AnalysisReport analyze(const Function& f, const TableOptions& options = {});

// Recounts a cell from its definition: O(q) for a DDT cell, O(q^2) over all
// (x, y) for a BCT cell. No bucketing, no power-map reduction.
std::uint64_t recount_cell(const Function& f, TableKind kind, std::uint32_t a, std::uint32_t b);

struct Quantity {
  std::string name;
  std::int64_t value = 0;

  friend bool operator==(const Quantity&, const Quantity&) = default;
};

struct VerificationOutcome {
  std::string claim_id;
  int n = 0;
  int m = 0;  // n / 2 for the x^(2^m - 1) family, 0 otherwise
  std::optional<std::uint64_t> d;
  std::uint32_t modulus = 0;
  std::vector<Quantity> expected;
  std::vector<Quantity> observed;
  bool pass = false;
  std::string note;
};

// x^(2^m - 1) over GF(2^(2m)).
Function family_map(int m);

// DDT row 1: Delta(1,0) = 2^m - 2, Delta(1,1) = 2 (m even) or 4 (m odd),
// Delta(1,b) <= 2 off F_2. Requires 2 <= m <= 8.
VerificationOutcome verify_family_row_one(int m);

// Boomerang uniformity 4 for odd m in [3, 7]; solutions with x in {0, 1}
// occur exactly for b in {1, w, w^2}. At m = 3 the full table is also built
// naively and the four b = 1 solutions (0,1), (1,0), (w,w^2), (w^2,w) are
// checked.
VerificationOutcome verify_odd_family(int m, unsigned threads = 0);

// Boomerang uniformity 2 for even m in [2, 8].
VerificationOutcome verify_even_family(int m, unsigned threads = 0);

// Any APN function has boomerang uniformity 2. Throws PreconditionError for
// non-APN input.
VerificationOutcome verify_apn_boomerang(const Function& f, unsigned threads = 0);

// A permutation with boomerang uniformity 2 is APN. A non-permutation with
// B = 2 that is not APN is reported as the converse counterexample; every
// other input raises PreconditionError.
VerificationOutcome verify_permutation_b2(const Function& f, unsigned threads = 0);

// Delta, B and the structural flags of a power map against given values.
VerificationOutcome verify_example(const std::string& claim_id, int n, std::uint64_t d,
                                   std::vector<Quantity> expected, unsigned threads = 0);

// Every claim check for m in [2, max_m] plus the table invariants on the
// fields involved. Throws InvalidArgument unless 2 <= max_m <= 8.
std::vector<VerificationOutcome> verify_all(int max_m, unsigned threads = 0);

// Roots outside F_2 of
//   b^(2^m+2) x^4 + (b^(2^m+2) + b^(2^m+1) + b^(2^m) + b) x^2 + (b^(2^m+1) + b^(2^m) + b) x,
// the quartic obtained by combining D_1 f(x) = b with its 2^m-th power.
// Field must have degree 2m.
std::vector<Elem> family_quartic_roots(const Field& field, Elem b);

// Invariant checks. Each returns the number of violating cells.
std::uint64_t ddt_row_sum_violations(const UniformityTable& ddt);
std::uint64_t odd_entry_violations(const UniformityTable& table);  // DDT: a != 0; BCT: b != 0
std::uint64_t dominance_violations(const UniformityTable& ddt, const UniformityTable& bct);
std::uint64_t frobenius_violations(const Function& power_map);
std::uint64_t quartic_containment_violations(int m);

// Cyclotomic cosets {d 2^i mod 2^n - 1}.
std::vector<std::uint64_t> cyclotomic_coset(std::uint64_t d, int n);
std::uint64_t cyclotomic_representative(std::uint64_t d, int n);

inline constexpr int kSearchMaxDegree = 10;

struct SearchOptions {
  unsigned threads = 0;
};

// Every coset representative d in [2, 2^n - 2] whose power map has
// B < Delta, sorted by d. Candidates are screened on row 1 of each table and
// then re-analyzed from naive full tables. Throws BudgetExceeded for
// n > kSearchMaxDegree.
std::vector<AnalysisReport> search_b_lt_delta(const Field& field, const SearchOptions& options = {});

}  // namespace bctkit
