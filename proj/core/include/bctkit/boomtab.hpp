#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "bctkit/table.hpp"
#include "bctkit/vecfun.hpp"

namespace bctkit {

inline constexpr int kBctNaiveMaxDegree = 12;
inline constexpr int kBctReductionMaxDegree = 16;

// Number of (x, y) with f(x) + f(y) = b and f(x + a) + f(y + a) = b.
std::uint64_t bct_entry(const Function& f, Elem a, Elem b);

// All q counts of row a in one pass. Both equations hold iff x and y share
// the derivative value D_a f(x) = f(x) + f(x + a) and f(x) + f(y) = b, so x
// is bucketed by D_a f and pairs are convolved inside each bucket. Small
// buckets enumerate their pairs directly; a bucket with s^2 > q log q uses a
// Walsh-Hadamard autocorrelation of its value histogram instead.
std::vector<std::uint64_t> bct_row(const Function& f, Elem a);

// Row a != 0 of a power map, rebuilt from row 1 through
// B(a, b) = B(1, b * a^-d).
std::vector<std::uint64_t> bct_row_powermap(const Function& f, Elem a);

// The solution set of the system, sorted.
std::vector<std::pair<Elem, Elem>> bct_solutions(const Function& f, Elem a, Elem b);

// Inverse-based count for permutations: the number of x with
// f^-1(f(x) + b) + f^-1(f(x + a) + b) = a. The inverse is built once.
class InverseBoomerang {
 public:
  // Throws UnsupportedInput unless f is a permutation.
  explicit InverseBoomerang(const Function& f);

  std::uint64_t entry(Elem a, Elem b) const;

 private:
  Function f_;
  std::vector<std::uint32_t> inverse_;
};

std::uint64_t bct_entry_inverse(const Function& f, Elem a, Elem b);

// Naive: n <= kBctNaiveMaxDegree. Power-map reduction: n <= kBctReductionMaxDegree.
// Anything larger raises BudgetExceeded with a cost estimate.
UniformityTable bct(const Function& f, const TableOptions& options = {});

// Max over a != 0 and b != 0. Throws InvalidArgument for a DDT.
std::uint64_t boomerang_uniformity(const UniformityTable& table);

// Estimated bucketed pair operations for a naive BCT.
double bct_cost_estimate(int n);

}  // namespace bctkit
