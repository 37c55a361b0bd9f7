#pragma once

#include <cstdint>
#include <vector>

#include "bctkit/table.hpp"
#include "bctkit/vecfun.hpp"

namespace bctkit {

inline constexpr int kDdtNaiveMaxDegree = 14;

// |{x : f(x + a) + f(x) = b}|
std::uint64_t ddt_entry(const Function& f, Elem a, Elem b);

// Row a in one O(q) sweep over x.
std::vector<std::uint64_t> ddt_row(const Function& f, Elem a);

// Row a != 0 of a power map, rebuilt from row 1 through
// Delta(a, b) = Delta(1, b * a^-d). Throws DomainError for a = 0 and
// UnsupportedInput for LUTs.
std::vector<std::uint64_t> ddt_row_powermap(const Function& f, Elem a);

// Throws BudgetExceeded when the naive route is requested above
// kDdtNaiveMaxDegree.
UniformityTable ddt(const Function& f, const TableOptions& options = {});

// Max over a != 0 and every b, the b = 0 column included.
// Throws InvalidArgument for a BCT.
std::uint64_t differential_uniformity(const UniformityTable& table);

// Delta(1, b) <= 2 for every b outside {0, 1}. Defined for power maps only;
// other functions raise UnsupportedInput.
bool is_locally_apn(const Function& f);

bool is_apn(const Function& f, unsigned threads = 0);

}  // namespace bctkit
