#pragma once

// Reference implementations used only by tests. They deliberately share no
// code with the library: field products go through a full carry-less product
// followed by long division, powers by repeated multiplication, and table
// cells by direct enumeration of the defining equations.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

inline int degree(std::uint64_t p) {
  int d = -1;
  for (int i = 0; i < 64; ++i) {
    if ((p >> i) & 1) d = i;
  }
  return d;
}

inline std::uint64_t clmul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  for (int i = 0; i < 32; ++i) {
    if ((b >> i) & 1) r ^= a << i;
  }
  return r;
}

inline std::uint64_t long_div_rem(std::uint64_t a, std::uint64_t m) {
  const int dm = degree(m);
  for (int i = degree(a); i >= dm; --i) {
    if ((a >> i) & 1) a ^= m << (i - dm);
  }
  return a;
}

inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t modulus) {
  return static_cast<std::uint32_t>(long_div_rem(clmul(a, b), modulus));
}

inline std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t modulus) {
  std::uint32_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) r = mul(r, a, modulus);
  return r;
}

// Irreducible iff no product of two polynomials of degree >= 1 equals p.
inline bool irreducible_by_products(std::uint64_t p) {
  const int n = degree(p);
  for (std::uint64_t f = 2; f < (std::uint64_t{1} << n); ++f) {
    for (std::uint64_t g = f; g < (std::uint64_t{1} << n); ++g) {
      if (degree(f) + degree(g) == n && clmul(f, g) == p) return false;
    }
  }
  return true;
}

using Table = std::vector<std::uint32_t>;

inline Table power_table(int n, std::uint32_t modulus, std::uint64_t d) {
  Table t(std::size_t{1} << n);
  for (std::uint32_t x = 0; x < t.size(); ++x) t[x] = pow(x, d, modulus);
  return t;
}

inline std::uint64_t ddt_cell(const Table& f, std::uint32_t a, std::uint32_t b) {
  std::uint64_t c = 0;
  for (std::uint32_t x = 0; x < f.size(); ++x) c += (f[x ^ a] ^ f[x]) == b;
  return c;
}

inline std::uint64_t bct_cell(const Table& f, std::uint32_t a, std::uint32_t b) {
  std::uint64_t c = 0;
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    for (std::uint32_t y = 0; y < f.size(); ++y) {
      c += (f[x] ^ f[y]) == b && (f[x ^ a] ^ f[y ^ a]) == b;
    }
  }
  return c;
}

// Full q x q tables by enumeration: DDT over (a, x), BCT over (a, x, y).
inline std::vector<std::uint64_t> ddt_full(const Table& f) {
  const std::size_t q = f.size();
  std::vector<std::uint64_t> t(q * q, 0);
  for (std::uint32_t a = 0; a < q; ++a) {
    for (std::uint32_t x = 0; x < q; ++x) ++t[a * q + (f[x ^ a] ^ f[x])];
  }
  return t;
}

inline std::vector<std::uint64_t> bct_full(const Table& f) {
  const std::size_t q = f.size();
  std::vector<std::uint64_t> t(q * q, 0);
  for (std::uint32_t a = 0; a < q; ++a) {
    for (std::uint32_t x = 0; x < q; ++x) {
      for (std::uint32_t y = 0; y < q; ++y) {
        const std::uint32_t b = f[x] ^ f[y];
        if ((f[x ^ a] ^ f[y ^ a]) == b) ++t[a * q + b];
      }
    }
  }
  return t;
}

inline std::uint64_t max_over(const std::vector<std::uint64_t>& t, std::size_t q, bool skip_b0) {
  std::uint64_t best = 0;
  for (std::size_t a = 1; a < q; ++a) {
    for (std::size_t b = skip_b0 ? 1 : 0; b < q; ++b) best = std::max(best, t[a * q + b]);
  }
  return best;
}

inline Table random_lut(int n, std::mt19937_64& rng) {
  Table t(std::size_t{1} << n);
  std::uniform_int_distribution<std::uint32_t> dist(0, static_cast<std::uint32_t>(t.size() - 1));
  for (auto& v : t) v = dist(rng);
  return t;
}

inline Table random_permutation(int n, std::mt19937_64& rng) {
  Table t(std::size_t{1} << n);
  std::iota(t.begin(), t.end(), 0u);
  std::shuffle(t.begin(), t.end(), rng);
  return t;
}

}  // namespace oracle
