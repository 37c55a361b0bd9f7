#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bctkit {

// A field element in polynomial basis: bit i is the coefficient of x^i.
struct Elem {
  std::uint32_t value = 0;

  friend constexpr bool operator==(Elem, Elem) = default;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

// Polynomials over GF(2) packed into a machine word, bit i = coeff of x^i.
namespace gf2poly {

int degree(std::uint64_t p);
std::uint64_t mod(std::uint64_t a, std::uint64_t m);

// Smallest nontrivial factor (by value) of p, or nullopt when p is irreducible.
std::optional<std::uint64_t> find_factor(std::uint64_t p);
bool is_irreducible(std::uint64_t p);

// Lexicographically smallest irreducible polynomial of degree n.
std::uint64_t smallest_irreducible(int n);

std::string to_string(std::uint64_t p);
std::string to_hex(std::uint64_t p);

// Accepts "0x13", "0b10011", "19" or "x^4+x+1".
std::uint64_t parse(std::string_view text);

}  // namespace gf2poly

// GF(2^n) with a fixed irreducible modulus. Cheap to copy; all members are
// const and thread-safe.
class Field {
 public:
  static constexpr int kMinDegree = 2;
  static constexpr int kMaxDegree = 20;

  // Without a modulus the smallest irreducible polynomial of degree n is used.
  // Throws InvalidArgument for out-of-range n, wrong degree or reducible modulus.
  static Field make(int n, std::optional<std::uint64_t> modulus = std::nullopt);

  int degree() const noexcept { return n_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  std::uint32_t order() const noexcept { return std::uint32_t{1} << n_; }
  std::uint32_t mask() const noexcept { return order() - 1; }

  bool contains(Elem a) const noexcept { return a.value < order(); }
  // Validated construction of an element of this field.
  Elem element(std::uint64_t value) const;

  Elem add(Elem a, Elem b) const noexcept { return Elem{a.value ^ b.value}; }
  Elem mul(Elem a, Elem b) const noexcept { return Elem{mul_raw(a.value, b.value)}; }
  Elem square(Elem a) const noexcept { return mul(a, a); }
  // 0^0 is 1.
  Elem pow(Elem a, std::uint64_t e) const noexcept;
  // Throws DomainError for zero.
  Elem inv(Elem a) const;

  std::uint32_t mul_raw(std::uint32_t a, std::uint32_t b) const noexcept;

  // {x : x^3 = 1}, ascending by value. Size 3 for even n, otherwise {1}.
  std::vector<Elem> cube_roots_of_unity() const;

  std::string modulus_hex() const { return gf2poly::to_hex(modulus_); }
  std::string modulus_polynomial() const { return gf2poly::to_string(modulus_); }

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Field(int n, std::uint32_t modulus) : n_(n), modulus_(modulus) {}

  int n_;
  std::uint32_t modulus_;
};

}  // namespace bctkit
