#include "bctkit/gf2n.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cctype>

#include "bctkit/errors.hpp"

namespace bctkit {
namespace gf2poly {

int degree(std::uint64_t p) {
  return p == 0 ? -1 : static_cast<int>(std::bit_width(p)) - 1;
}

std::uint64_t mod(std::uint64_t a, std::uint64_t m) {
  const int dm = degree(m);
  if (dm < 0) throw DomainError("polynomial division by zero");
  for (int da = degree(a); da >= dm; da = degree(a)) {
    a ^= m << (da - dm);
  }
  return a;
}

std::optional<std::uint64_t> find_factor(std::uint64_t p) {
  const int dp = degree(p);
  // Any reducible p has a factor of degree <= dp/2.
  const std::uint64_t limit = std::uint64_t{1} << (dp / 2 + 1);
  for (std::uint64_t d = 2; d < limit; ++d) {
    if (mod(p, d) == 0) return d;
  }
  return std::nullopt;
}

bool is_irreducible(std::uint64_t p) {
  return degree(p) >= 1 && !find_factor(p).has_value();
}

std::uint64_t smallest_irreducible(int n) {
  const std::uint64_t lo = std::uint64_t{1} << n;
  for (std::uint64_t p = lo; p < 2 * lo; ++p) {
    if (is_irreducible(p)) return p;
  }
  // Irreducible polynomials exist in every degree.
  throw DomainError("no irreducible polynomial found");
}

std::string to_string(std::uint64_t p) {
  if (p == 0) return "0";
  std::string out;
  for (int i = degree(p); i >= 0; --i) {
    if (((p >> i) & 1) == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += '1';
    } else if (i == 1) {
      out += 'x';
    } else {
      out += "x^" + std::to_string(i);
    }
  }
  return out;
}

std::string to_hex(std::uint64_t p) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), p, 16);
  return "0x" + std::string(buf, end);
}

namespace {

std::uint64_t parse_integer(std::string_view text, int base) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value, base);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw InvalidArgument("cannot parse polynomial '" + std::string(text) + "'");
  }
  return value;
}

std::uint64_t parse_terms(std::string_view text) {
  std::uint64_t p = 0;
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  std::string_view rest = compact;
  while (!rest.empty()) {
    const auto plus = rest.find('+');
    std::string_view term = rest.substr(0, plus);
    rest = plus == std::string_view::npos ? std::string_view{} : rest.substr(plus + 1);
    int exponent = 0;
    if (term == "1") {
      exponent = 0;
    } else if (term == "x") {
      exponent = 1;
    } else if (term.starts_with("x^")) {
      exponent = static_cast<int>(parse_integer(term.substr(2), 10));
    } else {
      throw InvalidArgument("cannot parse polynomial term '" + std::string(term) + "'");
    }
    if (exponent > 62) throw InvalidArgument("polynomial degree too large");
    p ^= std::uint64_t{1} << exponent;
  }
  return p;
}

}  // namespace

std::uint64_t parse(std::string_view text) {
  if (text.find('x') != std::string_view::npos && !text.starts_with("0x")) {
    return parse_terms(text);
  }
  if (text.starts_with("0x") || text.starts_with("0X")) return parse_integer(text.substr(2), 16);
  if (text.starts_with("0b") || text.starts_with("0B")) return parse_integer(text.substr(2), 2);
  return parse_integer(text, 10);
}

}  // namespace gf2poly

Field Field::make(int n, std::optional<std::uint64_t> modulus) {
  if (n < kMinDegree || n > kMaxDegree) {
    throw InvalidArgument("field degree " + std::to_string(n) + " outside [" +
                          std::to_string(kMinDegree) + ", " + std::to_string(kMaxDegree) + "]");
  }
  if (!modulus) return Field(n, static_cast<std::uint32_t>(gf2poly::smallest_irreducible(n)));

  const std::uint64_t p = *modulus;
  if (gf2poly::degree(p) != n) {
    throw InvalidArgument("modulus " + gf2poly::to_string(p) + " does not have degree " +
                          std::to_string(n));
  }
  if (auto factor = gf2poly::find_factor(p)) {
    throw InvalidArgument("modulus " + gf2poly::to_string(p) + " is reducible: divisible by " +
                          gf2poly::to_string(*factor));
  }
  return Field(n, static_cast<std::uint32_t>(p));
}

Elem Field::element(std::uint64_t value) const {
  if (value >= order()) {
    throw InvalidArgument("value " + std::to_string(value) + " is not an element of GF(2^" +
                          std::to_string(n_) + ")");
  }
  return Elem{static_cast<std::uint32_t>(value)};
}

std::uint32_t Field::mul_raw(std::uint32_t a, std::uint32_t b) const noexcept {
  const std::uint32_t top = order();
  std::uint32_t r = 0;
  while (b != 0) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a & top) a ^= modulus_;
  }
  return r;
}

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
  std::uint32_t result = 1;
  std::uint32_t base = a.value;
  while (e != 0) {
    if (e & 1) result = mul_raw(result, base);
    base = mul_raw(base, base);
    e >>= 1;
  }
  return Elem{result};
}

Elem Field::inv(Elem a) const {
  if (a.value == 0) throw DomainError("zero has no multiplicative inverse");
  return pow(a, order() - 2);
}

std::vector<Elem> Field::cube_roots_of_unity() const {
  if (n_ % 2 != 0) return {Elem{1}};
  // y^((q-1)/3) lands in the subgroup of order 3; any y outside the cubes
  // gives a primitive root.
  const std::uint64_t cofactor = (order() - 1) / 3;
  for (std::uint32_t y = 2; y < order(); ++y) {
    const Elem w = pow(Elem{y}, cofactor);
    if (w.value != 1) {
      std::vector<Elem> roots{Elem{1}, w, square(w)};
      std::sort(roots.begin(), roots.end());
      return roots;
    }
  }
  return {Elem{1}};
}

}  // namespace bctkit
