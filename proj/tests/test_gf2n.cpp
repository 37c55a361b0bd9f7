#include <doctest.h>

#include <numeric>
#include <random>

#include "bctkit/errors.hpp"
#include "bctkit/gf2n.hpp"
#include "oracle.hpp"

using namespace bctkit;

TEST_CASE("default modulus is the smallest irreducible polynomial") {
  CHECK(Field::make(2).modulus() == 0b111);
  CHECK(Field::make(3).modulus() == 0b1011);
  CHECK(Field::make(3).modulus_polynomial() == "x^3+x+1");

  // Enumerate degree-n polynomials in order and stop at the first one the
  // product oracle calls irreducible.
  for (int n = 2; n <= 8; ++n) {
    std::uint64_t expected = 0;
    for (std::uint64_t p = std::uint64_t{1} << n;; ++p) {
      if (oracle::irreducible_by_products(p)) {
        expected = p;
        break;
      }
    }
    CHECK_MESSAGE(Field::make(n).modulus() == expected, "n = " << n);
  }
}

TEST_CASE("irreducibility test agrees with the product oracle") {
  for (std::uint64_t p = 4; p < 512; ++p) {
    CHECK_MESSAGE(gf2poly::is_irreducible(p) == oracle::irreducible_by_products(p), "p = " << p);
  }
}

TEST_CASE("reducible or wrong-degree modulus is rejected") {
  CHECK_THROWS_AS(Field::make(4, 0b10010), InvalidArgument);  // x^4 + x
  try {
    Field::make(4, 0b10010);
  } catch (const InvalidArgument& e) {
    CHECK(std::string(e.what()).find("divisible by x") != std::string::npos);
  }
  CHECK_THROWS_AS(Field::make(4, 0b1011), InvalidArgument);
  CHECK_THROWS_AS(Field::make(1), InvalidArgument);
  CHECK_THROWS_AS(Field::make(21), InvalidArgument);
  CHECK_NOTHROW(Field::make(6, 0b1100111));  // x^6+x^5+x^2+x+1
  CHECK(Field::make(20).degree() == 20);
}

TEST_CASE("polynomial text forms") {
  CHECK(gf2poly::parse("x^3+x+1") == 0b1011);
  CHECK(gf2poly::parse("0x13") == 0x13);
  CHECK(gf2poly::parse("0b1011") == 0b1011);
  CHECK(gf2poly::parse("19") == 19);
  CHECK(gf2poly::parse(" x^4 + x + 1 ") == 0x13);
  CHECK(gf2poly::to_hex(0x11b) == "0x11b");
  CHECK(gf2poly::to_string(0x11b) == "x^8+x^4+x^3+x+1");
  CHECK_THROWS_AS(gf2poly::parse("x^3+y"), InvalidArgument);
  CHECK_THROWS_AS(gf2poly::parse("0xzz"), InvalidArgument);
}

TEST_CASE("addition is XOR") {
  const Field f = Field::make(3);
  CHECK(f.add(Elem{0b011}, Elem{0b101}) == Elem{0b110});
  for (std::uint32_t a = 0; a < 8; ++a) {
    CHECK(f.add(Elem{a}, Elem{a}) == Elem{0});
    CHECK(f.add(Elem{a}, Elem{0}) == Elem{a});
  }
}

TEST_CASE("multiplication matches long-division oracle") {
  const Field f3 = Field::make(3);
  CHECK(f3.mul(Elem{0b100}, Elem{0b100}) == Elem{0b110});
  CHECK(oracle::mul(0b100, 0b100, 0b1011) == 0b110);

  for (int n : {2, 5, 8, 11, 16, 20}) {
    const Field f = Field::make(n);
    std::mt19937 rng(n);
    std::uniform_int_distribution<std::uint32_t> dist(0, f.mask());
    for (int i = 0; i < 500; ++i) {
      const std::uint32_t a = dist(rng);
      const std::uint32_t b = dist(rng);
      REQUIRE(f.mul(Elem{a}, Elem{b}).value == oracle::mul(a, b, f.modulus()));
    }
    CHECK(f.mul(Elem{123 & f.mask()}, Elem{1}) == Elem{123 & f.mask()});
    CHECK(f.mul(Elem{123 & f.mask()}, Elem{0}) == Elem{0});
  }
}

TEST_CASE("field axioms on random triples") {
  for (int n : {4, 7, 13, 20}) {
    const Field f = Field::make(n);
    std::mt19937 rng(100 + n);
    std::uniform_int_distribution<std::uint32_t> dist(0, f.mask());
    for (int i = 0; i < 300; ++i) {
      const Elem a{dist(rng)}, b{dist(rng)}, c{dist(rng)};
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      CHECK(f.mul(a, b) == f.mul(b, a));
      CHECK(f.add(a, b) == f.add(b, a));
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.contains(f.mul(a, b)));
      // Squaring is additive and multiplicative.
      CHECK(f.square(f.add(a, b)) == f.add(f.square(a), f.square(b)));
      CHECK(f.square(f.mul(a, b)) == f.mul(f.square(a), f.square(b)));
    }
  }
}

TEST_CASE("powers and inverses") {
  for (int n = 2; n <= 20; ++n) {
    const Field f = Field::make(n);
    std::mt19937 rng(7 * n);
    std::uniform_int_distribution<std::uint32_t> dist(1, f.mask());
    for (int i = 0; i < 50; ++i) {
      const Elem a{dist(rng)};
      REQUIRE(f.pow(a, f.order() - 1) == Elem{1});
      REQUIRE(f.pow(a, 1) == a);
      REQUIRE(f.mul(a, f.inv(a)) == Elem{1});
    }
    CHECK(f.pow(Elem{0}, 5) == Elem{0});
    CHECK(f.pow(Elem{0}, 0) == Elem{1});
    CHECK(f.inv(Elem{1}) == Elem{1});
    CHECK_THROWS_AS(f.inv(Elem{0}), DomainError);
  }
  const Field f8 = Field::make(8);
  for (std::uint32_t a = 0; a < 256; a += 17) {
    CHECK(f8.pow(Elem{a}, 13).value == oracle::pow(a, 13, f8.modulus()));
  }
}

TEST_CASE("inverse in GF(4) swaps the two primitive elements") {
  const Field f = Field::make(2);
  CHECK(f.inv(Elem{2}) == f.square(Elem{2}));
  CHECK(f.inv(Elem{3}) == f.square(Elem{3}));
  CHECK(f.inv(Elem{2}) == Elem{3});
}

TEST_CASE("cube roots of unity") {
  CHECK(Field::make(2).cube_roots_of_unity() == std::vector<Elem>{Elem{1}, Elem{2}, Elem{3}});
  CHECK(Field::make(3).cube_roots_of_unity() == std::vector<Elem>{Elem{1}});

  for (int n = 2; n <= 12; ++n) {
    const Field f = Field::make(n);
    std::vector<Elem> scan;
    for (std::uint32_t x = 1; x < f.order(); ++x) {
      if (oracle::pow(x, 3, f.modulus()) == 1) scan.push_back(Elem{x});
    }
    CHECK(f.cube_roots_of_unity() == scan);
    CHECK(scan.size() == (n % 2 == 0 ? 3u : 1u));
  }
}

TEST_CASE("gcd(2^m - 1, 2^2m - 1) = 2^m - 1") {
  for (std::uint64_t m = 1; m <= 10; ++m) {
    const std::uint64_t small = (std::uint64_t{1} << m) - 1;
    CHECK(std::gcd(small, (std::uint64_t{1} << (2 * m)) - 1) == small);
  }
}

TEST_CASE("element construction is range checked") {
  const Field f = Field::make(4);
  CHECK(f.element(15) == Elem{15});
  CHECK_THROWS_AS(f.element(16), InvalidArgument);
}
