#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include "bctkit/errors.hpp"
#include "bctkit/vecfun.hpp"
#include "oracle.hpp"

using namespace bctkit;

TEST_CASE("power map evaluation") {
  const Function f = Function::power_map(Field::make(6), 7);
  CHECK(f.eval(Elem{0}) == Elem{0});
  CHECK(f.eval(Elem{1}) == Elem{1});

  // x is a generator of GF(8)^* under x^3+x+1; x^6 in the table is x^6.
  const Field f8 = Field::make(3);
  const Function sixth = Function::power_map(f8, 6);
  CHECK(sixth.eval(Elem{2}) == f8.pow(Elem{2}, 6));
  CHECK(sixth.eval(Elem{2}).value == oracle::pow(2, 6, 0b1011));
}

TEST_CASE("exponents are reduced modulo 2^n - 1") {
  const Field field = Field::make(4);
  CHECK(*Function::power_map(field, 18).exponent() == 3);
  CHECK(Function::power_map(field, 15).is_degenerate());
  CHECK(Function::power_map(field, 0).is_degenerate());
  CHECK_FALSE(Function::power_map(field, 3).is_degenerate());
  const Function x18 = Function::power_map(field, 18);
  const Function x3 = Function::power_map(field, 3);
  CHECK(std::ranges::equal(x18.values(), x3.values()));
}

TEST_CASE("to_lut agrees with direct evaluation") {
  const Field f4 = Field::make(2);
  CHECK(std::ranges::equal(Function::power_map(f4, 1).to_lut().values(),
                           std::vector<std::uint32_t>{0, 1, 2, 3}));
  CHECK(std::ranges::equal(Function::power_map(f4, 0).to_lut().values(),
                           std::vector<std::uint32_t>{1, 1, 1, 1}));
  // 3 reduces to 0 mod 3, so x^3 is stored as the degenerate constant map.
  CHECK(Function::power_map(f4, 3).is_degenerate());
  CHECK(std::ranges::equal(Function::power_map(f4, 3).to_lut().values(),
                           std::vector<std::uint32_t>{1, 1, 1, 1}));

  for (int n = 2; n <= 8; ++n) {
    const Field field = Field::make(n);
    for (std::uint64_t d = 0; d < field.order() - 1; d += 3) {
      const Function f = Function::power_map(field, d);
      const Function lut = f.to_lut();
      CHECK_FALSE(lut.is_power_map());
      auto expected = oracle::power_table(n, field.modulus(), d);
      if (d == 0) expected.assign(expected.size(), 1);
      REQUIRE(std::ranges::equal(lut.values(), expected));
    }
  }
}

TEST_CASE("permutation test: gcd rule agrees with bijectivity") {
  CHECK_FALSE(Function::power_map(Field::make(6), 7).is_permutation());
  CHECK_FALSE(Function::power_map(Field::make(8), 15).is_permutation());
  CHECK(Function::power_map(Field::make(5), 3).is_permutation());

  for (int n = 2; n <= 10; ++n) {
    const Field field = Field::make(n);
    for (std::uint64_t d = 0; d < field.order() - 1; ++d) {
      const Function f = Function::power_map(field, d);
      REQUIRE_MESSAGE(f.is_permutation() == f.to_lut().is_permutation(),
                      "n=" << n << " d=" << d);
    }
  }
}

TEST_CASE("power maps commute with Frobenius") {
  for (int n = 2; n <= 10; ++n) {
    const Field field = Field::make(n);
    for (std::uint64_t d : {3u, 5u, 7u, 11u, 45u}) {
      const Function f = Function::power_map(field, d);
      for (std::uint32_t x = 0; x < field.order(); ++x) {
        const std::uint32_t fx = f(x);
        REQUIRE(f(field.mul_raw(x, x)) == field.mul_raw(fx, fx));
      }
    }
  }
}

TEST_CASE("LUT validation and parsing") {
  const Field field = Field::make(2);
  CHECK_THROWS_AS(Function::from_lut(field, {0, 1, 2}), InvalidArgument);
  CHECK_THROWS_AS(Function::from_lut(field, {0, 1, 2, 4}), InvalidArgument);

  std::istringstream good("# comment\n0\n0x3\n\n2 \n1\n");
  const Function f = read_lut(good, field);
  CHECK(std::ranges::equal(f.values(), std::vector<std::uint32_t>{0, 3, 2, 1}));
  CHECK(f.label() == "lut");
  CHECK(f.is_permutation());
  CHECK(f.eval(Elem{1}) == Elem{3});

  std::istringstream bad("0\n1\nfoo\n3\n");
  CHECK_THROWS_AS(read_lut(bad, field), InvalidArgument);
  std::istringstream short_input("0\n1\n");
  CHECK_THROWS_AS(read_lut(short_input, field), InvalidArgument);
  std::istringstream out_of_range("0\n1\n2\n4\n");
  CHECK_THROWS_AS(read_lut(out_of_range, field), InvalidArgument);

  const auto path = std::filesystem::temp_directory_path() / "bctkit_vecfun_lut.txt";
  {
    std::ofstream out(path);
    write_lut(out, Function::power_map(Field::make(4), 7));
  }
  const Function loaded = load_lut_file(path, Field::make(4));
  CHECK(std::ranges::equal(loaded.values(), Function::power_map(Field::make(4), 7).values()));
  std::filesystem::remove(path);
  CHECK_THROWS_AS(load_lut_file(path, field), InvalidArgument);
}
