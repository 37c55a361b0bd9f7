#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <set>
#include <sys/wait.h>
#include <sstream>

#include <json.hpp>

#include "bctkit/io.hpp"
#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "bctkit");
  std::ostringstream out, err;
  const int code = bctkit::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("analyze") {
  auto r = run({"analyze", "-n", "6", "-d", "7"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["delta"] == 6);
  CHECK(j["boomerang"] == 4);
  CHECK(j["permutation"] == false);
  CHECK(j["locally_apn"] == true);

  r = run({"analyze", "-n", "8", "-d", "15"});
  j = nlohmann::json::parse(r.out);
  CHECK(j["delta"] == 14);
  CHECK(j["boomerang"] == 2);

  r = run({"analyze", "-n", "4", "-d", "0"});
  CHECK(r.code == 0);
  CHECK(r.err.find("constant map") != std::string::npos);
  CHECK(nlohmann::json::parse(r.out)["degenerate"] == true);

  r = run({"analyze", "-n", "6", "-d", "7", "--format", "text"});
  CHECK(r.out.find("delta        6") != std::string::npos);

  r = run({"analyze", "-n", "6", "-d", "7", "--modulus", "x^6+x^5+x^2+x+1"});
  j = nlohmann::json::parse(r.out);
  CHECK(j["field"]["modulus"] == "0x67");
  CHECK(j["boomerang"] == 4);
}

TEST_CASE("analyze with a LUT file") {
  const auto path = std::filesystem::temp_directory_path() / "bctkit_cli_lut.txt";
  {
    std::ofstream out(path);
    for (int x = 0; x < 16; ++x) out << (x * 7 % 16) << '\n';
  }
  auto r = run({"analyze", "-n", "4", "--lut", path.string()});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["d"] == "lut");
  CHECK(j["locally_apn"] == "n/a");
  CHECK(j["permutation"] == true);
  std::filesystem::remove(path);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({"analyze", "-n", "6"}).code == 2);
  CHECK(run({"analyze", "-n", "1", "-d", "3"}).code == 2);
  CHECK(run({"analyze", "-n", "4", "-d", "3", "--modulus", "0x12"}).code == 2);
  CHECK(run({"analyze", "-n", "4", "-d", "3", "--lut", "x"}).code == 2);
  CHECK(run({"verify", "--max-m", "9"}).code == 2);
  CHECK(run({"verify", "--max-m", "1"}).code == 2);
  CHECK(run({"table", "lat", "-n", "4", "-d", "3"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("table dumps") {
  auto r = run({"table", "ddt", "-n", "4", "-d", "3", "--format", "csv"});
  REQUIRE(r.code == 0);
  std::istringstream csv(r.out);
  const auto loaded = bctkit::read_table_csv(csv);
  CHECK(loaded.table.order() == 16);
  for (std::uint32_t a = 0; a < 16; ++a) {
    std::uint64_t sum = 0;
    for (auto v : loaded.table.row(a)) sum += v;
    CHECK(sum == 16);
  }

  r = run({"table", "bct", "-n", "6", "-d", "7", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["kind"] == "BCT");
  bool has_four = false;
  for (const auto& [row, spectrum] : j["rows"].items()) {
    for (const auto& pair : spectrum) has_four = has_four || pair[0] == 4;
  }
  CHECK(has_four);

  r = run({"table", "bct", "-n", "12", "-d", "63", "--format", "csv"});
  CHECK(r.code == 3);
  CHECK(r.err.find("json") != std::string::npos);

  r = run({"table", "bct", "-n", "4", "-d", "3", "--out", "/nonexistent-dir/x.csv", "--format", "csv"});
  CHECK(r.code == 4);
}

TEST_CASE("csv round trip through the CLI keeps the uniformity") {
  const auto path = std::filesystem::temp_directory_path() / "bctkit_cli_bct.csv";
  REQUIRE(run({"table", "bct", "-n", "8", "-d", "45", "--format", "csv", "--out", path.string()}).code == 0);
  std::ifstream in(path);
  const auto loaded = bctkit::read_table_csv(in);
  CHECK(loaded.table.max_nontrivial() == 2);
  std::filesystem::remove(path);
}

TEST_CASE("--threads gives byte-identical files") {
  const auto dir = std::filesystem::temp_directory_path();
  for (const char* kind : {"ddt", "bct"}) {
    std::string first;
    for (const char* t : {"1", "3", "8"}) {
      const auto path = dir / (std::string("bctkit_threads_") + kind + t + ".csv");
      REQUIRE(run({"--threads", t, "table", kind, "-n", "8", "-d", "15", "--format", "csv", "--out",
                   path.string()})
                  .code == 0);
      const std::string text = slurp(path);
      if (first.empty()) first = text;
      CHECK(text == first);
      std::filesystem::remove(path);
    }
  }
  CHECK(run({"--threads", "1", "search", "-n", "8"}).out ==
        run({"--threads", "5", "search", "-n", "8"}).out);
}

TEST_CASE("verify") {
  auto r = run({"verify", "--max-m", "4"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["passed"] == true);

  r = run({"verify", "--max-m", "2"});
  CHECK(r.code == 0);
  j = nlohmann::json::parse(r.out);
  for (const auto& o : j["outcomes"]) CHECK(o["parameters"]["n"] == 4);
}

TEST_CASE("search") {
  auto r = run({"search", "-n", "8"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  std::set<int> ds;
  for (const auto& item : j["results"]) {
    ds.insert(item["d"].get<int>());
    if (item["d"] == 15 || item["d"] == 45) {
      CHECK(item["delta"] == 14);
      CHECK(item["boomerang"] == 2);
    }
  }
  CHECK(ds.contains(15));
  CHECK(ds.contains(45));

  r = run({"search", "-n", "4"});
  j = nlohmann::json::parse(r.out);
  for (const auto& item : j["results"]) CHECK(item["d"] != 3);

  CHECK(run({"search", "-n", "12"}).code == 3);
}

TEST_CASE("the installed binary honours the exit-code contract") {
  const std::string bin = BCTKIT_BINARY;
  CHECK(std::system((bin + " analyze -n 6 -d 7 > /dev/null").c_str()) == 0);
  CHECK(WEXITSTATUS(std::system((bin + " verify --max-m 9 > /dev/null 2>&1").c_str())) == 2);
  CHECK(WEXITSTATUS(std::system((bin + " search -n 11 > /dev/null 2>&1").c_str())) == 3);
  CHECK(WEXITSTATUS(std::system(("BCTKIT_THREADS=2 " + bin + " search -n 6 > /dev/null 2>&1").c_str())) == 0);
}
