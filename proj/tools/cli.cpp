#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "bctkit/boomtab.hpp"
#include "bctkit/difftab.hpp"
#include "bctkit/errors.hpp"
#include "bctkit/io.hpp"
#include "bctkit/claims.hpp"

namespace bctkit::cli {
namespace {

struct FunctionArgs {
  int n = 0;
  std::optional<std::uint64_t> d;
  std::string lut;
  std::string modulus;
};

void add_function_options(CLI::App& cmd, FunctionArgs& args) {
  cmd.add_option("-n", args.n, "field dimension n, GF(2^n)")->required();
  auto* d = cmd.add_option("-d", args.d, "power map exponent d (x^d)");
  auto* lut = cmd.add_option("--lut", args.lut, "lookup table file, one value per line");
  d->excludes(lut);
  cmd.add_option("--modulus", args.modulus, "irreducible modulus (hex bitmask or x^n+...+1)");
}

Field make_field(int n, const std::string& modulus) {
  if (modulus.empty()) return Field::make(n);
  return Field::make(n, gf2poly::parse(modulus));
}

Function make_function(const FunctionArgs& args) {
  const Field field = make_field(args.n, args.modulus);
  if (args.d) return Function::power_map(field, *args.d);
  if (!args.lut.empty()) return load_lut_file(args.lut, field);
  throw InvalidArgument("one of -d or --lut is required");
}

// Writes to the --out file when given, stdout otherwise.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text)) throw std::ios_base::failure("cannot write " + path);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"DDT / BCT toolkit for functions over GF(2^n)", "bctkit"};
  app.require_subcommand(1);

  unsigned threads = 0;
  app.add_option("--threads", threads, "worker threads (0 = available parallelism)")
      ->envname("BCTKIT_THREADS")
      ->check(CLI::NonNegativeNumber);

  FunctionArgs analyze_args;
  std::string analyze_format = "json";
  auto* analyze_cmd = app.add_subcommand("analyze", "permutation/APN flags, Delta, B, witnesses");
  add_function_options(*analyze_cmd, analyze_args);
  analyze_cmd->add_option("--format", analyze_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  FunctionArgs table_args;
  std::string table_kind;
  std::string table_format = "json";
  std::string table_out;
  auto* table_cmd = app.add_subcommand("table", "dump a DDT or BCT");
  table_cmd->add_option("kind", table_kind, "ddt or bct")
      ->required()
      ->check(CLI::IsMember({"ddt", "bct"}));
  add_function_options(*table_cmd, table_args);
  table_cmd->add_option("--format", table_format, "csv (full table) or json (row spectra)")
      ->check(CLI::IsMember({"csv", "json"}));
  table_cmd->add_option("--out", table_out, "output path (default stdout)");

  int max_m = 4;
  std::string verify_out;
  auto* verify_cmd = app.add_subcommand("verify", "check every claim for m up to --max-m");
  verify_cmd->add_option("--max-m", max_m, "largest m, n = 2m")->check(CLI::Range(2, 8));
  verify_cmd->add_option("--out", verify_out, "manifest path (default stdout)");

  int search_n = 0;
  std::string search_modulus;
  std::string search_out;
  auto* search_cmd = app.add_subcommand("search", "power maps x^d with B < Delta");
  search_cmd->add_option("-n", search_n, "field dimension n")->required();
  search_cmd->add_option("--modulus", search_modulus, "irreducible modulus");
  search_cmd->add_option("--out", search_out, "output path (default stdout)");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend() - 1);
    app.parse(std::move(rev));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return kUsage;
  }

  try {
    if (analyze_cmd->parsed()) {
      const Function f = make_function(analyze_args);
      if (f.is_degenerate()) {
        err << "warning: exponent reduces to 0 mod 2^n - 1; analyzing the constant map x -> 1\n";
      }
      TableOptions options;
      options.threads = threads;
      options.storage = Storage::row_spectra;
      const AnalysisReport report = analyze(f, options);
      out << (analyze_format == "json" ? report_to_json(report) + "\n" : report_to_text(report));
      return kOk;
    }

    if (table_cmd->parsed()) {
      const Function f = make_function(table_args);
      const TableKind kind = parse_table_kind(table_kind);
      TableOptions options;
      options.threads = threads;
      if (table_format == "csv") {
        if (f.field().degree() > kFullTableMaxDegree) {
          throw BudgetExceeded("CSV needs the full " + std::to_string(f.order()) + "x" +
                                   std::to_string(f.order()) +
                                   " table, over the n <= " + std::to_string(kFullTableMaxDegree) +
                                   " threshold; --format json writes row spectra instead",
                               static_cast<double>(f.order()) * f.order());
        }
        options.storage = Storage::full;
      }
      const UniformityTable t = kind == TableKind::ddt ? ddt(f, options) : bct(f, options);
      std::ostringstream text;
      if (table_format == "csv") {
        write_table_csv(text, t, f);
      } else {
        write_table_json(text, t, f);
      }
      emit(table_out, text.str(), out);
      return kOk;
    }

    if (verify_cmd->parsed()) {
      const auto outcomes = verify_all(max_m, threads);
      emit(verify_out, manifest_to_json(outcomes) + "\n", out);
      int failures = 0;
      for (const auto& o : outcomes) {
        if (!o.pass) {
          err << "FAILED " << o.claim_id << " (n=" << o.n << ", m=" << o.m << ")\n";
          ++failures;
        }
      }
      return failures == 0 ? kOk : kClaimFailed;
    }

    if (search_cmd->parsed()) {
      const Field field = make_field(search_n, search_modulus);
      SearchOptions options;
      options.threads = threads;
      const auto start = std::chrono::steady_clock::now();
      const auto reports = search_b_lt_delta(field, options);
      emit(search_out, search_to_json(field, reports) + "\n", out);
      err << reports.size() << " exponent classes with B < Delta in "
          << std::chrono::duration_cast<std::chrono::milliseconds>(
                 std::chrono::steady_clock::now() - start)
                 .count()
          << " ms\n";
      return kOk;
    }
  } catch (const BudgetExceeded& e) {
    err << "refused: " << e.what() << " (estimated " << e.estimated_operations()
        << " operations)\n";
    return kBudget;
  } catch (const std::ios_base::failure& e) {
    err << "I/O error: " << e.what() << '\n';
    return kIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace bctkit::cli
