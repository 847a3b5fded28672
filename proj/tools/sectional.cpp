// sectional: invariant tables, condition checks and verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 input error,
// 3 equivalence audit, 4 internal invariant breach.

#include "sectional/catalog.hpp"
#include "sectional/conjecture.hpp"
#include "sectional/errors.hpp"
#include "sectional/genus.hpp"
#include "sectional/io.hpp"
#include "sectional/render.hpp"
#include "sectional/scroll.hpp"
#include "sectional/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

using namespace sectional;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kInputError = 2, kAudit = 3, kBreach = 4 };

std::vector<PolarizedVarietyData> load_source(const std::string& source) {
  const std::string prefix = "catalog:";
  if (source.rfind(prefix, 0) == 0) return {catalog_instance(source.substr(prefix.size()))};
  std::vector<PolarizedVarietyData> out;
  for (auto& loaded : load_instances(source)) out.push_back(std::move(loaded.data));
  return out;
}

int cmd_invariants(const std::string& source, bool json) {
  for (const auto& d : load_source(source)) {
    InvariantTable t = invariant_table(d);
    if (json) {
      Json j;
      j["instance"] = to_json(d);
      j["invariants"] = to_json(t);
      std::cout << j.dump() << "\n";
    } else {
      std::cout << render_invariants(d, t);
    }
  }
  return kOk;
}

int cmd_check(const std::string& source, int i, bool json) {
  int code = kOk;
  for (const auto& d : load_source(source)) {
    ConditionReport r = verify_equivalence(d, i);
    if (json) {
      Json j = to_json(r);
      j["name"] = d.name;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << render_report(d, r);
    }
    if (r.verdict == Verdict::Violated) code = kAudit;
  }
  return code;
}

int cmd_verify(const std::string& suite, long trials, std::optional<std::uint64_t> seed) {
  VerifyOptions options;
  options.trials = trials;
  if (seed) {
    options.seed = *seed;
  } else if (const char* env = std::getenv("SECTIONAL_INVARIANTS_SEED")) {
    try {
      options.seed = std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, std::string("SECTIONAL_INVARIANTS_SEED is not a number: ") + env);
    }
  }
  std::cout << "seed " << options.seed << ", trials " << options.trials << "\n";
  bool ok = true;
  for (const auto& r : run_suite(suite, options)) {
    std::cout << (r.ok() ? "pass " : "FAIL ") << r.name << ": " << r.checks << " checks, " << r.failures
              << " failures";
    if (r.skipped) std::cout << ", " << r.skipped << " skipped";
    std::cout << "\n";
    if (!r.ok()) {
      for (const auto& m : r.messages) std::cout << "  " << m << "\n";
    }
    ok = ok && r.ok();
  }
  return ok ? kOk : kVerifyFailed;
}

int cmd_segre(int dim, std::optional<int> rank, const std::string& table) {
  if (dim < 1 || dim > kMaxBaseDim) {
    throw Error(ErrorCode::InvalidArgument,
                "unsupported dimension " + std::to_string(dim) + " (base dimension must be 1..3)");
  }
  std::cout << render_segre_symbolic(dim);
  if (table.empty()) {
    if (rank) std::cout << "scroll dim n = " << dim + *rank - 1 << "\n";
    return kOk;
  }
  ChernData cd = load_chern_data(table);
  if (cd.base_dim != dim) {
    throw Error(ErrorCode::WrongBaseDim, table + ": table has base dimension " + std::to_string(cd.base_dim));
  }
  if (rank && *rank != cd.rank) {
    throw Error(ErrorCode::InvalidArgument, table + ": table has rank " + std::to_string(cd.rank));
  }
  std::cout << render_segre_numeric(cd);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sectional geometric genera and Delta-genera of polarized varieties"};
  app.require_subcommand(1);

  std::string source;
  bool json = false;
  auto* invariants = app.add_subcommand("invariants", "Print chi_j, g_i and Delta_i");
  invariants->add_option("source", source, "instance file or catalog:<id>")->required();
  invariants->add_flag("--json", json, "machine-readable output");

  int index = 0;
  auto* check = app.add_subcommand("check", "Evaluate C(i,1)..C(i,5)");
  check->add_option("source", source, "instance file or catalog:<id>")->required();
  check->add_option("--i", index, "condition index, 1 <= i <= n")->required();
  check->add_flag("--json", json, "machine-readable output");

  std::string suite = "all";
  long trials = 1000;
  std::optional<std::uint64_t> seed;
  auto* verify = app.add_subcommand("verify", "Run property suites");
  verify->add_option("--suite", suite, "suite name")->check(CLI::IsMember(suite_names()));
  verify->add_option("--trials", trials, "random instances per suite")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "RNG seed (default: SECTIONAL_INVARIANTS_SEED or built-in)");

  int dim = 0;
  std::optional<int> rank;
  std::string table;
  auto* segre = app.add_subcommand("segre", "Segre classes s_1..s_m");
  segre->add_option("--dim", dim, "base dimension m")->required();
  segre->add_option("--rank", rank, "bundle rank r");
  segre->add_option("--table", table, "Chern intersection table (JSON)");

  auto* catalog_cmd = app.add_subcommand("catalog", "Catalog of constructible instances");
  catalog_cmd->require_subcommand(1);
  auto* list = catalog_cmd->add_subcommand("list", "List ids, descriptions, n and L^n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (invariants->parsed()) return cmd_invariants(source, json);
    if (check->parsed()) return cmd_check(source, index, json);
    if (verify->parsed()) return cmd_verify(suite, trials, seed);
    if (segre->parsed()) return cmd_segre(dim, rank, table);
    if (list->parsed()) {
      std::cout << render_catalog();
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::logic_error& e) {
    std::cerr << "internal invariant breach: " << e.what() << "\n";
    return kBreach;
  }
  return kOk;
}
