#include "spinalg/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "spinalg/clifford.hpp"
#include "spinalg/expr.hpp"
#include "spinalg/oracle.hpp"
#include "spinalg/verify.hpp"

namespace spinalg {

namespace {

constexpr int kMinD = 2;
constexpr int kMaxSupportedD = 8;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw UsageError("invalid " + what + " '" + s + "'");
  return v;
}

// "3" or "2..5"
std::vector<int> parse_dims(const std::string& arg) {
  int lo = 0, hi = 0;
  if (auto dots = arg.find(".."); dots != std::string::npos) {
    lo = parse_int(arg.substr(0, dots), "dimension");
    hi = parse_int(arg.substr(dots + 2), "dimension");
  } else {
    lo = hi = parse_int(arg, "dimension");
  }
  if (lo > hi) throw UsageError("empty dimension range '" + arg + "'");
  if (lo < kMinD || hi > kMaxSupportedD)
    throw UsageError("dimension out of supported range " + std::to_string(kMinD) + ".." +
                     std::to_string(kMaxSupportedD) + ": '" + arg + "'");
  std::vector<int> out;
  for (int d = lo; d <= hi; ++d) out.push_back(d);
  return out;
}

int single_dim(const std::string& arg) {
  auto dims = parse_dims(arg);
  if (dims.size() != 1) throw UsageError("this command takes a single dimension, got '" + arg + "'");
  return dims[0];
}

// alpha=1/2,E=-1
std::pair<std::optional<GaussianRational>, std::optional<GaussianRational>> parse_sub(const std::string& arg) {
  std::optional<GaussianRational> alpha, energy;
  std::stringstream ss(arg);
  for (std::string item; std::getline(ss, item, ',');) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("--sub expects name=value, got '" + item + "'");
    const std::string name = item.substr(0, eq);
    GaussianRational value;
    try {
      value = GaussianRational::parse(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw UsageError("invalid value in --sub '" + item + "'");
    }
    if (name == "alpha")
      alpha = value;
    else if (name == "E")
      energy = value;
    else
      throw UsageError("--sub accepts alpha and E, got '" + name + "'");
  }
  return {alpha, energy};
}

// Relative output paths live under $SPINALG_OUTPUT_DIR when it is set.
std::filesystem::path output_path(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative())
    if (const char* dir = std::getenv("SPINALG_OUTPUT_DIR"); dir && *dir) p = std::filesystem::path(dir) / p;
  return p;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  const auto p = output_path(path);
  std::ofstream f(p, std::ios::binary);
  if (!f) throw IoError("cannot open " + p.string() + " for writing");
  f << text;
  f.close();
  if (!f) throw IoError("failed writing " + p.string());
}

struct OracleFlags {
  int trials = 20;
  std::uint64_t seed = 0;
  int max_degree = 4;
  int min_k = -2;

  void add_to(CLI::App* app) {
    app->add_option("--seed", seed, "seed of the random test functions");
    app->add_option("--trials", trials, "number of test functions")->check(CLI::Range(1, 100000));
    app->add_option("--max-degree", max_degree, "maximal x-degree of test functions")->check(CLI::Range(0, 32));
    app->add_option("--min-k", min_k, "lowest power of r^2 in test functions")->check(CLI::Range(-16, 0));
  }
  CrosscheckOptions options() const { return {trials, seed, max_degree, min_k}; }
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of the spin-extended so(d+1,1) algebra", "spinalg"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  std::string dims = "3";
  std::string suite = "all";
  std::string format = "text";
  std::string output;
  bool strict = false, no_timing = false, with_oracle = false, adjoint_flag = false;
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::string sub;
  std::string reduce_expr, lhs_expr, rhs_expr;
  OracleFlags oflags;

  const std::vector<std::string> formats{"json", "markdown", "text"};

  auto* verify = app.add_subcommand("verify", "run a suite of identities");
  verify->add_option("--d", dims, "dimension N or range a..b (2..8)");
  verify->add_option("--suite", suite, "core, sturm, schrodinger, appendix, d3 or all")
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--format", format, "json, markdown or text")->check(CLI::IsMember(formats));
  verify->add_option("--output", output, "write the report to a file");
  verify->add_flag("--strict", strict, "also fail on transcription-tier mismatches");
  verify->add_flag("--no-timing", no_timing, "omit timing fields");
  verify->add_flag("--oracle", with_oracle, "cross-check every identity with the function-application oracle");
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 1024));
  oflags.add_to(verify);

  auto* reduce_cmd = app.add_subcommand("reduce", "print the normal form of an expression");
  reduce_cmd->add_option("--d", dims, "dimension");
  reduce_cmd->add_flag("--adjoint", adjoint_flag, "print the formal adjoint instead");
  reduce_cmd->add_option("--sub", sub, "substitute parameters, e.g. alpha=1,E=-1/2");
  reduce_cmd->add_option("expr", reduce_expr, "expression")->required();

  auto* matrices = app.add_subcommand("matrices", "dump gamma and spin matrices in fixture format");
  matrices->add_option("--d", dims, "dimension");
  matrices->add_option("--output", output, "write to a file");

  auto* oracle_cmd = app.add_subcommand("oracle", "compare two expressions on random test functions");
  oracle_cmd->add_option("--d", dims, "dimension");
  oflags.add_to(oracle_cmd);
  oracle_cmd->add_option("lhs", lhs_expr, "first expression")->required();
  oracle_cmd->add_option("rhs", rhs_expr, "second expression")->required();

  auto* list = app.add_subcommand("list", "list the registered checks");
  list->add_option("--suite", suite, "restrict to a suite")->check(CLI::IsMember(suite_names()));
  list->add_option("--format", format, "json or text")->check(CLI::IsMember(formats));

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*verify) {
      const auto ds = parse_dims(dims);
      RunOptions opts;
      opts.oracle = with_oracle;
      opts.crosscheck = oflags.options();
      std::vector<Report> reports;
      for (int d : ds) reports.push_back(run_suite(suite, d, opts, jobs));
      const bool timing = !no_timing;
      std::string text = format == "json"       ? report_json(reports, timing)
                         : format == "markdown" ? report_markdown(reports, timing)
                                                : report_text(reports, timing);
      emit(text, output, out);
      for (const auto& r : reports)
        if (!r.success(strict)) return kExitFailure;
      return kExitOk;
    }

    if (*reduce_cmd) {
      const int d = single_dim(dims);
      OperatorExpr value = reduce(reduce_expr, d);
      if (!sub.empty()) {
        auto [alpha, energy] = parse_sub(sub);
        value = substitute(value, alpha, energy);
      }
      if (adjoint_flag) value = adjoint(value);
      out << spinalg::format(value) << "\n";
      return kExitOk;
    }

    if (*matrices) {
      emit(fixture_text(single_dim(dims)), output, out);
      return kExitOk;
    }

    if (*oracle_cmd) {
      const int d = single_dim(dims);
      Ast a = parse(lhs_expr, d);
      Ast b = parse(rhs_expr, d);
      CrosscheckResult r = crosscheck(a, b, d, oflags.options());
      if (r.agree) {
        out << "confirmed: " << r.trials << " of " << r.trials << " test functions agree (d=" << d
            << ", seed=" << oflags.seed << ")\n";
        return kExitOk;
      }
      const Witness& w = *r.witness;
      out << "witness (trial " << w.trial << "):\n  f   = " << w.function.str() << "\n  lhs = " << w.image_a.str()
          << "\n  rhs = " << w.image_b.str() << "\n";
      return kExitFailure;
    }

    if (*list) {
      std::vector<const Check*> sel;
      for (const auto& c : list_checks())
        if (suite == "all" || c.suite == suite) sel.push_back(&c);
      if (format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const Check* c : sel) {
          nlohmann::ordered_json dims_json;
          if (c->only_d3)
            dims_json = {3};
          else
            dims_json = {{"min", c->min_d}, {"max", c->max_d}};
          arr.push_back({{"id", c->id},
                         {"suite", c->suite},
                         {"tier", tier_name(c->tier)},
                         {"dims", dims_json},
                         {"paperRef", c->paper_ref},
                         {"description", c->description}});
        }
        out << arr.dump(2) << "\n";
      } else {
        for (const Check* c : sel) {
          const std::string d_text = c->only_d3 ? "d=3" : "d=" + std::to_string(c->min_d) + ".." + std::to_string(c->max_d);
          out << c->id << "\t" << c->suite << "\t" << tier_name(c->tier) << "\t" << d_text << "\t" << c->paper_ref
              << "\n";
        }
      }
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace spinalg
