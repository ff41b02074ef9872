#pragma once

// Registry of the identities of the spin-extended so(d+1,1) construction and
// the suite runner. Every check expands to a list of LHS = RHS statements
// (one per free-index tuple); it passes iff every residual LHS - RHS is the
// zero element.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "spinalg/ast.hpp"
#include "spinalg/oracle.hpp"
#include "spinalg/weyl.hpp"

namespace spinalg {

inline constexpr const char* kVersion = "1.0.0";

enum class Tier {
  Core,
  // Intermediate formulas transcribed from derivations: a failure points at
  // the formula rather than the engine and is not fatal by default.
  Transcription,
};

std::string tier_name(Tier t);

struct Identity {
  std::string label;
  Ast lhs;
  Ast rhs;
};

struct Check {
  std::string id;
  std::string description;
  std::string paper_ref;
  std::string suite;  // core, sturm, schrodinger, appendix, d3
  Tier tier = Tier::Core;
  int min_d = 2;
  int max_d = 8;
  bool only_d3 = false;
  /// Residuals are compared after mapping Clifford words onto the quotient
  /// realized by the Pauli matrices (gamma_1 gamma_2 gamma_3 = i).
  bool rep_quotient = false;
  std::function<std::vector<Identity>(int d)> build;

  bool applies(int d) const { return only_d3 ? d == 3 : (d >= min_d && d <= max_d); }
};

/// All checks, sorted by id.
const std::vector<Check>& list_checks();
const Check* find_check(const std::string& id);
const std::vector<std::string>& suite_names();  // core sturm schrodinger appendix d3 all

struct RunOptions {
  bool oracle = false;
  CrosscheckOptions crosscheck;
};

struct OracleOutcome {
  bool agree = true;
  int identities = 0;
  std::string failing_label;
  std::optional<Witness> witness;
};

struct CheckResult {
  std::string id;
  std::string paper_ref;
  std::string description;
  int d = 0;
  Tier tier = Tier::Core;
  bool pass = false;
  int identities = 0;
  std::string failing_label;
  OperatorExpr residual{2};  // first failing residual; zero iff pass
  std::size_t term_count = 0;
  double elapsed_ms = 0;
  std::optional<OracleOutcome> oracle;
  std::string error;  // set if the check could not be evaluated

  /// Pass of the engine and, when run, the oracle.
  bool ok() const { return pass && (!oracle || oracle->agree); }
};

/// Throws invalid_argument for an unknown id and domain_error if d is not
/// applicable.
CheckResult run_check(const std::string& id, int d, const RunOptions& options = {});

struct Report {
  std::string suite;
  std::string version = kVersion;
  int d = 0;
  std::vector<CheckResult> checks;  // sorted by id
  int passed = 0;
  int failed = 0;

  /// True iff no Core-tier check failed (and, with strict, no check at all).
  bool success(bool strict) const;
};

/// Throws invalid_argument for an unknown suite. Checks run on up to `jobs`
/// threads; the report order does not depend on it.
Report run_suite(const std::string& suite, int d, const RunOptions& options = {}, int jobs = 1);

std::string report_json(const std::vector<Report>& reports, bool timing = true);
std::string report_markdown(const std::vector<Report>& reports, bool timing = true);
std::string report_text(const std::vector<Report>& reports, bool timing = true);

}  // namespace spinalg
