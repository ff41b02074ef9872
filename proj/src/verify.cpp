#include "spinalg/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "spinalg/clifford.hpp"
#include "spinalg/expr.hpp"

namespace spinalg {

std::string tier_name(Tier t) { return t == Tier::Core ? "core" : "transcription"; }

const Check* find_check(const std::string& id) {
  const auto& all = list_checks();
  auto it = std::lower_bound(all.begin(), all.end(), id, [](const Check& c, const std::string& v) { return c.id < v; });
  return it != all.end() && it->id == id ? &*it : nullptr;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"core", "sturm", "schrodinger", "appendix", "d3", "all"};
  return names;
}

namespace {

OperatorExpr residual_of(const Check& c, const Identity& id, int d) {
  OperatorExpr r = evaluate(id.lhs, d) - evaluate(id.rhs, d);
  if (c.rep_quotient && d % 2 == 1) r = pseudoscalar_quotient(r, pseudoscalar_value(gamma_matrices(d)));
  return r;
}

}  // namespace

CheckResult run_check(const std::string& id, int d, const RunOptions& options) {
  const Check* c = find_check(id);
  if (!c) throw std::invalid_argument("unknown check '" + id + "'");
  if (!c->applies(d)) throw std::domain_error("check " + id + " does not apply at d=" + std::to_string(d));

  CheckResult out;
  out.id = c->id;
  out.paper_ref = c->paper_ref;
  out.description = c->description;
  out.d = d;
  out.tier = c->tier;
  out.residual = OperatorExpr(d);

  const auto start = std::chrono::steady_clock::now();
  try {
    const std::vector<Identity> ids = c->build(d);
    out.identities = static_cast<int>(ids.size());
    out.pass = true;
    for (const auto& identity : ids) {
      OperatorExpr r = residual_of(*c, identity, d);
      if (!r.is_zero()) {
        out.pass = false;
        out.failing_label = identity.label.empty() ? "-" : identity.label;
        out.term_count = r.term_count();
        out.residual = std::move(r);
        break;
      }
    }
    if (options.oracle) {
      OracleOutcome oracle;
      for (const auto& identity : ids) {
        ++oracle.identities;
        CrosscheckResult cr = crosscheck(identity.lhs, identity.rhs, d, options.crosscheck);
        if (!cr.agree) {
          oracle.agree = false;
          oracle.failing_label = identity.label.empty() ? "-" : identity.label;
          oracle.witness = std::move(cr.witness);
          break;
        }
      }
      out.oracle = std::move(oracle);
    }
  } catch (const std::exception& e) {
    out.pass = false;
    out.error = e.what();
  }
  out.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

bool Report::success(bool strict) const {
  for (const auto& r : checks)
    if (!r.ok() && (strict || r.tier == Tier::Core)) return false;
  return true;
}

Report run_suite(const std::string& suite, int d, const RunOptions& options, int jobs) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    throw std::invalid_argument("unknown suite '" + suite + "'");
  std::vector<const Check*> selected;
  for (const auto& c : list_checks())
    if ((suite == "all" || c.suite == suite) && c.applies(d)) selected.push_back(&c);

  Report report;
  report.suite = suite;
  report.d = d;
  report.checks.resize(selected.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next++) < selected.size();) report.checks[k] = run_check(selected[k]->id, d, options);
  };
  const int n = std::clamp(jobs, 1, static_cast<int>(std::max<std::size_t>(selected.size(), 1)));
  {
    std::vector<std::jthread> pool;
    for (int t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
  }
  for (const auto& r : report.checks) (r.ok() ? report.passed : report.failed)++;
  return report;
}

// ---------------------------------------------------------------------------
// Reports

namespace {

std::string fmt_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", ms);
  return buf;
}

std::string residual_text(const CheckResult& r) {
  if (!r.error.empty()) return "error: " + r.error;
  return r.residual.str();
}

nlohmann::ordered_json check_json(const CheckResult& r, bool timing) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["paperRef"] = r.paper_ref;
  j["d"] = r.d;
  j["tier"] = tier_name(r.tier);
  j["pass"] = r.ok();
  j["identities"] = r.identities;
  j["residualTermCount"] = r.term_count;
  j["residualText"] = residual_text(r);
  if (!r.failing_label.empty()) j["failingIdentity"] = r.failing_label;
  if (r.oracle) {
    j["oracle"] = {{"agree", r.oracle->agree}, {"identities", r.oracle->identities}};
    if (r.oracle->witness) {
      const Witness& w = *r.oracle->witness;
      j["oracleWitness"] = {{"identity", r.oracle->failing_label},
                            {"trial", w.trial},
                            {"function", w.function.str()},
                            {"imageLhs", w.image_a.str()},
                            {"imageRhs", w.image_b.str()}};
    }
  }
  if (timing) j["elapsedMs"] = std::round(r.elapsed_ms * 10) / 10;
  return j;
}

nlohmann::ordered_json report_object(const Report& rep, bool timing) {
  nlohmann::ordered_json j;
  j["suite"] = rep.suite;
  j["version"] = rep.version;
  j["d"] = rep.d;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& r : rep.checks) j["checks"].push_back(check_json(r, timing));
  j["summary"] = {{"passed", rep.passed}, {"failed", rep.failed}};
  return j;
}

const char* status(const CheckResult& r) {
  if (r.ok()) return "PASS";
  return r.tier == Tier::Core ? "FAIL" : "MISMATCH";
}

}  // namespace

std::string report_json(const std::vector<Report>& reports, bool timing) {
  if (reports.size() == 1) return report_object(reports[0], timing).dump(2) + "\n";
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& rep : reports) arr.push_back(report_object(rep, timing));
  return arr.dump(2) + "\n";
}

std::string report_markdown(const std::vector<Report>& reports, bool timing) {
  std::ostringstream out;
  for (std::size_t n = 0; n < reports.size(); ++n) {
    const Report& rep = reports[n];
    if (n) out << "\n";
    out << "## suite " << rep.suite << ", d = " << rep.d << " (spinalg " << rep.version << ")\n\n";
    out << "| id | tier | status | identities | reference |" << (timing ? " ms |" : "") << "\n";
    out << "|---|---|---|---|---|" << (timing ? "---|" : "") << "\n";
    for (const auto& r : rep.checks) {
      out << "| " << r.id << " | " << tier_name(r.tier) << " | " << status(r) << " | " << r.identities << " | "
          << r.paper_ref << " |";
      if (timing) out << " " << fmt_ms(r.elapsed_ms) << " |";
      out << "\n";
    }
    out << "\n**" << rep.passed << " passed, " << rep.failed << " failed**\n";
    for (const auto& r : rep.checks) {
      if (r.ok()) continue;
      out << "\n### " << r.id << "\n\n";
      if (!r.pass) {
        out << "Residual at `" << r.failing_label << "` (" << r.term_count << " terms):\n\n```\n"
            << residual_text(r) << "\n```\n";
      }
      if (r.oracle && !r.oracle->agree && r.oracle->witness) {
        const Witness& w = *r.oracle->witness;
        out << "Oracle witness at `" << r.oracle->failing_label << "`, trial " << w.trial << ":\n\n```\nf   = "
            << w.function.str() << "\nlhs = " << w.image_a.str() << "\nrhs = " << w.image_b.str() << "\n```\n";
      }
    }
  }
  return out.str();
}

std::string report_text(const std::vector<Report>& reports, bool timing) {
  std::ostringstream out;
  for (const auto& rep : reports) {
    out << "suite " << rep.suite << "  d=" << rep.d << "  (spinalg " << rep.version << ")\n";
    for (const auto& r : rep.checks) {
      char line[160];
      std::snprintf(line, sizeof line, "  %-8s %-20s %5d identities", status(r), r.id.c_str(), r.identities);
      out << line;
      if (r.oracle) out << (r.oracle->agree ? "  oracle ok" : "  oracle DISAGREES");
      if (timing) out << "  " << fmt_ms(r.elapsed_ms) << " ms";
      out << "\n";
      if (!r.pass) out << "      residual [" << r.failing_label << "]: " << residual_text(r) << "\n";
      if (r.oracle && r.oracle->witness) {
        const Witness& w = *r.oracle->witness;
        out << "      oracle witness [" << r.oracle->failing_label << "] trial " << w.trial << ": f = "
            << w.function.str() << "\n        lhs -> " << w.image_a.str() << "\n        rhs -> " << w.image_b.str()
            << "\n";
      }
    }
    out << "  " << rep.passed << " passed, " << rep.failed << " failed\n";
  }
  return out.str();
}

}  // namespace spinalg
