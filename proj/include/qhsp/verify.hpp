#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qhsp {

//------------------------------------------------------------------------------
// Verification suites
//------------------------------------------------------------------------------
// Each suite runs a deterministic battery of checks (given config and seed)
// and reports one line per check. The acceptance criteria are spread over
// the suites; the acceptance binary aggregates them.

struct VerifyConfig {
  double tol = 1e-9;
  std::uint64_t seed = 12345;
  std::string arith = "float"; // echoed; exact checks always run exactly
};

struct CheckResult {
  std::string id;
  bool pass = false;
  double measured = 0;  // residual, dimension, or indicator value
  double bound = 0;     // the tolerance or expected value it is tested against
  std::string note;
};

struct Report {
  std::string suite;
  std::vector<CheckResult> checks;
  VerifyConfig config;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Suite names accepted by run_suite: qcore, stab, weights, metric,
/// cohomology, sp1, sp11, flex, weil, bending, hull, all.
const std::vector<std::string>& suite_names();

/// Dispatch; throws UnknownSuite. "all" concatenates every suite.
Report run_suite(const std::string& name, const VerifyConfig& cfg = {});

Report verify_qcore(const VerifyConfig& cfg = {});
Report verify_stab(const VerifyConfig& cfg = {});
Report verify_weights(const VerifyConfig& cfg = {});
Report verify_metric(const VerifyConfig& cfg = {});
Report verify_cohomology(const VerifyConfig& cfg = {});
Report verify_sp1(const VerifyConfig& cfg = {});
Report verify_sp11(const VerifyConfig& cfg = {});
Report verify_flex(const VerifyConfig& cfg = {});
Report verify_weil(const VerifyConfig& cfg = {});
Report verify_bending(const VerifyConfig& cfg = {});
Report verify_hull(const VerifyConfig& cfg = {});

} // namespace qhsp
