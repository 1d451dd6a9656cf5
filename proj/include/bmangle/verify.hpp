#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bmangle/errors.hpp"

namespace bm {

// One registered functional-equation or identity check.
enum class EquationId {
  fund1,
  eq3_log,
  eq6_arc,
  add21_affine,
  family_scaling,
  addfin_sym,
  addfin3_w2zero,
  addfin3_moebius,
  exp_additivity,
  tringle_v4,
  pc_prop5,
  nabla_identity,
  quad_table_identities,
  roundtrip_cubic,
};

const char* equation_name(EquationId id);
EquationId equation_from_name(const std::string& name);  // throws UnknownEquation
std::vector<EquationId> all_equations();

struct CheckInfo {
  EquationId id;
  const char* name;
  double default_tol;
  bool gate_relative;  // residuals compared to tol after relative scaling
  const char* note;    // sampler domain / residual definition
};

const std::vector<CheckInfo>& check_registry();
const CheckInfo& check_info(EquationId id);

struct SampleFailure {
  std::uint64_t index = 0;
  std::vector<double> inputs;
  double residual = 0.0;
};

struct VerificationReport {
  EquationId equation = EquationId::fund1;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  double tolerance = 0.0;
  bool gate_relative = false;
  double max_abs_residual = 0.0;
  double max_rel_residual = 0.0;
  std::uint64_t rejections = 0;
  std::vector<SampleFailure> failures;
  double elapsed_seconds = 0.0;  // informational; not part of the serialized report

  bool pass() const { return failures.empty(); }
};

struct RunOptions {
  std::uint64_t seed = 0;
  std::uint64_t samples = 10000;
  std::optional<double> tolerance;  // overrides the per-equation default
  double range_lo = 0.1;            // log-uniform sampler magnitude range
  double range_hi = 10.0;
  unsigned workers = 0;  // 0 = hardware concurrency (capped)
};

// Scans `samples` deterministic samples of the equation's domain; sample i is
// drawn from a counter-based stream keyed by (seed, i), so the report is
// independent of worker count and execution order.
VerificationReport run_check(EquationId eq, const RunOptions& opts = {});

std::vector<VerificationReport> run_all(const RunOptions& opts = {});

bool all_pass(const std::vector<VerificationReport>& reports);

std::string summary_line(const VerificationReport& r);

}  // namespace bm
