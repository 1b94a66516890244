#pragma once

// Verification suites behind `heunpot verify`. Each suite exercises one
// invariant of the library and reports PASS, FAIL or ERRATUM (a printed
// formula that disagrees with the direct construction) with the largest
// error it measured.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "heunpot/app/report.hpp"
#include "heunpot/potential_builder.hpp"

namespace heunpot::app {

enum class SuiteStatus { Pass, Fail, Erratum };

std::string to_string(SuiteStatus s);

struct SuiteResult {
  std::string name;
  SuiteStatus status = SuiteStatus::Pass;
  double max_error = 0.0;
  double tolerance = 0.0;
  json details = json::object();
};

struct VerifyOptions {
  std::uint64_t seed = 20240917;
  std::optional<double> tol;  // replaces every suite's own tolerance
  bool corrupt_table = false;
  RawHeunParams base{2.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0};
};

using Rng = std::mt19937_64;

/// Fuchsian-valid parameters with |a| in [a_min, a_max], complex entries and
/// Re(gamma) in [0.5, 2.5]; epsilon is solved from the relation.
HeunParams random_heun(Rng& rng, double a_min = 1.5, double a_max = 5.0);

/// Real-coefficient Mobius map with |det| >= 0.5.
Mobius random_mobius(Rng& rng);

/// Ansatz with |alpha1| in [0.3, 2] (either sign), plus amplitude c1.
family::General random_general(Rng& rng);

/// A family with a probe window where z' stays away from zero.
struct ProbeFamily {
  TransformFamily family;
  double lo;
  double hi;
};

std::vector<ProbeFamily> schwarzian_probe_families();

/// One member of every family with a window inside the series disc for a = 2.
std::vector<ProbeFamily> pipeline_families();

/// `count` evenly spaced probes in [lo, hi] with |z'| above the collar.
std::vector<double> probe_points(const TransformFamily& fam, double lo, double hi, std::size_t count);

SuiteResult suite_fuchsian_gate(Rng& rng, double tol);
SuiteResult suite_schwarzian_dual_path(double tol);
SuiteResult suite_ansatz_residual(Rng& rng, double tol);
SuiteResult suite_invariant_triple_path(Rng& rng, double tol);
SuiteResult suite_series_vs_oracle(Rng& rng, double tol);
SuiteResult suite_mobius_invariance(Rng& rng, double tol);
SuiteResult suite_pipeline_residual(const HeunParams& base, double tol);
SuiteResult suite_expansion_cross_check(const HeunParams& base, double tol, bool corrupt_table);
SuiteResult suite_forced_zeros(Rng& rng, double tol);

std::vector<SuiteResult> run_suites(const VerifyOptions& opts);

/// {"meta": {...}, "suites": [{"name", "status", "max_error", "details"}]}
json verify_report(const VerifyOptions& opts, const std::vector<SuiteResult>& suites);

}  // namespace heunpot::app
