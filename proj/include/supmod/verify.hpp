#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "supmod/moduli.hpp"
#include "supmod/normed_space.hpp"
#include "supmod/sample_config.hpp"

namespace supmod {

enum class CheckStatus { Pass, Fail, Degenerate };

std::string_view to_string(CheckStatus status);

/// How an entry's tolerance is chosen.
enum class TolerancePolicy {
  Slack,    // config.slack per side whose sampling bias can fake a violation
  FeasTol,  // config.feas_tol
  Fixed,    // InequalityCheck::fixed_tolerance
};

struct InequalityCheck {
  std::string check_id;
  std::string description;
  double domain_lo = 0.0;
  double domain_hi = 1.0;
  // true when the sampling bias of that side points toward a violation
  bool lhs_adverse = false;
  bool rhs_adverse = false;
  TolerancePolicy policy = TolerancePolicy::Slack;
  double fixed_tolerance = 0.0;
  // false for checks evaluated once per space rather than per grid point
  bool per_grid = true;
};

/// The registry in evaluation order. Ids are unique.
const std::vector<InequalityCheck>& inequality_registry();

using Witness = std::vector<std::pair<std::string, Vector>>;

struct ReportEntry {
  std::string check_id;
  std::string space_id;
  double param = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // rhs - lhs
  double tolerance = 0.0;
  CheckStatus status = CheckStatus::Pass;
  Witness witness;
};

struct ReportSummary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t degenerate = 0;
};

struct InequalityReport {
  std::string space_id;
  std::string config_fingerprint;
  std::vector<ReportEntry> entries;

  ReportSummary summary() const;
  /// Appends the entries of another report on the same space.
  void append(const InequalityReport& other);
};

/// Fills margin and status from lhs, rhs and tolerance; NaN sides give Degenerate.
ReportEntry make_entry(std::string check_id, std::string space_id, double param, double lhs,
                       double rhs, double tolerance, Witness witness = {});

/// Evaluates every registry check on the grid (a subset of [0, 1]).
InequalityReport run_checks(const NormedSpace& space, std::span<const double> r_grid,
                            const SampleConfig& config);

/// Exhaustive evaluation of one modulus on a uniform angular grid, independent
/// of the engine's partner search, refinement and root finding.
double brute_force_modulus(const NormedSpace& space2d, ModulusKind kind, double param,
                           std::size_t resolution);

/// Randomized checks of three planar inequalities (ids lem2.2, lem2.3,
/// lem2.4). Each one contributes its worst case as a Pass entry, or one Fail
/// entry with a witness per violation.
InequalityReport property_suite(const NormedSpace& space, std::size_t n_cases,
                                std::uint64_t seed);

struct ConjectureRow {
  double p = 0.0;
  double xi = 0.0;
  double lambda_minus_1 = 0.0;
  double s = 0.0;  // (1 - lambda_minus(1)) / 2
  double upper_bound = 0.0;
  double gap = 0.0;  // upper_bound - xi
};

/// For each p, compares xi of lp(p, 2) with its upper bound in terms of the
/// supporting moduli. Informational only.
std::vector<ConjectureRow> explore_conjecture(std::span<const double> p_values,
                                              const SampleConfig& config);

/// Centrally symmetric convex polygon with at least 4 vertices, deterministic in seed.
NormedSpace random_polygon(std::uint64_t seed, std::size_t directions = 6);

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace supmod
