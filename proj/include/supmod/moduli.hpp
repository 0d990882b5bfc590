#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "supmod/normed_space.hpp"
#include "supmod/sample_config.hpp"
#include "supmod/vector.hpp"

namespace supmod {

enum class ModulusKind { Delta, Rho, RhoBanas, LambdaMinus, LambdaPlus };

/// Which of the two supporting moduli (or of the two roots lambda(x, +-y, r)).
enum class Sign { Minus, Plus };

/// Direction of the sampling error of a curve: a sampled infimum can only
/// overshoot (UpperEstimate), a sampled supremum can only undershoot.
enum class EstimateBias { UpperEstimate, LowerEstimate };

std::string_view to_string(ModulusKind kind);
EstimateBias estimate_bias(ModulusKind kind);
std::optional<ModulusKind> parse_modulus_kind(std::string_view name);

struct ModulusCurve {
  ModulusKind kind = ModulusKind::Delta;
  std::vector<double> params;
  std::vector<double> values;
  std::string space_id;
  std::string config_fingerprint;
  EstimateBias bias = EstimateBias::UpperEstimate;

  /// Value at an exact grid parameter; throws std::out_of_range if absent.
  double at(double param) const;
};

/// Sampled supremum of the metric-projection Lipschitz constant, with the
/// triple that attains it.
struct XiEstimate {
  double value = 1.0;
  Vector witness_x;
  Vector witness_y;
  Vector witness_p;
  std::string space_id;
  std::string config_fingerprint;
};

/// Smallest root in [0, 1] of l -> ||(1 - l) x + r y|| - 1 for unit x, unit y
/// quasiorthogonal to x and r in [0, 1]. Plain bisection: the function is
/// convex, nonnegative at 0 and nonpositive at 1.
double lambda_root(const NormedSpace& space2d, std::span<const double> x,
                   std::span<const double> y, double r, const SampleConfig& config);

/// Local supporting modulus at a unit vector x (t = r), over every sampled
/// quasiorthogonal direction +-y.
double lambda_local(const NormedSpace& space2d, std::span<const double> x, double r, Sign sign,
                    const SampleConfig& config);

ModulusCurve lambda_curve(const NormedSpace& space, std::span<const double> r_grid, Sign sign,
                          const SampleConfig& config);
ModulusCurve delta_curve(const NormedSpace& space, std::span<const double> eps_grid,
                         const SampleConfig& config);
ModulusCurve rho_curve(const NormedSpace& space, std::span<const double> tau_grid,
                       const SampleConfig& config);
ModulusCurve rho_banas_curve(const NormedSpace& space, std::span<const double> eps_grid,
                             const SampleConfig& config);

/// Dispatches on kind; the grid domain is checked per kind.
ModulusCurve modulus_curve(const NormedSpace& space, ModulusKind kind,
                           std::span<const double> grid, const SampleConfig& config);

/// Modulus of smoothness at arbitrary tau >= 0 (the curve entry point only
/// accepts [0, 1]).
std::vector<double> rho_values(const NormedSpace& space, std::span<const double> taus,
                               const SampleConfig& config);

XiEstimate xi(const NormedSpace& space, const SampleConfig& config);

/// sup{eps in [0, 2] : delta(eps) <= tau} on a sampled Delta curve, by a
/// monotone scan and linear interpolation.
double delta_inverse(const ModulusCurve& curve, double tau);

enum class HilbertKind { Delta, Rho, LambdaEither, DeltaInverse };

/// Closed forms for Euclidean spaces.
double hilbert_reference(HilbertKind kind, double t);

/// The planes over which global moduli are computed: the space itself when
/// planar, otherwise the e1-e2 plane followed by seeded random planes.
std::vector<NormedSpace> planar_sections(const NormedSpace& space, const SampleConfig& config);

}  // namespace supmod
