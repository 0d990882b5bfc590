#pragma once

#include <span>
#include <vector>

#include "supmod/normed_space.hpp"
#include "supmod/sample_config.hpp"
#include "supmod/vector.hpp"

namespace supmod {

/// Finite description of J1(x): the norm-one functionals p with <p, x> = ||x||.
/// The full set is the convex hull of `generators`.
struct SupportFunctionalSet {
  Vector anchor;
  std::vector<Vector> generators;
  // true when the extreme points of J1(anchor) are among the generators
  bool exact = true;
  // number of generators that are extreme points; for planar spaces these are
  // generators.front() and generators.back()
  std::size_t extreme_count = 1;
  // For plane sections only: norm-one functionals of the ambient space that
  // restrict to the corresponding generator.
  std::vector<Vector> lifted;
};

/// ||x||; throws on dimension mismatch or non-finite coordinates.
double eval_norm(const NormedSpace& space, std::span<const double> x);

SupportFunctionalSet support_functionals(const NormedSpace& space, std::span<const double> x,
                                         const SampleConfig& config);

/// min over |t| <= 2||x||/||y|| of ||x + t y|| (golden-section search).
double min_along_line(const NormedSpace& space, std::span<const double> x,
                      std::span<const double> y, double tol);

/// Birkhoff-James test: y is quasiorthogonal to x iff ||x + t y|| >= ||x|| for all t.
bool is_quasiorthogonal(const NormedSpace& space, std::span<const double> y,
                        std::span<const double> x, const SampleConfig& config);

/// Unit vector in the kernel of p built from w: (w - <p,w>/<p,x> x) / ||.||.
/// Requires p in J1(x) and w not parallel to x.
Vector make_quasiorthogonal(const NormedSpace& space, std::span<const double> x,
                            std::span<const double> p, std::span<const double> w,
                            double feas_tol = 1e-9);

/// Nearest point of the hyperplane ker p to x along y: x - <p,x> y.
/// Requires ||y|| = 1 and p in J1(y).
Vector metric_projection(const NormedSpace& space, std::span<const double> x,
                         std::span<const double> y, std::span<const double> p,
                         double feas_tol = 1e-9);

NormedSpace central_section(const NormedSpace& space, std::span<const double> u,
                            std::span<const double> v);

/// (cos t, sin t) scaled onto the unit circle of a planar norm.
Vector sphere_point(const NormedSpace& space2d, double theta);

/// Sorted polar angles in [0, 2pi): a uniform grid of `n` angles merged with
/// the known kink angles of the norm.
std::vector<double> sphere_sample_angles(const NormedSpace& space2d, std::size_t n);

namespace detail {

// Hot-path variants without precondition checks.
Vector quasiorthogonal_unchecked(const NormedSpace& space, std::span<const double> x,
                                 std::span<const double> p, std::span<const double> w);

}  // namespace detail

}  // namespace supmod
