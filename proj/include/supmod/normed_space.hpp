#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "supmod/vector.hpp"

namespace supmod {

class NormedSpace;

using Point2 = std::array<double, 2>;

struct LpDescriptor {
  double p;
  std::size_t dim;
};

struct WeightedLpDescriptor {
  double p;
  std::vector<double> weights;
};

struct LinfDescriptor {
  std::size_t dim;
};

/// Centrally symmetric convex polygon, counterclockwise. `normals[i]` is the
/// facet functional of the edge vertices[i] -> vertices[i+1], scaled so that
/// the edge lies on {z : <normals[i], z> = 1}.
struct PolygonDescriptor {
  std::vector<Point2> vertices;
  std::vector<Point2> normals;
};

/// The plane span{u, v} of `base`, with coordinates (a, b) -> a*u + b*v.
struct SectionDescriptor {
  std::shared_ptr<const NormedSpace> base;
  Vector u;
  Vector v;
};

using NormDescriptor = std::variant<LpDescriptor, WeightedLpDescriptor, LinfDescriptor,
                                    PolygonDescriptor, SectionDescriptor>;

/// An immutable norm oracle on R^n: evaluation, dual norm and enough structure
/// for the duality mapping. Cheap to copy; safe to share across threads.
class NormedSpace {
 public:
  static NormedSpace lp(double p, std::size_t dim);
  static NormedSpace l1(std::size_t dim) { return lp(1.0, dim); }
  static NormedSpace l2(std::size_t dim) { return lp(2.0, dim); }
  static NormedSpace linf(std::size_t dim);
  static NormedSpace weighted_lp(double p, std::vector<double> weights);
  /// Vertices must be counterclockwise, strictly convex and centrally
  /// symmetric (vertex i + n/2 is the negation of vertex i).
  static NormedSpace polygon(std::vector<Point2> vertices);
  static NormedSpace section(const NormedSpace& base, Vector u, Vector v);

  std::size_t dim() const { return dim_; }
  const NormDescriptor& descriptor() const { return *desc_; }

  /// Canonical norm-spec string.
  std::string id() const;

  /// Unchecked evaluation; callers guarantee x.size() == dim().
  double norm(std::span<const double> x) const;

  double dual_norm(std::span<const double> p) const;

  /// Polar angles of points where the unit circle of a 2D norm is known to
  /// have a corner. Empty when no closed-form kink set is available.
  std::vector<double> kink_angles() const;

  bool is_polyhedral() const;

 private:
  NormedSpace(std::shared_ptr<const NormDescriptor> d, std::size_t dim)
      : desc_(std::move(d)), dim_(dim) {}

  std::shared_ptr<const NormDescriptor> desc_;
  std::size_t dim_;
};

}  // namespace supmod
