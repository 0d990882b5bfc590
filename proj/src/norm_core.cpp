#include "supmod/norm_core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace supmod {

namespace {

// Coordinates this small relative to the largest one count as zero when
// deciding whether x sits on a kink of the unit sphere.
constexpr double kActiveRel = 1e-12;

void check_vector(const NormedSpace& space, std::span<const double> x, const char* what) {
  if (x.size() != space.dim())
    throw std::invalid_argument(std::string(what) + ": dimension mismatch");
  if (!all_finite(x)) throw std::invalid_argument(std::string(what) + ": non-finite input");
}

double sgn(double v) { return v < 0 ? -1.0 : 1.0; }

// Extreme points of J1(x) for coordinate norms (x != 0, nx = ||x||).
std::vector<Vector> coordinate_extremes(const NormedSpace& space, std::span<const double> x,
                                        double nx, bool& exact) {
  const std::size_t n = x.size();
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));

  auto l1_like = [&](const double* w) {
    std::vector<std::size_t> free_idx;
    Vector base(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double wi = w ? w[i] : 1.0;
      if (std::abs(x[i]) <= kActiveRel * m)
        free_idx.push_back(i);
      else
        base[i] = wi * sgn(x[i]);
    }
    // enumerating 2^k sign patterns; beyond this only a subset is kept
    constexpr std::size_t kMaxFree = 12;
    if (free_idx.size() > kMaxFree) {
      exact = false;
      free_idx.resize(kMaxFree);
    }
    std::vector<Vector> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << free_idx.size()); ++mask) {
      Vector p = base;
      for (std::size_t b = 0; b < free_idx.size(); ++b) {
        const std::size_t i = free_idx[b];
        p[i] = ((mask >> b) & 1 ? 1.0 : -1.0) * (w ? w[i] : 1.0);
      }
      out.push_back(std::move(p));
    }
    return out;
  };

  auto smooth = [&](double p, const double* w) {
    Vector g(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double t = std::abs(x[i]) / nx;
      const double mag = p == 2.0 ? t : std::pow(t, p - 1.0);
      g[i] = (w ? w[i] : 1.0) * sgn(x[i]) * mag;
    }
    return std::vector<Vector>{g};
  };

  const auto& d = space.descriptor();
  if (const auto* lp = std::get_if<LpDescriptor>(&d))
    return lp->p == 1.0 ? l1_like(nullptr) : smooth(lp->p, nullptr);
  if (const auto* wl = std::get_if<WeightedLpDescriptor>(&d))
    return wl->p == 1.0 ? l1_like(wl->weights.data()) : smooth(wl->p, wl->weights.data());
  // linf
  std::vector<Vector> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(x[i]) >= nx * (1.0 - kActiveRel)) {
      Vector e(n, 0.0);
      e[i] = sgn(x[i]);
      out.push_back(std::move(e));
    }
  }
  return out;
}

std::vector<Vector> polygon_extremes(const PolygonDescriptor& d, std::span<const double> x,
                                     double nx) {
  std::vector<Vector> out;
  for (const auto& nrm : d.normals) {
    if (nrm[0] * x[0] + nrm[1] * x[1] >= nx * (1.0 - kActiveRel)) out.push_back({nrm[0], nrm[1]});
  }
  return out;
}

// Adds interior points of the hull of the leading `k` extremes.
void add_interior_samples(std::vector<Vector>& gens, std::size_t k, std::size_t m) {
  if (k < 2) return;
  if (k == 2) {
    const Vector lo = gens[0], hi = gens[1];
    gens.pop_back();
    for (std::size_t j = 1; j <= m; ++j) {
      const double t = static_cast<double>(j) / static_cast<double>(m + 1);
      gens.push_back(combine(1.0 - t, lo, t, hi));
    }
    gens.push_back(hi);
    return;
  }
  std::size_t added = 0;
  for (std::size_t i = 0; i < k && added < m; ++i)
    for (std::size_t j = i + 1; j < k && added < m; ++j, ++added)
      gens.push_back(combine(0.5, gens[i], 0.5, gens[j]));
  if (added < m) {
    Vector c(gens[0].size(), 0.0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t t = 0; t < c.size(); ++t) c[t] += gens[i][t] / static_cast<double>(k);
    gens.push_back(std::move(c));
  }
}

}  // namespace

double eval_norm(const NormedSpace& space, std::span<const double> x) {
  check_vector(space, x, "eval_norm");
  return space.norm(x);
}

SupportFunctionalSet support_functionals(const NormedSpace& space, std::span<const double> x,
                                         const SampleConfig& config) {
  check_vector(space, x, "support_functionals");
  const double nx = space.norm(x);
  if (nx == 0.0) throw std::invalid_argument("support_functionals: x must be nonzero");

  SupportFunctionalSet out;
  out.anchor.assign(x.begin(), x.end());
  const auto& d = space.descriptor();

  if (const auto* sec = std::get_if<SectionDescriptor>(&d)) {
    const Vector xb = combine(x[0], sec->u, x[1], sec->v);
    const auto base = support_functionals(*sec->base, xb, config);
    // restricted functionals all lie on the line <r, x> = ||x||; keep the two
    // ends along the tangent direction
    const std::size_t k = base.extreme_count;
    std::size_t lo = 0, hi = 0;
    double tlo = 0, thi = 0;
    for (std::size_t i = 0; i < base.generators.size(); ++i) {
      const auto& q = base.generators[i];
      const double r0 = dot(q, sec->u), r1 = dot(q, sec->v);
      const double t = -r0 * x[1] + r1 * x[0];
      if (i == 0 || t < tlo) tlo = t, lo = i;
      if (i == 0 || t > thi) thi = t, hi = i;
    }
    (void)k;
    auto restrict = [&](const Vector& q) { return Vector{dot(q, sec->u), dot(q, sec->v)}; };
    out.exact = base.exact;
    out.generators.push_back(restrict(base.generators[lo]));
    out.lifted.push_back(base.generators[lo]);
    const double width = thi - tlo;
    if (width > 1e-12 * std::max(1.0, std::abs(thi))) {
      out.generators.push_back(restrict(base.generators[hi]));
      out.lifted.push_back(base.generators[hi]);
      out.extreme_count = 2;
      add_interior_samples(out.generators, 2, config.subdifferential_samples);
      add_interior_samples(out.lifted, 2, config.subdifferential_samples);
    }
    return out;
  }

  std::vector<Vector> ext;
  if (const auto* poly = std::get_if<PolygonDescriptor>(&d))
    ext = polygon_extremes(*poly, x, nx);
  else
    ext = coordinate_extremes(space, x, nx, out.exact);
  if (ext.empty()) throw std::logic_error("support_functionals: no active functional found");

  if (space.dim() == 2 && ext.size() > 1) {
    // order along the tangent direction (-x1, x0)
    std::sort(ext.begin(), ext.end(), [&](const Vector& a, const Vector& b) {
      return -a[0] * x[1] + a[1] * x[0] < -b[0] * x[1] + b[1] * x[0];
    });
    ext = {ext.front(), ext.back()};
  }
  out.extreme_count = ext.size();
  out.generators = std::move(ext);
  add_interior_samples(out.generators, out.extreme_count, config.subdifferential_samples);
  return out;
}

double min_along_line(const NormedSpace& space, std::span<const double> x,
                      std::span<const double> y, double tol) {
  const double nx = space.norm(x), ny = space.norm(y);
  const double half = 2.0 * nx / ny;
  Vector buf(x.size());
  auto f = [&](double t) {
    for (std::size_t i = 0; i < x.size(); ++i) buf[i] = x[i] + t * y[i];
    return space.norm(buf);
  };
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = -half, b = half;
  double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  double best = std::min({nx, fc, fd});
  while (b - a > tol) {
    if (fc <= fd) {
      b = d, d = c, fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
      best = std::min(best, fc);
    } else {
      a = c, c = d, fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
      best = std::min(best, fd);
    }
  }
  return std::min(best, f(0.5 * (a + b)));
}

bool is_quasiorthogonal(const NormedSpace& space, std::span<const double> y,
                        std::span<const double> x, const SampleConfig& config) {
  check_vector(space, x, "is_quasiorthogonal");
  check_vector(space, y, "is_quasiorthogonal");
  const double nx = space.norm(x);
  if (nx == 0.0 || space.norm(y) == 0.0)
    throw std::invalid_argument("is_quasiorthogonal: vectors must be nonzero");
  return min_along_line(space, x, y, config.root_tol) >= nx - config.feas_tol;
}

namespace detail {

Vector quasiorthogonal_unchecked(const NormedSpace& space, std::span<const double> x,
                                 std::span<const double> p, std::span<const double> w) {
  Vector y = combine(1.0, w, -dot(p, w) / dot(p, x), x);
  const double ny = space.norm(y);
  for (double& v : y) v /= ny;
  return y;
}

}  // namespace detail

Vector make_quasiorthogonal(const NormedSpace& space, std::span<const double> x,
                            std::span<const double> p, std::span<const double> w,
                            double feas_tol) {
  check_vector(space, x, "make_quasiorthogonal");
  check_vector(space, p, "make_quasiorthogonal");
  check_vector(space, w, "make_quasiorthogonal");
  const double nx = space.norm(x);
  if (nx == 0.0) throw std::invalid_argument("make_quasiorthogonal: x must be nonzero");
  if (std::abs(dot(p, x) - nx) > feas_tol * std::max(1.0, nx) ||
      std::abs(space.dual_norm(p) - 1.0) > feas_tol)
    throw std::invalid_argument("make_quasiorthogonal: p is not a supporting functional at x");
  const Vector raw = combine(1.0, w, -dot(p, w) / dot(p, x), x);
  const double nw = space.norm(w);
  if (!(space.norm(raw) > feas_tol * nw))
    throw std::invalid_argument("make_quasiorthogonal: w is parallel to x");
  return detail::quasiorthogonal_unchecked(space, x, p, w);
}

Vector metric_projection(const NormedSpace& space, std::span<const double> x,
                         std::span<const double> y, std::span<const double> p,
                         double feas_tol) {
  check_vector(space, x, "metric_projection");
  check_vector(space, y, "metric_projection");
  check_vector(space, p, "metric_projection");
  if (std::abs(space.norm(y) - 1.0) > feas_tol)
    throw std::invalid_argument("metric_projection: y must be a unit vector");
  if (std::abs(dot(p, y) - 1.0) > feas_tol || std::abs(space.dual_norm(p) - 1.0) > feas_tol)
    throw std::invalid_argument("metric_projection: p is not in J1(y)");
  return combine(1.0, x, -dot(p, x), y);
}

NormedSpace central_section(const NormedSpace& space, std::span<const double> u,
                            std::span<const double> v) {
  return NormedSpace::section(space, Vector(u.begin(), u.end()), Vector(v.begin(), v.end()));
}

Vector sphere_point(const NormedSpace& space2d, double theta) {
  if (space2d.dim() != 2) throw std::invalid_argument("sphere_point: space must be planar");
  Vector e{std::cos(theta), std::sin(theta)};
  const double n = space2d.norm(e);
  e[0] /= n;
  e[1] /= n;
  return e;
}

std::vector<double> sphere_sample_angles(const NormedSpace& space2d, std::size_t n) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  // (angle, is_kink)
  std::vector<std::pair<double, bool>> all(n);
  for (std::size_t k = 0; k < n; ++k) all[k] = {two_pi * static_cast<double>(k) / n, false};
  for (double a : space2d.kink_angles()) all.emplace_back(a, true);
  std::sort(all.begin(), all.end());
  // collapse near-duplicates, keeping the kink angle when one is involved
  std::vector<double> merged;
  bool last_kink = false;
  for (const auto& [a, kink] : all) {
    if (!merged.empty() && a - merged.back() < 1e-12) {
      if (kink && !last_kink) merged.back() = a, last_kink = true;
      continue;
    }
    merged.push_back(a);
    last_kink = kink;
  }
  return merged;
}

}  // namespace supmod
