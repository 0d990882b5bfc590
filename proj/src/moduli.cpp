#include "supmod/moduli.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <utility>

#include "supmod/norm_core.hpp"
#include "supmod/parallel.hpp"

namespace supmod {

namespace {

constexpr double kPi = std::numbers::pi;

// Number of best coarse candidates that get a local refinement.
constexpr std::size_t kRefineCandidates = 3;

void check_grid(std::span<const double> grid, double lo, double hi, const char* what) {
  if (grid.empty()) throw std::invalid_argument(std::string(what) + ": empty grid");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double v = grid[i];
    if (!std::isfinite(v) || v < lo - 1e-12 || v > hi + 1e-12)
      throw std::invalid_argument(std::string(what) + ": grid value outside [" +
                                  std::to_string(lo) + ", " + std::to_string(hi) + "]");
    if (i > 0 && !(v > grid[i - 1]))
      throw std::invalid_argument(std::string(what) + ": grid must be strictly increasing");
  }
}

bool better(double v, double best, bool maximize) { return maximize ? v > best : v < best; }

// Iterated local grid search around a coarse optimum.
template <class F>
std::pair<double, double> refine_1d(F&& f, double center, double f_center, double half,
                                    bool maximize) {
  constexpr int kPts = 8, kRounds = 14;
  double best = f_center, arg = center;
  for (int round = 0; round < kRounds; ++round) {
    const double step = half / kPts;
    const double c = arg;
    for (int j = -kPts; j <= kPts; ++j) {
      if (j == 0) continue;
      const double t = c + j * step;
      const double v = f(t);
      if (better(v, best, maximize)) best = v, arg = t;
    }
    half = 2 * step;
  }
  return {best, arg};
}

struct Arg2 {
  double a, b;
};

template <class F>
std::pair<double, Arg2> refine_2d(F&& f, Arg2 center, double f_center, double half,
                                  bool maximize) {
  constexpr int kPts = 4, kRounds = 14;
  double best = f_center;
  Arg2 arg = center;
  for (int round = 0; round < kRounds; ++round) {
    const double step = half / kPts;
    const Arg2 c = arg;
    for (int i = -kPts; i <= kPts; ++i)
      for (int j = -kPts; j <= kPts; ++j) {
        if (i == 0 && j == 0) continue;
        const Arg2 t{c.a + i * step, c.b + j * step};
        const double v = f(t.a, t.b);
        if (better(v, best, maximize)) best = v, arg = t;
      }
    half = 2 * step;
  }
  return {best, arg};
}

// Indices of the k best entries (ties broken by index).
std::vector<std::size_t> top_indices(const std::vector<double>& v, std::size_t k,
                                     bool maximize) {
  std::vector<std::size_t> idx(v.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  k = std::min(k, idx.size());
  std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(k), idx.end(),
                    [&](std::size_t a, std::size_t b) {
                      if (v[a] != v[b]) return maximize ? v[a] > v[b] : v[a] < v[b];
                      return a < b;
                    });
  idx.resize(k);
  return idx;
}

// Widest angular gap around sample k, used as the refinement bracket.
double neighbor_half_width(const std::vector<double>& angles, std::size_t k, double period) {
  const std::size_t n = angles.size();
  const double prev = k > 0 ? angles[k] - angles[k - 1] : angles[0] + period - angles[n - 1];
  const double next = k + 1 < n ? angles[k + 1] - angles[k] : angles[0] + period - angles[k];
  return std::max(prev, next);
}

double lambda_root_impl(const NormedSpace& s, const double* x, const double* y, double r,
                        const SampleConfig& cfg) {
  if (r <= 0.0) return 0.0;
  double buf[2];
  auto g = [&](double l) {
    buf[0] = (1.0 - l) * x[0] + r * y[0];
    buf[1] = (1.0 - l) * x[1] + r * y[1];
    return s.norm(std::span<const double>(buf, 2)) - 1.0;
  };
  if (g(0.0) <= cfg.feas_tol) return 0.0;
  double lo = 0.0;
  // lambda(x, y, r) <= r for quasiorthogonal y; fall back to 1 if rounding says otherwise
  double hi = std::min(1.0, r);
  if (g(hi) > 0.0) hi = 1.0;
  while (hi - lo > cfg.root_tol) {
    const double mid = 0.5 * (lo + hi);
    if (g(mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return hi;
}

// A unit vector with every sampled quasiorthogonal unit direction (both signs).
struct Frame {
  Point2 x;
  std::vector<Point2> ys;
};

Frame make_frame(const NormedSpace& s, const Vector& x, const SampleConfig& cfg) {
  Frame f;
  f.x = {x[0], x[1]};
  const auto J = support_functionals(s, x, cfg);
  const Vector w{-x[1], x[0]};
  for (const auto& p : J.generators) {
    const Vector y = detail::quasiorthogonal_unchecked(s, x, p, w);
    f.ys.push_back({y[0], y[1]});
    f.ys.push_back({-y[0], -y[1]});
  }
  return f;
}

double frame_lambda(const NormedSpace& s, const Frame& f, double r, Sign sign,
                    const SampleConfig& cfg) {
  const bool plus = sign == Sign::Plus;
  double best = plus ? -1.0 : 2.0;
  for (const auto& y : f.ys) {
    const double v = lambda_root_impl(s, f.x.data(), y.data(), r, cfg);
    best = plus ? std::max(best, v) : std::min(best, v);
  }
  return best;
}

std::vector<double> lambda_planar(const NormedSpace& s, std::span<const double> grid, Sign sign,
                                  const SampleConfig& cfg) {
  const auto angles = sphere_sample_angles(s, cfg.angular_samples);
  const auto rows = parallel_map(angles.size(), [&](std::size_t k) {
    const Frame f = make_frame(s, sphere_point(s, angles[k]), cfg);
    std::vector<double> v(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) v[j] = frame_lambda(s, f, grid[j], sign, cfg);
    return v;
  });
  const bool plus = sign == Sign::Plus;
  std::vector<double> out(grid.size(), plus ? -1.0 : 2.0);
  for (const auto& row : rows)
    for (std::size_t j = 0; j < grid.size(); ++j)
      out[j] = plus ? std::max(out[j], row[j]) : std::min(out[j], row[j]);
  return out;
}

// 1 - ||x + y|| / 2 where y is the sphere point reached from x = S(theta)
// counterclockwise at distance eps: the nearest such point for the convexity
// modulus, the farthest one within distance eps for the Banas modulus.
double chord_value(const NormedSpace& s, double theta, double eps, bool farthest,
                   const SampleConfig& cfg) {
  if (eps <= 0.0) return 0.0;
  const Vector x = sphere_point(s, theta);
  auto dist = [&](double phi) {
    const Vector y = sphere_point(s, theta + phi);
    const double d[2] = {x[0] - y[0], x[1] - y[1]};
    return s.norm(std::span<const double>(d, 2));
  };
  double lo = 0.0, hi = kPi;
  while (hi - lo > cfg.root_tol) {
    const double mid = 0.5 * (lo + hi);
    const double d = dist(mid);
    if (farthest ? d <= eps : d < eps)
      lo = mid;
    else
      hi = mid;
  }
  const Vector y = sphere_point(s, theta + (farthest ? lo : hi));
  const double m[2] = {x[0] + y[0], x[1] + y[1]};
  return std::max(0.0, 1.0 - 0.5 * s.norm(std::span<const double>(m, 2)));
}

std::vector<double> chord_planar(const NormedSpace& s, std::span<const double> grid,
                                 bool banas, const SampleConfig& cfg) {
  const auto angles = sphere_sample_angles(s, cfg.angular_samples);
  const auto rows = parallel_map(angles.size(), [&](std::size_t k) {
    std::vector<double> v(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j)
      v[j] = chord_value(s, angles[k], grid[j], banas, cfg);
    return v;
  });
  const bool maximize = banas;
  return parallel_map(grid.size(), [&](std::size_t j) {
    if (grid[j] <= 0.0) return 0.0;
    std::vector<double> column(rows.size());
    for (std::size_t k = 0; k < rows.size(); ++k) column[k] = rows[k][j];
    double best = column[top_indices(column, 1, maximize)[0]];
    for (std::size_t k : top_indices(column, kRefineCandidates, maximize)) {
      const auto [v, arg] = refine_1d(
          [&](double th) { return chord_value(s, th, grid[j], banas, cfg); }, angles[k],
          column[k], neighbor_half_width(angles, k, 2 * kPi), maximize);
      if (better(v, best, maximize)) best = v;
    }
    return best;
  });
}

double rho_pair(const NormedSpace& s, const Vector& x, const Vector& u, double tau) {
  const double a[2] = {x[0] + tau * u[0], x[1] + tau * u[1]};
  const double b[2] = {x[0] - tau * u[0], x[1] - tau * u[1]};
  return 0.5 * (s.norm(std::span<const double>(a, 2)) + s.norm(std::span<const double>(b, 2))) -
         1.0;
}

std::vector<double> half_circle(const std::vector<double>& angles) {
  std::vector<double> out;
  for (double a : angles)
    if (a < kPi - 1e-15) out.push_back(a);
  return out;
}

std::vector<double> rho_planar(const NormedSpace& s, std::span<const double> taus,
                               const SampleConfig& cfg) {
  // The objective is invariant under x -> -x and u -> -u: half circles suffice.
  const std::size_t m = std::min<std::size_t>(cfg.angular_samples, 512);
  const auto angles = half_circle(sphere_sample_angles(s, m));
  std::vector<Vector> pts(angles.size());
  for (std::size_t k = 0; k < angles.size(); ++k) pts[k] = sphere_point(s, angles[k]);

  struct Best {
    double value;
    std::size_t u;
  };
  const auto rows = parallel_map(pts.size(), [&](std::size_t i) {
    std::vector<Best> v(taus.size());
    for (std::size_t t = 0; t < taus.size(); ++t) {
      Best b{-1.0, 0};
      for (std::size_t j = 0; j < pts.size(); ++j) {
        const double f = rho_pair(s, pts[i], pts[j], taus[t]);
        if (f > b.value) b = {f, j};
      }
      v[t] = b;
    }
    return v;
  });

  return parallel_map(taus.size(), [&](std::size_t t) {
    const double tau = taus[t];
    if (tau <= 0.0) return 0.0;
    std::vector<double> column(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) column[i] = rows[i][t].value;
    double best = column[top_indices(column, 1, true)[0]];
    for (std::size_t i : top_indices(column, kRefineCandidates, true)) {
      const std::size_t j = rows[i][t].u;
      const double half = std::max(neighbor_half_width(angles, i, kPi),
                                   neighbor_half_width(angles, j, kPi));
      const auto [v, arg] = refine_2d(
          [&](double a, double b) {
            return rho_pair(s, sphere_point(s, a), sphere_point(s, b), tau);
          },
          {angles[i], angles[j]}, column[i], half, true);
      best = std::max(best, v);
    }
    return best;
  });
}

struct XiPlanar {
  double value = -1.0;
  Vector x, y, p, p_lifted;
};

// ||x - <p, x> y|| maximized over generators of J1(y).
XiPlanar xi_at(const NormedSpace& s, const Vector& y, const Vector& x, const SampleConfig& cfg) {
  XiPlanar best;
  const auto J = support_functionals(s, y, cfg);
  for (std::size_t g = 0; g < J.generators.size(); ++g) {
    const auto& p = J.generators[g];
    const double c = p[0] * x[0] + p[1] * x[1];
    const double d[2] = {x[0] - c * y[0], x[1] - c * y[1]};
    const double v = s.norm(std::span<const double>(d, 2));
    if (v > best.value) {
      best.value = v;
      best.p = p;
      best.p_lifted = J.lifted.empty() ? p : J.lifted[g];
    }
  }
  best.x = x;
  best.y = y;
  return best;
}

XiPlanar xi_planar(const NormedSpace& s, const SampleConfig& cfg) {
  // invariant under x -> -x and (y, p) -> (-y, -p)
  const auto angles = half_circle(sphere_sample_angles(s, cfg.angular_samples));
  std::vector<Vector> pts(angles.size());
  for (std::size_t k = 0; k < angles.size(); ++k) pts[k] = sphere_point(s, angles[k]);

  struct Best {
    double value;
    std::size_t x;
  };
  const auto rows = parallel_map(pts.size(), [&](std::size_t j) {
    const auto J = support_functionals(s, pts[j], cfg);
    const auto& y = pts[j];
    Best b{-1.0, 0};
    for (const auto& p : J.generators)
      for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto& x = pts[i];
        const double c = p[0] * x[0] + p[1] * x[1];
        const double d[2] = {x[0] - c * y[0], x[1] - c * y[1]};
        const double v = s.norm(std::span<const double>(d, 2));
        if (v > b.value) b = {v, i};
      }
    return b;
  });

  std::vector<double> column(rows.size());
  for (std::size_t j = 0; j < rows.size(); ++j) column[j] = rows[j].value;
  const std::size_t j0 = top_indices(column, 1, true)[0];
  XiPlanar best = xi_at(s, pts[j0], pts[rows[j0].x], cfg);
  for (std::size_t j : top_indices(column, kRefineCandidates, true)) {
    const std::size_t i = rows[j].x;
    const double half = std::max(neighbor_half_width(angles, i, kPi),
                                 neighbor_half_width(angles, j, kPi));
    const auto [v, arg] = refine_2d(
        [&](double ty, double tx) {
          return xi_at(s, sphere_point(s, ty), sphere_point(s, tx), cfg).value;
        },
        {angles[j], angles[i]}, column[j], half, true);
    if (v > best.value) best = xi_at(s, sphere_point(s, arg.a), sphere_point(s, arg.b), cfg);
  }
  return best;
}

ModulusCurve make_curve(ModulusKind kind, std::span<const double> grid, std::vector<double> vals,
                        const NormedSpace& space, const SampleConfig& cfg) {
  ModulusCurve c;
  c.kind = kind;
  c.params.assign(grid.begin(), grid.end());
  c.values = std::move(vals);
  c.space_id = space.id();
  c.config_fingerprint = cfg.fingerprint();
  c.bias = estimate_bias(kind);
  return c;
}

// Reduces a per-plane computation over all planar sections.
template <class F>
std::vector<double> over_sections(const NormedSpace& space, const SampleConfig& cfg,
                                  std::size_t n, bool maximize, F&& per_plane) {
  std::vector<double> out;
  for (const auto& plane : planar_sections(space, cfg)) {
    const auto v = per_plane(plane);
    if (out.empty()) {
      out = v;
      continue;
    }
    for (std::size_t j = 0; j < n; ++j)
      out[j] = maximize ? std::max(out[j], v[j]) : std::min(out[j], v[j]);
  }
  return out;
}

}  // namespace

std::string_view to_string(ModulusKind kind) {
  switch (kind) {
    case ModulusKind::Delta: return "delta";
    case ModulusKind::Rho: return "rho";
    case ModulusKind::RhoBanas: return "rho-banas";
    case ModulusKind::LambdaMinus: return "lambda-minus";
    case ModulusKind::LambdaPlus: return "lambda-plus";
  }
  return "unknown";
}

EstimateBias estimate_bias(ModulusKind kind) {
  return (kind == ModulusKind::Delta || kind == ModulusKind::LambdaMinus)
             ? EstimateBias::UpperEstimate
             : EstimateBias::LowerEstimate;
}

std::optional<ModulusKind> parse_modulus_kind(std::string_view name) {
  for (auto k : {ModulusKind::Delta, ModulusKind::Rho, ModulusKind::RhoBanas,
                 ModulusKind::LambdaMinus, ModulusKind::LambdaPlus})
    if (to_string(k) == name) return k;
  return std::nullopt;
}

double ModulusCurve::at(double param) const {
  const auto it = std::lower_bound(params.begin(), params.end(), param);
  if (it == params.end() || *it != param)
    throw std::out_of_range("curve has no sample at " + std::to_string(param));
  return values[static_cast<std::size_t>(it - params.begin())];
}

std::vector<NormedSpace> planar_sections(const NormedSpace& space, const SampleConfig& cfg) {
  const std::size_t n = space.dim();
  if (n < 2) throw std::invalid_argument("moduli need a space of dimension at least 2");
  if (n == 2) return {space};
  std::vector<NormedSpace> out;
  Vector e1(n, 0.0), e2(n, 0.0);
  e1[0] = 1.0;
  e2[1] = 1.0;
  out.push_back(NormedSpace::section(space, e1, e2));
  std::mt19937_64 rng(cfg.seed);
  std::normal_distribution<double> gauss;
  while (out.size() < cfg.section_samples) {
    Vector u(n), v(n);
    for (auto& c : u) c = gauss(rng);
    for (auto& c : v) c = gauss(rng);
    const double nu = euclidean_norm(u);
    if (nu < 1e-8) continue;
    for (auto& c : u) c /= nu;
    const double uv = dot(u, v);
    for (std::size_t i = 0; i < n; ++i) v[i] -= uv * u[i];
    const double nv = euclidean_norm(v);
    if (nv < 1e-8) continue;
    for (auto& c : v) c /= nv;
    out.push_back(NormedSpace::section(space, std::move(u), std::move(v)));
  }
  return out;
}

double lambda_root(const NormedSpace& space2d, std::span<const double> x,
                   std::span<const double> y, double r, const SampleConfig& config) {
  config.validate();
  if (space2d.dim() != 2) throw std::invalid_argument("lambda_root: space must be planar");
  if (x.size() != 2 || y.size() != 2 || !all_finite(x) || !all_finite(y))
    throw std::invalid_argument("lambda_root: x and y must be finite planar vectors");
  if (!(r >= 0.0 && r <= 1.0)) throw std::invalid_argument("lambda_root: r must lie in [0, 1]");
  if (std::abs(space2d.norm(x) - 1.0) > config.feas_tol ||
      std::abs(space2d.norm(y) - 1.0) > config.feas_tol)
    throw std::invalid_argument("lambda_root: x and y must be unit vectors");
  if (!is_quasiorthogonal(space2d, y, x, config))
    throw std::invalid_argument("lambda_root: y is not quasiorthogonal to x");
  const double g0 = space2d.norm(combine(1.0, x, r, y)) - 1.0;
  if (g0 < -config.feas_tol)
    throw std::domain_error("lambda_root: ||x + r y|| < 1, quasiorthogonality certificate broken");
  return lambda_root_impl(space2d, x.data(), y.data(), r, config);
}

double lambda_local(const NormedSpace& space2d, std::span<const double> x, double r, Sign sign,
                    const SampleConfig& config) {
  config.validate();
  if (space2d.dim() != 2) throw std::invalid_argument("lambda_local: space must be planar");
  if (x.size() != 2 || !all_finite(x))
    throw std::invalid_argument("lambda_local: x must be a finite planar vector");
  if (!(r >= 0.0 && r <= 1.0)) throw std::invalid_argument("lambda_local: r must lie in [0, 1]");
  if (std::abs(space2d.norm(x) - 1.0) > config.feas_tol)
    throw std::invalid_argument("lambda_local: x must be a unit vector");
  const Frame f = make_frame(space2d, Vector(x.begin(), x.end()), config);
  return frame_lambda(space2d, f, r, sign, config);
}

ModulusCurve lambda_curve(const NormedSpace& space, std::span<const double> r_grid, Sign sign,
                          const SampleConfig& config) {
  config.validate();
  check_grid(r_grid, 0.0, 1.0, "lambda_curve");
  const bool plus = sign == Sign::Plus;
  auto vals = over_sections(space, config, r_grid.size(), plus, [&](const NormedSpace& plane) {
    return lambda_planar(plane, r_grid, sign, config);
  });
  return make_curve(plus ? ModulusKind::LambdaPlus : ModulusKind::LambdaMinus, r_grid,
                    std::move(vals), space, config);
}

ModulusCurve delta_curve(const NormedSpace& space, std::span<const double> eps_grid,
                         const SampleConfig& config) {
  config.validate();
  check_grid(eps_grid, 0.0, 2.0, "delta_curve");
  auto vals = over_sections(space, config, eps_grid.size(), false, [&](const NormedSpace& plane) {
    return chord_planar(plane, eps_grid, false, config);
  });
  return make_curve(ModulusKind::Delta, eps_grid, std::move(vals), space, config);
}

ModulusCurve rho_banas_curve(const NormedSpace& space, std::span<const double> eps_grid,
                             const SampleConfig& config) {
  config.validate();
  check_grid(eps_grid, 0.0, 2.0, "rho_banas_curve");
  auto vals = over_sections(space, config, eps_grid.size(), true, [&](const NormedSpace& plane) {
    return chord_planar(plane, eps_grid, true, config);
  });
  return make_curve(ModulusKind::RhoBanas, eps_grid, std::move(vals), space, config);
}

std::vector<double> rho_values(const NormedSpace& space, std::span<const double> taus,
                               const SampleConfig& config) {
  config.validate();
  for (double t : taus)
    if (!(t >= 0.0) || !std::isfinite(t))
      throw std::invalid_argument("rho_values: tau must be a finite nonnegative real");
  return over_sections(space, config, taus.size(), true,
                       [&](const NormedSpace& plane) { return rho_planar(plane, taus, config); });
}

ModulusCurve rho_curve(const NormedSpace& space, std::span<const double> tau_grid,
                       const SampleConfig& config) {
  check_grid(tau_grid, 0.0, 1.0, "rho_curve");
  return make_curve(ModulusKind::Rho, tau_grid, rho_values(space, tau_grid, config), space,
                    config);
}

ModulusCurve modulus_curve(const NormedSpace& space, ModulusKind kind,
                           std::span<const double> grid, const SampleConfig& config) {
  switch (kind) {
    case ModulusKind::Delta: return delta_curve(space, grid, config);
    case ModulusKind::Rho: return rho_curve(space, grid, config);
    case ModulusKind::RhoBanas: return rho_banas_curve(space, grid, config);
    case ModulusKind::LambdaMinus: return lambda_curve(space, grid, Sign::Minus, config);
    case ModulusKind::LambdaPlus: return lambda_curve(space, grid, Sign::Plus, config);
  }
  throw std::invalid_argument("unknown modulus kind");
}

XiEstimate xi(const NormedSpace& space, const SampleConfig& config) {
  config.validate();
  XiEstimate out;
  out.value = -1.0;
  out.space_id = space.id();
  out.config_fingerprint = config.fingerprint();
  for (const auto& plane : planar_sections(space, config)) {
    const XiPlanar b = xi_planar(plane, config);
    if (!(b.value > out.value)) continue;
    out.value = b.value;
    if (const auto* sec = std::get_if<SectionDescriptor>(&plane.descriptor())) {
      out.witness_x = combine(b.x[0], sec->u, b.x[1], sec->v);
      out.witness_y = combine(b.y[0], sec->u, b.y[1], sec->v);
      out.witness_p = b.p_lifted;
      // report the value the ambient-space witnesses reproduce
      const double c = dot(out.witness_p, out.witness_x);
      out.value = space.norm(combine(1.0, out.witness_x, -c, out.witness_y));
    } else {
      out.witness_x = b.x;
      out.witness_y = b.y;
      out.witness_p = b.p;
    }
  }
  return out;
}

double delta_inverse(const ModulusCurve& curve, double tau) {
  if (curve.kind != ModulusKind::Delta)
    throw std::invalid_argument("delta_inverse: curve must be a modulus of convexity");
  if (!(tau >= 0.0 && tau <= 1.0)) throw std::invalid_argument("delta_inverse: tau must lie in [0, 1]");
  if (curve.params.empty()) throw std::invalid_argument("delta_inverse: empty curve");
  // the modulus of convexity is nondecreasing; enforce it on the samples
  std::vector<double> mono(curve.values.size());
  double run = -1.0;
  for (std::size_t k = 0; k < mono.size(); ++k) mono[k] = run = std::max(run, curve.values[k]);
  std::size_t last = mono.size();
  for (std::size_t k = 0; k < mono.size(); ++k)
    if (mono[k] <= tau) last = k;
  if (last == mono.size()) return curve.params.front();
  if (last + 1 == mono.size()) return curve.params.back();
  const double d0 = mono[last], d1 = mono[last + 1];
  const double e0 = curve.params[last], e1 = curve.params[last + 1];
  return e0 + (tau - d0) / (d1 - d0) * (e1 - e0);
}

double hilbert_reference(HilbertKind kind, double t) {
  if (!std::isfinite(t)) throw std::invalid_argument("hilbert_reference: non-finite argument");
  switch (kind) {
    case HilbertKind::LambdaEither:
      if (t < 0.0 || t > 1.0) throw std::invalid_argument("hilbert_reference: r must lie in [0, 1]");
      return 1.0 - std::sqrt(1.0 - t * t);
    case HilbertKind::Delta:
      if (t < 0.0 || t > 2.0) throw std::invalid_argument("hilbert_reference: eps must lie in [0, 2]");
      return 1.0 - std::sqrt(std::max(0.0, 1.0 - t * t / 4.0));
    case HilbertKind::DeltaInverse:
      if (t < 0.0 || t > 1.0) throw std::invalid_argument("hilbert_reference: tau must lie in [0, 1]");
      return 2.0 * std::sqrt(1.0 - (1.0 - t) * (1.0 - t));
    case HilbertKind::Rho:
      if (t < 0.0) throw std::invalid_argument("hilbert_reference: tau must be nonnegative");
      return std::sqrt(1.0 + t * t) - 1.0;
  }
  throw std::invalid_argument("hilbert_reference: unknown kind");
}

}  // namespace supmod
