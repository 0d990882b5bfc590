#include "supmod/normed_space.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace supmod {

namespace {

std::string fmt_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double max_abs(std::span<const double> x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

// (sum_i w_i |x_i|^p)^(1/p) with the max coordinate factored out.
double weighted_power_sum_root(std::span<const double> x, const double* w, double p) {
  const double m = max_abs(x);
  if (m == 0.0) return 0.0;
  if (p == 1.0) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += (w ? w[i] : 1.0) * std::abs(x[i]);
    return s;
  }
  double s = 0.0;
  if (p == 2.0) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double t = x[i] / m;
      s += (w ? w[i] : 1.0) * t * t;
    }
    return m * std::sqrt(s);
  }
  for (std::size_t i = 0; i < x.size(); ++i)
    s += (w ? w[i] : 1.0) * std::pow(std::abs(x[i]) / m, p);
  return m * std::pow(s, 1.0 / p);
}

double section_embed_norm(const SectionDescriptor& s, double a, double b) {
  const std::size_t n = s.u.size();
  if (n <= 16) {
    std::array<double, 16> buf{};
    for (std::size_t i = 0; i < n; ++i) buf[i] = a * s.u[i] + b * s.v[i];
    return s.base->norm(std::span<const double>(buf.data(), n));
  }
  return s.base->norm(combine(a, s.u, b, s.v));
}

double section_dual_norm(const SectionDescriptor& s, std::span<const double> p) {
  // max over directions of <p, e> / ||e||, coarse sweep then local shrink.
  auto ratio = [&](double th) {
    const double c = std::cos(th), d = std::sin(th);
    return (p[0] * c + p[1] * d) / section_embed_norm(s, c, d);
  };
  constexpr int kCoarse = 1024;
  const double step = 2.0 * std::numbers::pi / kCoarse;
  double best_th = 0.0, best = ratio(0.0);
  for (int k = 1; k < kCoarse; ++k) {
    const double v = ratio(k * step);
    if (v > best) best = v, best_th = k * step;
  }
  double half = step;
  for (int round = 0; round < 40 && half > 1e-15; ++round) {
    constexpr int kLocal = 8;
    double local_best_th = best_th;
    for (int j = -kLocal; j <= kLocal; ++j) {
      const double th = best_th + half * j / kLocal;
      const double v = ratio(th);
      if (v > best) best = v, local_best_th = th;
    }
    best_th = local_best_th;
    half /= 4.0;
  }
  return best;
}

void require_dim(std::size_t dim) {
  if (dim == 0) throw std::invalid_argument("dimension must be positive");
}

}  // namespace

NormedSpace NormedSpace::lp(double p, std::size_t dim) {
  require_dim(dim);
  if (!(p >= 1.0) || !std::isfinite(p))
    throw std::invalid_argument("lp exponent must be a finite real >= 1");
  return NormedSpace(std::make_shared<const NormDescriptor>(LpDescriptor{p, dim}), dim);
}

NormedSpace NormedSpace::linf(std::size_t dim) {
  require_dim(dim);
  return NormedSpace(std::make_shared<const NormDescriptor>(LinfDescriptor{dim}), dim);
}

NormedSpace NormedSpace::weighted_lp(double p, std::vector<double> weights) {
  require_dim(weights.size());
  if (!(p >= 1.0) || !std::isfinite(p))
    throw std::invalid_argument("weighted lp exponent must be a finite real >= 1");
  for (double w : weights)
    if (!(w > 0.0) || !std::isfinite(w))
      throw std::invalid_argument("weights must be positive and finite");
  const std::size_t n = weights.size();
  return NormedSpace(
      std::make_shared<const NormDescriptor>(WeightedLpDescriptor{p, std::move(weights)}), n);
}

NormedSpace NormedSpace::polygon(std::vector<Point2> vertices) {
  const std::size_t n = vertices.size();
  if (n < 4 || n % 2 != 0)
    throw std::invalid_argument("polygon needs an even number (>= 4) of vertices");
  double scale = 0.0;
  for (const auto& v : vertices) {
    if (!std::isfinite(v[0]) || !std::isfinite(v[1]))
      throw std::invalid_argument("polygon vertex is not finite");
    scale = std::max({scale, std::abs(v[0]), std::abs(v[1])});
  }
  if (scale == 0.0) throw std::invalid_argument("degenerate polygon");
  const std::size_t h = n / 2;
  for (std::size_t i = 0; i < h; ++i) {
    const auto& a = vertices[i];
    const auto& b = vertices[i + h];
    if (std::abs(a[0] + b[0]) > 1e-9 * scale || std::abs(a[1] + b[1]) > 1e-9 * scale)
      throw std::invalid_argument("polygon is not centrally symmetric");
  }
  // exact symmetry so that ||-x|| == ||x|| bit for bit
  for (std::size_t i = 0; i < h; ++i) vertices[i + h] = {-vertices[i][0], -vertices[i][1]};

  std::vector<Point2> normals(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = vertices[i];
    const auto& b = vertices[(i + 1) % n];
    const auto& c = vertices[(i + 2) % n];
    const double turn = (b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0]);
    if (!(turn > 1e-12 * scale * scale))
      throw std::invalid_argument("polygon must be strictly convex and counterclockwise");
    const double det = a[0] * b[1] - a[1] * b[0];
    if (!(det > 1e-12 * scale * scale))
      throw std::invalid_argument("polygon must strictly contain the origin");
    normals[i] = {(b[1] - a[1]) / det, (a[0] - b[0]) / det};
  }
  // the same exact symmetry for facet functionals
  for (std::size_t i = 0; i < h; ++i) normals[i + h] = {-normals[i][0], -normals[i][1]};

  return NormedSpace(std::make_shared<const NormDescriptor>(
                         PolygonDescriptor{std::move(vertices), std::move(normals)}),
                     2);
}

NormedSpace NormedSpace::section(const NormedSpace& base, Vector u, Vector v) {
  if (u.size() != base.dim() || v.size() != base.dim())
    throw std::invalid_argument("section basis dimension does not match the base space");
  if (!all_finite(u) || !all_finite(v))
    throw std::invalid_argument("section basis is not finite");
  const double uu = dot(u, u), vv = dot(v, v), uv = dot(u, v);
  if (!(uu * vv - uv * uv > 1e-12 * uu * vv))
    throw std::invalid_argument("section basis vectors are linearly dependent");
  return NormedSpace(std::make_shared<const NormDescriptor>(SectionDescriptor{
                         std::make_shared<const NormedSpace>(base), std::move(u), std::move(v)}),
                     2);
}

std::string NormedSpace::id() const {
  struct Visitor {
    std::string operator()(const LpDescriptor& d) const {
      if (d.p == 1.0) return "l1:" + std::to_string(d.dim);
      if (d.p == 2.0) return "l2:" + std::to_string(d.dim);
      return "lp:" + fmt_real(d.p) + ":" + std::to_string(d.dim);
    }
    std::string operator()(const WeightedLpDescriptor& d) const {
      std::string s = "wlp:" + fmt_real(d.p) + ":";
      for (std::size_t i = 0; i < d.weights.size(); ++i)
        s += (i ? "," : "") + fmt_real(d.weights[i]);
      return s;
    }
    std::string operator()(const LinfDescriptor& d) const {
      return "linf:" + std::to_string(d.dim);
    }
    std::string operator()(const PolygonDescriptor& d) const {
      std::string s = "poly2d:[";
      for (std::size_t i = 0; i < d.vertices.size(); ++i)
        s += (i ? ";" : "") + fmt_real(d.vertices[i][0]) + "," + fmt_real(d.vertices[i][1]);
      return s + "]";
    }
    std::string operator()(const SectionDescriptor& d) const {
      std::string s = "section(" + d.base->id() + "|u=";
      for (std::size_t i = 0; i < d.u.size(); ++i) s += (i ? "," : "") + fmt_real(d.u[i]);
      s += "|v=";
      for (std::size_t i = 0; i < d.v.size(); ++i) s += (i ? "," : "") + fmt_real(d.v[i]);
      return s + ")";
    }
  };
  return std::visit(Visitor{}, *desc_);
}

double NormedSpace::norm(std::span<const double> x) const {
  switch (desc_->index()) {
    case 0:
      return weighted_power_sum_root(x, nullptr, std::get<LpDescriptor>(*desc_).p);
    case 1: {
      const auto& d = std::get<WeightedLpDescriptor>(*desc_);
      return weighted_power_sum_root(x, d.weights.data(), d.p);
    }
    case 2:
      return max_abs(x);
    case 3: {
      const auto& d = std::get<PolygonDescriptor>(*desc_);
      const std::size_t h = d.normals.size() / 2;
      double m = 0.0;
      for (std::size_t i = 0; i < h; ++i)
        m = std::max(m, std::abs(d.normals[i][0] * x[0] + d.normals[i][1] * x[1]));
      return m;
    }
    default:
      return section_embed_norm(std::get<SectionDescriptor>(*desc_), x[0], x[1]);
  }
}

double NormedSpace::dual_norm(std::span<const double> p) const {
  switch (desc_->index()) {
    case 0: {
      const double e = std::get<LpDescriptor>(*desc_).p;
      if (e == 1.0) return max_abs(p);
      return weighted_power_sum_root(p, nullptr, e / (e - 1.0));
    }
    case 1: {
      const auto& d = std::get<WeightedLpDescriptor>(*desc_);
      if (d.p == 1.0) {
        double m = 0.0;
        for (std::size_t i = 0; i < p.size(); ++i) m = std::max(m, std::abs(p[i]) / d.weights[i]);
        return m;
      }
      const double q = d.p / (d.p - 1.0);
      std::vector<double> dual_w(d.weights.size());
      for (std::size_t i = 0; i < dual_w.size(); ++i) dual_w[i] = std::pow(d.weights[i], -q / d.p);
      return weighted_power_sum_root(p, dual_w.data(), q);
    }
    case 2: {
      double s = 0.0;
      for (double v : p) s += std::abs(v);
      return s;
    }
    case 3: {
      const auto& d = std::get<PolygonDescriptor>(*desc_);
      const std::size_t h = d.vertices.size() / 2;
      double m = 0.0;
      for (std::size_t i = 0; i < h; ++i)
        m = std::max(m, std::abs(d.vertices[i][0] * p[0] + d.vertices[i][1] * p[1]));
      return m;
    }
    default:
      return section_dual_norm(std::get<SectionDescriptor>(*desc_), p);
  }
}

std::vector<double> NormedSpace::kink_angles() const {
  constexpr double pi = std::numbers::pi;
  std::vector<double> out;
  if (dim_ != 2) return out;
  if (const auto* lp = std::get_if<LpDescriptor>(desc_.get()); lp && lp->p == 1.0) {
    out = {0.0, pi / 2, pi, 3 * pi / 2};
  } else if (const auto* w = std::get_if<WeightedLpDescriptor>(desc_.get()); w && w->p == 1.0) {
    out = {0.0, pi / 2, pi, 3 * pi / 2};
  } else if (std::holds_alternative<LinfDescriptor>(*desc_)) {
    out = {pi / 4, 3 * pi / 4, 5 * pi / 4, 7 * pi / 4};
  } else if (const auto* poly = std::get_if<PolygonDescriptor>(desc_.get())) {
    for (const auto& v : poly->vertices) {
      double a = std::atan2(v[1], v[0]);
      if (a < 0) a += 2 * pi;
      out.push_back(a);
    }
    std::sort(out.begin(), out.end());
  }
  return out;
}

bool NormedSpace::is_polyhedral() const {
  struct Visitor {
    bool operator()(const LpDescriptor& d) const { return d.p == 1.0; }
    bool operator()(const WeightedLpDescriptor& d) const { return d.p == 1.0; }
    bool operator()(const LinfDescriptor&) const { return true; }
    bool operator()(const PolygonDescriptor&) const { return true; }
    bool operator()(const SectionDescriptor& d) const { return d.base->is_polyhedral(); }
  };
  return std::visit(Visitor{}, *desc_);
}

}  // namespace supmod
