#include "supmod/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>

#include "supmod/norm_core.hpp"
#include "supmod/parallel.hpp"

namespace supmod {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kPi = std::numbers::pi;

// Memoized values of one quantity, keyed by the parameter rounded to 1e-12.
class Table {
 public:
  void need(double x) { values_.emplace(key(x), kNaN); }
  double get(double x) const {
    const auto it = values_.find(key(x));
    if (it == values_.end()) throw std::logic_error("quantity not precomputed");
    return it->second;
  }
  std::vector<double> params() const {
    std::vector<double> out;
    for (const auto& [k, v] : values_) out.push_back(static_cast<double>(k) / 1e12);
    return out;
  }
  void fill(const std::vector<double>& v) {
    std::size_t i = 0;
    for (auto& [k, val] : values_) val = v.at(i++);
  }
  bool empty() const { return values_.empty(); }

 private:
  static std::int64_t key(double x) { return std::llround(x * 1e12); }
  std::map<std::int64_t, double> values_;
};

struct Quantities {
  Table delta, rho, rho_b, lam_minus, lam_plus;
  ModulusCurve delta_dense;
  double xi = kNaN;
  double lm1 = kNaN;
  double s = kNaN;
  double s_shift = kNaN;
};

struct Sides {
  double lhs;
  double rhs;
  double extra_tolerance = 0.0;
  double param = kNaN;  // for once-per-space checks
  Witness witness = {};
};

using NeedFn = std::function<void(Quantities&, double r)>;
using EvalFn =
    std::function<std::optional<Sides>(const Quantities&, std::span<const double>, std::size_t)>;

struct Rule {
  InequalityCheck check;
  NeedFn need;
  EvalFn eval;
};

double hilbert_lambda(double r) { return hilbert_reference(HilbertKind::LambdaEither, r); }

double one_minus_half_inverse(const Quantities& q, double tau) {
  return 1.0 - 0.5 * delta_inverse(q.delta_dense, std::clamp(tau, 0.0, 1.0));
}

InequalityCheck chk(std::string id, std::string desc, double lo, double hi, bool lhs_adv,
                    bool rhs_adv) {
  InequalityCheck c;
  c.check_id = std::move(id);
  c.description = std::move(desc);
  c.domain_lo = lo;
  c.domain_hi = hi;
  c.lhs_adverse = lhs_adv;
  c.rhs_adverse = rhs_adv;
  return c;
}

InequalityCheck with_policy(InequalityCheck c, TolerancePolicy p, double fixed = 0.0,
                            bool per_grid = true) {
  c.policy = p;
  c.fixed_tolerance = fixed;
  c.per_grid = per_grid;
  return c;
}

std::vector<Rule> build_rules() {
  std::vector<Rule> rules;
  auto at = [](std::span<const double> g, std::size_t i) { return g[i]; };

  rules.push_back({chk("thm4.1-left", "delta(r) <= lambda_minus(r)", 0, 1, true, false),
                   [](Quantities& q, double r) { q.delta.need(r), q.lam_minus.need(r); },
                   [=](const Quantities& q, auto g, std::size_t i) -> std::optional<Sides> {
                     const double r = at(g, i);
                     return Sides{q.delta.get(r), q.lam_minus.get(r)};
                   }});
  rules.push_back({chk("thm4.1-right", "lambda_minus(r) <= delta(2r)", 0, 1, true, false),
                   [](Quantities& q, double r) { q.delta.need(2 * r), q.lam_minus.need(r); },
                   [=](const Quantities& q, auto g, std::size_t i) -> std::optional<Sides> {
                     const double r = at(g, i);
                     return Sides{q.lam_minus.get(r), q.delta.get(2 * r)};
                   }});
  rules.push_back({chk("lem4.2", "lambda_plus(r) <= rho(2r)", 0, 0.5, false, true),
                   [](Quantities& q, double r) { q.rho.need(2 * r), q.lam_plus.need(r); },
                   [=](const Quantities& q, auto g, std::size_t i) -> std::optional<Sides> {
                     const double r = at(g, i);
                     return Sides{q.lam_plus.get(r), q.rho.get(2 * r)};
                   }});
  rules.push_back({chk("lem4.3", "rho(r/2) <= lambda_plus(r)", 0, 1, false, true),
                   [](Quantities& q, double r) { q.rho.need(r / 2), q.lam_plus.need(r); },
                   [=](const Quantities& q, auto g, std::size_t i) -> std::optional<Sides> {
                     const double r = at(g, i);
                     return Sides{q.rho.get(r / 2), q.lam_plus.get(r)};
                   }});
  rules.push_back({chk("thm5.1-left", "rho_banas(2r) <= lambda_plus(r)", 0, 1, false, true),
                   [](Quantities& q, double r) { q.rho_b.need(2 * r), q.lam_plus.need(r); },
                   [=](const Quantities& q, auto g, std::size_t i) -> std::optional<Sides> {
                     const double r = at(g, i);
                     return Sides{q.rho_b.get(2 * r), q.lam_plus.get(r)};
                   }});
  rules.push_back(
      {chk("thm5.1-right", "lambda_plus(r) <= 2 rho_banas(3r)", 0, 2.0 / 3.0, false, true),
       [](Quantities& q, double r) { q.rho_b.need(3 * r), q.lam_plus.need(r); },
       [=](const Quantities& q, auto g, std::size_t i) -> std::optional<Sides> {
         const double r = at(g, i);
         return Sides{q.lam_plus.get(r), 2 * q.rho_b.get(3 * r)};
       }});
  rules.push_back({chk("cor5.2-left", "rho(r/6) / 2 <= rho_banas(r)", 0, 0.5, false, true),
                   [](Quantities& q, double r) { q.rho.need(r / 6), q.rho_b.need(r); },
                   [=](const Quantities& q, auto g, std::size_t i) -> std::optional<Sides> {
                     const double r = at(g, i);
                     return Sides{0.5 * q.rho.get(r / 6), q.rho_b.get(r)};
                   }});
  rules.push_back({chk("cor5.2-right", "rho_banas(r) <= rho(r)", 0, 0.5, false, true),
                   [](Quantities& q, double r) { q.rho.need(r), q.rho_b.need(r); },
                   [=](const Quantities& q, auto g, std::size_t i) -> std::optional<Sides> {
                     const double r = at(g, i);
                     return Sides{q.rho_b.get(r), q.rho.get(r)};
                   }});
  rules.push_back(
      {chk("cor5.3-left", "lambda_minus(r) <= 1 - sqrt(1 - r^2)", 0, 1, true, false),
       [](Quantities& q, double r) { q.lam_minus.need(r); },
       [=](const Quantities& q, auto g, std::size_t i) -> std::optional<Sides> {
         const double r = at(g, i);
         return Sides{q.lam_minus.get(r), hilbert_lambda(r)};
       }});
  rules.push_back(
      {chk("cor5.3-right", "1 - sqrt(1 - r^2) <= lambda_plus(r)", 0, 1, false, true),
       [](Quantities& q, double r) { q.lam_plus.need(r); },
       [=](const Quantities& q, auto g, std::size_t i) -> std::optional<Sides> {
         const double r = at(g, i);
         return Sides{hilbert_lambda(r), q.lam_plus.get(r)};
       }});

  // s = (1 - lambda_minus(1)) / 2 carries the sampling error of lambda_minus(1);
  // the bound's change over that uncertainty is added to the tolerance.
  rules.push_back(
      {with_policy(chk("thm6.1-left", "1 / (1 - lambda_minus(s)) <= xi", 0, 1, true, true),
                   TolerancePolicy::Slack, 0.0, false),
       nullptr,
       [](const Quantities& q, auto, std::size_t) -> std::optional<Sides> {
         const double b = 1.0 / (1.0 - q.lam_minus.get(q.s));
         const double b2 = 1.0 / (1.0 - q.lam_minus.get(q.s_shift));
         return Sides{b, q.xi, std::abs(b2 - b), q.s};
       }});
  rules.push_back(
      {with_policy(chk("thm6.1-right", "xi <= 1 / (1 - lambda_plus(s))", 0, 1, false, true),
                   TolerancePolicy::Slack, 0.0, false),
       nullptr,
       [](const Quantities& q, auto, std::size_t) -> std::optional<Sides> {
         const double b = 1.0 / (1.0 - q.lam_plus.get(q.s));
         const double b2 = 1.0 / (1.0 - q.lam_plus.get(q.s_shift));
         return Sides{q.xi, b, std::abs(b2 - b), q.s};
       }});
  rules.push_back(
      {with_policy(chk("thm6.1-bound", "1 / (1 - lambda_plus(s)) <= 2", 0, 1, false, false),
                   TolerancePolicy::Fixed, 1e-6, false),
       nullptr,
       [](const Quantities& q, auto, std::size_t) -> std::optional<Sides> {
         return Sides{1.0 / (1.0 - q.lam_plus.get(q.s)), 2.0, 0.0, q.s};
       }});

  rules.push_back({chk("lem6.3-left",
                       "1 - inv_delta(1 - r/2) / 2 <= 1 - inv_delta(1 - r/xi) / 2", 0, 1, true,
                       false),
                   [](Quantities&, double) {},
                   [](const Quantities& q, auto g, std::size_t i) -> std::optional<Sides> {
                     const double r = g[i];
                     return Sides{one_minus_half_inverse(q, 1 - r / 2),
                                  one_minus_half_inverse(q, 1 - r / q.xi)};
                   }});
  rules.push_back({chk("lem6.3-right", "1 - inv_delta(1 - r/xi) / 2 <= lambda_plus(r)", 0, 1,
                       true, true),
                   [](Quantities& q, double r) { q.lam_plus.need(r); },
                   [](const Quantities& q, auto g, std::size_t i) -> std::optional<Sides> {
                     const double r = g[i];
                     return Sides{one_minus_half_inverse(q, 1 - r / q.xi), q.lam_plus.get(r)};
                   }});

  rules.push_back({with_policy(chk("lem3.3-zero", "lambda_plus(0) <= 0", 0, 1, false, false),
                               TolerancePolicy::FeasTol, 0.0, false),
                   nullptr,
                   [](const Quantities& q, auto, std::size_t) -> std::optional<Sides> {
                     return Sides{q.lam_plus.get(0.0), 0.0, 0.0, 0.0};
                   }});
  rules.push_back(
      {with_policy(chk("lem3.3-order-left", "lambda_minus(r) <= lambda_plus(r)", 0, 1, false,
                       false),
                   TolerancePolicy::FeasTol),
       [](Quantities& q, double r) { q.lam_minus.need(r), q.lam_plus.need(r); },
       [](const Quantities& q, auto g, std::size_t i) -> std::optional<Sides> {
         return Sides{q.lam_minus.get(g[i]), q.lam_plus.get(g[i])};
       }});
  rules.push_back(
      {with_policy(chk("lem3.3-order-right", "lambda_plus(r) <= r", 0, 1, false, false),
                   TolerancePolicy::FeasTol),
       [](Quantities& q, double r) { q.lam_plus.need(r); },
       [](const Quantities& q, auto g, std::size_t i) -> std::optional<Sides> {
         return Sides{q.lam_plus.get(g[i]), g[i]};
       }});
  // Pairwise properties: each grid point r2 reports its worst partner r1 < r2.
  rules.push_back(
      {chk("lem3.3-superlinear", "(r2/r1) lambda_minus(r1) <= lambda_minus(r2)", 0, 1, true,
           true),
       [](Quantities& q, double r) { q.lam_minus.need(r); },
       [](const Quantities& q, auto g, std::size_t i) -> std::optional<Sides> {
         std::optional<Sides> worst;
         for (std::size_t j = 0; j < i; ++j) {
           if (g[j] <= 0.0) continue;
           Sides s{g[i] / g[j] * q.lam_minus.get(g[j]), q.lam_minus.get(g[i])};
           s.witness = {{"r1", {g[j]}}};
           if (!worst || s.rhs - s.lhs < worst->rhs - worst->lhs) worst = s;
         }
         return worst;
       }});
  rules.push_back(
      {chk("lem3.3-increment",
           "lambda_minus(r2) - lambda_minus(r1) <= (r2 - r1) / (1 - r1)", 0, 1, true, true),
       [](Quantities& q, double r) { q.lam_minus.need(r); },
       [](const Quantities& q, auto g, std::size_t i) -> std::optional<Sides> {
         std::optional<Sides> worst;
         for (std::size_t j = 0; j < i; ++j) {
           if (g[j] >= 1.0) continue;
           Sides s{q.lam_minus.get(g[i]) - q.lam_minus.get(g[j]), (g[i] - g[j]) / (1 - g[j])};
           s.witness = {{"r1", {g[j]}}};
           if (!worst || s.rhs - s.lhs < worst->rhs - worst->lhs) worst = s;
         }
         return worst;
       }});
  rules.push_back(
      {chk("lem3.3-monotone-minus", "lambda_minus(r_prev) <= lambda_minus(r)", 0, 1, true, true),
       [](Quantities& q, double r) { q.lam_minus.need(r); },
       [](const Quantities& q, auto g, std::size_t i) -> std::optional<Sides> {
         if (i == 0) return std::nullopt;
         return Sides{q.lam_minus.get(g[i - 1]), q.lam_minus.get(g[i])};
       }});
  rules.push_back(
      {chk("lem3.3-monotone-plus", "lambda_plus(r_prev) <= lambda_plus(r)", 0, 1, true, true),
       [](Quantities& q, double r) { q.lam_plus.need(r); },
       [](const Quantities& q, auto g, std::size_t i) -> std::optional<Sides> {
         if (i == 0) return std::nullopt;
         return Sides{q.lam_plus.get(g[i - 1]), q.lam_plus.get(g[i])};
       }});
  // Twice the gap between lambda_plus(r) and the chord through its grid
  // neighbours; on a uniform grid this is the second difference.
  rules.push_back(
      {with_policy(chk("lem3.3-convex", "lambda_plus lies below its neighbour chord", 0, 1,
                       false, false),
                   TolerancePolicy::Fixed, 1e-6),
       [](Quantities& q, double r) { q.lam_plus.need(r); },
       [](const Quantities& q, auto g, std::size_t i) -> std::optional<Sides> {
         if (i == 0 || i + 1 >= g.size()) return std::nullopt;
         const double h0 = g[i] - g[i - 1], h1 = g[i + 1] - g[i];
         const double chord =
             (h1 * q.lam_plus.get(g[i - 1]) + h0 * q.lam_plus.get(g[i + 1])) / (h0 + h1);
         return Sides{2 * q.lam_plus.get(g[i]), 2 * chord};
       }});
  rules.push_back({with_policy(chk("lem3.3-endpoint", "1 <= lambda_plus(1)", 0, 1, false, false),
                               TolerancePolicy::Fixed, 2e-3, false),
                   nullptr,
                   [](const Quantities& q, auto, std::size_t) -> std::optional<Sides> {
                     return Sides{1.0, q.lam_plus.get(1.0), 0.0, 1.0};
                   }});
  return rules;
}

const std::vector<Rule>& rules() {
  static const std::vector<Rule> r = build_rules();
  return r;
}

double tolerance_for(const InequalityCheck& c, const SampleConfig& cfg, double extra) {
  switch (c.policy) {
    case TolerancePolicy::FeasTol: return cfg.feas_tol + extra;
    case TolerancePolicy::Fixed: return c.fixed_tolerance + extra;
    case TolerancePolicy::Slack: break;
  }
  const int sides = int(c.lhs_adverse) + int(c.rhs_adverse);
  return cfg.slack * std::max(1, sides) + extra;
}

// Grid of the dense convexity curve used for its inverse: equal steps in the
// angle between chord endpoints, which crowds samples near eps = 2.
std::vector<double> inverse_grid(std::size_t k) {
  std::vector<double> g(k + 1);
  for (std::size_t i = 0; i <= k; ++i) g[i] = 2.0 * std::sin(kPi * double(i) / (2.0 * double(k)));
  g[k] = 2.0;
  return g;
}

template <class F>
void fill_table(Table& t, F&& compute) {
  if (t.empty()) return;
  const auto p = t.params();
  t.fill(compute(p));
}

// ---- brute force ---------------------------------------------------------

std::vector<Vector> uniform_sphere(const NormedSpace& s, std::size_t res) {
  std::vector<Vector> pts(res);
  for (std::size_t k = 0; k < res; ++k) pts[k] = sphere_point(s, 2 * kPi * double(k) / double(res));
  return pts;
}

double norm2(const NormedSpace& s, double a, double b) {
  const double v[2] = {a, b};
  return s.norm(std::span<const double>(v, 2));
}

double brute_chord(const NormedSpace& s, double eps, std::size_t res, bool banas) {
  const auto pts = uniform_sphere(s, res);
  const double band = 2 * kPi / double(res);
  // pairs (x, y) with y at most half a turn ahead of x cover every unordered pair
  const auto best = parallel_map(res, [&](std::size_t i) {
    double b = banas ? -1.0 : kNaN;
    const auto& x = pts[i];
    for (std::size_t o = 0; o <= res / 2; ++o) {
      const auto& y = pts[(i + o) % res];
      const double d = norm2(s, x[0] - y[0], x[1] - y[1]);
      const bool ok = banas ? d <= eps : std::abs(d - eps) <= band;
      if (!ok) continue;
      const double v = 1.0 - 0.5 * norm2(s, x[0] + y[0], x[1] + y[1]);
      if (banas)
        b = std::max(b, v);
      else if (std::isnan(b) || v < b)
        b = v;
    }
    return b;
  });
  double out = banas ? -1.0 : kNaN;
  for (double v : best) {
    if (std::isnan(v)) continue;
    if (banas)
      out = std::max(out, v);
    else if (std::isnan(out) || v < out)
      out = v;
  }
  return out;
}

double brute_rho(const NormedSpace& s, double tau, std::size_t res) {
  const auto pts = uniform_sphere(s, res);
  const std::size_t half = res / 2;
  const auto best = parallel_map(half, [&](std::size_t i) {
    double b = -1.0;
    const auto& x = pts[i];
    for (std::size_t j = 0; j < half; ++j) {
      const auto& u = pts[j];
      const double v = 0.5 * (norm2(s, x[0] + tau * u[0], x[1] + tau * u[1]) +
                              norm2(s, x[0] - tau * u[0], x[1] - tau * u[1])) -
                       1.0;
      b = std::max(b, v);
    }
    return b;
  });
  return *std::max_element(best.begin(), best.end());
}

// Smallest root of l -> ||(1 - l) x + r y|| - 1 by a uniform scan with step 1/res.
double scan_root(const NormedSpace& s, const Vector& x, const Vector& y, double r,
                 std::size_t res) {
  auto g = [&](double l) {
    return norm2(s, (1 - l) * x[0] + r * y[0], (1 - l) * x[1] + r * y[1]) - 1.0;
  };
  double prev = g(0.0);
  if (prev <= 0.0) return 0.0;
  const double step = 1.0 / double(res);
  for (std::size_t j = 1; j <= res; ++j) {
    const double l = double(j) * step;
    const double cur = g(l);
    if (cur <= 0.0) return l - step + step * prev / (prev - cur);
    prev = cur;
  }
  return 1.0;
}

double brute_lambda(const NormedSpace& s, double r, std::size_t res, bool plus) {
  const auto pts = uniform_sphere(s, res);
  const double h = 2 * kPi / double(res);
  auto unit = [&](double a, double b) {
    const double n = norm2(s, a, b);
    return Vector{a / n, b / n};
  };
  const auto best = parallel_map(res, [&](std::size_t k) {
    const auto& x = pts[k];
    const auto& nx = pts[(k + 1) % res];
    const auto& px = pts[(k + res - 1) % res];
    const Vector cands[3] = {unit(nx[0] - px[0], nx[1] - px[1]), unit(nx[0] - x[0], nx[1] - x[1]),
                             unit(x[0] - px[0], x[1] - px[1])};
    std::vector<Vector> ys;
    for (const auto& y : cands) {
      bool dup = false;
      for (const auto& z : ys) dup = dup || std::abs(y[0] * z[1] - y[1] * z[0]) <= 1e-12;
      if (dup) continue;
      // keep only directions along which x stays outside the open unit ball
      bool supporting = true;
      for (double t : {h / 4, h / 2, h})
        supporting = supporting && norm2(s, x[0] + t * y[0], x[1] + t * y[1]) >= 1 - 1e-12 &&
                     norm2(s, x[0] - t * y[0], x[1] - t * y[1]) >= 1 - 1e-12;
      if (supporting) ys.push_back(y);
    }
    double b = kNaN;
    for (const auto& y : ys) {
      const Vector ny{-y[0], -y[1]};
      const double a = scan_root(s, x, y, r, res), c = scan_root(s, x, ny, r, res);
      const double v = plus ? std::max(a, c) : std::min(a, c);
      if (std::isnan(b) || (plus ? v > b : v < b)) b = v;
    }
    return b;
  });
  double out = kNaN;
  for (double v : best)
    if (!std::isnan(v) && (std::isnan(out) || (plus ? v > out : v < out))) out = v;
  return out;
}

// ---- property suite -------------------------------------------------------

std::mt19937_64 case_rng(std::uint64_t seed, std::uint64_t lemma, std::uint64_t index) {
  return std::mt19937_64(splitmix64(seed ^ splitmix64((lemma << 32) ^ index)));
}

Vector random_vector(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> scale(-1.0, 1.0);
  Vector v(n);
  do {
    for (auto& c : v) c = gauss(rng);
  } while (euclidean_norm(v) < 1e-6);
  return scaled(v, std::exp(scale(rng)));
}

struct CaseResult {
  double lhs, rhs, tolerance;
  Witness witness;
};

void summarize_lemma(InequalityReport& rep, const std::string& id,
                     const std::vector<CaseResult>& cases) {
  bool any_fail = false;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto& c = cases[i];
    if (c.rhs - c.lhs >= -c.tolerance) continue;
    any_fail = true;
    rep.entries.push_back(
        make_entry(id, rep.space_id, double(i), c.lhs, c.rhs, c.tolerance, c.witness));
  }
  if (any_fail || cases.empty()) return;
  std::size_t worst = 0;
  for (std::size_t i = 1; i < cases.size(); ++i)
    if (cases[i].rhs - cases[i].lhs < cases[worst].rhs - cases[worst].lhs) worst = i;
  const auto& c = cases[worst];
  rep.entries.push_back(
      make_entry(id, rep.space_id, double(worst), c.lhs, c.rhs, c.tolerance, c.witness));
}

bool trusted_hilbert(const NormedSpace& s) {
  const auto* lp = std::get_if<LpDescriptor>(&s.descriptor());
  return lp && lp->p == 2.0;
}

Vector embed(const NormedSpace& plane, const Vector& a) {
  if (const auto* sec = std::get_if<SectionDescriptor>(&plane.descriptor()))
    return combine(a[0], sec->u, a[1], sec->v);
  return a;
}

}  // namespace

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Degenerate: return "degenerate";
  }
  return "unknown";
}

const std::vector<InequalityCheck>& inequality_registry() {
  static const std::vector<InequalityCheck> checks = [] {
    std::vector<InequalityCheck> out;
    for (const auto& r : rules()) out.push_back(r.check);
    return out;
  }();
  return checks;
}

ReportSummary InequalityReport::summary() const {
  ReportSummary s;
  for (const auto& e : entries) {
    switch (e.status) {
      case CheckStatus::Pass: ++s.pass; break;
      case CheckStatus::Fail: ++s.fail; break;
      case CheckStatus::Degenerate: ++s.degenerate; break;
    }
  }
  return s;
}

void InequalityReport::append(const InequalityReport& other) {
  entries.insert(entries.end(), other.entries.begin(), other.entries.end());
}

ReportEntry make_entry(std::string check_id, std::string space_id, double param, double lhs,
                       double rhs, double tolerance, Witness witness) {
  ReportEntry e;
  e.check_id = std::move(check_id);
  e.space_id = std::move(space_id);
  e.param = param;
  e.lhs = lhs;
  e.rhs = rhs;
  e.margin = rhs - lhs;
  e.tolerance = tolerance;
  e.witness = std::move(witness);
  if (std::isnan(lhs) || std::isnan(rhs))
    e.status = CheckStatus::Degenerate;
  else
    e.status = e.margin >= -tolerance ? CheckStatus::Pass : CheckStatus::Fail;
  return e;
}

InequalityReport run_checks(const NormedSpace& space, std::span<const double> r_grid,
                            const SampleConfig& config) {
  config.validate();
  for (std::size_t i = 0; i < r_grid.size(); ++i) {
    if (!(r_grid[i] >= 0.0 && r_grid[i] <= 1.0))
      throw std::invalid_argument("run_checks: grid must lie in [0, 1]");
    if (i > 0 && !(r_grid[i] > r_grid[i - 1]))
      throw std::invalid_argument("run_checks: grid must be strictly increasing");
  }
  auto in_domain = [](const InequalityCheck& c, double r) {
    return r >= c.domain_lo - 1e-12 && r <= c.domain_hi + 1e-12;
  };

  Quantities q;
  const double one = 1.0;
  q.lm1 = lambda_curve(space, std::span<const double>(&one, 1), Sign::Minus, config).values[0];
  q.s = (1.0 - q.lm1) / 2.0;
  q.s_shift = std::min(0.5, q.s + config.slack / 2.0);
  for (double r : {0.0, 1.0, q.s, q.s_shift}) q.lam_minus.need(r), q.lam_plus.need(r);
  for (const auto& rule : rules())
    if (rule.check.per_grid)
      for (double r : r_grid)
        if (in_domain(rule.check, r)) rule.need(q, r);

  fill_table(q.delta, [&](const auto& p) { return delta_curve(space, p, config).values; });
  fill_table(q.rho, [&](const auto& p) { return rho_values(space, p, config); });
  fill_table(q.rho_b, [&](const auto& p) { return rho_banas_curve(space, p, config).values; });
  fill_table(q.lam_minus,
             [&](const auto& p) { return lambda_curve(space, p, Sign::Minus, config).values; });
  fill_table(q.lam_plus,
             [&](const auto& p) { return lambda_curve(space, p, Sign::Plus, config).values; });
  q.delta_dense = delta_curve(space, inverse_grid(128), config);
  q.xi = xi(space, config).value;

  InequalityReport rep;
  rep.space_id = space.id();
  rep.config_fingerprint = config.fingerprint();
  for (const auto& rule : rules()) {
    const auto& c = rule.check;
    if (!c.per_grid) {
      const auto s = rule.eval(q, r_grid, 0);
      rep.entries.push_back(make_entry(c.check_id, rep.space_id, s->param, s->lhs, s->rhs,
                                       tolerance_for(c, config, s->extra_tolerance)));
      continue;
    }
    for (std::size_t i = 0; i < r_grid.size(); ++i) {
      const double r = r_grid[i];
      if (!in_domain(c, r)) {
        rep.entries.push_back(make_entry(c.check_id, rep.space_id, r, kNaN, kNaN,
                                         tolerance_for(c, config, 0.0)));
        continue;
      }
      auto s = rule.eval(q, r_grid, i);
      if (!s) continue;
      rep.entries.push_back(make_entry(c.check_id, rep.space_id, r, s->lhs, s->rhs,
                                       tolerance_for(c, config, s->extra_tolerance),
                                       std::move(s->witness)));
    }
  }
  return rep;
}

double brute_force_modulus(const NormedSpace& space2d, ModulusKind kind, double param,
                           std::size_t resolution) {
  if (space2d.dim() != 2) throw std::invalid_argument("brute_force_modulus: space must be planar");
  if (resolution < 256) throw std::invalid_argument("brute_force_modulus: resolution below 256");
  if (!std::isfinite(param) || param < 0.0)
    throw std::invalid_argument("brute_force_modulus: parameter must be nonnegative");
  switch (kind) {
    case ModulusKind::Delta: return brute_chord(space2d, param, resolution, false);
    case ModulusKind::RhoBanas: return brute_chord(space2d, param, resolution, true);
    case ModulusKind::Rho: return brute_rho(space2d, param, resolution);
    case ModulusKind::LambdaMinus: return brute_lambda(space2d, param, resolution, false);
    case ModulusKind::LambdaPlus: return brute_lambda(space2d, param, resolution, true);
  }
  throw std::invalid_argument("brute_force_modulus: unknown kind");
}

InequalityReport property_suite(const NormedSpace& space, std::size_t n_cases,
                                std::uint64_t seed) {
  if (n_cases == 0) throw std::invalid_argument("property_suite: need at least one case");
  SampleConfig cfg;
  cfg.seed = seed;
  InequalityReport rep;
  rep.space_id = space.id();
  rep.config_fingerprint = cfg.fingerprint();
  const std::size_t n = space.dim();

  // Intersecting chords of a planar sphere.
  const NormedSpace plane = planar_sections(space, cfg).front();
  const auto chords = parallel_map(n_cases, [&](std::size_t i) {
    auto rng = case_rng(seed, 2, i);
    std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
    for (int attempt = 0; attempt < 100000; ++attempt) {
      const Vector a = sphere_point(plane, angle(rng)), b = sphere_point(plane, angle(rng));
      const Vector c = sphere_point(plane, angle(rng)), d = sphere_point(plane, angle(rng));
      // a + s (b - a) = c + t (d - c)
      const double m00 = b[0] - a[0], m01 = c[0] - d[0], m10 = b[1] - a[1], m11 = c[1] - d[1];
      const double det = m00 * m11 - m01 * m10;
      if (std::abs(det) < 1e-12) continue;
      const double rx = c[0] - a[0], ry = c[1] - a[1];
      const double s = (rx * m11 - m01 * ry) / det, t = (m00 * ry - m10 * rx) / det;
      if (!(s > 0.0 && s < 1.0 && t > 0.0 && t < 1.0)) continue;
      const Vector x{a[0] + s * m00, a[1] + s * m10};
      const Vector A = embed(plane, a), B = embed(plane, b), C = embed(plane, c),
                   D = embed(plane, d), X = embed(plane, x);
      const double lhs = std::min(space.norm(sub(C, X)), space.norm(sub(X, D)));
      const double rhs = std::max(space.norm(sub(A, X)), space.norm(sub(X, B)));
      return CaseResult{lhs, rhs, 1e-9, {{"a", A}, {"b", B}, {"c", C}, {"d", D}, {"x", X}}};
    }
    throw std::runtime_error("property_suite: no intersecting chords found");
  });
  summarize_lemma(rep, "lem2.2", chords);

  // Smoothness bound along a supporting functional.
  std::vector<double> tau_grid;
  std::vector<double> rho_table;
  const bool hilbert = trusted_hilbert(space);
  if (!hilbert) {
    for (int k = 0; k <= 100; ++k) tau_grid.push_back(0.02 * k);
    rho_table = rho_values(space, tau_grid, cfg);
  }
  auto rho_at = [&](double tau) {
    if (hilbert) return hilbert_reference(HilbertKind::Rho, tau);
    const double pos = std::clamp(tau / 0.02, 0.0, 100.0);
    const std::size_t k = std::min<std::size_t>(99, std::size_t(pos));
    const double w = pos - double(k);
    return (1 - w) * rho_table[k] + w * rho_table[k + 1];
  };
  const auto smooth = parallel_map(n_cases, [&](std::size_t i) {
    auto rng = case_rng(seed, 3, i);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const Vector x = random_vector(rng, n);
    Vector y = random_vector(rng, n);
    const double nx = space.norm(x);
    const double tau = 2.0 * unit(rng);
    y = scaled(y, tau * nx / space.norm(y));
    const auto J = support_functionals(space, x, cfg);
    const std::size_t g =
        std::min(J.generators.size() - 1, std::size_t(unit(rng) * double(J.generators.size())));
    const Vector& p = J.generators[g];
    const double rho = rho_at(space.norm(y) / nx);
    const double lhs = space.norm(add(x, y));
    const double rhs = nx + dot(p, y) + 2 * nx * rho;
    return CaseResult{lhs, rhs, cfg.slack * nx, {{"x", x}, {"y", y}, {"p", p}, {"rho", {rho}}}};
  });
  summarize_lemma(rep, "lem2.3", smooth);

  // Distance between normalizations.
  const auto normalized = parallel_map(n_cases, [&](std::size_t i) {
    auto rng = case_rng(seed, 4, i);
    const Vector x = random_vector(rng, n);
    Vector y = random_vector(rng, n);
    // half of the cases are near pairs, where the bound is tightest relative to its size
    if (i % 2 == 1) y = add(x, scaled(y, 1e-3));
    const double nx = space.norm(x), ny = space.norm(y);
    const double lhs = space.norm(combine(1.0 / nx, x, -1.0 / ny, y));
    const double rhs = 2.0 * space.norm(sub(x, y)) / nx;
    return CaseResult{lhs, rhs, 1e-12, {{"x", x}, {"y", y}}};
  });
  summarize_lemma(rep, "lem2.4", normalized);
  return rep;
}

std::vector<ConjectureRow> explore_conjecture(std::span<const double> p_values,
                                              const SampleConfig& config) {
  config.validate();
  std::vector<ConjectureRow> rows;
  for (double p : p_values) {
    if (!(p > 1.0) || !std::isfinite(p))
      throw std::invalid_argument("explore_conjecture: every p must exceed 1");
    const NormedSpace s = NormedSpace::lp(p, 2);
    ConjectureRow row;
    row.p = p;
    const double one = 1.0;
    row.lambda_minus_1 =
        lambda_curve(s, std::span<const double>(&one, 1), Sign::Minus, config).values[0];
    row.s = (1.0 - row.lambda_minus_1) / 2.0;
    const double lp =
        lambda_curve(s, std::span<const double>(&row.s, 1), Sign::Plus, config).values[0];
    row.upper_bound = 1.0 / (1.0 - lp);
    row.xi = xi(s, config).value;
    row.gap = row.upper_bound - row.xi;
    rows.push_back(row);
  }
  return rows;
}

NormedSpace random_polygon(std::uint64_t seed, std::size_t directions) {
  if (directions < 2) throw std::invalid_argument("random_polygon: need at least 2 directions");
  std::mt19937_64 rng(splitmix64(seed));
  std::uniform_real_distribution<double> angle(0.0, kPi), radius(0.5, 1.5);
  std::vector<Point2> pts;
  for (std::size_t i = 0; i < directions; ++i) {
    const double a = angle(rng), r = radius(rng);
    pts.push_back({r * std::cos(a), r * std::sin(a)});
    pts.push_back({-r * std::cos(a), -r * std::sin(a)});
  }
  // convex hull by the monotone chain, strictly convex vertices only
  std::sort(pts.begin(), pts.end());
  auto cross = [](const Point2& o, const Point2& a, const Point2& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  std::vector<Point2> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 1e-12) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 1e-12) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return NormedSpace::polygon(std::move(hull));
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace supmod
