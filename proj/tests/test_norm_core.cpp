#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "supmod/norm_core.hpp"
#include "supmod/verify.hpp"

using namespace supmod;

namespace {

std::vector<NormedSpace> test_spaces() {
  return {NormedSpace::l2(2),         NormedSpace::l1(2),
          NormedSpace::linf(2),       NormedSpace::lp(3.0, 2),
          NormedSpace::lp(1.5, 3),    NormedSpace::weighted_lp(2.5, {1.0, 3.0}),
          NormedSpace::weighted_lp(1.0, {2.0, 0.5, 1.0}),
          random_polygon(7),
          NormedSpace::section(NormedSpace::linf(3), {1, 1, 0}, {0, 0, 1})};
}

Vector gaussian(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g;
  Vector v(n);
  for (auto& c : v) c = g(rng);
  return v;
}

}  // namespace

TEST_CASE("eval_norm closed forms") {
  CHECK(eval_norm(NormedSpace::l2(2), Vector{3, 4}) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(eval_norm(NormedSpace::linf(2), Vector{1, -2}) == 2.0);
  CHECK(eval_norm(NormedSpace::lp(3, 2), Vector{1, 1}) ==
        doctest::Approx(std::cbrt(2.0)).epsilon(1e-14));
  CHECK(eval_norm(NormedSpace::l1(3), Vector{1, -2, 0.5}) == doctest::Approx(3.5));
  CHECK(eval_norm(NormedSpace::l2(2), Vector{0, 0}) == 0.0);
}

TEST_CASE("eval_norm rejects bad input") {
  CHECK_THROWS_AS(eval_norm(NormedSpace::l2(2), Vector{1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(eval_norm(NormedSpace::l2(2), Vector{1, NAN}), std::invalid_argument);
  CHECK_THROWS_AS(eval_norm(NormedSpace::l2(2), Vector{INFINITY, 0}), std::invalid_argument);
}

TEST_CASE("polygon gauge matches the square") {
  const auto sq = NormedSpace::polygon({{1, -1}, {1, 1}, {-1, 1}, {-1, -1}});
  const auto inf = NormedSpace::linf(2);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const Vector x = gaussian(rng, 2);
    CHECK(sq.norm(x) == doctest::Approx(inf.norm(x)).epsilon(1e-14));
    CHECK(sq.dual_norm(x) == doctest::Approx(NormedSpace::l1(2).norm(x)).epsilon(1e-14));
  }
}

TEST_CASE("polygon validation") {
  CHECK_THROWS_AS(NormedSpace::polygon({{1, 0}, {0, 1}, {-1, 0}}), std::invalid_argument);
  // not centrally symmetric
  CHECK_THROWS_AS(NormedSpace::polygon({{1, 0}, {0, 1}, {-1, 0}, {0, -2}}), std::invalid_argument);
  // clockwise
  CHECK_THROWS_AS(NormedSpace::polygon({{1, 0}, {0, -1}, {-1, 0}, {0, 1}}), std::invalid_argument);
}

TEST_CASE("norm axioms on seeded pairs") {
  for (const auto& s : test_spaces()) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> t(-5.0, 5.0);
    for (int i = 0; i < 1000; ++i) {
      const Vector x = gaussian(rng, s.dim()), y = gaussian(rng, s.dim());
      const double nx = s.norm(x), ny = s.norm(y);
      CHECK(s.norm(add(x, y)) <= (nx + ny) * (1 + 1e-12));
      const double a = t(rng);
      CHECK(std::abs(s.norm(scaled(x, a)) - std::abs(a) * nx) <= 1e-12 * std::abs(a) * nx + 1e-300);
      CHECK(s.norm(scaled(x, -1.0)) == nx);
    }
  }
}

TEST_CASE("support functionals: Hilbert, l1 corner and smooth lp") {
  const SampleConfig cfg;
  {
    const auto J = support_functionals(NormedSpace::l2(2), Vector{0.6, 0.8}, cfg);
    REQUIRE(J.generators.size() == 1);
    CHECK(J.exact);
    CHECK(J.generators[0][0] == doctest::Approx(0.6));
    CHECK(J.generators[0][1] == doctest::Approx(0.8));
  }
  {
    // dual ball of l1 is the square; the face maximizing <p, e1> is p1 = 1
    const auto J = support_functionals(NormedSpace::l1(2), Vector{1, 0}, cfg);
    REQUIRE(J.generators.size() >= 2);
    const auto& lo = J.generators.front();
    const auto& hi = J.generators.back();
    CHECK(lo[0] == doctest::Approx(1.0));
    CHECK(hi[0] == doctest::Approx(1.0));
    CHECK(std::min(lo[1], hi[1]) == doctest::Approx(-1.0));
    CHECK(std::max(lo[1], hi[1]) == doctest::Approx(1.0));
    CHECK(J.generators.size() == 2 + cfg.subdifferential_samples);
  }
  {
    // p_i = sign(x_i) |x_i|^(p-1) / ||x||^(p-1)
    const double p = 3.0;
    const double expect = 1.0 / std::pow(std::cbrt(2.0), p - 1);
    const auto J = support_functionals(NormedSpace::lp(p, 2), Vector{1, 1}, cfg);
    REQUIRE(J.generators.size() == 1);
    CHECK(J.generators[0][0] == doctest::Approx(expect).epsilon(1e-12));
    CHECK(J.generators[0][1] == doctest::Approx(expect).epsilon(1e-12));
    CHECK(expect == doctest::Approx(0.629961).epsilon(1e-6));
  }
  CHECK_THROWS_AS(support_functionals(NormedSpace::l2(2), Vector{0, 0}, cfg),
                  std::invalid_argument);
}

TEST_CASE("support functional invariants") {
  const SampleConfig cfg;
  for (const auto& s : test_spaces()) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 300; ++i) {
      const Vector x = gaussian(rng, s.dim());
      const auto J = support_functionals(s, x, cfg);
      const double nx = s.norm(x);
      REQUIRE(!J.generators.empty());
      for (const auto& p : J.generators) {
        CHECK(std::abs(s.dual_norm(p) - 1.0) <= 1e-9);
        CHECK(std::abs(dot(p, x) / nx - 1.0) <= 1e-9);
      }
    }
  }
}

TEST_CASE("support functionals at polygon vertices span the normal cone") {
  const SampleConfig cfg;
  const auto poly = random_polygon(3);
  const auto& d = std::get<PolygonDescriptor>(poly.descriptor());
  for (std::size_t i = 0; i < d.vertices.size(); ++i) {
    const Vector v{d.vertices[i][0], d.vertices[i][1]};
    const auto J = support_functionals(poly, v, cfg);
    CHECK(J.extreme_count == 2);
    const std::size_t prev = (i + d.normals.size() - 1) % d.normals.size();
    // the two facet functionals meeting at the vertex, in either order
    auto same = [](const Vector& a, const Point2& b) {
      return std::abs(a[0] - b[0]) < 1e-9 && std::abs(a[1] - b[1]) < 1e-9;
    };
    const auto& f = J.generators.front();
    const auto& b = J.generators.back();
    CHECK(((same(f, d.normals[i]) && same(b, d.normals[prev])) ||
           (same(b, d.normals[i]) && same(f, d.normals[prev]))));
  }
}

TEST_CASE("quasiorthogonality criterion") {
  const SampleConfig cfg;
  CHECK(is_quasiorthogonal(NormedSpace::l2(2), Vector{0, 1}, Vector{1, 0}, cfg));
  CHECK(is_quasiorthogonal(NormedSpace::l1(2), Vector{1, -1}, Vector{1, 0}, cfg));
  CHECK_FALSE(is_quasiorthogonal(NormedSpace::l1(2), Vector{1, 0.5}, Vector{1, 0}, cfg));
  // the l1 counterexample: t = -0.5 gives ||(0.5, -0.25)||_1 = 0.75 < 1
  CHECK(NormedSpace::l1(2).norm(Vector{0.5, -0.25}) == doctest::Approx(0.75));
  CHECK(min_along_line(NormedSpace::l1(2), Vector{1, 0}, Vector{1, 0.5}, 1e-12) < 1.0);
  CHECK_THROWS_AS(is_quasiorthogonal(NormedSpace::l2(2), Vector{0, 0}, Vector{1, 0}, cfg),
                  std::invalid_argument);
}

TEST_CASE("make_quasiorthogonal examples") {
  {
    const auto y = make_quasiorthogonal(NormedSpace::l2(2), Vector{1, 0}, Vector{1, 0},
                                        Vector{1, 1});
    CHECK(y[0] == doctest::Approx(0.0));
    CHECK(y[1] == doctest::Approx(1.0));
  }
  {
    // raw (-1, 1) has l1 norm 2
    const auto y = make_quasiorthogonal(NormedSpace::l1(2), Vector{1, 0}, Vector{1, 1},
                                        Vector{0, 1});
    CHECK(y[0] == doctest::Approx(-0.5));
    CHECK(y[1] == doctest::Approx(0.5));
    CHECK(is_quasiorthogonal(NormedSpace::l1(2), y, Vector{1, 0}, SampleConfig{}));
  }
  {
    const auto y = make_quasiorthogonal(NormedSpace::linf(2), Vector{1, 1}, Vector{1, 0},
                                        Vector{0, 1});
    CHECK(y[0] == doctest::Approx(0.0));
    CHECK(y[1] == doctest::Approx(1.0));
    CHECK(min_along_line(NormedSpace::linf(2), Vector{1, 1}, y, 1e-12) ==
          doctest::Approx(1.0).epsilon(1e-9));
  }
  CHECK_THROWS_AS(make_quasiorthogonal(NormedSpace::l2(2), Vector{1, 0}, Vector{0, 1},
                                       Vector{1, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_quasiorthogonal(NormedSpace::l2(2), Vector{1, 0}, Vector{1, 0},
                                       Vector{2, 0}),
                  std::invalid_argument);
}

TEST_CASE("constructed directions are quasiorthogonal") {
  const SampleConfig cfg;
  for (const auto& s : test_spaces()) {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 1000; ++i) {
      const Vector x = gaussian(rng, s.dim());
      const Vector w = gaussian(rng, s.dim());
      const auto J = support_functionals(s, x, cfg);
      const auto& p = J.generators[i % J.generators.size()];
      const Vector y = make_quasiorthogonal(s, x, p, w);
      CHECK(std::abs(s.norm(y) - 1.0) < 1e-12);
      CHECK(is_quasiorthogonal(s, y, x, cfg));
    }
  }
}

TEST_CASE("metric projection") {
  {
    const auto z = metric_projection(NormedSpace::l2(2), Vector{2, 3}, Vector{1, 0}, Vector{1, 0});
    CHECK(z[0] == doctest::Approx(0.0));
    CHECK(z[1] == doctest::Approx(3.0));
  }
  {
    const auto s = NormedSpace::linf(2);
    const auto z = metric_projection(s, Vector{-1, 1}, Vector{1, 1}, Vector{1, 0});
    CHECK(z[0] == doctest::Approx(0.0));
    CHECK(z[1] == doctest::Approx(2.0));
    CHECK(s.norm(z) == doctest::Approx(2.0));
  }
  {
    // an interior functional of the l1 corner at e1
    const auto z = metric_projection(NormedSpace::l1(2), Vector{0, 0.3}, Vector{1, 0},
                                     Vector{1, 0.2});
    CHECK(z[0] == doctest::Approx(-0.06));
  }
  const auto fixed = metric_projection(NormedSpace::l1(2), Vector{0, 5}, Vector{1, 0},
                                       Vector{1, 0});
  CHECK(fixed == Vector{0, 5});
  CHECK_THROWS_AS(metric_projection(NormedSpace::l2(2), Vector{1, 1}, Vector{2, 0}, Vector{1, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(metric_projection(NormedSpace::l2(2), Vector{1, 1}, Vector{1, 0}, Vector{0, 1}),
                  std::invalid_argument);
}

TEST_CASE("metric projection is idempotent") {
  const SampleConfig cfg;
  for (const auto& s : test_spaces()) {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 200; ++i) {
      Vector y = gaussian(rng, s.dim());
      y = scaled(y, 1.0 / s.norm(y));
      const auto J = support_functionals(s, y, cfg);
      const auto& p = J.generators.front();
      const Vector x = gaussian(rng, s.dim());
      const Vector z = metric_projection(s, x, y, p);
      CHECK(std::abs(dot(p, z)) <= 1e-9);
      const Vector zz = metric_projection(s, z, y, p);
      CHECK(s.norm(sub(zz, z)) <= 1e-9);
    }
  }
}

TEST_CASE("central sections") {
  const auto plane = central_section(NormedSpace::l2(3), Vector{1, 0, 0}, Vector{0, 1, 0});
  CHECK(plane.dim() == 2);
  std::mt19937_64 rng(29);
  for (int i = 0; i < 100; ++i) {
    const Vector x = gaussian(rng, 2);
    CHECK(plane.norm(x) == doctest::Approx(NormedSpace::l2(2).norm(x)).epsilon(1e-14));
  }
  const double r = std::sqrt(0.5);
  const auto hex = central_section(NormedSpace::linf(3), Vector{r, r, 0}, Vector{0, 0, 1});
  CHECK(hex.norm(Vector{1, 0}) == doctest::Approx(r));
  CHECK(hex.norm(Vector{3, 0}) == doctest::Approx(3 * r));
  CHECK(hex.norm(Vector{0, 1}) == doctest::Approx(1.0));
  CHECK_THROWS_AS(central_section(NormedSpace::l2(3), Vector{1, 0, 0}, Vector{2, 0, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(central_section(NormedSpace::l2(3), Vector{1, 0}, Vector{0, 1}),
                  std::invalid_argument);
}

TEST_CASE("sphere points") {
  const auto p = sphere_point(NormedSpace::l2(2), std::numbers::pi / 2);
  CHECK(p[0] == doctest::Approx(0.0));
  CHECK(p[1] == doctest::Approx(1.0));
  const auto c = sphere_point(NormedSpace::linf(2), std::numbers::pi / 4);
  CHECK(c[0] == doctest::Approx(1.0));
  CHECK(c[1] == doctest::Approx(1.0));
  for (const auto& s : test_spaces()) {
    if (s.dim() != 2) continue;
    for (int k = 0; k < 64; ++k)
      CHECK(std::abs(s.norm(sphere_point(s, 0.1 * k)) - 1.0) <= 1e-12);
  }
  CHECK_THROWS_AS(sphere_point(NormedSpace::l2(3), 0.0), std::invalid_argument);
}

TEST_CASE("sphere sampling keeps kink angles") {
  const auto poly = random_polygon(5);
  const auto angles = sphere_sample_angles(poly, 64);
  for (double k : poly.kink_angles()) {
    bool found = false;
    for (double a : angles) found = found || std::abs(a - k) < 1e-15;
    CHECK(found);
  }
  CHECK(std::is_sorted(angles.begin(), angles.end()));
}

TEST_CASE("normalization distance bound on seeded pairs") {
  for (const auto& s : test_spaces()) {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 1000; ++i) {
      const Vector x = gaussian(rng, s.dim()), y = gaussian(rng, s.dim());
      const double nx = s.norm(x), ny = s.norm(y);
      CHECK(s.norm(combine(1 / nx, x, -1 / ny, y)) <= 2 * s.norm(sub(x, y)) / nx + 1e-12);
    }
  }
}
