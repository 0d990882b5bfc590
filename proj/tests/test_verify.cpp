#include <doctest.h>

#include <cmath>
#include <set>

#include "supmod/norm_core.hpp"
#include "supmod/verify.hpp"

using namespace supmod;

namespace {

const ReportEntry* find(const InequalityReport& rep, const std::string& id, double param) {
  for (const auto& e : rep.entries)
    if (e.check_id == id && std::abs(e.param - param) < 1e-12) return &e;
  return nullptr;
}

const ReportEntry* find(const InequalityReport& rep, const std::string& id) {
  for (const auto& e : rep.entries)
    if (e.check_id == id) return &e;
  return nullptr;
}

Vector named(const Witness& w, const std::string& name) {
  for (const auto& [k, v] : w)
    if (k == name) return v;
  FAIL("missing witness component " << name);
  return {};
}

}  // namespace

TEST_CASE("registry ids and domains") {
  const auto& reg = inequality_registry();
  std::set<std::string> ids;
  for (const auto& c : reg) {
    CHECK(ids.insert(c.check_id).second);
    CHECK(c.domain_lo <= c.domain_hi);
    CHECK(!c.description.empty());
  }
  for (const char* id :
       {"thm4.1-left", "thm4.1-right", "lem4.2", "lem4.3", "thm5.1-left", "thm5.1-right",
        "cor5.2-left", "cor5.2-right", "cor5.3-left", "cor5.3-right", "thm6.1-left",
        "thm6.1-right", "lem6.3-left", "lem6.3-right", "lem3.3-zero", "lem3.3-superlinear",
        "lem3.3-convex", "lem3.3-endpoint"})
    CHECK(ids.count(id) == 1);
  for (const auto& c : reg) {
    if (c.check_id == "lem4.2" || c.check_id.rfind("cor5.2", 0) == 0) CHECK(c.domain_hi == 0.5);
    if (c.check_id == "thm5.1-right") CHECK(c.domain_hi == doctest::Approx(2.0 / 3.0));
  }
}

TEST_CASE("make_entry status") {
  CHECK(make_entry("a", "s", 0.1, 1.0, 2.0, 0.0).status == CheckStatus::Pass);
  CHECK(make_entry("a", "s", 0.1, 2.0, 1.0, 0.5).status == CheckStatus::Fail);
  CHECK(make_entry("a", "s", 0.1, 1.2, 1.0, 0.5).status == CheckStatus::Pass);
  CHECK(make_entry("a", "s", 0.1, NAN, 1.0, 0.5).status == CheckStatus::Degenerate);
  const auto e = make_entry("a", "s", 0.1, 1.0, 3.0, 0.0);
  CHECK(e.margin == 2.0);
  CHECK(to_string(CheckStatus::Degenerate) == "degenerate");
}

TEST_CASE("Euclidean plane: supporting moduli sit between convexity values") {
  const SampleConfig cfg;
  const std::vector<double> g{0.25, 0.5, 0.75};
  const auto rep = run_checks(NormedSpace::l2(2), g, cfg);
  const auto* left = find(rep, "thm4.1-left", 0.5);
  const auto* right = find(rep, "thm4.1-right", 0.5);
  REQUIRE(left);
  REQUIRE(right);
  CHECK(left->lhs == doctest::Approx(1 - std::sqrt(1 - 0.0625)).epsilon(1e-6));  // 0.0317542
  CHECK(left->rhs == doctest::Approx(0.1339746).epsilon(1e-6));
  CHECK(right->lhs == doctest::Approx(0.1339746).epsilon(1e-6));
  CHECK(right->rhs == doctest::Approx(0.1339746).epsilon(1e-6));
  CHECK(left->status == CheckStatus::Pass);
  CHECK(right->status == CheckStatus::Pass);
  CHECK(rep.summary().fail == 0);
  CHECK(rep.space_id == "l2:2");
  CHECK(rep.config_fingerprint == cfg.fingerprint());
}

TEST_CASE("out-of-domain grid points are degenerate") {
  const SampleConfig cfg;
  const std::vector<double> g{0.4, 0.6, 0.7};
  const auto rep = run_checks(NormedSpace::linf(2), g, cfg);
  for (double r : g) {
    const auto* e = find(rep, "lem4.2", r);
    REQUIRE(e);
    CHECK(e->status == (r <= 0.5 ? CheckStatus::Pass : CheckStatus::Degenerate));
  }
  const auto* e = find(rep, "thm5.1-right", 0.7);
  REQUIRE(e);
  CHECK(e->status == CheckStatus::Degenerate);
  CHECK(std::isnan(e->lhs));
  CHECK(std::isnan(e->rhs));
}

TEST_CASE("square: Banas modulus against the plus modulus") {
  const SampleConfig cfg;
  const auto rep = run_checks(NormedSpace::linf(2), std::vector<double>{0.4}, cfg);
  const auto* e = find(rep, "thm5.1-left", 0.4);
  REQUIRE(e);
  // rho_banas(0.8) = 0.4 through the corner pair (1, 0.2), (0.2, 1); lambda_plus(0.4) = 0.4
  CHECK(e->lhs == doctest::Approx(0.4).epsilon(1e-6));
  CHECK(e->rhs == doctest::Approx(0.4).epsilon(1e-6));
  CHECK(e->status == CheckStatus::Pass);
  CHECK(rep.summary().fail == 0);
}

TEST_CASE("per-space checks appear once") {
  const SampleConfig cfg;
  const auto rep = run_checks(NormedSpace::lp(3, 2), std::vector<double>{0.2, 0.4}, cfg);
  for (const char* id : {"thm6.1-left", "thm6.1-right", "thm6.1-bound", "lem3.3-zero",
                         "lem3.3-endpoint"}) {
    int n = 0;
    for (const auto& e : rep.entries) n += e.check_id == id;
    CHECK(n == 1);
  }
  CHECK(rep.summary().fail == 0);
}

TEST_CASE("run_checks rejects bad grids") {
  const SampleConfig cfg;
  CHECK_THROWS_AS(run_checks(NormedSpace::l2(2), std::vector<double>{1.2}, cfg),
                  std::invalid_argument);
  CHECK_THROWS_AS(run_checks(NormedSpace::l2(2), std::vector<double>{0.5, 0.3}, cfg),
                  std::invalid_argument);
}

TEST_CASE("brute force examples") {
  CHECK(brute_force_modulus(NormedSpace::l2(2), ModulusKind::Delta, 1.0, 4096) ==
        doctest::Approx(1 - std::sqrt(3.0) / 2).epsilon(1e-3));
  CHECK(std::abs(brute_force_modulus(NormedSpace::linf(2), ModulusKind::LambdaMinus, 0.7, 1024)) <=
        1e-6);
  CHECK(brute_force_modulus(NormedSpace::l2(2), ModulusKind::Rho, 0.5, 1024) ==
        doctest::Approx(std::sqrt(1.25) - 1).epsilon(1e-4));
  CHECK(brute_force_modulus(NormedSpace::l2(2), ModulusKind::LambdaPlus, 0.6, 2048) ==
        doctest::Approx(0.2).epsilon(1e-3));
}

TEST_CASE("brute force errors") {
  CHECK_THROWS_AS(brute_force_modulus(NormedSpace::l2(3), ModulusKind::Delta, 1.0, 512),
                  std::invalid_argument);
  CHECK_THROWS_AS(brute_force_modulus(NormedSpace::l2(2), ModulusKind::Delta, 1.0, 100),
                  std::invalid_argument);
  CHECK_THROWS_AS(brute_force_modulus(NormedSpace::l2(2), ModulusKind::Delta, -1.0, 512),
                  std::invalid_argument);
}

TEST_CASE("property suite") {
  for (const auto& s : {NormedSpace::l2(2), NormedSpace::lp(1.5, 2), NormedSpace::linf(3)}) {
    INFO(s.id());
    const auto rep = property_suite(s, 200, 7);
    CHECK(rep.summary().fail == 0);
    CHECK(rep.entries.size() == 3);
    const auto* chords = find(rep, "lem2.2");
    REQUIRE(chords);
    // the reported worst case re-evaluates from its witness
    const Vector a = named(chords->witness, "a"), b = named(chords->witness, "b");
    const Vector c = named(chords->witness, "c"), d = named(chords->witness, "d");
    const Vector x = named(chords->witness, "x");
    CHECK(std::min(s.norm(sub(c, x)), s.norm(sub(x, d))) == doctest::Approx(chords->lhs));
    CHECK(std::max(s.norm(sub(a, x)), s.norm(sub(x, b))) == doctest::Approx(chords->rhs));

    const auto* norm = find(rep, "lem2.4");
    REQUIRE(norm);
    const Vector nx = named(norm->witness, "x"), ny = named(norm->witness, "y");
    CHECK(2 * s.norm(sub(nx, ny)) / s.norm(nx) == doctest::Approx(norm->rhs));
  }
  const auto a = property_suite(NormedSpace::lp(3, 2), 50, 3);
  const auto b = property_suite(NormedSpace::lp(3, 2), 50, 3);
  REQUIRE(a.entries.size() == b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) CHECK(a.entries[i].lhs == b.entries[i].lhs);
  CHECK_THROWS_AS(property_suite(NormedSpace::l2(2), 0, 1), std::invalid_argument);
}

TEST_CASE("explore") {
  const SampleConfig cfg;
  CHECK(explore_conjecture(std::vector<double>{}, cfg).empty());
  const auto rows = explore_conjecture(std::vector<double>{2.0}, cfg);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].xi == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(std::abs(rows[0].gap) < 1e-6);
  CHECK(rows[0].s == doctest::Approx((1 - rows[0].lambda_minus_1) / 2));
  CHECK_THROWS_AS(explore_conjecture(std::vector<double>{1.0}, cfg), std::invalid_argument);
}

TEST_CASE("determinism") {
  const SampleConfig cfg;
  const std::vector<double> g{0.3, 0.6};
  const auto a = run_checks(random_polygon(5), g, cfg);
  const auto b = run_checks(random_polygon(5), g, cfg);
  REQUIRE(a.entries.size() == b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    CHECK(a.entries[i].check_id == b.entries[i].check_id);
    if (!std::isnan(a.entries[i].lhs)) CHECK(a.entries[i].lhs == b.entries[i].lhs);
  }
}

TEST_CASE("random polygons") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto p = random_polygon(seed);
    const auto& d = std::get<PolygonDescriptor>(p.descriptor());
    CHECK(d.vertices.size() >= 4);
    CHECK(d.vertices.size() % 2 == 0);
    CHECK(random_polygon(seed).id() == p.id());
    for (const auto& v : d.vertices) CHECK(p.norm(Vector{v[0], v[1]}) == doctest::Approx(1.0));
  }
  CHECK(random_polygon(1).id() != random_polygon(2).id());
  CHECK(splitmix64(0) != splitmix64(1));
}
