#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "zmset/constructions.hpp"
#include "zmset/group_order.hpp"
#include "zmset/moufang_set.hpp"

using namespace zmset;

namespace {

MoufangSet msuz8() { return build_suzuki(8); }
MoufangSet psl2(int q) { return build_projective_line(q); }

// M(F_2): 3 points, tau swaps 0 and infinity and fixes 1. Below the
// builder's q >= 4 floor, constructed by hand.
MoufangSet m_f2() {
  RootGroup u = RootGroup::abelian(FieldSpec::make(1));
  return MoufangSet(u, inversion_tau(u));
}

idx_t pidx(const MoufangSet &m, fe_t a, fe_t b) {
  return m.root_group().pack(a, b);
}

} // namespace

TEST_CASE("alpha maps") {
  MoufangSet m = msuz8();
  CHECK(m.alpha(0).is_identity());
  for (idx_t a = 0; a < m.root_group().size(); ++a)
    CHECK(m.alpha(a)[m.infinity()] == m.infinity());
  CHECK(m.alpha(pidx(m, 2, 3))[pidx(m, 4, 5)] == pidx(m, 6, 3));
}

TEST_CASE("mu maps interchange 0 and infinity") {
  MoufangSet m = msuz8();
  REQUIRE(m.mu_swap_ok());
  for (idx_t a = 1; a < m.root_group().size(); ++a) {
    CHECK(m.mu(a)[0] == m.infinity());
    CHECK(m.mu(a)[m.infinity()] == 0);
  }
  CHECK_THROWS_AS(m.mu(0), std::domain_error);
}

TEST_CASE("mu of the base involution is tau") {
  MoufangSet m = msuz8();
  const idx_t e = pidx(m, 0, 1);
  CHECK(m.mu(e) == m.tau());
  CHECK(m.mu(e)[pidx(m, 2, 0)] == pidx(m, 0, 4));
  // the unique fixed point of mu_e on U is ~e = (1,1)
  const auto fixed = m.mu(e).fixed_points();
  REQUIRE(fixed.size() == 1);
  CHECK(fixed[0] == pidx(m, 1, 1));
}

TEST_CASE("hua maps fix 0 and infinity and equal tau * mu") {
  MoufangSet m = msuz8();
  const FieldSpec &f = m.root_group().spec();
  for (idx_t a = 1; a < m.root_group().size(); ++a) {
    const Permutation h = m.hua(a);
    CHECK(h[0] == 0);
    CHECK(h[m.infinity()] == m.infinity());
    CHECK(h == m.tau() * m.mu(a));
  }
  CHECK_THROWS_AS(m.hua(0), std::domain_error);

  // tau * mu_(a,b) induces h_lambda with lambda = N(a,b)^(2-theta)
  for (idx_t a = 1; a < m.root_group().size(); ++a) {
    const fe_t n = suzuki_norm(f, m.root_group().first(a), m.root_group().second(a));
    const fe_t lambda = f.div(f.sqr(n), f.theta(n));
    const Permutation tm = m.tau() * m.mu(a);
    for (idx_t x = 0; x < m.root_group().size(); ++x)
      REQUIRE(tm[x] == m.root_group().h_lambda(lambda, x));
  }
}

TEST_CASE("sim operator") {
  MoufangSet m = msuz8();
  for (idx_t a = 1; a < m.root_group().size(); ++a)
    CHECK(m.sim(m.sim(a)) == a);
  CHECK(m.sim(pidx(m, 0, 1)) == pidx(m, 1, 1));
  CHECK(m.root_group().neg(m.sim(pidx(m, 0, 1))) == pidx(m, 1, 0));
  CHECK_THROWS_AS(m.sim(0), std::domain_error);

  MoufangSet p = psl2(8);
  for (idx_t a = 1; a < p.root_group().size(); ++a) CHECK(p.sim(a) == a);
}

TEST_CASE("verify_moufang passes on the two families") {
  for (int q : {4, 8}) {
    const auto r = psl2(q).verify_moufang();
    INFO("q=" << q << " " << r.first_counterexample);
    CHECK(r.pass);
  }
  const auto r = msuz8().verify_moufang();
  INFO(r.first_counterexample);
  CHECK(r.pass);
  CHECK(r.maps_checked == 63);
  CHECK(r.cases_checked == 63ull * 64 * 64);
}

TEST_CASE("verify_moufang catches a corrupted tau") {
  RootGroup u = RootGroup::suzuki(FieldSpec(3, 0b1011, 2, true));
  Permutation tau = suzuki_tau(u);
  auto img = tau.images();
  std::swap(img[u.pack(2, 3)], img[u.pack(4, 5)]); // two non-{0,inf} points
  MoufangSet bad(u, Permutation(img));
  const bool tau_squared_id = (bad.tau() * bad.tau()).is_identity();
  const bool verify_ok = bad.verify_moufang().pass;
  CHECK_FALSE((tau_squared_id && verify_ok));
  CHECK_FALSE(verify_ok);
}

TEST_CASE("hua subgroup") {
  MoufangSet m = msuz8();
  const HuaSubgroup h = m.hua_subgroup();
  REQUIRE(h.elements.size() == 7);
  // cyclic: some element has order 7
  bool has_gen = false;
  for (const auto &x : h.elements) has_gen |= (x.order() == 7);
  CHECK(has_gen);
  // acts regularly on the 7 involutions of U
  const auto invs = m.root_group().involutions();
  REQUIRE(invs.size() == 7);
  const idx_t e = invs.front();
  std::set<idx_t> orbit;
  for (const auto &x : h.elements) orbit.insert(static_cast<idx_t>(x[e]));
  CHECK(orbit == std::set<idx_t>(invs.begin(), invs.end()));

  CHECK(psl2(4).hua_subgroup().elements.size() == 3);
}

TEST_CASE("special elements") {
  MoufangSet p = psl2(8);
  for (idx_t a = 1; a < p.root_group().size(); ++a) CHECK(p.is_special(a));

  MoufangSet m = msuz8();
  for (idx_t a = 1; a < m.root_group().size(); ++a) {
    CHECK_FALSE(m.is_special(a));
    if (m.root_group().element_order(a) == 4) CHECK_FALSE(m.is_special(a));
  }
  CHECK_THROWS_AS(m.is_special(0), std::domain_error);
}

TEST_CASE("Zassenhaus predicate") {
  CHECK(msuz8().is_zassenhaus());
  CHECK(psl2(4).is_zassenhaus());
  CHECK_FALSE(m_f2().is_zassenhaus()); // H trivial, not proper
}

TEST_CASE("mu fibers") {
  MoufangSet m = msuz8();
  const auto &fibers = m.mu_fibers();
  REQUIRE(fibers.size() == 7);
  const FieldSpec &f = m.root_group().spec();
  for (const auto &fiber : fibers) {
    REQUIRE(fiber.size() == 9);
    // fiber = norm level set
    const fe_t n0 = suzuki_norm(f, m.root_group().first(fiber[0]),
                                m.root_group().second(fiber[0]));
    for (idx_t a : fiber)
      CHECK(suzuki_norm(f, m.root_group().first(a),
                        m.root_group().second(a)) == n0);
  }
  // -V_a = V_-a and -~a, ~-a lie in V_a
  for (idx_t a = 1; a < m.root_group().size(); ++a) {
    const RootGroup &u = m.root_group();
    CHECK(m.fiber_of(u.neg(a)) == m.fiber_of(u.neg(a)));
    CHECK(m.fiber_of(u.neg(m.sim(a))) == m.fiber_of(a));
    CHECK(m.fiber_of(m.sim(u.neg(a))) == m.fiber_of(a));
    // -V_a = V_{-a} elementwise
    for (idx_t b : fibers[m.fiber_of(a)])
      CHECK(m.fiber_of(u.neg(b)) == m.fiber_of(u.neg(a)));
  }
  // on the projective line every fiber is a singleton
  MoufangSet p = psl2(8);
  for (const auto &fiber : p.mu_fibers()) CHECK(fiber.size() == 1);
}
