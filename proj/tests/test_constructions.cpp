#include <catch2/catch_amalgamated.hpp>

#include "zmset/constructions.hpp"
#include "zmset/moufang_set.hpp"

using namespace zmset;

namespace {
const FieldSpec gf8(3, 0b1011, 2, true);
}

TEST_CASE("suzuki norm") {
  CHECK(suzuki_norm(gf8, 0, 2) == 6); // N(0,b) = b^theta
  CHECK(suzuki_norm(gf8, 1, 1) == 1);
  CHECK(suzuki_norm(gf8, 2, 3) == 4);
  // anisotropic: zero only at the origin
  for (int n : {3, 5}) {
    const FieldSpec f = FieldSpec::make_tits(n);
    for (fe_t a = 0; a < f.order(); ++a)
      for (fe_t b = 0; b < f.order(); ++b)
        REQUIRE((suzuki_norm(f, a, b) == 0) == (a == 0 && b == 0));
  }
  // factorization N(a,b) = (b/a)^(1+theta) + (a^theta + b/a)^(1+theta), a != 0
  for (fe_t a = 1; a < 8; ++a)
    for (fe_t b = 0; b < 8; ++b) {
      const fe_t r = gf8.div(b, a);
      REQUIRE(suzuki_norm(gf8, a, b) ==
              gf8.add(gf8.one_plus_theta(r),
                      gf8.one_plus_theta(gf8.add(gf8.theta(a), r))));
    }
}

TEST_CASE("suzuki norm0") {
  for (fe_t b = 0; b < 8; ++b) CHECK(suzuki_norm0(gf8, 0, b) == b);
  for (fe_t a = 0; a < 8; ++a)
    CHECK(suzuki_norm0(gf8, a, 0) == gf8.one_plus_theta(a));
  CHECK(suzuki_norm0(gf8, 2, 3) == 6);
  // N = N0^theta everywhere
  for (fe_t a = 0; a < 8; ++a)
    for (fe_t b = 0; b < 8; ++b)
      REQUIRE(gf8.theta(suzuki_norm0(gf8, a, b)) == suzuki_norm(gf8, a, b));
}

TEST_CASE("suzuki tau point images") {
  RootGroup u = RootGroup::suzuki(gf8);
  const Permutation tau = suzuki_tau(u);
  CHECK(tau[0] == u.size());
  CHECK(tau[u.size()] == 0);
  CHECK(tau[u.pack(0, 2)] == u.pack(6, 0));
  CHECK(tau[u.pack(2, 0)] == u.pack(0, 4));
  CHECK(tau[u.pack(1, 1)] == u.pack(1, 1)); // N(1,1) = 1
}

TEST_CASE("projective line builder") {
  MoufangSet m4 = build_projective_line(4);
  CHECK(m4.num_points() == 5);
  CHECK(m4.verify_moufang().pass);

  MoufangSet m8 = build_projective_line(8);
  CHECK(m8.num_points() == 9);
  CHECK(m8.verify_moufang().pass);

  CHECK_THROWS_AS(build_projective_line(2), std::invalid_argument);
  CHECK_THROWS_AS(build_projective_line(6), std::invalid_argument);
}

TEST_CASE("suzuki builder") {
  MoufangSet m = build_suzuki(8);
  CHECK(m.num_points() == 65);
  CHECK((m.tau() * m.tau()).is_identity());

  CHECK_THROWS_AS(build_suzuki(16), std::invalid_argument);
  CHECK_THROWS_AS(build_suzuki(2), std::invalid_argument);
}

TEST_CASE("suzuki builder at q = 32") {
  MoufangSet m = build_suzuki(32);
  CHECK(m.num_points() == 1025);
  CHECK((m.tau() * m.tau()).is_identity()); // exhaustive by representation
  CHECK(m.mu_swap_ok());
}

TEST_CASE("partition classification") {
  RootGroup u = RootGroup::suzuki(gf8);
  CHECK(partition_classify(u, u.pack(0, 5)).tag == PartitionTag::Center);
  CHECK(partition_classify(u, u.pack(1, 1)).tag == PartitionTag::SimZ);
  CHECK(partition_classify(u, u.pack(1, 0)).tag == PartitionTag::NegSimZ);
  CHECK(partition_classify(u, 0).tag == PartitionTag::Zero);

  const auto mixed = partition_classify(u, u.pack(6, 2));
  REQUIRE(mixed.tag == PartitionTag::Mixed);
  REQUIRE(mixed.decomposition.has_value());
  CHECK(mixed.decomposition->first == 4);
  CHECK(mixed.decomposition->second == 2);
  // recomposition: (s,0) + ~(0,t^(1+theta))
  const fe_t s = mixed.decomposition->first, t = mixed.decomposition->second;
  CHECK(u.add(u.pack(s, 0), u.pack(t, gf8.one_plus_theta(t))) == u.pack(6, 2));
}

TEST_CASE("partition class sizes") {
  // classify() throws on any recomposition mismatch, so a full sweep also
  // re-verifies every mixed decomposition
  RootGroup u8 = RootGroup::suzuki(gf8);
  CHECK(partition_sizes(u8) == std::array<std::uint64_t, 5>{1, 7, 7, 7, 42});

  RootGroup u32 = RootGroup::suzuki(FieldSpec::make_tits(5));
  CHECK(partition_sizes(u32) ==
        std::array<std::uint64_t, 5>{1, 31, 31, 31, 930});
}

TEST_CASE("sim classes match the partition coordinates") {
  MoufangSet m = build_suzuki(8);
  const RootGroup &u = m.root_group();
  for (idx_t z : u.involutions()) {
    CHECK(partition_classify(u, m.sim(z)).tag == PartitionTag::SimZ);
    CHECK(partition_classify(u, u.neg(m.sim(z))).tag == PartitionTag::NegSimZ);
    CHECK(u.dbl(m.sim(z)) == z); // (~a)*2 = a
  }
}
