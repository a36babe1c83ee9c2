#include <catch2/catch_amalgamated.hpp>

#include "zmset/constructions.hpp"
#include "zmset/group_order.hpp"

using namespace zmset;

TEST_CASE("naive closure orders") {
  CHECK(group_order(build_projective_line(4), OrderStrategy::NaiveClosure) == 60);
  CHECK(group_order(build_projective_line(8), OrderStrategy::NaiveClosure) == 504);
}

TEST_CASE("closure cap") {
  MoufangSet m = build_projective_line(4);
  CHECK_THROWS_AS(naive_closure(little_projective_generators(m), 10),
                  std::runtime_error);
}

TEST_CASE("Schreier-Sims agrees with naive closure") {
  for (int q : {4, 8}) {
    MoufangSet m = build_projective_line(q);
    CHECK(group_order(m, OrderStrategy::SchreierSims) ==
          group_order(m, OrderStrategy::NaiveClosure));
  }
  MoufangSet s = build_suzuki(8);
  CHECK(group_order(s, OrderStrategy::SchreierSims) == 29120);
}

TEST_CASE("MSuz(8) has the Suzuki group order") {
  CHECK(group_order(build_suzuki(8), OrderStrategy::NaiveClosure) ==
        29120); // (q^2+1) q^2 (q-1), q = 8
}

TEST_CASE("stabilizer chain membership") {
  MoufangSet m = build_projective_line(4);
  StabilizerChain chain(little_projective_generators(m), {m.infinity(), 0});
  CHECK(chain.contains(m.mu(1)));
  CHECK(chain.contains(m.hua(2)));
  CHECK(chain.contains(Permutation(m.num_points())));
  // an odd permutation of 5 points is not in PSL(2,4) = A5
  std::vector<pt_t> img{1, 0, 2, 3, 4};
  CHECK_FALSE(chain.contains(Permutation(img)));
}

TEST_CASE("small sanity groups") {
  // cyclic group of order 3 on 3 points
  Permutation c3(std::vector<pt_t>{1, 2, 0});
  CHECK(naive_closure({c3}).order == 3);
  CHECK(StabilizerChain({c3}).order() == 3);
  // symmetric group S4
  Permutation t(std::vector<pt_t>{1, 0, 2, 3});
  Permutation c(std::vector<pt_t>{1, 2, 3, 0});
  CHECK(naive_closure({t, c}).order == 24);
  CHECK(StabilizerChain({t, c}).order() == 24);
  // identity only
  CHECK(StabilizerChain({Permutation(4)}).order() == 1);
}
