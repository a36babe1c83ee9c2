#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "zmset/constructions.hpp"
#include "zmset/lemma_suite.hpp"

using namespace zmset;

namespace {
const MoufangSet &suz8() {
  static const MoufangSet m = build_suzuki(8);
  return m;
}
const MoufangSet &psl8() {
  static const MoufangSet m = build_projective_line(8);
  return m;
}
} // namespace

TEST_CASE("registry shape") {
  const auto &reg = check_registry();
  CHECK(reg.size() >= 45);
  std::set<std::string> ids;
  for (const auto &c : reg) {
    CHECK(ids.insert(c.id).second); // unique ids
    CHECK_FALSE(c.statement.empty());
  }
  // sorted by id
  for (std::size_t i = 1; i < reg.size(); ++i)
    CHECK(reg[i - 1].id < reg[i].id);
  CHECK(find_check("L3.1a") != nullptr);
  CHECK(find_check("no-such-check") == nullptr);
  CHECK_THROWS_AS(run_check("no-such-check", suz8()), std::invalid_argument);
}

TEST_CASE("single checks against frozen expectations") {
  const auto r1 = run_check("L3.1a", suz8());
  CHECK(r1.status == CheckStatus::Pass);
  CHECK(r1.cases_checked == 63);

  const auto r2 = run_check("P3.14", psl8());
  CHECK(r2.status == CheckStatus::Vacuous); // every mu-fiber is a singleton
  CHECK(r2.cases_checked == 0);

  const auto r3 = run_check("SUZ5.10b", suz8());
  CHECK(r3.status == CheckStatus::Pass);
  CHECK(r3.cases_checked == 7); // one case per involution
  // direct witness for one case
  const idx_t e = suz8().root_group().pack(0, 1);
  CHECK((suz8().mu(e) * suz8().alpha(e)).order() == 5);
}

TEST_CASE("applicability routing") {
  CHECK(run_check("SUZ5.8", psl8()).status == CheckStatus::Inapplicable);
  CHECK(run_check("T6.1d", psl8()).status == CheckStatus::Inapplicable);
  CHECK(run_check("L3.13a", suz8()).status == CheckStatus::Inapplicable);
  // closure-feasible at desk scale, infeasible at q = 32
  CHECK(run_check("L3.1d", suz8()).status == CheckStatus::Pass);
  MoufangSet big = build_suzuki(32);
  CHECK(run_check("L3.1d", big).status == CheckStatus::Inapplicable);
  CHECK(run_check("L4.4", big).status == CheckStatus::Inapplicable);
}

TEST_CASE("cases_checked equals the closed-form domain size") {
  CHECK(run_check("L3.1a", psl8()).cases_checked == 7);
  CHECK(run_check("E3A", suz8()).cases_checked == 63ull * 62);
  CHECK(run_check("L3.1g", suz8()).cases_checked == 63ull * 7);
  CHECK(run_check("SUZ5.5c", suz8()).cases_checked == 63ull * 63);
  CHECK(run_check("SUZ5.12", suz8()).cases_checked == 7ull * 6);
  CHECK(run_check("L3.4", suz8()).cases_checked == 7ull * 7);
  CHECK(run_check("L3.1d", suz8()).cases_checked == 29120);
  CHECK(run_check("L4.4", suz8()).cases_checked == 455); // involutions in Sz(8)
  CHECK(run_check("SUZ5.19d", suz8()).cases_checked == 7ull * 6);
}

TEST_CASE("full suite on the projective line over GF(8)") {
  const auto results = run_all_checks(psl8());
  CHECK(results.size() == check_registry().size());
  CHECK(suite_passed(results, RootGroupKind::Abelian));
  std::set<std::string> vacuous;
  for (const auto &r : results) {
    INFO(r.check_id << ": " << to_string(r.status) << " "
                    << r.counterexample.value_or(""));
    CHECK(r.status != CheckStatus::Fail);
    if (r.status == CheckStatus::Vacuous) {
      vacuous.insert(r.check_id);
      CHECK(vacuous_expected(r.check_id, RootGroupKind::Abelian));
    }
  }
  // the singleton mu-fibers make exactly these quantifier domains empty
  CHECK(vacuous == std::set<std::string>{"L3.10b", "L3.13a", "L3.13b",
                                         "L3.13c", "L3.13d", "L3.13e",
                                         "L3.13f", "L3.13g", "L3.13h",
                                         "L3.13i", "L3.1l", "L3.15", "P3.14"});
}

TEST_CASE("full suite on the Suzuki Moufang set over GF(8)") {
  const auto results = run_all_checks(suz8());
  CHECK(suite_passed(results, RootGroupKind::SuzukiTwoGroup));
  std::set<std::string> vacuous, inapplicable;
  for (const auto &r : results) {
    INFO(r.check_id << ": " << to_string(r.status) << " "
                    << r.counterexample.value_or(""));
    CHECK(r.status != CheckStatus::Fail);
    if (r.status == CheckStatus::Vacuous) {
      vacuous.insert(r.check_id);
      CHECK(vacuous_expected(r.check_id, RootGroupKind::SuzukiTwoGroup));
    }
    if (r.status == CheckStatus::Inapplicable) inapplicable.insert(r.check_id);
  }
  // no special elements: the special-central domains are empty
  CHECK(vacuous == std::set<std::string>{"L3.10a", "L3.11", "L3.15", "L3.9c",
                                         "P3.14", "P3.17-CONCL"});
  // only the wrong-family checks are skipped at q = 8
  for (const auto &id : inapplicable) {
    INFO(id);
    CHECK(find_check(id)->applies == Applicability::ProjectiveLine);
  }
}

TEST_CASE("determinism") {
  const auto a = run_all_checks(psl8());
  const auto b = run_all_checks(psl8());
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].check_id == b[i].check_id);
    CHECK(a[i].status == b[i].status);
    CHECK(a[i].cases_checked == b[i].cases_checked);
    CHECK(a[i].counterexample == b[i].counterexample);
  }
}

TEST_CASE("suite_passed flags unexpected vacuity and failures") {
  std::vector<CheckResult> fake;
  fake.push_back({"L3.1a", CheckStatus::Pass, 7, std::nullopt, 0.0});
  CHECK(suite_passed(fake, RootGroupKind::Abelian));
  fake.push_back({"L3.1a", CheckStatus::Vacuous, 0, std::nullopt, 0.0});
  CHECK_FALSE(suite_passed(fake, RootGroupKind::Abelian)); // not whitelisted
  fake.pop_back();
  fake.push_back({"P3.14", CheckStatus::Vacuous, 0, std::nullopt, 0.0});
  CHECK(suite_passed(fake, RootGroupKind::Abelian));
  fake.push_back({"E3A", CheckStatus::Fail, 1, "witness", 0.0});
  CHECK_FALSE(suite_passed(fake, RootGroupKind::Abelian));
}

TEST_CASE("checks detect a corrupted structure") {
  // swapping two tau-images off {0, infinity} must break the catalog
  RootGroup u = RootGroup::suzuki(FieldSpec::make_tits(3));
  Permutation tau = suzuki_tau(u);
  auto img = tau.images();
  std::swap(img[u.pack(2, 3)], img[u.pack(4, 5)]);
  MoufangSet bad(u, Permutation(img));
  bool some_failed = false;
  for (const char *id : {"SUZ5.19d", "E3A", "SUZ5.5d"}) {
    const auto r = run_check(id, bad);
    some_failed |= (r.status == CheckStatus::Fail);
    if (r.status == CheckStatus::Fail) CHECK(r.counterexample.has_value());
  }
  CHECK(some_failed);
}
