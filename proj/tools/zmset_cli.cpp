// Command-line front end: build the two Moufang set families, run
// verifications and the identity check suite, print reports, and export
// permutation generators.
//
// Exit codes: 0 = success / all checks pass, 1 = a verification or check
// failed, 2 = usage or construction error.

#include <atomic>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "zmset/constructions.hpp"
#include "zmset/group_order.hpp"
#include "zmset/io.hpp"
#include "zmset/lemma_suite.hpp"

using namespace zmset;

namespace {

struct Options {
  std::string kind = "psl2";   // psl2 | suzuki
  unsigned q = 8;              // field size
  std::string output = "text"; // text | machine
  std::string strategy = "auto"; // naive | schreier | auto
  unsigned jobs = 1;
  std::vector<std::string> checks;
  std::string element; // for `mu`
};

bool is_power_of_two(unsigned q) { return q >= 2 && (q & (q - 1)) == 0; }

int degree_of(unsigned q) {
  int n = 0;
  while ((1u << n) < q) ++n;
  return n;
}

// throws std::invalid_argument on an inconsistent kind/q combination
MoufangSet build(const Options &o) {
  if (!is_power_of_two(o.q))
    throw std::invalid_argument("q must be a power of 2");
  if (o.kind == "psl2") return build_projective_line(o.q);
  if (o.kind == "suzuki") return build_suzuki(o.q);
  throw std::invalid_argument("kind must be psl2 or suzuki");
}

RootGroupKind kind_of(const MoufangSet &m) { return m.root_group().kind(); }

FieldSpec field_of(const Options &o) {
  if (!is_power_of_two(o.q))
    throw std::invalid_argument("q must be a power of 2");
  const int n = degree_of(o.q);
  if (o.kind == "psl2") {
    if (n < 2) throw std::invalid_argument("psl2 needs q >= 4");
    return FieldSpec::make(n);
  }
  if (o.kind == "suzuki") {
    if (n < 3 || n % 2 == 0)
      throw std::invalid_argument("suzuki needs q = 2^n with n odd >= 3");
    return FieldSpec::make_tits(n);
  }
  throw std::invalid_argument("kind must be psl2 or suzuki");
}

int cmd_field(const Options &o) {
  const FieldSpec f = field_of(o);
  if (o.output == "machine") {
    std::cout << field_json(f).dump() << "\n";
  } else {
    std::cout << "GF(2^" << f.degree() << "), modulus bitmask " << f.modulus()
              << ", theta exponent " << f.theta_exponent()
              << (f.tits() ? " (Tits endomorphism)" : "") << "\n";
  }
  return 0;
}

int cmd_build(const Options &o) {
  const MoufangSet m = build(o);
  const json j = build_report_json(m);
  if (o.output == "machine") {
    std::cout << j.dump() << "\n";
    return 0;
  }
  std::cout << "kind: " << j["kind"].get<std::string>() << "\n"
            << "q: " << o.q << "\n"
            << "|X|: " << j["points"] << "\n"
            << "|U|: " << j["root_group_order"] << "\n"
            << "|Z(U)|: " << j["center_order"] << "\n"
            << "involutions: " << j["involutions"] << "\n"
            << "|H|: " << j["hua_order"] << "\n";
  if (j.contains("partition")) {
    const auto &p = j["partition"];
    std::cout << "partition: " << p["zero"] << "/" << p["center"] << "/"
              << p["sim_center"] << "/" << p["neg_sim_center"] << "/"
              << p["mixed"] << "\n";
  }
  return 0;
}

int cmd_verify(const Options &o) {
  const MoufangSet m = build(o);
  const VerifyReport r = m.verify_moufang();
  if (o.output == "machine") {
    json j{{"pass", r.pass},
           {"maps_checked", r.maps_checked},
           {"cases_checked", r.cases_checked}};
    if (!r.pass) j["counterexample"] = r.first_counterexample;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << (r.pass ? "PASS" : "FAIL") << ": " << r.maps_checked
              << " Hua maps, " << r.cases_checked << " additivity cases\n";
    if (!r.pass) std::cout << "counterexample: " << r.first_counterexample << "\n";
  }
  return r.pass ? 0 : 1;
}

int cmd_mu(const Options &o) {
  const MoufangSet m = build(o);
  const RootGroup &u = m.root_group();
  if (!o.element.empty()) {
    const idx_t a = u.index_of(parse_element(o.element));
    if (a == 0 || a >= u.size())
      throw std::invalid_argument("element must be in U^#");
    const Permutation &mu = m.mu(a);
    if (o.output == "machine") {
      json j{{"element", to_string(u.element(a))},
             {"sim", to_string(u.element(m.sim(a)))},
             {"neg", to_string(u.element(u.neg(a)))},
             {"special", m.is_special(a)},
             {"mu_order", mu.order()}};
      json img = json::array();
      for (std::size_t i = 0; i < mu.degree(); ++i) img.push_back(mu[i]);
      j["mu_images"] = img;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "a = " << to_string(u.element(a)) << ", -a = "
                << to_string(u.element(u.neg(a))) << ", ~a = "
                << to_string(u.element(m.sim(a))) << ", special: "
                << (m.is_special(a) ? "yes" : "no") << ", order(mu_a) = "
                << mu.order() << "\nmu_a images:";
      for (std::size_t i = 0; i < mu.degree(); ++i) std::cout << ' ' << mu[i];
      std::cout << "\n";
    }
    return 0;
  }
  // fiber summary
  const auto &fibers = m.mu_fibers();
  if (o.output == "machine") {
    json arr = json::array();
    for (const auto &fiber : fibers) {
      json f = json::array();
      for (idx_t x : fiber) f.push_back(to_string(u.element(x)));
      arr.push_back(f);
    }
    std::cout << json{{"distinct_mu", fibers.size()}, {"fibers", arr}}.dump()
              << "\n";
  } else {
    std::cout << fibers.size() << " distinct mu-maps on " << (u.size() - 1)
              << " elements\n";
    for (const auto &fiber : fibers) {
      std::cout << "  V:";
      for (idx_t x : fiber) std::cout << ' ' << to_string(u.element(x));
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_partition(const Options &o) {
  if (o.kind != "suzuki")
    throw std::invalid_argument("partition requires --kind suzuki");
  const MoufangSet m = build(o);
  const RootGroup &u = m.root_group();
  const auto sizes = partition_sizes(u);
  if (o.output == "machine") {
    json j{{"zero", sizes[0]},
           {"center", sizes[1]},
           {"sim_center", sizes[2]},
           {"neg_sim_center", sizes[3]},
           {"mixed", sizes[4]}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "zero: " << sizes[0] << "\ncenter^#: " << sizes[1]
              << "\n~center^#: " << sizes[2] << "\n-~center^#: " << sizes[3]
              << "\nmixed: " << sizes[4] << "\n";
  }
  return 0;
}

int cmd_order(const Options &o) {
  const MoufangSet m = build(o);
  OrderStrategy s;
  if (o.strategy == "naive") s = OrderStrategy::NaiveClosure;
  else if (o.strategy == "schreier") s = OrderStrategy::SchreierSims;
  else if (o.strategy == "auto")
    s = (o.kind == "suzuki" && o.q >= 32) ? OrderStrategy::SchreierSims
                                          : OrderStrategy::NaiveClosure;
  else throw std::invalid_argument("strategy must be naive, schreier or auto");
  const std::uint64_t order = group_order(m, s);
  if (o.output == "machine")
    std::cout << json{{"order", order},
                      {"strategy", s == OrderStrategy::SchreierSims
                                       ? "schreier"
                                       : "naive"}}.dump()
              << "\n";
  else
    std::cout << order << "\n";
  return 0;
}

int cmd_export(const Options &o) {
  const MoufangSet m = build(o);
  write_permutations(std::cout, m.root_group(),
                     little_projective_generators(m));
  return 0;
}

int cmd_suite(const Options &o) {
  const MoufangSet m = build(o);
  std::vector<const CheckInfo *> todo;
  if (o.checks.empty()) {
    for (const CheckInfo &c : check_registry()) todo.push_back(&c);
  } else {
    for (const std::string &id : o.checks) {
      const CheckInfo *c = find_check(id);
      if (!c) throw std::invalid_argument("unknown check id: " + id);
      todo.push_back(c);
    }
  }
  m.mu_fibers(); // warm the lazily built fiber cache before going parallel
  std::vector<CheckResult> results(todo.size());
  const unsigned jobs = std::max(1u, o.jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < todo.size(); ++i)
      results[i] = run_check(todo[i]->id, m);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < todo.size(); i = next++)
          results[i] = run_check(todo[i]->id, m);
      });
    for (auto &t : pool) t.join();
  }
  const bool pass = suite_passed(results, kind_of(m));
  if (o.output == "machine")
    std::cout << suite_report_json(results).dump() << "\n";
  else {
    print_suite_table(std::cout, results);
    std::cout << (pass ? "SUITE PASS" : "SUITE FAIL") << "\n";
  }
  return pass ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Finite Zassenhaus Moufang sets with even-order root groups: "
               "construction and exhaustive identity verification"};
  app.require_subcommand(1);

  Options o;
  // shared flags, registered on every subcommand
  auto add_common = [&](CLI::App *sub, bool wants_strategy = false) {
    sub->add_option("--kind", o.kind, "root group family: psl2 | suzuki")
        ->check(CLI::IsMember({"psl2", "suzuki"}));
    sub->add_option("--q", o.q, "field size, a power of 2");
    sub->add_option("--output", o.output, "text | machine")
        ->check(CLI::IsMember({"text", "machine"}));
    sub->add_option("--jobs", o.jobs, "worker thread bound");
    if (wants_strategy)
      sub->add_option("--strategy", o.strategy, "naive | schreier | auto")
          ->check(CLI::IsMember({"naive", "schreier", "auto"}));
    return sub;
  };

  CLI::App *field = add_common(app.add_subcommand("field", "print the field spec"));
  CLI::App *build_cmd = add_common(app.add_subcommand("build", "build a Moufang set and report its shape"));
  CLI::App *verify = add_common(app.add_subcommand("verify", "run the Moufang axiom sweep"));
  CLI::App *mu = add_common(app.add_subcommand("mu", "mu-maps and their fibers"));
  mu->add_option("--element", o.element, "element of U^#, e.g. 5 or (2,3)");
  CLI::App *partition = add_common(app.add_subcommand("partition", "Suzuki partition class sizes"));
  CLI::App *order = add_common(app.add_subcommand("order", "order of the little projective group"), true);
  CLI::App *export_cmd = add_common(app.add_subcommand("export", "export generator permutations"));
  CLI::App *suite = add_common(app.add_subcommand("suite", "run the identity check suite"));
  suite->add_option("--checks", o.checks, "subset of check ids to run");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    app.exit(e); // prints usage/error
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (field->parsed()) return cmd_field(o);
    if (build_cmd->parsed()) return cmd_build(o);
    if (verify->parsed()) return cmd_verify(o);
    if (mu->parsed()) return cmd_mu(o);
    if (partition->parsed()) return cmd_partition(o);
    if (order->parsed()) return cmd_order(o);
    if (export_cmd->parsed()) return cmd_export(o);
    if (suite->parsed()) return cmd_suite(o);
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
