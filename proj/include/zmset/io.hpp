#pragma once

// Serialization: the permutation line format, the field-spec JSON document,
// build reports and suite reports (text table + machine JSON).

#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "constructions.hpp"
#include "lemma_suite.hpp"
#include "moufang_set.hpp"

namespace zmset {

using nlohmann::json;

// ---- permutation line format ---------------------------------------------
// header:  #points=<|X|> encoding=pair|scalar degree=<n>
// body:    one permutation per line, space-separated images of 0..|X|-1,
//          where index |U| = |X|-1 denotes infinity

struct PermutationBundle {
  std::size_t points = 0;
  std::string encoding; // "pair" or "scalar"
  int degree = 0;
  std::vector<Permutation> perms;
};

inline void write_permutations(std::ostream &os, const RootGroup &u,
                               const std::vector<Permutation> &perms) {
  os << "#points=" << (u.size() + 1) << " encoding="
     << (u.kind() == RootGroupKind::SuzukiTwoGroup ? "pair" : "scalar")
     << " degree=" << u.spec().degree() << "\n";
  for (const Permutation &p : perms) {
    for (std::size_t i = 0; i < p.degree(); ++i) {
      if (i) os << ' ';
      os << p[i];
    }
    os << "\n";
  }
}

inline PermutationBundle read_permutations(std::istream &is) {
  PermutationBundle b;
  std::string header;
  if (!std::getline(is, header) || header.rfind("#points=", 0) != 0)
    throw std::runtime_error("permutation import: missing #points header");
  {
    std::istringstream hs(header);
    std::string tok;
    while (hs >> tok) {
      const auto eq = tok.find('=');
      if (eq == std::string::npos) continue;
      const std::string key = tok[0] == '#' ? tok.substr(1, eq - 1) : tok.substr(0, eq);
      const std::string val = tok.substr(eq + 1);
      if (key == "points") b.points = std::stoul(val);
      else if (key == "encoding") b.encoding = val;
      else if (key == "degree") b.degree = std::stoi(val);
    }
  }
  if (b.points == 0 || (b.encoding != "pair" && b.encoding != "scalar"))
    throw std::runtime_error("permutation import: malformed header");
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::vector<pt_t> img;
    img.reserve(b.points);
    unsigned long v;
    while (ls >> v) img.push_back(static_cast<pt_t>(v));
    if (img.size() != b.points)
      throw std::runtime_error("permutation import: wrong image count on a line");
    b.perms.emplace_back(std::move(img)); // ctor validates bijectivity
  }
  return b;
}

// ---- JSON documents -------------------------------------------------------

inline json field_json(const FieldSpec &f) {
  return {{"degree", f.degree()},
          {"modulus", f.modulus()},
          {"theta_exponent", f.theta_exponent()},
          {"tits", f.tits()}};
}

inline FieldSpec field_from_json(const json &j) {
  return FieldSpec(j.at("degree").get<int>(),
                   j.at("modulus").get<std::uint64_t>(),
                   j.at("theta_exponent").get<int>(),
                   j.at("tits").get<bool>());
}

inline const char *kind_name(RootGroupKind k) {
  return k == RootGroupKind::SuzukiTwoGroup ? "suzuki" : "psl2";
}

inline json build_report_json(const MoufangSet &m) {
  const RootGroup &u = m.root_group();
  json j;
  j["kind"] = kind_name(u.kind());
  j["q"] = u.spec().order();
  j["field"] = field_json(u.spec());
  j["points"] = m.num_points();
  j["root_group_order"] = u.size();
  j["center_order"] = u.center().size();
  j["involutions"] = u.involutions().size();
  j["hua_order"] = m.hua_subgroup().elements.size();
  if (u.kind() == RootGroupKind::SuzukiTwoGroup) {
    const auto sizes = partition_sizes(u);
    j["partition"] = {{"zero", sizes[0]},
                      {"center", sizes[1]},
                      {"sim_center", sizes[2]},
                      {"neg_sim_center", sizes[3]},
                      {"mixed", sizes[4]}};
  }
  return j;
}

inline json check_result_json(const CheckResult &r) {
  const CheckInfo *info = find_check(r.check_id);
  json j;
  j["check_id"] = r.check_id;
  j["anchor"] = info ? info->statement : "";
  j["status"] = to_string(r.status);
  j["cases_checked"] = r.cases_checked;
  j["millis"] = r.millis;
  if (r.counterexample) j["counterexample"] = *r.counterexample;
  return j;
}

// array, sorted by check id (run order is already registry order)
inline json suite_report_json(const std::vector<CheckResult> &results) {
  json arr = json::array();
  for (const CheckResult &r : results) arr.push_back(check_result_json(r));
  return arr;
}

inline std::vector<CheckResult> suite_from_json(const json &arr) {
  std::vector<CheckResult> out;
  for (const json &j : arr) {
    CheckResult r;
    r.check_id = j.at("check_id").get<std::string>();
    const std::string s = j.at("status").get<std::string>();
    if (s == "pass") r.status = CheckStatus::Pass;
    else if (s == "fail") r.status = CheckStatus::Fail;
    else if (s == "vacuous") r.status = CheckStatus::Vacuous;
    else if (s == "inapplicable") r.status = CheckStatus::Inapplicable;
    else throw std::runtime_error("suite import: unknown status " + s);
    r.cases_checked = j.at("cases_checked").get<std::uint64_t>();
    r.millis = j.at("millis").get<double>();
    if (j.contains("counterexample"))
      r.counterexample = j.at("counterexample").get<std::string>();
    out.push_back(std::move(r));
  }
  return out;
}

inline void print_suite_table(std::ostream &os,
                              const std::vector<CheckResult> &results) {
  os << std::left << std::setw(14) << "check" << std::setw(14) << "status"
     << std::setw(12) << "cases" << "ms\n";
  for (const CheckResult &r : results) {
    os << std::left << std::setw(14) << r.check_id << std::setw(14)
       << to_string(r.status) << std::setw(12) << r.cases_checked
       << std::fixed << std::setprecision(1) << r.millis << "\n";
    if (r.counterexample) os << "    counterexample: " << *r.counterexample << "\n";
  }
}

} // namespace zmset
