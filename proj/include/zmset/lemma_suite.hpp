#pragma once

// A registry of named machine-checkable identities, each runnable against
// any constructed Moufang set. Checks treat the Moufang set as a black box
// through the core operations only, quantify exhaustively over their stated
// domain, and report pass/fail/vacuous with a structured counterexample.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "constructions.hpp"
#include "group_order.hpp"
#include "moufang_set.hpp"

namespace zmset {

enum class CheckStatus { Pass, Fail, Vacuous, Inapplicable };

inline const char *to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Vacuous: return "vacuous";
    case CheckStatus::Inapplicable: return "inapplicable";
  }
  return "?";
}

struct CheckResult {
  std::string check_id;
  CheckStatus status = CheckStatus::Inapplicable;
  std::uint64_t cases_checked = 0;
  std::optional<std::string> counterexample;
  double millis = 0.0;
};

enum class Applicability {
  Any,             // both families
  ProjectiveLine,  // needs special central elements: M(F_q) only
  Suzuki,          // MSuz only
  SmallClosure,    // needs the full little projective group in memory
};

inline const char *to_string(Applicability a) {
  switch (a) {
    case Applicability::Any: return "any";
    case Applicability::ProjectiveLine: return "psl2";
    case Applicability::Suzuki: return "suzuki";
    case Applicability::SmallClosure: return "small-closure";
  }
  return "?";
}

namespace detail {

// Scratch state shared by the check bodies: element-level shorthand over an
// immutable Moufang set.
struct Ctx {
  const MoufangSet &m;
  const RootGroup &u;

  explicit Ctx(const MoufangSet &ms) : m(ms), u(ms.root_group()) {}

  idx_t n() const { return u.size(); }
  idx_t add(idx_t x, idx_t y) const { return u.add(x, y); }
  idx_t sub(idx_t x, idx_t y) const { return u.add(x, u.neg(y)); }
  idx_t neg(idx_t x) const { return u.neg(x); }
  idx_t sim(idx_t x) const { return m.sim(x); }
  idx_t ap(const Permutation &p, idx_t x) const { return m.apply_elem(p, x); }
  idx_t tau(idx_t x) const { return ap(m.tau(), x); }
  idx_t tau_inv(idx_t x) const { return ap(m.tau_inv(), x); }
  const Permutation &mu(idx_t a) const { return m.mu(a); }
  bool same_mu(idx_t a, idx_t b) const {
    return m.fiber_of(a) == m.fiber_of(b);
  }
  bool is_involution(idx_t x) const { return x != 0 && u.dbl(x) == 0; }

  std::vector<idx_t> involutions() const { return u.involutions(); }

  std::vector<bool> central_mask() const {
    std::vector<bool> c(u.size(), false);
    for (idx_t z : u.center()) c[z] = true;
    return c;
  }

  // pointwise image under alpha_x^tau = tau^-1 alpha_x tau
  pt_t conj_alpha_img(idx_t x, pt_t p) const {
    return m.tau()[m.alpha(x)[m.tau_inv()[p]]];
  }

  std::string el(idx_t x) const { return to_string(u.element(x)); }

  std::string perm_str(const Permutation &p) const {
    std::ostringstream os;
    for (std::size_t i = 0; i < p.degree(); ++i) {
      if (i) os << ' ';
      os << p[i];
    }
    return os.str();
  }

  // does M(U,tau) = M(U,tau^-1), i.e. do tau and tau^-1 induce the same U_0
  bool tau_inverse_compatible() const {
    std::unordered_set<Permutation, PermutationHash> u0;
    for (idx_t x = 0; x < u.size(); ++x) u0.insert(m.conj_alpha(x));
    for (idx_t x = 0; x < u.size(); ++x)
      if (!u0.count(m.tau() * m.alpha(x) * m.tau_inv())) return false;
    return true;
  }
};

struct Outcome {
  CheckStatus status = CheckStatus::Pass;
  std::uint64_t cases = 0;
  std::string witness;

  static Outcome pass(std::uint64_t cases) { return {CheckStatus::Pass, cases, {}}; }
  static Outcome vacuous() { return {CheckStatus::Vacuous, 0, {}}; }
  static Outcome fail(std::uint64_t cases, std::string w) {
    return {CheckStatus::Fail, cases, std::move(w)};
  }
};

using CheckFn = std::function<Outcome(const Ctx &)>;

} // namespace detail

struct CheckInfo {
  std::string id;
  std::string statement; // the claim being verified, in formula shorthand
  Applicability applies;
  detail::CheckFn fn;
};

namespace detail {

// ---- generic identity checks -------------------------------------------

inline Outcome chk_l31a(const Ctx &c) {
  std::uint64_t cases = 0;
  for (idx_t a = 1; a < c.n(); ++a) {
    ++cases;
    if (c.mu(a).inverse() != c.mu(c.neg(a)))
      return Outcome::fail(cases, "a=" + c.el(a));
  }
  return Outcome::pass(cases);
}

inline Outcome chk_l31b(const Ctx &c) {
  if (!c.tau_inverse_compatible()) return Outcome::vacuous();
  std::uint64_t cases = 0;
  for (idx_t a = 1; a < c.n(); ++a) {
    ++cases;
    if (c.mu(c.tau(a)) != c.mu(c.neg(a)).conjugated_by(c.m.tau()))
      return Outcome::fail(cases, "a=" + c.el(a));
  }
  return Outcome::pass(cases);
}

inline Outcome chk_l31c(const Ctx &c) {
  std::uint64_t cases = 0;
  for (idx_t b = 1; b < c.n(); ++b) {
    const Permutation mb_inv = c.mu(b).inverse();
    for (idx_t a = 1; a < c.n(); ++a) {
      ++cases;
      if (c.mu(c.ap(c.mu(b), a)) != mb_inv * c.mu(c.neg(a)) * c.mu(b))
        return Outcome::fail(cases, "a=" + c.el(a) + " b=" + c.el(b));
    }
  }
  return Outcome::pass(cases);
}

inline Outcome chk_l31d(const Ctx &c) {
  const auto closure = naive_closure(little_projective_generators(c.m));
  const HuaSubgroup h = c.m.hua_subgroup();
  std::set<Permutation> stab;
  const pt_t inf = c.m.infinity();
  for (const Permutation &g : closure.elements)
    if (g[0] == 0 && g[inf] == inf) stab.insert(g);
  const std::set<Permutation> hset(h.elements.begin(), h.elements.end());
  if (stab != hset)
    return Outcome::fail(closure.order, "two-point stabilizer has order " +
                                            std::to_string(stab.size()) +
                                            ", H has order " +
                                            std::to_string(hset.size()));
  return Outcome::pass(closure.order);
}

inline Outcome chk_l31e(const Ctx &c) {
  std::uint64_t cases = 0;
  for (idx_t a = 1; a < c.n(); ++a) {
    ++cases;
    if (c.sim(a) != c.neg(c.ap(c.mu(a), c.neg(a))))
      return Outcome::fail(cases, "a=" + c.el(a));
  }
  return Outcome::pass(cases);
}

inline Outcome chk_l31f(const Ctx &c) {
  std::uint64_t cases = 0;
  for (idx_t a = 1; a < c.n(); ++a) {
    ++cases;
    const Permutation &mna = c.mu(c.neg(a));
    const Permutation rhs = c.m.alpha(c.neg(c.sim(a))) * mna * c.m.alpha(a) *
                            mna * c.m.alpha(c.sim(c.neg(a)));
    if (mna != rhs) return Outcome::fail(cases, "a=" + c.el(a));
  }
  return Outcome::pass(cases);
}

inline Outcome chk_l31g(const Ctx &c) {
  const HuaSubgroup hua = c.m.hua_subgroup();
  std::uint64_t cases = 0;
  for (const Permutation &h : hua.elements)
    for (idx_t a = 1; a < c.n(); ++a) {
      ++cases;
      if (c.mu(c.ap(h, a)) != c.mu(a).conjugated_by(h))
        return Outcome::fail(cases, "a=" + c.el(a) + " h=[" + c.perm_str(h) + "]");
    }
  return Outcome::pass(cases);
}

inline Outcome chk_l31h(const Ctx &c) {
  const HuaSubgroup hua = c.m.hua_subgroup();
  std::uint64_t cases = 0;
  for (const Permutation &h : hua.elements)
    for (idx_t a = 1; a < c.n(); ++a) {
      ++cases;
      if (c.sim(c.ap(h, a)) != c.ap(h, c.sim(a)))
        return Outcome::fail(cases, "a=" + c.el(a) + " h=[" + c.perm_str(h) + "]");
    }
  return Outcome::pass(cases);
}

inline Outcome chk_l31i(const Ctx &c) {
  std::uint64_t cases = 0;
  for (idx_t a = 1; a < c.n(); ++a) {
    ++cases;
    if (!c.same_mu(c.sim(a), c.neg(a)) || !c.same_mu(a, c.neg(c.sim(a))) ||
        !c.same_mu(a, c.sim(c.neg(a))))
      return Outcome::fail(cases, "a=" + c.el(a));
  }
  return Outcome::pass(cases);
}

inline Outcome chk_l31j(const Ctx &c) {
  std::uint64_t cases = 0;
  for (idx_t a = 1; a < c.n(); ++a) {
    ++cases;
    if (c.sim(c.tau(a)) != c.tau(c.neg(a)) ||
        c.neg(c.tau_inv(a)) != c.tau_inv(c.sim(a)))
      return Outcome::fail(cases, "a=" + c.el(a));
  }
  return Outcome::pass(cases);
}

inline Outcome chk_l31k(const Ctx &c) {
  std::uint64_t cases = 0;
  for (idx_t a = 1; a < c.n(); ++a) {
    ++cases;
    const idx_t ama = c.ap(c.mu(a), a);
    if (ama != c.sim(c.neg(c.sim(a)))) return Outcome::fail(cases, "a=" + c.el(a));
    if (c.ap(c.mu(c.neg(a)), a) != c.neg(c.sim(c.neg(a))))
      return Outcome::fail(cases, "a=" + c.el(a));
    if (c.mu(a).order() == 2 &&
        c.neg(c.sim(c.neg(a))) != c.sim(c.neg(c.sim(a))))
      return Outcome::fail(cases, "a=" + c.el(a));
  }
  return Outcome::pass(cases);
}

inline Outcome chk_l31l(const Ctx &c) {
  std::uint64_t cases = 0;
  for (idx_t a = 1; a < c.n(); ++a)
    for (idx_t b = 1; b < c.n(); ++b) {
      if (a == b || !c.same_mu(a, b)) continue;
      ++cases;
      const Permutation ma_inv = c.mu(a).inverse();
      const idx_t x = c.ap(ma_inv, a), y = c.ap(ma_inv, b);
      if (!c.same_mu(c.sub(x, y), c.sub(a, b)))
        return Outcome::fail(cases, "a=" + c.el(a) + " b=" + c.el(b));
      if (!c.same_mu(c.add(c.neg(a), b), c.add(c.neg(c.sim(a)), c.sim(b))))
        return Outcome::fail(cases, "a=" + c.el(a) + " b=" + c.el(b));
    }
  return cases ? Outcome::pass(cases) : Outcome::vacuous();
}

inline Outcome chk_e3a(const Ctx &c) {
  std::uint64_t cases = 0;
  for (idx_t a = 1; a < c.n(); ++a)
    for (idx_t b = 1; b < c.n(); ++b) {
      if (a == b) continue;
      ++cases;
      const idx_t lhs = c.tau(c.sub(c.tau_inv(a), c.tau_inv(b)));
      const idx_t rhs = c.add(c.ap(c.mu(b), c.sub(a, b)), c.sim(b));
      if (lhs != rhs)
        return Outcome::fail(cases, "a=" + c.el(a) + " b=" + c.el(b) +
                                        " lhs=" + c.el(lhs) + " rhs=" + c.el(rhs));
    }
  return Outcome::pass(cases);
}

inline Outcome chk_e3b(const Ctx &c) {
  std::uint64_t cases = 0;
  for (idx_t a = 1; a < c.n(); ++a)
    for (idx_t b = 1; b < c.n(); ++b) {
      if (a == b) continue;
      ++cases;
      const idx_t cc = c.tau(c.sub(c.tau_inv(a), c.tau_inv(b)));
      if (c.mu(cc) != c.mu(c.neg(b)) * c.mu(c.sub(b, a)) * c.mu(a))
        return Outcome::fail(cases, "a=" + c.el(a) + " b=" + c.el(b));
    }
  return Outcome::pass(cases);
}

inline Outcome chk_l32a(const Ctx &c) {
  std::uint64_t cases = 0;
  for (idx_t a : c.involutions()) {
    ++cases;
    const Permutation &ma = c.mu(a);
    if (ma.order() != 2) return Outcome::fail(cases, "mu_a not an involution, a=" + c.el(a));
    if (ma.conjugated_by(c.m.alpha(c.neg(c.sim(a)))) !=
        c.m.alpha(a).conjugated_by(ma))
      return Outcome::fail(cases, "a=" + c.el(a));
  }
  return cases ? Outcome::pass(cases) : Outcome::vacuous();
}

inline Outcome chk_l32b(const Ctx &c) {
  std::uint64_t cases = 0;
  for (idx_t a : c.involutions()) {
    ++cases;
    const auto fixed = c.mu(a).fixed_points();
    if (fixed.size() != 1 || fixed[0] != c.sim(a))
      return Outcome::fail(cases, "a=" + c.el(a));
  }
  return cases ? Outcome::pass(cases) : Outcome::vacuous();
}

inline Outcome chk_l32c(const Ctx &c) {
  std::uint64_t cases = 0;
  for (idx_t a : c.involutions()) {
    ++cases;
    const idx_t ama = c.ap(c.mu(a), a);
    if (ama != c.neg(c.sim(a)) || ama != c.sim(c.neg(c.sim(a))))
      return Outcome::fail(cases, "a=" + c.el(a));
  }
  return cases ? Outcome::pass(cases) : Outcome::vacuous();
}

inline Outcome chk_l33(const Ctx &c) {
  const auto inv = c.involutions();
  std::uint64_t cases = 0;
  for (idx_t a : inv)
    for (idx_t b : inv) {
      ++cases;
      if (a != b && c.same_mu(a, b))
        return Outcome::fail(cases, "a=" + c.el(a) + " b=" + c.el(b));
    }
  return cases ? Outcome::pass(cases) : Outcome::vacuous();
}

inline Outcome chk_l34(const Ctx &c) {
  const auto inv = c.involutions();
  std::uint64_t cases = 0;
  for (idx_t a : inv)
    for (idx_t b : inv) {
      ++cases;
      if ((c.mu(a) * c.mu(b)).order() % 2 == 0)
        return Outcome::fail(cases, "a=" + c.el(a) + " b=" + c.el(b));
    }
  return cases ? Outcome::pass(cases) : Outcome::vacuous();
}

// the seven equivalent characterizations of a special element
inline Outcome chk_l37(const Ctx &c) {
  std::uint64_t cases = 0;
  for (idx_t a = 1; a < c.n(); ++a) {
    ++cases;
    const idx_t na = c.neg(a);
    const bool ca = c.tau_inv(na) == c.neg(c.tau_inv(a));
    const bool cb = c.sim(a) == na;
    const bool cc = c.ap(c.mu(a), na) == a;
    const bool cd = c.ap(c.mu(na), a) == na;
    const bool cg = c.ap(c.mu(a), na) == c.neg(c.ap(c.mu(a), a));
    if (ca != cb || ca != cc || ca != cd || ca != cg)
      return Outcome::fail(cases, "a=" + c.el(a));
    // (e)/(f) over the family {tau} u {mu_c}: all instances must agree
    for (idx_t x = 1; x < c.n(); ++x) {
      const Permutation rho_inv = c.mu(x).inverse();
      if ((c.ap(rho_inv, na) == c.neg(c.ap(rho_inv, a))) != ca)
        return Outcome::fail(cases, "a=" + c.el(a) + " rho=mu_" + c.el(x));
    }
  }
  return Outcome::pass(cases);
}

inline Outcome chk_l39a(const Ctx &c) {
  std::uint64_t cases = 0;
  for (idx_t a = 1; a < c.n(); ++a) {
    ++cases;
    if (c.m.is_special(a) != c.m.is_special(c.neg(a)))
      return Outcome::fail(cases, "a=" + c.el(a));
  }
  return Outcome::pass(cases);
}

inline Outcome chk_l39b(const Ctx &c) {
  std::uint64_t cases = 0;
  for (idx_t a : c.involutions()) {
    ++cases;
    if (c.m.is_special(a) != c.is_involution(c.tau_inv(a)))
      return Outcome::fail(cases, "a=" + c.el(a));
  }
  return cases ? Outcome::pass(cases) : Outcome::vacuous();
}

inline Outcome chk_l39c(const Ctx &c) {
  const auto central = c.central_mask();
  std::uint64_t cases = 0;
  for (idx_t a = 1; a < c.n(); ++a) {
    if (!central[a] || !c.m.is_special(a)) continue;
    ++cases;
    if (!central[c.tau_inv(a)]) return Outcome::fail(cases, "a=" + c.el(a) + " rho=tau");
    for (idx_t x = 1; x < c.n(); ++x) {
      if (!central[c.ap(c.mu(x).inverse(), a)])
        return Outcome::fail(cases, "a=" + c.el(a) + " rho=mu_" + c.el(x));
    }
  }
  return cases ? Outcome::pass(cases) : Outcome::vacuous();
}

inline Outcome chk_l310a(const Ctx &c) {
  std::uint64_t cases = 0;
  for (idx_t a = 1; a < c.n(); ++a) {
    if (!c.m.is_special(a)) continue;
    ++cases;
    const idx_t na = c.neg(a);
    if (c.ap(c.mu(a), a) != na || c.ap(c.mu(na), a) != na)
      return Outcome::fail(cases, "a=" + c.el(a));
  }
  return cases ? Outcome::pass(cases) : Outcome::vacuous();
}

inline Outcome chk_l310b(const Ctx &c) {
  std::uint64_t cases = 0;
  for (idx_t a = 1; a < c.n(); ++a) {
    if (c.u.element_order(a) != 4) continue;
    ++cases;
    if (c.m.is_special(a)) return Outcome::fail(cases, "a=" + c.el(a));
  }
  return cases ? Outcome::pass(cases) : Outcome::vacuous();
}

inline Outcome chk_l311(const Ctx &c) {
  const HuaSubgroup hua = c.m.hua_subgroup();
  std::uint64_t cases = 0;
  for (idx_t a = 1; a < c.n(); ++a) {
    if (!c.m.is_special(a)) continue;
    for (const Permutation &h : hua.elements) {
      ++cases;
      if (!c.m.is_special(c.ap(h, a)))
        return Outcome::fail(cases, "a=" + c.el(a));
    }
  }
  return cases ? Outcome::pass(cases) : Outcome::vacuous();
}

inline Outcome chk_l312(const Ctx &c) {
  std::uint64_t cases = 0;
  const pt_t inf = c.m.infinity();
  for (idx_t a = 1; a < c.n(); ++a) {
    ++cases;
    const Permutation &ma = c.mu(a);
    bool witness_found = false;
    for (idx_t x = 0; x < c.n() && !witness_found; ++x) {
      // quick probe before building the full product: b alpha_a b at 0
      pt_t p = c.conj_alpha_img(x, 0);
      p = c.m.alpha(a)[p];
      p = c.conj_alpha_img(x, p);
      if (p != inf) continue;
      const Permutation b = c.m.conj_alpha(x);
      witness_found = (b * c.m.alpha(a) * b == ma);
    }
    if (witness_found != c.m.is_special(a))
      return Outcome::fail(cases, "a=" + c.el(a));
    if (c.m.is_special(a)) {
      const Permutation b = c.m.alpha(a).conjugated_by(ma);
      if (b * c.m.alpha(a) * b != ma)
        return Outcome::fail(cases, "a=" + c.el(a) + " b=alpha_a^mu_a");
    }
  }
  return Outcome::pass(cases);
}

// ---- special-central identity family (L3.13, P3.14, L3.15, P3.17) -------

// domain of L3.13/P3.14: a in Z(U)^# special with mu_a = mu_-a = mu_a^-1,
// b in V_a minus {a,-a}; requires M(U,tau) = M(U,tau^-1)
template <typename Body>
Outcome sweep_special_central_pairs(const Ctx &c, Body body) {
  if (!c.tau_inverse_compatible()) return Outcome::vacuous();
  const auto central = c.central_mask();
  std::uint64_t cases = 0;
  for (idx_t a = 1; a < c.n(); ++a) {
    if (!central[a] || !c.m.is_special(a)) continue;
    if (!c.same_mu(a, c.neg(a)) || c.mu(a).inverse() != c.mu(a)) continue;
    for (idx_t b : c.m.mu_fibers()[c.m.fiber_of(a)]) {
      if (b == a || b == c.neg(a)) continue;
      ++cases;
      std::string w = body(a, b);
      if (!w.empty()) return Outcome::fail(cases, std::move(w));
    }
  }
  return cases ? Outcome::pass(cases) : Outcome::vacuous();
}

inline std::string pair_witness(const Ctx &c, idx_t a, idx_t b) {
  return "a=" + c.el(a) + " b=" + c.el(b);
}

inline Outcome chk_l313a(const Ctx &c) {
  return sweep_special_central_pairs(c, [&](idx_t a, idx_t b) -> std::string {
    const Permutation &ma = c.mu(a);
    const idx_t lhs = c.add(c.neg(c.ap(ma, c.sub(b, a))), c.ap(ma, c.sub(a, b)));
    const idx_t rhs = c.sub(c.add(c.sim(c.neg(b)), a), c.sim(b));
    return lhs == rhs ? "" : pair_witness(c, a, b);
  });
}

inline Outcome chk_l313b(const Ctx &c) {
  return sweep_special_central_pairs(c, [&](idx_t a, idx_t b) -> std::string {
    const Permutation &ma = c.mu(a);
    const idx_t lhs = c.add(c.neg(c.ap(ma, c.sub(a, b))), c.ap(ma, c.sub(b, a)));
    const idx_t rhs = c.add(b, c.u.times(a, 2));
    return lhs == rhs ? "" : pair_witness(c, a, b);
  });
}

inline Outcome chk_l313c(const Ctx &c) {
  return sweep_special_central_pairs(c, [&](idx_t a, idx_t b) -> std::string {
    const idx_t target = c.neg(c.u.times(a, 3));
    const idx_t sb = c.sim(b), snb = c.sim(c.neg(b));
    const idx_t v1 = c.add(c.sub(snb, sb), b);
    const idx_t v2 = c.add(c.add(c.neg(sb), b), snb);
    const idx_t v3 = c.sub(c.add(b, snb), sb);
    return (v1 == target && v2 == target && v3 == target)
               ? ""
               : pair_witness(c, a, b);
  });
}

inline Outcome chk_l313d(const Ctx &c) {
  return sweep_special_central_pairs(c, [&](idx_t a, idx_t b) -> std::string {
    const idx_t na = c.neg(a), nb = c.neg(b);
    const idx_t p = c.tau(c.sub(c.tau_inv(na), c.tau_inv(nb)));
    const idx_t q = c.tau(c.sub(c.tau_inv(a), c.tau_inv(b)));
    return (c.add(c.neg(p), q) == a && c.sub(q, p) == a)
               ? ""
               : pair_witness(c, a, b);
  });
}

inline Outcome chk_l313e(const Ctx &c) {
  return sweep_special_central_pairs(c, [&](idx_t a, idx_t b) -> std::string {
    const idx_t lhs =
        c.sub(c.tau(c.sub(a, b)), c.tau(c.sub(c.neg(a), c.sim(b))));
    return lhs == c.tau(a) ? "" : pair_witness(c, a, b);
  });
}

inline Outcome chk_l313f(const Ctx &c) {
  return sweep_special_central_pairs(c, [&](idx_t a, idx_t b) -> std::string {
    const idx_t t1 = c.tau(c.sub(c.neg(c.tau_inv(b)), c.tau_inv(a)));
    const idx_t t2 = c.tau(c.sub(c.tau_inv(c.neg(b)), c.tau_inv(a)));
    const idx_t rhs = c.sub(c.neg(c.sim(b)), a);
    return c.add(c.neg(t1), t2) == rhs ? "" : pair_witness(c, a, b);
  });
}

inline Outcome chk_l313g(const Ctx &c) {
  return sweep_special_central_pairs(c, [&](idx_t a, idx_t b) -> std::string {
    const idx_t lhs = c.add(c.neg(c.tau(c.sub(c.neg(a), b))),
                            c.tau(c.sub(c.sim(b), a)));
    const idx_t rhs = c.sub(c.neg(c.sim(c.tau(b))), c.tau(a));
    return lhs == rhs ? "" : pair_witness(c, a, b);
  });
}

inline Outcome chk_l313h(const Ctx &c) {
  return sweep_special_central_pairs(c, [&](idx_t a, idx_t b) -> std::string {
    const Permutation &ma = c.mu(a);
    const idx_t lhs = c.add(c.neg(c.ap(ma, c.sub(c.neg(a), b))),
                            c.ap(ma, c.sub(c.sim(b), a)));
    return lhs == c.add(c.sim(b), a) ? "" : pair_witness(c, a, b);
  });
}

inline Outcome chk_l313i(const Ctx &c) {
  return sweep_special_central_pairs(c, [&](idx_t a, idx_t b) -> std::string {
    return c.m.is_special(b) ? pair_witness(c, a, b) : "";
  });
}

inline Outcome chk_p314(const Ctx &c) {
  return sweep_special_central_pairs(c, [&](idx_t a, idx_t b) -> std::string {
    const idx_t amb = c.sub(a, b), a5b = c.add(c.u.times(a, 5), b);
    if (amb == 0 || a5b == 0) return pair_witness(c, a, b) + " (degenerate)";
    if (c.mu(a) != c.mu(amb) * c.mu(a5b) * c.mu(amb))
      return pair_witness(c, a, b);
    if (c.is_involution(a) && !c.same_mu(a, c.add(a, b)))
      return pair_witness(c, a, b);
    return "";
  });
}

inline Outcome chk_l315(const Ctx &c) {
  const auto central = c.central_mask();
  std::uint64_t cases = 0;
  for (idx_t a = 1; a < c.n(); ++a) {
    if (!central[a] || !c.is_involution(a) || !c.m.is_special(a)) continue;
    for (idx_t x = 1; x < c.n(); ++x) {
      const idx_t xa = c.add(x, a);
      if (xa == 0) continue;
      if (!c.same_mu(xa, x) || !c.same_mu(x, c.neg(x))) continue;
      ++cases;
      if (!c.same_mu(x, a))
        return Outcome::fail(cases, "a=" + c.el(a) + " x=" + c.el(x));
    }
  }
  return cases ? Outcome::pass(cases) : Outcome::vacuous();
}

inline Outcome chk_p317(const Ctx &c) {
  // hypotheses: proper Moufang set, U nilpotent (a finite 2-group here),
  // and every b in U^# has a special involution in Z(U) n V_b
  const HuaSubgroup hua = c.m.hua_subgroup();
  if (hua.elements.size() <= 1) return Outcome::vacuous();
  if ((c.n() & (c.n() - 1)) != 0) return Outcome::vacuous();
  const auto central = c.central_mask();
  for (idx_t b = 1; b < c.n(); ++b) {
    bool found = false;
    for (idx_t a : c.m.mu_fibers()[c.m.fiber_of(b)])
      if (central[a] && c.is_involution(a) && c.m.is_special(a)) found = true;
    if (!found) return Outcome::vacuous();
  }
  // conclusion: U elementary abelian (exponent 2) and every element special
  std::uint64_t cases = 0;
  for (idx_t a = 1; a < c.n(); ++a) {
    ++cases;
    if (c.u.dbl(a) != 0 || !c.m.is_special(a))
      return Outcome::fail(cases, "a=" + c.el(a));
  }
  return Outcome::pass(cases);
}

// ---- Zassenhaus chapter --------------------------------------------------

inline Outcome chk_z4(const Ctx &c) {
  const HuaSubgroup hua = c.m.hua_subgroup();
  if (hua.elements.size() <= 1)
    return Outcome::fail(0, "H is trivial: the Moufang set is not proper");
  std::uint64_t cases = 0;
  for (const Permutation &h : hua.elements) {
    if (h.is_identity()) continue;
    for (idx_t x = 1; x < c.n(); ++x) {
      ++cases;
      if (h[x] == x)
        return Outcome::fail(cases, "h fixes u=" + c.el(x) + ", h=[" + c.perm_str(h) + "]");
    }
  }
  return Outcome::pass(cases);
}

inline Outcome chk_l44(const Ctx &c) {
  const HuaSubgroup hua = c.m.hua_subgroup();
  if (hua.elements.size() % 2 == 0)
    return Outcome::vacuous(); // hypothesis |H| odd
  const auto closure = naive_closure(little_projective_generators(c.m));
  std::vector<Permutation> invs;
  for (const Permutation &g : closure.elements)
    if (g.order() == 2) invs.push_back(g);
  if (invs.empty()) return Outcome::vacuous();
  std::set<Permutation> orbit;
  for (const Permutation &g : closure.elements)
    orbit.insert(invs.front().conjugated_by(g));
  if (orbit != std::set<Permutation>(invs.begin(), invs.end()))
    return Outcome::fail(invs.size(), "involution classes split: orbit " +
                                          std::to_string(orbit.size()) + " of " +
                                          std::to_string(invs.size()));
  return Outcome::pass(invs.size());
}

inline Outcome chk_l45a(const Ctx &c) {
  const HuaSubgroup hua = c.m.hua_subgroup();
  const auto inv = c.involutions();
  if (inv.empty()) return Outcome::vacuous();
  const auto central = c.central_mask();
  std::set<idx_t> orbit;
  for (const Permutation &h : hua.elements)
    orbit.insert(static_cast<idx_t>(h[inv.front()]));
  std::uint64_t cases = 0;
  for (idx_t a : inv) {
    ++cases;
    if (!central[a]) return Outcome::fail(cases, "non-central involution " + c.el(a));
    if (!orbit.count(a))
      return Outcome::fail(cases, "involution " + c.el(a) + " outside the H-orbit");
  }
  return Outcome::pass(cases);
}

inline Outcome chk_l45b(const Ctx &c) {
  std::uint64_t cases = 0;
  for (idx_t a = 1; a < c.n(); ++a) {
    ++cases;
    if (c.mu(a).order() != 2)
      return Outcome::fail(cases, "mu_a not an involution, a=" + c.el(a));
    int count = 0;
    for (idx_t b : c.m.mu_fibers()[c.m.fiber_of(a)])
      if (c.is_involution(b)) ++count;
    if (count != 1)
      return Outcome::fail(cases, "V_a contains " + std::to_string(count) +
                                      " involutions, a=" + c.el(a));
  }
  return Outcome::pass(cases);
}

inline Outcome chk_l45c(const Ctx &c) {
  const HuaSubgroup hua = c.m.hua_subgroup();
  const std::size_t order = hua.elements.size();
  bool cyclic = false;
  for (const Permutation &h : hua.elements) cyclic |= (h.order() == order);
  if (!cyclic) return Outcome::fail(order, "H has no element of order |H|");
  // every element of N \ H = H mu_e inverts every element of H
  const auto inv = c.involutions();
  if (inv.empty()) return Outcome::vacuous();
  const Permutation &me = c.mu(inv.front());
  std::uint64_t cases = 0;
  for (const Permutation &h : hua.elements) {
    const Permutation x = h * me;
    for (const Permutation &k : hua.elements) {
      ++cases;
      if (k.conjugated_by(x) != k.inverse())
        return Outcome::fail(cases, "element of N\\H fails to invert H");
    }
  }
  return Outcome::pass(cases);
}

} // namespace detail

} // namespace zmset

#include "lemma_suite_suzuki.hpp"

namespace zmset {

inline const std::vector<CheckInfo> &check_registry() {
  using namespace detail;
  static const std::vector<CheckInfo> registry = [] {
    std::vector<CheckInfo> r = {
        {"E3A", "(a tau^-1 - b tau^-1)tau = (a-b)mu_b + ~b", Applicability::Any, chk_e3a},
        {"E3B", "mu_c = mu_-b mu_(b-a) mu_a for c = (a tau^-1 - b tau^-1)tau", Applicability::Any, chk_e3b},
        {"L3.1a", "mu_a^-1 = mu_-a", Applicability::Any, chk_l31a},
        {"L3.1b", "mu_(a tau) = mu_-a^tau when M(U,tau) = M(U,tau^-1)", Applicability::Any, chk_l31b},
        {"L3.1c", "mu_(a mu_b) = mu_-a^(mu_b)", Applicability::Any, chk_l31c},
        {"L3.1d", "H equals the two-point stabilizer of the little projective group", Applicability::SmallClosure, chk_l31d},
        {"L3.1e", "~a = -(-a)mu_a", Applicability::Any, chk_l31e},
        {"L3.1f", "mu_-a = alpha_-~a mu_-a alpha_a mu_-a alpha_~-a", Applicability::Any, chk_l31f},
        {"L3.1g", "mu_(ah) = mu_a^h for h in H", Applicability::Any, chk_l31g},
        {"L3.1h", "~(ah) = (~a)h for h in H", Applicability::Any, chk_l31h},
        {"L3.1i", "mu_~a = mu_-a and mu_a = mu_-~a = mu_~-a", Applicability::Any, chk_l31i},
        {"L3.1j", "~(a tau) = (-a)tau and -(a tau^-1) = (~a)tau^-1", Applicability::Any, chk_l31j},
        {"L3.1k", "a mu_a = ~-~a and a mu_-a = -~-a", Applicability::Any, chk_l31k},
        {"L3.1l", "mu_a = mu_b, a != b forces the two derived mu identities", Applicability::Any, chk_l31l},
        {"L3.2a", "mu_a^(alpha_-~a) = alpha_a^(mu_a) for involutions a", Applicability::Any, chk_l32a},
        {"L3.2b", "~a is the unique fixed point of mu_a for involutions a", Applicability::Any, chk_l32b},
        {"L3.2c", "~-~a = a mu_a = -~a for involutions a", Applicability::Any, chk_l32c},
        {"L3.3", "involutions with equal mu-maps are equal", Applicability::Any, chk_l33},
        {"L3.4", "mu_a mu_b has odd order for involutions a, b", Applicability::Any, chk_l34},
        {"L3.7", "the seven characterizations of special agree", Applicability::Any, chk_l37},
        {"L3.9a", "a is special iff -a is special", Applicability::Any, chk_l39a},
        {"L3.9b", "an involution a is special iff a tau^-1 is an involution", Applicability::Any, chk_l39b},
        {"L3.9c", "special central elements stay central under rho^-1", Applicability::Any, chk_l39c},
        {"L3.10a", "a special implies a mu_a = -a = a mu_-a", Applicability::Any, chk_l310a},
        {"L3.10b", "elements of order 4 are not special", Applicability::Any, chk_l310b},
        {"L3.11", "special is H-invariant", Applicability::Any, chk_l311},
        {"L3.12", "a special iff mu_a = b alpha_a b for some b in U_0", Applicability::Any, chk_l312},
        {"L3.13a", "-(b-a)mu_a + (a-b)mu_a = ~-b + a - ~b", Applicability::ProjectiveLine, chk_l313a},
        {"L3.13b", "-(a-b)mu_a + (b-a)mu_a = b + a*2", Applicability::ProjectiveLine, chk_l313b},
        {"L3.13c", "-a*3 = ~-b - ~b + b (three associates)", Applicability::ProjectiveLine, chk_l313c},
        {"L3.13d", "the two tau-difference expressions both equal a", Applicability::ProjectiveLine, chk_l313d},
        {"L3.13e", "(a-b)tau - (-a-~b)tau = a tau", Applicability::ProjectiveLine, chk_l313e},
        {"L3.13f", "-(-b tau^-1 - a tau^-1)tau + ((-b)tau^-1 - a tau^-1)tau = -~b - a", Applicability::ProjectiveLine, chk_l313f},
        {"L3.13g", "-(-a-b)tau + (~b-a)tau = -~(b tau) - a tau", Applicability::ProjectiveLine, chk_l313g},
        {"L3.13h", "-(-a-b)mu_a + (~b-a)mu_a = ~b + a", Applicability::ProjectiveLine, chk_l313h},
        {"L3.13i", "a and -a are the only special elements of V_a", Applicability::ProjectiveLine, chk_l313i},
        {"P3.14", "mu_a = mu_(a-b) mu_(a*5+b) mu_(a-b)", Applicability::Any, chk_p314},
        {"L3.15", "mu_(x+a) = mu_x = mu_-x forces mu_x = mu_a", Applicability::Any, chk_l315},
        {"P3.17-CONCL", "under its hypotheses, U is elementary abelian and special", Applicability::Any, chk_p317},
        {"Z4", "C_U(h) = 1 for all h in H^# and H != 1", Applicability::Any, chk_z4},
        {"L4.4", "single conjugacy class of involutions in the little projective group", Applicability::SmallClosure, chk_l44},
        {"L4.5a", "single H-orbit of involutions, contained in Z(U)", Applicability::Any, chk_l45a},
        {"L4.5b", "every V_a contains exactly one involution; mu_a is an involution", Applicability::Any, chk_l45b},
        {"L4.5c", "H is cyclic and N\\H inverts H", Applicability::Any, chk_l45c},
    };
    append_suzuki_checks(r);
    std::sort(r.begin(), r.end(),
              [](const CheckInfo &x, const CheckInfo &y) { return x.id < y.id; });
    return r;
  }();
  return registry;
}

inline const CheckInfo *find_check(const std::string &id) {
  for (const CheckInfo &c : check_registry())
    if (c.id == id) return &c;
  return nullptr;
}

// Vacuous results that are expected for a given root-group kind; a suite run
// treats these as passing and any other Vacuous as a failure.
inline bool vacuous_expected(const std::string &id, RootGroupKind kind) {
  static const std::set<std::string> either = {"P3.14", "L3.15"};
  static const std::set<std::string> on_psl2 = {
      "L3.1l",  "L3.10b", "L3.13a", "L3.13b", "L3.13c", "L3.13d", "L3.13e",
      "L3.13f", "L3.13g", "L3.13h", "L3.13i"};
  static const std::set<std::string> on_suzuki = {"L3.9c", "L3.10a", "L3.11",
                                                  "P3.17-CONCL"};
  if (either.count(id)) return true;
  if (kind == RootGroupKind::Abelian) return on_psl2.count(id) > 0;
  return on_suzuki.count(id) > 0;
}

inline bool closure_feasible(const MoufangSet &m) {
  // (|U|+1) |U| (q-1) elements would be needed in memory
  const std::uint64_t n = m.root_group().size();
  const std::uint64_t q =
      m.root_group().kind() == RootGroupKind::Abelian
          ? n
          : static_cast<std::uint64_t>(m.root_group().spec().order());
  return (n + 1) * n * (q - 1) <= kNaiveClosureCap;
}

inline CheckResult run_check(const std::string &id, const MoufangSet &m) {
  const CheckInfo *info = find_check(id);
  if (!info) throw std::invalid_argument("run_check: unknown check id " + id);
  CheckResult r;
  r.check_id = id;
  const bool suz = m.root_group().kind() == RootGroupKind::SuzukiTwoGroup;
  const bool applicable =
      (info->applies == Applicability::Any) ||
      (info->applies == Applicability::Suzuki && suz) ||
      (info->applies == Applicability::ProjectiveLine && !suz) ||
      (info->applies == Applicability::SmallClosure && closure_feasible(m));
  if (!applicable) {
    r.status = CheckStatus::Inapplicable;
    return r;
  }
  const auto t0 = std::chrono::steady_clock::now();
  const detail::Outcome o = info->fn(detail::Ctx(m));
  const auto t1 = std::chrono::steady_clock::now();
  r.status = o.status;
  r.cases_checked = o.cases;
  if (o.status == CheckStatus::Fail) r.counterexample = o.witness;
  r.millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return r;
}

inline std::vector<CheckResult> run_all_checks(const MoufangSet &m) {
  std::vector<CheckResult> out;
  for (const CheckInfo &c : check_registry()) out.push_back(run_check(c.id, m));
  return out;
}

// true when every result is Pass, Inapplicable, or a whitelisted Vacuous
inline bool suite_passed(const std::vector<CheckResult> &results,
                         RootGroupKind kind) {
  for (const CheckResult &r : results) {
    if (r.status == CheckStatus::Fail) return false;
    if (r.status == CheckStatus::Vacuous && !vacuous_expected(r.check_id, kind))
      return false;
  }
  return true;
}

} // namespace zmset
