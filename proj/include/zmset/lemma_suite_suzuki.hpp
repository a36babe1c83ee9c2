#pragma once

// Suzuki-family checks for the registry. This header is a companion to
// lemma_suite.hpp and relies on the types defined there; include that
// header, not this one.

#include <array>
#include <set>
#include <vector>

namespace zmset {
namespace detail {

// fixed base involution e = (0,1): mu_e is the builder's tau
inline idx_t base_involution(const Ctx &c) { return c.u.pack(0, 1); }

// the unique lambda with lambda^(1+theta) = y (x -> x^(1+theta) is bijective)
inline std::vector<fe_t> one_plus_theta_inverse_table(const FieldSpec &f) {
  std::vector<fe_t> inv(f.order(), 0);
  for (fe_t x = 0; x < f.order(); ++x) inv[f.one_plus_theta(x)] = x;
  return inv;
}

inline Outcome chk_suz_tau2(const Ctx &c) {
  const Permutation sq = c.m.tau() * c.m.tau();
  for (std::size_t p = 0; p < sq.degree(); ++p)
    if (sq[p] != p)
      return Outcome::fail(p + 1, "tau^2 moves point " + std::to_string(p));
  return Outcome::pass(sq.degree());
}

inline Outcome chk_suz_aniso(const Ctx &c) {
  const FieldSpec &f = c.u.spec();
  std::uint64_t cases = 0;
  for (idx_t x = 0; x < c.n(); ++x) {
    ++cases;
    if ((suzuki_norm(f, c.u.first(x), c.u.second(x)) == 0) != (x == 0))
      return Outcome::fail(cases, "x=" + c.el(x));
  }
  return Outcome::pass(cases);
}

inline Outcome chk_suz_mu_norm_fiber(const Ctx &c) {
  const FieldSpec &f = c.u.spec();
  std::vector<fe_t> norm(c.n());
  for (idx_t x = 0; x < c.n(); ++x)
    norm[x] = suzuki_norm(f, c.u.first(x), c.u.second(x));
  std::uint64_t cases = 0;
  for (idx_t a = 1; a < c.n(); ++a)
    for (idx_t b = 1; b < c.n(); ++b) {
      ++cases;
      if (c.same_mu(a, b) != (norm[a] == norm[b]))
        return Outcome::fail(cases, "a=" + c.el(a) + " b=" + c.el(b));
    }
  return Outcome::pass(cases);
}

inline Outcome chk_suz_hua_scaling(const Ctx &c) {
  const FieldSpec &f = c.u.spec();
  std::uint64_t cases = 0;
  for (idx_t a = 1; a < c.n(); ++a) {
    ++cases;
    const fe_t n = suzuki_norm(f, c.u.first(a), c.u.second(a));
    const fe_t lambda = f.div(f.sqr(n), f.theta(n)); // N^(2-theta)
    const Permutation tm = c.m.tau() * c.mu(a);
    for (idx_t x = 0; x < c.n(); ++x)
      if (tm[x] != c.u.h_lambda(lambda, x))
        return Outcome::fail(cases, "a=" + c.el(a) + " x=" + c.el(x));
  }
  return Outcome::pass(cases);
}

inline Outcome chk_suz_norm_factor(const Ctx &c) {
  const FieldSpec &f = c.u.spec();
  std::uint64_t cases = 0;
  for (fe_t a = 1; a < f.order(); ++a)
    for (fe_t b = 0; b < f.order(); ++b) {
      ++cases;
      const fe_t r = f.div(b, a);
      const fe_t rhs = f.add(f.one_plus_theta(r),
                             f.one_plus_theta(f.add(f.theta(a), r)));
      if (suzuki_norm(f, a, b) != rhs)
        return Outcome::fail(cases, "a=" + std::to_string(a) +
                                        " b=" + std::to_string(b));
    }
  return Outcome::pass(cases);
}

inline Outcome chk_suz58(const Ctx &c) {
  std::uint64_t cases = 0;
  for (idx_t a : c.involutions()) {
    ++cases;
    if (c.u.dbl(c.sim(a)) != a) return Outcome::fail(cases, "a=" + c.el(a));
  }
  return Outcome::pass(cases);
}

inline Outcome chk_suz59(const Ctx &c) {
  const HuaSubgroup hua = c.m.hua_subgroup();
  std::uint64_t cases = 0;
  for (const Permutation &h : hua.elements) {
    ++cases;
    if (h.order() == 3)
      return Outcome::fail(cases, "order-3 element [" + c.perm_str(h) + "]");
  }
  return Outcome::pass(cases);
}

inline Outcome chk_suz510b(const Ctx &c) {
  std::uint64_t cases = 0;
  for (idx_t a : c.involutions()) {
    ++cases;
    if ((c.mu(a) * c.m.alpha(a)).order() != 5)
      return Outcome::fail(cases, "a=" + c.el(a));
  }
  return Outcome::pass(cases);
}

inline Outcome chk_suz511(const Ctx &c) {
  const auto central = c.central_mask();
  std::vector<idx_t> reps{0};
  for (idx_t z : c.u.center())
    if (z != 0) reps.push_back(c.sim(z));
  if (reps.size() * c.u.center().size() != c.n())
    return Outcome::fail(0, "rep count does not match |U|/|Z(U)|");
  std::uint64_t cases = 0;
  for (idx_t x : reps)
    for (idx_t y : reps) {
      ++cases;
      if (x != y && central[c.sub(x, y)])
        return Outcome::fail(cases, "x=" + c.el(x) + " y=" + c.el(y) +
                                        " share a coset of Z(U)");
    }
  return Outcome::pass(cases);
}

inline Outcome chk_suz512(const Ctx &c) {
  std::uint64_t cases = 0;
  for (idx_t a : c.u.center())
    for (idx_t b : c.u.center()) {
      if (a == 0 || b == 0 || a == b) continue;
      ++cases;
      if (!c.same_mu(c.add(a, b), c.add(c.neg(c.sim(a)), c.sim(b))))
        return Outcome::fail(cases, "a=" + c.el(a) + " b=" + c.el(b));
    }
  return Outcome::pass(cases);
}

inline Outcome chk_suz513(const Ctx &c) {
  const HuaSubgroup hua = c.m.hua_subgroup();
  std::uint64_t cases = 0;
  // (a) over distinct pairs of central involutions
  for (idx_t a : c.u.center())
    for (idx_t b : c.u.center()) {
      if (a == 0 || b == 0 || a == b) continue;
      ++cases;
      const idx_t lhs = c.sim(c.add(c.neg(c.sim(a)), c.sim(b)));
      const idx_t amab = c.ap(c.mu(b), c.ap(c.mu(a), a)); // a mu_a mu_b
      const idx_t w = c.add(amab, b);
      const idx_t r1 = c.add(c.neg(c.sim(c.ap(c.mu(w), c.ap(c.mu(b), a)))),
                             c.sim(w));
      const idx_t r2 = c.add(c.neg(c.sim(c.add(a, amab))),
                             c.sim(c.add(b, amab)));
      if (lhs != r1 || lhs != r2)
        return Outcome::fail(cases, "a=" + c.el(a) + " b=" + c.el(b));
    }
  // (b) over e in Z(U)^# and distinct g,h in H
  for (idx_t e : c.u.center()) {
    if (e == 0) continue;
    for (const Permutation &g : hua.elements)
      for (const Permutation &h : hua.elements) {
        if (g == h) continue;
        ++cases;
        const idx_t eg = c.ap(g, e), eh = c.ap(h, e);
        const idx_t w = c.ap(g.inverse(), c.ap(h, eh)); // e h^2 g^-1
        const idx_t lhs = c.sim(c.add(c.neg(c.sim(eg)), c.sim(eh)));
        const idx_t rhs = c.add(c.neg(c.sim(c.add(w, eg))),
                                c.sim(c.add(w, eh)));
        if (lhs != rhs)
          return Outcome::fail(cases, "e=" + c.el(e) + " (g,h) in H^2");
      }
  }
  return Outcome::pass(cases);
}

inline Outcome chk_suz514(const Ctx &c) {
  const FieldSpec &f = c.u.spec();
  std::uint64_t cases = 0;
  for (fe_t x = 0; x < f.order(); ++x) {
    ++cases;
    if ((f.theta(x) == x) != (x == 0 || x == 1))
      return Outcome::fail(cases, "theta fixes " + std::to_string(x));
  }
  const idx_t e = base_involution(c);
  const idx_t se = c.sim(e);
  const HuaSubgroup hua = c.m.hua_subgroup();
  for (const Permutation &h : hua.elements) {
    if (h.is_identity()) continue;
    ++cases;
    const idx_t y = c.sim(c.ap(h, e));
    const idx_t comm = c.add(c.add(c.add(c.neg(se), c.neg(y)), se), y);
    if (comm == 0)
      return Outcome::fail(cases, "~e commutes with ~(eh), h=[" + c.perm_str(h) + "]");
  }
  return Outcome::pass(cases);
}

inline Outcome chk_suz515(const Ctx &c) {
  std::uint64_t cases = 0;
  for (idx_t a : c.u.center())
    for (idx_t b : c.u.center()) {
      if (a == 0 || b == 0 || a == b) continue;
      ++cases;
      const idx_t mix = c.add(c.neg(c.sim(a)), c.sim(b));
      const PartitionTag tag = partition_classify(c.u, mix).tag;
      if (tag != PartitionTag::Mixed)
        return Outcome::fail(cases, "a=" + c.el(a) + " b=" + c.el(b) +
                                        " gives non-mixed " + c.el(mix));
    }
  return Outcome::pass(cases);
}

inline Outcome chk_suz516(const Ctx &c) {
  const FieldSpec &f = c.u.spec();
  const idx_t e = base_involution(c);
  if (c.neg(c.sim(e)) != c.u.pack(1, 0))
    return Outcome::fail(1, "-~e != (1,0)");
  std::uint64_t cases = 0;
  for (fe_t a = 1; a < f.order(); ++a) {
    ++cases;
    const idx_t z = c.u.pack(0, f.one_plus_theta(a));
    if (c.neg(c.sim(z)) != c.u.pack(a, 0) ||
        c.sim(z) != c.u.pack(a, f.one_plus_theta(a)))
      return Outcome::fail(cases, "a=" + std::to_string(a));
  }
  return Outcome::pass(cases);
}

inline Outcome chk_suz517(const Ctx &c) {
  const FieldSpec &f = c.u.spec();
  const std::uint64_t q = f.order();
  // partition_classify re-verifies every mixed recomposition and throws on
  // mismatch, so the size sweep is also a decomposition sweep
  const auto sizes = partition_sizes(c.u);
  const std::array<std::uint64_t, 5> expect{1, q - 1, q - 1, q - 1,
                                            (q - 1) * (q - 2)};
  std::uint64_t cases = c.n();
  if (sizes != expect) return Outcome::fail(cases, "class sizes off");
  // uniqueness: the (q-1)(q-2) recompositions -~(0,s^(1+theta)) + ~(0,t^(1+theta))
  // with s != t in K^# are pairwise distinct mixed elements
  std::set<idx_t> seen;
  for (fe_t s = 1; s < q; ++s)
    for (fe_t t = 1; t < q; ++t) {
      if (s == t) continue;
      ++cases;
      const idx_t m = c.add(c.u.pack(s, 0), c.u.pack(t, f.one_plus_theta(t)));
      if (!seen.insert(m).second)
        return Outcome::fail(cases, "duplicate decomposition at s=" +
                                        std::to_string(s) + " t=" + std::to_string(t));
    }
  if (seen.size() != (q - 1) * (q - 2))
    return Outcome::fail(cases, "decomposition count off");
  return Outcome::pass(cases);
}

inline Outcome chk_suz518(const Ctx &c) {
  const FieldSpec &f = c.u.spec();
  std::uint64_t cases = 0;
  for (idx_t x = 1; x < c.n(); ++x) {
    ++cases;
    const fe_t n0 = suzuki_norm0(f, c.u.first(x), c.u.second(x));
    if (!c.same_mu(c.u.pack(0, n0), x)) return Outcome::fail(cases, "x=" + c.el(x));
  }
  return Outcome::pass(cases);
}

inline Outcome chk_suz519a(const Ctx &c) {
  const FieldSpec &f = c.u.spec();
  std::uint64_t cases = 0;
  for (fe_t a = 1; a < f.order(); ++a) {
    ++cases;
    if (c.tau(c.u.pack(0, f.one_plus_theta(a))) != c.u.pack(f.inv(a), 0))
      return Outcome::fail(cases, "a=" + std::to_string(a));
  }
  return Outcome::pass(cases);
}

inline Outcome chk_suz519b(const Ctx &c) {
  const FieldSpec &f = c.u.spec();
  std::uint64_t cases = 0;
  for (fe_t a = 1; a < f.order(); ++a) {
    ++cases;
    if (c.tau(c.u.pack(a, 0)) != c.u.pack(0, f.inv(f.one_plus_theta(a))))
      return Outcome::fail(cases, "a=" + std::to_string(a));
  }
  return Outcome::pass(cases);
}

inline Outcome chk_suz519c(const Ctx &c) {
  const FieldSpec &f = c.u.spec();
  std::uint64_t cases = 0;
  for (fe_t a = 1; a < f.order(); ++a) {
    ++cases;
    if (c.tau(c.u.pack(a, f.one_plus_theta(a))) !=
        c.u.pack(f.inv(a), f.inv(f.one_plus_theta(a))))
      return Outcome::fail(cases, "a=" + std::to_string(a));
  }
  return Outcome::pass(cases);
}

inline Outcome chk_suz519d(const Ctx &c) {
  const FieldSpec &f = c.u.spec();
  const auto opt_inv = one_plus_theta_inverse_table(f);
  std::uint64_t cases = 0;
  for (fe_t a = 1; a < f.order(); ++a)
    for (fe_t b = 1; b < f.order(); ++b) {
      if (b == f.one_plus_theta(a)) continue;
      ++cases;
      const fe_t t = f.theta_inv(f.div(b, a));
      const fe_t s = f.add(a, t);
      const fe_t n = opt_inv[suzuki_norm0(f, a, b)]; // N^(1+theta) = N_0(a,b)
      const fe_t x = f.add(f.div(s, f.mul(n, t)), f.inv(t));
      if (c.tau(c.u.pack(a, b)) != c.u.pack(x, f.div(x, f.theta(t))))
        return Outcome::fail(cases, "a=" + std::to_string(a) +
                                        " b=" + std::to_string(b));
    }
  return Outcome::pass(cases);
}

inline Outcome chk_suz519e(const Ctx &c) {
  const HuaSubgroup hua = c.m.hua_subgroup();
  const idx_t e = base_involution(c);
  std::vector<Permutation> inv;
  inv.reserve(hua.elements.size());
  for (const Permutation &h : hua.elements) inv.push_back(h.inverse());
  // H acts regularly on Z(U)^#: index h by the image of e
  std::vector<int> by_image(c.n(), -1);
  for (std::size_t i = 0; i < hua.elements.size(); ++i)
    by_image[c.ap(hua.elements[i], e)] = static_cast<int>(i);
  std::uint64_t cases = 0;
  for (std::size_t gi = 0; gi < hua.elements.size(); ++gi)
    for (std::size_t hi = 0; hi < hua.elements.size(); ++hi) {
      if (gi == hi) continue;
      ++cases;
      const idx_t eg = c.ap(hua.elements[gi], e);
      const idx_t eh = c.ap(hua.elements[hi], e);
      const idx_t ej = c.add(c.ap(inv[gi], e), c.ap(inv[hi], e));
      const int ji = by_image[ej];
      if (ji < 0) return Outcome::fail(cases, "ej outside the H-orbit of e");
      // e j^-1 h^-2
      const idx_t w = c.ap(inv[hi], c.ap(inv[hi], c.ap(inv[ji], e)));
      const idx_t lhs = c.tau(c.add(c.neg(c.sim(eg)), c.sim(eh)));
      const idx_t rhs = c.add(c.neg(c.sim(w)), c.sim(c.ap(inv[hi], e)));
      if (lhs != rhs)
        return Outcome::fail(cases, "eg=" + c.el(eg) + " eh=" + c.el(eh));
    }
  return Outcome::pass(cases);
}

inline Outcome chk_suz520(const Ctx &c) {
  const FieldSpec &f = c.u.spec();
  std::uint64_t cases = 0;
  for (fe_t x = 0; x < f.order(); ++x) {
    ++cases;
    if (f.theta(f.theta(x)) != f.sqr(x))
      return Outcome::fail(cases, "x=" + std::to_string(x));
  }
  return Outcome::pass(cases);
}

inline Outcome chk_t61c(const Ctx &c) {
  const std::uint64_t q = c.u.spec().order();
  const auto sizes = partition_sizes(c.u);
  if (sizes != std::array<std::uint64_t, 5>{1, q - 1, q - 1, q - 1,
                                            (q - 1) * (q - 2)})
    return Outcome::fail(c.n(), "partition class sizes off");
  return Outcome::pass(c.n());
}

inline Outcome chk_t61d(const Ctx &c) {
  const HuaSubgroup hua = c.m.hua_subgroup();
  const auto center = c.u.center();
  std::set<idx_t> zsharp(center.begin(), center.end());
  zsharp.erase(0);
  if (zsharp.empty()) return Outcome::vacuous();
  std::set<idx_t> orbit;
  std::uint64_t cases = 0;
  for (const Permutation &h : hua.elements) {
    ++cases;
    orbit.insert(static_cast<idx_t>(h[*zsharp.begin()]));
  }
  if (orbit != zsharp)
    return Outcome::fail(cases, "H-orbit has size " + std::to_string(orbit.size()) +
                                    ", |Z(U)^#| = " + std::to_string(zsharp.size()));
  return Outcome::pass(cases);
}

inline Outcome chk_t61e(const Ctx &c) {
  const auto central = c.central_mask();
  std::uint64_t cases = 0;
  for (idx_t a = 1; a < c.n(); ++a) {
    ++cases;
    bool found = false;
    for (idx_t b : c.m.mu_fibers()[c.m.fiber_of(a)])
      if (central[b] && c.is_involution(b)) found = true;
    if (!found)
      return Outcome::fail(cases, "no central involution shares mu with a=" + c.el(a));
  }
  return Outcome::pass(cases);
}

} // namespace detail

inline void append_suzuki_checks(std::vector<CheckInfo> &r) {
  using namespace detail;
  const Applicability suz = Applicability::Suzuki;
  r.insert(r.end(), {
    {"SUZ5.5a", "tau is an involution on X", suz, chk_suz_tau2},
    {"SUZ5.5b", "N(a,b) = a^(2+theta) + ab + b^theta vanishes only at the origin", suz, chk_suz_aniso},
    {"SUZ5.5c", "mu_(a,b) = mu_(c,d) iff N(a,b) = N(c,d)", suz, chk_suz_mu_norm_fiber},
    {"SUZ5.5d", "tau mu_(a,b) acts on U as h_lambda with lambda = N(a,b)^(2-theta)", suz, chk_suz_hua_scaling},
    {"SUZ5.5e", "N(a,b) = (b/a)^(1+theta) + (a^theta + b/a)^(1+theta) for a != 0", suz, chk_suz_norm_factor},
    {"SUZ5.8", "(~a)*2 = a for involutions a", suz, chk_suz58},
    {"SUZ5.9", "H has no element of order 3", suz, chk_suz59},
    {"SUZ5.10b", "mu_a alpha_a has order 5 for involutions a", suz, chk_suz510b},
    {"SUZ5.11", "{0} u ~Z(U)^# is a transversal of U/Z(U)", suz, chk_suz511},
    {"SUZ5.12", "mu_(a+b) = mu_(-~a+~b) for distinct a, b in Z(U)^#", suz, chk_suz512},
    {"SUZ5.13", "~(-~a+~b) rewrites through the mu-orbit of a and b", suz, chk_suz513},
    {"SUZ5.14", "Fix(theta) = F_2 and [~e, ~(eh)] != 1 for h in H^#", suz, chk_suz514},
    {"SUZ5.15", "-~a + ~b avoids Z(U)^#, ~Z(U)^# and -~Z(U)^#", suz, chk_suz515},
    {"SUZ5.16", "-~e = (1,0), -~(0,a^(1+theta)) = (a,0), ~(0,a^(1+theta)) = (a,a^(1+theta))", suz, chk_suz516},
    {"SUZ5.17", "(a,b) = (s,0) + (t,t^(1+theta)) uniquely; the five classes partition U", suz, chk_suz517},
    {"SUZ5.18", "mu_(0,N_0(a,b)) = mu_(a,b)", suz, chk_suz518},
    {"SUZ5.19a", "(0,a^(1+theta))tau = (1/a, 0)", suz, chk_suz519a},
    {"SUZ5.19b", "(a,0)tau = (0, a^(-1-theta))", suz, chk_suz519b},
    {"SUZ5.19c", "(a,a^(1+theta))tau = (1/a, a^(-1-theta))", suz, chk_suz519c},
    {"SUZ5.19d", "(a,b)tau = (x, x/t^theta) with x = s/(Nt) + 1/t", suz, chk_suz519d},
    {"SUZ5.19e", "(-~(eg)+~(eh))tau = -~(e j^-1 h^-2) + ~(e h^-1) with ej = e g^-1 + e h^-1", suz, chk_suz519e},
    {"SUZ5.20-TITS", "theta squares to the Frobenius x -> x^2", suz, chk_suz520},
    {"T6.1c", "U splits into Z(U), ~Z(U)^#, -~Z(U)^# and the mixed class", suz, chk_t61c},
    {"T6.1d", "H is transitive on Z(U)^#", suz, chk_t61d},
    {"T6.1e", "every a in U^# shares its mu-map with a central involution", suz, chk_t61e},
  });
}

} // namespace zmset
