#pragma once

// The Moufang set engine. A Moufang set here is a root group U together with
// a permutation tau of X = U u {infinity} interchanging 0 and infinity. From
// these we build the translations alpha_a, the mu-maps, the Hua maps and the
// Hua subgroup, and verify the Moufang axiom: every Hua map restricts to an
// automorphism of U.
//
// Convention (fixed globally): permutations act on the right and compose
// left to right, so x(pq) = (xp)q and p^q = q^-1 p q. This matches the
// x-alpha notation the formulas are written in.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "permutation.hpp"
#include "root_group.hpp"

namespace zmset {

struct VerifyReport {
  bool pass = false;
  bool tau_swaps_zero_infinity = false;
  bool all_mu_swap = false;          // every mu_a interchanges 0 and infinity
  std::uint64_t maps_checked = 0;    // Hua maps swept
  std::uint64_t cases_checked = 0;   // additivity pairs swept
  std::string first_counterexample;  // empty iff pass
};

struct HuaSubgroup {
  std::vector<Permutation> elements;   // includes the identity
  std::vector<Permutation> generators; // the mu_a mu_b products used
};

class MoufangSet {
public:
  MoufangSet(RootGroup u, Permutation tau)
      : u_(std::move(u)), tau_(std::move(tau)) {
    if (tau_.degree() != u_.size() + 1)
      throw std::invalid_argument("MoufangSet: tau degree != |U| + 1");
    if (tau_[0] != infinity() || tau_[infinity()] != 0)
      throw std::invalid_argument("MoufangSet: tau must interchange 0 and infinity");
    tau_inv_ = tau_.inverse();
    build_alphas();
    build_mus();
  }

  const RootGroup &root_group() const { return u_; }
  const Permutation &tau() const { return tau_; }
  const Permutation &tau_inv() const { return tau_inv_; }
  pt_t infinity() const { return static_cast<pt_t>(u_.size()); }
  std::size_t num_points() const { return u_.size() + 1; }

  // alpha_a: infinity fixed, b -> b + a
  const Permutation &alpha(idx_t a) const { return alphas_[a]; }

  // mu_a = alpha_{(-a)tau^-1}^tau alpha_a alpha_{-(a tau^-1)}^tau, the
  // element of U_0 alpha_a U_0 interchanging 0 and infinity
  const Permutation &mu(idx_t a) const {
    require_nonzero(a, "mu");
    return mus_[a];
  }

  // Hua map h_a = tau alpha_a alpha_{-(a tau^-1)}^tau alpha_{-(~a)}
  Permutation hua(idx_t a) const {
    require_nonzero(a, "hua");
    const idx_t at = apply_elem(tau_inv_, a);
    return tau_ * alphas_[a] * conj_alpha(u_.neg(at)) * alphas_[u_.neg(sim(a))];
  }

  // ~a = (-(a tau^-1)) tau; independent of the choice of tau
  idx_t sim(idx_t a) const {
    require_nonzero(a, "sim");
    return apply_elem(tau_, u_.neg(apply_elem(tau_inv_, a)));
  }

  // alpha_x^tau = tau^-1 alpha_x tau, an element of U_0
  Permutation conj_alpha(idx_t x) const {
    return tau_inv_ * alphas_[x] * tau_;
  }

  bool mu_swap_ok() const { return mu_swap_ok_; }

  // Moufang axiom sweep: for every a in U^#, h_a fixes 0 and infinity and
  // restricts to an automorphism of U.
  VerifyReport verify_moufang() const {
    VerifyReport r;
    r.tau_swaps_zero_infinity = true; // enforced at construction
    r.all_mu_swap = mu_swap_ok_;
    if (!mu_swap_ok_) {
      r.first_counterexample =
          "mu_" + to_string(u_.element(mu_bad_a_)) + " does not interchange 0 and infinity";
      return r;
    }
    const idx_t n = u_.size();
    for (idx_t a = 1; a < n; ++a) {
      const Permutation h = hua(a);
      ++r.maps_checked;
      if (h[0] != 0 || h[infinity()] != infinity()) {
        r.first_counterexample =
            "h_" + to_string(u_.element(a)) + " does not fix {0, infinity}";
        return r;
      }
      const pt_t *img = h.images().data();
      for (idx_t x = 0; x < n; ++x) {
        const idx_t hx = img[x];
        for (idx_t y = 0; y < n; ++y) {
          if (img[u_.add(x, y)] != u_.add(hx, img[y])) {
            r.cases_checked += y + 1;
            r.first_counterexample =
                "h_" + to_string(u_.element(a)) + " is not additive at x=" +
                to_string(u_.element(x)) + " y=" + to_string(u_.element(y));
            return r;
          }
        }
        r.cases_checked += n;
      }
    }
    r.pass = true;
    return r;
  }

  // H = <mu_a mu_b | a,b in U^#>, closed under composition and inverses.
  // Every member fixes 0 and infinity.
  HuaSubgroup hua_subgroup(std::size_t cap = 1u << 20) const {
    HuaSubgroup h;
    const auto &mus = distinct_mus();
    for (const Permutation &p : mus)
      for (const Permutation &q : mus) h.generators.push_back(p * q);
    std::unordered_set<Permutation, PermutationHash> seen;
    std::vector<Permutation> frontier;
    const Permutation id(num_points());
    seen.insert(id);
    h.elements.push_back(id);
    frontier.push_back(id);
    while (!frontier.empty()) {
      std::vector<Permutation> next;
      for (const Permutation &x : frontier)
        for (const Permutation &g : h.generators) {
          Permutation y = x * g;
          if (seen.insert(y).second) {
            if (seen.size() > cap)
              throw std::runtime_error("hua_subgroup: closure cap exceeded");
            h.elements.push_back(y);
            next.push_back(std::move(y));
          }
        }
      frontier = std::move(next);
    }
    for (const Permutation &x : h.elements)
      if (x[0] != 0 || x[infinity()] != infinity())
        throw std::logic_error("hua_subgroup: member moves 0 or infinity");
    return h;
  }

  // a is special iff (-a)tau^-1 = -(a tau^-1); cross-checked against the
  // mu-map criterion (-a)mu_a = a.
  bool is_special(idx_t a) const {
    require_nonzero(a, "is_special");
    const bool by_tau = apply_elem(tau_inv_, u_.neg(a)) ==
                        u_.neg(apply_elem(tau_inv_, a));
    const bool by_mu = apply_elem(mus_[a], u_.neg(a)) == a;
    if (by_tau != by_mu)
      throw std::logic_error("is_special: criteria disagree at " +
                             to_string(u_.element(a)));
    return by_tau;
  }

  // Zassenhaus: the Moufang set is proper (H != 1) and no nontrivial element
  // of H fixes a point of U^#.
  bool is_zassenhaus(const HuaSubgroup &h) const {
    if (h.elements.size() <= 1) return false;
    for (const Permutation &x : h.elements) {
      if (x.is_identity()) continue;
      for (idx_t u = 1; u < u_.size(); ++u)
        if (x[u] == u) return false;
    }
    return true;
  }
  bool is_zassenhaus() const { return is_zassenhaus(hua_subgroup()); }

  // V_a fibers: elements of U^# grouped by their mu-map.
  const std::vector<std::vector<idx_t>> &mu_fibers() const {
    build_fibers();
    return fibers_;
  }
  // fiber index of a in mu_fibers()
  std::size_t fiber_of(idx_t a) const {
    require_nonzero(a, "fiber_of");
    build_fibers();
    return fiber_id_[a];
  }
  // one representative permutation per fiber
  const std::vector<Permutation> &distinct_mus() const {
    build_fibers();
    return fiber_reps_;
  }

  idx_t apply_elem(const Permutation &p, idx_t x) const {
    const pt_t y = p[x];
    if (y == infinity())
      throw std::domain_error("apply_elem: image is infinity");
    return y;
  }

private:
  void require_nonzero(idx_t a, const char *op) const {
    if (a == 0)
      throw std::domain_error(std::string(op) + ": defined on U^# only");
    if (a >= u_.size())
      throw std::invalid_argument(std::string(op) + ": index out of range");
  }

  void build_alphas() {
    const idx_t n = u_.size();
    alphas_.reserve(n);
    for (idx_t a = 0; a < n; ++a) {
      std::vector<pt_t> img(n + 1);
      for (idx_t b = 0; b < n; ++b) img[b] = static_cast<pt_t>(u_.add(b, a));
      img[n] = static_cast<pt_t>(n);
      alphas_.emplace_back(std::move(img));
    }
  }

  void build_mus() {
    const idx_t n = u_.size();
    mus_.resize(n);
    for (idx_t a = 1; a < n; ++a) {
      const idx_t na_t = apply_elem(tau_inv_, u_.neg(a)); // (-a) tau^-1
      const idx_t a_t = apply_elem(tau_inv_, a);          // a tau^-1
      mus_[a] = conj_alpha(na_t) * alphas_[a] * conj_alpha(u_.neg(a_t));
      if (mus_[a][0] != infinity() || mus_[a][infinity()] != 0) {
        if (mu_swap_ok_) {
          mu_swap_ok_ = false;
          mu_bad_a_ = a;
        }
      }
    }
  }

  void build_fibers() const {
    if (!fibers_.empty()) return;
    std::unordered_map<Permutation, std::size_t, PermutationHash> ids;
    fiber_id_.assign(u_.size(), 0);
    for (idx_t a = 1; a < u_.size(); ++a) {
      auto [it, fresh] = ids.try_emplace(mus_[a], fibers_.size());
      if (fresh) {
        fibers_.emplace_back();
        fiber_reps_.push_back(mus_[a]);
      }
      fiber_id_[a] = it->second;
      fibers_[it->second].push_back(a);
    }
  }

  RootGroup u_;
  Permutation tau_, tau_inv_;
  std::vector<Permutation> alphas_, mus_;
  bool mu_swap_ok_ = true;
  idx_t mu_bad_a_ = 0;
  mutable std::vector<std::vector<idx_t>> fibers_;
  mutable std::vector<Permutation> fiber_reps_;
  mutable std::vector<std::size_t> fiber_id_;
};

} // namespace zmset
