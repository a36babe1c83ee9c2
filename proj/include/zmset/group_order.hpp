#pragma once

// Order computation for the little projective group G = <U_infinity, tau>
// acting on X. Two strategies:
//   NaiveClosure  - breadth-first product closure with hashed dedup,
//                   capped at 10^6 elements
//   SchreierSims  - stabilizer chain with deterministic Schreier generator
//                   sifting; needed once |G| outgrows the naive cap

#include <cstdint>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "moufang_set.hpp"
#include "permutation.hpp"

namespace zmset {

enum class OrderStrategy { NaiveClosure, SchreierSims };

constexpr std::size_t kNaiveClosureCap = 1000000;

// Small generating set for G: translations by a basis of U, plus tau.
// For A(n,theta) the center is the derived subgroup, so lifts of a basis of
// U/Z(U) generate U.
inline std::vector<Permutation> little_projective_generators(const MoufangSet &m) {
  std::vector<Permutation> gens;
  const RootGroup &u = m.root_group();
  for (int i = 0; i < u.spec().degree(); ++i) {
    const fe_t e = fe_t{1} << i;
    gens.push_back(m.alpha(u.pack(e, 0)));
  }
  if (u.kind() == RootGroupKind::SuzukiTwoGroup)
    gens.push_back(m.alpha(u.pack(0, 1))); // a central generator, for safety
  gens.push_back(m.tau());
  return gens;
}

struct ClosureResult {
  std::uint64_t order = 0;
  std::vector<Permutation> elements;
};

inline ClosureResult naive_closure(const std::vector<Permutation> &gens,
                                   std::size_t cap = kNaiveClosureCap) {
  if (gens.empty()) throw std::invalid_argument("naive_closure: no generators");
  ClosureResult r;
  std::unordered_set<Permutation, PermutationHash> seen;
  const Permutation id(gens.front().degree());
  seen.insert(id);
  r.elements.push_back(id);
  std::vector<Permutation> frontier{id};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const Permutation &x : frontier)
      for (const Permutation &g : gens) {
        Permutation y = x * g;
        if (seen.insert(y).second) {
          if (seen.size() > cap)
            throw std::runtime_error("naive_closure: element cap exceeded");
          r.elements.push_back(y);
          next.push_back(std::move(y));
        }
      }
    frontier = std::move(next);
  }
  r.order = r.elements.size();
  return r;
}

// Stabilizer chain. Base points are chosen on demand, starting from the
// preferred list (infinity, 0, ...).
class StabilizerChain {
public:
  StabilizerChain(const std::vector<Permutation> &gens,
                  std::vector<std::size_t> preferred_base = {}) {
    if (gens.empty())
      throw std::invalid_argument("StabilizerChain: no generators");
    degree_ = gens.front().degree();
    preferred_ = std::move(preferred_base);
    run(gens);
  }

  std::uint64_t order() const {
    std::uint64_t n = 1;
    for (const Level &l : levels_) n *= l.orbit.size();
    return n;
  }

  bool contains(Permutation g) const {
    std::size_t level = 0;
    return sift(g, level).is_identity();
  }

  const std::vector<std::size_t> &base() const { return base_; }

private:
  struct Level {
    std::size_t base_pt = 0;
    std::vector<Permutation> gens;
    std::vector<std::size_t> orbit;
    std::vector<int> orbit_pos;           // point -> position in orbit, -1 absent
    std::vector<Permutation> transversal; // indexed by point; u maps base_pt to point
    std::unordered_set<std::uint64_t> done; // processed (orbit pos, gen) pairs
    std::size_t cursor = 0;               // scan position over pos*gens+gen
  };

  // Strip g through levels starting at `level`; on return `level` is the
  // depth reached. Residue is the identity iff g was in the chain.
  Permutation sift(Permutation g, std::size_t &level) const {
    for (; level < levels_.size(); ++level) {
      const Level &l = levels_[level];
      const std::size_t x = g[l.base_pt];
      if (l.orbit_pos[x] < 0) return g;
      g = g * l.transversal[x].inverse();
    }
    return g;
  }

  std::size_t pick_base_point(const Permutation &g) const {
    for (std::size_t p : preferred_) {
      bool used = false;
      for (std::size_t b : base_) used |= (b == p);
      if (!used && g[p] != p) return p;
    }
    return g.first_moved();
  }

  void add_level(const Permutation &g) {
    Level l;
    l.base_pt = pick_base_point(g);
    l.orbit_pos.assign(degree_, -1);
    l.transversal.assign(degree_, Permutation());
    l.orbit.push_back(l.base_pt);
    l.orbit_pos[l.base_pt] = 0;
    l.transversal[l.base_pt] = Permutation(degree_);
    base_.push_back(l.base_pt);
    levels_.push_back(std::move(l));
  }

  void insert_gen(std::size_t i, const Permutation &g) {
    Level &l = levels_[i];
    l.gens.push_back(g);
    // extend the orbit with the new generator set
    for (std::size_t pos = 0; pos < l.orbit.size(); ++pos)
      for (const Permutation &h : l.gens) {
        const std::size_t y = h[l.orbit[pos]];
        if (l.orbit_pos[y] < 0) {
          l.orbit_pos[y] = static_cast<int>(l.orbit.size());
          l.transversal[y] = l.transversal[l.orbit[pos]] * h;
          l.orbit.push_back(y);
        }
      }
    l.cursor = 0; // rescan: the orbit/generator grid grew
  }

  // Next unprocessed (orbit position, generator) pair at level i, if any.
  bool next_pair(std::size_t i, std::size_t &pos, std::size_t &gidx) {
    Level &l = levels_[i];
    const std::size_t total = l.orbit.size() * l.gens.size();
    while (l.cursor < total) {
      const std::size_t c = l.cursor++;
      const std::size_t p = c / l.gens.size(), g = c % l.gens.size();
      const std::uint64_t key = (static_cast<std::uint64_t>(p) << 32) | g;
      if (l.done.insert(key).second) {
        pos = p;
        gidx = g;
        return true;
      }
    }
    return false;
  }

  void run(const std::vector<Permutation> &gens) {
    for (const Permutation &g : gens) {
      if (g.is_identity()) continue;
      if (levels_.empty()) add_level(g);
      insert_gen(0, g);
    }
    if (levels_.empty()) return; // trivial group

    // Process Schreier generators, deepest level first. Levels below i are
    // complete whenever i is decremented.
    std::size_t i = levels_.size() - 1;
    while (true) {
      std::size_t pos, gidx;
      if (!next_pair(i, pos, gidx)) {
        if (i == 0) break;
        --i;
        continue;
      }
      Level &l = levels_[i];
      const std::size_t pt = l.orbit[pos];
      const Permutation &g = l.gens[gidx];
      Permutation s = l.transversal[pt] * g * l.transversal[g[pt]].inverse();
      std::size_t level = i + 1;
      Permutation residue = sift(std::move(s), level);
      if (residue.is_identity()) continue;
      if (level == levels_.size()) add_level(residue);
      insert_gen(level, residue);
      i = level; // everything below `level` is still complete
    }
  }

  std::size_t degree_ = 0;
  std::vector<std::size_t> preferred_;
  std::vector<std::size_t> base_;
  std::vector<Level> levels_;
};

inline std::uint64_t group_order(const MoufangSet &m, OrderStrategy strategy) {
  const auto gens = little_projective_generators(m);
  if (strategy == OrderStrategy::NaiveClosure)
    return naive_closure(gens).order;
  StabilizerChain chain(gens, {m.infinity(), 0});
  return chain.order();
}

} // namespace zmset
