#pragma once

// Builders for the two families of finite Zassenhaus Moufang sets with
// even-order root groups:
//   build_projective_line(q) - U = (GF(q),+), tau inverts U^#; the little
//                              projective group is PSL(2,q)
//   build_suzuki(q)          - U = A(n,theta) with theta the Tits
//                              automorphism, tau acts by the anisotropic
//                              norm N(a,b) = a^(2+theta) + ab + b^theta
// plus the Suzuki norm maps and the Suzuki partition of U.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gf2n.hpp"
#include "moufang_set.hpp"
#include "root_group.hpp"

namespace zmset {

namespace detail {

inline int exact_log2(std::uint64_t q) {
  int n = 0;
  while (q > 1) {
    if (q & 1) return -1;
    q >>= 1;
    ++n;
  }
  return n;
}

} // namespace detail

// N(a,b) = a^(2+theta) + a*b + b^theta; zero only at the origin.
inline fe_t suzuki_norm(const FieldSpec &f, fe_t a, fe_t b) {
  if (!f.tits()) throw std::invalid_argument("suzuki_norm: Tits spec required");
  const fe_t a2t = f.mul(f.sqr(a), f.theta(a));
  return f.add(f.add(a2t, f.mul(a, b)), f.theta(b));
}

// N0(a,b) = a^(1+theta) + a^(theta - theta^-1) b^(theta^-1) + b, with the
// middle term read as theta(a) / theta^-1(a) for a != 0 and 0 for a = 0.
inline fe_t suzuki_norm0(const FieldSpec &f, fe_t a, fe_t b) {
  if (!f.tits()) throw std::invalid_argument("suzuki_norm0: Tits spec required");
  fe_t mid = 0;
  if (a != 0) mid = f.mul(f.div(f.theta(a), f.theta_inv(a)), f.theta_inv(b));
  return f.add(f.add(f.one_plus_theta(a), mid), b);
}

// tau of MSuz: interchanges 0 and infinity; (a,b) -> (b/N(a,b), a/N(a,b)).
inline Permutation suzuki_tau(const RootGroup &u) {
  if (u.kind() != RootGroupKind::SuzukiTwoGroup)
    throw std::invalid_argument("suzuki_tau: Suzuki root group required");
  const FieldSpec &f = u.spec();
  const idx_t n = u.size();
  std::vector<pt_t> img(n + 1);
  img[0] = static_cast<pt_t>(n);
  img[n] = 0;
  for (idx_t x = 1; x < n; ++x) {
    const fe_t a = u.first(x), b = u.second(x);
    const fe_t ninv = f.inv(suzuki_norm(f, a, b));
    img[x] = static_cast<pt_t>(u.pack(f.mul(b, ninv), f.mul(a, ninv)));
  }
  return Permutation(std::move(img));
}

// tau of M(F_q): interchanges 0 and infinity; x -> x^-1 on U^#
// (equal to -x^-1 in characteristic 2).
inline Permutation inversion_tau(const RootGroup &u) {
  const FieldSpec &f = u.spec();
  const idx_t n = u.size();
  std::vector<pt_t> img(n + 1);
  img[0] = static_cast<pt_t>(n);
  img[n] = 0;
  for (idx_t x = 1; x < n; ++x) img[x] = static_cast<pt_t>(f.inv(x));
  return Permutation(std::move(img));
}

inline MoufangSet build_projective_line(std::uint64_t q) {
  const int n = detail::exact_log2(q);
  if (n < 2)
    throw std::invalid_argument(
        "build_projective_line: q must be an even prime power >= 4");
  const FieldSpec f = FieldSpec::make(n);
  RootGroup u = RootGroup::abelian(f);
  Permutation tau = inversion_tau(u);
  return MoufangSet(std::move(u), std::move(tau));
}

inline MoufangSet build_suzuki(std::uint64_t q) {
  const int n = detail::exact_log2(q);
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument(
        "build_suzuki: q must be 2^n with n odd >= 3");
  const FieldSpec f = FieldSpec::make_tits(n);
  RootGroup u = RootGroup::suzuki(f);
  Permutation tau = suzuki_tau(u);
  MoufangSet m(std::move(u), std::move(tau));
  // Normalization adopted by the construction: with e = (0,1) we must have
  // ~e = (1,1) and -~e = (1,0). Assert rather than re-derive.
  const RootGroup &g = m.root_group();
  const idx_t e = g.pack(0, 1);
  if (m.sim(e) != g.pack(1, 1) || g.neg(m.sim(e)) != g.pack(1, 0))
    throw std::logic_error("build_suzuki: base involution normalization failed");
  return m;
}

// Suzuki partition of U:
//   U = Z(U)  u  ~Z(U)^#  u  -~Z(U)^#  u  {-~a + ~b | a,b central, a != b}
// in coordinates: (0,*), (a, a^(1+theta)), (a, 0), and the mixed elements.
enum class PartitionTag { Zero, Center, SimZ, NegSimZ, Mixed };

struct SuzukiPartitionClass {
  PartitionTag tag = PartitionTag::Zero;
  // present iff tag == Mixed: (a,b) = -~(0,s^(1+theta)) + ~(0,t^(1+theta))
  std::optional<std::pair<fe_t, fe_t>> decomposition;
};

inline SuzukiPartitionClass partition_classify(const RootGroup &u, idx_t x) {
  if (u.kind() != RootGroupKind::SuzukiTwoGroup)
    throw std::invalid_argument("partition_classify: Suzuki root group required");
  const FieldSpec &f = u.spec();
  const fe_t a = u.first(x), b = u.second(x);
  if (a == 0) return {b == 0 ? PartitionTag::Zero : PartitionTag::Center, {}};
  if (b == 0) return {PartitionTag::NegSimZ, {}};
  if (b == f.one_plus_theta(a)) return {PartitionTag::SimZ, {}};
  // t = (b/a)^(theta^-1), s = a - t = a + t; verified by recomposition
  const fe_t t = f.theta_inv(f.div(b, a));
  const fe_t s = f.add(a, t);
  const idx_t neg_sim_s = u.pack(s, 0);
  const idx_t sim_t = u.pack(t, f.one_plus_theta(t));
  if (u.add(neg_sim_s, sim_t) != x)
    throw std::logic_error("partition_classify: recomposition mismatch");
  return {PartitionTag::Mixed, std::make_pair(s, t)};
}

// class sizes indexed Zero, Center, SimZ, NegSimZ, Mixed
inline std::array<std::uint64_t, 5> partition_sizes(const RootGroup &u) {
  std::array<std::uint64_t, 5> sizes{};
  for (idx_t x = 0; x < u.size(); ++x)
    ++sizes[static_cast<int>(partition_classify(u, x).tag)];
  return sizes;
}

} // namespace zmset
