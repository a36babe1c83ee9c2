#pragma once

// The two root-group structures U: the additive group of GF(q) and the
// Suzuki 2-group A(n,theta) with twisted addition
//   (a,b) + (c,d) = (a+c, b+d + a*c^theta).
// The API is written additively following the usual convention for root
// groups even though A(n,theta) is NOT abelian: x + y != y + x in general.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gf2n.hpp"

namespace zmset {

using idx_t = std::uint32_t; // dense element index, 0 = neutral element

enum class RootGroupKind { Abelian, SuzukiTwoGroup };

struct RootGroupElement {
  // Scalar a       <-> index a
  // Pair (a,b)     <-> index a*2^n + b
  fe_t a = 0;
  fe_t b = 0;
  bool pair = false;

  static RootGroupElement scalar(fe_t a) { return {a, 0, false}; }
  static RootGroupElement make_pair(fe_t a, fe_t b) { return {a, b, true}; }

  bool operator==(const RootGroupElement &o) const {
    return a == o.a && b == o.b && pair == o.pair;
  }
  bool operator!=(const RootGroupElement &o) const { return !(*this == o); }
};

class RootGroup {
public:
  static RootGroup abelian(const FieldSpec &spec) {
    return RootGroup(RootGroupKind::Abelian, spec);
  }

  static RootGroup suzuki(const FieldSpec &spec) {
    if (!spec.tits() || spec.degree() % 2 == 0 || spec.degree() < 3)
      throw std::invalid_argument(
          "RootGroup::suzuki: needs a Tits spec with odd degree >= 3");
    return RootGroup(RootGroupKind::SuzukiTwoGroup, spec);
  }

  RootGroupKind kind() const { return kind_; }
  const FieldSpec &spec() const { return spec_; }
  idx_t size() const { return size_; }

  idx_t index_of(const RootGroupElement &x) const {
    if (x.pair != (kind_ == RootGroupKind::SuzukiTwoGroup))
      throw std::invalid_argument("RootGroup: element kind mismatch");
    return x.pair ? (static_cast<idx_t>(x.a) << spec_.degree()) | x.b : x.a;
  }

  RootGroupElement element(idx_t i) const {
    if (kind_ == RootGroupKind::Abelian)
      return RootGroupElement::scalar(static_cast<fe_t>(i));
    return RootGroupElement::make_pair(static_cast<fe_t>(i >> spec_.degree()),
                                       static_cast<fe_t>(i & (field_mask_)));
  }

  idx_t add(idx_t x, idx_t y) const {
    if (!add_table_.empty())
      return add_table_[static_cast<std::size_t>(x) * size_ + y];
    return add_slow(x, y);
  }

  idx_t neg(idx_t x) const {
    if (kind_ == RootGroupKind::Abelian) return x;
    // -(a,b) = (a, b + a^(1+theta))
    const fe_t a = first(x), b = second(x);
    return pack(a, spec_.add(b, spec_.one_plus_theta(a)));
  }

  idx_t sub(idx_t x, idx_t y) const { return add(x, neg(y)); }

  idx_t dbl(idx_t x) const { return add(x, x); }

  // n-fold sum x + x + ... + x
  idx_t times(idx_t x, unsigned n) const {
    idx_t r = 0;
    for (unsigned i = 0; i < n; ++i) r = add(r, x);
    return r;
  }

  unsigned element_order(idx_t x) const {
    unsigned n = 1;
    idx_t y = x;
    while (y != 0) {
      y = add(y, x);
      ++n;
    }
    return n;
  }

  // h_lambda: (a,b) -> (lambda*a, lambda^(1+theta)*b), lambda != 0
  idx_t h_lambda(fe_t lambda, idx_t x) const {
    if (kind_ != RootGroupKind::SuzukiTwoGroup)
      throw std::invalid_argument("RootGroup::h_lambda: Suzuki kind only");
    if (lambda == 0)
      throw std::domain_error("RootGroup::h_lambda: lambda must be nonzero");
    return pack(spec_.mul(lambda, first(x)),
                spec_.mul(spec_.one_plus_theta(lambda), second(x)));
  }

  // Exact center, by brute-force commutation.
  std::vector<idx_t> center() const {
    std::vector<idx_t> z;
    for (idx_t x = 0; x < size_; ++x) {
      bool central = true;
      for (idx_t y = 0; y < size_ && central; ++y)
        central = add(x, y) == add(y, x);
      if (central) z.push_back(x);
    }
    return z;
  }

  // All x != 0 with x + x = 0.
  std::vector<idx_t> involutions() const {
    std::vector<idx_t> inv;
    for (idx_t x = 1; x < size_; ++x)
      if (dbl(x) == 0) inv.push_back(x);
    return inv;
  }

  fe_t first(idx_t x) const {
    return kind_ == RootGroupKind::Abelian
               ? static_cast<fe_t>(x)
               : static_cast<fe_t>(x >> spec_.degree());
  }
  fe_t second(idx_t x) const {
    return kind_ == RootGroupKind::Abelian ? 0
                                           : static_cast<fe_t>(x & field_mask_);
  }
  idx_t pack(fe_t a, fe_t b) const {
    return kind_ == RootGroupKind::Abelian
               ? static_cast<idx_t>(a)
               : (static_cast<idx_t>(a) << spec_.degree()) | b;
  }

private:
  RootGroup(RootGroupKind kind, const FieldSpec &spec)
      : kind_(kind), spec_(spec),
        field_mask_(spec.order() - 1),
        size_(kind == RootGroupKind::Abelian
                  ? spec.order()
                  : static_cast<idx_t>(spec.order()) * spec.order()) {
    // dense addition table for the sizes the sweeps hit; larger groups
    // fall back to formula evaluation
    if (kind_ == RootGroupKind::SuzukiTwoGroup && size_ <= (1u << 12)) {
      add_table_.resize(static_cast<std::size_t>(size_) * size_);
      for (idx_t x = 0; x < size_; ++x)
        for (idx_t y = 0; y < size_; ++y)
          add_table_[static_cast<std::size_t>(x) * size_ + y] = add_slow(x, y);
    }
  }

  idx_t add_slow(idx_t x, idx_t y) const {
    if (kind_ == RootGroupKind::Abelian) return x ^ y;
    const fe_t a = first(x), b = second(x), c = first(y), d = second(y);
    // (a+c, b+d + a*c^theta)
    return pack(a ^ c, b ^ d ^ spec_.mul(a, spec_.theta(c)));
  }

  RootGroupKind kind_;
  FieldSpec spec_;
  fe_t field_mask_;
  idx_t size_;
  std::vector<idx_t> add_table_;
};

inline std::string to_string(const RootGroupElement &x) {
  if (!x.pair) return std::to_string(x.a);
  return "(" + std::to_string(x.a) + "," + std::to_string(x.b) + ")";
}

// Parses "a" or "(a,b)" with integer coordinates.
inline RootGroupElement parse_element(const std::string &s) {
  if (s.empty()) throw std::invalid_argument("parse_element: empty string");
  if (s.front() == '(') {
    const auto comma = s.find(',');
    if (comma == std::string::npos || s.back() != ')')
      throw std::invalid_argument("parse_element: expected \"(a,b)\"");
    const fe_t a = static_cast<fe_t>(std::stoul(s.substr(1, comma - 1)));
    const fe_t b = static_cast<fe_t>(
        std::stoul(s.substr(comma + 1, s.size() - comma - 2)));
    return RootGroupElement::make_pair(a, b);
  }
  return RootGroupElement::scalar(static_cast<fe_t>(std::stoul(s)));
}

} // namespace zmset
