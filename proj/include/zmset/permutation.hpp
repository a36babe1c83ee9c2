#pragma once

// Dense permutations of the point set X = U u {infinity}. Points are the
// element indices 0..|U|-1 plus index |U| for infinity. Permutations act on
// the right and compose left to right: x (p*q) = (x p) q. Conjugation is
// p^q = q^-1 p q.

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace zmset {

using pt_t = std::uint16_t;

class Permutation {
public:
  Permutation() = default;

  explicit Permutation(std::size_t n) : img_(n) {
    std::iota(img_.begin(), img_.end(), pt_t{0});
  }

  explicit Permutation(std::vector<pt_t> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (pt_t x : img_) {
      if (x >= img_.size() || seen[x])
        throw std::invalid_argument("Permutation: image table is not a bijection");
      seen[x] = true;
    }
  }

  std::size_t degree() const { return img_.size(); }

  pt_t operator[](std::size_t x) const { return img_[x]; }
  const std::vector<pt_t> &images() const { return img_; }

  bool is_identity() const {
    for (std::size_t x = 0; x < img_.size(); ++x)
      if (img_[x] != x) return false;
    return true;
  }

  // first point moved, or degree() if identity
  std::size_t first_moved() const {
    for (std::size_t x = 0; x < img_.size(); ++x)
      if (img_[x] != x) return x;
    return img_.size();
  }

  // apply this, then o
  Permutation operator*(const Permutation &o) const {
    Permutation r;
    r.img_.resize(img_.size());
    for (std::size_t x = 0; x < img_.size(); ++x)
      r.img_[x] = o.img_[img_[x]];
    return r;
  }

  Permutation inverse() const {
    Permutation r;
    r.img_.resize(img_.size());
    for (std::size_t x = 0; x < img_.size(); ++x)
      r.img_[img_[x]] = static_cast<pt_t>(x);
    return r;
  }

  Permutation conjugated_by(const Permutation &g) const {
    return g.inverse() * (*this) * g;
  }

  Permutation power(long e) const {
    Permutation base = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? -static_cast<unsigned long>(e) : e;
    Permutation r(img_.size());
    while (k) {
      if (k & 1) r = r * base;
      base = base * base;
      k >>= 1;
    }
    return r;
  }

  // lcm of cycle lengths
  unsigned long order() const {
    std::vector<bool> seen(img_.size(), false);
    unsigned long ord = 1;
    for (std::size_t x = 0; x < img_.size(); ++x) {
      if (seen[x]) continue;
      unsigned long len = 0;
      for (std::size_t y = x; !seen[y]; y = img_[y]) {
        seen[y] = true;
        ++len;
      }
      ord = std::lcm(ord, len);
    }
    return ord;
  }

  std::vector<std::size_t> fixed_points() const {
    std::vector<std::size_t> f;
    for (std::size_t x = 0; x < img_.size(); ++x)
      if (img_[x] == x) f.push_back(x);
    return f;
  }

  bool operator==(const Permutation &o) const { return img_ == o.img_; }
  bool operator!=(const Permutation &o) const { return img_ != o.img_; }
  bool operator<(const Permutation &o) const { return img_ < o.img_; }

private:
  std::vector<pt_t> img_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation &p) const {
    std::size_t h = 1469598103934665603ull; // FNV-1a
    for (pt_t x : p.images()) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

} // namespace zmset
