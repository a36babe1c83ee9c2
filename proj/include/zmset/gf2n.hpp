#pragma once

// Exact arithmetic in GF(2^n). Elements are coefficient bitmasks (bit i =
// coefficient of x^i) read as unsigned integers; all I/O uses this encoding.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zmset {

using fe_t = std::uint32_t; // field element bitmask, value < 2^degree

constexpr int kMaxFieldDegree = 16;

namespace detail {

inline int poly_degree(std::uint64_t p) {
  int d = -1;
  while (p) {
    ++d;
    p >>= 1;
  }
  return d;
}

// carry-less product of two GF(2) polynomials
inline std::uint64_t poly_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  while (b) {
    if (b & 1) r ^= a;
    a <<= 1;
    b >>= 1;
  }
  return r;
}

// remainder of a modulo m (m != 0)
inline std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) {
  const int dm = poly_degree(m);
  for (int d = poly_degree(a); d >= dm; d = poly_degree(a))
    a ^= m << (d - dm);
  return a;
}

} // namespace detail

// Trial division: p has no divisor of degree 1 .. deg(p)/2.
inline bool is_irreducible(std::uint64_t p) {
  const int n = detail::poly_degree(p);
  if (n < 1) return false;
  if (n == 1) return true;
  for (std::uint64_t d = 2; detail::poly_degree(d) <= n / 2; ++d)
    if (detail::poly_mod(p, d) == 0) return false;
  return true;
}

// Smallest (as an integer) irreducible polynomial of degree n over GF(2).
inline std::uint64_t find_irreducible(int n) {
  if (n < 1) throw std::invalid_argument("find_irreducible: n must be >= 1");
  for (std::uint64_t p = std::uint64_t{1} << n;; ++p)
    if (is_irreducible(p)) return p;
}

// A binary field GF(2^n) together with a distinguished Frobenius power
// theta: x -> x^(2^k). When the Tits flag is set, theta o theta is the
// Frobenius (2k = 1 mod n), which forces n odd.
class FieldSpec {
public:
  FieldSpec(int degree, std::uint64_t modulus, int theta_exponent,
            bool tits = false)
      : degree_(degree), modulus_(modulus), theta_exp_(theta_exponent),
        tits_(tits) {
    if (degree < 1 || degree > kMaxFieldDegree)
      throw std::invalid_argument("FieldSpec: degree out of range [1,16]");
    if (detail::poly_degree(modulus) != degree)
      throw std::invalid_argument("FieldSpec: modulus degree mismatch");
    if (!is_irreducible(modulus))
      throw std::invalid_argument("FieldSpec: modulus is reducible");
    if (theta_exponent < 0 || theta_exponent >= degree)
      throw std::invalid_argument("FieldSpec: theta exponent out of range");
    if (tits && (2 * theta_exponent) % degree != 1 % degree)
      throw std::invalid_argument("FieldSpec: theta is not a Tits endomorphism");
  }

  // GF(2^n) with the smallest irreducible modulus and theta = identity.
  static FieldSpec make(int degree) {
    return FieldSpec(degree, find_irreducible(degree), 0, false);
  }

  // GF(2^n), n odd, with the Tits automorphism x -> x^(2^((n+1)/2)).
  static FieldSpec make_tits(int degree) {
    if (degree % 2 == 0)
      throw std::invalid_argument("FieldSpec: Tits endomorphism needs odd degree");
    const int k = degree == 1 ? 0 : (degree + 1) / 2;
    return FieldSpec(degree, find_irreducible(degree), k, true);
  }

  int degree() const { return degree_; }
  std::uint64_t modulus() const { return modulus_; }
  int theta_exponent() const { return theta_exp_; }
  // k' with k + k' = 0 mod n, so that theta_inv o theta = identity
  int theta_inv_exponent() const {
    return theta_exp_ == 0 ? 0 : degree_ - theta_exp_;
  }
  bool tits() const { return tits_; }
  fe_t order() const { return fe_t{1} << degree_; }

  bool operator==(const FieldSpec &o) const {
    return degree_ == o.degree_ && modulus_ == o.modulus_ &&
           theta_exp_ == o.theta_exp_ && tits_ == o.tits_;
  }
  bool operator!=(const FieldSpec &o) const { return !(*this == o); }

  fe_t add(fe_t a, fe_t b) const { return a ^ b; }

  fe_t mul(fe_t a, fe_t b) const {
    return static_cast<fe_t>(
        detail::poly_mod(detail::poly_mul(a, b), modulus_));
  }

  fe_t sqr(fe_t a) const { return mul(a, a); }

  fe_t pow(fe_t a, std::uint64_t e) const {
    fe_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = sqr(a);
      e >>= 1;
    }
    return r;
  }

  fe_t inv(fe_t a) const {
    if (a == 0) throw std::domain_error("FieldSpec::inv: zero has no inverse");
    return pow(a, order() - 2); // a^(q-2) = a^-1 in GF(q)
  }

  fe_t div(fe_t a, fe_t b) const { return mul(a, inv(b)); }

  // a^(2^k), k repeated squarings
  fe_t frobenius_power(fe_t a, int k) const {
    for (int i = 0; i < k; ++i) a = sqr(a);
    return a;
  }

  fe_t theta(fe_t a) const { return frobenius_power(a, theta_exp_); }
  fe_t theta_inv(fe_t a) const {
    return frobenius_power(a, theta_inv_exponent());
  }

  // a^(1+theta) = a * theta(a)
  fe_t one_plus_theta(fe_t a) const { return mul(a, theta(a)); }

private:
  int degree_;
  std::uint64_t modulus_;
  int theta_exp_;
  bool tits_;
};

} // namespace zmset
