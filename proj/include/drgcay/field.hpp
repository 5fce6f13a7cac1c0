#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace drgcay {

// Small number-theory helpers shared by the field, group and analysis code.
bool is_prime(std::int64_t n);
// Prime factorization as (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);
// (p, k) with q = p^k, or nullopt when q is not a prime power.
std::optional<std::pair<int, int>> prime_power(std::int64_t q);
std::vector<std::int64_t> divisors(std::int64_t n);
std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t mod);
// Inverse of a modulo m; throws std::invalid_argument when gcd(a, m) != 1.
std::int64_t inverse_mod(std::int64_t a, std::int64_t m);

// GF(p^k) with elements stored as canonical coefficient vectors.
//
// An element is addressed by the integer c_0 + c_1 p + ... + c_{k-1} p^{k-1},
// which is a bijective encoding of its reduced coefficient vector, so element
// equality is integer equality. The modulus is the lexicographically least
// monic irreducible polynomial of degree k, comparing the non-leading
// coefficients from degree k-1 down to the constant term.
class FiniteField {
 public:
  using Element = int;

  FiniteField(int p, int k);

  int characteristic() const { return p_; }
  int degree() const { return k_; }
  int order() const { return q_; }
  // Monic modulus, coefficients from constant term up to x^k.
  const std::vector<int>& modulus() const { return modulus_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  // The element whose coefficient vector is (c mod p, 0, ..., 0).
  Element from_int(std::int64_t c) const;
  std::vector<int> coefficients(Element x) const;
  Element from_coefficients(const std::vector<int>& coeffs) const;

  Element add(Element x, Element y) const;
  Element neg(Element x) const;
  Element sub(Element x, Element y) const { return add(x, neg(y)); }
  Element mul(Element x, Element y) const;
  Element pow(Element x, std::int64_t e) const;
  // Throws std::domain_error for x == 0.
  Element inv(Element x) const;

 private:
  void check(Element x) const;

  int p_;
  int k_;
  int q_;
  std::vector<int> modulus_;
};

// {x^2 : x != 0}, sorted by element index.
std::vector<FiniteField::Element> nonzero_squares(const FiniteField& f);

// Brute-force irreducibility over GF(p): trial division by every monic
// polynomial of degree 1..deg/2. Coefficients from constant term upward.
bool is_irreducible_mod_p(const std::vector<int>& poly, int p);

}  // namespace drgcay
