#include "drgcay/field.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>

namespace drgcay {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be positive");
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::optional<std::pair<int, int>> prime_power(std::int64_t q) {
  if (q < 2) return std::nullopt;
  auto f = factorize(q);
  if (f.size() != 1) return std::nullopt;
  return std::make_pair(static_cast<int>(f[0].first), f[0].second);
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t mod) {
  if (mod == 1) return 0;
  std::int64_t result = 1;
  base = ((base % mod) + mod) % mod;
  while (exp > 0) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r0 = ((a % m) + m) % m, r1 = m, s0 = 1, s1 = 0;
  while (r1 != 0) {
    std::int64_t qt = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - qt * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - qt * s1);
  }
  if (r0 != 1) {
    throw std::invalid_argument("inverse_mod: " + std::to_string(a) +
                                " is not invertible modulo " + std::to_string(m));
  }
  return ((s0 % m) + m) % m;
}

namespace {

void trim(std::vector<int>& poly) {
  while (!poly.empty() && poly.back() == 0) poly.pop_back();
}

// Remainder of num / den over GF(p); den must be monic.
std::vector<int> poly_mod(std::vector<int> num, const std::vector<int>& den, int p) {
  trim(num);
  const std::size_t dd = den.size() - 1;
  while (num.size() > dd) {
    const int lead = num.back();
    const std::size_t shift = num.size() - 1 - dd;
    for (std::size_t i = 0; i <= dd; ++i) {
      num[shift + i] = ((num[shift + i] - lead * den[i]) % p + p) % p;
    }
    trim(num);
  }
  return num;
}

// Monic polynomial of the given degree whose lower coefficients are the
// base-p digits of `index`, most significant digit at degree-1.
std::vector<int> monic_from_index(int index, int degree, int p) {
  std::vector<int> poly(degree + 1, 0);
  poly[degree] = 1;
  for (int i = 0; i < degree; ++i) {
    poly[i] = index % p;
    index /= p;
  }
  return poly;
}

}  // namespace

bool is_irreducible_mod_p(const std::vector<int>& poly, int p) {
  std::vector<int> f = poly;
  trim(f);
  const int deg = static_cast<int>(f.size()) - 1;
  if (deg < 1) return false;
  if (deg == 1) return true;
  for (int d = 1; d <= deg / 2; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int idx = 0; idx < count; ++idx) {
      if (poly_mod(f, monic_from_index(idx, d, p), p).empty()) return false;
    }
  }
  return true;
}

FiniteField::FiniteField(int p, int k) : p_(p), k_(k), q_(1) {
  if (!is_prime(p)) throw std::invalid_argument("field_build: " + std::to_string(p) + " is not prime");
  if (k < 1 || k > 4) throw std::invalid_argument("field_build: degree must be in 1..4");
  for (int i = 0; i < k; ++i) q_ *= p;
  if (q_ > 10000) throw std::invalid_argument("field_build: p^k must not exceed 10^4");

  // Scan monic polynomials in lexicographic order of (c_{k-1}, ..., c_0).
  const int count = q_;
  for (int idx = 0; idx < count; ++idx) {
    std::vector<int> poly(k + 1, 0);
    poly[k] = 1;
    int rest = idx;
    for (int i = 0; i < k; ++i) {
      poly[i] = rest % p;
      rest /= p;
    }
    if (is_irreducible_mod_p(poly, p)) {
      modulus_ = std::move(poly);
      return;
    }
  }
  throw std::logic_error("field_build: no irreducible polynomial found");
}

void FiniteField::check(Element x) const {
  if (x < 0 || x >= q_) throw std::out_of_range("field element out of range");
}

FiniteField::Element FiniteField::from_int(std::int64_t c) const {
  return static_cast<Element>(((c % p_) + p_) % p_);
}

std::vector<int> FiniteField::coefficients(Element x) const {
  check(x);
  std::vector<int> c(k_);
  for (int i = 0; i < k_; ++i) {
    c[i] = x % p_;
    x /= p_;
  }
  return c;
}

FiniteField::Element FiniteField::from_coefficients(const std::vector<int>& coeffs) const {
  std::vector<int> c = poly_mod(coeffs, modulus_, p_);
  Element x = 0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) x = x * p_ + ((c[i] % p_) + p_) % p_;
  return x;
}

FiniteField::Element FiniteField::add(Element x, Element y) const {
  check(x);
  check(y);
  Element out = 0, scale = 1;
  for (int i = 0; i < k_; ++i) {
    out += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return out;
}

FiniteField::Element FiniteField::neg(Element x) const {
  check(x);
  Element out = 0, scale = 1;
  for (int i = 0; i < k_; ++i) {
    out += ((p_ - x % p_) % p_) * scale;
    x /= p_;
    scale *= p_;
  }
  return out;
}

FiniteField::Element FiniteField::mul(Element x, Element y) const {
  const auto a = coefficients(x);
  const auto b = coefficients(y);
  std::vector<int> prod(2 * k_ - 1, 0);
  for (int i = 0; i < k_; ++i) {
    for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
  }
  return from_coefficients(prod);
}

FiniteField::Element FiniteField::pow(Element x, std::int64_t e) const {
  check(x);
  if (e < 0) return pow(inv(x), -e);
  Element result = one(), base = x;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

FiniteField::Element FiniteField::inv(Element x) const {
  check(x);
  if (x == 0) throw std::domain_error("field inverse of zero");
  return pow(x, q_ - 2);
}

std::vector<FiniteField::Element> nonzero_squares(const FiniteField& f) {
  std::vector<char> seen(f.order(), 0);
  for (int x = 1; x < f.order(); ++x) seen[f.mul(x, x)] = 1;
  std::vector<FiniteField::Element> out;
  for (int x = 1; x < f.order(); ++x) {
    if (seen[x]) out.push_back(x);
  }
  return out;
}

}  // namespace drgcay
