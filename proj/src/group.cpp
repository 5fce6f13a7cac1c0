#include "drgcay/group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "drgcay/field.hpp"

namespace drgcay {

namespace {

std::string generator_name(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "g" + std::to_string(i);
}

}  // namespace

FiniteGroup::FiniteGroup(int n, std::vector<Element> table, std::vector<Generator> generators,
                         std::string tag)
    : n_(n), table_(std::move(table)), generators_(std::move(generators)), tag_(std::move(tag)) {
  if (n_ < 1) throw std::invalid_argument("group order must be positive");
  if (table_.size() != static_cast<std::size_t>(n_) * n_) {
    throw std::invalid_argument("multiplication table has wrong size");
  }
  verify_axioms();
  inverse_.assign(n_, -1);
  for (Element a = 0; a < n_; ++a) {
    for (Element b = 0; b < n_; ++b) {
      if (mul(a, b) == 0) {
        inverse_[a] = b;
        break;
      }
    }
  }
  for (const auto& gen : generators_) {
    if (gen.element < 0 || gen.element >= n_) throw std::invalid_argument("generator out of range");
  }
}

void FiniteGroup::verify_axioms() const {
  for (Element a = 0; a < n_; ++a) {
    if (mul(0, a) != a || mul(a, 0) != a) throw std::invalid_argument(tag_ + ": element 0 is not the identity");
  }
  std::vector<char> seen(n_);
  for (Element a = 0; a < n_; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Element b = 0; b < n_; ++b) {
      const Element c = mul(a, b);
      if (c < 0 || c >= n_ || seen[c]) throw std::invalid_argument(tag_ + ": table rows are not permutations");
      seen[c] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (Element b = 0; b < n_; ++b) {
      const Element c = mul(b, a);
      if (seen[c]) throw std::invalid_argument(tag_ + ": table columns are not permutations");
      seen[c] = 1;
    }
  }
  auto assoc = [&](Element a, Element b, Element c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
      throw std::invalid_argument(tag_ + ": multiplication is not associative");
    }
  };
  if (n_ <= 300) {
    for (Element a = 0; a < n_; ++a)
      for (Element b = 0; b < n_; ++b)
        for (Element c = 0; c < n_; ++c) assoc(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<Element> pick(0, n_ - 1);
    for (int t = 0; t < 100000; ++t) assoc(pick(rng), pick(rng), pick(rng));
  }
}

FiniteGroup::Element FiniteGroup::pow(Element a, std::int64_t e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  Element result = 0;
  Element base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

int FiniteGroup::element_order(Element a) const {
  int k = 1;
  for (Element x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (Element a = 0; a < n_; ++a)
    for (Element b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::optional<FiniteGroup::Element> FiniteGroup::generator(std::string_view name) const {
  for (const auto& gen : generators_) {
    if (gen.name == name) return gen.element;
  }
  return std::nullopt;
}

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be positive");
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  std::vector<FiniteGroup::Generator> gens;
  if (n > 1) gens.push_back({"a", 1});
  return FiniteGroup(n, std::move(table), std::move(gens), "Z" + std::to_string(n));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const int ng = g.order(), nh = h.order(), n = ng * nh;
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      table[static_cast<std::size_t>(x) * n + y] = g.mul(x / nh, y / nh) * nh + h.mul(x % nh, y % nh);
    }
  }
  std::vector<FiniteGroup::Generator> gens;
  for (const auto& gen : g.generators()) gens.push_back({generator_name(gens.size()), gen.element * nh});
  for (const auto& gen : h.generators()) gens.push_back({generator_name(gens.size()), gen.element});
  return FiniteGroup(n, std::move(table), std::move(gens), g.tag() + "x" + h.tag());
}

FiniteGroup elementary_abelian(int p, int k) {
  if (!is_prime(p)) throw std::invalid_argument("E(p,k): p must be prime");
  if (k < 1) throw std::invalid_argument("E(p,k): k must be positive");
  FiniteGroup out = cyclic_group(p);
  for (int i = 1; i < k; ++i) out = direct_product(out, cyclic_group(p));
  // Rebuild with the conventional tag; the table is already correct.
  return FiniteGroup(out.order(), out.table(), out.generators(),
                     "E(" + std::to_string(p) + "," + std::to_string(k) + ")");
}

FiniteGroup semidirect(int n, int m, int r) {
  if (n < 1 || m < 1) throw std::invalid_argument("SD(n,m,r): n and m must be positive");
  if (std::gcd(static_cast<std::int64_t>(r), static_cast<std::int64_t>(n)) != 1 && n > 1) {
    throw std::invalid_argument("SD(n,m,r): gcd(r, n) must be 1");
  }
  if (pow_mod(r, m, n) != 1 % n) {
    throw std::invalid_argument("SD(n,m,r): invalid action exponent, r^m != 1 (mod n)");
  }
  // With t = r^-1, b a b^-1 = a^t, so (a^i b^j)(a^i' b^j') = a^(i + t^j i') b^(j + j').
  const std::int64_t t = n > 1 ? inverse_mod(r, n) : 0;
  std::vector<std::int64_t> tpow(m);
  for (int j = 0; j < m; ++j) tpow[j] = pow_mod(t, j, n);
  const int order = n * m;
  std::vector<int> table(static_cast<std::size_t>(order) * order);
  for (int x = 0; x < order; ++x) {
    const int i = x % n, j = x / n;
    for (int y = 0; y < order; ++y) {
      const int i2 = y % n, j2 = y / n;
      const int ni = static_cast<int>((i + tpow[j] * i2) % n);
      const int nj = (j + j2) % m;
      table[static_cast<std::size_t>(x) * order + y] = nj * n + ni;
    }
  }
  std::vector<FiniteGroup::Generator> gens{{"a", n > 1 ? 1 : 0}, {"b", m > 1 ? n : 0}};
  FiniteGroup g(order, std::move(table), std::move(gens),
                "SD(" + std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(r) + ")");
  const int a = *g.generator("a"), b = *g.generator("b");
  if (g.mul(g.mul(g.inv(b), a), b) != g.pow(a, r)) {
    throw std::logic_error("SD construction does not satisfy b^-1 a b = a^r");
  }
  return g;
}

FiniteGroup heisenberg(int p) {
  if (!is_prime(p)) throw std::invalid_argument("HEIS(p): p must be prime");
  // (x, y, z) is [[1,x,z],[0,1,y],[0,0,1]] with index x + p*y + p^2*z.
  const int n = p * p * p;
  auto index = [p](int x, int y, int z) { return x + p * y + p * p * z; };
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int u = 0; u < n; ++u) {
    const int x = u % p, y = (u / p) % p, z = u / (p * p);
    for (int v = 0; v < n; ++v) {
      const int x2 = v % p, y2 = (v / p) % p, z2 = v / (p * p);
      table[static_cast<std::size_t>(u) * n + v] = index((x + x2) % p, (y + y2) % p, (z + z2 + x * y2) % p);
    }
  }
  const int a = index(1, 0, 0), b = index(0, 1, 0);
  // Temporary group to compute c = (ab)^-1 ba.
  FiniteGroup tmp(n, table, {}, "tmp");
  const int c = tmp.mul(tmp.inv(tmp.mul(a, b)), tmp.mul(b, a));
  FiniteGroup g(n, std::move(table), {{"a", a}, {"b", b}, {"c", c}}, "HEIS(" + std::to_string(p) + ")");
  if (g.mul(g.mul(a, b), c) != g.mul(b, a) || g.mul(a, c) != g.mul(c, a) || g.mul(b, c) != g.mul(c, b)) {
    throw std::logic_error("HEIS construction does not satisfy abc = ba with c central");
  }
  return g;
}

FiniteGroup affine_square(int q) {
  const auto pk = prime_power(q);
  if (!pk) throw std::invalid_argument("AFFSQ(q): q must be a prime power");
  if (q % 2 == 0) throw std::invalid_argument("AFFSQ(q): q must be odd");
  FiniteField f(pk->first, pk->second);
  const auto squares = nonzero_squares(f);
  const int ns = static_cast<int>(squares.size());
  const int n = ns * q;
  std::vector<int> square_index(q, -1);
  for (int i = 0; i < ns; ++i) square_index[squares[i]] = i;
  // Element (a, b) has index ia*q + b where ia is the rank of a among squares.
  // The identity x -> 1x + 0 is rank 0 (1 is the least nonzero square) at index 0.
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int u = 0; u < n; ++u) {
    const int a = squares[u / q], b = u % q;
    for (int v = 0; v < n; ++v) {
      const int c = squares[v / q], d = v % q;
      // x -> c(ax + b) + d
      const int na = f.mul(c, a);
      const int nb = f.add(f.mul(c, b), d);
      table[static_cast<std::size_t>(u) * n + v] = square_index[na] * q + nb;
    }
  }
  std::vector<FiniteGroup::Generator> gens;
  // a: a translation x -> x + 1; b: a multiplication by a nonidentity square (if any).
  gens.push_back({"a", 1});
  if (ns > 1) gens.push_back({"b", q});
  return FiniteGroup(n, std::move(table), std::move(gens), "AFFSQ(" + std::to_string(q) + ")");
}

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}

namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  FiniteGroup parse() {
    FiniteGroup g = factor();
    skip_ws();
    while (pos_ < text_.size() && (text_[pos_] == 'x' || text_[pos_] == 'X')) {
      ++pos_;
      FiniteGroup h = factor();
      g = direct_product(g, h);
      skip_ws();
    }
    if (pos_ != text_.size()) throw ParseError("unexpected character in group spec", pos_);
    return g;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      throw ParseError(std::string("expected '") + c + "' in group spec", pos_);
    }
    ++pos_;
  }

  int number() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected a number in group spec", start);
    if (pos_ - start > 6) throw ParseError("number too large in group spec", start);
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  std::vector<int> args(std::size_t count) {
    expect('(');
    std::vector<int> out;
    for (std::size_t i = 0; i < count; ++i) {
      if (i > 0) expect(',');
      out.push_back(number());
    }
    expect(')');
    return out;
  }

  FiniteGroup factor() {
    skip_ws();
    const std::size_t start = pos_;
    try {
      if (accept("AFFSQ")) return affine_square(args(1)[0]);
      if (accept("HEIS")) return heisenberg(args(1)[0]);
      if (accept("SD")) {
        auto a = args(3);
        return semidirect(a[0], a[1], a[2]);
      }
      if (accept("E")) {
        auto a = args(2);
        return elementary_abelian(a[0], a[1]);
      }
      if (accept("Z")) return cyclic_group(number());
    } catch (const ParseError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), start);
    }
    throw ParseError("unknown group family", start);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FiniteGroup parse_group_spec(std::string_view spec) {
  return SpecParser(spec).parse();
}

ConnectionSet::ConnectionSet(const FiniteGroup& g, std::vector<FiniteGroup::Element> elements)
    : member_(g.order(), 0) {
  for (auto x : elements) {
    if (x < 0 || x >= g.order()) throw std::invalid_argument("connection set element out of range");
    if (x == g.identity()) throw std::invalid_argument("connection set contains the identity");
    member_[x] = 1;
  }
  for (int x = 0; x < g.order(); ++x) {
    if (member_[x]) {
      elements_.push_back(x);
      if (!member_[g.inv(x)]) {
        throw std::invalid_argument("connection set is not closed under inversion (element " +
                                    std::to_string(x) + ")");
      }
    }
  }
}

ConnectionSet ConnectionSet::inverse_closure(const FiniteGroup& g, std::vector<FiniteGroup::Element> elements) {
  const std::size_t n = elements.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (elements[i] >= 0 && elements[i] < g.order()) elements.push_back(g.inv(elements[i]));
  }
  return ConnectionSet(g, std::move(elements));
}

Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<FiniteGroup::Element>& seed) {
  std::vector<char> in(g.order(), 0);
  std::vector<FiniteGroup::Element> gens;
  for (auto s : seed) {
    if (s < 0 || s >= g.order()) throw std::invalid_argument("subgroup_closure: element out of range");
    if (s != g.identity()) gens.push_back(s);
  }
  std::vector<FiniteGroup::Element> members{g.identity()};
  in[g.identity()] = 1;
  // In a finite group, closing {e} under right multiplication by the seed
  // yields the generated subgroup.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (auto s : gens) {
      const auto y = g.mul(members[i], s);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

bool is_subgroup(const FiniteGroup& g, const std::vector<FiniteGroup::Element>& set) {
  if (set.empty()) return false;
  std::vector<char> in(g.order(), 0);
  for (auto x : set) {
    if (x < 0 || x >= g.order()) return false;
    in[x] = 1;
  }
  if (!in[g.identity()]) return false;
  for (auto x : set)
    for (auto y : set)
      if (!in[g.mul(x, g.inv(y))]) return false;
  return true;
}

namespace {

// Closure of a ∪ b, or nullopt once it grows past `limit` elements.
std::optional<Subgroup> bounded_join(const FiniteGroup& g, const Subgroup& a, const Subgroup& b, std::size_t limit) {
  std::vector<char> in(g.order(), 0);
  std::vector<FiniteGroup::Element> members;
  for (auto x : a) {
    in[x] = 1;
    members.push_back(x);
  }
  std::vector<FiniteGroup::Element> gens;
  for (auto x : b) {
    if (!in[x]) gens.push_back(x);
  }
  if (gens.empty()) return a;
  gens.insert(gens.end(), a.begin(), a.end());
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (auto s : gens) {
      const auto y = g.mul(members[i], s);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
        if (members.size() > limit) return std::nullopt;
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

constexpr std::size_t kSubgroupSearchCap = 20000;

}  // namespace

SubgroupList subgroups_of_order(const FiniteGroup& g, int k) {
  if (k < 1 || g.order() % k != 0) {
    throw std::invalid_argument("subgroups_of_order: " + std::to_string(k) + " does not divide |G| = " +
                                std::to_string(g.order()));
  }
  std::set<Subgroup> cyclic;
  for (int x = 0; x < g.order(); ++x) {
    if (k % g.element_order(x) == 0) cyclic.insert(subgroup_closure(g, {x}));
  }
  std::set<Subgroup> found(cyclic.begin(), cyclic.end());
  std::vector<Subgroup> frontier(cyclic.begin(), cyclic.end());
  SubgroupList out;
  // Every subgroup of order k is reachable by successively joining cyclic
  // subgroups while staying inside it, so all intermediates have order | k.
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const auto& a : frontier) {
      for (const auto& c : cyclic) {
        if (std::includes(a.begin(), a.end(), c.begin(), c.end())) continue;
        auto j = bounded_join(g, a, c, static_cast<std::size_t>(k));
        if (!j || k % static_cast<int>(j->size()) != 0) continue;
        if (found.insert(*j).second) {
          next.push_back(std::move(*j));
          if (found.size() > kSubgroupSearchCap) {
            out.complete = false;
            next.clear();
            break;
          }
        }
      }
      if (!out.complete) break;
    }
    frontier = std::move(next);
  }
  for (const auto& s : found) {
    if (static_cast<int>(s.size()) == k) out.subgroups.push_back(s);
  }
  return out;
}

bool is_general_product(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
  if (!is_subgroup(g, h) || !is_subgroup(g, k)) throw std::invalid_argument("is_general_product: inputs must be subgroups");
  std::vector<char> in_h(g.order(), 0);
  for (auto x : h) in_h[x] = 1;
  int common = 0;
  for (auto x : k) common += in_h[x];
  const bool trivial_meet = common == 1;
  const bool sizes = static_cast<std::int64_t>(h.size()) * static_cast<std::int64_t>(k.size()) == g.order();
  std::vector<char> hit(g.order(), 0);
  int covered = 0;
  for (auto x : h) {
    for (auto y : k) {
      const auto z = g.mul(x, y);
      if (!hit[z]) {
        hit[z] = 1;
        ++covered;
      }
    }
  }
  return sizes && trivial_meet && covered == g.order();
}

}  // namespace drgcay
