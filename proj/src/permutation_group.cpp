#include "drgcay/permutation_group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace drgcay {

Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

bool is_identity(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != static_cast<int>(i)) return false;
  }
  return true;
}

bool is_permutation(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  for (int x : p) {
    if (x < 0 || x >= static_cast<int>(p.size()) || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

int perm_order(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  std::int64_t order = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::int64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return static_cast<int>(order);
}

PermutationGroup::PermutationGroup(int degree, std::vector<Perm> generators, std::vector<int> base_prefix)
    : degree_(degree), generators_(std::move(generators)) {
  if (degree < 1) throw std::invalid_argument("PermutationGroup: degree must be positive");
  for (const auto& g : generators_) {
    if (static_cast<int>(g.size()) != degree || !is_permutation(g)) {
      throw std::invalid_argument("PermutationGroup: generator is not a permutation of the domain");
    }
  }
  for (int b : base_prefix) {
    if (b < 0 || b >= degree) throw std::invalid_argument("PermutationGroup: base point out of range");
    levels_.push_back(make_level(b));
  }
  for (const auto& g : generators_) sift_into(0, g);
  order_ = 1;
  for (const auto& level : levels_) order_ *= static_cast<unsigned>(level.orbit.size());
}

PermutationGroup::Level PermutationGroup::make_level(int base_point) const {
  Level level;
  level.base_point = base_point;
  level.transversal.assign(degree_, Perm{});
  level.transversal[base_point] = identity_perm(degree_);
  level.orbit.push_back(base_point);
  return level;
}

void PermutationGroup::sift_into(std::size_t level, Perm h) {
  for (std::size_t j = level;; ++j) {
    if (is_identity(h)) return;
    if (j == levels_.size()) {
      int moved = 0;
      while (h[moved] == moved) ++moved;
      levels_.push_back(make_level(moved));
    }
    const Level& lv = levels_[j];
    const int y = h[lv.base_point];
    if (lv.transversal[y].empty()) {
      // h fixes the base points above level j, so it belongs to every
      // stabilizer from `level` down to j; deeper levels first.
      for (std::size_t k = j + 1; k-- > level;) add_generator(k, h);
      return;
    }
    h = compose(h, inverse(lv.transversal[y]));
  }
}

void PermutationGroup::add_generator(std::size_t level, const Perm& g) {
  // Every Schreier generator u_y s u_{y^s}^-1 of this level is sifted into the
  // next one. Pairs (y, s) already handled stay valid because lower levels only
  // grow, so only new pairs are visited: old points with the new generator and
  // new points with every generator.
  levels_[level].strong_generators.push_back(g);
  std::vector<std::pair<int, std::size_t>> pending;  // (orbit point, generator index)
  {
    const Level& lv = levels_[level];
    const std::size_t gi = lv.strong_generators.size() - 1;
    for (int y : lv.orbit) pending.emplace_back(y, gi);
  }
  for (std::size_t head = 0; head < pending.size(); ++head) {
    const auto [y, si] = pending[head];
    Perm u_y = levels_[level].transversal[y];
    const Perm s = levels_[level].strong_generators[si];
    const int z = s[y];
    Perm u_ys = compose(u_y, s);
    if (levels_[level].transversal[z].empty()) {
      levels_[level].transversal[z] = u_ys;
      levels_[level].orbit.push_back(z);
      for (std::size_t k = 0; k < levels_[level].strong_generators.size(); ++k) pending.emplace_back(z, k);
      continue;
    }
    sift_into(level + 1, compose(u_ys, inverse(levels_[level].transversal[z])));
  }
}

std::vector<int> PermutationGroup::base() const {
  std::vector<int> out;
  for (const auto& level : levels_) out.push_back(level.base_point);
  return out;
}

bool PermutationGroup::contains(const Perm& p) const {
  if (static_cast<int>(p.size()) != degree_ || !is_permutation(p)) return false;
  Perm h = p;
  for (const auto& lv : levels_) {
    const int y = h[lv.base_point];
    if (lv.transversal[y].empty()) return false;
    h = compose(h, inverse(lv.transversal[y]));
  }
  return is_identity(h);
}

std::vector<int> PermutationGroup::orbit(int x) const {
  std::vector<char> seen(degree_, 0);
  std::vector<int> out{x};
  seen[x] = 1;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& g : generators_) {
      const int y = g[out[head]];
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> PermutationGroup::orbit_ids() const {
  std::vector<int> id(degree_, -1);
  int next = 0;
  for (int x = 0; x < degree_; ++x) {
    if (id[x] >= 0) continue;
    for (int y : orbit(x)) id[y] = next;
    ++next;
  }
  return id;
}

const std::vector<Perm>& PermutationGroup::first_transversal() const {
  if (levels_.empty()) throw std::logic_error("PermutationGroup: trivial group has no base");
  return levels_.front().transversal;
}

int PermutationGroup::first_base_point() const {
  if (levels_.empty()) throw std::logic_error("PermutationGroup: trivial group has no base");
  return levels_.front().base_point;
}

void PermutationGroup::for_each_stabilizer_element(int level,
                                                   const std::function<bool(const Perm&)>& visit) const {
  if (level < 0 || level > static_cast<int>(levels_.size())) {
    throw std::out_of_range("PermutationGroup: stabilizer level out of range");
  }
  // Every element of G^(i) factors uniquely as h * u with h in G^(i+1) and u
  // in the level-i transversal; deeper factors are applied first.
  bool stop = false;
  std::function<void(int, const Perm&)> walk = [&](int i, const Perm& acc) {
    if (stop) return;
    if (i < level) {
      if (!visit(acc)) stop = true;
      return;
    }
    for (int y : levels_[i].orbit) {
      walk(i - 1, compose(acc, levels_[i].transversal[y]));
      if (stop) return;
    }
  };
  walk(static_cast<int>(levels_.size()) - 1, identity_perm(degree_));
}

BigInt PermutationGroup::stabilizer_order(int level) const {
  BigInt out = 1;
  for (std::size_t i = static_cast<std::size_t>(level); i < levels_.size(); ++i) {
    out *= static_cast<unsigned>(levels_[i].orbit.size());
  }
  return out;
}

}  // namespace drgcay
