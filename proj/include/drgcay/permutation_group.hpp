#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace drgcay {

using BigInt = boost::multiprecision::cpp_int;

// A permutation of {0..n-1}: p[i] is the image of i.
using Perm = std::vector<int>;

Perm identity_perm(int n);
// (p * q)(x) = q(p(x)): apply p first.
Perm compose(const Perm& p, const Perm& q);
Perm inverse(const Perm& p);
bool is_identity(const Perm& p);
bool is_permutation(const Perm& p);
int perm_order(const Perm& p);

// Permutation group with a stabilizer chain built by deterministic
// Schreier-Sims.
class PermutationGroup {
 public:
  // `base_prefix` fixes the first base points (e.g. {0} so that level 1 is
  // the stabilizer of vertex 0); further base points are chosen as needed.
  PermutationGroup(int degree, std::vector<Perm> generators, std::vector<int> base_prefix = {});

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }
  const BigInt& order() const { return order_; }
  std::vector<int> base() const;
  bool contains(const Perm& p) const;

  // Orbit of x under the whole group, sorted.
  std::vector<int> orbit(int x) const;
  // Orbit id per point (ids numbered by smallest member order).
  std::vector<int> orbit_ids() const;

  // Level 0 transversal: for every point y in the orbit of base point b_0,
  // an element mapping b_0 to y. Empty entries for points outside the orbit.
  const std::vector<Perm>& first_transversal() const;
  int first_base_point() const;
  // Calls visit(g) for every element of the pointwise stabilizer of the first
  // `level` base points; stops early when visit returns false.
  void for_each_stabilizer_element(int level, const std::function<bool(const Perm&)>& visit) const;
  BigInt stabilizer_order(int level) const;

 private:
  struct Level {
    int base_point = -1;
    std::vector<Perm> strong_generators;
    std::vector<Perm> transversal;  // transversal[y] maps base_point to y, or empty
    std::vector<int> orbit;
  };

  void add_generator(std::size_t level, const Perm& g);
  void sift_into(std::size_t level, Perm h);
  Level make_level(int base_point) const;

  int degree_;
  std::vector<Perm> generators_;
  std::vector<Level> levels_;
  BigInt order_;
};

}  // namespace drgcay
