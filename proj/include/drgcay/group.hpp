#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace drgcay {

// A finite group given by its full multiplication table.
//
// Elements are the indices 0..n-1 and element 0 is always the identity.
// mul(a, b) is the product "a then b" written ab, i.e. the usual left-to-right
// reading of words.
class FiniteGroup {
 public:
  using Element = int;
  struct Generator {
    std::string name;
    Element element;
  };

  // `table` is row-major n x n. Validates the group axioms (Latin square,
  // identity at 0, associativity) and throws std::invalid_argument on failure.
  FiniteGroup(int n, std::vector<Element> table, std::vector<Generator> generators,
              std::string tag);

  int order() const { return n_; }
  Element identity() const { return 0; }
  Element mul(Element a, Element b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  Element inv(Element a) const { return inverse_[a]; }
  Element pow(Element a, std::int64_t e) const;
  // s a s^-1
  Element conj(Element s, Element a) const { return mul(mul(s, a), inv(s)); }
  int element_order(Element a) const;
  bool is_abelian() const;

  const std::vector<Generator>& generators() const { return generators_; }
  std::optional<Element> generator(std::string_view name) const;
  const std::string& tag() const { return tag_; }
  const std::vector<Element>& table() const { return table_; }

 private:
  void verify_axioms() const;

  int n_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<Generator> generators_;
  std::string tag_;
};

// Family constructors. Generators are named a, b, c, ... in order.
FiniteGroup cyclic_group(int n);
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);
FiniteGroup elementary_abelian(int p, int k);
// <a, b | a^n = b^m = e, b^-1 a b = a^r>; element a^i b^j has index j*n + i.
FiniteGroup semidirect(int n, int m, int r);
// Upper unitriangular 3x3 matrices over GF(p); a = I+E12, b = I+E23, c = (ab)^-1 ba.
FiniteGroup heisenberg(int p);
// Maps x -> ax + b on GF(q), a a nonzero square, ordered lexicographically by
// (a, b); the product fg is the composition "apply f, then g".
FiniteGroup affine_square(int q);

// Parses the text grammar Z<n>, E(<p>,<k>), SD(<n>,<m>,<r>), HEIS(<p>),
// AFFSQ(<q>), joined by an infix `x` for direct products.
FiniteGroup parse_group_spec(std::string_view spec);

// Thrown by the text parsers; carries the 0-based offset of the problem.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

using Subgroup = std::vector<FiniteGroup::Element>;  // sorted element list

// Inverse-closed subset of G \ {e} with O(1) membership.
class ConnectionSet {
 public:
  // Throws std::invalid_argument if the identity is present, an element is
  // out of range, or the set is not closed under inversion.
  ConnectionSet(const FiniteGroup& g, std::vector<FiniteGroup::Element> elements);
  // Adds inverses before validating.
  static ConnectionSet inverse_closure(const FiniteGroup& g, std::vector<FiniteGroup::Element> elements);

  bool contains(FiniteGroup::Element x) const { return x >= 0 && x < static_cast<int>(member_.size()) && member_[x]; }
  const std::vector<FiniteGroup::Element>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  int host_order() const { return static_cast<int>(member_.size()); }

 private:
  std::vector<FiniteGroup::Element> elements_;
  std::vector<char> member_;
};

// Word over named generators: (name, exponent) pairs evaluated left to right.
struct Word {
  std::vector<std::pair<std::string, std::int64_t>> letters;
};

FiniteGroup::Element evaluate_word(const FiniteGroup& g, const Word& w);
// Comma-separated words: letters are generator names with optional ^k
// (k may be negative); a leading '-' on a letter inverts it.
std::vector<Word> parse_words(std::string_view text);

Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<FiniteGroup::Element>& seed);
bool is_subgroup(const FiniteGroup& g, const std::vector<FiniteGroup::Element>& set);

struct SubgroupList {
  std::vector<Subgroup> subgroups;
  // False when the join search hit its size cap before finishing.
  bool complete = true;
};

// All subgroups of order k, found by closing cyclic subgroups under joins of
// order dividing k.
SubgroupList subgroups_of_order(const FiniteGroup& g, int k);

// |H||K| = |G|, H ∩ K = {e} and the product map H x K -> G is onto.
bool is_general_product(const FiniteGroup& g, const Subgroup& h, const Subgroup& k);

}  // namespace drgcay
