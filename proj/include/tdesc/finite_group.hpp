#pragma once

#include "tdesc/int_matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tdesc {

/// Abstract finite group given by its multiplication table.  Element 0 is
/// the identity.  Orders are bounded by kMaxOrder so subgroups fit a mask.
class FiniteGroup {
 public:
  static constexpr std::size_t kMaxOrder = 64;

  FiniteGroup() : table_{{0}}, inverse_{0} {}
  FiniteGroup(std::vector<std::vector<int>> table, std::vector<int> generators);

  std::size_t order() const { return table_.size(); }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  /// g x g^{-1}
  int conjugate(int g, int x) const { return mul(mul(g, x), inv(g)); }
  int element_order(int a) const;
  const std::vector<int>& generators() const { return generators_; }
  bool is_abelian() const;

 private:
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  std::vector<int> generators_;
};

/// Close a set of generators of a faithful representation under `mul`.
/// Elements are ordered identity first, then by operator<.  Returns the
/// abstract group, the element labels, and the element index of each input
/// generator.
template <class T>
struct GeneratedGroup {
  FiniteGroup group;
  std::vector<T> elements;
  std::vector<int> generator_indices;
};

template <class T, class Mul>
GeneratedGroup<T> generate_group(const std::vector<T>& gens, const T& identity, Mul mul,
                                      std::size_t bound = FiniteGroup::kMaxOrder) {
  std::vector<T> found{identity};
  std::map<T, int> seen{{identity, 0}};
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (const auto& g : gens) {
      T next = mul(g, found[head]);
      if (seen.count(next)) continue;
      if (found.size() >= bound) throw std::length_error("group order exceeds the configured bound");
      seen.emplace(next, static_cast<int>(found.size()));
      found.push_back(std::move(next));
    }
  }
  std::sort(found.begin() + 1, found.end());
  std::map<T, int> index;
  for (std::size_t i = 0; i < found.size(); ++i) index.emplace(found[i], static_cast<int>(i));
  const std::size_t n = found.size();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto it = index.find(mul(found[a], found[b]));
      if (it == index.end()) throw std::logic_error("generate_group: product escaped the closure");
      table[a][b] = it->second;
    }
  std::vector<int> gen_idx;
  std::vector<int> nontrivial;
  for (const auto& g : gens) {
    int i = index.at(g);
    gen_idx.push_back(i);
    if (i != 0 && std::find(nontrivial.begin(), nontrivial.end(), i) == nontrivial.end()) nontrivial.push_back(i);
  }
  return {FiniteGroup(std::move(table), std::move(nontrivial)), std::move(found), std::move(gen_idx)};
}

using GroupMask = std::uint64_t;

struct Subgroup {
  GroupMask mask = 0;
  std::vector<int> elements;    // ascending
  std::vector<int> generators;  // greedy generating set in element order
  std::size_t order() const { return elements.size(); }
  bool contains(int g) const { return (mask >> g) & 1u; }
};

Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<int>& gens);
Subgroup whole_group(const FiniteGroup& g);
/// All subgroups sorted by order, then by element list.
std::vector<Subgroup> subgroups(const FiniteGroup& g);
/// One representative (the first in subgroups() order) per conjugacy class.
std::vector<Subgroup> conjugacy_class_representatives(const FiniteGroup& g, const std::vector<Subgroup>& all);
bool is_cyclic(const FiniteGroup& g, const Subgroup& h);
/// Elements commuting with every element of `xs`.
std::vector<int> centralizer(const FiniteGroup& g, const std::vector<int>& xs);
/// Left cosets gH, each listed by its smallest element; ordered by that element.
std::vector<std::vector<int>> left_cosets(const FiniteGroup& g, const Subgroup& h);

/// Homomorphism source -> target as the image of every source element.
using GroupHom = std::vector<int>;

/// Extend images of the source generators to a homomorphism, if one exists.
std::optional<GroupHom> extend_homomorphism(const FiniteGroup& source, const FiniteGroup& target,
                                            const std::vector<int>& generator_images);
bool is_homomorphism(const FiniteGroup& source, const FiniteGroup& target, const GroupHom& phi);
/// Hom(source, target) up to conjugation in the target: one canonical
/// representative per class (lexicographically least generator images),
/// sorted; the trivial homomorphism comes first.
std::vector<GroupHom> hom_classes(const FiniteGroup& source, const FiniteGroup& target);
/// g . phi . g^{-1}
GroupHom conjugate_hom(const FiniteGroup& target, int g, const GroupHom& phi);
/// Image subgroup of a homomorphism.
Subgroup hom_image(const FiniteGroup& target, const GroupHom& phi);

/// Cyclic group of order n, generator = element 1.
FiniteGroup cyclic_group(std::size_t n);

/// A finite group together with a faithful integral matrix representation.
struct FiniteMatrixGroup {
  FiniteGroup group;
  std::vector<IntMatrix> matrices;  // indexed by element
  std::size_t degree = 0;

  static FiniteMatrixGroup generate(const std::vector<IntMatrix>& gens, std::size_t degree,
                                    std::size_t bound = FiniteGroup::kMaxOrder);
  int index_of(const IntMatrix& m) const;  // -1 when absent
};

}  // namespace tdesc
