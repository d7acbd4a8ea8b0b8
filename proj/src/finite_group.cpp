#include "tdesc/finite_group.hpp"

#include <set>

namespace tdesc {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table, std::vector<int> generators)
    : table_(std::move(table)), generators_(std::move(generators)) {
  const std::size_t n = table_.size();
  if (n == 0 || n > kMaxOrder) throw std::invalid_argument("FiniteGroup: order out of range");
  inverse_.assign(n, -1);
  for (std::size_t a = 0; a < n; ++a) {
    if (table_[a].size() != n) throw std::invalid_argument("FiniteGroup: table not square");
    for (std::size_t b = 0; b < n; ++b)
      if (table_[a][b] == 0) inverse_[a] = static_cast<int>(b);
    if (inverse_[a] < 0) throw std::invalid_argument("FiniteGroup: element without inverse");
  }
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  int x = a;
  while (x != 0) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order(); ++a)
    for (std::size_t b = a + 1; b < order(); ++b)
      if (table_[a][b] != table_[b][a]) return false;
  return true;
}

namespace {

GroupMask closure_mask(const FiniteGroup& g, const std::vector<int>& gens) {
  GroupMask mask = 1;  // identity
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int s : gens) {
      int y = g.mul(s, x);
      if (!((mask >> y) & 1u)) {
        mask |= GroupMask{1} << y;
        stack.push_back(y);
      }
    }
  }
  return mask;
}

std::vector<int> mask_elements(GroupMask mask) {
  std::vector<int> out;
  for (int i = 0; i < 64; ++i)
    if ((mask >> i) & 1u) out.push_back(i);
  return out;
}

Subgroup from_mask(const FiniteGroup& g, GroupMask mask) {
  Subgroup h;
  h.mask = mask;
  h.elements = mask_elements(mask);
  GroupMask have = 1;
  for (int x : h.elements) {
    if ((have >> x) & 1u) continue;
    h.generators.push_back(x);
    have = closure_mask(g, h.generators);
  }
  return h;
}

}  // namespace

Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<int>& gens) {
  return from_mask(g, closure_mask(g, gens));
}

Subgroup whole_group(const FiniteGroup& g) {
  GroupMask mask = g.order() == 64 ? ~GroupMask{0} : ((GroupMask{1} << g.order()) - 1);
  return from_mask(g, mask);
}

std::vector<Subgroup> subgroups(const FiniteGroup& g) {
  std::set<GroupMask> cyclic;
  for (std::size_t x = 0; x < g.order(); ++x) cyclic.insert(closure_mask(g, {static_cast<int>(x)}));
  std::set<GroupMask> all(cyclic.begin(), cyclic.end());
  std::vector<GroupMask> frontier(all.begin(), all.end());
  while (!frontier.empty()) {
    std::vector<GroupMask> next;
    for (GroupMask h : frontier)
      for (GroupMask c : cyclic) {
        if ((h | c) == h) continue;
        std::vector<int> gens = mask_elements(h | c);
        GroupMask j = closure_mask(g, gens);
        if (all.insert(j).second) next.push_back(j);
      }
    frontier = std::move(next);
  }
  std::vector<Subgroup> out;
  for (GroupMask m : all) out.push_back(from_mask(g, m));
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements < b.elements;
  });
  return out;
}

std::vector<Subgroup> conjugacy_class_representatives(const FiniteGroup& g, const std::vector<Subgroup>& all) {
  std::set<GroupMask> covered;
  std::vector<Subgroup> reps;
  for (const auto& h : all) {
    if (covered.count(h.mask)) continue;
    reps.push_back(h);
    for (std::size_t x = 0; x < g.order(); ++x) {
      GroupMask m = 0;
      for (int e : h.elements) m |= GroupMask{1} << g.conjugate(static_cast<int>(x), e);
      covered.insert(m);
    }
  }
  return reps;
}

bool is_cyclic(const FiniteGroup& g, const Subgroup& h) {
  for (int x : h.elements)
    if (static_cast<std::size_t>(g.element_order(x)) == h.order()) return true;
  return false;
}

std::vector<int> centralizer(const FiniteGroup& g, const std::vector<int>& xs) {
  std::vector<int> out;
  for (std::size_t z = 0; z < g.order(); ++z) {
    bool ok = true;
    for (int x : xs)
      if (g.mul(static_cast<int>(z), x) != g.mul(x, static_cast<int>(z))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(static_cast<int>(z));
  }
  return out;
}

std::vector<std::vector<int>> left_cosets(const FiniteGroup& g, const Subgroup& h) {
  std::vector<std::vector<int>> out;
  GroupMask covered = 0;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if ((covered >> x) & 1u) continue;
    std::vector<int> coset;
    for (int e : h.elements) coset.push_back(g.mul(static_cast<int>(x), e));
    std::sort(coset.begin(), coset.end());
    for (int c : coset) covered |= GroupMask{1} << c;
    out.push_back(std::move(coset));
  }
  return out;
}

std::optional<GroupHom> extend_homomorphism(const FiniteGroup& source, const FiniteGroup& target,
                                            const std::vector<int>& generator_images) {
  const auto& gens = source.generators();
  if (gens.size() != generator_images.size()) throw std::invalid_argument("extend_homomorphism: image count mismatch");
  GroupHom phi(source.order(), -1);
  phi[0] = 0;
  std::vector<int> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      int y = source.mul(gens[i], x);
      int val = target.mul(generator_images[i], phi[static_cast<std::size_t>(x)]);
      int& slot = phi[static_cast<std::size_t>(y)];
      if (slot < 0) {
        slot = val;
        queue.push_back(y);
      } else if (slot != val) {
        return std::nullopt;
      }
    }
  }
  return phi;
}

bool is_homomorphism(const FiniteGroup& source, const FiniteGroup& target, const GroupHom& phi) {
  if (phi.size() != source.order()) return false;
  for (std::size_t a = 0; a < source.order(); ++a)
    for (std::size_t b = 0; b < source.order(); ++b) {
      int ab = source.mul(static_cast<int>(a), static_cast<int>(b));
      if (phi[static_cast<std::size_t>(ab)] != target.mul(phi[a], phi[b])) return false;
    }
  return true;
}

GroupHom conjugate_hom(const FiniteGroup& target, int g, const GroupHom& phi) {
  GroupHom out(phi.size());
  for (std::size_t i = 0; i < phi.size(); ++i) out[i] = target.conjugate(g, phi[i]);
  return out;
}

Subgroup hom_image(const FiniteGroup& target, const GroupHom& phi) {
  GroupMask mask = 0;
  for (int x : phi) mask |= GroupMask{1} << x;
  return subgroup_closure(target, mask_elements(mask));
}

std::vector<GroupHom> hom_classes(const FiniteGroup& source, const FiniteGroup& target) {
  const auto& gens = source.generators();
  const std::size_t k = gens.size();
  std::set<std::vector<int>> canon;
  std::vector<int> images(k, 0);
  const int n = static_cast<int>(target.order());
  for (;;) {
    if (extend_homomorphism(source, target, images)) {
      std::vector<int> best = images;
      for (int g = 0; g < n; ++g) {
        std::vector<int> c(k);
        for (std::size_t i = 0; i < k; ++i) c[i] = target.conjugate(g, images[i]);
        best = std::min(best, c);
      }
      canon.insert(best);
    }
    std::size_t i = k;
    for (;;) {
      if (i == 0) goto done;
      --i;
      if (++images[i] < n) break;
      images[i] = 0;
    }
  }
done:
  std::vector<GroupHom> out;
  for (const auto& imgs : canon) out.push_back(*extend_homomorphism(source, target, imgs));
  return out;
}

FiniteGroup cyclic_group(std::size_t n) {
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a][b] = static_cast<int>((a + b) % n);
  std::vector<int> gens;
  if (n > 1) gens.push_back(1);
  return FiniteGroup(std::move(table), std::move(gens));
}

FiniteMatrixGroup FiniteMatrixGroup::generate(const std::vector<IntMatrix>& gens, std::size_t degree,
                                              std::size_t bound) {
  for (const auto& g : gens)
    if (g.rows() != degree || g.cols() != degree || !is_unimodular(g))
      throw std::invalid_argument("FiniteMatrixGroup: generators must be unimodular of the stated degree");
  auto gen = generate_group(gens, IntMatrix::identity(degree),
                            [](const IntMatrix& a, const IntMatrix& b) { return a * b; }, bound);
  return {std::move(gen.group), std::move(gen.elements), degree};
}

int FiniteMatrixGroup::index_of(const IntMatrix& m) const {
  for (std::size_t i = 0; i < matrices.size(); ++i)
    if (matrices[i] == m) return static_cast<int>(i);
  return -1;
}

}  // namespace tdesc
