#include "tdesc/glattice.hpp"

#include <map>
#include <stdexcept>

namespace tdesc {

void GLattice::verify() const {
  if (!group) throw std::invalid_argument("GLattice: missing group");
  if (action.size() != group->order()) throw std::invalid_argument("GLattice: one matrix per element required");
  for (const auto& a : action)
    if (a.rows() != rank || a.cols() != rank) throw std::invalid_argument("GLattice: action matrix has wrong size");
  if (!action[0].is_identity()) throw std::invalid_argument("GLattice: identity must act trivially");
  const auto n = static_cast<int>(group->order());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (act(group->mul(a, b)) != act(a) * act(b)) throw std::invalid_argument("GLattice: action is not a homomorphism");
}

GLattice GLattice::from_generators(const std::vector<IntMatrix>& generators, std::size_t rank) {
  FiniteMatrixGroup mg = FiniteMatrixGroup::generate(generators, rank);
  GLattice l{std::make_shared<const FiniteGroup>(mg.group), rank, mg.matrices};
  return l;
}

GLattice GLattice::trivial(std::shared_ptr<const FiniteGroup> group, std::size_t rank) {
  std::vector<IntMatrix> action(group->order(), IntMatrix::identity(rank));
  return {std::move(group), rank, std::move(action)};
}

GLattice GLattice::permutation(std::shared_ptr<const FiniteGroup> group, const std::vector<std::vector<int>>& perms) {
  if (perms.size() != group->order()) throw std::invalid_argument("GLattice::permutation: one permutation per element");
  std::vector<IntMatrix> action;
  for (const auto& p : perms) action.push_back(IntMatrix::permutation(p));
  GLattice l{std::move(group), perms.empty() ? 0 : perms[0].size(), std::move(action)};
  l.verify();
  return l;
}

GLattice dual(const GLattice& l) {
  GLattice d{l.group, l.rank, {}};
  for (std::size_t g = 0; g < l.action.size(); ++g)
    d.action.push_back(l.act(l.group->inv(static_cast<int>(g))).transpose());
  return d;
}

GLattice direct_sum(const GLattice& a, const GLattice& b) {
  if (a.group != b.group) throw std::invalid_argument("direct_sum: lattices over different groups");
  GLattice s{a.group, a.rank + b.rank, {}};
  for (std::size_t g = 0; g < a.action.size(); ++g) {
    IntMatrix m(s.rank, s.rank);
    for (std::size_t i = 0; i < a.rank; ++i)
      for (std::size_t j = 0; j < a.rank; ++j) m(i, j) = a.action[g](i, j);
    for (std::size_t i = 0; i < b.rank; ++i)
      for (std::size_t j = 0; j < b.rank; ++j) m(a.rank + i, a.rank + j) = b.action[g](i, j);
    s.action.push_back(std::move(m));
  }
  return s;
}

GLattice restrict_to(const GLattice& l, const IntMatrix& basis) {
  LatticeCoordinates coords(basis);
  GLattice r{l.group, basis.cols(), {}};
  for (const auto& a : l.action) {
    IntMatrix img = a * basis;
    IntMatrix m(basis.cols(), basis.cols());
    for (std::size_t j = 0; j < basis.cols(); ++j) {
      auto y = coords.coordinates(img.col(j));
      if (!y) throw std::invalid_argument("restrict_to: sublattice is not invariant");
      m.set_col(j, *y);
    }
    r.action.push_back(std::move(m));
  }
  return r;
}

GLattice compose_action(std::shared_ptr<const FiniteGroup> gamma, const GroupHom& phi, const GLattice& l) {
  if (!is_homomorphism(*gamma, *l.group, phi)) throw std::invalid_argument("compose_action: not a homomorphism");
  GLattice out{std::move(gamma), l.rank, {}};
  for (int x : phi) out.action.push_back(l.act(x));
  return out;
}

namespace {

IntMatrix stacked_differences(const GLattice& l, const std::vector<int>& gens) {
  IntMatrix stack(0, l.rank);
  const IntMatrix id = IntMatrix::identity(l.rank);
  for (int g : gens) stack = stack.vstack(l.act(g) - id);
  return stack;
}

IntMatrix difference_images(const GLattice& l, const std::vector<int>& gens) {
  // Columns (h - 1) e_j for every generator h: generators of I_H L.
  IntMatrix out(l.rank, 0);
  const IntMatrix id = IntMatrix::identity(l.rank);
  for (int g : gens) out = out.hstack(l.act(g) - id);
  return out;
}

}  // namespace

IntMatrix fixed_sublattice(const GLattice& l, const Subgroup& h) {
  if (h.generators.empty()) return IntMatrix::identity(l.rank);
  return kernel_basis(stacked_differences(l, h.generators));
}

IntMatrix norm_matrix(const GLattice& l, const Subgroup& h) {
  IntMatrix n(l.rank, l.rank);
  for (int x : h.elements) n = n + l.act(x);
  return n;
}

Subquotient tate_minus_one(const GLattice& l, const Subgroup& h) {
  IntMatrix ker = kernel_basis(norm_matrix(l, h));
  return Subquotient(ker, difference_images(l, h.generators));
}

Subquotient tate_zero(const GLattice& l, const Subgroup& h) {
  return Subquotient(fixed_sublattice(l, h), norm_matrix(l, h));
}

Subquotient tate_one_cyclic(const GLattice& l, const Subgroup& h) {
  const auto& g = *l.group;
  int gen = -1;
  for (int x : h.elements)
    if (static_cast<std::size_t>(g.element_order(x)) == h.order()) {
      gen = x;
      break;
    }
  if (gen < 0) throw std::invalid_argument("tate_one_cyclic: subgroup is not cyclic");
  IntMatrix ker = kernel_basis(norm_matrix(l, h));
  return Subquotient(ker, l.act(gen) - IntMatrix::identity(l.rank));
}

CocycleSpace cocycle_space(const GLattice& l, const Subgroup& h) {
  const auto& g = *l.group;
  const std::size_t r = l.rank;
  const std::size_t k = h.generators.size();
  const std::size_t width = k * r;
  CocycleSpace cs;
  cs.value_at.assign(g.order(), IntMatrix());
  cs.value_at[0] = IntMatrix(r, width);

  // f(h_i x) = f(h_i) + h_i f(x): propagate along a spanning tree, and turn
  // every other edge of the Cayley graph into a constraint.
  IntMatrix constraints(0, width);
  std::vector<int> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    for (std::size_t i = 0; i < k; ++i) {
      int hi = h.generators[i];
      int y = g.mul(hi, x);
      IntMatrix val = l.act(hi) * cs.value_at[static_cast<std::size_t>(x)];
      for (std::size_t row = 0; row < r; ++row) val(row, i * r + row) += 1;
      IntMatrix& slot = cs.value_at[static_cast<std::size_t>(y)];
      if (slot.rows() == 0) {
        slot = std::move(val);
        queue.push_back(y);
      } else {
        IntMatrix diff = slot - val;
        if (!diff.is_zero()) constraints = constraints.vstack(diff);
      }
    }
  }
  cs.cocycles = constraints.rows() == 0 ? IntMatrix::identity(width) : kernel_basis(constraints);
  IntMatrix cob(width, r);
  const IntMatrix id = IntMatrix::identity(r);
  for (std::size_t i = 0; i < k; ++i) {
    IntMatrix d = l.act(h.generators[i]) - id;
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b) cob(i * r + a, b) = d(a, b);
  }
  cs.coboundaries = cob;
  cs.cohomology = Subquotient(cs.cocycles, cob);
  return cs;
}

FGAbelianGroup tate_h(int degree, const Subgroup& h, const GLattice& l) {
  switch (degree) {
    case -1:
      return tate_minus_one(l, h).group();
    case 0:
      return tate_zero(l, h).group();
    case 1:
      return cocycle_space(l, h).cohomology.group();
    default:
      throw std::invalid_argument("tate_h: degree must be -1, 0 or 1");
  }
}

namespace {

VanishingCheck vanishing(const GLattice& l, int degree) {
  auto all = subgroups(*l.group);
  for (const auto& h : conjugacy_class_representatives(*l.group, all)) {
    FGAbelianGroup grp = tate_h(degree, h, l);
    if (!grp.is_trivial()) return {false, h, grp};
  }
  return {};
}

}  // namespace

VanishingCheck is_flasque(const GLattice& l) { return vanishing(l, -1); }
VanishingCheck is_coflasque(const GLattice& l) { return vanishing(l, 1); }

namespace {

// Image in M of the H-fixed part of P, where P is described by its blocks.
IntMatrix fixed_image(const GLattice& m, const std::vector<CoflasqueResolution::Block>& blocks, const Subgroup& h) {
  const auto& g = *m.group;
  IntMatrix gens(m.rank, 0);
  for (const auto& b : blocks) {
    // H-orbits on the cosets G/K; the orbit sum maps to the sum of x.v.
    std::vector<int> coset_of(g.order(), -1);
    for (std::size_t c = 0; c < b.cosets.size(); ++c)
      for (int x : b.cosets[c]) coset_of[static_cast<std::size_t>(x)] = static_cast<int>(c);
    std::vector<bool> seen(b.cosets.size(), false);
    for (std::size_t c = 0; c < b.cosets.size(); ++c) {
      if (seen[c]) continue;
      IntVector sum(m.rank);
      for (int y : h.elements) {
        int cc = coset_of[static_cast<std::size_t>(g.mul(y, b.cosets[c][0]))];
        if (seen[static_cast<std::size_t>(cc)]) continue;
        seen[static_cast<std::size_t>(cc)] = true;
        sum = sum + m.act(b.cosets[static_cast<std::size_t>(cc)][0]) * b.generator;
      }
      gens = gens.hstack(IntMatrix::column(sum));
    }
  }
  return gens;
}

bool spans(const IntMatrix& gens, const IntMatrix& target) {
  if (target.cols() == 0) return true;
  if (gens.cols() == 0) return false;
  IntMatrix basis = canonical_basis(gens);
  if (basis.cols() == 0) return false;
  LatticeCoordinates lc(basis);
  for (std::size_t j = 0; j < target.cols(); ++j)
    if (!lc.contains(target.col(j))) return false;
  return true;
}

}  // namespace

CoflasqueResolution coflasque_resolution(const GLattice& m) {
  const auto& g = *m.group;
  auto all = subgroups(g);
  auto reps = conjugacy_class_representatives(g, all);
  // Largest subgroups first; smaller ones are often already covered.
  std::stable_sort(reps.begin(), reps.end(),
                   [](const Subgroup& a, const Subgroup& b) { return a.order() > b.order(); });

  CoflasqueResolution res;
  std::size_t prank = 0;
  for (const auto& h : reps) {
    IntMatrix fixed = fixed_sublattice(m, h);
    for (std::size_t j = 0; j < fixed.cols(); ++j) {
      IntMatrix image = fixed_image(m, res.blocks, h);
      if (spans(image, IntMatrix::column(fixed.col(j)))) continue;
      CoflasqueResolution::Block b{h, fixed.col(j), left_cosets(g, h), prank};
      prank += b.cosets.size();
      res.blocks.push_back(std::move(b));
    }
  }

  // Permutation action on P and the map pi.
  std::vector<std::vector<int>> perms(g.order(), std::vector<int>(prank));
  res.pi = IntMatrix(m.rank, prank);
  for (const auto& b : res.blocks) {
    std::vector<int> coset_of(g.order(), -1);
    for (std::size_t c = 0; c < b.cosets.size(); ++c)
      for (int x : b.cosets[c]) coset_of[static_cast<std::size_t>(x)] = static_cast<int>(c);
    for (std::size_t c = 0; c < b.cosets.size(); ++c) {
      res.pi.set_col(b.offset + c, m.act(b.cosets[c][0]) * b.generator);
      for (std::size_t x = 0; x < g.order(); ++x) {
        int img = coset_of[static_cast<std::size_t>(g.mul(static_cast<int>(x), b.cosets[c][0]))];
        perms[x][b.offset + c] = static_cast<int>(b.offset) + img;
      }
    }
  }
  res.P = prank == 0 ? GLattice::trivial(m.group, 0) : GLattice::permutation(m.group, perms);

  for (const auto& h : all)
    if (!spans(fixed_image(m, res.blocks, h), fixed_sublattice(m, h)))
      throw std::logic_error("coflasque_resolution: P^H -> M^H not surjective");

  res.q_basis = kernel_basis(res.pi);
  res.Q = restrict_to(res.P, res.q_basis);
  return res;
}

std::optional<IntMatrix> permutation_section(const GLattice& m, const CoflasqueResolution& res) {
  const auto& g = *m.group;
  const std::size_t r = m.rank;
  // Equivariant maps M -> Z[G/H] correspond to H-invariant functionals phi:
  // s(x) = sum over cosets cH of phi(c^{-1} x) e_{cH}.
  struct Param {
    std::size_t block;
    IntVector functional;  // row vector stored as a column
  };
  std::vector<Param> params;
  std::vector<IntVector> columns;  // vec(C) per parameter
  for (std::size_t bi = 0; bi < res.blocks.size(); ++bi) {
    const auto& b = res.blocks[bi];
    IntMatrix inv_fixed = fixed_sublattice(dual(m), b.subgroup);
    // dual(m) acts by (A_{g^-1})^T, so its fixed vectors are exactly the
    // functionals phi with phi A_h = phi.
    for (std::size_t t = 0; t < inv_fixed.cols(); ++t) {
      IntVector phi = inv_fixed.col(t);
      IntMatrix c(r, r);
      for (const auto& coset : b.cosets) {
        int x = coset[0];
        IntVector v = m.act(x) * b.generator;
        IntVector row = m.act(g.inv(x)).transpose() * phi;
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j) c(i, j) += v[i] * row[j];
      }
      IntVector vec(r * r);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) vec[i * r + j] = c(i, j);
      params.push_back({bi, phi});
      columns.push_back(std::move(vec));
    }
  }
  IntVector target(r * r);
  for (std::size_t i = 0; i < r; ++i) target[i * r + i] = 1;
  if (params.empty()) {
    if (r == 0) return IntMatrix(res.P.rank, 0);
    return std::nullopt;
  }
  IntMatrix sys = IntMatrix::from_columns(columns, r * r);
  auto y = LinearSystem(sys).solve(target);
  if (!y) return std::nullopt;

  IntMatrix s(res.P.rank, r);
  for (std::size_t p = 0; p < params.size(); ++p) {
    if ((*y)[p] == 0) continue;
    const auto& b = res.blocks[params[p].block];
    for (std::size_t c = 0; c < b.cosets.size(); ++c) {
      IntVector row = m.act(g.inv(b.cosets[c][0])).transpose() * params[p].functional;
      for (std::size_t j = 0; j < r; ++j) s(b.offset + c, j) += (*y)[p] * row[j];
    }
  }
  return s;
}

InvertibilityVerdict is_invertible(const GLattice& m) {
  InvertibilityVerdict v;
  v.resolution = coflasque_resolution(m);
  auto s = permutation_section(m, v.resolution);
  if (s) {
    // Certificate: pi s = 1 and s commutes with the action.
    if (!(v.resolution.pi * *s).is_identity()) throw std::logic_error("is_invertible: section fails pi * s = 1");
    for (int gen : m.group->generators())
      if (v.resolution.P.act(gen) * *s != *s * m.act(gen))
        throw std::logic_error("is_invertible: section is not equivariant");
    v.kind = InvertibilityVerdict::Kind::Proven;
    v.section = std::move(*s);
    v.reason = "coflasque resolution splits equivariantly";
    return v;
  }
  v.kind = InvertibilityVerdict::Kind::Disproven;
  v.reason = "no equivariant splitting of the coflasque resolution exists";
  auto fl = is_flasque(m);
  if (!fl.holds) {
    v.witness = fl.failing_subgroup;
    v.reason += "; not flasque (H^-1 = " + fl.failing_group.to_string() + ")";
    return v;
  }
  auto cf = is_coflasque(m);
  if (!cf.holds) {
    v.witness = cf.failing_subgroup;
    v.reason += "; not coflasque (H^1 = " + cf.failing_group.to_string() + ")";
  }
  return v;
}

Subquotient sha1_cyclic(const GLattice& l) {
  const auto& g = *l.group;
  Subgroup whole = whole_group(g);
  CocycleSpace cs = cocycle_space(l, whole);
  const std::size_t r = l.rank;
  const std::size_t z = cs.cocycles.cols();

  // Cyclic subgroups, each by its least generating element.
  std::vector<int> cyclic_gens;
  std::vector<GroupMask> seen;
  for (std::size_t x = 1; x < g.order(); ++x) {
    Subgroup c = subgroup_closure(g, {static_cast<int>(x)});
    if (std::find(seen.begin(), seen.end(), c.mask) != seen.end()) continue;
    seen.push_back(c.mask);
    cyclic_gens.push_back(static_cast<int>(x));
  }
  // Unknowns (y, w_1, ..., w_c): value_at[h] * Z * y = (h - 1) w_h.
  const std::size_t width = z + cyclic_gens.size() * r;
  IntMatrix sys(0, width);
  const IntMatrix id = IntMatrix::identity(r);
  for (std::size_t ci = 0; ci < cyclic_gens.size(); ++ci) {
    int h = cyclic_gens[ci];
    IntMatrix block(r, width);
    IntMatrix fz = cs.value_at[static_cast<std::size_t>(h)] * cs.cocycles;
    IntMatrix d = l.act(h) - id;
    for (std::size_t a = 0; a < r; ++a) {
      for (std::size_t b = 0; b < z; ++b) block(a, b) = fz(a, b);
      for (std::size_t b = 0; b < r; ++b) block(a, z + ci * r + b) = -d(a, b);
    }
    sys = sys.vstack(block);
  }
  IntMatrix sub;
  if (sys.rows() == 0) {
    sub = cs.cocycles;
  } else {
    IntMatrix ker = kernel_basis(sys);
    IntMatrix y(z, ker.cols());
    for (std::size_t j = 0; j < ker.cols(); ++j)
      for (std::size_t i = 0; i < z; ++i) y(i, j) = ker(i, j);
    sub = canonical_basis(cs.cocycles * y);
  }
  return Subquotient(sub, cs.coboundaries);
}

}  // namespace tdesc
