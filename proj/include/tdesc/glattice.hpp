#pragma once

// Integral representations of finite groups: Tate cohomology, flasque and
// coflasque lattices, coflasque resolutions and the invertibility decision.

#include "tdesc/finite_group.hpp"
#include "tdesc/zmodule.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace tdesc {

/// A free Z-module of finite rank with a linear action of a finite group.
/// Matrices act on column vectors from the left.
struct GLattice {
  std::shared_ptr<const FiniteGroup> group;
  std::size_t rank = 0;
  std::vector<IntMatrix> action;  // indexed by group element

  const IntMatrix& act(int g) const { return action[static_cast<std::size_t>(g)]; }
  /// Throws std::invalid_argument if the action is not a homomorphism.
  void verify() const;

  /// The lattice Z^rank acted on by the group the generators generate.
  static GLattice from_generators(const std::vector<IntMatrix>& generators, std::size_t rank);
  static GLattice trivial(std::shared_ptr<const FiniteGroup> group, std::size_t rank);
  /// Permutation lattice on a G-set given by one permutation per element.
  static GLattice permutation(std::shared_ptr<const FiniteGroup> group, const std::vector<std::vector<int>>& perms);
};

GLattice dual(const GLattice& l);
GLattice direct_sum(const GLattice& a, const GLattice& b);
/// Restriction of the action to an invariant sublattice with the given
/// column basis.  Throws if the sublattice is not invariant.
GLattice restrict_to(const GLattice& l, const IntMatrix& basis);
/// Gamma acts through phi : Gamma -> G.  Throws if phi is not a homomorphism.
GLattice compose_action(std::shared_ptr<const FiniteGroup> gamma, const GroupHom& phi, const GLattice& l);

/// Column basis of the fixed sublattice L^H.
IntMatrix fixed_sublattice(const GLattice& l, const Subgroup& h);
/// Sum of the action matrices over H.
IntMatrix norm_matrix(const GLattice& l, const Subgroup& h);

/// Degree-1 cocycles parametrised by their values on the generators of H.
/// value_at[x] expresses f(x) (rank rows) in terms of those values for
/// every x in H.
struct CocycleSpace {
  IntMatrix cocycles;                     // column basis of Z^1 inside Z^{k * rank}
  IntMatrix coboundaries;                 // generators of B^1
  std::vector<IntMatrix> value_at;        // per group element (empty outside H)
  Subquotient cohomology;                 // Z^1 / B^1
};
CocycleSpace cocycle_space(const GLattice& l, const Subgroup& h);

/// Tate cohomology as explicit subquotients of Z^rank (degrees -1 and 0).
Subquotient tate_minus_one(const GLattice& l, const Subgroup& h);
Subquotient tate_zero(const GLattice& l, const Subgroup& h);
/// H^1 by the kernel/image formula ker(N) / (h - 1)L; H must be cyclic.
Subquotient tate_one_cyclic(const GLattice& l, const Subgroup& h);
/// Dispatch on degree in {-1, 0, 1}; degree 1 uses the cocycle system.
FGAbelianGroup tate_h(int degree, const Subgroup& h, const GLattice& l);

struct VanishingCheck {
  bool holds = true;
  std::optional<Subgroup> failing_subgroup;
  FGAbelianGroup failing_group;
};
/// H^-1(H, L) = 0 for every subgroup (conjugacy representatives suffice).
VanishingCheck is_flasque(const GLattice& l);
/// H^1(H, L) = 0 for every subgroup.
VanishingCheck is_coflasque(const GLattice& l);

/// 0 -> Q -> P -> M -> 0 with P a permutation lattice.
struct CoflasqueResolution {
  struct Block {
    Subgroup subgroup;
    IntVector generator;                  // element of M^H
    std::vector<std::vector<int>> cosets; // left cosets of H
    std::size_t offset = 0;               // first basis index in P
  };
  std::vector<Block> blocks;
  GLattice P;
  IntMatrix pi;          // rank(M) x rank(P)
  IntMatrix q_basis;     // rank(P) x rank(Q), columns spanning ker(pi)
  GLattice Q;
};
CoflasqueResolution coflasque_resolution(const GLattice& m);

struct InvertibilityVerdict {
  enum class Kind { Proven, Disproven };
  Kind kind = Kind::Disproven;
  CoflasqueResolution resolution;
  IntMatrix section;     // rank(P) x rank(M) when Proven
  std::string reason;
  std::optional<Subgroup> witness;  // failing subgroup when a necessary condition fails
  bool proven() const { return kind == Kind::Proven; }
};
/// Exact: M is invertible iff its coflasque resolution splits equivariantly.
InvertibilityVerdict is_invertible(const GLattice& m);

/// All equivariant right inverses of pi: P -> M for the permutation lattice
/// of a coflasque resolution, parametrised block by block.  Returns one
/// section or nullopt.
std::optional<IntMatrix> permutation_section(const GLattice& m, const CoflasqueResolution& res);

/// ker(H^1(G, L) -> prod over cyclic C of H^1(C, L)) for the whole group.
Subquotient sha1_cyclic(const GLattice& l);

}  // namespace tdesc
