#pragma once

// Fan symmetries W, the weight decomposition Lambda, the class automorphism
// group J = image of W in Aut(Cl), its kernel W0, and the splitting J -> W.

#include "tdesc/fan.hpp"
#include "tdesc/finite_group.hpp"

#include <memory>
#include <vector>

namespace tdesc {

/// g u_rho = u_{perm[rho]} and g maps maximal cones to maximal cones.
struct FanSymmetry {
  IntMatrix g;
  std::vector<int> perm;

  friend bool operator<(const FanSymmetry& a, const FanSymmetry& b) { return a.perm < b.perm; }
  friend bool operator==(const FanSymmetry& a, const FanSymmetry& b) { return a.perm == b.perm; }
};

struct ToricWeylGroup {
  std::shared_ptr<const FiniteGroup> group;  // mul(a, b) = a after b
  std::vector<FanSymmetry> elements;         // identity first, then by ray permutation
  std::size_t order() const { return elements.size(); }
};

/// All symmetries of a fan whose rays span N_R.
ToricWeylGroup fan_automorphisms(const Fan& f);

struct WeightDecomposition {
  std::vector<IntVector> classes;  // Lambda, in order of first occurring ray
  std::vector<int> ray_class;      // ray -> index into classes
  std::vector<std::size_t> multiplicity;
  std::vector<std::vector<int>> rays_of;  // class -> ascending rays
};
WeightDecomposition weight_decomposition(const DivisorTheory& div);

/// Sizes n_lambda of the matrix factors End(V_lambda) of the Cox
/// endomorphism algebra, one per lambda.
std::vector<std::size_t> cox_algebra_shape(const WeightDecomposition& wd);

struct ClassAutGroup {
  std::shared_ptr<const FiniteGroup> group;   // J
  std::vector<std::vector<int>> lambda_perm;  // per element: permutation of Lambda
  std::vector<IntMatrix> cl_action;           // per element: matrix on Cl coordinates
  GroupHom quotient;                          // W -> J
  GroupHom section;                           // J -> W
  std::vector<int> kernel;                    // W0 as W element indices
  std::size_t order() const { return lambda_perm.size(); }
};

/// J, W0 and the order-preserving section.  Throws std::logic_error if the
/// section is not a homomorphism.
ClassAutGroup class_aut_group(const ToricWeylGroup& w, const DivisorTheory& div, const WeightDecomposition& wd);

/// Permutation matrix of a ray permutation on Z^Sigma(1) (e_rho -> e_perm(rho)).
IntMatrix ray_permutation_matrix(const std::vector<int>& perm);
/// Matrix of a ray permutation on Cl coordinates.
IntMatrix induced_cl_matrix(const DivisorTheory& div, const std::vector<int>& perm);
/// A divisor class lift: #rays x num_generators(Cl), deg * lift = 1 modulo torsion.
IntMatrix class_lift(const DivisorTheory& div);

/// Rebuild a group with a greedy generating set (small generating sets keep
/// homomorphism searches cheap).
FiniteGroup with_greedy_generators(const FiniteGroup& g);

}  // namespace tdesc
