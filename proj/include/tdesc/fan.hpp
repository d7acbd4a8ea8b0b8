#pragma once

// Fans of split toric varieties, their predicates, and the divisor sequence
// 0 -> M -> Z^Sigma(1) -> Cl -> 0.

#include "tdesc/zmodule.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tdesc {

using RaySet = std::vector<int>;  // ascending ray indices

struct Fan {
  std::size_t rank = 0;
  std::vector<IntVector> rays;
  std::vector<RaySet> max_cones;
  /// Optional user-fixed basis of Cl: a k x #rays degree matrix.
  std::optional<IntMatrix> class_basis;
  std::string name;

  std::size_t num_rays() const { return rays.size(); }
  /// #rays x rank matrix whose rows are the rays.
  IntMatrix ray_matrix() const;
  IntMatrix cone_matrix(const RaySet& cone) const;
};

struct FanValidation {
  std::vector<std::string> violations;
  bool valid() const { return violations.empty(); }
};
FanValidation validate_fan(const Fan& f);

bool is_simplicial(const Fan& f);
bool is_smooth(const Fan& f);
/// Pure, every wall shared by exactly two maximal cones, connected.
bool is_complete(const Fan& f);
/// A strictly convex piecewise linear support function exists.
bool is_projective(const Fan& f);

/// Facets of a full-dimensional cone, as ray subsets.
std::vector<RaySet> cone_facets(const Fan& f, const RaySet& cone);

struct DivisorTheory {
  IntMatrix ray_matrix;   // #rays x rank, m -> (<m, u_rho>)
  FGAbelianGroup cl_group;
  IntMatrix deg;          // num_generators(Cl) x #rays, before reduction
  std::string basis_note; // how the Cl coordinates were chosen

  std::size_t num_rays() const { return ray_matrix.rows(); }
  /// Class of a T-divisor, torsion coordinates reduced.
  IntVector classify(const IntVector& divisor) const;
  IntVector ray_class(std::size_t rho) const { return classify(unit_vector(num_rays(), rho)); }
};

/// Throws std::invalid_argument when the rays do not span N_R or when a
/// supplied class basis is inconsistent.
DivisorTheory class_group(const Fan& f);

/// Complements of the maximal cones, deduplicated and sorted.
std::vector<RaySet> irrelevant_generators(const Fan& f);

}  // namespace tdesc
