#pragma once

// J-stable sets of globally generated classes, the kernel lattice of
// Z^omega -> Pic, and the shapes of the target Y and the separable algebra B.

#include "tdesc/toric.hpp"

#include <string>
#include <vector>

namespace tdesc {

struct OmegaSet {
  std::vector<IntVector> classes;        // Cl coordinates, sorted
  std::vector<Int> h0;                   // per class
  std::vector<std::vector<int>> j_perm;  // per J element; -1 where the image leaves the set
};

/// Union over all subgroups G <= J of the Hilbert basis of Nef meet Pic^G.
/// Requires a smooth projective fan.
OmegaSet canonical_omega(const ToricData& t);

/// Attach h0 and the J-permutation to user classes (sorted, deduplicated).
OmegaSet make_omega(const ToricData& t, std::vector<IntVector> classes);

struct OmegaValidation {
  bool j_stable = false;
  bool globally_generated = false;
  bool faithful = false;
  bool generates_pic = false;
  bool kernel_coflasque = false;
  std::vector<bool> fixed_surjective;  // per subgroup of J in subgroups() order
  std::optional<GLattice> kernel;      // Q = ker(Z^omega -> Pic), when j_stable
  std::vector<std::string> warnings;

  bool all_fixed_surjective() const;
  bool ok() const {
    return j_stable && globally_generated && faithful && generates_pic && kernel_coflasque && all_fixed_surjective();
  }
};
OmegaValidation validate_omega(const ToricData& t, const OmegaSet& omega);

/// Z^omega as a permutation J-lattice and the map to Pic (columns = classes).
GLattice omega_lattice(const ToricData& t, const OmegaSet& omega);
IntMatrix omega_map(const OmegaSet& omega);

/// J-orbits on omega, each ascending, ordered by least element.
std::vector<std::vector<int>> omega_orbits(const OmegaSet& omega);

struct TargetShape {
  std::vector<Int> dims;                 // P^{h0 - 1} per class
  std::vector<std::vector<int>> orbits;  // J-orbits of classes
};
struct AlgebraFactor {
  Int degree;                 // matrix degree h0
  std::size_t center_degree;  // orbit length
  std::vector<int> orbit;
};
struct SeparableAlgebraShape {
  std::vector<AlgebraFactor> factors;
};
TargetShape target_shape(const OmegaSet& omega);
SeparableAlgebraShape algebra_shape(const OmegaSet& omega);

/// "P^2 x P^2 x P^1 ..." with repeated factors grouped as (P^n)^k.
std::string describe_target(const TargetShape& y);
std::string describe_algebra(const SeparableAlgebraShape& b);

struct InjectivityReport {
  InvertibilityVerdict verdict;
  std::string text;
};
InjectivityReport injectivity_verdict(const ToricData& t);

}  // namespace tdesc
