#pragma once

// Rational polyhedral cones (double description, Hilbert bases), the nef cone
// of a smooth projective fan, and lattice point counts of divisor polytopes.

#include "tdesc/fan.hpp"

#include <vector>

namespace tdesc {

/// Pointed cone in Q^dim kept in both representations.  Rays are primitive
/// and sorted; inequalities a . x >= 0 are primitive, irredundant and sorted.
/// Equations (a . x = 0) describe the linear span when it is not everything.
struct RationalCone {
  std::size_t dim = 0;
  std::vector<IntVector> rays;
  std::vector<IntVector> inequalities;
  std::vector<IntVector> equations;

  bool contains(const IntVector& v) const;
  bool full_dimensional() const { return equations.empty(); }
};

RationalCone cone_from_generators(std::size_t dim, const std::vector<IntVector>& generators);
/// Throws std::invalid_argument when the cone contains a line.
RationalCone cone_from_inequalities(std::size_t dim, const std::vector<IntVector>& inequalities);
std::vector<IntVector> extreme_rays(const RationalCone& c);

/// Minimal generating set of the monoid c intersected with Z^dim, sorted.
/// Throws std::invalid_argument if c is not pointed.
std::vector<IntVector> hilbert_basis(const RationalCone& c);

struct NefData {
  IntMatrix lift;                      // #rays x rank(Cl), deg * lift = 1
  std::vector<IntVector> inequalities; // covectors on Cl
  RationalCone cone;                   // Nef as a cone in Cl coordinates

  bool is_nef_class(const IntVector& cls) const { return cone.contains(cls); }
};

/// Requires a smooth projective fan with free Cl; throws otherwise.
NefData nef_cone(const Fan& f, const DivisorTheory& div);

/// Support-function convexity test for a T-divisor on a smooth fan.
bool is_nef(const Fan& f, const IntVector& divisor);

/// Lattice points of {m : <m, u_rho> >= -a_rho}.  Throws std::domain_error
/// when the polytope is unbounded.
Int h0(const Fan& f, const IntVector& divisor);

}  // namespace tdesc
