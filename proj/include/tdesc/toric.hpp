#pragma once

// Everything computed from a fan before the descent stage.

#include "tdesc/autgroup.hpp"
#include "tdesc/glattice.hpp"
#include "tdesc/polyhedral.hpp"

#include <optional>

namespace tdesc {

struct ToricData {
  Fan fan;
  bool smooth = false;
  bool complete = false;
  bool projective = false;
  DivisorTheory div;
  WeightDecomposition wd;
  ToricWeylGroup w;
  ClassAutGroup j;
  std::optional<NefData> nef;    // smooth projective only
  std::optional<GLattice> pic;   // Cl free: Pic as a J-lattice

  bool smooth_projective() const { return smooth && complete && projective; }
};

/// Validate and run the fan-level computations.  Throws std::invalid_argument
/// with the list of violations for an invalid fan.
ToricData prepare(const Fan& f);

/// A T-divisor representing a class of Cl (free part through the lift).
IntVector divisor_of_class(const ToricData& t, const IntVector& cls);

/// Cl as a lattice with the action of W through W -> J.
GLattice pic_lattice(const ClassAutGroup& j);

}  // namespace tdesc
