#pragma once

// Exact integer linear algebra: Smith and Hermite normal forms, lattice
// kernels and images, finitely generated abelian groups, and linear
// Diophantine solving.

#include "tdesc/int_matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tdesc {

/// U * A * V = D with U, V unimodular and D diagonal, d1 | d2 | ... .
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix V;
  IntMatrix D;
  std::size_t rank = 0;

  IntVector diagonal() const;
};

/// Pivot rule: smallest nonzero absolute value, ties broken by (row, col).
SmithDecomposition snf(const IntMatrix& a);

/// Row-style Hermite normal form H = T * A.  Pivots are positive and the
/// entries above a pivot lie in [0, pivot).  Zero rows are kept at the bottom.
struct HermiteDecomposition {
  IntMatrix H;
  IntMatrix T;
  std::vector<std::size_t> pivot_cols;
};
HermiteDecomposition hnf(const IntMatrix& a);

/// Canonical basis (as columns) of the integer kernel {x : A x = 0}.
IntMatrix kernel_basis(const IntMatrix& a);
/// Canonical basis (as columns) of the lattice spanned by the columns of A.
IntMatrix image_basis(const IntMatrix& a);
/// Canonical column basis for a lattice given by generating columns.
IntMatrix canonical_basis(const IntMatrix& generators);

/// Finitely generated abelian group Z/d1 + ... + Z/dk + Z^r.  Torsion factors
/// are > 1 with d_i | d_{i+1}; free summands are encoded as trailing zeros.
class FGAbelianGroup {
 public:
  FGAbelianGroup() = default;
  /// Any list of nonnegative factors; normalised to the canonical form.
  explicit FGAbelianGroup(const std::vector<Int>& factors);

  static FGAbelianGroup free(std::size_t rank);
  static FGAbelianGroup trivial() { return FGAbelianGroup(); }

  const std::vector<Int>& invariant_factors() const { return factors_; }
  std::size_t num_generators() const { return factors_.size(); }
  std::size_t free_rank() const;
  std::size_t torsion_count() const { return factors_.size() - free_rank(); }
  bool is_trivial() const { return factors_.empty(); }
  bool is_finite() const { return free_rank() == 0; }
  bool is_free() const { return torsion_count() == 0; }
  /// Order when finite, 0 when infinite.
  Int order() const;

  /// Reduce coordinates modulo the torsion factors (into [0, d)).
  IntVector reduce(const IntVector& coords) const;
  IntVector zero() const { return IntVector(factors_.size()); }
  IntVector add(const IntVector& a, const IntVector& b) const;
  IntVector negate(const IntVector& a) const;
  /// Order of an element; 0 when it has infinite order.
  Int element_order(const IntVector& coords) const;
  /// All elements in lexicographic coordinate order; requires a finite group
  /// of order at most `limit`.
  std::vector<IntVector> elements(std::size_t limit = 1u << 16) const;

  std::string to_string() const;

  friend bool operator==(const FGAbelianGroup& a, const FGAbelianGroup& b) { return a.factors_ == b.factors_; }

 private:
  std::vector<Int> factors_;
};

FGAbelianGroup direct_sum(const FGAbelianGroup& a, const FGAbelianGroup& b);

/// Coordinates relative to a full-column-rank basis of a sublattice of Z^d.
class LatticeCoordinates {
 public:
  LatticeCoordinates() = default;
  explicit LatticeCoordinates(IntMatrix basis);

  const IntMatrix& basis() const { return basis_; }
  std::size_t ambient_dim() const { return basis_.rows(); }
  std::size_t rank() const { return basis_.cols(); }
  /// y with basis * y = v, or nullopt when v is not in the lattice.
  std::optional<IntVector> coordinates(const IntVector& v) const;
  bool contains(const IntVector& v) const { return coordinates(v).has_value(); }

 private:
  IntMatrix basis_;
  SmithDecomposition smith_;
};

/// The group K / B for lattices B <= K <= Z^d, with the projection from K.
class Subquotient {
 public:
  Subquotient() = default;
  /// `sub_basis`: d x k basis of K (full column rank).  `relations`: d x b
  /// generators of B, each of which must lie in K.
  Subquotient(const IntMatrix& sub_basis, const IntMatrix& relations);

  const FGAbelianGroup& group() const { return group_; }
  const LatticeCoordinates& sub() const { return sub_; }
  /// Class of an element of K given in ambient coordinates.
  IntVector classify(const IntVector& ambient) const;
  /// Class of an element of K given in K-coordinates.
  IntVector classify_coords(const IntVector& coords) const;
  /// An ambient representative of a class.
  IntVector representative(const IntVector& element) const;

 private:
  LatticeCoordinates sub_;
  FGAbelianGroup group_;
  IntMatrix projection_;  // rows of U kept for the group generators
  IntMatrix lift_;        // columns of U^{-1} for the kept generators
  std::vector<std::size_t> kept_;
};

/// Cokernel Z^m / colspan(A) with its projection.
Subquotient cokernel(const IntMatrix& a);

/// Precomputed solver for A x = b over Z.
class LinearSystem {
 public:
  explicit LinearSystem(const IntMatrix& a);
  std::optional<IntVector> solve(const IntVector& b) const;
  std::optional<IntMatrix> solve(const IntMatrix& b) const;
  /// Canonical column basis of the integer kernel.
  const IntMatrix& kernel() const { return kernel_; }
  std::size_t rank() const { return smith_.rank; }

 private:
  IntMatrix a_;
  SmithDecomposition smith_;
  IntMatrix kernel_;
};

struct LinearSolution {
  std::optional<IntVector> particular;
  IntMatrix kernel;  // columns
};

/// One integer solution of A x = b (if any) and a basis of the kernel.
LinearSolution solve_linear(const IntMatrix& a, const IntVector& b);

/// Whether the linear map Z^n -> Z^m given by A is onto.
bool is_surjective(const IntMatrix& a);

/// Equivariant right inverse s of pi : P -> M, i.e. pi * s = I and
/// P_g * s = s * M_g for every generator pair.  Throws std::invalid_argument
/// with "not a surjection" when pi is not onto.
std::optional<IntMatrix> solve_equivariant_section(const std::vector<IntMatrix>& p_generators,
                                                   const std::vector<IntMatrix>& m_generators,
                                                   const IntMatrix& pi);

}  // namespace tdesc
