#pragma once

// Twisted forms over small Galois models: neutralization classes, twisted
// centers, the set H^2(k, S -> J), and the classification of forms over the
// real numbers through H^1(R, T x| W).

#include "tdesc/omega.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace tdesc {

/// A finite quotient of the absolute Galois group together with the data
/// needed to evaluate Galois cohomology of tori.
struct GaloisModel {
  enum class Kind { Real, Finite, Abstract };
  Kind kind = Kind::Real;
  std::string name;
  std::shared_ptr<const FiniteGroup> gamma;
  /// Abstract only: Brauer group of the fixed field of each subgroup of
  /// gamma, indexed like subgroups(*gamma).
  std::vector<FGAbelianGroup> brauer;
};

GaloisModel real_model();
GaloisModel finite_model(std::size_t n);
/// {"group": {"table": [[...]], "generators": [...]}, "brauer": {"<subgroup index>" or "*": [factors]}}
GaloisModel abstract_model_from_json(const nlohmann::ordered_json& j);
/// "real", "finite:<n>" or a path to an abstract model file.
GaloisModel parse_model(const std::string& text);

/// Homomorphisms Gamma -> target up to conjugation in the target.
std::vector<GroupHom> cocycle_classes(const GaloisModel& model, const FiniteGroup& target);

/// Orbits of Gamma (acting through c : Gamma -> J) on a J-set given by one
/// permutation per J element.
struct OrbitShape {
  std::vector<std::vector<int>> orbits;  // ascending, ordered by least element
  std::vector<Subgroup> stabilizers;     // stabilizer in Gamma of each orbit's least point
};
OrbitShape gamma_orbits(const GaloisModel& model, const GroupHom& c, const std::vector<std::vector<int>>& perms);

/// Gamma-orbits on Lambda: one field factor of degree |orbit| each.
OrbitShape twisted_center(const GaloisModel& model, const ToricData& t, const GroupHom& c);

struct TorusFactor {
  std::vector<int> orbit;  // Lambda classes
  std::size_t multiplicity = 1;
};
/// E = prod over orbits F_orbit^{n_lambda}; the canonical torus is GL_1(E).
std::vector<TorusFactor> canonical_torus_shape(const GaloisModel& model, const ToricData& t, const GroupHom& c);

struct Fingerprint {
  int component = 0;
  IntVector element;  // coordinates in the component group
  bool neutral = true;
  Int period = 1;
  friend bool operator<(const Fingerprint& a, const Fingerprint& b) {
    return std::tie(a.component, a.element) < std::tie(b.component, b.element);
  }
  friend bool operator==(const Fingerprint& a, const Fingerprint& b) {
    return a.component == b.component && a.element == b.element;
  }
};

struct H2Component {
  GroupHom c;                        // Gamma -> J, canonical representative
  FGAbelianGroup group;              // before the quotient by the centralizer
  std::vector<Int> moduli;           // modulus of each element coordinate
  std::vector<IntVector> orbit_reps; // one canonical element per orbit, sorted; zero first
  std::vector<std::size_t> orbit_sizes;
  std::vector<int> centralizer;      // elements of J commuting with im(c)
  std::size_t size() const { return orbit_reps.size(); }
};

/// Component-indexed description of H^2(k, S -> J).
struct H2Set {
  std::vector<H2Component> components;
};
H2Set h2_set(const GaloisModel& model, const ToricData& t);

/// Order of the element in its component group.
Int period(const H2Set& h2, const Fingerprint& fp);

/// The real-model component group of c as a subquotient of Cl^dual.
Subquotient real_component_group(const ToricData& t, const GroupHom& c);
/// Canonical representative of the centralizer orbit of an element.
IntVector canonical_element(const ToricData& t, const GroupHom& c, const Subquotient& grp, const IntVector& element);

/// Image under the map induced by Z^omega -> Pic, in the real model.
struct BrauerEntry {
  std::vector<int> orbit;  // omega classes forming one Gamma-orbit
  std::string field;       // "R" or "C"
  Int value;               // 0 or 1 (= 1/2 in Br(R))
};
struct PFingerprint {
  int component = 0;
  IntVector element;               // in H^0-hat(C2, (Z^omega)^dual)
  std::vector<BrauerEntry> entries;
};
PFingerprint fingerprint_in_p(const ToricData& t, const H2Set& h2, const OmegaSet& omega, const Fingerprint& fp);

/// Kernel of the component map Cl^dual -> (Z^omega)^dual on H^0-hat for one
/// component, by enumeration; empty when injective.
std::vector<IntVector> fingerprint_kernel(const ToricData& t, const H2Set& h2, const OmegaSet& omega, int component);

/// One class of H^1(k, T x| W) (a form together with a torus).
struct NClass {
  int w_class = 0;       // index into the W-cocycle classes
  int component = 0;     // neutralization class
  IntVector h1_element;  // canonical representative in H^1(k, cT)
  std::string torus;
  Fingerprint fingerprint;
  int variety = 0;
  bool from_j = false;   // image of H^1(k, J) through the section
};

struct Variety {
  Fingerprint fingerprint;
  std::vector<int> nclasses;
};

struct FormsReport {
  std::string model;
  H2Set h2;
  std::vector<GroupHom> w_classes;
  std::vector<NClass> nclasses;
  std::vector<Variety> varieties;
  std::vector<std::string> notes;
};

FormsReport classify_forms_real(const ToricData& t);
FormsReport classify_forms_finite(const ToricData& t, const GaloisModel& model);
/// Dispatch on the model kind; the abstract model reports only H^2.
FormsReport classify_forms(const ToricData& t, const GaloisModel& model);

/// "G_m^a x (S^1)^b x R(G_m)^c" for a C2-lattice of cocharacters.
std::string real_torus_label(const GLattice& cochar);

/// Kernel of the fingerprint map for the torus with character lattice L
/// over a global field whose decomposition groups are the cyclic subgroups
/// of G: dual to ker(H^1(G, L) -> prod over cyclic C of H^1(C, L)).
struct GlobalKernel {
  FGAbelianGroup group;
  std::vector<IntMatrix> witnesses;  // nonzero cocycles, values on the generators of G (columns)
};
GlobalKernel global_cyclic_kernel(const GLattice& l);

}  // namespace tdesc
