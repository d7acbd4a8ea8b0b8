#include "tdesc/omega.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace tdesc {

namespace {

void require_smooth_projective(const ToricData& t) {
  if (!t.smooth_projective() || !t.pic || !t.nef)
    throw std::invalid_argument("omega computations need a smooth projective fan");
}

}  // namespace

OmegaSet make_omega(const ToricData& t, std::vector<IntVector> classes) {
  require_smooth_projective(t);
  const std::size_t k = t.pic->rank;
  for (const auto& c : classes)
    if (c.size() != k) throw std::invalid_argument("omega class has the wrong length");
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  OmegaSet o;
  o.classes = std::move(classes);
  for (const auto& c : o.classes) o.h0.push_back(h0(t.fan, divisor_of_class(t, c)));
  for (std::size_t x = 0; x < t.j.order(); ++x) {
    std::vector<int> p;
    for (const auto& c : o.classes) {
      IntVector img = t.pic->act(static_cast<int>(x)) * c;
      auto it = std::lower_bound(o.classes.begin(), o.classes.end(), img);
      p.push_back(it != o.classes.end() && *it == img ? static_cast<int>(it - o.classes.begin()) : -1);
    }
    o.j_perm.push_back(std::move(p));
  }
  return o;
}

OmegaSet canonical_omega(const ToricData& t) {
  require_smooth_projective(t);
  std::set<IntVector> all;
  for (const auto& g : subgroups(*t.j.group)) {
    IntMatrix b = fixed_sublattice(*t.pic, g);
    std::vector<IntVector> local_ineqs;
    for (const auto& a : t.nef->inequalities) {
      IntVector pulled = b.transpose() * a;
      if (!is_zero(pulled)) local_ineqs.push_back(pulled);
    }
    RationalCone cone = cone_from_inequalities(b.cols(), local_ineqs);
    for (const auto& h : hilbert_basis(cone)) all.insert(b * h);
  }
  return make_omega(t, {all.begin(), all.end()});
}

IntMatrix omega_map(const OmegaSet& omega) {
  std::size_t k = omega.classes.empty() ? 0 : omega.classes[0].size();
  return IntMatrix::from_columns(omega.classes, k);
}

GLattice omega_lattice(const ToricData& t, const OmegaSet& omega) {
  for (const auto& p : omega.j_perm)
    if (std::find(p.begin(), p.end(), -1) != p.end())
      throw std::invalid_argument("omega is not J-stable");
  return GLattice::permutation(t.j.group, omega.j_perm);
}

bool OmegaValidation::all_fixed_surjective() const {
  return std::all_of(fixed_surjective.begin(), fixed_surjective.end(), [](bool b) { return b; });
}

OmegaValidation validate_omega(const ToricData& t, const OmegaSet& omega) {
  require_smooth_projective(t);
  OmegaValidation v;
  v.j_stable = true;
  for (const auto& p : omega.j_perm)
    if (std::find(p.begin(), p.end(), -1) != p.end()) v.j_stable = false;
  v.globally_generated = true;
  for (const auto& c : omega.classes)
    if (!t.nef->is_nef_class(c)) v.globally_generated = false;
  IntMatrix map = omega_map(omega);
  v.generates_pic = !omega.classes.empty() && is_surjective(map);
  if (v.j_stable) {
    v.faithful = true;
    for (std::size_t x = 1; x < t.j.order(); ++x) {
      const auto& p = omega.j_perm[x];
      bool trivial = true;
      for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != static_cast<int>(i)) trivial = false;
      if (trivial) v.faithful = false;
    }
    if (!v.faithful) v.warnings.push_back("J does not act faithfully on omega");
    GLattice z = omega_lattice(t, omega);
    IntMatrix kb = kernel_basis(map);
    v.kernel = restrict_to(z, kb);
    v.kernel_coflasque = is_coflasque(*v.kernel).holds;
    for (const auto& h : subgroups(*t.j.group)) {
      IntMatrix img = map * fixed_sublattice(z, h);
      IntMatrix target = fixed_sublattice(*t.pic, h);
      bool ok = true;
      if (target.cols() > 0) {
        IntMatrix basis = canonical_basis(img);
        if (basis.cols() == 0) {
          ok = false;
        } else {
          LatticeCoordinates lc(basis);
          for (std::size_t j = 0; j < target.cols() && ok; ++j) ok = lc.contains(target.col(j));
        }
      }
      v.fixed_surjective.push_back(ok);
    }
  } else {
    v.warnings.push_back("omega is not J-stable; kernel checks skipped");
  }
  return v;
}

std::vector<std::vector<int>> omega_orbits(const OmegaSet& omega) {
  const std::size_t n = omega.classes.size();
  std::vector<int> seen(n, 0);
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::set<int> orbit;
    for (const auto& p : omega.j_perm)
      if (p[i] >= 0) orbit.insert(p[i]);
    for (int o : orbit) seen[static_cast<std::size_t>(o)] = 1;
    out.emplace_back(orbit.begin(), orbit.end());
  }
  return out;
}

TargetShape target_shape(const OmegaSet& omega) {
  TargetShape y;
  for (const auto& h : omega.h0) y.dims.push_back(h - 1);
  y.orbits = omega_orbits(omega);
  return y;
}

SeparableAlgebraShape algebra_shape(const OmegaSet& omega) {
  SeparableAlgebraShape b;
  for (const auto& orbit : omega_orbits(omega))
    b.factors.push_back({omega.h0[static_cast<std::size_t>(orbit[0])], orbit.size(), orbit});
  return b;
}

std::string describe_target(const TargetShape& y) {
  std::vector<Int> dims = y.dims;
  std::sort(dims.begin(), dims.end(), [](const Int& a, const Int& b) { return a > b; });
  std::string out;
  for (std::size_t i = 0; i < dims.size();) {
    std::size_t j = i;
    while (j < dims.size() && dims[j] == dims[i]) ++j;
    if (!out.empty()) out += " x ";
    std::string p = "P^" + dims[i].get_str();
    out += (j - i == 1) ? p : "(" + p + ")^" + std::to_string(j - i);
    i = j;
  }
  return out.empty() ? "point" : out;
}

std::string describe_algebra(const SeparableAlgebraShape& b) {
  std::string out;
  for (const auto& f : b.factors) {
    if (!out.empty()) out += " x ";
    out += "M_" + f.degree.get_str() + " over " +
           (f.center_degree == 1 ? std::string("k") : "etale-" + std::to_string(f.center_degree));
  }
  return out;
}

InjectivityReport injectivity_verdict(const ToricData& t) {
  if (!t.smooth_projective() || !t.pic) throw std::invalid_argument("injectivity_verdict needs a smooth projective fan");
  InjectivityReport r;
  r.verdict = is_invertible(*t.pic);
  if (r.verdict.proven())
    r.text = "Pic is an invertible J-lattice: the Brauer fingerprint distinguishes all forms.";
  else
    r.text = "Pic is not an invertible J-lattice: the fingerprint map is not injective, and some neutral form is "
             "not retract rational.";
  return r;
}

}  // namespace tdesc
