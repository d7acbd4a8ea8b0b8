#include "tdesc/descent.hpp"

#include "tdesc/json_io.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace tdesc {

GaloisModel real_model() {
  GaloisModel m;
  m.kind = GaloisModel::Kind::Real;
  m.name = "real";
  m.gamma = std::make_shared<const FiniteGroup>(cyclic_group(2));
  return m;
}

GaloisModel finite_model(std::size_t n) {
  if (n == 0) throw std::invalid_argument("finite model: order must be positive");
  GaloisModel m;
  m.kind = GaloisModel::Kind::Finite;
  m.name = "finite:" + std::to_string(n);
  m.gamma = std::make_shared<const FiniteGroup>(cyclic_group(n));
  return m;
}

GaloisModel abstract_model_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("group") || !j.contains("brauer"))
    throw ParseError("model: expected {\"group\", \"brauer\"}");
  const auto& g = j.at("group");
  std::vector<std::vector<int>> table;
  for (const auto& row : g.at("table")) table.push_back(row.get<std::vector<int>>());
  std::vector<int> gens = g.contains("generators") ? g.at("generators").get<std::vector<int>>() : std::vector<int>{};
  GaloisModel m;
  m.kind = GaloisModel::Kind::Abstract;
  m.name = j.value("name", std::string("abstract"));
  try {
    m.gamma = std::make_shared<const FiniteGroup>(FiniteGroup(std::move(table), std::move(gens)));
  } catch (const std::exception& e) {
    throw ParseError(std::string("model: invalid group table: ") + e.what());
  }
  const auto subs = subgroups(*m.gamma);
  std::optional<FGAbelianGroup> fallback;
  std::map<std::size_t, FGAbelianGroup> given;
  for (const auto& [key, val] : j.at("brauer").items()) {
    std::vector<Int> factors;
    for (const auto& f : val) factors.push_back(int_from_json(f));
    FGAbelianGroup grp(factors);
    if (!grp.is_finite()) throw ParseError("model: Brauer groups must be finite");
    if (key == "*") {
      fallback = grp;
      continue;
    }
    std::size_t idx;
    try {
      idx = std::stoul(key);
    } catch (const std::exception&) {
      throw ParseError("model: Brauer key '" + key + "' is not a subgroup index");
    }
    if (idx >= subs.size()) throw ParseError("model: subgroup index " + key + " out of range");
    given[idx] = grp;
  }
  for (std::size_t i = 0; i < subs.size(); ++i) {
    auto it = given.find(i);
    if (it != given.end()) {
      m.brauer.push_back(it->second);
    } else if (fallback) {
      m.brauer.push_back(*fallback);
    } else {
      throw ParseError("model: no Brauer group for subgroup " + std::to_string(i));
    }
  }
  return m;
}

GaloisModel parse_model(const std::string& text) {
  if (text == "real") return real_model();
  if (text == "finite") return finite_model(2);
  if (text.rfind("finite:", 0) == 0) {
    std::size_t n;
    try {
      n = std::stoul(text.substr(7));
    } catch (const std::exception&) {
      throw ParseError("model: bad finite order in '" + text + "'");
    }
    if (n == 0 || n > FiniteGroup::kMaxOrder) throw ParseError("model: finite order out of range");
    return finite_model(n);
  }
  return abstract_model_from_json(read_json_file(text));
}

std::vector<GroupHom> cocycle_classes(const GaloisModel& model, const FiniteGroup& target) {
  return hom_classes(*model.gamma, target);
}

OrbitShape gamma_orbits(const GaloisModel& model, const GroupHom& c, const std::vector<std::vector<int>>& perms) {
  const auto& gamma = *model.gamma;
  const std::size_t n = perms.empty() ? 0 : perms[0].size();
  OrbitShape out;
  std::vector<bool> seen(n, false);
  for (std::size_t p = 0; p < n; ++p) {
    if (seen[p]) continue;
    std::set<int> orbit;
    std::vector<int> stab;
    for (std::size_t x = 0; x < gamma.order(); ++x) {
      int img = perms[static_cast<std::size_t>(c[x])][p];
      orbit.insert(img);
      if (img == static_cast<int>(p)) stab.push_back(static_cast<int>(x));
    }
    for (int q : orbit) seen[static_cast<std::size_t>(q)] = true;
    out.orbits.emplace_back(orbit.begin(), orbit.end());
    out.stabilizers.push_back(subgroup_closure(gamma, stab));
  }
  return out;
}

OrbitShape twisted_center(const GaloisModel& model, const ToricData& t, const GroupHom& c) {
  return gamma_orbits(model, c, t.j.lambda_perm);
}

std::vector<TorusFactor> canonical_torus_shape(const GaloisModel& model, const ToricData& t, const GroupHom& c) {
  std::vector<TorusFactor> out;
  for (const auto& orbit : twisted_center(model, t, c).orbits)
    out.push_back({orbit, t.wd.multiplicity[static_cast<std::size_t>(orbit[0])]});
  return out;
}

namespace {

const GLattice& require_pic(const ToricData& t) {
  if (!t.pic) throw std::invalid_argument("the class group has torsion; descent needs Cl free");
  return *t.pic;
}

// Index of the component whose representative is J-conjugate to j_hom,
// with the least conjugating element z (z . j_hom . z^-1 = rep).
std::pair<int, int> locate_component(const FiniteGroup& jg, const std::vector<GroupHom>& reps, const GroupHom& j_hom) {
  for (std::size_t z = 0; z < jg.order(); ++z) {
    GroupHom conj = conjugate_hom(jg, static_cast<int>(z), j_hom);
    for (std::size_t k = 0; k < reps.size(); ++k)
      if (reps[k] == conj) return {static_cast<int>(k), static_cast<int>(z)};
  }
  throw std::logic_error("homomorphism into J matches no class representative");
}

GroupHom compose_hom(const GroupHom& outer, const GroupHom& inner) {
  GroupHom out;
  for (int x : inner) out.push_back(outer[static_cast<std::size_t>(x)]);
  return out;
}

std::vector<int> image_elements(const GroupHom& c) {
  std::set<int> s(c.begin(), c.end());
  return {s.begin(), s.end()};
}

// A J-stable Z-basis of Pic permuted by J, if one exists among the J-orbits
// of ray classes and globally generated omega classes.
struct PermutationBasis {
  std::vector<IntVector> classes;
  std::vector<std::vector<int>> perms;  // per J element
};

std::optional<PermutationBasis> find_permutation_basis(const ToricData& t) {
  const GLattice& pic = require_pic(t);
  const std::size_t k = pic.rank;
  std::set<IntVector> candidates(t.wd.classes.begin(), t.wd.classes.end());
  for (std::size_t i = 0; i < k; ++i) candidates.insert(unit_vector(k, i));
  if (t.smooth_projective())
    for (const auto& c : canonical_omega(t).classes) candidates.insert(c);
  std::vector<std::vector<IntVector>> orbits;
  std::set<IntVector> used;
  for (const auto& c : candidates) {
    if (used.count(c)) continue;
    std::set<IntVector> orb;
    for (std::size_t g = 0; g < pic.action.size(); ++g) orb.insert(pic.act(static_cast<int>(g)) * c);
    for (const auto& x : orb) used.insert(x);
    if (orb.size() <= k) orbits.emplace_back(orb.begin(), orb.end());
  }
  std::optional<PermutationBasis> found;
  std::vector<IntVector> chosen;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (found) return;
    if (chosen.size() == k) {
      if (is_unimodular(IntMatrix::from_columns(chosen, k))) {
        PermutationBasis b{chosen, {}};
        std::map<IntVector, int> index;
        for (std::size_t i = 0; i < chosen.size(); ++i) index[chosen[i]] = static_cast<int>(i);
        for (std::size_t g = 0; g < pic.action.size(); ++g) {
          std::vector<int> p;
          for (const auto& c : chosen) p.push_back(index.at(pic.act(static_cast<int>(g)) * c));
          b.perms.push_back(p);
        }
        found = b;
      }
      return;
    }
    for (std::size_t o = from; o < orbits.size(); ++o) {
      if (chosen.size() + orbits[o].size() > k) continue;
      chosen.insert(chosen.end(), orbits[o].begin(), orbits[o].end());
      self(self, o + 1);
      chosen.resize(chosen.size() - orbits[o].size());
      if (found) return;
    }
  };
  rec(rec, 0);
  return found;
}

// Enumerate a finite group, split into orbits under a set of automorphisms,
// keep the least element of each orbit.
template <class Act>
void orbit_decomposition(const FGAbelianGroup& grp, const std::vector<int>& acting, Act act, H2Component& comp) {
  if (!grp.is_finite()) throw std::domain_error("component group is infinite");
  std::set<IntVector> remaining;
  for (auto& e : grp.elements()) remaining.insert(e);
  while (!remaining.empty()) {
    IntVector e = *remaining.begin();
    std::set<IntVector> orbit;
    for (int z : acting) orbit.insert(act(z, e));
    for (const auto& x : orbit) remaining.erase(x);
    comp.orbit_reps.push_back(*orbit.begin());
    comp.orbit_sizes.push_back(orbit.size());
  }
}

}  // namespace

Subquotient real_component_group(const ToricData& t, const GroupHom& c) {
  static const auto gamma = std::make_shared<const FiniteGroup>(cyclic_group(2));
  GLattice l = compose_action(gamma, c, dual(require_pic(t)));
  return tate_zero(l, whole_group(*gamma));
}

IntVector canonical_element(const ToricData& t, const GroupHom& c, const Subquotient& grp, const IntVector& element) {
  GLattice d = dual(require_pic(t));
  IntVector rep = grp.representative(element);
  IntVector best = grp.classify(rep);
  for (int z : centralizer(*t.j.group, image_elements(c))) best = std::min(best, grp.classify(d.act(z) * rep));
  return best;
}

H2Set h2_set(const GaloisModel& model, const ToricData& t) {
  H2Set h2;
  const auto& jg = *t.j.group;
  std::optional<PermutationBasis> basis;
  if (model.kind == GaloisModel::Kind::Abstract) {
    basis = find_permutation_basis(t);
    if (!basis) throw std::invalid_argument("Pic is not a permutation lattice: represent via fingerprint_in_P");
  }
  if (model.kind == GaloisModel::Kind::Real && model.gamma->order() != 2)
    throw std::invalid_argument("real model requires a group of order 2");
  const auto all_subs = model.kind == GaloisModel::Kind::Abstract ? subgroups(*model.gamma) : std::vector<Subgroup>{};
  for (const auto& c : cocycle_classes(model, jg)) {
    H2Component comp;
    comp.c = c;
    comp.centralizer = centralizer(jg, image_elements(c));
    switch (model.kind) {
      case GaloisModel::Kind::Finite:
        comp.orbit_reps.push_back({});
        comp.orbit_sizes.push_back(1);
        break;
      case GaloisModel::Kind::Real: {
        Subquotient grp = real_component_group(t, c);
        comp.group = grp.group();
        comp.moduli = comp.group.invariant_factors();
        GLattice d = dual(require_pic(t));
        orbit_decomposition(comp.group, comp.centralizer,
                            [&](int z, const IntVector& e) { return grp.classify(d.act(z) * grp.representative(e)); },
                            comp);
        break;
      }
      case GaloisModel::Kind::Abstract: {
        OrbitShape shape = gamma_orbits(model, c, basis->perms);
        std::vector<Int> factors;
        std::vector<std::size_t> offset;
        std::vector<FGAbelianGroup> blocks;
        for (const auto& stab : shape.stabilizers) {
          auto it = std::find_if(all_subs.begin(), all_subs.end(), [&](const Subgroup& s) { return s.mask == stab.mask; });
          const FGAbelianGroup& br = model.brauer[static_cast<std::size_t>(it - all_subs.begin())];
          offset.push_back(factors.size());
          blocks.push_back(br);
          for (const auto& f : br.invariant_factors()) factors.push_back(f);
        }
        // Elements are kept in block coordinates, one block per orbit.
        comp.group = FGAbelianGroup(factors);
        comp.moduli = factors;
        auto orbit_of = [&](int point) {
          for (std::size_t o = 0; o < shape.orbits.size(); ++o)
            if (std::binary_search(shape.orbits[o].begin(), shape.orbits[o].end(), point)) return o;
          throw std::logic_error("point outside every orbit");
        };
        auto act = [&](int z, const IntVector& e) {
          IntVector out(e.size());
          for (std::size_t o = 0; o < shape.orbits.size(); ++o) {
            std::size_t to = orbit_of(basis->perms[static_cast<std::size_t>(z)][static_cast<std::size_t>(shape.orbits[o][0])]);
            if (!(blocks[o] == blocks[to]))
              throw std::invalid_argument("model: Brauer groups of conjugate stabilizers differ");
            for (std::size_t i = 0; i < blocks[o].num_generators(); ++i) out[offset[to] + i] = e[offset[o] + i];
          }
          return out;
        };
        std::vector<IntVector> elems{IntVector{}};
        for (const auto& b : blocks) {
          std::vector<IntVector> next;
          for (const auto& prefix : elems)
            for (const auto& e : b.elements()) {
              IntVector v = prefix;
              v.insert(v.end(), e.begin(), e.end());
              next.push_back(v);
            }
          elems = std::move(next);
        }
        std::set<IntVector> remaining(elems.begin(), elems.end());
        while (!remaining.empty()) {
          IntVector e = *remaining.begin();
          std::set<IntVector> orbit;
          for (int z : comp.centralizer) orbit.insert(act(z, e));
          for (const auto& x : orbit) remaining.erase(x);
          comp.orbit_reps.push_back(*orbit.begin());
          comp.orbit_sizes.push_back(orbit.size());
        }
        break;
      }
    }
    h2.components.push_back(std::move(comp));
  }
  return h2;
}

Int period(const H2Set& h2, const Fingerprint& fp) {
  const auto& comp = h2.components.at(static_cast<std::size_t>(fp.component));
  Int order = 1;
  for (std::size_t i = 0; i < fp.element.size(); ++i) {
    const Int& m = comp.moduli.at(i);
    if (m == 0) throw std::domain_error("period: component group is infinite");
    Int g;
    mpz_gcd(g.get_mpz_t(), fp.element[i].get_mpz_t(), m.get_mpz_t());
    Int o = m / g;
    mpz_lcm(order.get_mpz_t(), order.get_mpz_t(), o.get_mpz_t());
  }
  return order;
}

std::string real_torus_label(const GLattice& cochar) {
  Subgroup whole = whole_group(*cochar.group);
  std::size_t a = tate_zero(cochar, whole).group().num_generators();
  std::size_t b = tate_minus_one(cochar, whole).group().num_generators();
  std::size_t c = (cochar.rank - a - b) / 2;
  std::vector<std::string> parts;
  auto factor = [&](std::size_t n, const std::string& name) {
    if (n == 0) return;
    std::string base = name.find('^') != std::string::npos ? "(" + name + ")" : name;
    parts.push_back(n == 1 ? name : base + "^" + std::to_string(n));
  };
  factor(a, "G_m");
  factor(b, "S^1");
  factor(c, "R(G_m)");
  if (parts.empty()) return "trivial";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " x " + parts[i];
  return out;
}

namespace {

std::string finite_torus_label(const GLattice& cochar) {
  const auto& g = *cochar.group;
  const IntMatrix& frob = cochar.act(g.order() > 1 ? 1 : 0);
  IntMatrix p = frob;
  std::size_t order = 1;
  while (!p.is_identity()) {
    p = frob * p;
    ++order;
  }
  std::size_t fixed = fixed_sublattice(cochar, whole_group(g)).cols();
  if (order == 1) return "split";
  return "Frobenius of order " + std::to_string(order) + ", fixed rank " + std::to_string(fixed);
}

GLattice cocharacter_lattice(const ToricData& t) {
  std::vector<IntMatrix> mats;
  for (const auto& s : t.w.elements) mats.push_back(s.g);
  return GLattice{t.w.group, t.fan.rank, mats};
}

// W-classes of homomorphisms that factor through the section J -> W.
std::set<std::size_t> section_w_classes(const ToricData& t, const std::vector<GroupHom>& w_classes,
                                        const H2Set& h2) {
  std::set<std::size_t> out;
  const auto& wg = *t.w.group;
  for (const auto& comp : h2.components) {
    GroupHom lifted = compose_hom(t.j.section, comp.c);
    for (std::size_t z = 0; z < wg.order(); ++z) {
      auto it = std::find(w_classes.begin(), w_classes.end(), conjugate_hom(wg, static_cast<int>(z), lifted));
      if (it != w_classes.end()) {
        out.insert(static_cast<std::size_t>(it - w_classes.begin()));
        break;
      }
    }
  }
  return out;
}

void group_varieties(FormsReport& r) {
  std::map<Fingerprint, std::vector<int>> by_fp;
  for (std::size_t i = 0; i < r.nclasses.size(); ++i) by_fp[r.nclasses[i].fingerprint].push_back(static_cast<int>(i));
  for (auto& [fp, members] : by_fp) {
    int id = static_cast<int>(r.varieties.size());
    for (int m : members) r.nclasses[static_cast<std::size_t>(m)].variety = id;
    r.varieties.push_back({fp, members});
  }
}

}  // namespace

FormsReport classify_forms_real(const ToricData& t) {
  if (!t.smooth_projective()) throw std::invalid_argument("forms: the real model needs a smooth projective fan");
  GaloisModel model = real_model();
  const auto& gamma = model.gamma;
  FormsReport r;
  r.model = model.name;
  r.h2 = h2_set(model, t);
  std::vector<GroupHom> comp_reps;
  for (const auto& comp : r.h2.components) comp_reps.push_back(comp.c);

  const auto& wg = *t.w.group;
  r.w_classes = cocycle_classes(model, wg);
  const GLattice n_lattice = cocharacter_lattice(t);
  const GLattice cl_dual = dual(require_pic(t));
  const IntMatrix& rays = t.div.ray_matrix;  // #rays x n
  LinearSystem lift_solver(rays.transpose());
  LinearSystem deg_solver(t.div.deg.transpose());
  const Subgroup whole = whole_group(*gamma);
  const auto from_section = section_w_classes(t, r.w_classes, r.h2);

  std::vector<Subquotient> comp_groups;
  for (const auto& c : comp_reps) comp_groups.push_back(real_component_group(t, c));

  for (std::size_t wi = 0; wi < r.w_classes.size(); ++wi) {
    const GroupHom& c = r.w_classes[wi];
    const int w = c[1];
    GLattice tw = compose_action(gamma, c, n_lattice);
    Subquotient h1 = tate_minus_one(tw, whole);
    const std::string torus = real_torus_label(tw);
    const GroupHom j_hom = compose_hom(t.j.quotient, c);
    auto [comp, z] = locate_component(*t.j.group, comp_reps, j_hom);
    const Subquotient& target = comp_groups[static_cast<std::size_t>(comp)];
    const IntMatrix perm = ray_permutation_matrix(t.w.elements[static_cast<std::size_t>(w)].perm);
    const auto zw = centralizer(wg, {w});

    std::set<IntVector> remaining;
    for (auto& e : h1.group().elements()) remaining.insert(e);
    while (!remaining.empty()) {
      IntVector e = *remaining.begin();
      IntVector rep = h1.representative(e);
      std::set<IntVector> orbit;
      for (int y : zw) orbit.insert(h1.classify(n_lattice.act(y) * rep));
      for (const auto& x : orbit) remaining.erase(x);
      const IntVector canon = *orbit.begin();

      // Snake map: lift to Z^rays, apply the norm, read off Cl^dual coordinates.
      IntVector x = h1.representative(canon);
      auto lifted = lift_solver.solve(x);
      if (!lifted) throw std::logic_error("forms: cocharacter does not lift to Z^rays");
      IntVector y = *lifted + perm * *lifted;
      auto phi = deg_solver.solve(y);
      if (!phi) throw std::logic_error("forms: norm of the lift is not in Cl^dual");
      IntVector moved = cl_dual.act(z) * *phi;

      NClass nc;
      nc.w_class = static_cast<int>(wi);
      nc.component = comp;
      nc.h1_element = canon;
      nc.torus = torus;
      nc.fingerprint.component = comp;
      nc.fingerprint.element = canonical_element(t, comp_reps[static_cast<std::size_t>(comp)], target,
                                                 target.classify(moved));
      nc.fingerprint.neutral = is_zero(nc.fingerprint.element);
      nc.fingerprint.period = period(r.h2, nc.fingerprint);
      nc.from_j = is_zero(canon) && from_section.count(wi) > 0;
      r.nclasses.push_back(std::move(nc));
    }
  }
  group_varieties(r);
  return r;
}

FormsReport classify_forms_finite(const ToricData& t, const GaloisModel& model) {
  if (model.kind != GaloisModel::Kind::Finite) throw std::invalid_argument("classify_forms_finite: not a finite model");
  FormsReport r;
  r.model = model.name;
  r.h2 = h2_set(model, t);
  std::vector<GroupHom> comp_reps;
  for (const auto& comp : r.h2.components) comp_reps.push_back(comp.c);
  r.w_classes = cocycle_classes(model, *t.w.group);
  const GLattice n_lattice = cocharacter_lattice(t);
  const auto from_section = section_w_classes(t, r.w_classes, r.h2);
  for (std::size_t wi = 0; wi < r.w_classes.size(); ++wi) {
    const GroupHom& c = r.w_classes[wi];
    int comp = locate_component(*t.j.group, comp_reps, compose_hom(t.j.quotient, c)).first;
    NClass nc;
    nc.w_class = static_cast<int>(wi);
    nc.component = comp;
    nc.torus = finite_torus_label(compose_action(model.gamma, c, n_lattice));
    nc.fingerprint.component = comp;
    nc.from_j = from_section.count(wi) > 0;
    r.nclasses.push_back(std::move(nc));
  }
  group_varieties(r);
  r.notes.push_back("torus cohomology vanishes over finite fields: one form per class in H^1(k, W)");
  return r;
}

FormsReport classify_forms(const ToricData& t, const GaloisModel& model) {
  switch (model.kind) {
    case GaloisModel::Kind::Real:
      return classify_forms_real(t);
    case GaloisModel::Kind::Finite:
      return classify_forms_finite(t, model);
    case GaloisModel::Kind::Abstract: {
      FormsReport r;
      r.model = model.name;
      r.h2 = h2_set(model, t);
      r.notes.push_back("abstract model: only H^2(k, S -> J) is reported; torus classes are not computed");
      return r;
    }
  }
  throw std::logic_error("unknown model kind");
}

PFingerprint fingerprint_in_p(const ToricData& t, const H2Set& h2, const OmegaSet& omega, const Fingerprint& fp) {
  static const auto gamma = std::make_shared<const FiniteGroup>(cyclic_group(2));
  const auto& c = h2.components.at(static_cast<std::size_t>(fp.component)).c;
  Subquotient src = real_component_group(t, c);
  GLattice p_dual = dual(omega_lattice(t, omega));
  Subquotient dst = tate_zero(compose_action(gamma, c, p_dual), whole_group(*gamma));
  IntVector phi = src.representative(fp.element);
  IntVector values = omega_map(omega).transpose() * phi;
  PFingerprint out;
  out.component = fp.component;
  out.element = dst.classify(values);
  const auto& jp = omega.j_perm[static_cast<std::size_t>(c[1])];
  std::vector<bool> seen(omega.classes.size(), false);
  for (std::size_t i = 0; i < omega.classes.size(); ++i) {
    if (seen[i]) continue;
    std::size_t k = static_cast<std::size_t>(jp[i]);
    seen[i] = seen[k] = true;
    BrauerEntry e;
    if (k == i) {
      e.orbit = {static_cast<int>(i)};
      e.field = "R";
      e.value = values[i] % 2;
      if (e.value < 0) e.value += 2;
    } else {
      e.orbit = {static_cast<int>(std::min(i, k)), static_cast<int>(std::max(i, k))};
      e.field = "C";
      e.value = 0;
    }
    out.entries.push_back(e);
  }
  return out;
}

std::vector<IntVector> fingerprint_kernel(const ToricData& t, const H2Set& h2, const OmegaSet& omega, int component) {
  const auto& c = h2.components.at(static_cast<std::size_t>(component)).c;
  Subquotient src = real_component_group(t, c);
  std::vector<IntVector> kernel;
  for (const auto& e : src.group().elements()) {
    if (is_zero(e)) continue;
    Fingerprint fp;
    fp.component = component;
    fp.element = e;
    if (is_zero(fingerprint_in_p(t, h2, omega, fp).element)) kernel.push_back(e);
  }
  return kernel;
}

GlobalKernel global_cyclic_kernel(const GLattice& l) {
  Subquotient sq = sha1_cyclic(l);
  GlobalKernel out;
  out.group = sq.group();
  const auto gens = whole_group(*l.group).generators;
  const std::size_t r = l.rank, k = gens.size();
  const auto& factors = out.group.invariant_factors();
  for (std::size_t i = 0; i < factors.size(); ++i) {
    IntVector v = sq.representative(unit_vector(factors.size(), i));
    IntMatrix m(r, k);
    for (std::size_t g = 0; g < k; ++g)
      for (std::size_t a = 0; a < r; ++a) m(a, g) = v[g * r + a];
    out.witnesses.push_back(m);
  }
  return out;
}

}  // namespace tdesc
