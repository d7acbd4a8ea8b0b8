#include "tdesc/autgroup.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace tdesc {

FiniteGroup with_greedy_generators(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a][b] = g.mul(static_cast<int>(a), static_cast<int>(b));
  return FiniteGroup(std::move(table), whole_group(g).generators);
}

namespace {

std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[static_cast<std::size_t>(b[i])];
  return out;
}

template <class Key>
std::shared_ptr<const FiniteGroup> group_from_sorted(const std::vector<Key>& elems,
                                                     const std::map<std::vector<int>, int>& index,
                                                     const std::vector<std::vector<int>>& perms) {
  const std::size_t n = elems.size();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto it = index.find(compose(perms[a], perms[b]));
      if (it == index.end()) throw std::logic_error("symmetry set not closed under composition");
      table[a][b] = it->second;
    }
  FiniteGroup g(std::move(table), {});
  return std::make_shared<const FiniteGroup>(with_greedy_generators(g));
}

std::vector<int> identity_perm(std::size_t n) {
  std::vector<int> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<int>(i);
  return p;
}

}  // namespace

ToricWeylGroup fan_automorphisms(const Fan& f) {
  const std::size_t n = f.rank, r = f.num_rays();
  if (rank(f.ray_matrix()) != n) throw std::invalid_argument("fan_automorphisms: rays do not span N_R");
  std::map<IntVector, int> ray_index;
  for (std::size_t i = 0; i < r; ++i) ray_index[f.rays[i]] = static_cast<int>(i);
  std::set<RaySet> cones(f.max_cones.begin(), f.max_cones.end());

  // n independent rays from the first maximal cone that has them; if no
  // maximal cone is full-dimensional, any n independent rays.
  std::vector<int> basis;
  std::size_t source_cone = f.max_cones.size();
  for (std::size_t c = 0; c < f.max_cones.size() && basis.empty(); ++c) {
    std::vector<int> pick;
    for (int rho : f.max_cones[c]) {
      pick.push_back(rho);
      if (rank(f.cone_matrix(pick)) != pick.size()) pick.pop_back();
    }
    if (pick.size() == n) {
      basis = pick;
      source_cone = c;
    }
  }
  if (basis.empty()) throw std::invalid_argument("fan_automorphisms: no full-dimensional maximal cone");
  IntMatrix b = IntMatrix::from_columns(
      [&] {
        std::vector<IntVector> cols;
        for (int rho : basis) cols.push_back(f.rays[static_cast<std::size_t>(rho)]);
        return cols;
      }(),
      n);
  LinearSystem solver(b.transpose());
  const std::size_t source_size = f.max_cones[source_cone].size();

  std::set<FanSymmetry> found;
  for (const auto& target : f.max_cones) {
    if (target.size() != source_size) continue;
    // ordered n-tuples of distinct rays of the target cone
    std::vector<int> tuple(n);
    std::vector<bool> used(target.size(), false);
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
      if (k == n) {
        std::vector<IntVector> cols;
        for (int rho : tuple) cols.push_back(f.rays[static_cast<std::size_t>(rho)]);
        IntMatrix t = IntMatrix::from_columns(cols, n);
        auto gt = solver.solve(t.transpose());
        if (!gt) return;
        IntMatrix g = gt->transpose();
        if (!(g * b == t) || !is_unimodular(g)) return;
        std::vector<int> perm(r);
        for (std::size_t i = 0; i < r; ++i) {
          auto it = ray_index.find(g * f.rays[i]);
          if (it == ray_index.end()) return;
          perm[i] = it->second;
        }
        for (const auto& c : f.max_cones) {
          RaySet img;
          for (int rho : c) img.push_back(perm[static_cast<std::size_t>(rho)]);
          std::sort(img.begin(), img.end());
          if (!cones.count(img)) return;
        }
        found.insert(FanSymmetry{g, perm});
        return;
      }
      for (std::size_t i = 0; i < target.size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        tuple[k] = target[i];
        rec(k + 1);
        used[i] = false;
      }
    };
    rec(0);
  }

  ToricWeylGroup w;
  const auto id = identity_perm(r);
  w.elements.push_back(FanSymmetry{IntMatrix::identity(n), id});
  for (const auto& s : found)
    if (s.perm != id) w.elements.push_back(s);
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> perms;
  for (std::size_t i = 0; i < w.elements.size(); ++i) {
    index[w.elements[i].perm] = static_cast<int>(i);
    perms.push_back(w.elements[i].perm);
  }
  w.group = group_from_sorted(w.elements, index, perms);
  return w;
}

WeightDecomposition weight_decomposition(const DivisorTheory& div) {
  WeightDecomposition wd;
  for (std::size_t rho = 0; rho < div.num_rays(); ++rho) {
    IntVector cls = div.ray_class(rho);
    auto it = std::find(wd.classes.begin(), wd.classes.end(), cls);
    int idx;
    if (it == wd.classes.end()) {
      idx = static_cast<int>(wd.classes.size());
      wd.classes.push_back(cls);
      wd.multiplicity.push_back(0);
      wd.rays_of.emplace_back();
    } else {
      idx = static_cast<int>(it - wd.classes.begin());
    }
    wd.ray_class.push_back(idx);
    ++wd.multiplicity[static_cast<std::size_t>(idx)];
    wd.rays_of[static_cast<std::size_t>(idx)].push_back(static_cast<int>(rho));
  }
  return wd;
}

std::vector<std::size_t> cox_algebra_shape(const WeightDecomposition& wd) { return wd.multiplicity; }

IntMatrix ray_permutation_matrix(const std::vector<int>& perm) { return IntMatrix::permutation(perm); }

IntMatrix class_lift(const DivisorTheory& div) {
  const auto& factors = div.cl_group.invariant_factors();
  const std::size_t k = factors.size(), r = div.num_rays();
  // [deg | diag(torsion factors)] x = e_i
  IntMatrix sys = div.deg;
  IntMatrix tors(k, k);
  for (std::size_t i = 0; i < k; ++i) tors(i, i) = factors[i];
  sys = sys.hstack(tors);
  LinearSystem solver(sys);
  IntMatrix lift(r, k);
  for (std::size_t i = 0; i < k; ++i) {
    auto x = solver.solve(unit_vector(k, i));
    if (!x) throw std::logic_error("class_lift: degree map not surjective");
    for (std::size_t rho = 0; rho < r; ++rho) lift(rho, i) = (*x)[rho];
  }
  return lift;
}

IntMatrix induced_cl_matrix(const DivisorTheory& div, const std::vector<int>& perm) {
  IntMatrix lift = class_lift(div);
  IntMatrix p = ray_permutation_matrix(perm);
  const std::size_t k = lift.cols();
  IntMatrix c(k, k);
  for (std::size_t i = 0; i < k; ++i) c.set_col(i, div.classify(p * lift.col(i)));
  return c;
}

ClassAutGroup class_aut_group(const ToricWeylGroup& w, const DivisorTheory& div, const WeightDecomposition& wd) {
  const std::size_t nl = wd.classes.size();
  auto lambda_of = [&](const FanSymmetry& s) {
    std::vector<int> p(nl, -1);
    for (std::size_t rho = 0; rho < s.perm.size(); ++rho) {
      int from = wd.ray_class[rho];
      int to = wd.ray_class[static_cast<std::size_t>(s.perm[rho])];
      int& slot = p[static_cast<std::size_t>(from)];
      if (slot >= 0 && slot != to) throw std::logic_error("fan symmetry does not respect the class map");
      slot = to;
    }
    return p;
  };
  std::set<std::vector<int>> distinct;
  for (const auto& s : w.elements) distinct.insert(lambda_of(s));
  ClassAutGroup j;
  const auto id = identity_perm(nl);
  j.lambda_perm.push_back(id);
  for (const auto& p : distinct)
    if (p != id) j.lambda_perm.push_back(p);
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < j.lambda_perm.size(); ++i) index[j.lambda_perm[i]] = static_cast<int>(i);
  j.group = group_from_sorted(j.lambda_perm, index, j.lambda_perm);

  for (const auto& s : w.elements) j.quotient.push_back(index.at(lambda_of(s)));
  for (std::size_t x = 0; x < w.order(); ++x)
    if (j.quotient[x] == 0) j.kernel.push_back(static_cast<int>(x));

  // Cl matrices, one per J element via any preimage.
  j.cl_action.assign(j.order(), IntMatrix());
  for (std::size_t x = 0; x < w.order(); ++x) {
    auto& slot = j.cl_action[static_cast<std::size_t>(j.quotient[x])];
    if (slot.rows() == 0 && slot.cols() == 0) slot = induced_cl_matrix(div, w.elements[x].perm);
  }

  // Section: the preimage whose ray permutation is increasing on every class.
  j.section.assign(j.order(), -1);
  for (std::size_t x = 0; x < w.order(); ++x) {
    const auto& perm = w.elements[x].perm;
    bool monotone = true;
    for (const auto& rays : wd.rays_of)
      for (std::size_t k = 1; k < rays.size(); ++k)
        if (perm[static_cast<std::size_t>(rays[k])] < perm[static_cast<std::size_t>(rays[k - 1])]) monotone = false;
    if (!monotone) continue;
    int& slot = j.section[static_cast<std::size_t>(j.quotient[x])];
    if (slot >= 0) throw std::logic_error("class_aut_group: two order-preserving preimages");
    slot = static_cast<int>(x);
  }
  for (int s : j.section)
    if (s < 0) throw std::logic_error("class_aut_group: no order-preserving preimage (W0 is not the full product)");
  if (!is_homomorphism(*j.group, *w.group, j.section))
    throw std::logic_error("class_aut_group: section is not a homomorphism");
  return j;
}

}  // namespace tdesc
