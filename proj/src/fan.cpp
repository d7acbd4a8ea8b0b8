#include "tdesc/fan.hpp"

#include "tdesc/lp.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace tdesc {

IntMatrix Fan::ray_matrix() const { return IntMatrix::from_rows(rays, rank); }

IntMatrix Fan::cone_matrix(const RaySet& cone) const {
  std::vector<IntVector> rows;
  for (int i : cone) rows.push_back(rays[static_cast<std::size_t>(i)]);
  return IntMatrix::from_rows(rows, rank);
}

namespace {

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<Rational> to_rational(const IntVector& v) {
  std::vector<Rational> out;
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

// Maximise t <= 1 subject to <m, u> = 0 on `zero`, <m, u> >= t on `pos`,
// <m, u> <= -t on `neg`.  True when the optimum is positive.
bool strictly_separable(const Fan& f, const RaySet& zero, const RaySet& pos, const RaySet& neg) {
  const std::size_t n = f.rank;
  std::vector<lp::Constraint> cons;
  auto row = [&](int ray, int sign, Rational tcoef, lp::Relation rel) {
    lp::Constraint c;
    c.coeffs.assign(n + 1, Rational(0));
    for (std::size_t j = 0; j < n; ++j) c.coeffs[j] = Rational(f.rays[static_cast<std::size_t>(ray)][j] * sign);
    c.coeffs[n] = tcoef;
    c.relation = rel;
    c.rhs = 0;
    cons.push_back(std::move(c));
  };
  for (int r : zero) row(r, 1, 0, lp::Relation::Equal);
  for (int r : pos) row(r, 1, -1, lp::Relation::GreaterEqual);
  for (int r : neg) row(r, -1, -1, lp::Relation::GreaterEqual);
  lp::Constraint cap;
  cap.coeffs.assign(n + 1, Rational(0));
  cap.coeffs[n] = 1;
  cap.relation = lp::Relation::LessEqual;
  cap.rhs = 1;
  cons.push_back(cap);
  std::vector<Rational> obj(n + 1, Rational(0));
  obj[n] = 1;
  auto res = lp::maximize(obj, cons);
  return res.status == lp::Status::Optimal && res.value > 0;
}

std::string cone_label(std::size_t i) { return "cone " + std::to_string(i); }

}  // namespace

FanValidation validate_fan(const Fan& f) {
  FanValidation v;
  auto bad = [&](std::string s) { v.violations.push_back(std::move(s)); };
  if (f.rank == 0) bad("rank must be positive");
  for (std::size_t i = 0; i < f.rays.size(); ++i) {
    if (f.rays[i].size() != f.rank) {
      bad("ray " + std::to_string(i) + " has wrong length");
      continue;
    }
    if (is_zero(f.rays[i]))
      bad("ray " + std::to_string(i) + " is zero");
    else if (content(f.rays[i]) != 1)
      bad("ray " + std::to_string(i) + " not primitive");
    for (std::size_t j = 0; j < i; ++j)
      if (f.rays[j] == f.rays[i]) bad("rays " + std::to_string(j) + " and " + std::to_string(i) + " coincide");
  }
  if (f.max_cones.empty()) bad("no maximal cones");
  std::vector<bool> used(f.rays.size(), false);
  for (std::size_t c = 0; c < f.max_cones.size(); ++c) {
    const auto& cone = f.max_cones[c];
    if (cone.empty()) bad(cone_label(c) + " is empty");
    for (std::size_t k = 0; k < cone.size(); ++k) {
      if (cone[k] < 0 || static_cast<std::size_t>(cone[k]) >= f.rays.size()) {
        bad(cone_label(c) + " references unknown ray " + std::to_string(cone[k]));
        return v;
      }
      if (k > 0 && cone[k] <= cone[k - 1]) bad(cone_label(c) + " ray indices not strictly ascending");
      used[static_cast<std::size_t>(cone[k])] = true;
    }
  }
  for (std::size_t i = 0; i < used.size(); ++i)
    if (!used[i]) bad("ray " + std::to_string(i) + " lies in no maximal cone");
  if (!v.valid()) return v;

  for (std::size_t c = 0; c < f.max_cones.size(); ++c) {
    const auto& cone = f.max_cones[c];
    if (!strictly_separable(f, {}, cone, {})) {
      bad(cone_label(c) + " not strongly convex");
      continue;
    }
    for (int r : cone) {
      RaySet others;
      for (int s : cone)
        if (s != r) others.push_back(s);
      if (!strictly_separable(f, {r}, others, {}) && !others.empty())
        bad(cone_label(c) + ": ray " + std::to_string(r) + " is not extremal");
    }
  }
  if (!v.valid()) return v;

  for (std::size_t a = 0; a < f.max_cones.size(); ++a)
    for (std::size_t b = a + 1; b < f.max_cones.size(); ++b) {
      const auto& s = f.max_cones[a];
      const auto& t = f.max_cones[b];
      if (s == t) {
        bad("cones " + std::to_string(a) + " and " + std::to_string(b) + " coincide");
        continue;
      }
      RaySet shared, only_s, only_t;
      std::set_intersection(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(shared));
      std::set_difference(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(only_s));
      std::set_difference(t.begin(), t.end(), s.begin(), s.end(), std::back_inserter(only_t));
      if (only_s.empty() || only_t.empty()) {
        bad("cones " + std::to_string(a) + " and " + std::to_string(b) + " are nested");
        continue;
      }
      if (!strictly_separable(f, shared, only_s, only_t))
        bad("cones " + std::to_string(a) + " and " + std::to_string(b) + ": intersection not a face");
    }
  return v;
}

bool is_simplicial(const Fan& f) {
  for (const auto& c : f.max_cones)
    if (rank(f.cone_matrix(c)) != c.size()) return false;
  return true;
}

bool is_smooth(const Fan& f) {
  for (const auto& c : f.max_cones) {
    auto s = snf(f.cone_matrix(c));
    if (s.rank != c.size()) return false;
    for (const auto& d : s.diagonal())
      if (d != 1) return false;
  }
  return true;
}

std::vector<RaySet> cone_facets(const Fan& f, const RaySet& cone) {
  const std::size_t n = f.rank;
  std::set<RaySet> out;
  for_each_subset(cone.size(), n - 1, [&](const std::vector<std::size_t>& idx) {
    RaySet sub;
    for (auto i : idx) sub.push_back(cone[i]);
    IntMatrix m = sub.empty() ? IntMatrix(0, n) : f.cone_matrix(sub);
    if (rank(m) != n - 1) return;
    IntMatrix k = kernel_basis(m);
    if (k.cols() != 1) return;
    IntVector normal = k.col(0);
    int sign = 0;
    RaySet face;
    for (int r : cone) {
      Int d = dot(normal, f.rays[static_cast<std::size_t>(r)]);
      if (d == 0) {
        face.push_back(r);
        continue;
      }
      int s = d > 0 ? 1 : -1;
      if (sign == 0) sign = s;
      if (s != sign) return;
    }
    out.insert(face);
  });
  return {out.begin(), out.end()};
}

bool is_complete(const Fan& f) {
  for (const auto& c : f.max_cones)
    if (rank(f.cone_matrix(c)) != f.rank) return false;
  std::map<RaySet, std::vector<std::size_t>> walls;
  for (std::size_t c = 0; c < f.max_cones.size(); ++c)
    for (const auto& facet : cone_facets(f, f.max_cones[c])) walls[facet].push_back(c);
  std::vector<std::vector<std::size_t>> adj(f.max_cones.size());
  for (const auto& [facet, cones] : walls) {
    if (cones.size() != 2) return false;
    adj[cones[0]].push_back(cones[1]);
    adj[cones[1]].push_back(cones[0]);
  }
  std::vector<bool> seen(f.max_cones.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    auto c = stack.back();
    stack.pop_back();
    for (auto d : adj[c])
      if (!seen[d]) {
        seen[d] = true;
        ++count;
        stack.push_back(d);
      }
  }
  return count == f.max_cones.size();
}

bool is_projective(const Fan& f) {
  // Variables: a_rho (r), m_sigma (n per cone), t.
  const std::size_t r = f.num_rays(), n = f.rank, c = f.max_cones.size();
  const std::size_t nv = r + n * c + 1;
  std::vector<lp::Constraint> cons;
  for (std::size_t s = 0; s < c; ++s) {
    const auto& cone = f.max_cones[s];
    for (std::size_t rho = 0; rho < r; ++rho) {
      lp::Constraint k;
      k.coeffs.assign(nv, Rational(0));
      k.coeffs[rho] = 1;
      for (std::size_t j = 0; j < n; ++j) k.coeffs[r + s * n + j] = Rational(f.rays[rho][j]);
      bool inside = std::binary_search(cone.begin(), cone.end(), static_cast<int>(rho));
      if (inside) {
        k.relation = lp::Relation::Equal;
      } else {
        k.coeffs[nv - 1] = -1;
        k.relation = lp::Relation::GreaterEqual;
      }
      k.rhs = 0;
      cons.push_back(std::move(k));
    }
  }
  lp::Constraint cap;
  cap.coeffs.assign(nv, Rational(0));
  cap.coeffs[nv - 1] = 1;
  cap.relation = lp::Relation::LessEqual;
  cap.rhs = 1;
  cons.push_back(cap);
  std::vector<Rational> obj(nv, Rational(0));
  obj[nv - 1] = 1;
  auto res = lp::maximize(obj, cons);
  return res.status == lp::Status::Optimal && res.value > 0;
}

IntVector DivisorTheory::classify(const IntVector& divisor) const { return cl_group.reduce(deg * divisor); }

namespace {

std::optional<DivisorTheory> from_supplied_basis(const Fan& f, const IntMatrix& r) {
  if (!f.class_basis) return std::nullopt;
  const IntMatrix& deg = *f.class_basis;
  if (deg.cols() != f.num_rays()) throw std::invalid_argument("class_basis: wrong number of columns");
  if (!(deg * r).is_zero()) throw std::invalid_argument("class_basis: degree matrix does not kill M");
  if (deg.rows() + f.rank != f.num_rays()) throw std::invalid_argument("class_basis: wrong number of rows");
  if (!is_surjective(deg)) throw std::invalid_argument("class_basis: degree map not surjective");
  if (!cokernel(r).group().is_free()) throw std::invalid_argument("class_basis: Cl has torsion");
  return DivisorTheory{r, FGAbelianGroup::free(deg.rows()), deg, "supplied class_basis"};
}

std::optional<DivisorTheory> from_smooth_cone(const Fan& f, const IntMatrix& r) {
  const std::size_t n = f.rank, nr = f.num_rays();
  for (std::size_t c = 0; c < f.max_cones.size(); ++c) {
    const auto& cone = f.max_cones[c];
    if (cone.size() != n) continue;
    IntMatrix b = f.cone_matrix(cone);
    if (!is_unimodular(b)) continue;
    // Rays outside the cone give a basis of Cl; m_rho is the dual basis of
    // the cone, and div(chi^m_rho) = 0 expresses D_rho in that basis.
    IntMatrix binv = unimodular_inverse(b);
    std::vector<int> outside;
    for (std::size_t rho = 0; rho < nr; ++rho)
      if (!std::binary_search(cone.begin(), cone.end(), static_cast<int>(rho))) outside.push_back(static_cast<int>(rho));
    IntMatrix deg(outside.size(), nr);
    for (std::size_t k = 0; k < outside.size(); ++k) deg(k, static_cast<std::size_t>(outside[k])) = 1;
    for (std::size_t i = 0; i < n; ++i) {
      IntVector m = binv.col(i);
      for (std::size_t k = 0; k < outside.size(); ++k)
        deg(k, static_cast<std::size_t>(cone[i])) = -dot(m, f.rays[static_cast<std::size_t>(outside[k])]);
    }
    if (!(deg * r).is_zero()) throw std::logic_error("class_group: smooth-cone basis inconsistent");
    return DivisorTheory{r, FGAbelianGroup::free(outside.size()), deg,
                         "classes of the rays outside maximal cone " + std::to_string(c)};
  }
  return std::nullopt;
}

}  // namespace

DivisorTheory class_group(const Fan& f) {
  IntMatrix r = f.ray_matrix();
  if (rank(r) != f.rank) throw std::invalid_argument("class_group: rays do not span N_R");
  if (auto d = from_supplied_basis(f, r)) return *d;
  if (cokernel(r).group().is_free())
    if (auto d = from_smooth_cone(f, r)) return *d;
  Subquotient q = cokernel(r);
  IntMatrix deg(q.group().num_generators(), f.num_rays());
  for (std::size_t rho = 0; rho < f.num_rays(); ++rho) deg.set_col(rho, q.classify(unit_vector(f.num_rays(), rho)));
  return DivisorTheory{r, q.group(), deg, "Smith normal form coordinates"};
}

std::vector<RaySet> irrelevant_generators(const Fan& f) {
  std::set<RaySet> out;
  for (const auto& c : f.max_cones) {
    RaySet comp;
    for (std::size_t rho = 0; rho < f.num_rays(); ++rho)
      if (!std::binary_search(c.begin(), c.end(), static_cast<int>(rho))) comp.push_back(static_cast<int>(rho));
    out.insert(comp);
  }
  return {out.begin(), out.end()};
}

}  // namespace tdesc
