#include "tdesc/polyhedral.hpp"

#include "tdesc/lp.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace tdesc {

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

IntMatrix rows_of(const std::vector<IntVector>& vs, std::size_t dim) { return IntMatrix::from_rows(vs, dim); }

// Vectors x with v . x = 0 for all listed v, when that space is a line.
std::optional<IntVector> common_normal(const std::vector<IntVector>& vs, std::size_t dim) {
  IntMatrix m = vs.empty() ? IntMatrix(0, dim) : rows_of(vs, dim);
  IntMatrix k = kernel_basis(m);
  if (k.cols() != 1) return std::nullopt;
  return primitive(k.col(0));
}

// Facet normals of a full-dimensional cone given by generators.
std::vector<IntVector> facets_full(std::size_t dim, const std::vector<IntVector>& gens) {
  std::set<IntVector> out;
  if (dim == 1) {
    bool pos = false, neg = false;
    for (const auto& g : gens) (g[0] > 0 ? pos : neg) = true;
    if (pos && !neg) out.insert(IntVector{Int(1)});
    if (neg && !pos) out.insert(IntVector{Int(-1)});
    return {out.begin(), out.end()};
  }
  for_each_subset(gens.size(), dim - 1, [&](const std::vector<std::size_t>& idx) {
    std::vector<IntVector> sub;
    for (auto i : idx) sub.push_back(gens[i]);
    auto n = common_normal(sub, dim);
    if (!n) return;
    int sign = 0;
    for (const auto& g : gens) {
      Int d = dot(*n, g);
      if (d == 0) continue;
      int s = d > 0 ? 1 : -1;
      if (sign == 0) sign = s;
      if (s != sign) return;
    }
    if (sign == 0) return;
    out.insert(sign > 0 ? *n : Int(-1) * *n);
  });
  return {out.begin(), out.end()};
}

// Extreme rays of a pointed full-dimensional cone given by inequalities.
std::vector<IntVector> rays_full(std::size_t dim, const std::vector<IntVector>& ineqs) {
  if (rank(ineqs.empty() ? IntMatrix(0, dim) : rows_of(ineqs, dim)) != dim)
    throw std::invalid_argument("cone contains a line");
  std::set<IntVector> out;
  if (dim == 1) {
    for (const auto& a : ineqs) {
      IntVector r{a[0] > 0 ? Int(1) : Int(-1)};
      bool ok = true;
      for (const auto& b : ineqs)
        if (dot(b, r) < 0) ok = false;
      if (ok) out.insert(r);
    }
    return {out.begin(), out.end()};
  }
  for_each_subset(ineqs.size(), dim - 1, [&](const std::vector<std::size_t>& idx) {
    std::vector<IntVector> sub;
    for (auto i : idx) sub.push_back(ineqs[i]);
    auto n = common_normal(sub, dim);
    if (!n) return;
    for (int s : {1, -1}) {
      IntVector r = Int(s) * *n;
      bool ok = true;
      for (const auto& a : ineqs)
        if (dot(a, r) < 0) {
          ok = false;
          break;
        }
      if (ok) out.insert(r);
    }
  });
  return {out.begin(), out.end()};
}

// Lattice basis (columns) of span(gens) intersected with Z^dim.
IntMatrix saturated_span(std::size_t dim, const std::vector<IntVector>& gens) {
  IntMatrix g = gens.empty() ? IntMatrix(0, dim) : rows_of(gens, dim);
  IntMatrix eq = kernel_basis(g);  // columns: covectors vanishing on the span
  return kernel_basis(eq.transpose());
}

IntVector pull_back_covector(const IntMatrix& span, const IntVector& b) {
  auto sol = solve_linear(span.transpose(), b);
  if (!sol.particular) throw std::logic_error("pull_back_covector: span basis not saturated");
  return *sol.particular;
}

RationalCone build(std::size_t dim, const std::vector<IntVector>& gens) {
  RationalCone c;
  c.dim = dim;
  IntMatrix span = saturated_span(dim, gens);
  const std::size_t k = span.cols();
  IntMatrix g = gens.empty() ? IntMatrix(0, dim) : rows_of(gens, dim);
  IntMatrix eq = kernel_basis(g);
  for (std::size_t j = 0; j < eq.cols(); ++j) c.equations.push_back(eq.col(j));
  if (k == 0) return c;
  LatticeCoordinates coords(span);
  std::vector<IntVector> local;
  for (const auto& v : gens)
    if (!is_zero(v)) local.push_back(*coords.coordinates(v));
  auto facets = facets_full(k, local);
  auto rays = rays_full(k, facets);
  for (const auto& r : rays) c.rays.push_back(span * r);
  std::set<IntVector> ineqs;
  for (const auto& f : facets) {
    IntVector a = pull_back_covector(span, f);
    ineqs.insert(primitive(a));
  }
  c.inequalities.assign(ineqs.begin(), ineqs.end());
  std::sort(c.rays.begin(), c.rays.end());
  return c;
}

}  // namespace

bool RationalCone::contains(const IntVector& v) const {
  for (const auto& e : equations)
    if (dot(e, v) != 0) return false;
  for (const auto& a : inequalities)
    if (dot(a, v) < 0) return false;
  return true;
}

RationalCone cone_from_generators(std::size_t dim, const std::vector<IntVector>& generators) {
  for (const auto& g : generators)
    if (g.size() != dim) throw std::invalid_argument("cone generator has the wrong length");
  return build(dim, generators);
}

RationalCone cone_from_inequalities(std::size_t dim, const std::vector<IntVector>& inequalities) {
  for (const auto& a : inequalities)
    if (a.size() != dim) throw std::invalid_argument("cone inequality has the wrong length");
  // Pointed cones only: the inequalities must have full rank.  Lower
  // dimensional cones come from pairs of opposite inequalities.
  if (dim > 0 && rank(inequalities.empty() ? IntMatrix(0, dim) : rows_of(inequalities, dim)) != dim)
    throw std::invalid_argument("cone contains a line");
  // Split off the implicit equations: inequalities a with -a also valid on
  // the cone.  Find them by LP: a . x can be made positive within the cone?
  std::vector<IntVector> strict;
  std::vector<IntVector> implicit;
  for (const auto& a : inequalities) {
    std::vector<lp::Constraint> cons;
    for (const auto& b : inequalities) cons.push_back(lp::make_constraint(b, lp::Relation::GreaterEqual, 0));
    cons.push_back(lp::make_constraint(a, lp::Relation::LessEqual, 1));
    std::vector<Rational> obj;
    for (const auto& x : a) obj.emplace_back(x);
    auto res = lp::maximize(obj, cons);
    (res.status == lp::Status::Optimal && res.value > 0 ? strict : implicit).push_back(a);
  }
  if (implicit.empty()) {
    auto rays = rays_full(dim, inequalities);
    return build(dim, rays);
  }
  // Restrict to the span cut out by the implicit equations.
  IntMatrix eq = implicit.empty() ? IntMatrix(0, dim) : rows_of(implicit, dim);
  IntMatrix span = kernel_basis(eq);
  if (span.cols() == 0) return build(dim, {});
  std::vector<IntVector> local;
  for (const auto& a : strict) {
    IntVector b(span.cols());
    for (std::size_t j = 0; j < span.cols(); ++j) b[j] = dot(a, span.col(j));
    local.push_back(b);
  }
  auto rays = rays_full(span.cols(), local);
  std::vector<IntVector> gens;
  for (const auto& r : rays) gens.push_back(span * r);
  return build(dim, gens);
}

std::vector<IntVector> extreme_rays(const RationalCone& c) { return c.rays; }

namespace {

// Placing triangulation of a pointed full-dimensional cone with the given
// extreme rays; simplices as index lists into `rays`.
std::vector<std::vector<std::size_t>> place(std::size_t dim, const std::vector<IntVector>& rays) {
  std::vector<std::vector<std::size_t>> simplices;
  std::vector<std::size_t> first;
  for (std::size_t i = 0; i < rays.size() && first.size() < dim; ++i) {
    std::vector<IntVector> trial;
    for (auto j : first) trial.push_back(rays[j]);
    trial.push_back(rays[i]);
    if (rank(rows_of(trial, dim)) == trial.size()) first.push_back(i);
  }
  simplices.push_back(first);
  std::vector<bool> placed(rays.size(), false);
  for (auto i : first) placed[i] = true;
  for (std::size_t v = 0; v < rays.size(); ++v) {
    if (placed[v]) continue;
    // Boundary facets: facets of simplices that appear exactly once.
    std::map<std::vector<std::size_t>, std::vector<std::size_t>> facet_count;  // facet -> opposite vertex
    for (const auto& s : simplices)
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        std::vector<std::size_t> f;
        for (std::size_t k = 0; k < s.size(); ++k)
          if (k != drop) f.push_back(s[k]);
        std::sort(f.begin(), f.end());
        facet_count[f].push_back(s[drop]);
      }
    std::vector<std::vector<std::size_t>> added;
    for (const auto& [f, opposite] : facet_count) {
      if (opposite.size() != 1) continue;
      std::vector<IntVector> fr;
      for (auto k : f) fr.push_back(rays[k]);
      auto n = common_normal(fr, dim);
      if (!n) continue;
      Int side = dot(*n, rays[opposite[0]]);
      Int here = dot(*n, rays[v]);
      if (side * here < 0) {
        auto s = f;
        s.push_back(v);
        std::sort(s.begin(), s.end());
        added.push_back(s);
      }
    }
    for (auto& s : added) simplices.push_back(std::move(s));
    placed[v] = true;
  }
  return simplices;
}

// Nonzero lattice points sum lambda_i g_i with 0 <= lambda_i < 1.
std::vector<IntVector> parallelepiped_points(const IntMatrix& g) {
  const std::size_t d = g.rows();
  auto s = snf(g);
  IntMatrix uinv = unimodular_inverse(s.U);
  auto diag = s.diagonal();
  Int det = determinant(g);
  IntMatrix adj(d, d);  // det * g^{-1}, computed column by column via Cramer-free solve
  {
    // g^{-1} = V D^{-1} U, so det * g^{-1} = V (det D^{-1}) U.
    IntMatrix scaled(d, d);
    for (std::size_t i = 0; i < d; ++i) scaled(i, i) = det / diag[i];
    adj = s.V * scaled * s.U;
  }
  Int adet = abs(det);
  std::vector<IntVector> out;
  IntVector y(d);
  for (;;) {
    IntVector x0 = uinv * y;
    // lambda = adj x0 / det; reduce to [0, 1).
    IntVector num = adj * x0;
    IntVector lam_num(d);
    for (std::size_t i = 0; i < d; ++i) {
      Int a = num[i];
      if (det < 0) a = -a;
      Int r;
      mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), adet.get_mpz_t());
      lam_num[i] = r;
    }
    if (!is_zero(lam_num)) {
      IntVector x = g * lam_num;
      for (auto& e : x) {
        Int q;
        mpz_divexact(q.get_mpz_t(), e.get_mpz_t(), adet.get_mpz_t());
        e = q;
      }
      out.push_back(x);
    }
    std::size_t i = d;
    for (;;) {
      if (i == 0) return out;
      --i;
      if (++y[i] < diag[i]) break;
      y[i] = 0;
    }
  }
}

std::vector<IntVector> hilbert_full(std::size_t dim, const RationalCone& local) {
  const auto& rays = local.rays;
  std::set<IntVector> cand(rays.begin(), rays.end());
  for (const auto& simplex : place(dim, rays)) {
    std::vector<IntVector> cols;
    for (auto i : simplex) cols.push_back(rays[i]);
    for (auto& p : parallelepiped_points(IntMatrix::from_columns(cols, dim))) cand.insert(p);
  }
  std::vector<IntVector> candidates(cand.begin(), cand.end());
  std::vector<IntVector> basis;
  for (const auto& x : candidates) {
    bool reducible = false;
    for (const auto& y : candidates) {
      if (y == x) continue;
      IntVector diff = x - y;
      if (!is_zero(diff) && local.contains(diff)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.push_back(x);
  }
  // Every candidate must be a sum of basis elements; check with a positive
  // grading to bound the search.
  IntVector grading(dim);
  for (const auto& a : local.inequalities) grading = grading + a;
  std::map<IntVector, bool> memo;
  std::function<bool(const IntVector&)> reachable = [&](const IntVector& x) -> bool {
    if (is_zero(x)) return true;
    auto it = memo.find(x);
    if (it != memo.end()) return it->second;
    bool ok = false;
    for (const auto& h : basis) {
      IntVector rest = x - h;
      if (local.contains(rest) && dot(grading, rest) < dot(grading, x) && reachable(rest)) {
        ok = true;
        break;
      }
    }
    memo[x] = ok;
    return ok;
  };
  for (const auto& x : candidates)
    if (!reachable(x)) throw std::logic_error("hilbert_basis: candidate not generated by the basis");
  return basis;
}

}  // namespace

std::vector<IntVector> hilbert_basis(const RationalCone& c) {
  if (c.rays.empty()) return {};
  IntMatrix span = saturated_span(c.dim, c.rays);
  const std::size_t k = span.cols();
  LatticeCoordinates coords(span);
  std::vector<IntVector> local_rays;
  for (const auto& r : c.rays) local_rays.push_back(*coords.coordinates(r));
  RationalCone local = cone_from_generators(k, local_rays);
  if (!local.full_dimensional()) throw std::logic_error("hilbert_basis: span computation failed");
  if (rank(rows_of(local.inequalities, k)) != k) throw std::invalid_argument("hilbert_basis: cone not pointed");
  std::vector<IntVector> out;
  for (const auto& h : hilbert_full(k, local)) out.push_back(span * h);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void require_smooth_cones(const Fan& f) {
  for (const auto& c : f.max_cones)
    if (c.size() != f.rank || !is_unimodular(f.cone_matrix(c)))
      throw std::invalid_argument("nef computations need a smooth fan with full-dimensional maximal cones");
}

// Linear functional a -> (<m_sigma(a), u_rho> + a_rho) for rho outside sigma,
// as a covector on Z^Sigma(1).
IntVector support_covector(const Fan& f, const RaySet& cone, std::size_t rho) {
  IntMatrix binv = unimodular_inverse(f.cone_matrix(cone));
  // m_sigma = -binv a_sigma, so <m_sigma, u_rho> = -(u_rho^T binv) a_sigma.
  IntVector w = binv.transpose() * f.rays[rho];
  IntVector cov(f.num_rays());
  cov[rho] = 1;
  for (std::size_t i = 0; i < cone.size(); ++i) cov[static_cast<std::size_t>(cone[i])] -= w[i];
  return cov;
}

}  // namespace

NefData nef_cone(const Fan& f, const DivisorTheory& div) {
  if (!div.cl_group.is_free()) throw std::invalid_argument("nef_cone: class group has torsion");
  require_smooth_cones(f);
  if (!is_projective(f)) throw std::invalid_argument("nef_cone: fan is not projective");
  const std::size_t k = div.cl_group.num_generators();
  NefData nd;
  nd.lift = IntMatrix(f.num_rays(), k);
  for (std::size_t i = 0; i < k; ++i) {
    auto sol = solve_linear(div.deg, unit_vector(k, i));
    if (!sol.particular) throw std::logic_error("nef_cone: degree map not surjective");
    nd.lift.set_col(i, *sol.particular);
  }
  std::vector<IntVector> raw;
  for (const auto& cone : f.max_cones)
    for (std::size_t rho = 0; rho < f.num_rays(); ++rho) {
      if (std::binary_search(cone.begin(), cone.end(), static_cast<int>(rho))) continue;
      IntVector cov = support_covector(f, cone, rho);
      IntVector on_cl = nd.lift.transpose() * cov;
      if (!is_zero(on_cl)) raw.push_back(primitive(on_cl));
    }
  nd.cone = cone_from_inequalities(k, raw);
  nd.inequalities = nd.cone.inequalities;
  return nd;
}

bool is_nef(const Fan& f, const IntVector& divisor) {
  require_smooth_cones(f);
  if (divisor.size() != f.num_rays()) throw std::invalid_argument("is_nef: divisor has the wrong length");
  for (const auto& cone : f.max_cones)
    for (std::size_t rho = 0; rho < f.num_rays(); ++rho) {
      if (std::binary_search(cone.begin(), cone.end(), static_cast<int>(rho))) continue;
      if (dot(support_covector(f, cone, rho), divisor) < 0) return false;
    }
  return true;
}

namespace {

Int count_points(const Fan& f, const IntVector& divisor, IntVector& prefix) {
  const std::size_t n = f.rank;
  const std::size_t d = prefix.size();
  if (d == n) {
    for (std::size_t rho = 0; rho < f.num_rays(); ++rho)
      if (dot(prefix, f.rays[rho]) < -divisor[rho]) return 0;
    return 1;
  }
  // Bounds for coordinate d with earlier coordinates fixed.
  const std::size_t free_vars = n - d;
  std::vector<lp::Constraint> cons;
  for (std::size_t rho = 0; rho < f.num_rays(); ++rho) {
    lp::Constraint c;
    Rational fixed = 0;
    for (std::size_t j = 0; j < d; ++j) fixed += Rational(prefix[j] * f.rays[rho][j]);
    for (std::size_t j = d; j < n; ++j) c.coeffs.emplace_back(f.rays[rho][j]);
    c.relation = lp::Relation::GreaterEqual;
    c.rhs = Rational(-divisor[rho]) - fixed;
    cons.push_back(std::move(c));
  }
  std::vector<Rational> obj(free_vars, Rational(0));
  obj[0] = 1;
  auto hi = lp::maximize(obj, cons);
  if (hi.status == lp::Status::Infeasible) return 0;
  if (hi.status == lp::Status::Unbounded) throw std::domain_error("h0: polytope is unbounded");
  obj[0] = -1;
  auto lo = lp::maximize(obj, cons);
  if (lo.status == lp::Status::Unbounded) throw std::domain_error("h0: polytope is unbounded");
  Int upper, lower;
  mpz_fdiv_q(upper.get_mpz_t(), hi.value.get_num_mpz_t(), hi.value.get_den_mpz_t());
  Rational neg = -lo.value;
  mpz_cdiv_q(lower.get_mpz_t(), neg.get_num_mpz_t(), neg.get_den_mpz_t());
  Int total = 0;
  for (Int x = lower; x <= upper; ++x) {
    prefix.push_back(x);
    total += count_points(f, divisor, prefix);
    prefix.pop_back();
  }
  return total;
}

}  // namespace

Int h0(const Fan& f, const IntVector& divisor) {
  if (divisor.size() != f.num_rays()) throw std::invalid_argument("h0: divisor has the wrong length");
  IntVector prefix;
  return count_points(f, divisor, prefix);
}

}  // namespace tdesc
