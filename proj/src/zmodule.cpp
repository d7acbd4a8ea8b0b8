#include "tdesc/zmodule.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tdesc {

namespace {

Int tdiv(const Int& a, const Int& b) {
  Int q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int mod_nonneg(const Int& a, const Int& m) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

IntVector SmithDecomposition::diagonal() const {
  IntVector d(std::min(D.rows(), D.cols()));
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = D(i, i);
  return d;
}

SmithDecomposition snf(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  SmithDecomposition out{IntMatrix::identity(m), IntMatrix::identity(n), a, 0};
  IntMatrix& D = out.D;
  IntMatrix& U = out.U;
  IntMatrix& V = out.V;

  const std::size_t k = std::min(m, n);
  std::size_t t = 0;
  for (; t < k; ++t) {
    for (;;) {
      // Pivot: smallest nonzero |entry| in the trailing block, first in (row, col) order.
      std::size_t pr = m, pc = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          const Int& x = D(i, j);
          if (x == 0) continue;
          if (pr == m || abs(x) < abs(D(pr, pc))) {
            pr = i;
            pc = j;
          }
        }
      if (pr == m) break;
      D.swap_rows(t, pr);
      U.swap_rows(t, pr);
      D.swap_cols(t, pc);
      V.swap_cols(t, pc);

      bool residue = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (D(i, t) == 0) continue;
        Int q = tdiv(D(i, t), D(t, t));
        D.add_row_multiple(i, t, -q);
        U.add_row_multiple(i, t, -q);
        if (D(i, t) != 0) residue = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (D(t, j) == 0) continue;
        Int q = tdiv(D(t, j), D(t, t));
        D.add_col_multiple(j, t, -q);
        V.add_col_multiple(j, t, -q);
        if (D(t, j) != 0) residue = true;
      }
      if (residue) continue;

      // Row and column t are clear; enforce divisibility on the trailing block.
      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (D(i, j) != 0 && mod_nonneg(D(i, j), abs(D(t, t))) != 0) {
            D.add_row_multiple(t, i, 1);
            U.add_row_multiple(t, i, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (D(t, t) == 0) break;
    if (D(t, t) < 0) {
      D.negate_row(t);
      U.negate_row(t);
    }
  }
  out.rank = t;
  return out;
}

HermiteDecomposition hnf(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  HermiteDecomposition out{a, IntMatrix::identity(m), {}};
  IntMatrix& H = out.H;
  IntMatrix& T = out.T;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    for (;;) {
      std::size_t piv = m;
      for (std::size_t i = r; i < m; ++i)
        if (H(i, c) != 0 && (piv == m || abs(H(i, c)) < abs(H(piv, c)))) piv = i;
      if (piv == m) break;
      H.swap_rows(r, piv);
      T.swap_rows(r, piv);
      bool clean = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (H(i, c) == 0) continue;
        Int q = fdiv(H(i, c), H(r, c));
        H.add_row_multiple(i, r, -q);
        T.add_row_multiple(i, r, -q);
        if (H(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (H(r, c) == 0) continue;
    if (H(r, c) < 0) {
      H.negate_row(r);
      T.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Int q = fdiv(H(i, c), H(r, c));
      H.add_row_multiple(i, r, -q);
      T.add_row_multiple(i, r, -q);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  return out;
}

IntMatrix canonical_basis(const IntMatrix& generators) {
  // Row HNF of the transposed generators; nonzero rows become basis columns.
  HermiteDecomposition h = hnf(generators.transpose());
  const std::size_t r = h.pivot_cols.size();
  IntMatrix basis(generators.rows(), r);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < generators.rows(); ++i) basis(i, j) = h.H(j, i);
  return basis;
}

IntMatrix image_basis(const IntMatrix& a) { return canonical_basis(a); }

IntMatrix kernel_basis(const IntMatrix& a) {
  SmithDecomposition s = snf(a);
  const std::size_t n = a.cols();
  IntMatrix gens(n, n - s.rank);
  for (std::size_t j = s.rank; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) gens(i, j - s.rank) = s.V(i, j);
  return canonical_basis(gens);
}

// ---------------------------------------------------------------------------

FGAbelianGroup::FGAbelianGroup(const std::vector<Int>& factors) {
  // Normalise through the Smith form of the diagonal matrix.
  std::vector<Int> nonunit;
  std::size_t zeros = 0;
  for (const auto& f : factors) {
    if (f < 0) throw std::invalid_argument("FGAbelianGroup: negative invariant factor");
    if (f == 0)
      ++zeros;
    else if (f != 1)
      nonunit.push_back(f);
  }
  if (!nonunit.empty()) {
    IntMatrix d(nonunit.size(), nonunit.size());
    for (std::size_t i = 0; i < nonunit.size(); ++i) d(i, i) = nonunit[i];
    IntVector diag = snf(d).diagonal();
    for (const auto& x : diag)
      if (x != 1) factors_.push_back(x);
  }
  for (std::size_t i = 0; i < zeros; ++i) factors_.emplace_back(0);
}

FGAbelianGroup FGAbelianGroup::free(std::size_t rank) { return FGAbelianGroup(std::vector<Int>(rank, Int(0))); }

std::size_t FGAbelianGroup::free_rank() const {
  return static_cast<std::size_t>(std::count(factors_.begin(), factors_.end(), Int(0)));
}

Int FGAbelianGroup::order() const {
  Int o = 1;
  for (const auto& f : factors_) {
    if (f == 0) return 0;
    o *= f;
  }
  return o;
}

IntVector FGAbelianGroup::reduce(const IntVector& coords) const {
  if (coords.size() != factors_.size()) throw std::invalid_argument("FGAbelianGroup::reduce: wrong length");
  IntVector out(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i)
    out[i] = factors_[i] == 0 ? coords[i] : mod_nonneg(coords[i], factors_[i]);
  return out;
}

IntVector FGAbelianGroup::add(const IntVector& a, const IntVector& b) const { return reduce(a + b); }

IntVector FGAbelianGroup::negate(const IntVector& a) const { return reduce(Int(-1) * a); }

Int FGAbelianGroup::element_order(const IntVector& coords) const {
  IntVector v = reduce(coords);
  Int ord = 1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (factors_[i] == 0) return 0;
    Int o = factors_[i] / gcd(factors_[i], v[i]);
    ord = lcm(ord, o);
  }
  return ord;
}

std::vector<IntVector> FGAbelianGroup::elements(std::size_t limit) const {
  if (!is_finite()) throw std::domain_error("FGAbelianGroup::elements: infinite group");
  if (order() > Int(static_cast<unsigned long>(limit))) throw std::domain_error("FGAbelianGroup::elements: group too large");
  std::vector<IntVector> out;
  IntVector cur(factors_.size());
  for (;;) {
    out.push_back(cur);
    std::size_t i = factors_.size();
    for (;;) {
      if (i == 0) return out;
      --i;
      cur[i] += 1;
      if (cur[i] < factors_[i]) break;
      cur[i] = 0;
    }
  }
}

std::string FGAbelianGroup::to_string() const {
  if (factors_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& f : factors_) {
    if (f == 0) continue;
    os << (first ? "" : " + ") << "Z/" << f.get_str();
    first = false;
  }
  std::size_t r = free_rank();
  if (r > 0) {
    os << (first ? "" : " + ") << "Z";
    if (r > 1) os << '^' << r;
  }
  return os.str();
}

FGAbelianGroup direct_sum(const FGAbelianGroup& a, const FGAbelianGroup& b) {
  std::vector<Int> f = a.invariant_factors();
  f.insert(f.end(), b.invariant_factors().begin(), b.invariant_factors().end());
  return FGAbelianGroup(f);
}

// ---------------------------------------------------------------------------

LatticeCoordinates::LatticeCoordinates(IntMatrix basis) : basis_(std::move(basis)), smith_(snf(basis_)) {
  if (smith_.rank != basis_.cols()) throw std::invalid_argument("LatticeCoordinates: basis not of full column rank");
}

std::optional<IntVector> LatticeCoordinates::coordinates(const IntVector& v) const {
  if (v.size() != basis_.rows()) throw std::invalid_argument("LatticeCoordinates: dimension mismatch");
  IntVector uv = smith_.U * v;
  const std::size_t k = basis_.cols();
  for (std::size_t i = k; i < uv.size(); ++i)
    if (uv[i] != 0) return std::nullopt;
  IntVector z(k);
  for (std::size_t i = 0; i < k; ++i) {
    const Int& d = smith_.D(i, i);
    if (!mpz_divisible_p(uv[i].get_mpz_t(), d.get_mpz_t())) return std::nullopt;
    z[i] = uv[i] / d;
  }
  return smith_.V * z;
}

Subquotient::Subquotient(const IntMatrix& sub_basis, const IntMatrix& relations) : sub_(sub_basis) {
  const std::size_t k = sub_basis.cols();
  IntMatrix coords(k, relations.cols());
  for (std::size_t j = 0; j < relations.cols(); ++j) {
    auto y = sub_.coordinates(relations.col(j));
    if (!y) throw std::invalid_argument("Subquotient: relation not contained in the sublattice");
    coords.set_col(j, *y);
  }
  SmithDecomposition s = snf(coords);
  std::vector<Int> factors;
  for (std::size_t i = 0; i < k; ++i) {
    Int d = i < s.rank ? Int(s.D(i, i)) : Int(0);
    if (d == 1) continue;
    kept_.push_back(i);
    factors.push_back(d);
  }
  group_ = FGAbelianGroup(factors);
  projection_ = s.U.submatrix_rows(kept_);
  IntMatrix uinv = unimodular_inverse(s.U);
  lift_ = sub_basis * uinv.submatrix_cols(kept_);
}

IntVector Subquotient::classify_coords(const IntVector& coords) const { return group_.reduce(projection_ * coords); }

IntVector Subquotient::classify(const IntVector& ambient) const {
  auto y = sub_.coordinates(ambient);
  if (!y) throw std::invalid_argument("Subquotient::classify: vector not in the sublattice");
  return classify_coords(*y);
}

IntVector Subquotient::representative(const IntVector& element) const { return lift_ * element; }

Subquotient cokernel(const IntMatrix& a) { return Subquotient(IntMatrix::identity(a.rows()), a); }

// ---------------------------------------------------------------------------

LinearSystem::LinearSystem(const IntMatrix& a) : a_(a), smith_(snf(a)) {
  IntMatrix gens(a.cols(), a.cols() - smith_.rank);
  for (std::size_t j = smith_.rank; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.cols(); ++i) gens(i, j - smith_.rank) = smith_.V(i, j);
  kernel_ = canonical_basis(gens);
}

std::optional<IntVector> LinearSystem::solve(const IntVector& b) const {
  if (b.size() != a_.rows()) throw std::invalid_argument("LinearSystem::solve: dimension mismatch");
  IntVector ub = smith_.U * b;
  for (std::size_t i = smith_.rank; i < ub.size(); ++i)
    if (ub[i] != 0) return std::nullopt;
  IntVector y(a_.cols());
  for (std::size_t i = 0; i < smith_.rank; ++i) {
    const Int& d = smith_.D(i, i);
    if (!mpz_divisible_p(ub[i].get_mpz_t(), d.get_mpz_t())) return std::nullopt;
    y[i] = ub[i] / d;
  }
  return smith_.V * y;
}

std::optional<IntMatrix> LinearSystem::solve(const IntMatrix& b) const {
  IntMatrix x(a_.cols(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    auto col = solve(b.col(j));
    if (!col) return std::nullopt;
    x.set_col(j, *col);
  }
  return x;
}

LinearSolution solve_linear(const IntMatrix& a, const IntVector& b) {
  LinearSystem sys(a);
  return {sys.solve(b), sys.kernel()};
}

bool is_surjective(const IntMatrix& a) {
  SmithDecomposition s = snf(a);
  if (s.rank != a.rows()) return false;
  for (std::size_t i = 0; i < s.rank; ++i)
    if (s.D(i, i) != 1) return false;
  return true;
}

std::optional<IntMatrix> solve_equivariant_section(const std::vector<IntMatrix>& p_generators,
                                                   const std::vector<IntMatrix>& m_generators,
                                                   const IntMatrix& pi) {
  if (p_generators.size() != m_generators.size())
    throw std::invalid_argument("solve_equivariant_section: generator lists differ in length");
  if (!is_surjective(pi)) throw std::invalid_argument("not a surjection");
  const std::size_t m = pi.rows();
  const std::size_t p = pi.cols();
  // Unknowns: entries s(i, j), i < p, j < m, in row-major order.
  const std::size_t unknowns = p * m;
  const std::size_t eqs = m * m + p_generators.size() * p * m;
  IntMatrix sys(eqs, unknowns);
  IntVector rhs(eqs);
  std::size_t row = 0;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b, ++row) {
      for (std::size_t i = 0; i < p; ++i) sys(row, i * m + b) = pi(a, i);
      rhs[row] = a == b ? 1 : 0;
    }
  for (std::size_t g = 0; g < p_generators.size(); ++g) {
    const IntMatrix& pg = p_generators[g];
    const IntMatrix& mg = m_generators[g];
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < m; ++j, ++row) {
        for (std::size_t k = 0; k < p; ++k) sys(row, k * m + j) += pg(i, k);
        for (std::size_t k = 0; k < m; ++k) sys(row, i * m + k) -= mg(k, j);
      }
  }
  auto x = LinearSystem(sys).solve(rhs);
  if (!x) return std::nullopt;
  IntMatrix s(p, m);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < m; ++j) s(i, j) = (*x)[i * m + j];
  return s;
}

}  // namespace tdesc
