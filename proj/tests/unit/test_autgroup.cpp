#include "doctest.h"
#include "helpers.hpp"
#include "tdesc/autgroup.hpp"

#include <random>

using namespace tdesc;

namespace {

struct Pipeline {
  Fan fan;
  DivisorTheory div;
  WeightDecomposition wd;
  ToricWeylGroup w;
  ClassAutGroup j;
};

Pipeline run(const std::string& stem) {
  Pipeline p;
  p.fan = bundled_fan(stem);
  p.div = class_group(p.fan);
  p.wd = weight_decomposition(p.div);
  p.w = fan_automorphisms(p.fan);
  p.j = class_aut_group(p.w, p.div, p.wd);
  return p;
}

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// Brute force: every ray permutation that extends to a unimodular map
// preserving the cones.
std::size_t brute_w_order(const Fan& f) {
  std::vector<int> perm(f.num_rays());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  IntMatrix r = f.ray_matrix();
  LinearSystem solver(r);
  std::size_t count = 0;
  do {
    // g^T solves R g^T = R_perm
    std::vector<IntVector> rows;
    for (int p : perm) rows.push_back(f.rays[static_cast<std::size_t>(p)]);
    IntMatrix target = IntMatrix::from_rows(rows, f.rank);
    auto gt = solver.solve(target);
    if (!gt || !(r * *gt == target) || !is_unimodular(*gt)) continue;
    bool ok = true;
    for (const auto& c : f.max_cones) {
      RaySet img;
      for (int i : c) img.push_back(perm[static_cast<std::size_t>(i)]);
      std::sort(img.begin(), img.end());
      if (std::find(f.max_cones.begin(), f.max_cones.end(), img) == f.max_cones.end()) ok = false;
    }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace

TEST_CASE("weight decompositions") {
  auto p2 = run("p2");
  CHECK(p2.wd.classes.size() == 1);
  CHECK(p2.wd.multiplicity == std::vector<std::size_t>{3});
  auto q = run("p1xp1");
  CHECK(q.wd.multiplicity == std::vector<std::size_t>{2, 2});
  auto d = run("dp6");
  CHECK(d.wd.multiplicity == std::vector<std::size_t>(6, 1));
  CHECK(cox_algebra_shape(run("p1p1p1").wd) == std::vector<std::size_t>{2, 2, 2});
  CHECK(cox_algebra_shape(run("p3").wd) == std::vector<std::size_t>{4});
}

TEST_CASE("Weyl groups and class automorphisms") {
  auto p2 = run("p2");
  CHECK(p2.w.order() == 6);
  CHECK(p2.j.order() == 1);
  CHECK(p2.j.kernel.size() == 6);
  auto q = run("p1xp1");
  CHECK(q.w.order() == 8);
  CHECK(q.j.order() == 2);
  CHECK(q.j.kernel.size() == 4);
  // the section sends the swap to the coordinate swap
  const auto& swap = q.w.elements[static_cast<std::size_t>(q.j.section[1])];
  CHECK(swap.g == IntMatrix{{0, 1}, {1, 0}});
  auto d = run("dp6");
  CHECK(d.w.order() == 12);
  CHECK(d.j.order() == 12);
  CHECK(d.j.kernel.size() == 1);
  CHECK(!d.j.group->is_abelian());
  CHECK(subgroups(*d.j.group).size() == 16);
  for (auto stem : {"p1", "p2", "p3", "p1xp1", "p1xp3", "p1p1p1", "f1", "f2", "dp6", "twisted_prism"}) {
    auto p = run(stem);
    CHECK_MESSAGE(p.w.order() == p.j.kernel.size() * p.j.order(), stem);
    std::size_t prod = 1;
    for (auto m : p.wd.multiplicity) prod *= factorial(m);
    if (is_smooth(p.fan)) CHECK_MESSAGE(p.j.kernel.size() == prod, stem);
    for (std::size_t x = 0; x < p.j.order(); ++x) {
      CHECK(p.j.quotient[static_cast<std::size_t>(p.j.section[x])] == static_cast<int>(x));
      if (x > 0) CHECK(p.j.quotient[static_cast<std::size_t>(p.j.section[x])] != 0);
    }
    CHECK(is_homomorphism(*p.w.group, *p.j.group, p.j.quotient));
    if (p.fan.num_rays() <= 8) CHECK_MESSAGE(brute_w_order(p.fan) == p.w.order(), stem);
    // Cl matrices form a representation
    for (std::size_t a = 0; a < p.j.order(); ++a)
      for (std::size_t b = 0; b < p.j.order(); ++b)
        CHECK(p.j.cl_action[static_cast<std::size_t>(p.j.group->mul(static_cast<int>(a), static_cast<int>(b)))] ==
              p.j.cl_action[a] * p.j.cl_action[b]);
  }
  CHECK(run("f1").w.order() == 2);
  CHECK(run("p1xp3").j.order() == 1);
  CHECK(run("p1p1p1").j.order() == 6);
}

TEST_CASE("Weyl groups under change of basis") {
  std::mt19937 rng(3);
  for (auto stem : {"p1xp1", "dp6", "p2"}) {
    Fan f = bundled_fan(stem);
    f.class_basis.reset();
    IntMatrix g = IntMatrix::identity(2);
    g.add_row_multiple(0, 1, Int(2));
    g.add_row_multiple(1, 0, Int(-1));
    for (auto& r : f.rays) r = g * r;
    auto div = class_group(f);
    auto wd = weight_decomposition(div);
    auto w = fan_automorphisms(f);
    auto j = class_aut_group(w, div, wd);
    auto ref = run(stem);
    CHECK(w.order() == ref.w.order());
    CHECK(j.order() == ref.j.order());
    CHECK(subgroups(*j.group).size() == subgroups(*ref.j.group).size());
  }
}
