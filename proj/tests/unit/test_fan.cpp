#include "doctest.h"
#include "helpers.hpp"

#include <random>
#include <set>

using namespace tdesc;

TEST_CASE("fan validation") {
  CHECK(validate_fan(bundled_fan("p1")).valid());
  auto f = make_fan(2, {iv({2, 0}), iv({0, 1})}, {{0, 1}});
  auto v = validate_fan(f);
  REQUIRE(!v.valid());
  CHECK(v.violations[0] == "ray 0 not primitive");
  auto overlap = make_fan(2, {iv({1, 0}), iv({0, 1}), iv({1, 1}), iv({1, -1})}, {{0, 1}, {2, 3}});
  auto o = validate_fan(overlap);
  REQUIRE(!o.valid());
  CHECK(o.violations.back() == "cones 0 and 1: intersection not a face");
  auto halfplane = make_fan(2, {iv({1, 0}), iv({0, 1}), iv({-1, 0})}, {{0, 1, 2}});
  CHECK(!validate_fan(halfplane).valid());
  for (auto name : bundled_names("fans/")) {
    auto text = bundled_file(name);
    CHECK_MESSAGE(validate_fan(fan_from_json(parse_json_text(*text))).valid(), name);
  }
}

TEST_CASE("fan predicates") {
  CHECK(is_smooth(bundled_fan("p2")));
  CHECK(!is_smooth(make_fan(2, {iv({1, 0}), iv({1, 2})}, {{0, 1}})));
  CHECK(is_smooth(bundled_fan("dp6")));
  CHECK(is_complete(bundled_fan("p1xp1")));
  CHECK(!is_complete(make_fan(2, {iv({1, 0}), iv({0, 1})}, {{0, 1}})));
  CHECK(is_complete(bundled_fan("dp6")));
  for (auto stem : {"p1", "p2", "p3", "p1xp1", "p1xp3", "p1p1p1", "f1", "f2", "dp6"}) {
    auto f = bundled_fan(stem);
    CHECK_MESSAGE(is_complete(f), stem);
    CHECK_MESSAGE(is_projective(f), stem);
    CHECK_MESSAGE(is_smooth(f), stem);
  }
  auto prism = bundled_fan("twisted_prism");
  CHECK(is_complete(prism));
  CHECK(is_simplicial(prism));
  CHECK(!is_smooth(prism));
  CHECK(!is_projective(prism));
}

TEST_CASE("predicates invariant under relabelling and change of basis") {
  std::mt19937 rng(11);
  for (auto stem : {"p2", "p1xp1", "dp6", "f2", "twisted_prism", "p1p1p1"}) {
    Fan f = bundled_fan(stem);
    f.class_basis.reset();
    for (int trial = 0; trial < 3; ++trial) {
      // random unimodular matrix from elementary operations
      IntMatrix g = IntMatrix::identity(f.rank);
      for (int k = 0; k < 6 && f.rank > 1; ++k) {
        std::size_t a = rng() % f.rank, b = rng() % f.rank;
        if (a != b) g.add_row_multiple(a, b, Int(static_cast<long>(rng() % 5) - 2));
      }
      std::vector<int> perm(f.num_rays());
      for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
      std::shuffle(perm.begin(), perm.end(), rng);
      Fan h;
      h.rank = f.rank;
      h.rays.resize(f.num_rays());
      for (std::size_t i = 0; i < f.num_rays(); ++i) h.rays[static_cast<std::size_t>(perm[i])] = g * f.rays[i];
      for (const auto& c : f.max_cones) {
        RaySet d;
        for (int i : c) d.push_back(perm[static_cast<std::size_t>(i)]);
        std::sort(d.begin(), d.end());
        h.max_cones.push_back(d);
      }
      CHECK(validate_fan(h).valid());
      CHECK(is_smooth(h) == is_smooth(f));
      CHECK(is_complete(h) == is_complete(f));
      CHECK(is_projective(h) == is_projective(f));
      CHECK(class_group(h).cl_group == class_group(f).cl_group);
    }
  }
}

TEST_CASE("class groups") {
  auto p2 = class_group(bundled_fan("p2"));
  CHECK(p2.cl_group == FGAbelianGroup::free(1));
  for (std::size_t r = 0; r < 3; ++r) CHECK(p2.ray_class(r) == iv({1}));
  auto q = class_group(bundled_fan("p1xp1"));
  CHECK(q.cl_group == FGAbelianGroup::free(2));
  CHECK(q.ray_class(0) == iv({1, 0}));
  CHECK(q.ray_class(1) == iv({0, 1}));
  CHECK(q.ray_class(2) == iv({1, 0}));
  CHECK(q.ray_class(3) == iv({0, 1}));
  auto d = class_group(bundled_fan("dp6"));
  CHECK(d.cl_group == FGAbelianGroup::free(4));
  std::set<IntVector> classes;
  for (std::size_t r = 0; r < 6; ++r) classes.insert(d.ray_class(r));
  CHECK(classes.size() == 6);
  CHECK(d.ray_class(3) == iv({1, 0, -1, -1}));
  for (auto stem : {"p1", "p2", "p3", "p1xp1", "p1xp3", "p1p1p1", "f1", "f2", "dp6", "twisted_prism"}) {
    auto f = bundled_fan(stem);
    auto dt = class_group(f);
    CHECK((dt.deg * dt.ray_matrix).is_zero());
    CHECK(f.rank + dt.cl_group.free_rank() == f.num_rays());
    if (is_smooth(f)) CHECK(dt.cl_group.is_free());
  }
  // Weighted projective plane P(1,1,2): Cl = Z, no torsion but singular.
  auto wp = make_fan(2, {iv({1, 0}), iv({0, 1}), iv({-1, -2})}, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(class_group(wp).cl_group == FGAbelianGroup::free(1));
  // P2 / (Z/3): rays (1,0),(0,1),(-1,-1) in a finer lattice gives torsion.
  auto tors = make_fan(2, {iv({1, 0}), iv({1, 3}), iv({-2, -3})}, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(class_group(tors).cl_group.to_string() == "Z/3 + Z");
  CHECK_THROWS(class_group(make_fan(2, {iv({1, 0})}, {{0}})));
}

TEST_CASE("irrelevant ideal") {
  auto g = irrelevant_generators(bundled_fan("p1"));
  CHECK(g == std::vector<RaySet>{{0}, {1}});
  auto p2 = irrelevant_generators(bundled_fan("p2"));
  CHECK(p2 == std::vector<RaySet>{{0}, {1}, {2}});
  auto q = irrelevant_generators(bundled_fan("p1xp1"));
  CHECK(q == std::vector<RaySet>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
}
