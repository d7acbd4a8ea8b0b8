#include "doctest.h"
#include "helpers.hpp"
#include "tdesc/omega.hpp"

using namespace tdesc;

TEST_CASE("canonical omega on P1 x P1") {
  auto t = prepare(bundled_fan("p1xp1"));
  auto o = canonical_omega(t);
  CHECK(o.classes == std::vector<IntVector>{iv({0, 1}), iv({1, 0}), iv({1, 1})});
  CHECK(o.h0 == std::vector<Int>{2, 2, 4});
  auto v = validate_omega(t, o);
  CHECK(v.ok());
  REQUIRE(v.kernel);
  CHECK(v.kernel->rank == 1);
  CHECK(v.kernel->act(1) == IntMatrix{{1}});
  CHECK(describe_target(target_shape(o)) == "P^3 x (P^1)^2");
  auto b = algebra_shape(o);
  REQUIRE(b.factors.size() == 2);
  CHECK(b.factors[0].degree == 2);
  CHECK(b.factors[0].center_degree == 2);
  CHECK(b.factors[1].degree == 4);
  CHECK(b.factors[1].center_degree == 1);
  auto bad = validate_omega(t, make_omega(t, {iv({1, 0})}));
  CHECK(!bad.j_stable);
  CHECK(!bad.ok());
}

TEST_CASE("projective spaces") {
  for (auto stem : {"p1", "p2", "p3"}) {
    auto t = prepare(bundled_fan(stem));
    auto o = canonical_omega(t);
    REQUIRE(o.classes == std::vector<IntVector>{iv({1})});
    CHECK(o.h0[0] == Int(static_cast<long>(t.fan.rank + 1)));
    CHECK(validate_omega(t, o).ok());
    CHECK(describe_algebra(algebra_shape(o)) == "M_" + std::to_string(t.fan.rank + 1) + " over k");
  }
}

TEST_CASE("Blunk's omega on dP6") {
  auto t = prepare(bundled_fan("dp6"));
  auto o = make_omega(t, {iv({1, 0, 0, 0}), iv({2, -1, -1, -1}), iv({1, -1, 0, 0}), iv({1, 0, -1, 0}),
                          iv({1, 0, 0, -1})});
  auto v = validate_omega(t, o);
  CHECK(v.j_stable);
  CHECK(v.globally_generated);
  CHECK(v.faithful);
  CHECK(v.kernel_coflasque);
  CHECK(v.ok());
  CHECK(describe_target(target_shape(o)) == "(P^2)^2 x (P^1)^3");
  auto b = algebra_shape(o);
  std::vector<std::pair<long, std::size_t>> shape;
  for (const auto& f : b.factors) shape.emplace_back(f.degree.get_si(), f.center_degree);
  std::sort(shape.begin(), shape.end());
  CHECK(shape == std::vector<std::pair<long, std::size_t>>{{2, 3}, {3, 2}});
}

TEST_CASE("canonical omega on dP6 contains Blunk's classes") {
  auto t = prepare(bundled_fan("dp6"));
  auto o = canonical_omega(t);
  for (auto c : {iv({1, 0, 0, 0}), iv({2, -1, -1, -1}), iv({1, -1, 0, 0}), iv({1, 0, -1, 0}), iv({1, 0, 0, -1})})
    CHECK(std::find(o.classes.begin(), o.classes.end(), c) != o.classes.end());
  CHECK(validate_omega(t, o).ok());
  // golden: the five nef generators, the three 2H - E_i - E_j and -K
  CHECK(o.classes == std::vector<IntVector>{iv({1, -1, 0, 0}), iv({1, 0, -1, 0}), iv({1, 0, 0, -1}),
                                            iv({1, 0, 0, 0}), iv({2, -1, -1, -1}), iv({2, -1, -1, 0}),
                                            iv({2, -1, 0, -1}), iv({2, 0, -1, -1}), iv({3, -1, -1, -1})});
  CHECK(o.h0 == std::vector<Int>{2, 2, 2, 3, 3, 4, 4, 4, 7});
}

TEST_CASE("canonical omega passes validation on every smooth projective bundled fan") {
  for (auto stem : {"p1", "p2", "p3", "p1xp1", "p1xp3", "p1p1p1", "f1", "f2", "dp6"}) {
    auto t = prepare(bundled_fan(stem));
    auto o = canonical_omega(t);
    auto v = validate_omega(t, o);
    CHECK_MESSAGE(v.ok(), stem);
    CHECK(is_surjective(omega_map(o)));
    CHECK(injectivity_verdict(t).verdict.proven());
    CHECK(is_flasque(*t.pic).holds);
  }
}
