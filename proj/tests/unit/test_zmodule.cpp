#include "doctest.h"
#include "tdesc/zmodule.hpp"

#include <random>

using namespace tdesc;

TEST_CASE("snf of small matrices") {
  IntMatrix a{{2, 4}, {6, 8}};
  auto s = snf(a);
  CHECK(s.U * a * s.V == s.D);
  CHECK(s.D == IntMatrix{{2, 0}, {0, 4}});
  CHECK(snf(IntMatrix::identity(3)).D == IntMatrix::identity(3));
  CHECK(snf(IntMatrix(2, 2)).D.is_zero());
}

TEST_CASE("snf on random matrices") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-6, 6), dim(1, 5);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = static_cast<std::size_t>(dim(rng)), c = static_cast<std::size_t>(dim(rng));
    IntMatrix a(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) a(i, j) = entry(rng);
    auto s = snf(a);
    REQUIRE(s.U * a * s.V == s.D);
    CHECK(is_unimodular(s.U));
    CHECK(is_unimodular(s.V));
    auto d = s.diagonal();
    for (std::size_t i = 0; i + 1 < s.rank; ++i) CHECK(mpz_divisible_p(d[i + 1].get_mpz_t(), d[i].get_mpz_t()));
    if (r == c) {
      Int det = abs(determinant(a));
      Int prod = 1;
      for (std::size_t i = 0; i < r; ++i) prod *= s.D(i, i);
      CHECK(det == prod);
    }
    for (std::size_t j = 0; j < kernel_basis(a).cols(); ++j) CHECK(is_zero(a * kernel_basis(a).col(j)));
  }
}

TEST_CASE("cokernels") {
  CHECK(cokernel(IntMatrix{{2}}).group().to_string() == "Z/2");
  CHECK(cokernel(IntMatrix{{1}, {1}}).group() == FGAbelianGroup::free(1));
  IntMatrix dp6{{1, 0}, {0, 1}, {-1, -1}, {-1, 0}, {0, -1}, {1, 1}};
  CHECK(cokernel(dp6).group() == FGAbelianGroup::free(4));
  auto q = cokernel(IntMatrix{{2, 0}, {0, 3}});
  CHECK(q.group().order() == 6);
}

TEST_CASE("solve_linear") {
  auto a = solve_linear(IntMatrix{{2}}, {Int(4)});
  REQUIRE(a.particular);
  CHECK((*a.particular)[0] == 2);
  CHECK(a.kernel.cols() == 0);
  CHECK(!solve_linear(IntMatrix{{2}}, {Int(3)}).particular);
  auto b = solve_linear(IntMatrix{{1, 1}}, {Int(1)});
  REQUIRE(b.particular);
  CHECK((*b.particular)[0] + (*b.particular)[1] == 1);
  REQUIRE(b.kernel.cols() == 1);
  CHECK(b.kernel(0, 0) == -b.kernel(1, 0));
}

TEST_CASE("equivariant sections") {
  IntMatrix swap{{0, 1}, {1, 0}};
  CHECK(!solve_equivariant_section({swap}, {IntMatrix{{1}}}, IntMatrix{{1, 1}}));
  IntMatrix p3{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
  IntMatrix pi{{1, 0, 1}, {0, 1, 1}};
  auto s = solve_equivariant_section({p3}, {swap}, pi);
  REQUIRE(s);
  CHECK((pi * *s).is_identity());
  CHECK(p3 * *s == *s * swap);
  CHECK_THROWS_WITH(solve_equivariant_section({IntMatrix{{1}}}, {IntMatrix{{1}}}, IntMatrix{{2}}),
                    "not a surjection");
}

TEST_CASE("equivariant section agrees with bounded search") {
  // Rank <= 3 instances: when the solver reports no section, entries in
  // [-3, 3] do not contain one either.
  IntMatrix swap{{0, 1}, {1, 0}};
  IntMatrix sign{{-1}};
  IntMatrix pi{{1, -1}};
  CHECK(!solve_equivariant_section({swap}, {sign}, pi));
  bool found = false;
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b) {
      IntMatrix s{{a}, {b}};
      if ((pi * s).is_identity() && swap * s == s * sign) found = true;
    }
  CHECK(!found);
}
