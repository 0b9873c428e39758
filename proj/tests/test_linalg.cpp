#include <doctest.h>

#include <random>

#include "lindef/fields.hpp"
#include "lindef/matrix.hpp"
#include "test_support.hpp"

using namespace lindef;

TEST_CASE("FieldSpec accepts 0 and primes, rejects composites") {
  CHECK(FieldSpec{0}.is_rational());
  CHECK(FieldSpec{2}.characteristic() == 2);
  CHECK(FieldSpec{97}.characteristic() == 97);
  CHECK_THROWS_AS(FieldSpec{1}, BadParams);
  CHECK_THROWS_AS(FieldSpec{4}, BadParams);
  CHECK_THROWS_AS(FieldSpec{91}, BadParams);  // 7 * 13
  CHECK_THROWS_AS(FieldSpec{1UL << 40}, BadParams);
}

TEST_CASE("F_p arithmetic round trips") {
  for (unsigned long p : {2UL, 3UL, 97UL}) {
    FpField f(p);
    for (unsigned long a = 1; a < p; ++a) {
      CHECK(f.mul(a, f.inv(a)) == f.one());
      CHECK(f.add(a, f.neg(a)) == 0);
    }
    CHECK(f.from_int(-1) == p - 1);
  }
}

TEST_CASE("rank examples") {
  QField q;
  FpField f2(2);
  CHECK(rank(Matrix<QField>(0, 0, q), q) == 0);
  CHECK(rank(Matrix<QField>::identity(5, q), q) == 5);
  Matrix<FpField> rows(2, 2, f2);
  rows.at(0, 0) = 1; rows.at(0, 1) = 1;
  rows.at(1, 0) = 1; rows.at(1, 1) = 1;
  CHECK(rank(rows, f2) == 1);
}

TEST_CASE("kernel examples") {
  QField q;
  CHECK(kernel_basis(Matrix<QField>::identity(4, q), q).cols() == 0);
  CHECK(kernel_basis(Matrix<QField>(2, 3, q), q).cols() == 3);

  Matrix<QField> row(1, 2, q);
  row.at(0, 0) = q.one();
  row.at(0, 1) = q.one();
  auto ker = kernel_basis(row, q);
  REQUIRE(ker.cols() == 1);
  // proportional to (1, -1)
  CHECK(q.add(ker.at(0, 0), ker.at(1, 0)) == q.zero());
  CHECK_FALSE(q.is_zero(ker.at(0, 0)));
}

TEST_CASE("rank-nullity on random matrices") {
  std::mt19937 rng(7);
  QField q;
  FpField f3(3);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t r = rng() % 6, c = rng() % 7;
    auto mq = testing::random_matrix(r, c, q, rng);
    CHECK(rank(mq, q) + kernel_basis(mq, q).cols() == c);
    auto m3 = testing::random_matrix(r, c, f3, rng);
    CHECK(rank(m3, f3) + kernel_basis(m3, f3).cols() == c);
  }
}

TEST_CASE("specialization: rank over F_p <= rank over Q for integer matrices") {
  std::mt19937 rng(11);
  QField q;
  std::uniform_int_distribution<int> entry(-6, 6);
  for (unsigned long p : {2UL, 3UL, 5UL}) {
    FpField fp(p);
    for (int trial = 0; trial < 30; ++trial) {
      std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
      Matrix<QField> mq(r, c, q);
      Matrix<FpField> mp(r, c, fp);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
          int v = entry(rng);
          mq.at(i, j) = q.from_int(v);
          mp.at(i, j) = fp.from_int(v);
        }
      CHECK(rank(mp, fp) <= rank(mq, q));
    }
  }
}

TEST_CASE("complex homology: single zero map K -> K") {
  QField q;
  std::vector<Matrix<QField>> maps = {Matrix<QField>(1, 1, q)};
  auto dims = complex_homology_dims(maps, q);
  REQUIRE(dims.size() == 2);
  CHECK(dims[0] == 1);
  CHECK(dims[1] == 1);
}

TEST_CASE("complex homology: Koszul complex on two variables") {
  QField q;
  // evaluated at the full squarefree degree {1,2}: 1 <- 2 <- 1, exact
  Matrix<QField> d1(1, 2, q);
  d1.at(0, 0) = q.one();
  d1.at(0, 1) = q.one();
  Matrix<QField> d2(2, 1, q);
  d2.at(0, 0) = q.from_int(-1);
  d2.at(1, 0) = q.one();
  auto dims = complex_homology_dims(std::vector<Matrix<QField>>{d1, d2}, q);
  CHECK(dims == std::vector<std::size_t>{0, 0, 0});
  // at degree ∅ only position 0 survives with H_0 = K
  auto dims0 = complex_homology_dims(
      std::vector<Matrix<QField>>{Matrix<QField>(1, 0, q)}, q);
  CHECK(dims0 == std::vector<std::size_t>{1, 0});
}

TEST_CASE("complex homology rejects bad chains") {
  QField q;
  Matrix<QField> a(2, 2, q), b(3, 2, q);
  CHECK_THROWS_AS(complex_homology_dims(std::vector<Matrix<QField>>{a, b}, q),
                  ShapeMismatch);
  Matrix<QField> id2 = Matrix<QField>::identity(2, q);
  CHECK_THROWS_AS(complex_homology_dims(std::vector<Matrix<QField>>{id2, id2}, q),
                  CompositionNonzero);
}

TEST_CASE("homology dims are invariant under basis change") {
  std::mt19937 rng(23);
  QField q;
  for (int trial = 0; trial < 10; ++trial) {
    auto d1 = testing::random_matrix(3, 5, q, rng);
    auto d2 = kernel_basis(d1, q);  // d1 ∘ d2 = 0 by construction
    std::vector<Matrix<QField>> maps = {d1, d2};
    auto base = complex_homology_dims(maps, q);
    auto u0 = testing::random_invertible(3, q, rng);
    auto u1 = testing::random_invertible(5, q, rng);
    auto u2 = testing::random_invertible(d2.cols(), q, rng);
    std::vector<Matrix<QField>> conj = {
        matmul(u0, matmul(d1, inverse(u1, q), q), q),
        matmul(u1, matmul(d2, inverse(u2, q), q), q)};
    CHECK(complex_homology_dims(conj, q) == base);
  }
}

TEST_CASE("HomologySpace coordinates and representatives are consistent") {
  std::mt19937 rng(31);
  QField q;
  for (int trial = 0; trial < 10; ++trial) {
    auto dout = testing::random_matrix(2, 5, q, rng);
    auto ker = kernel_basis(dout, q);
    Matrix<QField> din(5, static_cast<std::size_t>(ker.cols() > 0 ? 1 : 0), q);
    if (ker.cols() > 0)
      for (std::size_t r = 0; r < 5; ++r) din.at(r, 0) = ker.at(r, 0);
    HomologySpace<QField> h(dout, din, q);
    for (std::size_t k = 0; k < h.dim(); ++k) {
      auto rep = h.representative(k);
      auto coords = h.coords(rep);
      for (std::size_t j = 0; j < coords.size(); ++j)
        CHECK(coords[j] == (j == k ? q.one() : q.zero()));
    }
  }
}
