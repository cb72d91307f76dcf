#include <catch_amalgamated.hpp>

#include <random>

#include "generators.hpp"
#include "longzeta/oracle.hpp"

using namespace longzeta;
using oracle::DualNumber;
using oracle::RawLaurentPQ;

TEST_CASE("both specializations kill the relations") {
  const auto p = RawLaurentPQ::p(), q = RawLaurentPQ::q(), one = RawLaurentPQ::constant(1);
  for (const auto& rel : {(p - one) * (p - q), (q - one) * (p - q)}) {
    CHECK(oracle::specialize_p_to_q(rel).is_zero());
    CHECK(oracle::specialize_dual(rel) == DualNumber{});
    CHECK(oracle::raw_equal_in_T(rel, RawLaurentPQ{}));
  }
  CHECK_FALSE(oracle::raw_equal_in_T(p, q));
  CHECK_FALSE(oracle::raw_equal_in_T(p, one));
}

TEST_CASE("specializations are ring homomorphisms") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    const auto a = gen::raw(rng), b = gen::raw(rng);
    CHECK(oracle::specialize_p_to_q(a * b) == oracle::specialize_p_to_q(a) * oracle::specialize_p_to_q(b));
    CHECK(oracle::specialize_dual(a * b) == oracle::specialize_dual(a) * oracle::specialize_dual(b));
    CHECK(oracle::specialize_dual(a + b) == oracle::specialize_dual(a) + oracle::specialize_dual(b));
  }
}

TEST_CASE("dual specialization of p powers") {
  CHECK(oracle::specialize_dual(RawLaurentPQ::p(-3)) == DualNumber{1, -3});
  CHECK(oracle::specialize_dual(RawLaurentPQ::p(2) * RawLaurentPQ::q(5)) == DualNumber{1, 2});
}

TEST_CASE("reduction is the identity on rendered normal forms") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 300; ++i) {
    const RingT x = gen::ring(rng);
    CHECK(oracle::raw_reduce(oracle::render_back(x)) == x);
  }
}

TEST_CASE("permutation expansion") {
  Matrix<std::int64_t> m(3);
  const std::int64_t v[3][3] = {{2, -1, 0}, {1, 3, 4}, {0, 5, -2}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = v[i][j];
  CHECK(oracle::perm_determinant(m) == -54);
  CHECK(oracle::perm_determinant(Matrix<std::int64_t>(0)) == 1);
  CHECK_THROWS_AS(oracle::perm_determinant(Matrix<std::int64_t>(9)), std::length_error);
}
