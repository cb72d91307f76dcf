#include <catch_amalgamated.hpp>

#include <random>

#include "generators.hpp"
#include "longzeta/determinant.hpp"
#include "longzeta/oracle.hpp"

using namespace longzeta;

TEST_CASE("integer determinants") {
  CHECK(determinant(Matrix<std::int64_t>(0)) == 1);
  Matrix<std::int64_t> m(2);
  m(0, 0) = 0;
  m(0, 1) = 1;
  m(1, 0) = 1;
  m(1, 1) = 0;
  CHECK(determinant(m) == -1);
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> c(-9, 9);
  for (std::size_t n = 1; n <= 7; ++n) {
    Matrix<std::int64_t> a(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = c(rng);
    CHECK(determinant(a) == oracle::perm_determinant(a));
  }
}

TEST_CASE("zero pivot needs no division") {
  // Leading entry zero and a nilpotent everywhere else.
  Matrix<RingT> m(2);
  m(0, 1) = RingT::p_minus_q();
  m(1, 0) = RingT::q() - RingT::one();
  m(1, 1) = RingT::p();
  CHECK(determinant(m) == oracle::perm_determinant(m));
  CHECK(determinant(m).is_zero());
}

TEST_CASE("Berkowitz matches Leibniz over T and T[s, s^-1]") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 6;
    Matrix<RingT> a(n);
    Matrix<ZetaPolynomial> z(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) = gen::ring(rng);
        z(i, j) = gen::zeta_poly(rng, 2);
      }
    CHECK(determinant(a) == oracle::perm_determinant(a));
    CHECK(determinant(z) == oracle::perm_determinant(z));
  }
}

TEST_CASE("row swap negates") {
  std::mt19937_64 rng(31);
  Matrix<RingT> a(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) a(i, j) = gen::ring(rng);
  Matrix<RingT> b = a;
  b.swap_rows(0, 2);
  CHECK(determinant(b) == -determinant(a));
}
