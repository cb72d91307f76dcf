#include <catch_amalgamated.hpp>

#include <limits>
#include <random>

#include "longzeta/laurent.hpp"

using longzeta::QLaurent;

namespace {

QLaurent random_laurent(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> e(-4, 4), c(-6, 6), count(0, 5);
  std::vector<QLaurent::Term> terms;
  for (int t = count(rng); t > 0; --t) terms.emplace_back(e(rng), c(rng));
  return QLaurent::from_terms(terms);
}

}  // namespace

TEST_CASE("from_terms combines, sorts and drops zeros") {
  auto x = QLaurent::from_terms({{2, 3}, {-1, 4}, {2, -3}, {0, 0}, {-1, 1}});
  REQUIRE(x.size() == 1);
  CHECK(x.coefficient(-1) == 5);
  CHECK(x.coefficient(2) == 0);
  CHECK(x.top_degree() == -1);
  CHECK(x.low_degree() == -1);
}

TEST_CASE("zero polynomial has no degree") {
  QLaurent z;
  CHECK(z.is_zero());
  CHECK_FALSE(z.top_degree().has_value());
  CHECK_FALSE(z.low_degree().has_value());
  CHECK(QLaurent(0).is_zero());
}

TEST_CASE("multiplication with negative exponents") {
  auto a = QLaurent::from_terms({{-1, 1}, {1, 1}});  // q^-1 + q
  auto b = QLaurent::from_terms({{-1, 1}, {1, -1}});  // q^-1 - q
  CHECK(a * b == QLaurent::from_terms({{-2, 1}, {2, -1}}));
  CHECK((a * b).eval_at_one() == 0);
  CHECK(a.shifted(3) == QLaurent::from_terms({{2, 1}, {4, 1}}));
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    auto a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == QLaurent{});
    CHECK(-(-a) == a);
    CHECK((a * b).eval_at_one() == a.eval_at_one() * b.eval_at_one());
    auto acc = a;
    acc += b;
    acc -= c;
    acc *= b;
    CHECK(acc == (a + b - c) * b);
  }
}

TEST_CASE("coefficient overflow is reported") {
  const auto big = QLaurent::monomial(std::numeric_limits<std::int64_t>::max(), 0);
  CHECK_THROWS_AS(big + big, std::overflow_error);
  CHECK_THROWS_AS(big * QLaurent(2), std::overflow_error);
}
