#include <catch_amalgamated.hpp>

#include <random>

#include "generators.hpp"
#include "longzeta/invariant.hpp"
#include "longzeta/moves.hpp"
#include "longzeta/oracle.hpp"

using namespace longzeta;

namespace {

const RingT one = RingT::one();
const RingT p = RingT::p();
const RingT q = RingT::q();

ZetaPolynomial s_pow(const RingT& c, int d) { return ZetaPolynomial::monomial(c, d); }

}  // namespace

TEST_CASE("incidence coefficients of the virtual kink") {
  const auto d = decompose(parse_code("O1+ V2+ U1+ V2-"));
  // O1 sits at position 0, strictly inside arc 0 = (-inf, V2+).
  CHECK(incidence_term(1, 0, d).passes_over);
  CHECK(incidence(1, 0, d) == p - one);
  CHECK(incidence(1, 1, d) == -p);  // (V2+, U1) comes into U1
  CHECK(incidence(1, 2, d) == one);  // (U1, V2-) emanates
  CHECK(incidence(1, 3, d).is_zero());
}

TEST_CASE("virtual kink zeta under the united walk") {
  const auto code = parse_code("O1+ V2+ U1+ V2-");
  CHECK(zeta(code) == s_pow(p - one, -1) - s_pow(p - one, 0));
  const auto split = zeta_split(code);
  CHECK(split.plus == s_pow(one, 0));
  CHECK(split.minus + split.plus == zeta(code));
  const auto c = certify_minimality(code);
  CHECK(c.k == 1);
  CHECK(c.det_B.is_zero());
  CHECK_FALSE(c.minimal);
  CHECK(c.cross_check_passed);
}

TEST_CASE("restart-per-half degrees break invariance under an Omega_1^p kink") {
  const auto code = parse_code("O1+ V2+ U1+ V2-");
  const auto kinked = apply(code, parse_move("R1_insert 4 + OU"));
  CHECK(zeta(kinked) == zeta(code));
  const auto restart = DegreeConvention::restart_per_half;
  CHECK(zeta(code, restart) == s_pow(p, 0) - s_pow(p, 1));
  CHECK_FALSE(zeta(kinked, restart) == zeta(code, restart));
}

TEST_CASE("classical knots have zeta = 0") {
  for (auto f : {Family::classical_trefoil, Family::classical_figure8}) {
    const auto k = generate(f);
    CHECK(zeta(k).is_zero());
    const auto s = zeta_split(k);
    CHECK(s.minus == -s.plus);
    CHECK(s.plus.top_degree() == 0);
    CHECK(std::abs(s.plus.coefficient(0).eval_pq1()) == 1);
    const auto c = certify_minimality(k);
    CHECK(c.k == 0);
    CHECK_FALSE(c.minimal);
  }
  CHECK(zeta_split(generate(Family::classical_trefoil)).plus ==
        s_pow(one - q + RingT::q(2), 0));
  CHECK(zeta_split(generate(Family::classical_figure8)).plus ==
        s_pow(-RingT::q(-2) + RingT::integer(3) * RingT::q(-1) - one, 0));
}

TEST_CASE("no classical crossings") {
  const auto code = parse_code("V1+ V2- V1- V2+");
  CHECK(zeta(code).is_zero());
  CHECK(zeta_split(code).minus == s_pow(-one, 0));
  CHECK(zeta_split(code).plus == s_pow(one, 0));
  CHECK_FALSE(certify_minimality(code).minimal);
  CHECK_THROWS_AS(build_matrix(code), Error);
  CHECK(zeta(DiagramCode{}).is_zero());
}

TEST_CASE("row sums vanish at s = 1") {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 300; ++i) {
    const auto code = gen::code(rng, 6, 3, 1);
    const auto a = build_matrix(code);
    for (std::size_t r = 0; r < a.size(); ++r) {
      RingT sum;
      for (std::size_t c = 0; c < a.size(); ++c) sum += a(r, c).eval_at_one();
      CHECK(sum.is_zero());
    }
    CHECK(zeta(code).eval_at_one().is_zero());
  }
}

TEST_CASE("top degree is at most k and the s^k coefficient is det B") {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 300; ++i) {
    const auto code = gen::code(rng, 6, 4, 1);
    const auto c = certify_minimality(code);
    CHECK(c.cross_check_passed);
    if (c.zeta_top) CHECK(*c.zeta_top <= static_cast<int>(c.k));
    CHECK(c.minimal == (c.zeta_top == static_cast<int>(c.k)));
    CHECK(virtual_lower_bound(code) <= c.k);
  }
}

TEST_CASE("zeta splits multiplicatively under connect sum") {
  std::mt19937_64 rng(59);
  for (int i = 0; i < 200; ++i) {
    const auto a = gen::code(rng, 4, 3), b = gen::code(rng, 4, 3);
    const auto s1 = zeta_split(a), s2 = zeta_split(b), s = zeta_split(connect_sum(a, b));
    CHECK(s.minus == -(s1.minus * s2.minus));
    CHECK(s.plus == s1.plus * s2.plus);
  }
}

TEST_CASE("certified diagrams times classical knots") {
  for (const char* dtext : {"O1+ V2- U1+ V2+", "O1+ U2+ V3+ U1+ O2+ V3-", "O1+ V2- V3- U1+ V2+ V3+"}) {
    const auto d = parse_code(dtext);
    const auto cd = certify_minimality(d);
    REQUIRE(cd.minimal);
    for (auto f : {Family::classical_trefoil, Family::classical_figure8}) {
      const auto k = generate(f);
      const auto dk = connect_sum(d, k);
      const auto plus = zeta_split(k).plus;
      CHECK(zeta(dk) == plus * zeta(d));
      const auto c = certify_minimality(dk);
      CHECK(c.minimal);
      CHECK(c.zeta_top == cd.zeta_top);
      CHECK(c.k == cd.k);
    }
  }
}

TEST_CASE("kink chains are certified") {
  for (int r = 1; r <= 4; ++r) {
    const auto c = certify_minimality(generate(Family::virtual_kink_chain, r));
    CHECK(c.minimal);
    CHECK(c.k == static_cast<std::size_t>(r));
    CHECK(c.zeta_top == r);
  }
}

TEST_CASE("determinant of A agrees with the permutation expansion") {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 60; ++i) {
    const auto code = gen::code(rng, 6, 3, 1);
    const auto a = build_matrix(code);
    CHECK(determinant(a) == oracle::perm_determinant(a));
  }
}

TEST_CASE("matrix is independent of the numbering") {
  std::mt19937_64 rng(67);
  for (int i = 0; i < 100; ++i) {
    const auto code = gen::code(rng, 5, 3, 1);
    auto renamed = code;
    const int top = code.max_id() + 1;
    for (auto& t : renamed.tokens) t.id = top - t.id;
    CHECK(zeta(renamed) == zeta(code));
  }
}
