#pragma once

// Laurent polynomials in s with coefficients in T.

#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include "longzeta/laurent.hpp"
#include "longzeta/ring_t.hpp"

namespace longzeta {

using ZetaPolynomial = Laurent<RingT>;

inline ZetaPolynomial constant(const RingT& c) { return ZetaPolynomial(c); }

/// `(<RingT>)*s^d` terms in ascending d, joined by " + "; "0" for zero.
inline std::string to_string(const ZetaPolynomial& z) {
  if (z.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : z.terms()) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.to_string() << ")*s^" << d;
  }
  return os.str();
}

inline ZetaPolynomial parse_zeta_polynomial(std::string_view text) {
  auto fail = [&](const char* why) {
    throw Error("cannot parse zeta polynomial '" + std::string(text) + "': " + why);
  };
  std::size_t pos = 0;
  while (pos < text.size() && text[pos] == ' ') ++pos;
  if (text.substr(pos) == "0") return {};
  std::vector<ZetaPolynomial::Term> terms;
  while (pos < text.size()) {
    if (text[pos] != '(') fail("expected '('");
    int depth = 0;
    std::size_t start = pos + 1;
    for (; pos < text.size(); ++pos) {
      if (text[pos] == '(') ++depth;
      else if (text[pos] == ')' && --depth == 0) break;
    }
    if (pos >= text.size()) fail("unbalanced parentheses");
    RingT c = RingT::parse(text.substr(start, pos - start));
    ++pos;
    if (text.substr(pos, 3) != "*s^") fail("expected '*s^'");
    pos += 3;
    std::size_t num = pos;
    if (pos < text.size() && text[pos] == '-') ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (num == pos) fail("expected exponent");
    terms.emplace_back(std::stoi(std::string(text.substr(num, pos - num))), c);
    if (pos == text.size()) break;
    if (text.substr(pos, 3) != " + ") fail("expected ' + '");
    pos += 3;
  }
  return ZetaPolynomial::from_terms(std::move(terms));
}

/// Returns r with y == q^r * x, or nullopt when no such integer exists.
///
/// q^r fixes the (p-q) part and shifts the q-part, so a single coefficient
/// with nonzero q-part pins the only candidate r.
inline std::optional<int> equal_up_to_q_power(const ZetaPolynomial& x, const ZetaPolynomial& y) {
  if (x == y) return 0;
  for (const auto& [d, cx] : x.terms()) {
    if (cx.lau().is_zero()) continue;
    RingT cy = y.coefficient(d);
    if (cy.lau().is_zero()) return std::nullopt;
    int r = *cy.lau().low_degree() - *cx.lau().low_degree();
    if (ZetaPolynomial(RingT::q(r)) * x == y) return r;
    return std::nullopt;
  }
  // Every q-part of x vanishes, so q^r * x == x for all r.
  return std::nullopt;
}

}  // namespace longzeta
