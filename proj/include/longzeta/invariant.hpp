#pragma once

// The zeta-polynomial of a long virtual knot diagram.
//
// Row i and column j of A(D) belong to the i-th and j-th classical crossing;
// column j collects the arcs of the long arc emanating from crossing j (the
// united long arc gamma_- u gamma_+ sits in the column of the crossing that
// gamma_+ emanates from):
//   A_ij = sum over arcs a of column j of [v_i : a] s^deg(a).
// zeta(D) = det A(D) is invariant up to a factor q^r.

#include <cstddef>
#include <optional>
#include <string>

#include "longzeta/determinant.hpp"
#include "longzeta/diagram.hpp"
#include "longzeta/errors.hpp"
#include "longzeta/ring_t.hpp"
#include "longzeta/zeta_polynomial.hpp"

namespace longzeta {

/// [v : a] = e1 * 1 + e2 * (t^w - 1) + e3 * (-t^w), t = p for early
/// overcrossings and q for early undercrossings, w the writhe sign.
struct IncidenceTerm {
  bool emanates = false;   ///< e1: a starts at the under-passage of v
  bool passes_over = false;  ///< e2: the over-passage of v lies inside a
  bool comes_into = false;   ///< e3: a ends at the under-passage of v
  Generator t = Generator::p;
  int sign = 1;

  RingT value() const {
    const RingT tw = RingT::gen_power(t, sign);
    RingT v;
    if (emanates) v += RingT::one();
    if (passes_over) v += tw - RingT::one();
    if (comes_into) v -= tw;
    return v;
  }
};

inline IncidenceTerm incidence_term(int crossing, std::size_t arc, const Decomposition& d) {
  const Arc& a = d.arcs.at(arc);
  const int under = static_cast<int>(d.under_position.at(crossing));
  const int over = static_cast<int>(d.over_position.at(crossing));
  IncidenceTerm term;
  term.emanates = a.from == under;
  term.comes_into = a.to == under;
  term.passes_over = a.from < over && over < a.to;
  term.t = d.early_class.at(crossing) == EarlyClass::early_over ? Generator::p : Generator::q;
  term.sign = d.signs.at(crossing);
  return term;
}

inline RingT incidence(int crossing, std::size_t arc, const Decomposition& d) {
  return incidence_term(crossing, arc, d).value();
}

/// Which halves of the united long arc enter its column.
enum class UnitedPart { whole, minus_only, plus_only };

inline Matrix<ZetaPolynomial> build_matrix(const Decomposition& d, UnitedPart part = UnitedPart::whole) {
  const std::size_t n = d.n();
  if (n == 0) throw Error("the incidence matrix needs at least one classical crossing");
  Matrix<ZetaPolynomial> m(n);
  for (std::size_t la = 0; la < d.long_arcs.size(); ++la) {
    const LongArc& l = d.long_arcs[la];
    if (part == UnitedPart::minus_only && l.is_final) continue;
    if (part == UnitedPart::plus_only && l.is_initial) continue;
    const std::size_t j = d.column_of_long_arc(la);
    for (std::size_t a : l.arcs) {
      for (std::size_t i = 0; i < n; ++i) {
        RingT v = incidence(d.crossings[i], a, d);
        if (!v.is_zero()) m(i, j) += ZetaPolynomial::monomial(v, d.arcs[a].degree);
      }
    }
  }
  return m;
}

inline Matrix<ZetaPolynomial> build_matrix(const DiagramCode& code,
                                           DegreeConvention conv = DegreeConvention::united_walk) {
  return build_matrix(decompose(code, conv));
}

/// det A(D); 0 for diagrams without classical crossings (they are trivial,
/// and the trivial knot with one kink already has zeta = 0).
inline ZetaPolynomial zeta(const Decomposition& d) {
  if (d.n() == 0) return {};
  return determinant(build_matrix(d));
}

inline ZetaPolynomial zeta(const DiagramCode& code, DegreeConvention conv = DegreeConvention::united_walk) {
  return zeta(decompose(code, conv));
}

struct ZetaSplit {
  ZetaPolynomial minus;
  ZetaPolynomial plus;
};

/// zeta = zeta_- + zeta_+, restricting the united column to gamma_- or gamma_+.
/// Without classical crossings: (-1, 1), the values that keep
/// zeta_-(D1*D2) = -zeta_-(D1) zeta_-(D2) and zeta_+(D1*D2) = zeta_+(D1) zeta_+(D2).
inline ZetaSplit zeta_split(const Decomposition& d) {
  if (d.n() == 0) return {ZetaPolynomial(-RingT::one()), ZetaPolynomial(RingT::one())};
  return {determinant(build_matrix(d, UnitedPart::minus_only)), determinant(build_matrix(d, UnitedPart::plus_only))};
}

inline ZetaSplit zeta_split(const DiagramCode& code, DegreeConvention conv = DegreeConvention::united_walk) {
  return zeta_split(decompose(code, conv));
}

/// B_ij = sum of [v_i : a] over arcs a of column j whose degree equals the
/// number of increasing passages in that column, i.e. the s^top coefficient
/// of column j.
inline Matrix<RingT> leading_matrix(const Decomposition& d) {
  const std::size_t n = d.n();
  if (n == 0) throw Error("the leading matrix needs at least one classical crossing");
  Matrix<RingT> b(n);
  for (std::size_t j = 0; j < n; ++j) {
    const int threshold = d.column_increasing_count(j);
    const auto walk = d.column_arcs(j);
    std::vector<std::size_t> hits;
    for (std::size_t w = 0; w < walk.size(); ++w)
      if (d.arcs[walk[w]].degree == threshold) hits.push_back(w);
    if (d.convention == DegreeConvention::united_walk && hits.size() > 1) {
      // Only the two pieces of the arc through infinity may share the top degree.
      const bool junction = d.united_column && j == *d.united_column && hits.size() == 2 &&
                            hits[1] == hits[0] + 1 && d.arcs[walk[hits[0]]].to == static_cast<int>(d.token_count) &&
                            d.arcs[walk[hits[1]]].from == -1;
      if (!junction)
        throw InternalError("leading_matrix: column " + std::to_string(j) + " has " + std::to_string(hits.size()) +
                            " arcs at the top degree");
    }
    for (auto w : hits)
      for (std::size_t i = 0; i < n; ++i) b(i, j) += incidence(d.crossings[i], walk[w], d);
  }
  return b;
}

inline Matrix<RingT> leading_matrix(const DiagramCode& code, DegreeConvention conv = DegreeConvention::united_walk) {
  return leading_matrix(decompose(code, conv));
}

struct MinimalityCertificate {
  std::size_t k = 0;
  RingT det_B;
  RingT sk_coefficient;
  std::optional<int> zeta_top;
  bool minimal = false;
  bool cross_check_passed = false;
  ZetaPolynomial zeta;
};

/// det B != 0 means deg_s zeta = k, so no equivalent diagram has fewer
/// virtual crossings. det B = 0 certifies nothing. Throws InternalError when
/// det B differs from the s^k coefficient of zeta.
inline MinimalityCertificate certify_minimality(const DiagramCode& code,
                                                DegreeConvention conv = DegreeConvention::united_walk) {
  const Decomposition d = decompose(code, conv);
  MinimalityCertificate c;
  c.k = d.virtual_count;
  c.zeta = zeta(d);
  c.zeta_top = c.zeta.top_degree();
  c.sk_coefficient = c.zeta.coefficient(static_cast<int>(c.k));
  // No classical crossings: zeta = 0, and B is taken to be 0 as well.
  c.det_B = d.n() == 0 ? RingT{} : determinant(leading_matrix(d));
  c.cross_check_passed = c.det_B == c.sk_coefficient;
  c.minimal = !c.det_B.is_zero();
  if (!c.cross_check_passed)
    throw InternalError("certify_minimality: det B = " + c.det_B.to_string() + " but the s^" + std::to_string(c.k) +
                        " coefficient of zeta is " + c.sk_coefficient.to_string() + " for " + render(code));
  return c;
}

/// Lower bound on the virtual crossing number of every equivalent diagram.
inline std::size_t virtual_lower_bound(const DiagramCode& code) {
  auto top = zeta(code).top_degree();
  return top && *top > 0 ? static_cast<std::size_t>(*top) : 0;
}

}  // namespace longzeta
