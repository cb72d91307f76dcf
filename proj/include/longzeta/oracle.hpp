#pragma once

// Brute-force verifiers, independent of the normal-form arithmetic.
//
// Membership in T is decided on raw two-variable Laurent polynomials through
// two specializations that both kill (p-1)(p-q) and (q-1)(p-q):
//   (i)  p -> q              lands in Z[q, q^-1]
//   (ii) q -> 1, p -> 1 + e  lands in Z[e]/(e^2)
// Together they separate T, since (f, a) maps to (f, (f(1), a)).

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "longzeta/determinant.hpp"
#include "longzeta/ring_t.hpp"
#include "longzeta/zeta_polynomial.hpp"

namespace longzeta::oracle {

/// Element of Z[p, p^-1, q, q^-1]: (p-exponent, q-exponent) -> coefficient.
class RawLaurentPQ {
 public:
  using Key = std::pair<int, int>;

  RawLaurentPQ() = default;

  static RawLaurentPQ monomial(std::int64_t c, int p_exp, int q_exp) {
    RawLaurentPQ r;
    if (c != 0) r.terms_[{p_exp, q_exp}] = c;
    return r;
  }
  static RawLaurentPQ constant(std::int64_t c) { return monomial(c, 0, 0); }
  static RawLaurentPQ p(int m = 1) { return monomial(1, m, 0); }
  static RawLaurentPQ q(int m = 1) { return monomial(1, 0, m); }

  const std::map<Key, std::int64_t>& terms() const { return terms_; }

  friend RawLaurentPQ operator+(RawLaurentPQ a, const RawLaurentPQ& b) {
    for (const auto& [k, c] : b.terms_) a.add(k, c);
    return a;
  }
  friend RawLaurentPQ operator-(RawLaurentPQ a, const RawLaurentPQ& b) {
    for (const auto& [k, c] : b.terms_) a.add(k, detail::checked_sub(0, c));
    return a;
  }
  friend RawLaurentPQ operator*(const RawLaurentPQ& a, const RawLaurentPQ& b) {
    RawLaurentPQ r;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_)
        r.add({ka.first + kb.first, ka.second + kb.second}, detail::checked_mul(ca, cb));
    return r;
  }
  friend bool operator==(const RawLaurentPQ&, const RawLaurentPQ&) = default;

 private:
  void add(Key k, std::int64_t c) {
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      if (c != 0) terms_.emplace(k, c);
      return;
    }
    it->second = detail::checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }

  std::map<Key, std::int64_t> terms_;
};

/// value + deriv * e with e^2 = 0.
struct DualNumber {
  std::int64_t value = 0;
  std::int64_t deriv = 0;

  friend DualNumber operator+(DualNumber a, DualNumber b) {
    return {detail::checked_add(a.value, b.value), detail::checked_add(a.deriv, b.deriv)};
  }
  friend DualNumber operator*(DualNumber a, DualNumber b) {
    return {detail::checked_mul(a.value, b.value),
            detail::checked_add(detail::checked_mul(a.value, b.deriv), detail::checked_mul(a.deriv, b.value))};
  }
  friend bool operator==(DualNumber, DualNumber) = default;
};

/// Map (i): p -> q.
inline QLaurent specialize_p_to_q(const RawLaurentPQ& x) {
  std::vector<QLaurent::Term> terms;
  for (const auto& [k, c] : x.terms()) terms.emplace_back(k.first + k.second, c);
  return QLaurent::from_terms(std::move(terms));
}

/// Map (ii): q -> 1, p -> 1 + e. (1 + e)^m = 1 + m e, also for m < 0.
inline DualNumber specialize_dual(const RawLaurentPQ& x) {
  DualNumber acc;
  for (const auto& [k, c] : x.terms()) acc = acc + DualNumber{c, 0} * DualNumber{1, k.first};
  return acc;
}

inline bool raw_equal_in_T(const RawLaurentPQ& x, const RawLaurentPQ& y) {
  RawLaurentPQ d = x - y;
  return specialize_p_to_q(d).is_zero() && specialize_dual(d) == DualNumber{};
}

/// Substitutes p = q + e, expands with e^2 = 0 and q^m e = e.
inline RingT raw_reduce(const RawLaurentPQ& x) {
  std::vector<QLaurent::Term> terms;
  std::int64_t eps = 0;
  for (const auto& [k, c] : x.terms()) {
    terms.emplace_back(k.first + k.second, c);
    eps = detail::checked_add(eps, detail::checked_mul(c, k.first));
  }
  return {QLaurent::from_terms(std::move(terms)), eps};
}

/// (f, a) -> f(q) + a (p - q).
inline RawLaurentPQ render_back(const RingT& x) {
  RawLaurentPQ r;
  for (const auto& [k, c] : x.lau().terms()) r = r + RawLaurentPQ::monomial(c, 0, k);
  return r + RawLaurentPQ::constant(x.eps()) * (RawLaurentPQ::p() - RawLaurentPQ::q());
}

inline constexpr std::size_t kMaxPermutationSize = 8;

/// Leibniz expansion; only for n <= 8.
template <class R>
R perm_determinant(const Matrix<R>& m) {
  const std::size_t n = m.size();
  if (n > kMaxPermutationSize)
    throw std::length_error("perm_determinant: size " + std::to_string(n) + " exceeds " +
                            std::to_string(kMaxPermutationSize));
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  R total{};
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    R term = ring_one<R>();
    for (std::size_t i = 0; i < n && !(term == R{}); ++i) term = term * m(i, perm[i]);
    total = (inversions % 2 == 0) ? total + term : total - term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace longzeta::oracle
