#pragma once

// Sparse Laurent polynomials in one variable over a commutative ring.
//
// Terms are kept sorted by exponent with no zero coefficients, so equality
// is structural. Integer coefficients use overflow-checked arithmetic.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

namespace longzeta {

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("longzeta: integer overflow in addition");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("longzeta: integer overflow in subtraction");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("longzeta: integer overflow in multiplication");
  return r;
}

template <class R>
R ring_add(const R& a, const R& b) {
  if constexpr (std::is_same_v<R, std::int64_t>) return checked_add(a, b);
  else return a + b;
}

template <class R>
R ring_sub(const R& a, const R& b) {
  if constexpr (std::is_same_v<R, std::int64_t>) return checked_sub(a, b);
  else return a - b;
}

template <class R>
R ring_mul(const R& a, const R& b) {
  if constexpr (std::is_same_v<R, std::int64_t>) return checked_mul(a, b);
  else return a * b;
}

template <class R>
bool ring_is_zero(const R& a) {
  return a == R{};
}

}  // namespace detail

template <class Coeff>
class Laurent {
 public:
  using coefficient_type = Coeff;
  using Term = std::pair<int, Coeff>;

  Laurent() = default;

  /// Constant polynomial.
  explicit Laurent(Coeff c) {
    if (!detail::ring_is_zero(c)) terms_.emplace_back(0, std::move(c));
  }

  static Laurent monomial(Coeff c, int exponent) {
    Laurent r;
    if (!detail::ring_is_zero(c)) r.terms_.emplace_back(exponent, std::move(c));
    return r;
  }

  /// Builds from arbitrary (exponent, coefficient) pairs; duplicates are summed.
  static Laurent from_terms(std::vector<Term> terms) {
    Laurent r;
    r.terms_ = std::move(terms);
    r.normalize();
    return r;
  }

  static Laurent from_terms(std::initializer_list<Term> terms) { return from_terms(std::vector<Term>(terms)); }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  std::optional<int> top_degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.back().first;
  }

  std::optional<int> low_degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.front().first;
  }

  Coeff coefficient(int exponent) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                               [](const Term& t, int e) { return t.first < e; });
    if (it != terms_.end() && it->first == exponent) return it->second;
    return Coeff{};
  }

  /// Sum of all coefficients, i.e. the value at variable = 1.
  Coeff eval_at_one() const {
    Coeff acc{};
    for (const auto& [e, c] : terms_) acc = detail::ring_add(acc, c);
    return acc;
  }

  /// Multiplies by variable^k.
  Laurent shifted(int k) const {
    Laurent r = *this;
    for (auto& t : r.terms_) t.first += k;
    return r;
  }

  Laurent operator-() const {
    Laurent r = *this;
    for (auto& t : r.terms_) t.second = detail::ring_sub(Coeff{}, t.second);
    return r;
  }

  friend Laurent operator+(const Laurent& a, const Laurent& b) { return merge(a, b, false); }
  friend Laurent operator-(const Laurent& a, const Laurent& b) { return merge(a, b, true); }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Term> raw;
    raw.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) raw.emplace_back(ea + eb, detail::ring_mul(ca, cb));
    return from_terms(std::move(raw));
  }

  Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
  Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  friend bool operator==(const Laurent&, const Laurent&) = default;

 private:
  void normalize() {
    std::stable_sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().first == t.first)
        out.back().second = detail::ring_add(out.back().second, t.second);
      else
        out.push_back(std::move(t));
    }
    std::erase_if(out, [](const Term& t) { return detail::ring_is_zero(t.second); });
    terms_ = std::move(out);
  }

  static Laurent merge(const Laurent& a, const Laurent& b, bool subtract) {
    Laurent r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    auto push = [&r](int e, Coeff c) {
      if (!detail::ring_is_zero(c)) r.terms_.emplace_back(e, std::move(c));
    };
    while (i != a.terms_.end() || j != b.terms_.end()) {
      if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
        push(i->first, i->second);
        ++i;
      } else if (i == a.terms_.end() || j->first < i->first) {
        push(j->first, subtract ? detail::ring_sub(Coeff{}, j->second) : j->second);
        ++j;
      } else {
        push(i->first, subtract ? detail::ring_sub(i->second, j->second) : detail::ring_add(i->second, j->second));
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::vector<Term> terms_;
};

/// Integer Laurent polynomial in q.
using QLaurent = Laurent<std::int64_t>;

}  // namespace longzeta
