#pragma once

// Exact arithmetic in T = Z[p, p^-1, q, q^-1] / ((p-1)(p-q), (q-1)(p-q)).
//
// Writing e = p - q, the relations become e^2 = 0 and (q - 1)e = 0, so every
// element has a unique normal form f(q) + a*e with f an integer Laurent
// polynomial in q and a an integer. Multiplication:
//   (f, a) * (g, b) = (f*g, f(1)*b + g(1)*a).

#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include "longzeta/errors.hpp"
#include "longzeta/laurent.hpp"

namespace longzeta {

enum class Generator { p, q };

class RingT {
 public:
  RingT() = default;
  RingT(QLaurent lau, std::int64_t eps) : lau_(std::move(lau)), eps_(eps) {}

  static RingT integer(std::int64_t c) { return {QLaurent(c), 0}; }
  static RingT zero() { return {}; }
  static RingT one() { return integer(1); }
  /// The nilpotent e = p - q.
  static RingT p_minus_q() { return {{}, 1}; }

  /// q^m = (q^m, 0); p^m = (q + e)^m = (q^m, m).
  static RingT gen_power(Generator g, int m) {
    return {QLaurent::monomial(1, m), g == Generator::p ? m : 0};
  }
  static RingT p(int m = 1) { return gen_power(Generator::p, m); }
  static RingT q(int m = 1) { return gen_power(Generator::q, m); }

  const QLaurent& lau() const { return lau_; }
  std::int64_t eps() const { return eps_; }

  bool is_zero() const { return lau_.is_zero() && eps_ == 0; }

  /// Value at p = q = 1; the e part vanishes there.
  std::int64_t eval_pq1() const { return lau_.eval_at_one(); }

  /// Nonzero and vanishing at p = q = 1. Zero itself reports false.
  bool is_zero_divisor() const { return !is_zero() && eval_pq1() == 0; }

  RingT operator-() const { return {-lau_, detail::checked_sub(0, eps_)}; }

  friend RingT operator+(const RingT& x, const RingT& y) {
    return {x.lau_ + y.lau_, detail::checked_add(x.eps_, y.eps_)};
  }
  friend RingT operator-(const RingT& x, const RingT& y) {
    return {x.lau_ - y.lau_, detail::checked_sub(x.eps_, y.eps_)};
  }
  friend RingT operator*(const RingT& x, const RingT& y) {
    if (x.is_zero() || y.is_zero()) return {};
    std::int64_t e = detail::checked_add(detail::checked_mul(x.eval_pq1(), y.eps_),
                                         detail::checked_mul(y.eval_pq1(), x.eps_));
    return {x.lau_ * y.lau_, e};
  }

  RingT& operator+=(const RingT& o) { return *this = *this + o; }
  RingT& operator-=(const RingT& o) { return *this = *this - o; }
  RingT& operator*=(const RingT& o) { return *this = *this * o; }

  friend bool operator==(const RingT&, const RingT&) = default;

  /// Canonical text: `c*q^k` monomials in ascending k, then `a*(p-q)`.
  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](std::int64_t c, const std::string& body) {
      if (first) {
        os << c << '*' << body;
        first = false;
      } else {
        os << (c < 0 ? " - " : " + ") << (c < 0 ? -c : c) << '*' << body;
      }
    };
    for (const auto& [k, c] : lau_.terms()) emit(c, "q^" + std::to_string(k));
    if (eps_ != 0) emit(eps_, "(p-q)");
    return os.str();
  }

  /// Inverse of to_string(); throws Error on malformed text.
  static RingT parse(std::string_view text) {
    std::size_t pos = 0;
    auto fail = [&](const char* why) {
      throw Error("cannot parse ring element '" + std::string(text) + "': " + why);
    };
    auto skip_ws = [&] {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto read_int = [&]() -> std::int64_t {
      std::size_t start = pos;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start || !std::isdigit(static_cast<unsigned char>(text[pos - 1]))) fail("expected integer");
      return std::stoll(std::string(text.substr(start, pos - start)));
    };
    skip_ws();
    if (text.substr(pos) == "0") return {};
    std::vector<QLaurent::Term> terms;
    std::int64_t eps = 0;
    int sign = 1;
    for (;;) {
      skip_ws();
      std::int64_t c = sign * read_int();
      if (pos >= text.size() || text[pos] != '*') fail("expected '*'");
      ++pos;
      if (text.substr(pos, 2) == "q^") {
        pos += 2;
        terms.emplace_back(static_cast<int>(read_int()), c);
      } else if (text.substr(pos, 5) == "(p-q)") {
        pos += 5;
        eps = detail::checked_add(eps, c);
      } else {
        fail("expected 'q^' or '(p-q)'");
      }
      skip_ws();
      if (pos == text.size()) break;
      if (text[pos] == '+') sign = 1;
      else if (text[pos] == '-') sign = -1;
      else fail("expected '+' or '-'");
      ++pos;
    }
    return {QLaurent::from_terms(std::move(terms)), eps};
  }

 private:
  QLaurent lau_;
  std::int64_t eps_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const RingT& x) { return os << x.to_string(); }

}  // namespace longzeta
