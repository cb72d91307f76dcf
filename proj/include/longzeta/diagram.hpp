#pragma once

// Long virtual knot diagrams encoded as Gauss-style passage sequences.
//
// A diagram is the ordered list of passages met when walking the strand from
// the -inf end to the +inf end. Each classical crossing contributes one
// OverPass and one UnderPass with the same writhe sign; each virtual crossing
// contributes two VirtualPass tokens with opposite senses (+ means the strand
// crosses the transversal strand from its left to its right).

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "longzeta/errors.hpp"

namespace longzeta {

enum class PassKind { over, under, virtual_pass };

struct PassageToken {
  int id = 0;
  PassKind kind = PassKind::over;
  int sign = 1;  ///< writhe sign for over/under, sense for virtual passes

  bool is_virtual() const { return kind == PassKind::virtual_pass; }
  friend bool operator==(const PassageToken&, const PassageToken&) = default;
};

struct DiagramCode {
  std::vector<PassageToken> tokens;

  std::size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }

  int max_id() const {
    int m = 0;
    for (const auto& t : tokens) m = std::max(m, t.id);
    return m;
  }

  /// Sorted ids of classical crossings.
  std::vector<int> classical_ids() const {
    std::set<int> ids;
    for (const auto& t : tokens)
      if (!t.is_virtual()) ids.insert(t.id);
    return {ids.begin(), ids.end()};
  }

  std::size_t classical_count() const { return classical_ids().size(); }

  std::size_t virtual_count() const {
    std::set<int> ids;
    for (const auto& t : tokens)
      if (t.is_virtual()) ids.insert(t.id);
    return ids.size();
  }

  friend bool operator==(const DiagramCode&, const DiagramCode&) = default;
};

inline std::string to_string(const PassageToken& t) {
  char k = t.kind == PassKind::over ? 'O' : t.kind == PassKind::under ? 'U' : 'V';
  return k + std::to_string(t.id) + (t.sign > 0 ? '+' : '-');
}

inline std::string render(const DiagramCode& code) {
  std::string out;
  for (const auto& t : code.tokens) {
    if (!out.empty()) out += ' ';
    out += to_string(t);
  }
  return out;
}

/// Whitespace-separated `O<id><s>`, `U<id><s>`, `V<id><s>`; lines whose first
/// non-blank character is '#' are comments. No validation is applied.
inline DiagramCode parse_code(std::string_view text) {
  DiagramCode code;
  std::size_t pos = 0;
  std::size_t index = 0;
  while (pos < text.size()) {
    char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    if (c == '#') {
      while (pos < text.size() && text[pos] != '\n') ++pos;
      continue;
    }
    std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    std::string_view word = text.substr(start, pos - start);
    ++index;
    auto fail = [&](const std::string& why) -> void {
      throw ParseError("syntax error at token " + std::to_string(index) + " ('" + std::string(word) +
                           "', offset " + std::to_string(start) + "): " + why,
                       index, start);
    };
    PassageToken tok;
    switch (word[0]) {
      case 'O': tok.kind = PassKind::over; break;
      case 'U': tok.kind = PassKind::under; break;
      case 'V': tok.kind = PassKind::virtual_pass; break;
      default: fail("expected O, U or V");
    }
    if (word.size() < 3) fail("expected <kind><id><sign>");
    char s = word.back();
    if (s != '+' && s != '-') fail("expected trailing '+' or '-'");
    tok.sign = s == '+' ? 1 : -1;
    std::string_view digits = word.substr(1, word.size() - 2);
    if (!std::all_of(digits.begin(), digits.end(), [](char d) { return std::isdigit(static_cast<unsigned char>(d)); }))
      fail("crossing id must be a decimal integer");
    if (digits.size() > 9) fail("crossing id too large");
    tok.id = std::stoi(std::string(digits));
    if (tok.id < 1) fail("crossing id must be >= 1");
    code.tokens.push_back(tok);
  }
  return code;
}

struct Violation {
  enum class Kind { occurrence_count, mixed_kinds, duplicate_pass, sign_mismatch, same_sense };
  int id;
  Kind kind;
  std::string message;
};

/// Every broken diagram invariant; empty when the code is valid.
inline std::vector<Violation> validate(const DiagramCode& code) {
  std::map<int, std::vector<PassageToken>> by_id;
  for (const auto& t : code.tokens) by_id[t.id].push_back(t);
  std::vector<Violation> out;
  for (const auto& [id, ts] : by_id) {
    const std::string name = "crossing " + std::to_string(id);
    if (ts.size() != 2) {
      out.push_back({id, Violation::Kind::occurrence_count,
                     name + " occurs " + std::to_string(ts.size()) + " times, expected 2"});
      continue;
    }
    const auto& a = ts[0];
    const auto& b = ts[1];
    if (a.is_virtual() != b.is_virtual()) {
      out.push_back({id, Violation::Kind::mixed_kinds, name + " mixes virtual and classical passages"});
    } else if (a.is_virtual()) {
      if (a.sign == b.sign)
        out.push_back({id, Violation::Kind::same_sense, "virtual " + name + " has two passages of the same sense"});
    } else {
      if (a.kind == b.kind)
        out.push_back({id, Violation::Kind::duplicate_pass,
                       name + " needs one over and one under passage"});
      else if (a.sign != b.sign)
        out.push_back({id, Violation::Kind::sign_mismatch, name + " has mismatched writhe signs"});
    }
  }
  return out;
}

inline bool is_valid(const DiagramCode& code) { return validate(code).empty(); }

inline void require_valid(const DiagramCode& code) {
  auto v = validate(code);
  if (v.empty()) return;
  std::string msg = "invalid diagram code:";
  for (const auto& x : v) msg += "\n  " + x.message;
  throw ValidationError(msg);
}

enum class EarlyClass { early_over, early_under };

/// How degrees run along the united long arc gamma = gamma_- u gamma_+.
enum class DegreeConvention {
  /// gamma starts at the first arc of gamma_+ (degree 0), runs to +inf and
  /// continues through infinity into gamma_- without resetting.
  united_walk,
  /// gamma_- and gamma_+ each start again at degree 0. Not invariant under
  /// Reidemeister moves; kept for comparison.
  restart_per_half,
};

struct Arc {
  int from;  ///< index of the token opening the arc, -1 for the -inf end
  int to;    ///< index of the token closing the arc, size() for the +inf end
  std::size_t long_arc;
  int degree;
};

struct LongArc {
  std::vector<std::size_t> arcs;  ///< traversal order
  std::optional<int> origin;      ///< emanating crossing; nullopt for the -inf end
  bool is_initial = false;
  bool is_final = false;
  int increasing_count = 0;
  int net_degree = 0;  ///< sum of senses along the long arc
};

struct Decomposition {
  DegreeConvention convention = DegreeConvention::united_walk;
  std::vector<Arc> arcs;
  std::vector<LongArc> long_arcs;  ///< traversal order; front is gamma_-, back is gamma_+
  std::vector<int> crossings;      ///< classical ids; row i and column i belong to crossings[i]
  std::map<int, std::size_t> pairing;
  std::optional<std::size_t> united_column;
  std::map<int, EarlyClass> early_class;
  std::map<int, int> signs;
  std::map<int, std::size_t> over_position;
  std::map<int, std::size_t> under_position;
  std::size_t virtual_count = 0;
  std::size_t token_count = 0;

  std::size_t n() const { return crossings.size(); }

  std::size_t column_of_long_arc(std::size_t la) const {
    const auto& l = long_arcs[la];
    if (l.is_initial || l.is_final) return *united_column;
    return pairing.at(*l.origin);
  }

  /// Long arcs of column j in walk order: gamma_+ then gamma_- for the united column.
  std::vector<std::size_t> column_long_arcs(std::size_t j) const {
    if (united_column && j == *united_column) {
      if (long_arcs.size() == 1) return {0};
      return {long_arcs.size() - 1, 0};
    }
    for (std::size_t la = 0; la < long_arcs.size(); ++la)
      if (!long_arcs[la].is_initial && !long_arcs[la].is_final && pairing.at(*long_arcs[la].origin) == j) return {la};
    return {};
  }

  /// Arcs of column j in walk order.
  std::vector<std::size_t> column_arcs(std::size_t j) const {
    std::vector<std::size_t> out;
    for (auto la : column_long_arcs(j)) out.insert(out.end(), long_arcs[la].arcs.begin(), long_arcs[la].arcs.end());
    return out;
  }

  int column_increasing_count(std::size_t j) const {
    int total = 0;
    for (auto la : column_long_arcs(j)) total += long_arcs[la].increasing_count;
    return total;
  }

  const LongArc& initial() const { return long_arcs.front(); }
  const LongArc& final_arc() const { return long_arcs.back(); }
};

/// Splits the code into long arcs (cut at under-passages) and arcs (further
/// cut at virtual passages), assigns degrees and pairs columns with crossings.
inline Decomposition decompose(const DiagramCode& code,
                               DegreeConvention convention = DegreeConvention::united_walk) {
  require_valid(code);
  Decomposition d;
  d.convention = convention;
  d.crossings = code.classical_ids();
  d.virtual_count = code.virtual_count();
  d.token_count = code.size();
  for (std::size_t i = 0; i < d.crossings.size(); ++i) d.pairing[d.crossings[i]] = i;
  const int size = static_cast<int>(code.size());
  for (int i = 0; i < size; ++i) {
    const auto& t = code.tokens[i];
    if (t.kind == PassKind::over) d.over_position[t.id] = i;
    if (t.kind == PassKind::under) d.under_position[t.id] = i;
    if (!t.is_virtual()) d.signs[t.id] = t.sign;
  }
  for (int id : d.crossings)
    d.early_class[id] = d.over_position[id] < d.under_position[id] ? EarlyClass::early_over : EarlyClass::early_under;

  // Walk the strand, opening a long arc after each under-passage.
  int from = -1;
  int degree = 0;
  LongArc current;
  current.is_initial = true;
  auto close_arc = [&](int to) {
    d.arcs.push_back({from, to, d.long_arcs.size(), degree});
    current.arcs.push_back(d.arcs.size() - 1);
  };
  for (int i = 0; i < size; ++i) {
    const auto& t = code.tokens[i];
    if (t.kind == PassKind::under) {
      close_arc(i);
      d.long_arcs.push_back(current);
      current = LongArc{};
      current.origin = t.id;
      from = i;
      degree = 0;
    } else if (t.is_virtual()) {
      close_arc(i);
      degree += t.sign;
      current.net_degree += t.sign;
      if (t.sign > 0) ++current.increasing_count;
      from = i;
    }
  }
  close_arc(size);
  current.is_final = true;
  d.long_arcs.push_back(current);

  if (!d.crossings.empty()) {
    d.united_column = d.pairing.at(*d.long_arcs.back().origin);
    if (convention == DegreeConvention::united_walk) {
      const int shift = d.long_arcs.back().net_degree;
      for (auto a : d.long_arcs.front().arcs) d.arcs[a].degree += shift;
    }
  }
  return d;
}

/// Concatenation d1 * d2; d2's ids are shifted past d1's largest id.
inline DiagramCode connect_sum(const DiagramCode& d1, const DiagramCode& d2) {
  DiagramCode out = d1;
  const int shift = d1.max_id();
  for (auto t : d2.tokens) {
    t.id += shift;
    out.tokens.push_back(t);
  }
  return out;
}

/// Renumbers ids 1, 2, ... in order of first appearance.
inline DiagramCode relabel(const DiagramCode& code) {
  std::map<int, int> ids;
  DiagramCode out = code;
  for (auto& t : out.tokens) {
    auto [it, inserted] = ids.try_emplace(t.id, static_cast<int>(ids.size()) + 1);
    t.id = it->second;
  }
  return out;
}

enum class Family { classical_trefoil, classical_figure8, virtual_kink, virtual_kink_chain };

/// Built-in diagrams. `r` is the chain length and only used by virtual_kink_chain.
inline DiagramCode generate(Family family, int r = 1) {
  switch (family) {
    case Family::classical_trefoil: return parse_code("O1+ U2+ O3+ U1+ O2+ U3+");
    case Family::classical_figure8: return parse_code("O1+ U2- O3- U1+ O4+ U3- O2- U4+");
    case Family::virtual_kink: return parse_code("O1+ V2+ U1+ V2-");
    case Family::virtual_kink_chain: {
      if (r < 1) throw Error("virtual_kink_chain needs r >= 1, got " + std::to_string(r));
      // Each link passes over its crossing, crosses back virtually with a
      // decreasing passage, goes under and returns increasing.
      const DiagramCode link = parse_code("O1+ V2- U1+ V2+");
      DiagramCode out = link;
      for (int i = 1; i < r; ++i) out = connect_sum(out, link);
      return out;
    }
  }
  throw Error("unknown family");
}

/// Uniformly shuffled valid code with n classical and k virtual crossings.
template <class Rng>
DiagramCode random_code(Rng& rng, int n, int k) {
  DiagramCode code;
  std::uniform_int_distribution<int> coin(0, 1);
  for (int c = 1; c <= n; ++c) {
    int w = coin(rng) ? 1 : -1;
    code.tokens.push_back({c, PassKind::over, w});
    code.tokens.push_back({c, PassKind::under, w});
  }
  for (int v = n + 1; v <= n + k; ++v) {
    int s = coin(rng) ? 1 : -1;
    code.tokens.push_back({v, PassKind::virtual_pass, s});
    code.tokens.push_back({v, PassKind::virtual_pass, -s});
  }
  std::shuffle(code.tokens.begin(), code.tokens.end(), rng);
  return code;
}

}  // namespace longzeta
