#pragma once

// Generalized Reidemeister moves as rewrites of passage sequences.
//
// Insertions take gap indices: gap g sits just before token g (0 <= g <= size).
// Deletions and triangle moves take the position of the first token of each
// adjacent pair they act on. Fresh crossings get ids max_id + 1, max_id + 2.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "longzeta/diagram.hpp"
#include "longzeta/errors.hpp"

namespace longzeta {

enum class MoveKind {
  R1_insert,
  R1_delete,
  V1_insert,
  V1_delete,
  R2_insert,
  R2_delete,
  V2_insert,
  V2_delete,
  Triangle_classical,
  Triangle_virtual,
  Triangle_semivirtual,
};

inline constexpr std::array<MoveKind, 11> kAllMoveKinds = {
    MoveKind::R1_insert,          MoveKind::R1_delete,        MoveKind::V1_insert, MoveKind::V1_delete,
    MoveKind::R2_insert,          MoveKind::R2_delete,        MoveKind::V2_insert, MoveKind::V2_delete,
    MoveKind::Triangle_classical, MoveKind::Triangle_virtual, MoveKind::Triangle_semivirtual,
};

/// OU/UO choose the kink order for R1 (UO is the early-undercrossing kink);
/// parallel/antiparallel choose the second pair's order for R2 and V2.
enum class Variant { none, OU, UO, parallel, antiparallel };

struct MoveSpec {
  MoveKind kind = MoveKind::R1_insert;
  std::array<std::size_t, 3> site{};
  int sign = 1;
  Variant variant = Variant::none;

  friend bool operator==(const MoveSpec&, const MoveSpec&) = default;
};

inline std::string to_string(MoveKind k) {
  switch (k) {
    case MoveKind::R1_insert: return "R1_insert";
    case MoveKind::R1_delete: return "R1_delete";
    case MoveKind::V1_insert: return "V1_insert";
    case MoveKind::V1_delete: return "V1_delete";
    case MoveKind::R2_insert: return "R2_insert";
    case MoveKind::R2_delete: return "R2_delete";
    case MoveKind::V2_insert: return "V2_insert";
    case MoveKind::V2_delete: return "V2_delete";
    case MoveKind::Triangle_classical: return "Triangle_classical";
    case MoveKind::Triangle_virtual: return "Triangle_virtual";
    case MoveKind::Triangle_semivirtual: return "Triangle_semivirtual";
  }
  return "?";
}

inline MoveKind parse_move_kind(std::string_view s) {
  for (auto k : kAllMoveKinds)
    if (to_string(k) == s) return k;
  throw Error("unknown move kind '" + std::string(s) + "'");
}

inline std::string to_string(Variant v) {
  switch (v) {
    case Variant::OU: return "OU";
    case Variant::UO: return "UO";
    case Variant::parallel: return "parallel";
    case Variant::antiparallel: return "antiparallel";
    case Variant::none: break;
  }
  return "";
}

/// One move-log line: `<kind> <params...>`.
inline std::string to_string(const MoveSpec& m) {
  std::ostringstream os;
  os << to_string(m.kind);
  const char sg = m.sign > 0 ? '+' : '-';
  switch (m.kind) {
    case MoveKind::R1_insert: os << ' ' << m.site[0] << ' ' << sg << ' ' << to_string(m.variant); break;
    case MoveKind::V1_insert: os << ' ' << m.site[0] << ' ' << sg; break;
    case MoveKind::R1_delete:
    case MoveKind::V1_delete: os << ' ' << m.site[0]; break;
    case MoveKind::R2_insert:
    case MoveKind::V2_insert:
      os << ' ' << m.site[0] << ' ' << m.site[1] << ' ' << sg << ' ' << to_string(m.variant);
      break;
    case MoveKind::R2_delete:
    case MoveKind::V2_delete: os << ' ' << m.site[0] << ' ' << m.site[1]; break;
    case MoveKind::Triangle_classical:
    case MoveKind::Triangle_virtual:
    case MoveKind::Triangle_semivirtual: os << ' ' << m.site[0] << ' ' << m.site[1] << ' ' << m.site[2]; break;
  }
  return os.str();
}

inline MoveSpec parse_move(std::string_view line) {
  std::istringstream is{std::string(line)};
  std::string kind;
  if (!(is >> kind)) throw Error("empty move line");
  MoveSpec m;
  m.kind = parse_move_kind(kind);
  auto fail = [&](const std::string& why) { throw Error("bad move line '" + std::string(line) + "': " + why); };
  auto read_index = [&](std::size_t slot) {
    long long v;
    if (!(is >> v) || v < 0) fail("expected a non-negative index");
    m.site[slot] = static_cast<std::size_t>(v);
  };
  auto read_sign = [&] {
    std::string s;
    if (!(is >> s) || (s != "+" && s != "-")) fail("expected '+' or '-'");
    m.sign = s == "+" ? 1 : -1;
  };
  auto read_variant = [&](Variant a, Variant b) {
    std::string s;
    if (!(is >> s)) fail("expected a variant");
    if (s == to_string(a)) m.variant = a;
    else if (s == to_string(b)) m.variant = b;
    else fail("expected '" + to_string(a) + "' or '" + to_string(b) + "'");
  };
  switch (m.kind) {
    case MoveKind::R1_insert:
      read_index(0);
      read_sign();
      read_variant(Variant::OU, Variant::UO);
      break;
    case MoveKind::V1_insert:
      read_index(0);
      read_sign();
      break;
    case MoveKind::R1_delete:
    case MoveKind::V1_delete: read_index(0); break;
    case MoveKind::R2_insert:
    case MoveKind::V2_insert:
      read_index(0);
      read_index(1);
      read_sign();
      read_variant(Variant::parallel, Variant::antiparallel);
      break;
    case MoveKind::R2_delete:
    case MoveKind::V2_delete:
      read_index(0);
      read_index(1);
      break;
    default:
      read_index(0);
      read_index(1);
      read_index(2);
  }
  std::string extra;
  if (is >> extra) fail("trailing input '" + extra + "'");
  return m;
}

namespace detail {

inline bool same_pair_ids(const PassageToken& a, const PassageToken& b, int x, int y) {
  return (a.id == x && b.id == y) || (a.id == y && b.id == x);
}

/// Realizability of a triangle by three straight strands (top, middle, bottom).
/// sXY is the sign of crossing XY with X as the upper strand (the sense of X's
/// passage for virtual crossings); oT says whether the top strand meets TM
/// before TB, oM whether the middle meets TM before MB, oB whether the bottom
/// meets TB before MB.
inline bool triangle_realizable(int sTM, int sTB, int sMB, bool oT, bool oM, bool oB) {
  return ((oT == oM) == (sTB == sMB)) && ((oT == oB) == (sTM == sMB));
}

struct TriangleSite {
  std::array<std::size_t, 3> pos;  ///< sorted pair positions
  MoveKind kind;
};

/// Classifies three disjoint adjacent pairs; returns an error message when
/// they do not form a realizable triangle of any kind.
inline std::string check_triangle(const DiagramCode& code, std::array<std::size_t, 3> pos, MoveKind& kind) {
  const auto& t = code.tokens;
  std::sort(pos.begin(), pos.end());
  if (pos[2] + 1 >= t.size()) return "pair position out of range";
  if (pos[1] < pos[0] + 2 || pos[2] < pos[1] + 2) return "pairs overlap";
  struct Strand {
    PassageToken first, second;
    bool has(int id) const { return first.id == id || second.id == id; }
    const PassageToken& at(int id) const { return first.id == id ? first : second; }
  };
  std::array<Strand, 3> s;
  for (int i = 0; i < 3; ++i) s[i] = {t[pos[i]], t[pos[i] + 1]};
  for (const auto& x : s)
    if (x.first.id == x.second.id) return "a pair holds both passages of one crossing";
  // Ids x, y, z with pairs {x,y}, {x,z}, {y,z} in some order.
  std::set<int> ids;
  for (const auto& x : s) ids.insert({x.first.id, x.second.id});
  if (ids.size() != 3) return "pairs do not involve exactly three crossings";

  int nv = 0;
  for (const auto& x : s) nv += x.first.is_virtual() + x.second.is_virtual();
  auto crossing_of = [](const Strand& a, const Strand& b) {
    return a.has(b.first.id) ? b.first.id : b.second.id;
  };
  auto evaluate = [&](const Strand& T, const Strand& M, const Strand& B, int sMB) {
    const int tm = crossing_of(T, M), tb = crossing_of(T, B);
    const int sTM = T.at(tm).sign, sTB = T.at(tb).sign;
    return triangle_realizable(sTM, sTB, sMB, T.first.id == tm, M.first.id == tm, B.first.id == tb);
  };
  if (nv == 0) {
    int top = -1, bottom = -1, middle = -1;
    for (int i = 0; i < 3; ++i) {
      const bool o1 = s[i].first.kind == PassKind::over, o2 = s[i].second.kind == PassKind::over;
      if (o1 && o2) top = i;
      else if (!o1 && !o2) bottom = i;
      else middle = i;
    }
    if (top < 0 || bottom < 0 || middle < 0) return "no top/middle/bottom strand assignment";
    const int mb = crossing_of(s[middle], s[bottom]);
    if (!evaluate(s[top], s[middle], s[bottom], s[middle].at(mb).sign)) return "signs and orders are not realizable";
    kind = MoveKind::Triangle_classical;
    return {};
  }
  if (nv == 6) {
    const int mb = crossing_of(s[1], s[2]);
    if (!evaluate(s[0], s[1], s[2], s[1].at(mb).sign)) return "senses and orders are not realizable";
    kind = MoveKind::Triangle_virtual;
    return {};
  }
  if (nv == 4) {
    int vstrand = -1;
    for (int i = 0; i < 3; ++i)
      if (s[i].first.is_virtual() && s[i].second.is_virtual()) vstrand = i;
    if (vstrand < 0) return "no strand with two virtual passages";
    const Strand& T = s[vstrand];
    const Strand* M = nullptr;
    const Strand* B = nullptr;
    for (int i = 0; i < 3; ++i) {
      if (i == vstrand) continue;
      const auto& c = s[i].first.is_virtual() ? s[i].second : s[i].first;
      if (c.kind == PassKind::over) M = &s[i];
      else B = &s[i];
    }
    if (!M || !B) return "the classical crossing needs one over and one under passage";
    const int mb = crossing_of(*M, *B);
    if (!evaluate(T, *M, *B, M->at(mb).sign)) return "senses, sign and orders are not realizable";
    kind = MoveKind::Triangle_semivirtual;
    return {};
  }
  return "two classical and one virtual crossing cannot form a triangle move";
}

inline std::vector<PassageToken> splice(const std::vector<PassageToken>& t, std::size_t g1,
                                        const std::vector<PassageToken>& a, std::size_t g2,
                                        const std::vector<PassageToken>& b) {
  std::vector<PassageToken> out;
  out.reserve(t.size() + a.size() + b.size());
  out.insert(out.end(), t.begin(), t.begin() + g1);
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), t.begin() + g1, t.begin() + g2);
  out.insert(out.end(), b.begin(), b.end());
  out.insert(out.end(), t.begin() + g2, t.end());
  return out;
}

inline std::vector<PassageToken> erase_pairs(const std::vector<PassageToken>& t, std::size_t i, std::size_t j) {
  std::vector<PassageToken> out;
  for (std::size_t k = 0; k < t.size(); ++k)
    if (k != i && k != i + 1 && k != j && k != j + 1) out.push_back(t[k]);
  return out;
}

}  // namespace detail

/// Rewrites `code` by `m`; throws MoveError when the site does not match.
inline DiagramCode apply(const DiagramCode& code, const MoveSpec& m) {
  require_valid(code);
  const auto& t = code.tokens;
  const std::size_t n = t.size();
  const int c = code.max_id() + 1;
  const int d = c + 1;
  const int w = m.sign;
  auto fail = [&](const std::string& why) -> void { throw MoveError(to_string(m) + ": " + why); };
  auto gap = [&](std::size_t g) {
    if (g > n) fail("gap " + std::to_string(g) + " out of range 0.." + std::to_string(n));
  };
  auto pair_at = [&](std::size_t i) {
    if (i + 1 >= n) fail("pair position " + std::to_string(i) + " out of range");
  };
  if (w != 1 && w != -1) fail("sign must be +1 or -1");

  DiagramCode out;
  switch (m.kind) {
    case MoveKind::R1_insert: {
      gap(m.site[0]);
      PassageToken o{c, PassKind::over, w}, u{c, PassKind::under, w};
      if (m.variant == Variant::OU) out.tokens = detail::splice(t, m.site[0], {o, u}, m.site[0], {});
      else if (m.variant == Variant::UO) out.tokens = detail::splice(t, m.site[0], {u, o}, m.site[0], {});
      else fail("R1_insert needs variant OU or UO");
      break;
    }
    case MoveKind::V1_insert: {
      gap(m.site[0]);
      out.tokens = detail::splice(t, m.site[0], {{c, PassKind::virtual_pass, w}, {c, PassKind::virtual_pass, -w}},
                                  m.site[0], {});
      break;
    }
    case MoveKind::R1_delete:
    case MoveKind::V1_delete: {
      const std::size_t i = m.site[0];
      pair_at(i);
      if (t[i].id != t[i + 1].id) fail("tokens at " + std::to_string(i) + " and " + std::to_string(i + 1) +
                                       " belong to different crossings");
      if (t[i].is_virtual() != (m.kind == MoveKind::V1_delete))
        fail(m.kind == MoveKind::V1_delete ? "the kink is classical" : "the kink is virtual");
      out.tokens = t;
      out.tokens.erase(out.tokens.begin() + static_cast<std::ptrdiff_t>(i),
                       out.tokens.begin() + static_cast<std::ptrdiff_t>(i) + 2);
      break;
    }
    case MoveKind::R2_insert: {
      const std::size_t go = m.site[0], gu = m.site[1];
      gap(go);
      gap(gu);
      if (m.variant != Variant::parallel && m.variant != Variant::antiparallel)
        fail("R2_insert needs variant parallel or antiparallel");
      const std::vector<PassageToken> overs{{c, PassKind::over, w}, {d, PassKind::over, -w}};
      std::vector<PassageToken> unders{{c, PassKind::under, w}, {d, PassKind::under, -w}};
      if (go == gu) {
        out.tokens = detail::splice(
            t, go, {overs[0], overs[1], {d, PassKind::under, -w}, {c, PassKind::under, w}}, go, {});
        break;
      }
      if (m.variant == Variant::antiparallel) std::swap(unders[0], unders[1]);
      out.tokens = go < gu ? detail::splice(t, go, overs, gu, unders) : detail::splice(t, gu, unders, go, overs);
      break;
    }
    case MoveKind::V2_insert: {
      const std::size_t g1 = m.site[0], g2 = m.site[1];
      gap(g1);
      gap(g2);
      if (g1 > g2) fail("V2_insert needs g1 <= g2");
      if (m.variant != Variant::parallel && m.variant != Variant::antiparallel)
        fail("V2_insert needs variant parallel or antiparallel");
      const PassageToken c1{c, PassKind::virtual_pass, w}, d1{d, PassKind::virtual_pass, -w};
      const PassageToken c2{c, PassKind::virtual_pass, -w}, d2{d, PassKind::virtual_pass, w};
      if (g1 == g2) {
        out.tokens = detail::splice(t, g1, {c1, d1, d2, c2}, g1, {});
        break;
      }
      if (m.variant == Variant::parallel) out.tokens = detail::splice(t, g1, {c1, d1}, g2, {c2, d2});
      else out.tokens = detail::splice(t, g1, {c1, d1}, g2, {d2, c2});
      break;
    }
    case MoveKind::R2_delete: {
      const std::size_t io = m.site[0], iu = m.site[1];
      pair_at(io);
      pair_at(iu);
      if ((io > iu ? io - iu : iu - io) < 2) fail("pairs overlap");
      const auto &a = t[io], &b = t[io + 1];
      if (a.kind != PassKind::over || b.kind != PassKind::over) fail("first pair is not two over-passages");
      if (a.id == b.id || a.sign != -b.sign) fail("over-passages need distinct crossings of opposite sign");
      if (t[iu].kind != PassKind::under || t[iu + 1].kind != PassKind::under ||
          !detail::same_pair_ids(t[iu], t[iu + 1], a.id, b.id))
        fail("second pair is not the under-passages of the same two crossings");
      out.tokens = detail::erase_pairs(t, io, iu);
      break;
    }
    case MoveKind::V2_delete: {
      const std::size_t i = m.site[0], j = m.site[1];
      pair_at(i);
      pair_at(j);
      if (j < i + 2) fail("V2_delete needs the first pair strictly before the second");
      const auto &a = t[i], &b = t[i + 1];
      if (!a.is_virtual() || !b.is_virtual() || a.id == b.id) fail("first pair is not two virtual crossings");
      if (a.sign != -b.sign) fail("first pair must enter and leave (opposite senses)");
      if (!detail::same_pair_ids(t[j], t[j + 1], a.id, b.id)) fail("second pair does not hold the same two crossings");
      out.tokens = detail::erase_pairs(t, i, j);
      break;
    }
    case MoveKind::Triangle_classical:
    case MoveKind::Triangle_virtual:
    case MoveKind::Triangle_semivirtual: {
      MoveKind found = m.kind;
      std::string why = detail::check_triangle(code, m.site, found);
      if (!why.empty()) fail(why);
      if (found != m.kind) fail("site is a " + to_string(found) + " configuration");
      out.tokens = t;
      for (auto p : m.site) std::swap(out.tokens[p], out.tokens[p + 1]);
      break;
    }
  }
  if (!is_valid(out)) throw InternalError("apply produced an invalid code: " + render(out));
  return out;
}

inline constexpr std::size_t kDefaultSiteLimit = 1'000'000;

/// Every applicable MoveSpec of one kind, in a fixed order, at most `limit`.
inline std::vector<MoveSpec> enumerate_sites(const DiagramCode& code, MoveKind kind,
                                             std::size_t limit = kDefaultSiteLimit) {
  require_valid(code);
  const auto& t = code.tokens;
  const std::size_t n = t.size();
  std::vector<MoveSpec> out;
  auto push = [&](MoveSpec m) {
    if (out.size() < limit) out.push_back(m);
  };
  switch (kind) {
    case MoveKind::R1_insert:
      for (std::size_t g = 0; g <= n; ++g)
        for (int w : {1, -1})
          for (auto v : {Variant::OU, Variant::UO}) push({kind, {g, 0, 0}, w, v});
      break;
    case MoveKind::V1_insert:
      for (std::size_t g = 0; g <= n; ++g)
        for (int w : {1, -1}) push({kind, {g, 0, 0}, w, Variant::none});
      break;
    case MoveKind::R1_delete:
    case MoveKind::V1_delete:
      for (std::size_t i = 0; i + 1 < n; ++i)
        if (t[i].id == t[i + 1].id && t[i].is_virtual() == (kind == MoveKind::V1_delete)) push({kind, {i, 0, 0}});
      break;
    case MoveKind::R2_insert:
      for (std::size_t go = 0; go <= n; ++go)
        for (std::size_t gu = 0; gu <= n; ++gu)
          for (int w : {1, -1}) {
            if (go == gu) {
              push({kind, {go, gu, 0}, w, Variant::antiparallel});
              continue;
            }
            for (auto v : {Variant::parallel, Variant::antiparallel}) push({kind, {go, gu, 0}, w, v});
          }
      break;
    case MoveKind::V2_insert:
      for (std::size_t g1 = 0; g1 <= n; ++g1)
        for (std::size_t g2 = g1; g2 <= n; ++g2)
          for (int w : {1, -1}) {
            if (g1 == g2) {
              push({kind, {g1, g2, 0}, w, Variant::antiparallel});
              continue;
            }
            for (auto v : {Variant::parallel, Variant::antiparallel}) push({kind, {g1, g2, 0}, w, v});
          }
      break;
    case MoveKind::R2_delete:
      for (std::size_t io = 0; io + 1 < n; ++io) {
        const auto &a = t[io], &b = t[io + 1];
        if (a.kind != PassKind::over || b.kind != PassKind::over || a.id == b.id || a.sign != -b.sign) continue;
        for (std::size_t iu = 0; iu + 1 < n; ++iu) {
          if ((io > iu ? io - iu : iu - io) < 2) continue;
          if (t[iu].kind == PassKind::under && t[iu + 1].kind == PassKind::under &&
              detail::same_pair_ids(t[iu], t[iu + 1], a.id, b.id))
            push({kind, {io, iu, 0}});
        }
      }
      break;
    case MoveKind::V2_delete:
      for (std::size_t i = 0; i + 1 < n; ++i) {
        const auto &a = t[i], &b = t[i + 1];
        if (!a.is_virtual() || !b.is_virtual() || a.id == b.id || a.sign != -b.sign) continue;
        for (std::size_t j = i + 2; j + 1 < n; ++j)
          if (detail::same_pair_ids(t[j], t[j + 1], a.id, b.id)) push({kind, {i, j, 0}});
      }
      break;
    case MoveKind::Triangle_classical:
    case MoveKind::Triangle_virtual:
    case MoveKind::Triangle_semivirtual: {
      // Adjacent pairs of distinct crossings, grouped by their id pair.
      std::map<std::pair<int, int>, std::vector<std::size_t>> pairs;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        int a = t[i].id, b = t[i + 1].id;
        if (a == b) continue;
        pairs[{std::min(a, b), std::max(a, b)}].push_back(i);
      }
      auto lookup = [&](int a, int b) -> const std::vector<std::size_t>* {
        auto it = pairs.find({std::min(a, b), std::max(a, b)});
        return it == pairs.end() ? nullptr : &it->second;
      };
      std::set<std::array<std::size_t, 3>> seen;
      for (const auto& [xy, pos_xy] : pairs) {
        const int x = xy.first, y = xy.second;
        // third crossing z: partner of x in some other pair
        for (const auto& [xz, pos_xz] : pairs) {
          if (xz.first != x || xz.second <= y) continue;
          const int z = xz.second;
          const auto* pos_yz = lookup(y, z);
          if (!pos_yz) continue;
          for (auto i : pos_xy)
            for (auto j : pos_xz)
              for (auto k : *pos_yz) {
                std::array<std::size_t, 3> s{i, j, k};
                std::sort(s.begin(), s.end());
                MoveKind found = kind;
                if (!detail::check_triangle(code, s, found).empty() || found != kind) continue;
                if (seen.insert(s).second) push({kind, s});
              }
        }
      }
      break;
    }
  }
  return out;
}

/// Power r with zeta(apply(code, m)) = q^r zeta(code): Omega_1 kinks whose
/// under-passage comes first contribute q^(+-1), every other move q^0.
inline int q_power_change(const DiagramCode& code, const MoveSpec& m) {
  if (m.kind == MoveKind::R1_insert && m.variant == Variant::UO) return m.sign;
  if (m.kind == MoveKind::R1_delete) {
    const auto& a = code.tokens.at(m.site[0]);
    if (a.kind == PassKind::under) return -a.sign;
  }
  return 0;
}

struct WalkLimits {
  std::size_t max_classical = 10;
  std::size_t max_virtual = 10;
};

struct RandomWalk {
  DiagramCode result;
  std::vector<MoveSpec> log;
};

/// One random move: a kind uniformly among those with applicable sites, then
/// a site uniformly. Insertions that would exceed `limits` are skipped.
/// Returns nullopt when nothing applies.
inline std::optional<MoveSpec> random_move(const DiagramCode& code, std::mt19937_64& rng, WalkLimits limits = {}) {
  const std::size_t nc = code.classical_count();
  const std::size_t nv = code.virtual_count();
  std::vector<std::vector<MoveSpec>> options;
  for (auto kind : kAllMoveKinds) {
    if (kind == MoveKind::R1_insert && nc + 1 > limits.max_classical) continue;
    if (kind == MoveKind::R2_insert && nc + 2 > limits.max_classical) continue;
    if (kind == MoveKind::V1_insert && nv + 1 > limits.max_virtual) continue;
    if (kind == MoveKind::V2_insert && nv + 2 > limits.max_virtual) continue;
    auto sites = enumerate_sites(code, kind);
    if (!sites.empty()) options.push_back(std::move(sites));
  }
  if (options.empty()) return std::nullopt;
  const auto& chosen = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
  return chosen[std::uniform_int_distribution<std::size_t>(0, chosen.size() - 1)(rng)];
}

/// `steps` moves drawn by random_move from std::mt19937_64(seed).
inline RandomWalk random_equivalent(const DiagramCode& code, std::size_t steps, std::uint64_t seed,
                                    WalkLimits limits = {}) {
  std::mt19937_64 rng(seed);
  RandomWalk walk{code, {}};
  for (std::size_t step = 0; step < steps; ++step) {
    auto m = random_move(walk.result, rng, limits);
    if (!m) break;
    walk.result = apply(walk.result, *m);
    walk.log.push_back(*m);
  }
  return walk;
}

/// Move-log text: one move per line; blank lines and `#` comments are skipped.
inline std::string render_log(const std::vector<MoveSpec>& log) {
  std::string out;
  for (const auto& m : log) out += to_string(m) + "\n";
  return out;
}

inline std::vector<MoveSpec> parse_log(std::string_view text) {
  std::vector<MoveSpec> out;
  std::istringstream is{std::string(text)};
  std::string line;
  while (std::getline(is, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back(parse_move(line));
  }
  return out;
}

}  // namespace longzeta
