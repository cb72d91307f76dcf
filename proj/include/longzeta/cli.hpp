#pragma once

// Command-line front end. Exit codes: 0 ok, 1 invalid input, 2 internal
// invariant violation.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "longzeta/diagram.hpp"
#include "longzeta/errors.hpp"
#include "longzeta/invariant.hpp"
#include "longzeta/moves.hpp"
#include "longzeta/oracle.hpp"
#include "longzeta/zeta_polynomial.hpp"

namespace longzeta::cli {

using nlohmann::json;

inline constexpr std::uint64_t kDefaultSeed = 20240601;

struct CliConfig {
  std::string command;
  std::vector<std::string> inputs;
  bool json = false;
  std::uint64_t seed = kDefaultSeed;
  std::uint32_t steps = 30;
  std::uint32_t trials = 100;
  std::string log_path;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline DiagramCode load_code(const std::string& path) {
  DiagramCode code = parse_code(read_file(path));
  require_valid(code);
  return code;
}

inline json top_json(const ZetaPolynomial& z) {
  auto top = z.top_degree();
  return top ? json(*top) : json(nullptr);
}

inline json certificate_json(const MinimalityCertificate& c) {
  return {{"k", c.k},
          {"detB", c.det_B.to_string()},
          {"sk_coeff", c.sk_coefficient.to_string()},
          {"top_deg", c.zeta_top ? json(*c.zeta_top) : json(nullptr)},
          {"minimal", c.minimal}};
}

struct FuzzReport {
  std::uint32_t trials = 0;
  std::uint32_t passed = 0;
  int max_abs_r = 0;
  std::string failure;      ///< empty when every trajectory passed
  std::string failing_log;  ///< replayable log of the first failure
};

/// Starting diagram of trial `i`: the built-in corpus first, then random codes.
inline DiagramCode fuzz_start(std::uint32_t i, std::mt19937_64& rng) {
  static const std::vector<DiagramCode> corpus = {
      generate(Family::virtual_kink), generate(Family::classical_trefoil), generate(Family::classical_figure8),
      generate(Family::virtual_kink_chain, 3)};
  if (i < corpus.size()) return corpus[i];
  const int n = std::uniform_int_distribution<int>(1, 5)(rng);
  const int k = std::uniform_int_distribution<int>(0, 3)(rng);
  return random_code(rng, n, k);
}

/// One trajectory. Every step checks zeta' = q^r zeta with the r predicted by
/// q_power_change, top degree <= k, and det B = s^k coefficient.
/// Returns an empty string on success, otherwise a description.
inline std::string fuzz_trajectory(const DiagramCode& start, std::uint32_t steps, std::mt19937_64& rng,
                                   std::vector<MoveSpec>& log, int& total_r) {
  auto check_diagram = [](const DiagramCode& d, const ZetaPolynomial& z) -> std::string {
    auto top = z.top_degree();
    const auto k = static_cast<int>(d.virtual_count());
    if (top && *top > k)
      return "top degree " + std::to_string(*top) + " exceeds k = " + std::to_string(k) + " on " + render(d);
    certify_minimality(d);  // throws on det B mismatch
    return {};
  };
  DiagramCode cur = start;
  ZetaPolynomial z = zeta(cur);
  const ZetaPolynomial z0 = z;
  total_r = 0;
  if (auto bad = check_diagram(cur, z); !bad.empty()) return bad;
  for (std::uint32_t s = 0; s < steps; ++s) {
    auto m = random_move(cur, rng);
    if (!m) break;
    log.push_back(*m);
    const int r = q_power_change(cur, *m);
    DiagramCode next = apply(cur, *m);
    ZetaPolynomial zn = zeta(next);
    const ZetaPolynomial expected = ZetaPolynomial::monomial(RingT::q(r), 0) * z;
    if (!(zn == expected))
      return "step " + std::to_string(s + 1) + " (" + to_string(*m) + "): zeta " + to_string(zn) + " != q^" +
             std::to_string(r) + " * " + to_string(z);
    total_r += r;
    if (auto bad = check_diagram(next, zn); !bad.empty()) return "step " + std::to_string(s + 1) + ": " + bad;
    cur = std::move(next);
    z = std::move(zn);
  }
  if (!(z == ZetaPolynomial::monomial(RingT::q(total_r), 0) * z0))
    return "final zeta is not q^" + std::to_string(total_r) + " * initial";
  return {};
}

inline FuzzReport fuzz(std::uint32_t trials, std::uint32_t steps, std::uint64_t seed, std::ostream* log_out) {
  FuzzReport rep;
  rep.trials = trials;
  for (std::uint32_t i = 0; i < trials; ++i) {
    std::mt19937_64 rng(seed + i);
    const DiagramCode start = fuzz_start(i, rng);
    std::vector<MoveSpec> log;
    int total_r = 0;
    std::string why;
    try {
      why = fuzz_trajectory(start, steps, rng, log, total_r);
    } catch (const InternalError& e) {
      why = e.what();
    }
    std::string text = "# trial " + std::to_string(i) + " seed " + std::to_string(seed + i) + "\n# start " +
                       render(start) + "\n" + render_log(log);
    if (log_out) *log_out << text;
    if (why.empty()) {
      ++rep.passed;
      rep.max_abs_r = std::max(rep.max_abs_r, std::abs(total_r));
    } else if (rep.failure.empty()) {
      rep.failure = "trial " + std::to_string(i) + ": " + why;
      rep.failing_log = text;
    }
  }
  return rep;
}

struct SelftestReport {
  std::uint32_t trials = 0;
  std::uint32_t passed = 0;
  std::string failure;
};

inline oracle::RawLaurentPQ random_raw(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> exp(-3, 3), coef(-4, 4), count(0, 4);
  oracle::RawLaurentPQ x;
  for (int t = count(rng); t > 0; --t) x = x + oracle::RawLaurentPQ::monomial(coef(rng), exp(rng), exp(rng));
  return x;
}

/// Normal form against the two-homomorphism oracle, and Berkowitz against
/// the permutation expansion.
inline SelftestReport oracle_selftest(std::uint32_t trials, std::uint64_t seed) {
  SelftestReport rep;
  rep.trials = trials;
  std::mt19937_64 rng(seed);
  for (std::uint32_t i = 0; i < trials; ++i) {
    const auto a = random_raw(rng), b = random_raw(rng);
    const RingT x = oracle::raw_reduce(a), y = oracle::raw_reduce(b);
    bool ok = oracle::raw_equal_in_T(oracle::render_back(x * y), a * b) &&
              oracle::raw_equal_in_T(oracle::render_back(x + y), a + b) &&
              oracle::raw_equal_in_T(oracle::render_back(x - y), a - b) &&
              ((x == y) == oracle::raw_equal_in_T(a, b));
    const std::size_t n = 1 + i % 5;
    Matrix<RingT> m(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = oracle::raw_reduce(random_raw(rng));
    ok = ok && determinant(m) == oracle::perm_determinant(m);
    if (ok) ++rep.passed;
    else if (rep.failure.empty()) rep.failure = "trial " + std::to_string(i) + " disagrees";
  }
  return rep;
}

namespace detail {

inline int dispatch(CLI::App& app, const CliConfig& cfg, const std::vector<std::string>& extra, std::ostream& out,
                    std::ostream& err) {
  const auto& in = cfg.inputs;
  const std::string& cmd = cfg.command;
  if (cmd == "zeta") {
    const ZetaPolynomial z = zeta(load_code(in.at(0)));
    if (cfg.json) out << json{{"zeta", to_string(z)}, {"top_deg", top_json(z)}}.dump() << "\n";
    else out << to_string(z) << "\n";
  } else if (cmd == "split") {
    const ZetaSplit s = zeta_split(load_code(in.at(0)));
    if (cfg.json) out << json{{"minus", to_string(s.minus)}, {"plus", to_string(s.plus)}}.dump() << "\n";
    else out << "zeta_- = " << to_string(s.minus) << "\nzeta_+ = " << to_string(s.plus) << "\n";
  } else if (cmd == "certify") {
    const MinimalityCertificate c = certify_minimality(load_code(in.at(0)));
    if (cfg.json) {
      out << certificate_json(c).dump() << "\n";
    } else {
      out << "zeta = " << to_string(c.zeta) << "; k = " << c.k << "; ";
      if (c.minimal) out << "minimal (det B = " << c.det_B.to_string() << ")\n";
      else out << "no certificate\n";
    }
  } else if (cmd == "bound") {
    const DiagramCode code = load_code(in.at(0));
    const std::size_t lb = virtual_lower_bound(code);
    if (cfg.json) out << json{{"lower_bound", lb}, {"k", code.virtual_count()}}.dump() << "\n";
    else out << "virtual crossings >= " << lb << " (this diagram has " << code.virtual_count() << ")\n";
  } else if (cmd == "concat") {
    const DiagramCode sum = connect_sum(load_code(in.at(0)), load_code(in.at(1)));
    if (cfg.json) out << json{{"code", render(sum)}}.dump() << "\n";
    else out << render(sum) << "\n";
  } else if (cmd == "moves apply") {
    DiagramCode code = load_code(in.at(0));
    std::vector<MoveSpec> moves;
    if (!cfg.log_path.empty()) moves = parse_log(read_file(cfg.log_path));
    for (const auto& line : extra) moves.push_back(parse_move(line));
    int r = 0;
    for (const auto& m : moves) {
      r += q_power_change(code, m);
      code = apply(code, m);
    }
    if (cfg.json) out << json{{"code", render(code)}, {"r", r}}.dump() << "\n";
    else out << render(code) << "\n";
  } else if (cmd == "moves sites") {
    const DiagramCode code = load_code(in.at(0));
    const auto sites = enumerate_sites(code, parse_move_kind(extra.at(0)));
    if (cfg.json) {
      json arr = json::array();
      for (const auto& m : sites) arr.push_back(to_string(m));
      out << arr.dump() << "\n";
    } else {
      for (const auto& m : sites) out << to_string(m) << "\n";
    }
  } else if (cmd == "fuzz") {
    std::ofstream log_file;
    if (!cfg.log_path.empty()) {
      log_file.open(cfg.log_path);
      if (!log_file) throw Error("cannot write log file '" + cfg.log_path + "'");
    }
    const FuzzReport rep = fuzz(cfg.trials, cfg.steps, cfg.seed, cfg.log_path.empty() ? nullptr : &log_file);
    if (cfg.json) {
      out << json{{"trials", rep.trials}, {"passed", rep.passed}, {"max_abs_r", rep.max_abs_r},
                  {"failure", rep.failure.empty() ? json(nullptr) : json(rep.failure)}}
                 .dump()
          << "\n";
    } else {
      out << rep.passed << "/" << rep.trials << " trajectories invariant; max |r| observed: " << rep.max_abs_r
          << "\n";
    }
    if (!rep.failure.empty()) {
      err << "invariant violation in " << rep.failure << "\n" << rep.failing_log;
      return 2;
    }
  } else if (cmd == "oracle selftest") {
    const SelftestReport rep = oracle_selftest(cfg.trials, cfg.seed);
    if (cfg.json) out << json{{"trials", rep.trials}, {"passed", rep.passed}}.dump() << "\n";
    else out << "oracle selftest: " << rep.passed << "/" << rep.trials << " agree\n";
    if (!rep.failure.empty()) {
      err << "oracle disagreement: " << rep.failure << "\n";
      return 2;
    }
  } else if (cmd == "corpus list") {
    const std::vector<std::pair<std::string, DiagramCode>> corpus = {
        {"virtual_kink", generate(Family::virtual_kink)},
        {"trefoil", generate(Family::classical_trefoil)},
        {"figure8", generate(Family::classical_figure8)},
        {"kink_chain_3", generate(Family::virtual_kink_chain, 3)}};
    json arr = json::array();
    for (const auto& [name, code] : corpus) {
      if (cfg.json) arr.push_back({{"name", name}, {"code", render(code)}});
      else out << name << ": " << render(code) << "\n";
    }
    if (cfg.json) out << arr.dump() << "\n";
  } else {
    err << app.help();
    return 1;
  }
  return 0;
}

}  // namespace detail

/// Runs one command line (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"long virtual knot zeta-polynomial toolkit", "longzeta"};
  app.require_subcommand(1);
  CliConfig cfg;
  std::vector<std::string> extra;
  std::string file1, file2;

  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", cfg.json, "machine-readable output"); };
  auto one_file = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", file1, ".gauss diagram")->required();
    add_json(sub);
    return sub;
  };
  one_file("zeta", "print the zeta-polynomial");
  one_file("split", "print zeta_- and zeta_+");
  one_file("certify", "minimality certificate");
  one_file("bound", "lower bound on the virtual crossing number");
  CLI::App* concat = app.add_subcommand("concat", "connect sum of two long diagrams");
  concat->add_option("first", file1, "leading .gauss diagram")->required();
  concat->add_option("second", file2, "trailing .gauss diagram")->required();
  add_json(concat);

  CLI::App* moves = app.add_subcommand("moves", "Reidemeister move rewriting");
  moves->require_subcommand(1);
  CLI::App* mapply = moves->add_subcommand("apply", "apply moves given inline or with --log");
  mapply->add_option("file", file1, ".gauss diagram")->required();
  mapply->add_option("moves", extra, "move lines, e.g. \"R1_insert 0 + UO\"");
  mapply->add_option("--log", cfg.log_path, "move-log file to replay first");
  add_json(mapply);
  CLI::App* msites = moves->add_subcommand("sites", "list applicable sites of one move kind");
  msites->add_option("file", file1, ".gauss diagram")->required();
  msites->add_option("kind", extra, "move kind")->required()->expected(1);
  add_json(msites);

  CLI::App* fz = app.add_subcommand("fuzz", "randomized invariance campaign");
  fz->add_option("--seed", cfg.seed, "base seed");
  fz->add_option("--steps", cfg.steps, "moves per trajectory");
  fz->add_option("--trials", cfg.trials, "number of trajectories");
  fz->add_option("--log", cfg.log_path, "write every trajectory's move log here");
  add_json(fz);

  CLI::App* orc = app.add_subcommand("oracle", "brute-force verifiers");
  orc->require_subcommand(1);
  CLI::App* selftest = orc->add_subcommand("selftest", "normal form and determinant against the oracle");
  selftest->add_option("--seed", cfg.seed, "seed");
  selftest->add_option("--trials", cfg.trials, "number of trials");
  add_json(selftest);

  CLI::App* corpus = app.add_subcommand("corpus", "built-in diagrams");
  corpus->require_subcommand(1);
  add_json(corpus->add_subcommand("list", "print the built-in corpus"));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  for (const auto* f : {&file1, &file2})
    if (!f->empty()) cfg.inputs.push_back(*f);
  for (CLI::App* sub : app.get_subcommands()) {
    cfg.command = sub->get_name();
    for (CLI::App* leaf : sub->get_subcommands()) cfg.command += " " + leaf->get_name();
  }
  try {
    return detail::dispatch(app, cfg, extra, out, err);
  } catch (const InternalError& e) {
    err << "internal invariant violation: " << e.what() << "\n";
    return 2;
  } catch (const std::overflow_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace longzeta::cli
