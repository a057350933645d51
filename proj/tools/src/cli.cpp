#include "qbpd_cli/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qbpd/analysis.hpp"
#include "qbpd/error.hpp"
#include "qbpd/moves.hpp"
#include "qbpd/oracle.hpp"
#include "qbpd_cli/render.hpp"

namespace qbpd::cli {

namespace {

/// Raised for bad flag combinations discovered after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EnumOptions {
  std::string perm;
  bool unpaired = false;
  bool count_only = false;
  std::string out_file;
};

struct PolyOptions {
  std::string perm;
  std::string mode = "qbpd";
  std::vector<std::string> specialize;
  std::string format = "text";
};

struct VerifyOptions {
  std::string check;
  int n = 4;
  int sample = 0;
  std::uint64_t seed = 1;
};

struct StatsOptions {
  int n = 0;
  std::string perm;
  std::string format;
  bool allow_large = false;
};

struct RenderOptions {
  std::string input;
  std::string format = "ascii";
  int index = 0;
};

int cmd_enum(const EnumOptions& o, std::ostream& out) {
  const Permutation w = Permutation::parse(o.perm);
  const auto ds = o.unpaired ? enumerate_unpaired(w) : enumerate_qbpds(w);
  out << ds.size() << '\n';
  if (o.count_only) return kExitOk;
  const std::string text = to_text(ds);
  if (!o.out_file.empty()) {
    std::ofstream f(o.out_file);
    if (!f) throw UsageError("cannot open " + o.out_file);
    f << text;
    return kExitOk;
  }
  out << '\n' << text;
  return kExitOk;
}

int cmd_poly(const PolyOptions& o, std::ostream& out) {
  const Permutation w = Permutation::parse(o.perm);
  Poly f = o.mode == "qbpd"     ? qbpd_polynomial(w)
           : o.mode == "oracle" ? quantum_double_schubert_defining(w)
                                : quantum_double_schubert_transition(w);
  // the oracles work in the trimmed ambient; report everything in n = |w|
  if (f.ambient() < w.size()) f = embed_poly(f, w.size());
  const bool zero_y = std::ranges::count(o.specialize, "y") > 0;
  const bool zero_q = std::ranges::count(o.specialize, "q") > 0;
  f = specialize(f, zero_y, zero_q);
  if (o.format == "json") {
    out << to_json(f).dump() << '\n';
  } else {
    out << canonical_text(f) << '\n';
  }
  return kExitOk;
}

std::vector<Permutation> verify_domain(const VerifyOptions& o, bool skip_identity) {
  std::vector<Permutation> perms = enumerate_symmetric_group(o.n);
  if (skip_identity) std::erase_if(perms, [](const Permutation& p) { return p.is_identity(); });
  if (o.sample > 0 && static_cast<std::size_t>(o.sample) < perms.size()) {
    std::mt19937_64 rng(o.seed);
    std::shuffle(perms.begin(), perms.end(), rng);
    perms.erase(perms.begin() + o.sample, perms.end());
    std::sort(perms.begin(), perms.end());
  }
  return perms;
}

int check_limit(const std::string& check, int n, int lo, int hi) {
  if (n < lo || n > hi) {
    throw UsageError(check + " supports --n in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return n;
}

int cmd_verify(const VerifyOptions& o, int jobs, std::ostream& out) {
  using Check = std::function<std::string(const Permutation&)>;
  Check check;
  bool skip_identity = false;
  const std::string& kind = o.check;
  if (kind == "theorem") {
    check_limit(kind, o.n, 1, 6);
    check = [](const Permutation& w) -> std::string {
      const Poly t = qbpd_polynomial(w);
      if (t != embed_poly(quantum_double_schubert_defining(w), w.size())) return "QBPD sum differs from defining oracle";
      if (t != embed_poly(quantum_double_schubert_transition(w), w.size())) return "QBPD sum differs from transition oracle";
      return {};
    };
  } else if (kind == "transition") {
    check_limit(kind, o.n, 2, 6);
    skip_identity = true;
    check = [](const Permutation& w) -> std::string {
      const Poly r = verify_transition(w);
      return r.is_zero() ? std::string{} : "residual " + canonical_text(r);
    };
  } else if (kind == "monk") {
    check_limit(kind, o.n, 2, 6);
    check = [](const Permutation& w) -> std::string {
      for (int k = 1; k < w.size(); ++k) {
        const Poly r = monk_residual(k, w);
        if (!r.is_zero()) return "k=" + std::to_string(k) + " residual " + canonical_text(r);
      }
      return {};
    };
  } else if (kind == "closure") {
    check_limit(kind, o.n, 1, kBruteForceLimit);
    check = [](const Permutation& w) -> std::string {
      const auto a = enumerate_qbpds(w);
      const auto b = brute_force_enumerate(w);
      if (a == b) return {};
      return "closure has " + std::to_string(a.size()) + " diagrams, brute force " + std::to_string(b.size());
    };
  } else {
    check_limit(kind, o.n, 1, 5);
    check = [](const Permutation& w) -> std::string {
      const int N = w.size() + 1;
      const Poly lhs = qbpd_polynomial(embed(w, N));
      const Poly rhs = embed_poly(qbpd_polynomial(w), N);
      return lhs == rhs ? std::string{} : "T(embed w) differs from embed(T(w))";
    };
  }

  const auto perms = verify_domain(o, skip_identity);
  std::vector<std::string> failures(perms.size());
  parallel_for(perms.size(), jobs, [&](std::size_t i) {
    try {
      failures[i] = check(perms[i]);
    } catch (const Error& e) {
      failures[i] = std::string("error: ") + e.what();
    }
  });

  std::size_t failed = 0;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    if (failures[i].empty()) continue;
    ++failed;
    out << "FAIL " << perms[i].to_bracket_string() << ": " << failures[i] << '\n';
  }
  out << kind << ": " << (failed ? "fail" : "pass") << ", " << perms.size() - failed << '/' << perms.size()
      << " permutations of S" << o.n << '\n';
  return failed ? kExitFailed : kExitOk;
}

nlohmann::json stats_json(const CancellationStats& s) {
  return {{"perm", s.perm.to_string()},
          {"poly_monomials", s.poly_monomials},
          {"qbpd_monomials", s.qbpd_monomials},
          {"cancellations", s.cancellations},
          {"qbpd_count", s.qbpd_count}};
}

void write_csv(std::ostream& out, const std::vector<CancellationStats>& rows) {
  out << "perm,poly_monomials,qbpd_monomials,cancellations,qbpd_count\n";
  for (const auto& s : rows) {
    out << s.perm.to_string() << ',' << s.poly_monomials << ',' << s.qbpd_monomials << ',' << s.cancellations << ','
        << s.qbpd_count << '\n';
  }
}

int cmd_stats(const StatsOptions& o, int jobs, std::ostream& out) {
  if (!o.perm.empty()) {
    const CancellationStats s = cancellation_stats(Permutation::parse(o.perm));
    if (o.format == "json") {
      out << stats_json(s).dump() << '\n';
    } else if (o.format == "summary") {
      throw UsageError("--format summary needs --n");
    } else {
      write_csv(out, {s});
    }
    return kExitOk;
  }

  const SweepSummary sum = sweep(o.n, jobs, o.allow_large);
  const std::string argmax = sum.argmax ? sum.argmax->to_bracket_string() : "-";
  if (o.format == "csv") {
    write_csv(out, sum.rows);
  } else if (o.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& s : sum.rows) rows.push_back(stats_json(s));
    out << nlohmann::json{{"n", sum.n},
                          {"total", sum.total},
                          {"average", sum.average},
                          {"max", sum.max},
                          {"argmax", sum.argmax ? nlohmann::json(sum.argmax->to_string()) : nlohmann::json()},
                          {"rows", rows}}
               .dump()
        << '\n';
  } else {
    out << "S" << sum.n << ": total " << sum.total << ", average " << std::fixed << std::setprecision(2) << sum.average
        << ", max " << sum.max << " at " << argmax << '\n';
  }
  return kExitOk;
}

std::vector<Diagram> render_inputs(const std::string& input) {
  if (std::filesystem::is_regular_file(input)) {
    std::ifstream f(input);
    std::stringstream buf;
    buf << f.rdbuf();
    return diagrams_from_text(buf.str());
  }
  return enumerate_qbpds(Permutation::parse(input));
}

int cmd_render(const RenderOptions& o, std::ostream& out) {
  const auto ds = render_inputs(o.input);
  std::vector<const Diagram*> chosen;
  if (o.index != 0) {
    if (o.index < 1 || static_cast<std::size_t>(o.index) > ds.size()) {
      throw UsageError("--index " + std::to_string(o.index) + " out of range 1.." + std::to_string(ds.size()));
    }
    chosen.push_back(&ds[static_cast<std::size_t>(o.index - 1)]);
  } else {
    for (const auto& d : ds) chosen.push_back(&d);
  }
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    if (i) out << '\n';
    out << (o.format == "svg" ? render_svg(*chosen[i]) : render_ascii(*chosen[i]));
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum bumpless pipe dreams and quantum double Schubert polynomials", "qbpd"};
  app.require_subcommand(1);
  app.fallthrough();
  int jobs = 0;
  app.add_option("--jobs,-j", jobs, "Worker threads (default: QBPD_JOBS or all cores)")->check(CLI::NonNegativeNumber);

  EnumOptions eo;
  auto* en = app.add_subcommand("enum", "List the QBPDs of a permutation");
  en->add_option("perm", eo.perm, "Permutation in one-line notation")->required();
  en->add_flag("--unpaired", eo.unpaired, "Only diagrams without dominoes");
  en->add_flag("--count", eo.count_only, "Print only the count");
  en->add_option("--out", eo.out_file, "Write the diagrams to a file");

  PolyOptions po;
  auto* pl = app.add_subcommand("poly", "Print a quantum double Schubert polynomial");
  pl->add_option("perm", po.perm, "Permutation in one-line notation")->required();
  pl->add_option("--mode", po.mode, "qbpd, oracle or transition")
      ->check(CLI::IsMember({"qbpd", "oracle", "transition"}));
  pl->add_option("--specialize", po.specialize, "Variables to set to zero (y, q)")
      ->delimiter(',')
      ->check(CLI::IsMember({"y", "q"}));
  pl->add_option("--format", po.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  VerifyOptions vo;
  auto* vf = app.add_subcommand("verify", "Run an invariant suite");
  vf->add_option("check", vo.check, "theorem, transition, monk, closure or stability")
      ->required()
      ->check(CLI::IsMember({"theorem", "transition", "monk", "closure", "stability"}));
  vf->add_option("--n", vo.n, "Symmetric group size");
  vf->add_option("--sample", vo.sample, "Random sample size (0 = exhaustive)")->check(CLI::NonNegativeNumber);
  vf->add_option("--seed", vo.seed, "Sampling seed");

  StatsOptions so;
  auto* st = app.add_subcommand("stats", "Cancellation statistics");
  auto* stn = st->add_option("--n", so.n, "Sweep all of S_n");
  auto* stp = st->add_option("--perm", so.perm, "A single permutation");
  stn->excludes(stp);
  st->add_option("--format", so.format, "csv, json or summary")->check(CLI::IsMember({"csv", "json", "summary"}));
  st->add_flag("--allow-large", so.allow_large, "Permit sweeps beyond S_6");

  RenderOptions ro;
  auto* rd = app.add_subcommand("render", "Draw diagrams");
  rd->add_option("input", ro.input, "Permutation or diagram file")->required();
  rd->add_option("--format", ro.format, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}));
  rd->add_option("--index", ro.index, "1-based diagram index in canonical order");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (en->parsed()) return cmd_enum(eo, out);
    if (pl->parsed()) return cmd_poly(po, out);
    if (vf->parsed()) return cmd_verify(vo, jobs, out);
    if (st->parsed()) {
      if (so.perm.empty() && so.n == 0) throw UsageError("stats needs --n or --perm");
      if (so.format.empty()) so.format = so.perm.empty() ? "summary" : "csv";
      return cmd_stats(so, jobs, out);
    }
    return cmd_render(ro, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace qbpd::cli
