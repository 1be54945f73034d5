#pragma once

// Command-line front end. Exit status: 0 success, 2 invalid input or usage, 3 when a
// crosscheck or verification check fails.

#include <cohinv/serialize.hpp>
#include <cohinv/verify.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

namespace cohinv {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitCheckFailed = 3;

struct CliConfig {
  std::string command;
  std::string group;   // sl | hspin | sc | adjoint (describe), sl | hspin (table)
  std::string family = "A";
  long n = 0;
  long m = 0;
  long rank = 0;
  long p = 0;
  long r = 0;
  long max_n = 0;
  long height_max = kDefaultHeight;
  std::string suite = "all";
  bool json = false;
  std::string format = "markdown";
  bool trace = false;
};

namespace detail {

inline long hspin_n_from_rank(long rank) {
  if (rank % 4 != 0 || rank < 8) throw InvalidInput("HSpin rank must be a multiple of 4 and at least 8");
  return rank / 4;
}

inline GroupSpec spec_from_config(const CliConfig& cfg) {
  if (cfg.group == "sl") {
    if (cfg.n < 2) throw InvalidInput("--n must be at least 2");
    if (cfg.m < 1) throw InvalidInput("--m must be positive");
    if (cfg.n % cfg.m != 0) throw InvalidInput("m must divide n");
    return sl_mod_mu(cfg.n, cfg.m);
  }
  if (cfg.group == "hspin") return half_spin(hspin_n_from_rank(cfg.rank));
  const Family family = cfg.family == "D" ? Family::D : Family::A;
  if (cfg.group == "sc") return simply_connected(family, cfg.rank);
  return adjoint(family, cfg.rank);
}

inline int run_describe(const CliConfig& cfg, std::ostream& out) {
  const InvariantReport rep = report(spec_from_config(cfg), cfg.height_max);
  if (cfg.json)
    out << to_json(rep, cfg.trace).dump(2) << '\n';
  else
    out << to_markdown(rep, cfg.trace);
  return rep.all_pass() ? kExitOk : kExitCheckFailed;
}

inline int run_table(const CliConfig& cfg, std::ostream& out) {
  std::vector<TheoremRow> rows;
  Json j;
  j["table"] = cfg.group;
  if (cfg.group == "sl") {
    if (cfg.p == 0 || cfg.r == 0) throw InvalidInput("table sl requires --p and --r");
    const long max_n = cfg.max_n > 0 ? cfg.max_n : 30;
    rows = theorem_table_sl(cfg.p, cfg.r, valid_n_values(cfg.p, cfg.r, max_n), cfg.height_max);
    j["p"] = cfg.p;
    j["r"] = cfg.r;
  } else {
    const long max_n = cfg.max_n > 0 ? cfg.max_n : 8;
    std::vector<long> ns;
    for (long n = 2; n <= max_n; ++n) ns.push_back(n);
    rows = theorem_table_halfspin(ns, cfg.height_max);
  }
  if (rows.empty()) throw InvalidInput("no admissible n in the requested range");
  const bool pass = std::all_of(rows.begin(), rows.end(), [](const TheoremRow& r) { return r.pass && r.crosschecks_pass; });
  if (cfg.json) {
    j["height"] = cfg.height_max;
    Json arr = Json::array();
    for (const auto& r : rows) arr.push_back(to_json(r));
    j["rows"] = arr;
    j["pass"] = pass;
    out << j.dump(2) << '\n';
  } else {
    out << to_markdown(rows);
  }
  return pass ? kExitOk : kExitCheckFailed;
}

inline int run_restrict(const CliConfig& cfg, std::ostream& out) {
  const long n = hspin_n_from_rank(cfg.rank);
  const QuotientMap map = induced_quotient_map(n, cfg.height_max);
  if (cfg.json)
    out << to_json(map).dump(2) << '\n';
  else
    out << to_markdown(map);
  return kExitOk;
}

inline int run_verify_command(const CliConfig& cfg, std::ostream& out) {
  VerifyOptions opt;
  opt.max_n = cfg.max_n > 0 ? cfg.max_n : 30;
  opt.height = cfg.height_max;
  const auto checks = run_verify(cfg.suite, opt);

  std::vector<std::string> order;
  std::map<std::string, std::pair<std::size_t, std::size_t>> per_suite;  // total, passed
  std::size_t passed = 0;
  for (const auto& c : checks) {
    if (!per_suite.count(c.suite)) order.push_back(c.suite);
    auto& [total, ok] = per_suite[c.suite];
    ++total;
    ok += c.pass ? 1 : 0;
    passed += c.pass ? 1 : 0;
  }
  const std::size_t failed = checks.size() - passed;

  if (cfg.json) {
    Json j;
    j["suite"] = cfg.suite;
    j["max_n"] = opt.max_n;
    j["height"] = opt.height;
    j["checks"] = checks.size();
    j["passed"] = passed;
    j["failed"] = failed;
    Json suites;
    for (const auto& s : order) suites[s] = {{"checks", per_suite[s].first}, {"passed", per_suite[s].second}};
    j["suites"] = suites;
    Json failures = Json::array();
    for (const auto& c : checks)
      if (!c.pass) failures.push_back({{"suite", c.suite}, {"name", c.name}, {"detail", c.detail}});
    j["failures"] = failures;
    out << j.dump(2) << '\n';
  } else {
    out << "| suite | checks | passed |\n|---|---|---|\n";
    for (const auto& s : order) out << "| " << s << " | " << per_suite[s].first << " | " << per_suite[s].second << " |\n";
    for (const auto& c : checks)
      if (!c.pass) out << "FAILED [" << c.suite << "] " << c.name << ": " << c.detail << '\n';
    out << "\nverify: " << checks.size() << " checks, " << passed << " passed, " << failed << " failed\n";
  }
  return failed == 0 ? kExitOk : kExitCheckFailed;
}

}  // namespace detail

/// Parses args (without the program name) and runs the selected command.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Degree-3 invariants of SL_n/mu_m and HSpin_{4n} from lattice data", "cohinv"};
  app.require_subcommand(1);

  auto add_output = [&cfg](CLI::App* sub) {
    sub->add_option("--height", cfg.height_max, "maximum height of enumerated dominant characters")
        ->check(CLI::Range(2L, 64L));
    sub->add_flag("--json", cfg.json, "emit JSON (same as --format json)");
    sub->add_option("--format", cfg.format, "json or markdown")->check(CLI::IsMember({"json", "markdown"}));
  };

  CLI::App* describe = app.add_subcommand("describe", "report Q(G), Dec(G) and the invariants of one group");
  describe->add_option("group", cfg.group, "sl | hspin | sc | adjoint")
      ->required()
      ->check(CLI::IsMember({"sl", "hspin", "sc", "adjoint"}));
  describe->add_option("--n", cfg.n, "SL_n/mu_m: n");
  describe->add_option("--m", cfg.m, "SL_n/mu_m: m");
  describe->add_option("--rank", cfg.rank, "HSpin_R: R (multiple of 4); sc/adjoint: rank of the root system");
  describe->add_option("--type", cfg.family, "sc/adjoint: root system family")->check(CLI::IsMember({"A", "D"}));
  describe->add_flag("--trace", cfg.trace, "include derivation steps");
  add_output(describe);

  CLI::App* table = app.add_subcommand("table", "classification table against the engine");
  table->add_option("family", cfg.group, "sl | hspin")->required()->check(CLI::IsMember({"sl", "hspin"}));
  table->add_option("--p", cfg.p, "prime p (sl)");
  table->add_option("--r", cfg.r, "exponent r (sl)");
  table->add_option("--max-n", cfg.max_n, "largest n in the table");
  add_output(table);

  CLI::App* verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_option("--suite", cfg.suite, "all or one suite")->check(CLI::IsMember([] {
    std::vector<std::string> s{"all"};
    for (const auto& name : verify_suites()) s.push_back(name);
    return s;
  }()));
  verify->add_option("--max-n", cfg.max_n, "largest n for type A checks");
  add_output(verify);

  CLI::App* restrict_cmd = app.add_subcommand("restrict", "restriction from HSpin_{4n} to SL_{2n}/mu_2");
  restrict_cmd->add_option("--rank", cfg.rank, "R for HSpin_R (multiple of 4)")->required();
  add_output(restrict_cmd);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitInvalid;
  }
  if (cfg.format == "json") cfg.json = true;

  try {
    if (describe->parsed()) return detail::run_describe(cfg, out);
    if (table->parsed()) return detail::run_table(cfg, out);
    if (verify->parsed()) return detail::run_verify_command(cfg, out);
    return detail::run_restrict(cfg, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
}

}  // namespace cohinv
