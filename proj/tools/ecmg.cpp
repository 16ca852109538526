// ecmg: command line front end.
//
// Exit codes: 0 found / holds, 1 absent / unmet, 2 usage or parse error,
// 3 unsolved.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "ecmg/error.hpp"
#include "ecmg/io.hpp"
#include "ecmg/oracle.hpp"
#include "ecmg/search.hpp"
#include "ecmg/solver.hpp"
#include "ecmg/theorems.hpp"
#include "ecmg/verification.hpp"

namespace {

constexpr int kFound = 0;
constexpr int kAbsent = 1;
constexpr int kUsage = 2;
constexpr int kUnsolved = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ecmg::TheoremId theorem_or_usage(const std::string& name) {
  const auto id = ecmg::parse_theorem(name);
  if (!id) throw UsageError("unknown theorem '" + name + "' (s2, rd2, general, connected, rainbow)");
  return *id;
}

int emit(const ecmg::Certificate& cert) {
  std::cout << ecmg::format_certificate(cert) << '\n';
  switch (cert.kind) {
    case ecmg::CertificateKind::Path: return kFound;
    case ecmg::CertificateKind::Absent: return kAbsent;
    case ecmg::CertificateKind::Unsolved: return kUnsolved;
  }
  return kUnsolved;
}

struct SolveArgs {
  std::string input;
  std::string method = "auto";
  int base = 16;
  bool trace = false;
};

int run_solve(const SolveArgs& args) {
  const ecmg::ColouredMultigraph g = ecmg::read_graph_file(args.input);
  const bool exact = args.method == "exact" || (args.method == "auto" && g.n() <= 20);
  if (exact) {
    try {
      const auto path = ecmg::find_php(g);
      return emit(path ? ecmg::Certificate{ecmg::CertificateKind::Path, *path} : ecmg::Certificate{});
    } catch (const ecmg::Error& e) {
      if (e.kind() != ecmg::ErrorKind::BudgetExceeded) throw;
      std::cerr << "note: " << e.what() << '\n';
      return emit({ecmg::CertificateKind::Unsolved, {}});
    }
  }
  ecmg::SolveOptions options;
  options.base_threshold = args.base;
  const ecmg::SolveOutcome outcome = ecmg::solve(g, options);
  if (args.trace) {
    for (const auto& step : outcome.trace) {
      std::cerr << "step " << ecmg::to_string(step.kind) << " n=" << step.graph.n() << " c=" << step.graph.c() << '\n';
    }
    for (const auto& note : outcome.notes) std::cerr << "note: " << note << '\n';
  }
  switch (outcome.status) {
    case ecmg::SolveStatus::Path: return emit({ecmg::CertificateKind::Path, *outcome.path});
    case ecmg::SolveStatus::Absent: return emit({ecmg::CertificateKind::Absent, {}});
    case ecmg::SolveStatus::Unsolved: return emit({ecmg::CertificateKind::Unsolved, {}});
  }
  return kUnsolved;
}

int run_check(const std::string& input, const std::string& theorem) {
  const ecmg::TheoremId id = theorem_or_usage(theorem);
  const ecmg::ColouredMultigraph g = ecmg::read_graph_file(input);
  const bool met = ecmg::hypothesis_holds(g, id);
  std::cout << "hypothesis: " << (met ? "met" : "unmet") << '\n';
  std::cout << "m=" << g.m() << '\n';
  if (ecmg::in_stated_range(id, g.n(), g.c())) {
    std::cout << "threshold=" << ecmg::threshold(id, g.n(), g.c()) << '\n';
  } else {
    std::cout << "threshold=out-of-range\n";
  }
  return met ? kFound : kAbsent;
}

int run_extremal(const std::string& theorem, int n, std::optional<int> c, const std::string& out) {
  const ecmg::TheoremId id = theorem_or_usage(theorem);
  const ecmg::ColouredMultigraph g = ecmg::extremal(id, n, c.value_or(ecmg::default_colours(id)));
  if (out.empty() || out == "-") {
    std::cout << ecmg::serialize_graph(g);
  } else {
    ecmg::write_graph_file(out, g);
    std::cerr << "wrote " << out << " (n=" << g.n() << " c=" << g.c() << " m=" << g.m() << ")\n";
  }
  return kFound;
}

struct VerifyArgs {
  std::string lemma;
  std::string theorem;
  std::vector<int> ns;
  std::optional<int> c;
  std::uint64_t samples = 1000;
  std::uint64_t seed = 1;
  bool exhaustive = false;
  int p = 3;
  std::string matching_case;
  std::string witness_dir;
  int threads = 0;
};

void write_witnesses(const ecmg::VerificationReport& report, const std::string& dir) {
  if (dir.empty() || report.violations.empty()) return;
  std::filesystem::create_directories(dir);
  for (std::size_t i = 0; i < report.violations.size(); ++i) {
    const auto path = std::filesystem::path(dir) / ("witness_" + std::to_string(i) + ".ecmg");
    ecmg::write_graph_file(path.string(), report.violations[i]);
  }
  std::cerr << "wrote " << report.violations.size() << " witness file(s) to " << dir << '\n';
}

int run_verify(const VerifyArgs& args) {
  if (args.lemma.empty() == args.theorem.empty()) throw UsageError("give exactly one of --lemma or --theorem");
  const ecmg::CampaignOptions options{args.threads};
  ecmg::VerificationReport report;
  auto single_n = [&]() {
    if (args.ns.size() != 1) throw UsageError("this check takes exactly one --n");
    return args.ns.front();
  };

  if (!args.theorem.empty()) {
    const ecmg::TheoremId id = theorem_or_usage(args.theorem);
    if (args.ns.empty()) throw UsageError("--theorem needs at least one --n");
    const int c = args.c.value_or(ecmg::default_colours(id));
    for (int n : args.ns) {
      if (!ecmg::in_stated_range(id, n, c)) {
        throw UsageError(std::string(ecmg::to_string(id)) + " is not stated for n=" + std::to_string(n) +
                         ", c=" + std::to_string(c));
      }
    }
    report = ecmg::verify_theorem(id, args.ns, c, args.samples, args.seed, options);
  } else if (args.lemma == "edges-without-cycle") {
    const auto mode = args.exhaustive ? ecmg::CheckMode::Exhaustive : ecmg::CheckMode::Sampled;
    report = ecmg::check_lemma_edges_without_cycle(args.p, args.c.value_or(2), mode, args.samples, args.seed, options);
  } else if (args.lemma == "missing-edges-matching") {
    const auto which = ecmg::parse_matching_case(args.matching_case);
    if (!which) throw UsageError("--case must be even-full, odd or even-deficient");
    report = ecmg::check_lemma_missing_edges_matching(single_n(), args.c.value_or(2), *which, args.samples, args.seed,
                                                      options);
  } else if (args.lemma == "matchings12") {
    if (args.ns.empty()) throw UsageError("matchings12 needs at least one --n");
    report = ecmg::check_lemma_matchings12(args.ns, args.samples, args.seed, options);
  } else if (args.lemma == "matchings-perfect") {
    report = ecmg::check_lemma_matchings_perfect(single_n(), args.samples, args.seed, options);
  } else if (args.lemma == "matching") {
    report = ecmg::check_lemma_matching(single_n(), args.samples, args.seed, options);
  } else {
    throw UsageError("unknown lemma '" + args.lemma +
                     "' (edges-without-cycle, missing-edges-matching, matchings12, matchings-perfect, matching)");
  }
  if (args.exhaustive && !report.exhaustive) throw UsageError("--exhaustive is only supported by edges-without-cycle");

  std::cout << report.label << '\n' << ecmg::format_report(report) << '\n';
  write_witnesses(report, args.witness_dir);
  return report.violation_count() == 0 ? kFound : kAbsent;
}

int run_enumerate(int n, int c) {
  const auto report = ecmg::oracle::enumerate_and_compare(n, c);
  std::cout << "graphs=" << report.graphs << " with_path=" << report.with_path
            << " disagreements=" << report.disagreements << '\n';
  return report.disagreements == 0 ? kFound : kAbsent;
}

bool usage_kind(ecmg::ErrorKind kind) {
  using K = ecmg::ErrorKind;
  switch (kind) {
    case K::BudgetExceeded:
    case K::GuaranteeViolated:
    case K::InvariantViolated:
    case K::LiftFailed: return false;
    default: return true;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Proper Hamiltonian paths in edge-coloured multigraphs"};
  app.require_subcommand(1);
  int status = kUsage;

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Find a proper Hamiltonian path");
  solve->add_option("input", solve_args.input, "Graph file")->required();
  solve->add_option("--method", solve_args.method, "exact, constructive or auto")
      ->check(CLI::IsMember({"exact", "constructive", "auto"}));
  solve->add_option("--base", solve_args.base, "Base-case size for the constructive solver")
      ->check(CLI::Range(1, 20));
  solve->add_flag("--trace", solve_args.trace, "Print the reduction chain to stderr");
  solve->callback([&] { status = run_solve(solve_args); });

  std::string check_input;
  std::string check_theorem;
  auto* check = app.add_subcommand("check", "Evaluate a theorem's hypothesis");
  check->add_option("input", check_input, "Graph file")->required();
  check->add_option("--theorem", check_theorem, "s2, rd2, general, connected or rainbow")->required();
  check->callback([&] { status = run_check(check_input, check_theorem); });

  std::string ex_theorem;
  int ex_n = 0;
  std::optional<int> ex_c;
  std::string ex_out;
  auto* extremal = app.add_subcommand("extremal", "Write a tightness construction");
  extremal->add_option("--theorem", ex_theorem)->required();
  extremal->add_option("--n", ex_n)->required();
  extremal->add_option("--c", ex_c);
  extremal->add_option("--out", ex_out, "Output file (stdout if omitted)");
  extremal->callback([&] { status = run_extremal(ex_theorem, ex_n, ex_c, ex_out); });

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run a lemma or theorem verification campaign");
  verify->add_option("--lemma", va.lemma);
  verify->add_option("--theorem", va.theorem);
  verify->add_option("--n", va.ns)->allow_extra_args(false);
  verify->add_option("--c", va.c);
  verify->add_option("--samples", va.samples);
  verify->add_option("--seed", va.seed);
  verify->add_flag("--exhaustive", va.exhaustive);
  verify->add_option("--p", va.p, "Path length parameter for edges-without-cycle");
  verify->add_option("--case", va.matching_case, "even-full, odd or even-deficient");
  verify->add_option("--witness-dir", va.witness_dir, "Directory for violation witnesses");
  verify->add_option("--threads", va.threads, "Worker threads (default: ECMG_THREADS or all)");
  verify->callback([&] { status = run_verify(va); });

  int en_n = 0;
  int en_c = 2;
  bool en_oracle = false;
  auto* enumerate = app.add_subcommand("enumerate", "Compare the exact search with brute force on all small graphs");
  enumerate->add_option("--n", en_n)->required();
  enumerate->add_option("--c", en_c);
  enumerate->add_flag("--oracle", en_oracle, "Compare against the permutation brute force");
  enumerate->callback([&] { status = run_enumerate(en_n, en_c); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ecmg::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage_kind(e.kind()) ? kUsage : kUnsolved;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return status;
}
