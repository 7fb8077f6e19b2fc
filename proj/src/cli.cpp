#include <bkr/cli.hpp>
#include <bkr/error.hpp>
#include <bkr/parser.hpp>
#include <bkr/random_instances.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace bkr::cli {

namespace {

using Clock = std::chrono::steady_clock;

struct MethodRun {
  RunReport report;
  std::vector<SignAssignment> assignments;
};

struct CommonFlags {
  std::string method = "bkr";
  std::string format = "text";
  bool stats = false;
  bool parallel = false;
  bool force = false;
  std::uint64_t seed = 1;
};

std::vector<Method> methods_for(const std::string& name) {
  if (name == "naive") return {Method::Naive};
  if (name == "both") return {Method::Bkr, Method::Naive};
  return {Method::Bkr};
}

const char* method_name(Method m) { return m == Method::Bkr ? "bkr" : "naive"; }

DecisionOptions decision_options(const CommonFlags& flags, Method m) {
  DecisionOptions opts;
  opts.method = m;
  opts.exec = flags.parallel ? Exec::Parallel : Exec::Serial;
  if (flags.force) opts.naive_limit = 63;
  return opts;
}

std::string load_source(const std::string& arg, std::istream& in) {
  if (arg == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (!arg.empty() && arg.front() == '@') {
    std::ifstream file(arg.substr(1));
    if (!file) throw Error(Errc::Usage, "cannot read formula file '" + arg.substr(1) + "'");
    return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
  }
  return arg;
}

MethodRun run_formula(const ConvertedFormula& f, std::optional<Quantifier> q, Method m, const CommonFlags& flags) {
  const auto start = Clock::now();
  const auto opts = decision_options(flags, m);
  MethodRun run;
  if (q) {
    Decision d = decide(f, *q, opts);
    run.assignments = std::move(d.search.assignments);
    run.report = report_stats(d.search, m, std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start));
    run.report.verdict = d.verdict;
    run.report.quantifier = q;
  } else {
    SignSearch s = find_consistent_signs(f.polys, opts);
    run.report = report_stats(s, m, std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start));
    run.assignments = std::move(s.assignments);
  }
  run.report.consistent_sign_count = run.assignments.size();
  return run;
}

MethodRun run_at_roots(const Poly& p, const std::vector<Poly>& qs, Method m, const CommonFlags& flags) {
  const auto start = Clock::now();
  SignDetOptions opts;
  opts.exec = flags.parallel ? Exec::Parallel : Exec::Serial;
  if (flags.force) opts.naive_limit = 63;
  SignSearch s;
  s.assignments = m == Method::Bkr ? find_consistent_signs_at_roots(p, qs, s.stats, opts)
                                   : naive_find_consistent_signs_at_roots(p, qs, s.stats, opts);
  std::sort(s.assignments.begin(), s.assignments.end());
  s.factor_count = qs.size();
  for (const auto& q : qs) s.max_factor_degree = std::max(s.max_factor_degree, q.degree().value_or(0));
  MethodRun run;
  run.report = report_stats(s, m, std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start));
  run.report.consistent_sign_count = s.assignments.size();
  run.assignments = std::move(s.assignments);
  return run;
}

void print_stats(std::ostream& out, const RunReport& r) {
  out << "method: " << method_name(r.method) << '\n'
      << "consistent sign assignments: " << r.consistent_sign_count << '\n'
      << "factors: " << r.factor_count << " (max degree " << r.max_factor_degree << ")\n"
      << "tarski queries: " << r.tarski_queries << '\n'
      << "wall time: " << r.wall_time_ms << " ms\n";
}

// Prints every run and returns false when the runs disagree.
bool emit(std::ostream& out, std::ostream& err, const CommonFlags& flags, const std::vector<MethodRun>& runs,
          bool with_assignments) {
  bool agree = true;
  for (std::size_t i = 1; i < runs.size(); ++i) {
    if (runs[i].assignments != runs[0].assignments || runs[i].report.verdict != runs[0].report.verdict) agree = false;
  }
  if (flags.format == "json") {
    for (const auto& r : runs) out << to_json(r.report, with_assignments ? &r.assignments : nullptr).dump() << '\n';
  } else {
    const auto& first = runs.front();
    if (first.report.verdict) out << (*first.report.verdict ? "true" : "false") << '\n';
    if (with_assignments)
      for (const auto& s : first.assignments) out << format_assignment(s) << '\n';
    if (flags.stats || runs.size() > 1)
      for (const auto& r : runs) print_stats(out, r.report);
  }
  if (!agree) err << "error: bkr and naive sign determination disagree\n";
  return agree;
}

int cmd_selftest(std::ostream& out, const CommonFlags& flags, std::size_t cases) {
  Rng rng(flags.seed);
  std::uniform_int_distribution<std::size_t> root_count(0, 6);
  std::uniform_int_distribution<std::size_t> q_count(0, 5);
  SignDetOptions opts;
  opts.exec = flags.parallel ? Exec::Parallel : Exec::Serial;
  QueryStats bkr_stats;
  QueryStats naive_stats;
  std::size_t mismatches = 0;
  for (std::size_t c = 0; c < cases; ++c) {
    RootedPoly p = random_rooted_poly(rng, std::max<std::size_t>(1, root_count(rng)), 12, 4);
    std::vector<Poly> qs(q_count(rng));
    for (auto& q : qs) q = random_poly_avoiding(rng, p.roots, 4, 9, 3);

    std::vector<SignAssignment> expected;
    for (const auto& r : p.roots) {
      SignAssignment s;
      for (const auto& q : qs) s.push_back(sign_at(q, r));
      expected.push_back(std::move(s));
    }
    std::sort(expected.begin(), expected.end());
    expected.erase(std::unique(expected.begin(), expected.end()), expected.end());

    auto bkr = find_consistent_signs_at_roots(p.poly, qs, bkr_stats, opts);
    auto naive = naive_find_consistent_signs_at_roots(p.poly, qs, naive_stats, opts);
    std::sort(bkr.begin(), bkr.end());
    std::sort(naive.begin(), naive.end());
    if (bkr != expected || naive != expected) {
      ++mismatches;
      out << "mismatch: p = " << p.poly << ", " << qs.size() << " polynomials\n";
    }
  }
  if (flags.format == "json") {
    out << nlohmann::json{{"cases", cases},
                          {"mismatches", mismatches},
                          {"seed", flags.seed},
                          {"tarski_queries_bkr", bkr_stats.tarski_query_count},
                          {"tarski_queries_naive", naive_stats.tarski_query_count}}
               .dump()
        << '\n';
  } else {
    out << "selftest: " << cases << " cases, " << mismatches << " mismatches (seed " << flags.seed << ")\n";
    if (flags.stats) {
      out << "tarski queries: bkr " << bkr_stats.tarski_query_count << ", naive " << naive_stats.tarski_query_count
          << '\n';
    }
  }
  return mismatches == 0 ? kTrue : kInternal;
}

}  // namespace

RunReport report_stats(const SignSearch& search, Method method, std::chrono::milliseconds elapsed) {
  RunReport r;
  r.method = method;
  r.consistent_sign_count = search.assignments.size();
  r.tarski_queries = search.stats.tarski_query_count;
  r.factor_count = search.factor_count;
  r.max_factor_degree = search.max_factor_degree;
  r.wall_time_ms = static_cast<std::uint64_t>(elapsed.count());
  return r;
}

std::uint64_t naive_pipeline_queries(std::size_t n) {
  if (n == 0) return 0;
  return n * (std::uint64_t{1} << (n - 1)) + (std::uint64_t{1} << n);
}

nlohmann::json to_json(const RunReport& report, const std::vector<SignAssignment>* assignments) {
  nlohmann::json j;
  j["verdict"] = report.verdict ? nlohmann::json(*report.verdict) : nlohmann::json(nullptr);
  j["quantifier"] = report.quantifier
                        ? nlohmann::json(*report.quantifier == Quantifier::Forall ? "forall" : "exists")
                        : nlohmann::json(nullptr);
  j["method"] = method_name(report.method);
  j["consistent_sign_count"] = report.consistent_sign_count;
  j["tarski_queries"] = report.tarski_queries;
  j["factor_count"] = report.factor_count;
  j["max_factor_degree"] = report.max_factor_degree;
  j["wall_time_ms"] = report.wall_time_ms;
  if (assignments) {
    auto arr = nlohmann::json::array();
    for (const auto& s : *assignments) {
      auto row = nlohmann::json::array();
      for (const auto v : s) row.push_back(to_int(v));
      arr.push_back(std::move(row));
    }
    j["assignments"] = std::move(arr);
  }
  return j;
}

std::string format_assignment(const SignAssignment& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += s[i] == Sign::Positive ? "+1" : (s[i] == Sign::Negative ? "-1" : "0");
  }
  return out + ")";
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact decision procedure for univariate real arithmetic", "bkr"};
  app.fallthrough();
  app.require_subcommand(1);

  CommonFlags flags;
  app.add_option("--method", flags.method, "Sign determination: bkr, naive, or both (cross-check)")
      ->check(CLI::IsMember({"bkr", "naive", "both"}));
  app.add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--stats", flags.stats, "Print run statistics");
  app.add_flag("--parallel", flags.parallel, "Run independent subproblems concurrently");
  app.add_flag("--force", flags.force, "Lift the naive method's limit of 16 polynomials");
  app.add_option("--seed", flags.seed, "Random seed for selftest");

  auto* decide_cmd = app.add_subcommand("decide", "Decide a quantified formula");
  bool forall = false;
  bool exists = false;
  std::string formula_arg;
  auto* forall_opt = decide_cmd->add_flag("--forall", forall, "Decide for all x");
  auto* exists_opt = decide_cmd->add_flag("--exists", exists, "Decide for some x");
  forall_opt->excludes(exists_opt);
  decide_cmd->add_option("formula", formula_arg, "Formula text, @file, or - for stdin")->required();

  auto* signs_cmd = app.add_subcommand("signs", "List the consistent sign assignments of a formula's polynomials");
  signs_cmd->add_option("formula", formula_arg, "Formula text, @file, or - for stdin")->required();

  auto* roots_cmd = app.add_subcommand("signs-at-roots", "Sign assignments of qs at the real roots of p");
  std::string p_arg;
  std::string qs_arg;
  roots_cmd->add_option("--p", p_arg, "Polynomial p")->required();
  roots_cmd->add_option("--qs", qs_arg, "Polynomials separated by ';'");

  auto* selftest_cmd = app.add_subcommand("selftest", "Cross-check BKR and naive on random instances");
  std::size_t cases = 100;
  selftest_cmd->add_option("--cases", cases, "Number of random instances");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (decide_cmd->parsed() && !forall && !exists) throw CLI::RequiredError("--forall or --exists");
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsage;
  }

  try {
    const auto methods = methods_for(flags.method);
    if (selftest_cmd->parsed()) return cmd_selftest(out, flags, cases);

    if (roots_cmd->parsed()) {
      const Poly p = parse_poly(p_arg);
      const std::vector<Poly> qs = parse_poly_list(qs_arg);
      std::vector<MethodRun> runs;
      for (const auto m : methods) runs.push_back(run_at_roots(p, qs, m, flags));
      return emit(out, err, flags, runs, true) ? kTrue : kInternal;
    }

    const RawFormula raw = parse_formula(load_source(formula_arg, in));
    const ConvertedFormula f = convert(raw);
    std::optional<Quantifier> q;
    if (decide_cmd->parsed()) q = forall ? Quantifier::Forall : Quantifier::Exists;
    std::vector<MethodRun> runs;
    for (const auto m : methods) runs.push_back(run_formula(f, q, m, flags));
    if (!emit(out, err, flags, runs, !q.has_value())) return kInternal;
    if (q) return *runs.front().report.verdict ? kTrue : kFalse;
    return kTrue;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == Errc::Internal ? kInternal : kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace bkr::cli
