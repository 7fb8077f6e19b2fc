#pragma once

#include <bkr/decision.hpp>

#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace bkr::cli {

enum ExitCode : int { kTrue = 0, kFalse = 1, kUsage = 2, kInternal = 3 };

/// Summary of one completed run. verdict and quantifier are present for
/// `decide` only.
struct RunReport {
  std::optional<bool> verdict;
  std::optional<Quantifier> quantifier;
  Method method = Method::Bkr;
  std::size_t consistent_sign_count = 0;
  std::uint64_t tarski_queries = 0;
  std::size_t factor_count = 0;
  std::size_t max_factor_degree = 0;
  std::uint64_t wall_time_ms = 0;
};

RunReport report_stats(const SignSearch& search, Method method, std::chrono::milliseconds elapsed);

/// Queries the naive method spends on the whole pipeline for n basis
/// factors: n restricted problems of n-1 polynomials plus one of n, i.e.
/// n 2^(n-1) + 2^n.
std::uint64_t naive_pipeline_queries(std::size_t n);

/// Keys: verdict, quantifier, method, consistent_sign_count, tarski_queries,
/// factor_count, max_factor_degree, wall_time_ms (+ assignments if given).
nlohmann::json to_json(const RunReport& report, const std::vector<SignAssignment>* assignments = nullptr);

std::string format_assignment(const SignAssignment& s);

/// Entry point of the command-line tool; args exclude the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace bkr::cli
