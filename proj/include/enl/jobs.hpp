#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "enl/hypernode.hpp"

namespace enl {

struct RunOptions {
  std::uint64_t seed = 0;
  std::uint64_t budget = 1'000'000;
  std::uint64_t horizon = 256;
};

/// Exit codes: 0 success, 1 error or failed check, 2 FilterDependent,
/// indeterminate or exhausted.
struct Report {
  nlohmann::json body;
  int exit_code = 0;
};

Report run_job(const nlohmann::json& job, const RunOptions& options);

/// Runs the jobs on up to `threads` workers; reports follow input order.
std::vector<Report> run_batch(const nlohmann::json& jobs, const RunOptions& options, unsigned threads);

/// Largest exit code of the batch.
int batch_exit_code(const std::vector<Report>& reports);

struct CheckOutcome {
  std::string name;
  bool pass = true;
  std::size_t cases = 0;
  std::string counterexample;
};

/// Suites: metric, galaxy-partition, order, walk-oracle, kernel.
std::vector<CheckOutcome> run_check_suite(const GraphRef& g, const std::string& suite, const RunOptions& options);

/// One table row per report.
std::string table_header();
std::string table_row(const Report& r);

}  // namespace enl
