#include <fstream>
#include <iostream>
#include <iterator>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "enl/jobs.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Galaxies of enlarged graphs: batch job runner"};
  std::string job_file;
  bool json_output = false;
  enl::RunOptions options;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  app.add_option("--job", job_file, "JSON array of jobs (- for stdin)")->required();
  app.add_flag("--json", json_output, "line-delimited JSON instead of a table");
  app.add_option("--seed", options.seed, "sampling seed")->capture_default_str();
  app.add_option("--budget", options.budget, "node expansions per distance search")->capture_default_str();
  app.add_option("--horizon", options.horizon, "sample horizon for certificate checks")->capture_default_str();
  app.add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  nlohmann::json jobs;
  try {
    if (job_file == "-") {
      jobs = nlohmann::json::parse(std::cin);
    } else {
      std::ifstream in(job_file);
      if (!in) {
        std::cerr << "cannot open " << job_file << "\n";
        return 1;
      }
      jobs = nlohmann::json::parse(in);
    }
    if (jobs.is_object()) jobs = nlohmann::json::array({jobs});
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "job file: " << e.what() << "\n";
    return 1;
  }

  std::vector<enl::Report> reports;
  try {
    reports = enl::run_batch(jobs, options, threads);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  if (json_output) {
    for (const auto& r : reports) std::cout << r.body.dump() << "\n";
  } else {
    std::cout << enl::table_header() << "\n";
    for (const auto& r : reports) std::cout << enl::table_row(r) << "\n";
  }
  return enl::batch_exit_code(reports);
}
