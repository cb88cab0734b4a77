#pragma once

// Benchmark harness: explores each program of a suite R times and reports
// path counts with mean and population standard deviation of wall time.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rvsym/explorer.hpp"

namespace rvsym::bench {

struct BenchmarkSpec {
  std::string name;
  std::filesystem::path source;
  std::filesystem::path image;
  unsigned symbolic_bytes = 0;
  std::optional<uint64_t> expected_paths;
  std::string oracle;  // how expected_paths was obtained
};

struct BenchmarkRow {
  std::string name;
  uint64_t paths = 0;
  std::optional<uint64_t> expected_paths;
  unsigned repetitions = 0;
  double mean_s = 0;
  double stddev_s = 0;
  uint64_t replays_checked = 0;
  bool passed = true;
  std::string note;
};

struct HarnessOptions {
  unsigned repetitions = 5;
  ExplorationLimits limits;
  SolverOptions solver;
};

/// Reads a suite file; relative paths are resolved against its directory.
std::vector<BenchmarkSpec> load_suite(const std::filesystem::path& suite_file);

using Progress = std::function<void(const BenchmarkSpec&, unsigned repetition, const ExplorationReport&)>;

std::vector<BenchmarkRow> run_benchmarks(const std::vector<BenchmarkSpec>& suite, const HarnessOptions& options,
                                         const Progress& progress = {});

double mean(const std::vector<double>& xs);
double population_stddev(const std::vector<double>& xs);

std::string to_tsv(const std::vector<BenchmarkRow>& rows);
std::string to_json(const std::vector<BenchmarkRow>& rows);

}  // namespace rvsym::bench
