#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rvsym/solver.hpp"

namespace rvsym::cli {

enum class Mode { kConcrete, kExplore };

struct Config {
  std::filesystem::path image;
  Mode mode = Mode::kConcrete;
  uint32_t stack_top = 0x80000000u;
  uint64_t step_limit = 10'000'000;
  uint64_t max_paths = UINT64_MAX;
  uint64_t max_runs = UINT64_MAX;
  double query_timeout_s = 30.0;
  bool strict_memory = false;
  std::optional<std::filesystem::path> dump_smt;
  std::optional<std::filesystem::path> report_path;
  SolverBackend solver = SolverBackend::kZ3;
  std::string solver_command = "z3 -smt2";
  unsigned seed = 0;
};

enum ExitCode : int { kSuccess = 0, kEngineFault = 1, kUsageError = 2 };

/// Entry point of the `rvsym` tool. Output goes to `out`, diagnostics to `err`.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(const Config& config, std::ostream& out, std::ostream& err);

SolverOptions solver_options(const Config& config);

}  // namespace rvsym::cli
