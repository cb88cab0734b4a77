#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "rvsym/tools/bench.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Explores each benchmark of a suite repeatedly and tabulates path counts and timings",
               "rvsym-bench"};
  std::string suite, json_out;
  std::vector<std::string> only;
  rvsym::bench::HarnessOptions options;
  uint64_t max_runs = 100'000;
  double timeout_s = 30;
  app.add_option("suite", suite, "suite JSON file")->required()->check(CLI::ExistingFile);
  app.add_option("-r,--repetitions", options.repetitions, "explorations per benchmark")->check(CLI::PositiveNumber);
  app.add_option("--only", only, "restrict to these benchmark names");
  app.add_option("--max-runs", max_runs, "run budget per exploration")->check(CLI::PositiveNumber);
  app.add_option("--query-timeout", timeout_s, "seconds per solver query")->check(CLI::PositiveNumber);
  app.add_option("--json", json_out, "also write the table as JSON here");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  options.limits.max_runs = max_runs;
  options.solver.timeout = std::chrono::milliseconds(static_cast<int64_t>(timeout_s * 1000));

  auto specs = rvsym::bench::load_suite(suite);
  if (!only.empty()) {
    std::erase_if(specs, [&](const auto& s) { return std::find(only.begin(), only.end(), s.name) == only.end(); });
  }
  const auto rows = rvsym::bench::run_benchmarks(
      specs, options, [](const auto& spec, unsigned rep, const rvsym::ExplorationReport& r) {
        std::cerr << spec.name << " #" << rep + 1 << ": " << r.paths_completed << " paths\n";
      });
  std::cout << rvsym::bench::to_tsv(rows);
  if (!json_out.empty()) std::ofstream(json_out) << rvsym::bench::to_json(rows) << "\n";
  for (const auto& r : rows)
    if (!r.passed) return 1;
  return 0;
}
