#include "rvsym/tools/bench.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "rvsym/elf_loader.hpp"

namespace rvsym::bench {

using nlohmann::json;

std::vector<BenchmarkSpec> load_suite(const std::filesystem::path& suite_file) {
  std::ifstream in(suite_file);
  if (!in) throw std::runtime_error("cannot open suite " + suite_file.string());
  const json j = json::parse(in);
  const auto base = suite_file.parent_path();
  std::vector<BenchmarkSpec> out;
  for (const auto& b : j.at("benchmarks")) {
    BenchmarkSpec s;
    s.name = b.at("name");
    s.source = base / b.value("source", std::string());
    s.image = base / b.at("image").get<std::string>();
    s.symbolic_bytes = b.value("symbolic_bytes", 0u);
    if (b.contains("expected_paths") && !b["expected_paths"].is_null()) s.expected_paths = b["expected_paths"];
    s.oracle = b.value("oracle", std::string());
    out.push_back(std::move(s));
  }
  return out;
}

double mean(const std::vector<double>& xs) {
  if (xs.empty()) return 0;
  double s = 0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

double population_stddev(const std::vector<double>& xs) {
  if (xs.empty()) return 0;
  const double m = mean(xs);
  double s = 0;
  for (double x : xs) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(xs.size()));
}

std::vector<BenchmarkRow> run_benchmarks(const std::vector<BenchmarkSpec>& suite, const HarnessOptions& options,
                                         const Progress& progress) {
  std::vector<BenchmarkRow> rows;
  for (const auto& spec : suite) {
    BenchmarkRow row;
    row.name = spec.name;
    row.expected_paths = spec.expected_paths;
    std::vector<double> times;
    std::optional<std::set<std::string>> first_paths;
    try {
      const auto bytes = read_file(spec.image);
      for (unsigned rep = 0; rep < options.repetitions; ++rep) {
        // A fresh solver context per repetition keeps the runs independent.
        Session session(options.solver);
        const auto t0 = std::chrono::steady_clock::now();
        ExplorationReport r = explore(bytes, session, options.limits);
        times.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
        row.replays_checked += r.replays_checked;
        ++row.repetitions;
        if (progress) progress(spec, rep, r);

        if (rep == 0) {
          row.paths = r.paths_completed;
          first_paths = r.decision_strings;
        } else if (r.paths_completed != row.paths || r.decision_strings != *first_paths) {
          row.passed = false;
          row.note = "repetitions disagree on the path set";
        }
        if (!r.exhausted || r.paths_truncated > 0) {
          row.passed = false;
          std::ostringstream note;
          note << "truncated: " << (r.exhausted ? "" : "budget reached before exhaustion");
          if (r.paths_truncated) note << (r.exhausted ? "" : ", ") << r.paths_truncated << " paths hit the step limit";
          row.note = note.str();
        }
        if (r.unknown_branches > 0) {
          row.passed = false;
          row.note = std::to_string(r.unknown_branches) + " queries returned unknown";
        }
      }
    } catch (const std::exception& e) {
      row.passed = false;
      row.note = e.what();
    }
    if (row.passed && spec.expected_paths && *spec.expected_paths != row.paths) {
      row.passed = false;
      row.note = "expected " + std::to_string(*spec.expected_paths) + " paths";
    }
    row.mean_s = mean(times);
    row.stddev_s = population_stddev(times);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string to_tsv(const std::vector<BenchmarkRow>& rows) {
  std::ostringstream out;
  out << "name\tpaths\texpected\trepetitions\tmean_s\tstddev_s\tstatus\tnote\n";
  for (const auto& r : rows) {
    out << r.name << '\t' << r.paths << '\t' << (r.expected_paths ? std::to_string(*r.expected_paths) : "-") << '\t'
        << r.repetitions << '\t' << r.mean_s << '\t' << r.stddev_s << '\t' << (r.passed ? "ok" : "FAILED") << '\t'
        << r.note << '\n';
  }
  return out.str();
}

std::string to_json(const std::vector<BenchmarkRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    arr.push_back({{"name", r.name},
                   {"paths", r.paths},
                   {"expected_paths", r.expected_paths ? json(*r.expected_paths) : json(nullptr)},
                   {"repetitions", r.repetitions},
                   {"mean_s", r.mean_s},
                   {"stddev_s", r.stddev_s},
                   {"replays_checked", r.replays_checked},
                   {"passed", r.passed},
                   {"note", r.note}});
  }
  return arr.dump(2);
}

}  // namespace rvsym::bench
