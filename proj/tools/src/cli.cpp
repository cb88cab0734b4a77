#include "rvsym/tools/cli.hpp"

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "rvsym/concrete.hpp"
#include "rvsym/elf_loader.hpp"
#include "rvsym/explorer.hpp"
#include "rvsym/report.hpp"

namespace rvsym::cli {

namespace {

// Accepts decimal or 0x-prefixed hex.
uint32_t parse_word(const std::string& s) {
  size_t used = 0;
  unsigned long long v = std::stoull(s, &used, 0);
  if (used != s.size() || v > UINT32_MAX) throw CLI::ValidationError("--stack-top", "not a 32-bit value: " + s);
  return static_cast<uint32_t>(v);
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

SolverOptions solver_options(const Config& c) {
  SolverOptions o;
  o.backend = c.solver;
  o.timeout = std::chrono::milliseconds(static_cast<int64_t>(c.query_timeout_s * 1000.0));
  o.random_seed = c.seed;
  o.process_command = c.solver_command;
  o.dump_dir = c.dump_smt;
  return o;
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Concolic execution of RV32IM ELF binaries", "rvsym"};
  Config c;
  std::string mode = "concrete";
  std::string stack_top;
  std::string solver = "z3";
  std::string dump_smt, report;

  app.add_option("image", c.image, "RV32IM ELF executable")->required();
  app.add_option("--mode", mode, "concrete: run once; explore: enumerate paths")
      ->check(CLI::IsMember({"concrete", "explore"}));
  app.add_option("--stack-top", stack_top, "initial sp (default 0x80000000)");
  app.add_option("--step-limit", c.step_limit, "instructions per run")->check(CLI::PositiveNumber);
  app.add_option("--max-paths", c.max_paths, "stop after this many paths")->check(CLI::PositiveNumber);
  app.add_option("--max-runs", c.max_runs, "stop after this many runs")->check(CLI::PositiveNumber);
  app.add_option("--query-timeout", c.query_timeout_s, "seconds per solver query")->check(CLI::PositiveNumber);
  app.add_flag("--strict-memory", c.strict_memory, "fault on reads of unmapped memory");
  app.add_option("--dump-smt", dump_smt, "write every query as .smt2 into this directory");
  app.add_option("--report", report, "write the JSON-lines exploration report here ('-' for stdout)");
  app.add_option("--solver", solver, "z3 (in process) or process (external SMT-LIB solver)")
      ->check(CLI::IsMember({"z3", "process"}));
  app.add_option("--solver-cmd", c.solver_command, "command line of the external solver");
  app.add_option("--seed", c.seed, "solver random seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
    if (!stack_top.empty()) c.stack_top = parse_word(stack_top);
    if (c.stack_top % 4 != 0) throw CLI::ValidationError("--stack-top", "must be 4-byte aligned");
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "rvsym: " << e.what() << "\n" << app.help();
    return kUsageError;
  } catch (const std::exception& e) {
    err << "rvsym: " << e.what() << "\n" << app.help();
    return kUsageError;
  }
  c.mode = mode == "explore" ? Mode::kExplore : Mode::kConcrete;
  c.solver = solver == "process" ? SolverBackend::kProcess : SolverBackend::kZ3;
  if (!dump_smt.empty()) c.dump_smt = dump_smt;
  if (!report.empty()) c.report_path = report;

  std::error_code ec;
  if (!std::filesystem::is_regular_file(c.image, ec)) {
    err << "rvsym: no such image: " << c.image.string() << "\n" << app.help();
    return kUsageError;
  }
  return run(c, out, err);
}

int run(const Config& c, std::ostream& out, std::ostream& err) {
  try {
    LoadOptions load;
    load.stack_top = c.stack_top;
    load.strict_memory = c.strict_memory;
    LoadedImage image = load_elf_image(read_file(c.image), load);

    if (c.mode == Mode::kConcrete) {
      ConcreteRunResult r = run_concrete(image.concrete_state(), RunLimits{c.step_limit});
      out << r.exit.to_string() << "\n";
      out << "steps: " << r.steps << "\n";
      if (!r.output.empty()) out << "output: " << r.output << (r.output.back() == '\n' ? "" : "\n");
      return r.exit.kind == RunStatus::Kind::kFault ? kEngineFault : kSuccess;
    }

    if (c.dump_smt) std::filesystem::create_directories(*c.dump_smt);
    Session session(solver_options(c));
    ExplorationLimits limits;
    limits.max_paths = c.max_paths;
    limits.max_runs = c.max_runs;
    limits.run.step_limit = c.step_limit;
    Explorer explorer(std::move(image), session, limits);
    const ExplorationReport r = explorer.explore();

    if (c.report_path) {
      if (c.report_path->string() == "-") {
        write_report(out, r);
      } else {
        std::ofstream f(*c.report_path);
        if (!f) throw std::runtime_error("cannot write " + c.report_path->string());
        write_report(f, r);
      }
    }
    out << "paths: " << r.paths_completed << " completed, " << r.paths_truncated << " truncated\n";
    out << "runs: " << r.runs.size() << ", unsat branches: " << r.unsat_branches
        << ", unknown branches: " << r.unknown_branches << "\n";
    out << "exhausted: " << yes_no(r.exhausted) << "\n";
    return kSuccess;
  } catch (const std::exception& e) {
    err << "rvsym: " << e.what() << "\n";
    return kEngineFault;
  }
}

}  // namespace rvsym::cli
