#pragma once

// Adapter from bit-vector expressions over solver terms to a QF_BV solver.
//
// Terms are built in a Z3 context owned by the Session. Satisfiability is
// decided either in-process by Z3 or by an external SMT-LIB 2.6 solver process
// fed a standalone script.

#include <z3++.h>

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rvsym/bvexpr.hpp"

namespace rvsym {

/// Reference to a solver-side bit-vector term.
class TermHandle {
 public:
  TermHandle(z3::expr term, Width width) : term_(std::move(term)), width_(width) {}

  const z3::expr& term() const { return term_; }
  Width width() const { return width_; }
  bool is_constant() const { return term_.is_numeral(); }
  std::string to_string() const { return term_.to_string(); }

 private:
  z3::expr term_;
  Width width_;
};

/// Identifies a symbolic input variable. Input bytes are 8 bits wide.
struct VarId {
  std::string name;
  Width width = kByte;
  friend bool operator==(const VarId& a, const VarId& b) { return a.name == b.name && a.width == b.width; }
};

/// Assignment of input bytes, keyed by variable name.
using Model = std::map<std::string, uint8_t>;

struct SatResult {
  enum class Status { kSat, kUnsat, kUnknown };
  Status status = Status::kUnknown;
  Model model;          // kSat only
  std::string reason;   // kUnknown only: "timeout" or "solver-error: ..."

  bool sat() const { return status == Status::kSat; }
  bool unsat() const { return status == Status::kUnsat; }
  bool unknown() const { return status == Status::kUnknown; }
};

/// `condition != 0` when `nonzero`, otherwise `condition == 0`.
struct Assertion {
  TermHandle condition;
  bool nonzero = true;
};

enum class SolverBackend { kZ3, kProcess };

struct SolverOptions {
  SolverBackend backend = SolverBackend::kZ3;
  std::chrono::milliseconds timeout{30'000};
  unsigned random_seed = 0;
  // kProcess: command line of an SMT-LIB 2.6 solver; the script path is appended.
  std::string process_command = "z3 -smt2";
  // When set, every query is also written there as a standalone .smt2 file.
  std::optional<std::filesystem::path> dump_dir;
};

struct SolverStats {
  uint64_t queries = 0;
  uint64_t sat = 0;
  uint64_t unsat = 0;
  uint64_t unknown = 0;
  std::chrono::nanoseconds time{0};
};

class DuplicateVariable : public std::runtime_error {
 public:
  explicit DuplicateVariable(const std::string& name) : std::runtime_error("variable already declared: " + name) {}
};

class Session {
 public:
  explicit Session(SolverOptions options = {});
  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;

  TermHandle declare_var(const VarId& id);
  /// Returns the handle of `id`, declaring it on first use.
  TermHandle var(const VarId& id);
  std::optional<TermHandle> find_var(std::string_view name) const;
  const std::vector<VarId>& variables() const { return vars_; }

  TermHandle constant(Width width, uint64_t value);

  /// Structural translation to QF_BV. Ground expressions are folded to a
  /// constant by the solver's simplifier.
  TermHandle lower(const Expr<TermHandle>& e);

  SatResult check(std::span<const Assertion> assertions);

  /// Standalone SMT-LIB 2.6 script (QF_BV) for the query, ending in
  /// check-sat and a get-value over the input variables it mentions.
  std::string to_smtlib(std::span<const Assertion> assertions);

  /// Value of `term` with every input variable replaced by its model value;
  /// nullopt if a variable of `term` is missing from `model`.
  std::optional<uint64_t> evaluate(const TermHandle& term, const Model& model);

  /// Names of input variables occurring in `terms`.
  std::vector<VarId> variables_in(std::span<const z3::expr> terms) const;

  z3::context& context() { return ctx_; }
  const SolverOptions& options() const { return options_; }
  const SolverStats& stats() const { return stats_; }

 private:
  z3::expr predicate(const Assertion& a);
  SatResult check_in_process(const z3::expr_vector& preds, const std::vector<VarId>& vars);
  SatResult check_with_process(const std::string& script, const std::vector<VarId>& vars);
  std::string script_for(const z3::expr_vector& preds, const std::vector<VarId>& vars);
  void dump(const std::string& script);

  SolverOptions options_;
  z3::context ctx_;
  std::vector<VarId> vars_;
  std::unordered_map<std::string, z3::expr> var_terms_;
  SolverStats stats_;
  uint64_t dump_counter_ = 0;
};

/// Parses the textual reply of an SMT-LIB solver to check-sat followed by
/// get-value. Exposed for tests.
SatResult parse_solver_reply(std::string_view reply, const std::vector<VarId>& vars);

}  // namespace rvsym
