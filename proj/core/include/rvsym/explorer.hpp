#pragma once

// Concolic path exploration: traces from runs are merged into a binary
// execution tree; unexplored branch directions are turned into path
// conditions, solved, and replayed with the resulting inputs.

#include <chrono>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rvsym/engine.hpp"
#include "rvsym/solver.hpp"

namespace rvsym {

class InconsistentTrace : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A Sat model drove a run that did not follow the requested prefix.
class ReplayDivergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ExecTree {
 public:
  using NodeIndex = uint32_t;

  struct Terminal {
    RunStatus status;
    uint64_t run_id = 0;
  };

  struct ChildSlot {
    enum class Kind { kUnexplored, kPending, kUnsat, kUnknown, kNode, kLeaf };
    Kind kind = Kind::kUnexplored;
    NodeIndex node = 0;  // kNode
    uint32_t leaf = 0;   // kLeaf: index into leaves()
  };

  struct Node {
    TermHandle condition;
    uint32_t pc;
    ChildSlot taken;
    ChildSlot not_taken;
    ChildSlot& child(bool dir) { return dir ? taken : not_taken; }
    const ChildSlot& child(bool dir) const { return dir ? taken : not_taken; }
  };

  /// Where a slot lives: the root, or one direction of a node.
  struct SlotRef {
    std::optional<NodeIndex> parent;  // nullopt: the root slot
    bool direction = false;
  };

  /// Extends the tree along `trace`; the slot reached last becomes a leaf.
  /// Returns true when that leaf is new.
  bool insert_trace(const Trace& trace, const Terminal& terminal);

  const ChildSlot& root() const { return root_; }
  const Node& node(NodeIndex i) const { return nodes_.at(i); }
  size_t node_count() const { return nodes_.size(); }
  const std::vector<Terminal>& leaves() const { return leaves_; }

  ChildSlot& slot(const SlotRef& ref);
  const ChildSlot& slot(const SlotRef& ref) const;

 private:
  ChildSlot root_;
  std::vector<Node> nodes_;
  std::vector<Terminal> leaves_;
};

/// Branch decisions from the root; the last one is negated by path_condition.
struct PathTarget {
  struct Decision {
    TermHandle condition;
    bool taken;  // direction observed on the existing path
    uint32_t pc;
  };
  std::vector<Decision> prefix;
  size_t flipped_index = 0;
  ExecTree::SlotRef slot;

  /// Direction a run must take at position i to reach the target.
  bool wanted(size_t i) const { return i == flipped_index ? !prefix[i].taken : prefix[i].taken; }
};

/// First unexplored slot in taken-first depth-first order, marked Pending.
std::optional<PathTarget> next_target(ExecTree& tree);

std::vector<Assertion> path_condition(const PathTarget& target);

struct ExplorationLimits {
  uint64_t max_paths = UINT64_MAX;
  uint64_t max_runs = UINT64_MAX;
  RunLimits run;
};

struct RunRecord {
  uint64_t run_id = 0;
  Model inputs;
  RunStatus status;
  uint64_t steps = 0;
  size_t trace_length = 0;
  std::string decisions;  // 'T'/'F' per tracked branch
  std::string output;
};

struct ExplorationReport {
  uint64_t paths_completed = 0;
  uint64_t paths_truncated = 0;
  uint64_t unsat_branches = 0;
  uint64_t unknown_branches = 0;
  uint64_t replays_checked = 0;
  bool exhausted = false;
  std::vector<RunRecord> runs;
  std::set<std::string> decision_strings;  // completed, non-truncated paths
  std::chrono::nanoseconds execution_time{0};
  std::chrono::nanoseconds solver_time{0};
  std::chrono::nanoseconds total_time{0};
};

std::string decision_string(const Trace& trace);

class Explorer {
 public:
  Explorer(LoadedImage image, Session& session, ExplorationLimits limits = {});

  ExplorationReport explore();

  /// Reopens slots whose query returned Unknown.
  void retry_unknown();

  const ExecTree& tree() const { return tree_; }

 private:
  void record(const RunResult& r, ExplorationReport& report, bool new_leaf);

  Engine engine_;
  Session& session_;
  ExplorationLimits limits_;
  ExecTree tree_;
  uint64_t next_run_id_ = 0;
};

ExplorationReport explore(std::span<const uint8_t> elf, Session& session, const ExplorationLimits& limits = {},
                          const LoadOptions& load = {});

}  // namespace rvsym
