#include "rvsym/explorer.hpp"

#include <cstdio>
#include <sstream>

namespace rvsym {

using Kind = ExecTree::ChildSlot::Kind;

ExecTree::ChildSlot& ExecTree::slot(const SlotRef& ref) {
  return ref.parent ? nodes_.at(*ref.parent).child(ref.direction) : root_;
}

const ExecTree::ChildSlot& ExecTree::slot(const SlotRef& ref) const {
  return ref.parent ? nodes_.at(*ref.parent).child(ref.direction) : root_;
}

bool ExecTree::insert_trace(const Trace& trace, const Terminal& terminal) {
  SlotRef cur;
  for (size_t i = 0; i < trace.size(); ++i) {
    const BranchEvent& ev = trace[i];
    ChildSlot& s = slot(cur);
    NodeIndex index;
    if (s.kind == Kind::kNode) {
      index = s.node;
      if (nodes_[index].pc != ev.pc) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "branch %zu: tree has pc 0x%08x, trace has pc 0x%08x", i, nodes_[index].pc,
                      ev.pc);
        throw InconsistentTrace(buf);
      }
    } else if (s.kind == Kind::kLeaf) {
      throw InconsistentTrace("trace continues past the end of a recorded path at branch " + std::to_string(i));
    } else {
      index = static_cast<NodeIndex>(nodes_.size());
      s.kind = Kind::kNode;
      s.node = index;
      // `s` may dangle after this push_back.
      nodes_.push_back(Node{ev.condition, ev.pc, {}, {}});
    }
    cur = SlotRef{index, ev.taken};
  }

  ChildSlot& last = slot(cur);
  if (last.kind == Kind::kLeaf) return false;
  if (last.kind == Kind::kNode) throw InconsistentTrace("trace ends at a recorded branch point");
  last.kind = Kind::kLeaf;
  last.leaf = static_cast<uint32_t>(leaves_.size());
  leaves_.push_back(terminal);
  return true;
}

namespace {

class TargetSearch {
 public:
  explicit TargetSearch(ExecTree& tree) : tree_(tree) {}

  std::optional<PathTarget> from_root() {
    const auto& root = tree_.root();
    if (root.kind != Kind::kNode) return std::nullopt;  // nothing to negate yet
    return search(root.node);
  }

 private:
  // Slots of a node are examined before its subtrees, taken direction first.
  std::optional<PathTarget> search(ExecTree::NodeIndex n) {
    const ExecTree::Node& node = tree_.node(n);
    for (bool dir : {true, false}) {
      if (node.child(dir).kind == Kind::kUnexplored) {
        PathTarget t;
        t.prefix = path_;
        t.prefix.push_back({node.condition, !dir, node.pc});
        t.flipped_index = t.prefix.size() - 1;
        t.slot = {n, dir};
        tree_.slot(t.slot).kind = Kind::kPending;
        return t;
      }
    }
    for (bool dir : {true, false}) {
      const auto& c = node.child(dir);
      if (c.kind != Kind::kNode) continue;
      path_.push_back({node.condition, dir, node.pc});
      auto t = search(c.node);
      path_.pop_back();
      if (t) return t;
    }
    return std::nullopt;
  }

  ExecTree& tree_;
  std::vector<PathTarget::Decision> path_;
};

}  // namespace

std::optional<PathTarget> next_target(ExecTree& tree) { return TargetSearch(tree).from_root(); }

std::vector<Assertion> path_condition(const PathTarget& target) {
  std::vector<Assertion> out;
  out.reserve(target.prefix.size());
  for (size_t i = 0; i < target.prefix.size(); ++i) {
    out.push_back(Assertion{target.prefix[i].condition, target.wanted(i)});
  }
  return out;
}

std::string decision_string(const Trace& trace) {
  std::string s;
  s.reserve(trace.size());
  for (const auto& ev : trace) s.push_back(ev.taken ? 'T' : 'F');
  return s;
}

Explorer::Explorer(LoadedImage image, Session& session, ExplorationLimits limits)
    : engine_(std::move(image), session), session_(session), limits_(limits) {}

void Explorer::record(const RunResult& r, ExplorationReport& report, bool new_leaf) {
  RunRecord rec;
  rec.run_id = next_run_id_ - 1;
  rec.inputs = r.inputs;
  rec.status = r.exit;
  rec.steps = r.steps;
  rec.trace_length = r.trace.size();
  rec.decisions = decision_string(r.trace);
  rec.output = r.output;
  if (new_leaf) {
    if (r.exit.truncated()) {
      ++report.paths_truncated;
    } else {
      ++report.paths_completed;
      if (!report.decision_strings.insert(rec.decisions).second) {
        throw ReplayDivergence("duplicate branch-decision string " + rec.decisions);
      }
    }
  }
  report.runs.push_back(std::move(rec));
}

ExplorationReport Explorer::explore() {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  const auto solver_start = session_.stats().time;
  ExplorationReport report;

  auto execute = [&](const Model& inputs) {
    const auto t0 = Clock::now();
    RunResult r = engine_.run(inputs, limits_.run);
    report.execution_time += Clock::now() - t0;
    ++next_run_id_;
    return r;
  };

  {
    RunResult seed = execute({});
    const bool fresh = tree_.insert_trace(seed.trace, {seed.exit, next_run_id_ - 1});
    record(seed, report, fresh);
  }

  for (;;) {
    if (report.paths_completed + report.paths_truncated >= limits_.max_paths) break;
    if (report.runs.size() >= limits_.max_runs) break;
    auto target = next_target(tree_);
    if (!target) {
      report.exhausted = true;
      break;
    }
    const SatResult res = session_.check(path_condition(*target));
    if (res.unsat()) {
      tree_.slot(target->slot).kind = Kind::kUnsat;
      ++report.unsat_branches;
      continue;
    }
    if (res.unknown()) {
      tree_.slot(target->slot).kind = Kind::kUnknown;
      ++report.unknown_branches;
      continue;
    }

    RunResult r = execute(res.model);
    for (size_t i = 0; i <= target->flipped_index; ++i) {
      if (i >= r.trace.size() || r.trace[i].taken != target->wanted(i)) {
        std::ostringstream msg;
        msg << "run " << next_run_id_ - 1 << " diverged from its target at branch " << i << " (pc 0x" << std::hex
            << target->prefix[i].pc << std::dec << "); wanted "
            << (target->wanted(i) ? 'T' : 'F') << ", got "
            << (i < r.trace.size() ? (r.trace[i].taken ? "T" : "F") : "end of trace") << "; inputs:";
        for (const auto& [name, v] : res.model) msg << ' ' << name << '=' << int(v);
        throw ReplayDivergence(msg.str());
      }
    }
    ++report.replays_checked;
    const bool fresh = tree_.insert_trace(r.trace, {r.exit, next_run_id_ - 1});
    if (!fresh) throw ReplayDivergence("replayed run did not reach a new path");
    record(r, report, fresh);
  }

  report.solver_time = session_.stats().time - solver_start;
  report.total_time = Clock::now() - start;
  return report;
}

void Explorer::retry_unknown() {
  auto reopen = [&](auto& self, const ExecTree::ChildSlot& s) -> void {
    if (s.kind != Kind::kNode) return;
    for (bool dir : {true, false}) {
      auto& c = tree_.slot({s.node, dir});
      if (c.kind == Kind::kUnknown) c.kind = Kind::kUnexplored;
      self(self, c);
    }
  };
  reopen(reopen, tree_.root());
}

ExplorationReport explore(std::span<const uint8_t> elf, Session& session, const ExplorationLimits& limits,
                          const LoadOptions& load) {
  Explorer explorer(load_elf_image(elf, load), session, limits);
  return explorer.explore();
}

}  // namespace rvsym
