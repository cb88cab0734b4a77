#include "rvsym/solver.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include <sys/wait.h>
#include <unistd.h>

namespace rvsym {

namespace {

using Clock = std::chrono::steady_clock;

bool is_input_var(const z3::expr& e) {
  return e.is_app() && e.num_args() == 0 && e.decl().decl_kind() == Z3_OP_UNINTERPRETED;
}

}  // namespace

Session::Session(SolverOptions options) : options_(std::move(options)) {}

TermHandle Session::declare_var(const VarId& id) {
  if (var_terms_.count(id.name)) throw DuplicateVariable(id.name);
  z3::expr t = ctx_.bv_const(id.name.c_str(), id.width.bits());
  var_terms_.emplace(id.name, t);
  vars_.push_back(id);
  return TermHandle(t, id.width);
}

TermHandle Session::var(const VarId& id) {
  if (auto it = var_terms_.find(id.name); it != var_terms_.end()) return TermHandle(it->second, id.width);
  return declare_var(id);
}

std::optional<TermHandle> Session::find_var(std::string_view name) const {
  auto it = var_terms_.find(std::string(name));
  if (it == var_terms_.end()) return std::nullopt;
  return TermHandle(it->second, Width(it->second.get_sort().bv_size()));
}

TermHandle Session::constant(Width width, uint64_t value) {
  return TermHandle(ctx_.bv_val(static_cast<uint64_t>(value & width.mask()), width.bits()), width);
}

TermHandle Session::lower(const Expr<TermHandle>& root) {
  bool ground = true;
  // Recursive lambda; returns the term and its width.
  auto go = [&](auto& self, const Expr<TermHandle>& e) -> std::pair<z3::expr, unsigned> {
    switch (e.kind()) {
      case ExprKind::kLeaf: {
        const TermHandle& h = e.leaf();
        if (!h.is_constant()) ground = false;
        return {h.term(), h.width().bits()};
      }
      case ExprKind::kFromInt:
        return {ctx_.bv_val(static_cast<uint64_t>(e.literal()), e.node_width()), e.node_width()};
      case ExprKind::kZExt: {
        auto [t, w] = self(self, e.lhs());
        return {z3::zext(t, e.param()), Width(w + e.param()).bits()};
      }
      case ExprKind::kSExt: {
        auto [t, w] = self(self, e.lhs());
        return {z3::sext(t, e.param()), Width(w + e.param()).bits()};
      }
      case ExprKind::kExtract: {
        auto [t, w] = self(self, e.lhs());
        if (e.param() + e.node_width() > w) throw MalformedExpression("extract out of range");
        return {t.extract(e.param() + e.node_width() - 1, e.param()), e.node_width()};
      }
      default:
        break;
    }
    auto [a, wa] = self(self, e.lhs());
    auto [b, wb] = self(self, e.rhs());
    if (wa != wb) {
      throw MalformedExpression(std::string("operand widths differ for ") + to_string(e.kind()) + ": " +
                                std::to_string(wa) + " vs " + std::to_string(wb));
    }
    const unsigned w = wa;
    auto from_bool = [&](const z3::expr& p) { return z3::ite(p, ctx_.bv_val(1, w), ctx_.bv_val(0, w)); };
    auto high = [&](const z3::expr& x, const z3::expr& y) { return (x * y).extract(2 * w - 1, w); };
    switch (e.kind()) {
      case ExprKind::kAdd: return {a + b, w};
      case ExprKind::kSub: return {a - b, w};
      case ExprKind::kAnd: return {a & b, w};
      case ExprKind::kOr: return {a | b, w};
      case ExprKind::kXor: return {a ^ b, w};
      case ExprKind::kSll: return {z3::shl(a, b), w};
      case ExprKind::kSrl: return {z3::lshr(a, b), w};
      case ExprKind::kSra: return {z3::ashr(a, b), w};
      case ExprKind::kMul: return {a * b, w};
      case ExprKind::kMulhUU: return {high(z3::zext(a, w), z3::zext(b, w)), w};
      case ExprKind::kMulhSS: return {high(z3::sext(a, w), z3::sext(b, w)), w};
      case ExprKind::kMulhSU: return {high(z3::sext(a, w), z3::zext(b, w)), w};
      case ExprKind::kDivU: return {z3::udiv(a, b), w};
      case ExprKind::kRemU: return {z3::urem(a, b), w};
      // bvsdiv by zero yields 1 for negative dividends; RISC-V wants all ones.
      case ExprKind::kDivS: return {z3::ite(b == ctx_.bv_val(0, w), ctx_.bv_val(Width(w).mask(), w), a / b), w};
      case ExprKind::kRemS: return {z3::srem(a, b), w};
      case ExprKind::kEq: return {from_bool(a == b), w};
      case ExprKind::kNeq: return {from_bool(a != b), w};
      case ExprKind::kSltS: return {from_bool(a < b), w};
      case ExprKind::kSgeS: return {from_bool(a >= b), w};
      case ExprKind::kSltU: return {from_bool(z3::ult(a, b)), w};
      case ExprKind::kSgeU: return {from_bool(z3::uge(a, b)), w};
      default:
        throw MalformedExpression(std::string("cannot lower ") + to_string(e.kind()));
    }
  };
  auto [term, width] = go(go, root);
  if (ground) term = term.simplify();
  return TermHandle(term, Width(width));
}

z3::expr Session::predicate(const Assertion& a) {
  const z3::expr zero = ctx_.bv_val(0, a.condition.width().bits());
  return a.nonzero ? a.condition.term() != zero : a.condition.term() == zero;
}

std::vector<VarId> Session::variables_in(std::span<const z3::expr> terms) const {
  std::vector<VarId> found;
  std::unordered_set<unsigned> seen;
  std::vector<z3::expr> todo(terms.begin(), terms.end());
  while (!todo.empty()) {
    z3::expr e = todo.back();
    todo.pop_back();
    if (!seen.insert(e.id()).second) continue;
    if (is_input_var(e)) {
      const std::string name = e.decl().name().str();
      if (var_terms_.count(name)) found.push_back(VarId{name, Width(e.get_sort().bv_size())});
      continue;
    }
    if (e.is_app()) {
      for (unsigned i = 0; i < e.num_args(); ++i) todo.push_back(e.arg(i));
    }
  }
  std::sort(found.begin(), found.end(), [](const VarId& a, const VarId& b) { return a.name < b.name; });
  return found;
}

SatResult Session::check(std::span<const Assertion> assertions) {
  const auto start = Clock::now();
  z3::expr_vector preds(ctx_);
  std::vector<z3::expr> pred_list;
  for (const auto& a : assertions) {
    preds.push_back(predicate(a));
    pred_list.push_back(preds.back());
  }
  const std::vector<VarId> vars = variables_in(pred_list);

  SatResult result;
  const bool need_script = options_.dump_dir.has_value() || options_.backend == SolverBackend::kProcess;
  const std::string script = need_script ? script_for(preds, vars) : std::string();
  if (options_.dump_dir) dump(script);

  if (options_.backend == SolverBackend::kProcess) {
    result = check_with_process(script, vars);
  } else {
    result = check_in_process(preds, vars);
  }

  ++stats_.queries;
  switch (result.status) {
    case SatResult::Status::kSat: ++stats_.sat; break;
    case SatResult::Status::kUnsat: ++stats_.unsat; break;
    case SatResult::Status::kUnknown: ++stats_.unknown; break;
  }
  stats_.time += Clock::now() - start;
  return result;
}

SatResult Session::check_in_process(const z3::expr_vector& preds, const std::vector<VarId>& vars) {
  SatResult result;
  try {
    z3::solver s(ctx_, "QF_BV");
    z3::params p(ctx_);
    p.set("timeout", static_cast<unsigned>(options_.timeout.count()));
    p.set("random_seed", options_.random_seed);
    s.set(p);
    for (unsigned i = 0; i < preds.size(); ++i) s.add(preds[i]);
    switch (s.check()) {
      case z3::sat: {
        result.status = SatResult::Status::kSat;
        z3::model m = s.get_model();
        for (const auto& v : vars) {
          const z3::expr val = m.eval(var_terms_.at(v.name), true);
          result.model[v.name] = static_cast<uint8_t>(val.get_numeral_uint64());
        }
        break;
      }
      case z3::unsat:
        result.status = SatResult::Status::kUnsat;
        break;
      case z3::unknown: {
        result.status = SatResult::Status::kUnknown;
        const std::string why = s.reason_unknown();
        result.reason = (why.find("timeout") != std::string::npos || why.find("canceled") != std::string::npos)
                            ? "timeout"
                            : "solver-error: " + why;
        break;
      }
    }
  } catch (const z3::exception& ex) {
    result = SatResult{};
    result.status = SatResult::Status::kUnknown;
    result.reason = std::string("solver-error: ") + ex.msg();
  }
  return result;
}

std::string Session::script_for(const z3::expr_vector& preds, const std::vector<VarId>& vars) {
  std::vector<Z3_ast> assumptions;
  assumptions.reserve(preds.size());
  for (unsigned i = 0; i < preds.size(); ++i) assumptions.push_back(preds[i]);
  const z3::expr truth = ctx_.bool_val(true);
  const char* body = Z3_benchmark_to_smtlib_string(ctx_, "rvsym", "QF_BV", "unknown", "",
                                                   static_cast<unsigned>(assumptions.size()), assumptions.data(),
                                                   truth);
  ctx_.check_error();
  std::ostringstream out;
  out << "(set-option :produce-models true)\n" << body;
  if (!vars.empty()) {
    out << "(get-value (";
    for (size_t i = 0; i < vars.size(); ++i) out << (i ? " " : "") << vars[i].name;
    out << "))\n";
  }
  out << "(exit)\n";
  return out.str();
}

std::string Session::to_smtlib(std::span<const Assertion> assertions) {
  z3::expr_vector preds(ctx_);
  std::vector<z3::expr> pred_list;
  for (const auto& a : assertions) {
    preds.push_back(predicate(a));
    pred_list.push_back(preds.back());
  }
  return script_for(preds, variables_in(pred_list));
}

void Session::dump(const std::string& script) {
  std::filesystem::create_directories(*options_.dump_dir);
  char name[32];
  std::snprintf(name, sizeof name, "query_%06llu.smt2", static_cast<unsigned long long>(dump_counter_++));
  std::ofstream(*options_.dump_dir / name) << script;
}

SatResult Session::check_with_process(const std::string& script, const std::vector<VarId>& vars) {
  SatResult unknown;
  unknown.status = SatResult::Status::kUnknown;

  std::string path = (std::filesystem::temp_directory_path() / "rvsym_query_XXXXXX.smt2").string();
  const int fd = ::mkstemps(path.data(), 5);
  if (fd < 0) {
    unknown.reason = "solver-error: cannot create query file";
    return unknown;
  }
  {
    const char* p = script.data();
    size_t left = script.size();
    while (left > 0) {
      const ssize_t n = ::write(fd, p, left);
      if (n <= 0) break;
      p += n;
      left -= static_cast<size_t>(n);
    }
    ::close(fd);
  }

  const auto seconds = std::max<long long>(1, (options_.timeout.count() + 999) / 1000);
  const std::string cmd =
      "timeout -s KILL " + std::to_string(seconds) + " " + options_.process_command + " '" + path + "' 2>&1";
  std::string reply;
  int status = -1;
  if (FILE* pipe = ::popen(cmd.c_str(), "r")) {
    char buf[4096];
    size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) reply.append(buf, n);
    status = ::pclose(pipe);
  }
  std::filesystem::remove(path);

  // coreutils timeout exits with 124, or 128+9 when the child had to be killed.
  const bool timed_out = (WIFEXITED(status) && (WEXITSTATUS(status) == 124 || WEXITSTATUS(status) == 137)) ||
                         WIFSIGNALED(status);
  if (timed_out || (status != 0 && reply.empty())) {
    unknown.reason = "timeout";
    return unknown;
  }
  return parse_solver_reply(reply, vars);
}

namespace {

// Minimal s-expression tokenizer for solver replies.
std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '(' || c == ')') {
      tokens.emplace_back(1, c);
      ++i;
    } else if (c == '|') {
      const size_t end = text.find('|', i + 1);
      tokens.emplace_back(text.substr(i + 1, end - i - 1));
      i = end == std::string_view::npos ? text.size() : end + 1;
    } else if (c == '"') {
      const size_t end = text.find('"', i + 1);
      tokens.emplace_back(text.substr(i, end - i + 1));
      i = end == std::string_view::npos ? text.size() : end + 1;
    } else {
      size_t j = i;
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) && text[j] != '(' &&
             text[j] != ')') {
        ++j;
      }
      tokens.emplace_back(text.substr(i, j - i));
      i = j;
    }
  }
  return tokens;
}

std::optional<uint64_t> parse_bv_literal(const std::vector<std::string>& t, size_t& i) {
  if (i < t.size() && t[i].rfind("#x", 0) == 0) return std::stoull(t[i++].substr(2), nullptr, 16);
  if (i < t.size() && t[i].rfind("#b", 0) == 0) return std::stoull(t[i++].substr(2), nullptr, 2);
  // (_ bvN W)
  if (i + 4 < t.size() && t[i] == "(" && t[i + 1] == "_" && t[i + 2].rfind("bv", 0) == 0 && t[i + 4] == ")") {
    const uint64_t v = std::stoull(t[i + 2].substr(2));
    i += 5;
    return v;
  }
  return std::nullopt;
}

}  // namespace

SatResult parse_solver_reply(std::string_view reply, const std::vector<VarId>& vars) {
  SatResult r;
  const auto tokens = tokenize(reply);
  if (tokens.empty()) {
    r.status = SatResult::Status::kUnknown;
    r.reason = "solver-error: empty reply";
    return r;
  }
  if (tokens[0] == "unsat") {
    r.status = SatResult::Status::kUnsat;
    return r;
  }
  if (tokens[0] == "unknown" || tokens[0] == "timeout") {
    r.status = SatResult::Status::kUnknown;
    r.reason = "timeout";
    return r;
  }
  if (tokens[0] != "sat") {
    r.status = SatResult::Status::kUnknown;
    r.reason = "solver-error: " + std::string(reply.substr(0, 200));
    return r;
  }
  r.status = SatResult::Status::kSat;
  // ((name value) (name value) ...)
  for (size_t i = 1; i + 1 < tokens.size(); ++i) {
    if (tokens[i] != "(" || tokens[i + 1] == "(" || tokens[i + 1] == ")") continue;
    const std::string& name = tokens[i + 1];
    size_t j = i + 2;
    if (auto v = parse_bv_literal(tokens, j)) {
      r.model[name] = static_cast<uint8_t>(*v);
      i = j - 1;
    }
  }
  for (const auto& v : vars) {
    if (!r.model.count(v.name)) {
      r.status = SatResult::Status::kUnknown;
      r.reason = "solver-error: reply lacks a value for " + v.name;
      r.model.clear();
      return r;
    }
  }
  return r;
}

std::optional<uint64_t> Session::evaluate(const TermHandle& term, const Model& model) {
  std::vector<z3::expr> roots{term.term()};
  z3::expr_vector from(ctx_), to(ctx_);
  for (const auto& v : variables_in(roots)) {
    auto it = model.find(v.name);
    if (it == model.end()) return std::nullopt;
    from.push_back(var_terms_.at(v.name));
    to.push_back(ctx_.bv_val(static_cast<uint64_t>(it->second), v.width.bits()));
  }
  z3::expr t = term.term();
  const z3::expr value = (from.empty() ? t : t.substitute(from, to)).simplify();
  if (!value.is_numeral()) return std::nullopt;
  return value.get_numeral_uint64();
}

}  // namespace rvsym
