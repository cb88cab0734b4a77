#include "rvsym/report.hpp"

#include <cctype>
#include <cstdio>
#include <ostream>

#include "json.hpp"

namespace rvsym {

using json = nlohmann::ordered_json;

namespace {

double millis(std::chrono::nanoseconds ns) { return std::chrono::duration<double, std::milli>(ns).count(); }

std::string hex_byte(uint8_t b) {
  char buf[3];
  std::snprintf(buf, sizeof buf, "%02x", b);
  return buf;
}

}  // namespace

std::string run_line(const RunRecord& run) {
  json inputs = json::object();
  for (const auto& [name, value] : run.inputs) inputs[name] = hex_byte(value);
  json j = {{"type", "run"},
            {"run_id", run.run_id},
            {"status", run.status.to_string()},
            {"steps", run.steps},
            {"trace_len", run.trace_length},
            {"decisions", run.decisions},
            {"inputs", std::move(inputs)}};
  if (run.status.kind == RunStatus::Kind::kExited) j["exit_code"] = run.status.exit_code;
  return j.dump();
}

std::string summary_line(const ExplorationReport& r) {
  json j = {{"type", "summary"},
            {"paths_completed", r.paths_completed},
            {"paths_truncated", r.paths_truncated},
            {"unsat_branches", r.unsat_branches},
            {"unknown_branches", r.unknown_branches},
            {"replays_checked", r.replays_checked},
            {"exhausted", r.exhausted},
            {"runs", r.runs.size()},
            {"execution_ms", millis(r.execution_time)},
            {"solver_ms", millis(r.solver_time)},
            {"total_ms", millis(r.total_time)}};
  return j.dump();
}

void write_report(std::ostream& out, const ExplorationReport& report) {
  for (const auto& run : report.runs) out << run_line(run) << '\n';
  out << summary_line(report) << '\n';
}

namespace {

std::string require(const json& j, const char* key, json::value_t type) {
  auto it = j.find(key);
  if (it == j.end()) return std::string("missing field ") + key;
  const bool ok = type == json::value_t::number_unsigned
                      ? it->is_number_unsigned() || (it->is_number_integer() && it->get<int64_t>() >= 0)
                  : type == json::value_t::number_float ? it->is_number()
                                                        : it->type() == type;
  if (!ok) return std::string("field ") + key + " has the wrong type";
  return {};
}

bool is_hex_byte(const std::string& s) {
  return s.size() == 2 && std::isxdigit(static_cast<unsigned char>(s[0])) &&
         std::isxdigit(static_cast<unsigned char>(s[1]));
}

}  // namespace

std::string check_report_line(const std::string& line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    return e.what();
  }
  if (!j.is_object()) return "not an object";
  if (auto e = require(j, "type", json::value_t::string); !e.empty()) return e;
  using V = json::value_t;
  const std::string type = j["type"];
  std::vector<std::pair<const char*, V>> fields;
  if (type == "run") {
    fields = {{"run_id", V::number_unsigned}, {"status", V::string}, {"steps", V::number_unsigned},
              {"trace_len", V::number_unsigned}, {"decisions", V::string}, {"inputs", V::object}};
  } else if (type == "summary") {
    fields = {{"paths_completed", V::number_unsigned}, {"paths_truncated", V::number_unsigned},
              {"unsat_branches", V::number_unsigned},  {"unknown_branches", V::number_unsigned},
              {"replays_checked", V::number_unsigned}, {"exhausted", V::boolean},
              {"runs", V::number_unsigned},            {"execution_ms", V::number_float},
              {"solver_ms", V::number_float},          {"total_ms", V::number_float}};
  } else {
    return "unknown type " + type;
  }
  for (const auto& [key, t] : fields) {
    if (auto e = require(j, key, t); !e.empty()) return e;
  }
  if (type == "run") {
    for (const auto& [name, v] : j["inputs"].items()) {
      if (!v.is_string() || !is_hex_byte(v.get<std::string>())) return "input " + name + " is not a hex byte";
    }
    const std::string d = j["decisions"];
    if (d.find_first_not_of("TF") != std::string::npos) return "decisions contains characters other than T and F";
    if (d.size() != j["trace_len"].get<size_t>()) return "decisions length differs from trace_len";
    if (j.contains("exit_code") && !j["exit_code"].is_number_integer()) return "field exit_code has the wrong type";
  }
  return {};
}

}  // namespace rvsym
