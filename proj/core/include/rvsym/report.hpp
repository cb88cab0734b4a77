#pragma once

// JSON-lines serialization of exploration reports. One "run" object per
// run, followed by one "summary" object. See README.md for the schema.

#include <iosfwd>
#include <string>

#include "rvsym/explorer.hpp"

namespace rvsym {

std::string run_line(const RunRecord& run);
std::string summary_line(const ExplorationReport& report);

/// Writes every run line, then the summary line.
void write_report(std::ostream& out, const ExplorationReport& report);

/// Empty if `line` conforms to the schema, otherwise a description of the first problem.
std::string check_report_line(const std::string& line);

}  // namespace rvsym
