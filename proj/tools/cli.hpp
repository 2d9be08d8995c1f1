#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace adkit::cli {

enum ExitCode { kPass = 0, kFail = 1, kUsage = 2, kInconclusive = 3 };

/// Runs one command line (without the program name). The report goes to
/// `out`, diagnostics to `err`; returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 64-bit FNV-1a of the bytes, as "fnv1a64:<16 hex digits>".
std::string digest(const std::string& bytes);

/// Human-readable rendering of a report.
std::string render_plain(const nlohmann::json& report);

} // namespace adkit::cli
