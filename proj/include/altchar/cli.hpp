#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "altchar/serialize.hpp"

namespace altchar {

/// One command's output: echoed inputs, a flat table of results, and the
/// rule or formula that produced them. JSON and CSV are both rendered from
/// the same table, so they carry the same content.
struct OutputRecord {
    std::string command;
    std::vector<std::string> arguments;
    Json inputs = Json::object();
    std::string provenance;
    std::vector<std::string> notes;
    std::vector<std::string> columns;
    std::vector<std::vector<Json>> rows;  // scalars only
    std::optional<double> seconds;
};

Json to_json(const OutputRecord& record);

/// Header row, then one line per row. Strings are quoted when needed,
/// booleans print as true/false, null as an empty field.
std::string to_csv(const OutputRecord& record);

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name). Results go to
/// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace altchar
