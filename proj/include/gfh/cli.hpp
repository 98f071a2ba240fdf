#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "gfh/arith.hpp"

namespace gfh::cli {

enum class Command { Enumerate, Orbits, Fields, Equations, Verify, Atlas };
enum class Format { Json, Csv, Latex, Plain };

enum ExitCode : int { kOk = 0, kInvalidParams = 1, kOracleFailure = 2, kIoFailure = 3 };

struct RunConfig {
    Command command = Command::Enumerate;
    std::optional<u64> p;
    std::optional<unsigned> e;
    std::optional<unsigned> f;
    std::optional<Format> format;
    std::optional<std::string> output;
    std::optional<u64> oracle_bound;
    std::optional<unsigned> workers;
    std::optional<std::string> dump_rotation;
};

/// Executes one command. Results go to `out` (or the output file), diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// argv front end: parses flags with CLI11 and calls run().
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Writes `content` to a sibling temporary file and renames it into place.
void write_atomically(const std::string& path, const std::string& content);

}  // namespace gfh::cli
