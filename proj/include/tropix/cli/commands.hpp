#pragma once

#include "tropix/cli/scenario.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace tropix::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_violation = 1,
    exit_input = 2,
    exit_undecided = 3,
};

struct CommandOptions {
    std::string scenario;
    std::optional<std::string> out;
    std::optional<std::string> params;
    std::optional<std::string> poly;
    std::uint64_t seed = 1;
    unsigned threads = 1;
};

int cmd_tropicalize(const Scenario& s, const CommandOptions& opt, std::ostream& out);
int cmd_intersect(const Scenario& s, const CommandOptions& opt, std::ostream& out);
int cmd_verify(const Scenario& s, const CommandOptions& opt, std::ostream& out);
int cmd_plot(const Scenario& s, const CommandOptions& opt, std::ostream& out);
int cmd_oracle(const Scenario& s, const CommandOptions& opt, std::ostream& out);
int cmd_check_fan(const Scenario& s, const CommandOptions& opt, std::ostream& out);

/// Loads the scenario, runs `command`, writes the report to --out or `out`,
/// and maps library errors to exit codes. Messages go to `err`.
int run_command(const std::string& command, const CommandOptions& opt, std::ostream& out, std::ostream& err);

} // namespace tropix::cli
