#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "symeuclid/error.hpp"
#include "symeuclid/integer.hpp"

namespace symeuclid::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 2,
    exit_domain = 3,
    exit_internal = 4,
};

int exit_code_for(ErrorCode code) noexcept;

/// One invocation's worth of machine-readable output.
struct OutputRecord {
    std::string command;
    std::vector<Int> inputs;
    nlohmann::ordered_json payload = nlohmann::ordered_json::object();
    bool ok = true;
    std::string error_code;  // empty when ok
    std::string message;

    nlohmann::ordered_json to_json() const;
    static OutputRecord from_json(const nlohmann::ordered_json& j);

    friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

struct Config {
    Int sweep_bound = 10'000'000;
};

/// Sweep bound from SYMEUCLID_MAX_SWEEP, falling back to the library default.
Config config_from_environment();

/// Parses argv-style arguments (without the program name), runs the command
/// and writes its output. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Config& config = {});

}  // namespace symeuclid::cli
