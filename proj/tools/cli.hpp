#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace rigidkit::cli {

/// Everything a subcommand may read. Populated from argv by run().
struct RunConfig {
    std::string command;
    std::vector<std::string> inputs;
    std::string output;
    std::string target;
    std::string witness = "component";
    std::optional<std::size_t> k;
    bool strict = false;
    bool confine = true;
    std::optional<std::size_t> component_size;
    std::uint64_t seed = 0;
    unsigned workers = 1;
    bool json = false;

    std::vector<std::string> pins;
    std::optional<std::size_t> limit;
    std::string bits;
    std::size_t samples = 100;
    bool orientations = false;
    std::size_t n = 0;
    bool symmetric = false;
    std::string mode = "exhaustive";
    std::size_t budget = 0;
    std::optional<std::size_t> max_finds;
    bool reject_isomorphs = false;
    std::string out_dir;
    std::size_t i_max = 0;
    std::size_t slack = 10;
    std::string scheme = "default";
    bool sweep3 = false;
    std::size_t random4 = 0;
    std::string format = "dot";
};

inline constexpr int exit_pass = 0;
inline constexpr int exit_fail = 1;
inline constexpr int exit_usage = 2;

/// Parses args (args[0] is the program name) and runs one subcommand.
/// Returns 0 on pass, 1 on a fail verdict, 2 on usage or I/O errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Runs an already-populated config.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace rigidkit::cli
