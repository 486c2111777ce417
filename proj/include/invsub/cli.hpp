#ifndef INVSUB_CLI_HPP
#define INVSUB_CLI_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "invsub/common.hpp"

namespace invsub {

/// Parsed command-line configuration. Every flag is mirrored by an
/// INVSUB_-prefixed environment variable; explicit flags win.
struct RunConfig {
    std::vector<std::string> fields;      // "p^f" or a prime-power order like "9"
    std::vector<std::int64_t> modulus;    // explicit modulus (single field only)
    std::string basis;                    // rows "c0,c1;c0,c1;..."
    std::string format = "json";          // json | csv | table
    int workers = 1;
    std::uint64_t seed = 1;
    Budget budget;
    std::string out_path;                 // empty = stdout
    int dim = -1;                         // enumerate: -1 = all dimensions
    std::uint64_t trials = 10000;         // hua over rationals
    bool rationals = false;               // hua target
};

/// Exit codes: 0 success, 1 verification failure, 2 usage error,
/// 3 budget exceeded, 4 theorem violation.
int run_cli(int argc, const char* const* argv);

}  // namespace invsub

#endif
