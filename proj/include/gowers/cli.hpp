#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gowers/boolean_function.hpp"
#include "gowers/gowers_norm.hpp"

namespace gowers::cli {

enum ExitCode : int {
    kOk = 0,
    kUnexpected = 1,
    kUsage = 2,
    kCapacity = 3,
    kCrossCheck = 4,
};

class UsageError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Exactly one of anf / tt_hex / family is set.
struct FunctionSpec {
    int n = 0;
    std::optional<std::string> anf;
    std::optional<std::string> tt_hex;
    std::optional<std::string> family;  // linear, bent_quadratic, random
    std::optional<std::string> u;       // linear coefficient bits
};

/// Resolves a spec; the random family draws its table from `seed`.
BooleanFunction resolve(const FunctionSpec &spec, uint64_t seed);

/// Throws CrossCheckError unless every named value has the same pow_value.
void require_agreement(const std::vector<std::pair<std::string, GowersValue>> &values);

/// Maps an exception escaping a subcommand to its exit status.
int exit_code_for(const std::exception &error);

/// Runs one CLI invocation. args excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace gowers::cli
