#pragma once

#include <stdexcept>
#include <string>

namespace reebmec {

// Error categories shared by the library and the CLI.  The numeric values
// double as process exit codes, so keep them stable.
enum class ErrorCode {
    numeric = 1,          // iteration failed to converge, overflow, ...
    invalid_input = 2,    // malformed data, validation failure, bad arguments
    undefined_result = 3, // a MEC that is not defined for the given model
    incomplete_data = 4,  // generator enumeration lacks index data
    dimension_guard = 5,  // surgery refused for 3-dimensional cylindrical bookkeeping
    degeneracy = 6,       // near-degenerate path endpoint
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }
    int exit_code() const { return static_cast<int>(code_); }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

} // namespace reebmec
