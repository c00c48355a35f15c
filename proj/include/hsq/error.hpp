#pragma once

#include <stdexcept>
#include <string>

namespace hsq {

// All precondition, parse and budget failures are reported through this type.
// `token` is a stable machine-parsable identifier; the CLI prints it as the
// first word of the error line and exits with code 2.
class error : public std::runtime_error {
public:
    error(std::string token, const std::string& message)
        : std::runtime_error(token + ": " + message), token_(std::move(token)) {}

    const std::string& token() const { return token_; }

private:
    std::string token_;
};

inline void require(bool ok, const char* token, const std::string& message) {
    if (!ok) throw error(token, message);
}

// Common tokens.
inline constexpr const char* E_PARSE      = "E_PARSE";       // malformed input file
inline constexpr const char* E_INVARIANT  = "E_INVARIANT";   // data type invariant violated
inline constexpr const char* E_ASSUMPTION = "E_ASSUMPTION";  // named precondition violated
inline constexpr const char* E_BUDGET     = "E_BUDGET";      // instance exceeds a search budget
inline constexpr const char* E_IO         = "E_IO";          // file system failure
inline constexpr const char* E_USAGE      = "E_USAGE";       // bad command line
inline constexpr const char* E_CERT       = "E_CERT";        // malformed certificate

} // namespace hsq
