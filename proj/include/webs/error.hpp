#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace webs {

// Domain errors carry a stable machine-readable code ("NotADigon",
// "SyntaxError", ...) alongside the human-readable message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

} // namespace webs
