#pragma once

#include <stdexcept>
#include <string>

namespace bforge {

// Every recoverable failure carries the stage that produced it plus a short
// machine-checkable code (e.g. "DuplicateEdge"). The CLI maps these to exit 1
// with the stage name in the message.
class Error : public std::runtime_error {
public:
    Error(std::string stage, std::string code, const std::string& detail)
        : std::runtime_error(stage + ": " + code + ": " + detail),
          stage_(std::move(stage)),
          code_(std::move(code)) {}

    const std::string& stage() const { return stage_; }
    const std::string& code() const { return code_; }

private:
    std::string stage_;
    std::string code_;
};

}  // namespace bforge
