#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace advshare {

// Domain error with a stable machine-readable name (e.g. "ReducibleModulus").
// The CLI surfaces the name in reports; tests match on it.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& message)
        : std::runtime_error(name + ": " + message), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

}  // namespace advshare
