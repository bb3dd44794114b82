#pragma once

#include <stdexcept>
#include <string>

namespace rtchan {

/// Configuration, usage, and input-file problems. The CLI maps this to exit 2.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rtchan
