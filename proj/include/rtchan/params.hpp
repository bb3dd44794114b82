#pragma once

#include <cstdint>

namespace rtchan {

/// The shared secret configuration both endpoints must agree on.
/// Field names follow the config-file keys.
struct ChannelParams {
    double alpha_s = 30.0;      ///< code-space delimiter; waits below it signal errors
    double delta_s = 7.0;       ///< agreed ceiling on uncontrolled system delay
    double scale = 0.25;        ///< multiplier on the average read-time
    std::uint32_t lambda = 32;  ///< code-space size
    std::uint64_t seed = 1;     ///< shared generator seed
    double z_s = 60.0;          ///< span of the skip wait placed past the window end

    /// Throws ConfigError unless all fields are positive, lambda >= 2 and
    /// alpha_s > delta_s (the reserved error zone must be non-empty).
    void validate() const;
};

}  // namespace rtchan
