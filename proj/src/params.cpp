#include "rtchan/params.hpp"

#include <string>

#include "rtchan/errors.hpp"

namespace rtchan {

void ChannelParams::validate() const {
    if (!(alpha_s > 0.0)) throw ConfigError("alpha_s must be positive, got " + std::to_string(alpha_s));
    if (!(delta_s > 0.0)) throw ConfigError("delta_s must be positive, got " + std::to_string(delta_s));
    if (!(scale > 0.0)) throw ConfigError("scale must be positive, got " + std::to_string(scale));
    if (lambda < 2) throw ConfigError("lambda must be at least 2, got " + std::to_string(lambda));
    if (!(z_s > 0.0)) throw ConfigError("z_s must be positive, got " + std::to_string(z_s));
    if (!(alpha_s > delta_s)) {
        throw ConfigError("alpha_s must exceed delta_s so the error zone (delta, alpha) is non-empty");
    }
}

}  // namespace rtchan
