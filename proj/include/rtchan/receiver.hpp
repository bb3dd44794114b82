#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rtchan/message_codec.hpp"
#include "rtchan/params.hpp"

namespace rtchan {

/// One observed access: what a passive observer records per request.
struct Observation {
    double t_s = 0.0;  ///< request-initiation timestamp
    std::string url;
    std::size_t word_count = 0;
    int status = 0;
};

enum class ObservationClass { Code, Error, BadCode, Terminal, Unclassifiable };

const char* to_string(ObservationClass c);

struct AccessDecode {
    std::size_t seq = 0;
    ObservationClass classification = ObservationClass::Unclassifiable;
    std::optional<std::uint32_t> code;
    std::optional<double> tau_observed_s;
    std::optional<double> rho_s;
    std::optional<double> nu_s;
};

struct DecodeReport {
    Message codes;  ///< the Code classifications, in order
    std::vector<AccessDecode> per_access;
    std::vector<std::string> warnings;
    std::uint64_t prng_draws = 0;
};

/// Replay the transmitter's draw discipline against an observation log and
/// recover the message. Each observation consumes two draws; read-times are
/// raw gaps between consecutive request timestamps; zero-word observations
/// classify Error, bad frames classify BadCode (frame-driven, with a warning
/// when the observed gap disagrees), the final observation is Terminal.
/// Throws ConfigError when timestamps are not non-decreasing.
DecodeReport receive(const std::vector<Observation>& observations,
                     const ChannelParams& params);

/// Read a JSON Lines observation log. The transmitter event format is a
/// superset, so its files load too. Throws ConfigError naming the line on
/// malformed input, and rejects non-monotonic timestamps.
std::vector<Observation> ingest_log(const std::string& path);

}  // namespace rtchan
