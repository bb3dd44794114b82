#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rtchan/clock.hpp"
#include "rtchan/message_codec.hpp"
#include "rtchan/page_model.hpp"
#include "rtchan/params.hpp"
#include "rtchan/timing_codec.hpp"

namespace rtchan {

/// One transmitter action: a resource access plus the wait that follows it.
struct AccessEvent {
    std::size_t seq = 0;
    std::string url;
    double request_time_s = 0.0;  ///< request initiation, seconds since session start
    std::size_t word_count = 0;
    int status = 0;
    OutcomeKind kind = OutcomeKind::Code;
    double wait_s = 0.0;  ///< planned read-time after this access; 0 for the terminal access
    std::optional<std::uint32_t> code;      ///< carried code, kind == Code only
    std::optional<std::size_t> code_index;  ///< position of that code in the message
};

struct TransmitResult {
    std::vector<AccessEvent> events;
    std::size_t codes_sent = 0;
    bool completed = false;  ///< false when the access bound cut the session short
    std::uint64_t prng_draws = 0;
    std::string diagnostic;  ///< set when not completed
};

/// Ceiling on accesses, as a multiple of the message length.
constexpr std::size_t DEFAULT_MAX_ACCESSES_FACTOR = 64;

/// Drive a whole transmission: two draws per access (u1 picks the URL,
/// u2 everything else), error wait on zero-word pages, skip wait on bad
/// frames, otherwise the next message code; sleeps on `clock` after each
/// access. One terminal access follows the final code so its read-time gap
/// is observable. An empty message produces no traffic at all.
///
/// Throws ConfigError on an empty URL list or a code outside [0, lambda),
/// before any access happens.
TransmitResult transmit(const Message& message, const std::vector<std::string>& urls,
                        const ChannelParams& params, Clock& clock, Fetcher& fetcher,
                        std::size_t max_accesses_factor = DEFAULT_MAX_ACCESSES_FACTOR);

/// transmit() on a virtual clock: the pure schedule, nothing blocks.
TransmitResult schedule_only(const Message& message, const std::vector<std::string>& urls,
                             const ChannelParams& params, Fetcher& fetcher,
                             std::size_t max_accesses_factor = DEFAULT_MAX_ACCESSES_FACTOR);

}  // namespace rtchan
