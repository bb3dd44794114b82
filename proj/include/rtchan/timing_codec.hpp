#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "rtchan/params.hpp"

namespace rtchan {

enum class OutcomeKind { Code, Error, BadCode, Terminal };

const char* to_string(OutcomeKind kind);

/// Per-access quantities both endpoints derive identically from the page
/// word count and the shared draw. Codes live in the window
/// [alpha, window_end), split into lambda slots of slot_width each,
/// anchored at the baseline and wrapping cyclically at the window end.
struct TimingFrame {
    double scaled_mean_s = 0.0;   ///< scaled average read-time for the page
    double scaled_sigma_s = 0.0;  ///< equals the mean under the exponential model
    double baseline_s = 0.0;      ///< randomized reference read-time
    double window_end_s = 0.0;    ///< upper edge of the signalling window
    double slot_width_s = 0.0;    ///< window span divided by the code-space size
};

/// Planned wait for one access.
struct EncodeOutcome {
    OutcomeKind kind = OutcomeKind::Code;
    double wait_s = 0.0;
    std::optional<std::uint32_t> code;
};

/// Classification of one observed read-time against a frame.
struct DecodeResult {
    OutcomeKind kind = OutcomeKind::Code;  ///< Error = below window, BadCode = beyond it
    std::optional<std::uint32_t> code;
    double offset_s = 0.0;  ///< recovered slot offset, diagnostics only
};

/// Average-user read-time in seconds for a page with `word_count`
/// relevant words.
double mean_read_time(std::size_t word_count);

/// Mathematical (always non-negative) remainder of x mod m, for m > 0.
double positive_fmod(double x, double m);

TimingFrame make_frame(std::size_t word_count, double r, const ChannelParams& params);

/// A frame cannot carry a code when the baseline overshoots the window end
/// or the slots are narrower than the worst-case system delay.
bool is_bad_code(const TimingFrame& frame, const ChannelParams& params);

/// Wait carrying `code`: the baseline shifted by code * slot_width, wrapped
/// into the window. Throws std::invalid_argument when code >= lambda
/// (a caller bug, not channel noise).
EncodeOutcome encode_code(std::uint32_t code, const TimingFrame& frame,
                          const ChannelParams& params);

/// Short wait inside the reserved zone (delta, alpha) after a failed access.
EncodeOutcome error_wait(double r, const ChannelParams& params);

/// Wait at or beyond the window end telling the receiver to skip this access.
EncodeOutcome bad_code_wait(double r, const TimingFrame& frame,
                            const ChannelParams& params);

/// Recover the code carried by an observed read-time, or classify the
/// observation as out-of-window. Robust to added system delay d: exact for
/// 0 <= d <= min(delta, slot_width - delta), except that the top wrapped
/// code collapses to 0 once d exceeds slot_width - delta (it is pushed into
/// the zero zone around the baseline).
DecodeResult decode_wait(double tau_s, const TimingFrame& frame,
                         const ChannelParams& params);

}  // namespace rtchan
