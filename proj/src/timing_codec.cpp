#include "rtchan/timing_codec.hpp"

#include <cmath>
#include <stdexcept>

namespace rtchan {

namespace {

// Observed read-times are differences of long running timestamp sums, so an
// honest observation can sit an ulp on the wrong side of a slot edge. Slot
// edges are therefore shifted down by a fixed microsecond; the delay budget
// is specified in whole seconds, so the shift is never visible there.
constexpr double DECODE_SLACK_S = 1e-6;

}  // namespace

const char* to_string(OutcomeKind kind) {
    switch (kind) {
        case OutcomeKind::Code: return "code";
        case OutcomeKind::Error: return "error";
        case OutcomeKind::BadCode: return "bad_code";
        case OutcomeKind::Terminal: return "terminal";
    }
    return "?";
}

double mean_read_time(std::size_t word_count) {
    return 0.44 * static_cast<double>(word_count) + 25.0;
}

double positive_fmod(double x, double m) {
    double r = std::fmod(x, m);
    if (r < 0.0) {
        r += m;
        if (r >= m) r = 0.0;  // x was a negative epsilon and r rounded up to m
    }
    return r;
}

TimingFrame make_frame(std::size_t word_count, double r, const ChannelParams& params) {
    TimingFrame f;
    f.scaled_mean_s = params.scale * mean_read_time(word_count);
    f.scaled_sigma_s = f.scaled_mean_s;
    f.baseline_s = -f.scaled_mean_s * std::log(1.0 - r);
    f.window_end_s = 3.0 * f.scaled_mean_s + params.alpha_s;
    f.slot_width_s = 3.0 * f.scaled_mean_s / static_cast<double>(params.lambda);
    return f;
}

bool is_bad_code(const TimingFrame& frame, const ChannelParams& params) {
    return frame.baseline_s > frame.window_end_s || frame.slot_width_s < params.delta_s;
}

EncodeOutcome encode_code(std::uint32_t code, const TimingFrame& frame,
                          const ChannelParams& params) {
    if (code >= params.lambda) {
        throw std::invalid_argument("code " + std::to_string(code) +
                                    " outside the code-space [0, " +
                                    std::to_string(params.lambda) + ")");
    }
    const double offset = static_cast<double>(code) * frame.slot_width_s;
    const double cycle = 3.0 * frame.scaled_mean_s;
    EncodeOutcome out;
    out.kind = OutcomeKind::Code;
    out.wait_s = positive_fmod(frame.baseline_s - params.alpha_s + offset, cycle) + params.alpha_s;
    out.code = code;
    return out;
}

EncodeOutcome error_wait(double r, const ChannelParams& params) {
    EncodeOutcome out;
    out.kind = OutcomeKind::Error;
    out.wait_s = params.delta_s + positive_fmod(100.0 * r, params.alpha_s - params.delta_s);
    return out;
}

EncodeOutcome bad_code_wait(double r, const TimingFrame& frame, const ChannelParams& params) {
    EncodeOutcome out;
    out.kind = OutcomeKind::BadCode;
    out.wait_s = frame.window_end_s + positive_fmod(100.0 * r, params.z_s);
    return out;
}

DecodeResult decode_wait(double tau_s, const TimingFrame& frame, const ChannelParams& params) {
    DecodeResult res;
    if (tau_s < params.alpha_s) {
        res.kind = OutcomeKind::Error;
        return res;
    }
    // Past the window end plus the delay allowance nothing legitimate can
    // land; inside the allowance, a delayed top-slot code still wraps
    // around cleanly below.
    if (tau_s > frame.window_end_s + params.delta_s) {
        res.kind = OutcomeKind::BadCode;
        return res;
    }
    const double cycle = 3.0 * frame.scaled_mean_s;
    const double pos_tau = positive_fmod(tau_s - params.alpha_s, cycle);
    const double pos_rho = positive_fmod(frame.baseline_s - params.alpha_s, cycle);
    const double offset = positive_fmod(pos_tau - pos_rho, cycle);
    res.kind = OutcomeKind::Code;
    res.offset_s = offset;
    // Within the delay allowance of the baseline (on either side) the
    // offset is taken as zero.
    if (offset < params.delta_s || offset > cycle - params.delta_s) {
        res.code = 0;
        return res;
    }
    auto code = static_cast<std::uint32_t>(std::floor((offset + DECODE_SLACK_S) / frame.slot_width_s));
    if (code >= params.lambda) code = params.lambda - 1;  // rounding at the window edge
    res.code = code;
    return res;
}

}  // namespace rtchan
