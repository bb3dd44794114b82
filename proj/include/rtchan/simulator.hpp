#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rtchan/page_model.hpp"
#include "rtchan/prng.hpp"
#include "rtchan/receiver.hpp"
#include "rtchan/transmitter.hpp"

namespace rtchan {

/// System-delay distribution added to each inter-access gap. Samples come
/// from a simulation generator that never touches the channel generator.
struct DelayModel {
    enum class Kind { Zero, Constant, UniformRange, TruncatedExp };

    Kind kind = Kind::Zero;
    double a = 0.0;      ///< Constant: the delay; UniformRange: low edge; TruncatedExp: mean
    double b = 0.0;      ///< UniformRange: high edge
    double cap_s = -1.0; ///< ceiling on every sample; negative means "use delta_s"

    /// "zero" | "constant:D" | "uniform:LO:HI" | "texp:MEAN:CAP"
    static DelayModel parse(const std::string& spec);

    double sample(Prng& sim_prng, const ChannelParams& params) const;
};

struct SessionMetrics {
    std::size_t message_length = 0;
    std::size_t codes_recovered = 0;  ///< Code classifications in the report
    std::size_t codes_correct = 0;    ///< positions matching the sent message
    bool recovered = false;           ///< recovered codes equal the message exactly
    std::size_t accesses = 0;         ///< non-terminal accesses
    std::size_t error_accesses = 0;
    std::size_t bad_code_accesses = 0;
    double code_error_rate = 0.0;   ///< 1 - correct / length
    double bad_code_fraction = 0.0; ///< bad-code share of non-terminal accesses
    double session_time_s = 0.0;    ///< observed span, first to last request
    double data_rate_cps = 0.0;     ///< correct codes per second of session time
};

struct SessionResult {
    TransmitResult tx;
    std::vector<Observation> observations;
    DecodeReport report;
    SessionMetrics metrics;
};

/// End-to-end loopback on a virtual clock: transmit, perturb the request
/// timestamps with sampled delay, receive, compare. Deterministic in
/// (params.seed, sim_seed).
SessionResult run_session(const Message& message, const std::vector<std::string>& urls,
                          Fetcher& fetcher, const ChannelParams& params,
                          const DelayModel& delay, std::uint64_t sim_seed,
                          std::size_t max_accesses_factor = DEFAULT_MAX_ACCESSES_FACTOR);

/// One axis per parameter; an empty axis holds the base value.
struct SweepGrid {
    std::vector<double> delta_s;
    std::vector<double> scale;
    std::vector<std::uint32_t> lambda;
    std::vector<std::size_t> min_words;

    /// "delta=3,5,7;scale=1/4,1/2;lambda=32;min_words=700"
    static SweepGrid parse(const std::string& spec);
};

struct SweepOptions {
    std::size_t trials = 20;
    std::size_t message_length = 14;
    std::size_t url_count = 16;
    std::uint64_t sim_seed = 1;
    DelayModel delay;
};

struct SweepResult {
    double delta_s = 0.0;
    double scale = 0.0;
    std::uint32_t lambda = 0;
    std::size_t min_words = 0;
    std::size_t trials = 0;
    std::size_t messages_sent = 0;
    double code_error_rate = 0.0;
    double bad_code_fraction = 0.0;
    double data_rate_cps = 0.0;
    double session_time_s = 0.0;
};

/// One result per grid cell, averaged over trials, in grid order
/// (delta, then scale, then lambda, then min_words). Each cell runs on a
/// synthetic corpus of url_count pages at the cell's min_words and a fresh
/// deterministic message per trial.
std::vector<SweepResult> sweep(const ChannelParams& base, const SweepGrid& grid,
                               const SweepOptions& options);

/// delta,scale,lambda,min_words,trials,code_error_rate,bad_code_fraction,data_rate_cps,session_time_s
void write_sweep_csv(std::ostream& out, const std::vector<SweepResult>& results);

std::string sweep_summary_json(const std::vector<SweepResult>& results);

}  // namespace rtchan
