#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "rtchan/params.hpp"

namespace rtchan {

/// Environment variable consulted when no --config flag is given.
constexpr const char* CONFIG_ENV_VAR = "READTIME_CHANNEL_CONFIG";

/// Channel parameters plus the transmitter-side inputs.
/// Keys: alpha_s, delta_s, scale, lambda, seed, z_s, url_list, corpus,
/// max_accesses_factor.
struct Config {
    ChannelParams params;
    std::string url_list;  ///< path to the URL list file
    std::string corpus;    ///< path to the corpus manifest
    std::size_t max_accesses_factor = 64;
};

/// Flat key = value text; '#' lines are comments. Relative paths resolve
/// against the config file's directory. Throws ConfigError naming the line.
Config load_config(const std::string& path);

Config parse_config(std::string_view text, const std::string& base_dir,
                    const std::string& source_name);

/// Emits every key; parse(serialize(c)) reproduces c exactly.
std::string serialize_config(const Config& config);

/// Decimal or 0x-prefixed hex.
std::uint64_t parse_seed(std::string_view text);

/// Decimal ("0.25") or fraction ("1/4").
double parse_scale(std::string_view text);

}  // namespace rtchan
