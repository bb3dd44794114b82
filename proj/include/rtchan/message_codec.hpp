#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rtchan {

/// A covert message: a sequence of codes, each in [0, lambda).
using Message = std::vector<std::uint32_t>;

/// Codes in the big-endian byte-length prefix of a byte-mode message.
constexpr std::size_t LENGTH_PREFIX_CODES = 4;

/// Pack bytes into codes: a 4-code big-endian length prefix, then the
/// payload bits MSB-first in log2(lambda)-bit groups, the last group
/// zero-padded. Requires lambda = 2^k with 1 <= k <= 8; the prefix can
/// express lengths up to 2^(4k) - 1 bytes. Throws ConfigError otherwise.
Message bytes_to_codes(std::string_view data, std::uint32_t lambda);

/// Inverse of bytes_to_codes; truncates to the length carried in the
/// prefix. Throws ConfigError on codes out of range or a short sequence.
std::string bytes_from_codes(const Message& codes, std::uint32_t lambda);

/// Parse "3,17,0" into codes, validating each against lambda.
Message parse_code_list(std::string_view text, std::uint32_t lambda);

}  // namespace rtchan
