#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rtchan/receiver.hpp"
#include "rtchan/transmitter.hpp"

namespace rtchan {

// JSON Lines, one record per line. Event lines carry
// {seq, url, t, w, status, kind, wait, code}; observation lines the
// {t, url, w, status} subset. Doubles print in shortest round-trip form,
// so identical inputs serialize byte-identically.

void write_event_log(std::ostream& out, const std::vector<AccessEvent>& events);

void write_observation_log(std::ostream& out, const std::vector<Observation>& observations);

/// `source_name` appears in error messages ("name:line: ...").
std::vector<Observation> read_observation_log(std::istream& in, const std::string& source_name);

std::string report_to_json(const DecodeReport& report);

}  // namespace rtchan
