// Copyright 2026 The gateassign Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gateassign/schedule.h"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <numeric>
#include <random>
#include <sstream>
#include <tuple>
#include <utility>

namespace gateassign {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool ParseNonNegative(std::string_view s, int& out) {
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && out >= 0;
}

void CheckFlight(const Flight& f) {
  if (f.id.empty()) throw ParameterError("empty flight id");
  if (f.arrival < 0 || f.departure > kHorizonEnd) {
    throw ParameterError("flight " + f.id + " outside the [0, 2879] horizon");
  }
  if (f.departure <= f.arrival) {
    throw ParameterError("flight " + f.id + ": departure before arrival");
  }
}

}  // namespace

Schedule::Schedule(std::vector<Flight> flights) : flights_(std::move(flights)) {
  index_.reserve(flights_.size());
  for (int i = 0; i < static_cast<int>(flights_.size()); ++i) {
    CheckFlight(flights_[i]);
    if (!index_.emplace(flights_[i].id, i).second) {
      throw ParameterError("duplicate flight id " + flights_[i].id);
    }
  }
  chrono_.resize(flights_.size());
  std::iota(chrono_.begin(), chrono_.end(), 0);
  std::sort(chrono_.begin(), chrono_.end(), [this](int a, int b) {
    const Flight& fa = flights_[a];
    const Flight& fb = flights_[b];
    return std::tie(fa.arrival, fa.departure, fa.id) <
           std::tie(fb.arrival, fb.departure, fb.id);
  });
}

int Schedule::IndexOf(std::string_view id) const {
  const auto it = index_.find(std::string(id));
  return it == index_.end() ? -1 : it->second;
}

Minutes ParseTime(std::string_view text) {
  text = Trim(text);
  const auto colon = text.find(':');
  int value = 0;
  if (colon == std::string_view::npos) {
    if (!ParseNonNegative(text, value)) {
      throw std::invalid_argument("malformed time '" + std::string(text) + "'");
    }
    return value;
  }
  int hours = 0;
  int minutes = 0;
  const auto h = text.substr(0, colon);
  const auto m = text.substr(colon + 1);
  if (h.empty() || h.size() > 2 || m.size() != 2 ||
      !ParseNonNegative(h, hours) || !ParseNonNegative(m, minutes) ||
      minutes > 59 || hours > 47) {
    throw std::invalid_argument("malformed time '" + std::string(text) + "'");
  }
  return hours * 60 + minutes;
}

std::string FormatTime(Minutes t) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%02d:%02d", t / 60, t % 60);
  return buf;
}

Schedule ParseSchedule(std::istream& in) {
  std::vector<Flight> flights;
  std::unordered_map<std::string, int> seen;
  std::string raw;
  int line_no = 0;
  bool header_allowed = true;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = Trim(raw);
    if (line.empty() || line.front() == '#') continue;

    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (true) {
      const auto comma = line.find(',', pos);
      fields.push_back(Trim(line.substr(pos, comma - pos)));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    if (header_allowed && fields.size() == 3 && fields[0] == "flight_id" &&
        fields[1] == "arrival" && fields[2] == "departure") {
      header_allowed = false;
      continue;
    }
    header_allowed = false;

    if (fields.size() != 3) throw ParseError("expected 3 fields", line_no);
    if (fields[0].empty()) throw ParseError("empty flight id", line_no);
    Flight f;
    f.id = std::string(fields[0]);
    try {
      f.arrival = ParseTime(fields[1]);
      f.departure = ParseTime(fields[2]);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), line_no);
    }
    if (f.departure <= f.arrival) {
      throw ParseError("departure before arrival", line_no);
    }
    if (f.departure > kHorizonEnd) {
      throw ParseError("time beyond the two-day horizon", line_no);
    }
    if (!seen.emplace(f.id, line_no).second) {
      throw ParseError("duplicate flight id " + f.id, line_no);
    }
    flights.push_back(std::move(f));
  }
  return Schedule(std::move(flights));
}

Schedule ParseSchedule(std::string_view text) {
  std::istringstream in{std::string(text)};
  return ParseSchedule(in);
}

std::string SerializeSchedule(const Schedule& schedule) {
  std::string out = "flight_id,arrival,departure\n";
  for (const Flight& f : schedule.flights()) {
    out += f.id;
    out += ',';
    out += FormatTime(f.arrival);
    out += ',';
    out += FormatTime(f.departure);
    out += '\n';
  }
  return out;
}

Schedule GenerateSchedule(int count, Minutes day_start, Minutes day_end,
                          Minutes stay, std::uint64_t seed) {
  if (count <= 0) throw ParameterError("count must be positive");
  if (day_start < 0 || day_start >= day_end) {
    throw ParameterError("need 0 <= day_start < day_end");
  }
  if (stay <= 0) throw ParameterError("stay must be positive");
  if (day_end + stay > kHorizonEnd) {
    throw ParameterError("day_end + stay exceeds the two-day horizon");
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Minutes> draw(day_start, day_end);
  std::vector<Minutes> arrivals(count);
  for (Minutes& a : arrivals) a = draw(rng);
  std::sort(arrivals.begin(), arrivals.end());

  std::vector<Flight> flights;
  flights.reserve(count);
  char label[16];
  for (int i = 0; i < count; ++i) {
    std::snprintf(label, sizeof(label), "G%04d", i + 1);
    flights.push_back({label, arrivals[i], arrivals[i] + stay});
  }
  return Schedule(std::move(flights));
}

LockedInterval LockedIntervalOf(const Flight& f, Minutes buffer) {
  return {f.arrival - buffer, f.departure + buffer};
}

bool Overlaps(const Flight& f, const Flight& g, Minutes buffer) {
  const LockedInterval a = LockedIntervalOf(f, buffer);
  const LockedInterval b = LockedIntervalOf(g, buffer);
  return std::max(a.start, b.start) <= std::min(a.end, b.end);
}

int MinGatesRequired(const Schedule& schedule, Minutes buffer) {
  // Interval [s, e] is active on minutes s..e, i.e. it leaves at e + 1.
  // Leaving events sort before entering events at the same minute.
  std::vector<std::pair<Minutes, int>> events;
  events.reserve(2 * schedule.size());
  for (const Flight& f : schedule.flights()) {
    const LockedInterval li = LockedIntervalOf(f, buffer);
    events.emplace_back(li.start, +1);
    events.emplace_back(li.end + 1, -1);
  }
  std::sort(events.begin(), events.end());
  int active = 0;
  int peak = 0;
  for (const auto& [t, delta] : events) {
    active += delta;
    peak = std::max(peak, active);
  }
  return peak;
}

std::string ScatterExport(const Schedule& schedule) {
  std::string out = "index,arrival\n";
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    out += std::to_string(i + 1);
    out += ',';
    out += std::to_string(schedule[i].arrival);
    out += '\n';
  }
  return out;
}

}  // namespace gateassign
