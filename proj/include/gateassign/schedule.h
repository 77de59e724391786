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

// Flight and schedule data model: timetable ingestion, synthetic generation
// and interval analytics over buffer-locked gate occupation intervals.

#ifndef GATEASSIGN_SCHEDULE_H_
#define GATEASSIGN_SCHEDULE_H_

#include <cstdint>
#include <istream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace gateassign {

// Minutes since midnight of day 0.
using Minutes = int;

// Last representable minute of the two-day horizon.
inline constexpr Minutes kHorizonEnd = 2879;

// Default buffer time locked before arrival and after departure.
inline constexpr Minutes kDefaultBuffer = 15;

// Raised by the schedule CSV reader; the message names the line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error(what + ", line " + std::to_string(line)),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Raised for out-of-range generator or model parameters.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Flight {
  std::string id;
  Minutes arrival = 0;
  Minutes departure = 0;

  friend bool operator==(const Flight&, const Flight&) = default;
};

// Closed interval [start, end] during which a gate is reserved for a flight.
struct LockedInterval {
  Minutes start = 0;
  Minutes end = 0;

  friend bool operator==(const LockedInterval&, const LockedInterval&) =
      default;
};

// Immutable ordered collection of flights with unique ids.
class Schedule {
 public:
  Schedule() = default;
  // Throws ParameterError on a duplicate id or a flight violating
  // 0 <= arrival < departure <= kHorizonEnd.
  explicit Schedule(std::vector<Flight> flights);

  std::span<const Flight> flights() const { return flights_; }
  const Flight& operator[](std::size_t i) const { return flights_[i]; }
  std::size_t size() const { return flights_.size(); }
  bool empty() const { return flights_.empty(); }

  // Position of the flight with this id, or -1.
  int IndexOf(std::string_view id) const;

  // Flight positions sorted by (arrival, departure, id).
  const std::vector<int>& chronological_order() const { return chrono_; }

  friend bool operator==(const Schedule& a, const Schedule& b) {
    return a.flights_ == b.flights_;
  }

 private:
  std::vector<Flight> flights_;
  std::unordered_map<std::string, int> index_;
  std::vector<int> chrono_;
};

// Reads the schedule CSV format: optional header
// `flight_id,arrival,departure`, times as HH:MM or integer minutes, blank
// lines and `#` comments skipped, LF or CRLF line endings.
Schedule ParseSchedule(std::istream& in);
Schedule ParseSchedule(std::string_view text);

// Writes the schedule CSV format with a header and HH:MM times.
std::string SerializeSchedule(const Schedule& schedule);

// "HH:MM" (hours may run past 23 on the second day) or bare minutes.
// Throws std::invalid_argument on malformed input.
Minutes ParseTime(std::string_view text);
std::string FormatTime(Minutes t);

// Draws `count` arrivals uniformly from [day_start, day_end], each staying
// `stay` minutes, labelled G0001.. in arrival order. Deterministic per seed.
Schedule GenerateSchedule(int count, Minutes day_start, Minutes day_end,
                          Minutes stay, std::uint64_t seed);

LockedInterval LockedIntervalOf(const Flight& f, Minutes buffer);

// Closed-interval intersection of the two locked intervals; touching
// intervals conflict.
bool Overlaps(const Flight& f, const Flight& g, Minutes buffer);

// Largest number of locked intervals sharing a common minute. Equals the
// smallest gate count that admits a conflict-free assignment.
int MinGatesRequired(const Schedule& schedule, Minutes buffer);

// `index,arrival` CSV (1-based index) for arrival-time scatter plots.
std::string ScatterExport(const Schedule& schedule);

}  // namespace gateassign

#endif  // GATEASSIGN_SCHEDULE_H_
