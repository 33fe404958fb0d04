#pragma once

#include <cstdint>
#include <istream>
#include <span>
#include <vector>

#include "heatfix/grid.hpp"

namespace heatfix {

enum class EventSource { Mouse, Gaze };

struct TrackingEvent {
  std::int64_t timestamp_ms = 0;
  std::int64_t x = 0;
  std::int64_t y = 0;
  EventSource source = EventSource::Mouse;

  friend bool operator==(const TrackingEvent&, const TrackingEvent&) = default;
};

struct ParseOptions {
  bool skip_header = false;
};

/// Reads `timestamp_ms,x,y[,source]` rows. Blank lines are ignored, CR before
/// LF is stripped. Throws Error{Parse} or Error{Order} with the offending line.
std::vector<TrackingEvent> parse_events(std::istream& in, ParseOptions options = {});

inline constexpr double kDefaultIdleCapMs = 1000.0;

/// Cumulative dwell milliseconds per cell.
struct DwellMap {
  Map dwell;
  std::size_t cell_size = 1;
};

struct DwellResult {
  DwellMap map;
  // Set when no event fell inside the page; the map is then all zeros.
  bool empty_session = false;
};

struct DwellParams {
  std::size_t width = 0;   // page width, pixels
  std::size_t height = 0;  // page height, pixels
  std::size_t cell_size = 1;
  double idle_cap_ms = kDefaultIdleCapMs;
};

/// Each interval between consecutive events is charged, capped at
/// idle_cap_ms, to the cell holding the earlier event. Events outside the
/// page contribute nothing.
DwellResult build_dwell_map(std::span<const TrackingEvent> events, const DwellParams& params);

}  // namespace heatfix
