#include "heatfix/tracking.hpp"

#include <algorithm>
#include <charconv>
#include <string>
#include <string_view>

#include "heatfix/error.hpp"

namespace heatfix {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view field, const char* name, std::size_t line) {
  field = trim(field);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size())
    throw Error(ErrorKind::Parse,
                "line " + std::to_string(line) + ": invalid " + name + " '" + std::string(field) + "'",
                line);
  return value;
}

}  // namespace

std::vector<TrackingEvent> parse_events(std::istream& in, ParseOptions options) {
  std::vector<TrackingEvent> events;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (line == 1 && options.skip_header) continue;
    const std::string_view text = trim(raw);
    if (text.empty()) continue;

    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = text.find(',', start);
      fields.push_back(text.substr(start, comma == std::string_view::npos ? comma : comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (fields.size() < 3 || fields.size() > 4)
      throw Error(ErrorKind::Parse,
                  "line " + std::to_string(line) + ": expected 3 or 4 fields, got " +
                      std::to_string(fields.size()),
                  line);

    TrackingEvent ev;
    ev.timestamp_ms = parse_int(fields[0], "timestamp", line);
    if (ev.timestamp_ms < 0)
      throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": negative timestamp", line);
    ev.x = parse_int(fields[1], "x", line);
    ev.y = parse_int(fields[2], "y", line);
    if (fields.size() == 4) {
      const std::string_view source = trim(fields[3]);
      if (source == "mouse" || source.empty()) {
        ev.source = EventSource::Mouse;
      } else if (source == "gaze") {
        ev.source = EventSource::Gaze;
      } else {
        throw Error(ErrorKind::Parse,
                    "line " + std::to_string(line) + ": unknown source '" + std::string(source) + "'",
                    line);
      }
    }
    if (!events.empty() && ev.timestamp_ms < events.back().timestamp_ms)
      throw Error(ErrorKind::Order,
                  "line " + std::to_string(line) + ": timestamp " + std::to_string(ev.timestamp_ms) +
                      " precedes " + std::to_string(events.back().timestamp_ms),
                  line);
    events.push_back(ev);
  }
  return events;
}

DwellResult build_dwell_map(std::span<const TrackingEvent> events, const DwellParams& params) {
  if (params.width == 0 || params.height == 0)
    throw Error(ErrorKind::InvalidArgument, "page width and height must be >= 1");
  if (params.cell_size == 0) throw Error(ErrorKind::InvalidArgument, "cell size must be >= 1");
  if (!(params.idle_cap_ms > 0.0)) throw Error(ErrorKind::InvalidArgument, "idle cap must be > 0");

  const std::size_t c = params.cell_size;
  DwellResult result;
  result.map.cell_size = c;
  result.map.dwell = Map((params.width + c - 1) / c, (params.height + c - 1) / c);

  auto in_bounds = [&](const TrackingEvent& e) {
    return e.x >= 0 && e.y >= 0 && static_cast<std::uint64_t>(e.x) < params.width &&
           static_cast<std::uint64_t>(e.y) < params.height;
  };

  bool any_in_bounds = false;
  for (std::size_t k = 0; k < events.size(); ++k) {
    const TrackingEvent& e = events[k];
    if (!in_bounds(e)) continue;
    any_in_bounds = true;
    if (k + 1 == events.size()) break;
    const double gap = static_cast<double>(events[k + 1].timestamp_ms - e.timestamp_ms);
    result.map.dwell(static_cast<std::size_t>(e.x) / c, static_cast<std::size_t>(e.y) / c) +=
        std::min(gap, params.idle_cap_ms);
  }
  result.empty_session = !any_in_bounds;
  return result;
}

}  // namespace heatfix
