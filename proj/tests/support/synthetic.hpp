#pragma once

// Synthetic reading session: a page with a text column and a wide blank
// margin, a gaze trace that reads the text, and a mouse trace that follows
// the gaze except for a share of time parked in the margin.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "heatfix/image.hpp"
#include "heatfix/tracking.hpp"

namespace synthetic {

struct Layout {
  std::size_t width = 800;
  std::size_t height = 600;
  int text_left = 40;
  int text_right = 480;
  int text_top = 40;
  int text_bottom = 560;
  int line_pitch = 18;
  int glyph_height = 10;
  int margin_left = 520;  // everything right of this is blank
};

struct Session {
  heatfix::RasterImage page;
  std::vector<heatfix::TrackingEvent> gaze;
  std::vector<heatfix::TrackingEvent> mouse;
  std::vector<std::pair<int, int>> line_rows;  // [top, bottom) of each text line
};

inline Session make_session(std::uint64_t seed, double parked_share = 0.30, Layout layout = {}) {
  std::mt19937_64 rng(seed);
  Session s;
  s.page = heatfix::RasterImage(layout.width, layout.height, {255, 255, 255});

  std::uniform_int_distribution<int> word_glyphs(2, 8);
  std::uniform_int_distribution<int> ink(0, 140);
  std::bernoulli_distribution dot(0.55);

  for (int top = layout.text_top; top + layout.glyph_height <= layout.text_bottom;
       top += layout.line_pitch) {
    s.line_rows.emplace_back(top, top + layout.glyph_height);
    int x = layout.text_left;
    while (true) {
      const int glyphs = word_glyphs(rng);
      const int word_end = x + glyphs * 7;
      if (word_end > layout.text_right) break;
      for (int yy = top; yy < top + layout.glyph_height; ++yy)
        for (int xx = x; xx < word_end; ++xx)
          if (dot(rng)) {
            const auto g = static_cast<std::uint8_t>(ink(rng));
            s.page.set(static_cast<std::size_t>(xx), static_cast<std::size_t>(yy), {g, g, g});
          }
      x = word_end + 7;
    }
  }

  // Reading pattern: left-to-right fixations along every line.
  std::uniform_int_distribution<int> fixation_ms(150, 400);
  std::uniform_int_distribution<int> step(20, 40);
  std::normal_distribution<double> jitter(0.0, 1.5);
  std::int64_t t = 0;
  std::vector<int> durations;
  for (const auto& [top, bottom] : s.line_rows) {
    for (int x = layout.text_left + 5; x < layout.text_right - 5; x += step(rng)) {
      const int y = (top + bottom) / 2 + static_cast<int>(std::lround(jitter(rng)));
      s.gaze.push_back({t, x, y, heatfix::EventSource::Gaze});
      const int d = fixation_ms(rng);
      durations.push_back(d);
      t += d;
    }
  }
  s.gaze.push_back({t, s.gaze.back().x, s.gaze.back().y, heatfix::EventSource::Gaze});
  const double total_ms = static_cast<double>(t);

  // Mouse follows gaze with small offsets; a random subset of intervals whose
  // durations sum to the parked share is moved into the blank margin.
  std::normal_distribution<double> offset(0.0, 3.0);
  std::uniform_int_distribution<int> park_x(layout.margin_left + 40, static_cast<int>(layout.width) - 40);
  std::uniform_int_distribution<int> park_y(60, static_cast<int>(layout.height) - 60);
  std::vector<std::size_t> order(durations.size());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<bool> parked(durations.size(), false);
  double parked_ms = 0.0;
  for (std::size_t i : order) {
    if (parked_ms >= parked_share * total_ms) break;
    parked[i] = true;
    parked_ms += durations[i];
  }

  for (std::size_t i = 0; i < s.gaze.size(); ++i) {
    heatfix::TrackingEvent m = s.gaze[i];
    m.source = heatfix::EventSource::Mouse;
    if (i < parked.size() && parked[i]) {
      m.x = park_x(rng);
      m.y = park_y(rng);
    } else {
      m.x += static_cast<int>(std::lround(offset(rng)));
      m.y += static_cast<int>(std::lround(offset(rng)));
    }
    s.mouse.push_back(m);
  }
  return s;
}

}  // namespace synthetic
