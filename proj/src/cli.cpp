#include "heatfix/cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "heatfix/correction.hpp"
#include "heatfix/entropy_map.hpp"
#include "heatfix/error.hpp"
#include "heatfix/grid_file.hpp"
#include "heatfix/image.hpp"
#include "heatfix/metrics.hpp"
#include "heatfix/rendering.hpp"
#include "heatfix/report.hpp"
#include "heatfix/tracking.hpp"

namespace heatfix::cli {

namespace fs = std::filesystem;

namespace {

struct EntropyArgs {
  std::string image;
  int window = kDefaultWindow;
  double epsilon = 0.0;
  std::vector<std::string> outputs;
};

struct HeatmapArgs {
  std::string events;
  std::size_t width = 0;
  std::size_t height = 0;
  std::size_t cell = 1;
  double idle_cap = kDefaultIdleCapMs;
  bool header = false;
  std::string output;
};

struct CorrectArgs {
  std::string heatmap;
  std::string entropy;
  int window = kDefaultWindow;
  std::string output;
};

struct CompareArgs {
  std::string a;
  std::string b;
  std::string json;
  std::string name_a = "A";
  std::string name_b = "B";
  std::optional<int> window;
  std::optional<double> idle_cap;
  std::optional<double> epsilon;
};

struct RenderArgs {
  std::string map;
  std::string background;
  double blur = kDefaultBlurSigma;
  double alpha = kDefaultOverlayAlpha;
  bool keep_zero = false;
  std::string ramp = "heat";
  std::string output;
};

struct PipelineArgs {
  std::string screenshot;
  std::string mouse;
  std::string gaze;
  std::string out_dir;
  int window = kDefaultWindow;
  double epsilon = 0.0;
  std::size_t cell = 1;
  double idle_cap = kDefaultIdleCapMs;
  bool header = false;
  double blur = kDefaultBlurSigma;
  double alpha = kDefaultOverlayAlpha;
};

void require_window_shape(int window) {
  if (window < 3 || window % 2 == 0)
    throw Error(ErrorKind::InvalidWindow,
                "window must be odd and >= 3 (got " + std::to_string(window) + ")");
}

std::vector<TrackingEvent> load_events(const std::string& path, bool header) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  try {
    return parse_events(in, {header});
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.what(), e.line());
  }
}

RenderOptions render_options(double blur, double alpha, bool keep_zero, const std::string& ramp) {
  if (blur < 0.0) throw Error(ErrorKind::InvalidArgument, "--blur must be >= 0");
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw Error(ErrorKind::InvalidArgument, "--alpha must lie in [0, 1]");
  RenderOptions options;
  options.blur_sigma = blur;
  options.overlay_alpha = alpha;
  options.zero_transparent = !keep_zero;
  if (ramp == "heat") {
    options.ramp = ColorRamp::heat();
  } else if (ramp == "gray") {
    options.ramp = ColorRamp::grayscale();
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown ramp '" + ramp + "' (heat, gray)");
  }
  return options;
}

// Entropy rendering: 0-255 normalized levels through the ramp, zero opaque.
RgbaImage render_entropy(const EntropyMap& em) {
  const Grid<std::uint8_t> levels = normalize_255(em);
  Map m(levels.width(), levels.height());
  std::transform(levels.values().begin(), levels.values().end(), m.values().begin(),
                 [](std::uint8_t v) { return static_cast<double>(v); });
  return colorize(m, ColorRamp::heat(), false);
}

int cmd_entropy(const EntropyArgs& a, std::ostream& out, std::ostream& err) {
  require_window_shape(a.window);
  if (a.epsilon < 0.0) throw Error(ErrorKind::InvalidArgument, "--epsilon must be >= 0");
  const RasterImage img = read_png(a.image);
  const EntropyMap em = local_entropy(to_grayscale(img), a.window, a.epsilon);
  for (const std::string& path : a.outputs) {
    if (fs::path(path).extension() == ".png") {
      write_png(path, render_entropy(em));
    } else {
      save_grid(path, {em.bits, 1});
    }
    out << "wrote " << path << '\n';
  }
  if (a.outputs.empty()) err << "warning: no --out given, nothing written\n";
  return kExitOk;
}

int cmd_heatmap(const HeatmapArgs& a, std::ostream& out, std::ostream& err) {
  const auto events = load_events(a.events, a.header);
  const DwellResult r = build_dwell_map(events, {a.width, a.height, a.cell, a.idle_cap});
  if (r.empty_session) err << "warning: no events inside the page; heat map is all zeros\n";
  save_grid(a.output, {r.map.dwell, r.map.cell_size});
  out << "wrote " << a.output << '\n';
  return kExitOk;
}

Map entropy_weights(const GridFile& entropy, int window, std::size_t cell_size) {
  if (entropy.cell_size != 1)
    throw Error(ErrorKind::DimensionMismatch,
                "entropy grid must be per-pixel (cell size 1), got " + std::to_string(entropy.cell_size));
  EntropyMap em{entropy.values, window};
  const double max_bits = em.max_bits();
  for (double v : em.bits.values())
    if (v > max_bits * (1.0 + 1e-12))
      throw Error(ErrorKind::InvalidArgument,
                  fmt::format("entropy value {} exceeds the {}x{} window maximum {}; check --window", v,
                              window, window, max_bits));
  return downsample_entropy(em, cell_size);
}

int cmd_correct(const CorrectArgs& a, std::ostream& out, std::ostream&) {
  require_window_shape(a.window);
  const GridFile heat = load_grid(a.heatmap);
  const GridFile entropy = load_grid(a.entropy);
  const Map weights = entropy_weights(entropy, a.window, heat.cell_size);
  if (!weights.same_shape(heat.values))
    throw Error(ErrorKind::DimensionMismatch,
                "dimension mismatch: heat map " + shape_string(heat.values) + " (cell " +
                    std::to_string(heat.cell_size) + ") vs entropy " + shape_string(entropy.values) +
                    " -> " + shape_string(weights));
  const CorrectedMap corrected = apply_correction({heat.values, heat.cell_size}, weights);
  save_grid(a.output, {corrected.values, corrected.cell_size});
  out << "wrote " << a.output << '\n';
  return kExitOk;
}

void write_json(const std::string& path, const nlohmann::json& j) {
  std::ofstream f(path, std::ios::trunc);
  if (!f) throw Error(ErrorKind::Io, "cannot write " + path);
  f << j.dump(2) << '\n';
}

int cmd_compare(const CompareArgs& a, std::ostream& out, std::ostream&) {
  const GridFile ga = load_grid(a.a);
  const GridFile gb = load_grid(a.b);
  if (!ga.values.same_shape(gb.values) || ga.cell_size != gb.cell_size)
    throw Error(ErrorKind::DimensionMismatch,
                "dimension mismatch: " + shape_string(ga.values) + " (cell " +
                    std::to_string(ga.cell_size) + ") vs " + shape_string(gb.values) + " (cell " +
                    std::to_string(gb.cell_size) + ")");
  const ComparisonReport report = compare(ga.values, gb.values, ga.cell_size);
  print_comparison(out, report, a.name_a, a.name_b);
  if (!a.json.empty())
    write_json(a.json, to_json(report, {a.window, ga.cell_size, a.idle_cap, a.epsilon}));
  return kExitOk;
}

int cmd_render(const RenderArgs& a, std::ostream& out, std::ostream&) {
  const RenderOptions options = render_options(a.blur, a.alpha, a.keep_zero, a.ramp);
  const GridFile grid = load_grid(a.map);
  if (a.background.empty()) {
    write_png(a.output, render_heat(grid.values, grid.cell_size, grid.values.width() * grid.cell_size,
                                    grid.values.height() * grid.cell_size, options));
  } else {
    const RasterImage bg = read_png(a.background);
    write_png(a.output, render_overlay(grid.values, grid.cell_size, bg, options));
  }
  out << "wrote " << a.output << '\n';
  return kExitOk;
}

struct NamedMap {
  std::string name;
  const Map* map;
};

// Centers of gravity and their pairwise distances for every map with mass.
void print_summary(std::ostream& out, const std::vector<NamedMap>& maps, std::size_t cell_size) {
  std::vector<std::pair<std::string, CenterOfGravity>> cogs;
  out << "Centers of gravity\n";
  out << fmt::format("  {:<8} {:>10} {:>10}\n", "", "x", "y");
  for (const auto& [name, map] : maps) {
    if (!(total(*map) > 0.0)) {
      out << fmt::format("  {:<8} {:>10} {:>10}\n", name, "n/a", "n/a");
      continue;
    }
    const CenterOfGravity c = center_of_gravity(*map, cell_size);
    out << fmt::format("  {:<8} {:>10.1f} {:>10.1f}\n", name, c.x, c.y);
    cogs.emplace_back(name, c);
  }
  out << "Euclidean distances between centers of gravity\n";
  out << fmt::format("  {:<8}", "");
  for (const auto& c : cogs) out << fmt::format(" {:>8}", c.first);
  out << '\n';
  for (const auto& row : cogs) {
    out << fmt::format("  {:<8}", row.first);
    for (const auto& col : cogs) out << fmt::format(" {:>8.1f}", euclidean(row.second, col.second));
    out << '\n';
  }
}

int cmd_pipeline(const PipelineArgs& a, std::ostream& out, std::ostream& err) {
  require_window_shape(a.window);
  if (a.epsilon < 0.0) throw Error(ErrorKind::InvalidArgument, "--epsilon must be >= 0");
  const RenderOptions options = render_options(a.blur, a.alpha, false, "heat");

  // Load and validate every input before anything is written.
  const RasterImage screenshot = read_png(a.screenshot);
  validate_window(a.window, screenshot.width(), screenshot.height());
  const auto mouse_events = load_events(a.mouse, a.header);
  std::optional<std::vector<TrackingEvent>> gaze_events;
  if (!a.gaze.empty()) gaze_events = load_events(a.gaze, a.header);

  const DwellParams params{screenshot.width(), screenshot.height(), a.cell, a.idle_cap};
  const EntropyMap em = local_entropy(to_grayscale(screenshot), a.window, a.epsilon);
  const Map weights = downsample_entropy(em, a.cell);

  const DwellResult mouse = build_dwell_map(mouse_events, params);
  if (mouse.empty_session) err << "warning: no mouse events inside the page\n";
  const CorrectedMap mouse_corrected = apply_correction(mouse.map, weights);

  std::optional<DwellResult> gaze;
  std::optional<CorrectedMap> gaze_corrected;
  if (gaze_events) {
    gaze = build_dwell_map(*gaze_events, params);
    if (gaze->empty_session) err << "warning: no gaze events inside the page\n";
    gaze_corrected = apply_correction(gaze->map, weights);
  }

  std::map<std::string, ComparisonReport> reports;
  if (gaze) {
    const Map& et = gaze->map.dwell;
    reports.emplace("metrics_mt_et.json", compare(mouse.map.dwell, et, a.cell));
    reports.emplace("metrics_enmt_et.json", compare(mouse_corrected.values, et, a.cell));
    reports.emplace("metrics_enet_et.json", compare(gaze_corrected->values, et, a.cell));
  }

  const fs::path dir(a.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorKind::Io, "cannot create " + dir.string() + ": " + ec.message());

  save_grid(dir / "entropy.grid", {em.bits, 1});
  write_png(dir / "entropy.png", render_entropy(em));
  save_grid(dir / "mouse_raw.grid", {mouse.map.dwell, a.cell});
  save_grid(dir / "mouse_corrected.grid", {mouse_corrected.values, a.cell});
  write_png(dir / "mouse_raw.png", render_overlay(mouse.map.dwell, a.cell, screenshot, options));
  write_png(dir / "mouse_corrected.png",
            render_overlay(mouse_corrected.values, a.cell, screenshot, options));
  if (gaze) {
    save_grid(dir / "gaze_raw.grid", {gaze->map.dwell, a.cell});
    save_grid(dir / "gaze_corrected.grid", {gaze_corrected->values, a.cell});
    write_png(dir / "gaze_raw.png", render_overlay(gaze->map.dwell, a.cell, screenshot, options));
    write_png(dir / "gaze_corrected.png",
              render_overlay(gaze_corrected->values, a.cell, screenshot, options));
  }
  const ReportParams report_params{a.window, a.cell, a.idle_cap, a.epsilon};
  for (const auto& [name, report] : reports) write_json((dir / name).string(), to_json(report, report_params));

  std::ostringstream summary;
  std::vector<NamedMap> maps{{"MT", &mouse.map.dwell}};
  if (gaze) maps.push_back({"ET", &gaze->map.dwell});
  maps.push_back({"EN", &weights});
  maps.push_back({"EN×MT", &mouse_corrected.values});
  if (gaze) maps.push_back({"EN×ET", &gaze_corrected->values});
  print_summary(summary, maps, a.cell);
  if (gaze) {
    summary << "Correlation with ET\n";
    summary << fmt::format("  {:<8} {:.4f}\n", "MT", reports.at("metrics_mt_et.json").correlation);
    summary << fmt::format("  {:<8} {:.4f}\n", "EN×MT", reports.at("metrics_enmt_et.json").correlation);
    summary << fmt::format("  {:<8} {:.4f}\n", "EN×ET", reports.at("metrics_enet_et.json").correlation);
  }
  {
    std::ofstream f(dir / "summary.txt", std::ios::trunc);
    f << summary.str();
  }
  out << summary.str();
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entropy-weighted correction and comparison of mouse-tracking heat maps", "heatfix"};
  app.require_subcommand(1);

  EntropyArgs ea;
  auto* entropy = app.add_subcommand("entropy", "Local entropy map of a PNG screenshot");
  entropy->add_option("image", ea.image, "Screenshot (PNG)")->required();
  entropy->add_option("-w,--window", ea.window, "Odd square window size >= 3");
  entropy->add_option("-e,--epsilon", ea.epsilon, "Entropy below this many bits is set to 0");
  entropy->add_option("-o,--out", ea.outputs, "Output path; .png renders, anything else writes a grid")
      ->required();

  HeatmapArgs ha;
  auto* heatmap = app.add_subcommand("heatmap", "Dwell-time grid from an event CSV");
  heatmap->add_option("events", ha.events, "Event CSV: timestamp_ms,x,y[,source]")->required();
  heatmap->add_option("--width", ha.width, "Page width in pixels")->required()->check(CLI::PositiveNumber);
  heatmap->add_option("--height", ha.height, "Page height in pixels")->required()->check(CLI::PositiveNumber);
  heatmap->add_option("--cell", ha.cell, "Cell size in pixels")->check(CLI::PositiveNumber);
  heatmap->add_option("--idle-cap", ha.idle_cap, "Longest interval credited to one sample (ms)")
      ->check(CLI::PositiveNumber);
  heatmap->add_flag("--header", ha.header, "Skip the first line");
  heatmap->add_option("-o,--out", ha.output, "Output grid")->required();

  CorrectArgs ca;
  auto* correct = app.add_subcommand("correct", "Weight a heat map by entropy");
  correct->add_option("--heatmap", ca.heatmap, "Dwell grid")->required();
  correct->add_option("--entropy", ca.entropy, "Per-pixel entropy grid (bits)")->required();
  correct->add_option("-w,--window", ca.window, "Window the entropy grid was computed with");
  correct->add_option("-o,--out", ca.output, "Output grid")->required();

  CompareArgs cm;
  auto* cmp = app.add_subcommand("compare", "Correlation and center-of-gravity distance of two grids");
  cmp->add_option("a", cm.a, "First grid")->required();
  cmp->add_option("b", cm.b, "Second grid")->required();
  cmp->add_option("--json", cm.json, "Write the metrics report here");
  cmp->add_option("--name-a", cm.name_a, "Label for the first grid");
  cmp->add_option("--name-b", cm.name_b, "Label for the second grid");
  cmp->add_option("--window", cm.window, "Recorded in the report parameters");
  cmp->add_option("--idle-cap", cm.idle_cap, "Recorded in the report parameters");
  cmp->add_option("--epsilon", cm.epsilon, "Recorded in the report parameters");

  RenderArgs ra;
  auto* render = app.add_subcommand("render", "False-color PNG of a grid, optionally over a screenshot");
  render->add_option("--map", ra.map, "Grid to render")->required();
  render->add_option("--background", ra.background, "Screenshot (PNG)");
  render->add_option("--blur", ra.blur, "Gaussian sigma in pixels, 0 disables");
  render->add_option("--alpha", ra.alpha, "Overlay opacity in [0, 1]");
  render->add_flag("--keep-zero", ra.keep_zero, "Paint zero cells instead of leaving them transparent");
  render->add_option("--ramp", ra.ramp, "heat or gray");
  render->add_option("-o,--out", ra.output, "Output PNG")->required();

  PipelineArgs pa;
  auto* pipeline = app.add_subcommand("pipeline", "Entropy, heat maps, correction, renders and metrics");
  pipeline->add_option("screenshot", pa.screenshot, "Screenshot (PNG)")->required();
  pipeline->add_option("mouse", pa.mouse, "Mouse event CSV")->required();
  pipeline->add_option("gaze", pa.gaze, "Gaze event CSV");
  pipeline->add_option("-o,--out", pa.out_dir, "Output directory")->required();
  pipeline->add_option("-w,--window", pa.window, "Odd square window size >= 3");
  pipeline->add_option("-e,--epsilon", pa.epsilon, "Entropy below this many bits is set to 0");
  pipeline->add_option("--cell", pa.cell, "Cell size in pixels")->check(CLI::PositiveNumber);
  pipeline->add_option("--idle-cap", pa.idle_cap, "Longest interval credited to one sample (ms)")
      ->check(CLI::PositiveNumber);
  pipeline->add_flag("--header", pa.header, "Event files have a header line");
  pipeline->add_option("--blur", pa.blur, "Gaussian sigma for renders");
  pipeline->add_option("--alpha", pa.alpha, "Overlay opacity for renders");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParameter;
  }

  try {
    if (entropy->parsed()) return cmd_entropy(ea, out, err);
    if (heatmap->parsed()) return cmd_heatmap(ha, out, err);
    if (correct->parsed()) return cmd_correct(ca, out, err);
    if (cmp->parsed()) return cmd_compare(cm, out, err);
    if (render->parsed()) return cmd_render(ra, out, err);
    if (pipeline->parsed()) return cmd_pipeline(pa, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitParameter;
}

}  // namespace heatfix::cli
