#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>

#include "heatfix/cli.hpp"
#include "heatfix/entropy_map.hpp"
#include "heatfix/grid_file.hpp"
#include "heatfix/image.hpp"
#include "support/synthetic.hpp"

using namespace heatfix;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::uint8_t> bytes_of(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_text(const fs::path& p, const std::string& s) { std::ofstream(p) << s; }

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("heatfix_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string grid(const std::string& name, const Map& m, std::size_t cell = 1) const {
    save_grid(path(name), {m, cell});
    return path(name);
  }

  fs::path dir_;
};

const fs::path kData = HEATFIX_TEST_DATA_DIR;

}  // namespace

TEST_F(CliTest, EntropyOfConstantImageIsZero) {
  write_png(path("flat.png"), RasterImage(16, 16, {90, 90, 90}));
  const auto r = run({"entropy", path("flat.png"), "--out", path("e.grid"), "--out", path("e.png")});
  ASSERT_EQ(r.code, 0) << r.err;
  const GridFile g = load_grid(path("e.grid"));
  EXPECT_EQ(g.values.width(), 16u);
  for (double v : g.values.values()) EXPECT_EQ(v, 0.0);
  EXPECT_TRUE(fs::exists(path("e.png")));
}

TEST_F(CliTest, EntropyErrors) {
  write_png(path("flat.png"), RasterImage(16, 16));
  auto r = run({"entropy", path("flat.png"), "--window", "4", "--out", path("e.grid")});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("window must be odd"), std::string::npos);
  EXPECT_EQ(run({"entropy", path("flat.png"), "--window", "33", "--out", path("e.grid")}).code, 3);

  write_text(path("photo.jpg"), "\xFF\xD8\xFF\xE0 not a png");
  EXPECT_EQ(run({"entropy", path("photo.jpg"), "--out", path("e.grid")}).code, 2);
  EXPECT_EQ(run({"entropy", path("missing.png"), "--out", path("e.grid")}).code, 2);
  EXPECT_EQ(run({"entropy", "--out", path("e.grid")}).code, 3);
}

TEST_F(CliTest, HeatmapFromEvents) {
  write_text(path("ev.csv"), "0,5,5,mouse\n100,5,5,mouse\n250,7,7,mouse\n");
  const auto r = run({"heatmap", path("ev.csv"), "--width", "10", "--height", "10", "--out", path("h.grid")});
  ASSERT_EQ(r.code, 0) << r.err;
  const GridFile g = load_grid(path("h.grid"));
  EXPECT_EQ(g.values(5, 5), 250.0);
  EXPECT_EQ(total(g.values), 250.0);
}

TEST_F(CliTest, HeatmapEmptyWarnsAndDecreasingFails) {
  write_text(path("empty.csv"), "");
  auto r = run({"heatmap", path("empty.csv"), "--width", "4", "--height", "3", "--cell", "2", "--out",
                path("h.grid")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("warning"), std::string::npos);
  const GridFile g = load_grid(path("h.grid"));
  EXPECT_EQ(g.values.width(), 2u);
  EXPECT_EQ(g.values.height(), 2u);
  EXPECT_EQ(total(g.values), 0.0);

  write_text(path("bad.csv"), "100,1,1\n50,1,1\n");
  r = run({"heatmap", path("bad.csv"), "--width", "4", "--height", "4", "--out", path("h.grid")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);

  write_text(path("junk.csv"), "0,1,1\nx,1,1\n");
  r = run({"heatmap", path("junk.csv"), "--width", "4", "--height", "4", "--out", path("h.grid")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
}

TEST_F(CliTest, CorrectZeroAndUnitEntropy) {
  Map heat(4, 3);
  heat.values() = {0, 10, 20, 0, 5, 0, 0, 7, 1, 1, 1, 1};
  const std::string h = grid("h.grid", heat);

  auto r = run({"correct", "--heatmap", h, "--entropy", grid("zero.grid", Map(4, 3)), "--out", path("c.grid")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(total(load_grid(path("c.grid")).values), 0.0);

  r = run({"correct", "--heatmap", h, "--entropy", grid("unit.grid", Map(4, 3, max_entropy_bits(3))), "--out",
           path("c.grid")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(load_grid(path("c.grid")).values, heat);
}

TEST_F(CliTest, CorrectDownsamplesToHeatmapCells) {
  Map heat(2, 1, 100.0);
  Map entropy(3, 2);
  entropy(0, 0) = entropy(1, 1) = max_entropy_bits(5);
  const auto r = run({"correct", "--heatmap", grid("h.grid", heat, 2), "--entropy", grid("e.grid", entropy),
                      "--window", "5", "--out", path("c.grid")});
  ASSERT_EQ(r.code, 0) << r.err;
  const GridFile c = load_grid(path("c.grid"));
  EXPECT_EQ(c.cell_size, 2u);
  EXPECT_DOUBLE_EQ(c.values(0, 0), 50.0);
  EXPECT_DOUBLE_EQ(c.values(1, 0), 0.0);
}

TEST_F(CliTest, CorrectMismatch) {
  const auto r = run({"correct", "--heatmap", grid("h.grid", Map(3, 2, 1.0)), "--entropy",
                      grid("e.grid", Map(2, 3)), "--out", path("c.grid")});
  EXPECT_EQ(r.code, 4);
  EXPECT_NE(r.err.find("3x2"), std::string::npos);
  EXPECT_NE(r.err.find("2x3"), std::string::npos);
  EXPECT_FALSE(fs::exists(path("c.grid")));
}

TEST_F(CliTest, CompareReports) {
  Map mt(420, 360), et(420, 360);
  mt(406, 351) = 1.0;
  et(323, 264) = 1.0;
  const auto r = run({"compare", grid("mt.grid", mt), grid("et.grid", et), "--json", path("m.json"),
                      "--name-a", "MT", "--name-b", "ET"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("120.2"), std::string::npos);
  std::ifstream in(path("m.json"));
  const auto j = nlohmann::json::parse(in);
  EXPECT_NEAR(j["distance"].get<double>(), 120.2, 0.05);
  EXPECT_EQ(j["cog_a"]["x"].get<double>(), 406.0);
  EXPECT_EQ(j["cog_b"]["y"].get<double>(), 264.0);
  EXPECT_EQ(j["distance"].get<double>(), std::hypot(406.0 - 323.0, 351.0 - 264.0));
  EXPECT_EQ(j["params"]["cell_size"].get<int>(), 1);
  EXPECT_TRUE(j["params"]["window"].is_null());
  EXPECT_TRUE(j.contains("correlation"));
}

TEST_F(CliTest, CompareSelfAndErrors) {
  Map a(5, 5);
  for (std::size_t i = 0; i < a.size(); ++i) a.values()[i] = static_cast<double>(i % 7);
  const std::string ga = grid("a.grid", a);
  auto r = run({"compare", ga, ga, "--json", path("self.json")});
  ASSERT_EQ(r.code, 0);
  std::ifstream in(path("self.json"));
  const auto j = nlohmann::json::parse(in);
  EXPECT_NEAR(j["correlation"].get<double>(), 1.0, 1e-12);
  EXPECT_EQ(j["distance"].get<double>(), 0.0);
  EXPECT_NE(r.out.find("1.0000"), std::string::npos);

  EXPECT_EQ(run({"compare", grid("z.grid", Map(5, 5)), ga}).code, 5);
  EXPECT_EQ(run({"compare", grid("b.grid", Map(5, 4, 1.0)), ga}).code, 4);
  EXPECT_EQ(run({"compare", grid("c.grid", a, 2), ga}).code, 4);
  write_text(path("broken.grid"), "gridmap v1 2 2 1\n1 2\n");
  EXPECT_EQ(run({"compare", path("broken.grid"), ga}).code, 2);
}

TEST_F(CliTest, RenderAlphaZeroReencodesBackground) {
  const std::string bg = (kData / "render_background.png").string();
  const auto r = run({"render", "--map", (kData / "render_map.grid").string(), "--background", bg, "--alpha", "0",
                      "--out", path("r.png")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(bytes_of(path("r.png")), encode_png(read_png(bg)));
}

TEST_F(CliTest, RenderZeroMapLeavesBackground) {
  const std::string bg = (kData / "render_background.png").string();
  const auto r = run({"render", "--map", grid("z.grid", Map(40, 30), 4), "--background", bg, "--alpha", "1",
                      "--out", path("r.png")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(read_png(path("r.png")), read_png(bg));
}

TEST_F(CliTest, RenderMatchesGolden) {
  const auto r = run({"render", "--map", (kData / "render_map.grid").string(), "--background",
                      (kData / "render_background.png").string(), "--out", path("r.png")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(bytes_of(path("r.png")), bytes_of(kData / "render_golden.png"));
}

TEST_F(CliTest, RenderErrors) {
  const std::string bg = (kData / "render_background.png").string();
  EXPECT_EQ(run({"render", "--map", grid("m.grid", Map(10, 10, 1.0)), "--background", bg, "--out",
                 path("r.png")}).code,
            4);
  EXPECT_EQ(run({"render", "--map", grid("m2.grid", Map(40, 30, 1.0), 4), "--background", bg, "--alpha", "2",
                 "--out", path("r.png")}).code,
            3);
}

TEST_F(CliTest, RenderWithoutBackgroundIsHeatOnly) {
  Map m(6, 5);
  m(2, 2) = 3;
  const auto r = run({"render", "--map", grid("m.grid", m, 2), "--blur", "0", "--out", path("r.png")});
  ASSERT_EQ(r.code, 0) << r.err;
  const RasterImage img = read_png(path("r.png"));  // alpha composited onto black
  EXPECT_EQ(img.width(), 12u);
  EXPECT_EQ(img.at(4, 4), (Rgb8{255, 0, 0}));
  EXPECT_EQ(img.at(0, 0), (Rgb8{0, 0, 0}));
}

class PipelineTest : public CliTest {
 protected:
  void write_session() {
    synthetic::Layout layout;
    layout.width = 400;
    layout.height = 300;
    layout.text_left = 20;
    layout.text_right = 240;
    layout.text_bottom = 280;
    layout.margin_left = 260;
    const auto s = synthetic::make_session(77, 0.3, layout);
    write_png(path("page.png"), s.page);
    auto dump = [](const std::string& p, const std::vector<TrackingEvent>& ev, const char* src) {
      std::ofstream f(p);
      f << "timestamp_ms,x,y,source\n";
      for (const auto& e : ev) f << e.timestamp_ms << ',' << e.x << ',' << e.y << ',' << src << '\n';
    };
    dump(path("mouse.csv"), s.mouse, "mouse");
    dump(path("gaze.csv"), s.gaze, "gaze");
  }
};

TEST_F(PipelineTest, FullRunWritesEverything) {
  write_session();
  const auto r = run({"pipeline", path("page.png"), path("mouse.csv"), path("gaze.csv"), "--header", "--cell",
                      "10", "--out", path("out")});
  ASSERT_EQ(r.code, 0) << r.err;
  for (const char* f : {"entropy.grid", "entropy.png", "mouse_raw.grid", "mouse_corrected.grid", "mouse_raw.png",
                        "mouse_corrected.png", "gaze_raw.grid", "gaze_corrected.grid", "metrics_mt_et.json",
                        "metrics_enmt_et.json", "metrics_enet_et.json", "summary.txt"})
    EXPECT_TRUE(fs::exists(path("out/") + f)) << f;
  auto load = [&](const char* f) {
    std::ifstream in(path("out/") + f);
    return nlohmann::json::parse(in);
  };
  const auto raw = load("metrics_mt_et.json");
  const auto corrected = load("metrics_enmt_et.json");
  EXPECT_GT(corrected["correlation"].get<double>(), raw["correlation"].get<double>());
  EXPECT_LT(corrected["distance"].get<double>(), raw["distance"].get<double>());
  EXPECT_EQ(raw["params"]["window"].get<int>(), 3);
  EXPECT_EQ(raw["params"]["cell_size"].get<int>(), 10);
  EXPECT_NE(r.out.find("EN×MT"), std::string::npos);
}

TEST_F(PipelineTest, Deterministic) {
  write_session();
  for (const char* d : {"a", "b"})
    ASSERT_EQ(run({"pipeline", path("page.png"), path("mouse.csv"), path("gaze.csv"), "--header", "--cell", "10",
                   "--out", path(d)}).code,
              0);
  for (const auto& entry : fs::directory_iterator(path("a")))
    EXPECT_EQ(bytes_of(entry.path()), bytes_of(path("b") / entry.path().filename())) << entry.path();
}

TEST_F(PipelineTest, MouseOnlyHasNoMetrics) {
  write_session();
  const auto r = run({"pipeline", path("page.png"), path("mouse.csv"), "--header", "--out", path("out")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(fs::exists(path("out/mouse_corrected.grid")));
  EXPECT_TRUE(fs::exists(path("out/entropy.png")));
  EXPECT_FALSE(fs::exists(path("out/metrics_mt_et.json")));
  EXPECT_FALSE(fs::exists(path("out/gaze_raw.grid")));
}

TEST_F(PipelineTest, MissingScreenshotWritesNothing) {
  write_session();
  const auto r = run({"pipeline", path("nope.png"), path("mouse.csv"), "--header", "--out", path("out")});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(fs::exists(path("out")));
}

TEST_F(PipelineTest, BadGazeFileWritesNothing) {
  write_session();
  write_text(path("gaze_bad.csv"), "0,1,1\n-4,2,2\n");
  const auto r = run({"pipeline", path("page.png"), path("mouse.csv"), path("gaze_bad.csv"), "--header", "--out",
                      path("out")});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(fs::exists(path("out")));
}
