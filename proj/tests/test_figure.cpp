#include <gtest/gtest.h>

#include <cmath>

#include "lcroots/errors.hpp"
#include "lcroots/figure.hpp"
#include "svg_probe.hpp"
#include "test_support.hpp"

using namespace lcroots;

namespace {

Complex marker_px(const svg_probe::Document& doc, const std::string& id) {
  const auto* e = doc.by_id("marker-" + id);
  if (!e) {
    ADD_FAILURE() << "no marker " << id;
    return {};
  }
  return {svg_probe::num(*e, "cx"), svg_probe::num(*e, "cy")};
}

}  // namespace

TEST(Figure, HandInstanceMarkers) {
  const Figure fig = render_figure({{-4.0, -2.0}, {2.0, 4.0}}, 800);
  const auto doc = svg_probe::parse(fig.svg);
  ASSERT_TRUE(doc.well_formed) << doc.error;
  const PlaneViewport& vp = fig.viewport;
  EXPECT_COMPLEX_NEAR(marker_px(doc, "r1"), vp.to_pixel({1.0, 1.0}), 1e-3);
  EXPECT_COMPLEX_NEAR(marker_px(doc, "r2"), vp.to_pixel({3.0, 1.0}), 1e-3);
  EXPECT_COMPLEX_NEAR(marker_px(doc, "center"), vp.to_pixel({2.0, -1.0}), 1e-3);
  EXPECT_COMPLEX_NEAR(marker_px(doc, "origin"), vp.to_pixel({0.0, 0.0}), 1e-3);
}

TEST(Figure, EqualAxisScaleAndPaddedViewport) {
  const Figure fig = render_figure({{-1.0, -7.0}, {-18.0, 1.0}}, 800);
  const auto doc = svg_probe::parse(fig.svg);
  ASSERT_TRUE(doc.well_formed) << doc.error;
  const auto* root = doc.by_name("svg");
  ASSERT_NE(root, nullptr);
  const double w = svg_probe::num(*root, "width"), h = svg_probe::num(*root, "height");
  EXPECT_NEAR(w, 800.0, 1e-9);
  const auto& vp = fig.viewport;
  EXPECT_NEAR(w / (vp.xmax - vp.xmin), h / (vp.ymax - vp.ymin), 1e-3);

  // The circle spans x in [c - r, c + r]; with 10% padding the plane box is
  // 1.2 times the raw box in each direction.
  const auto* plane = doc.by_name("lc:plane");
  ASSERT_NE(plane, nullptr);
  EXPECT_DOUBLE_EQ(svg_probe::num(*plane, "scale"), vp.scale);
  EXPECT_LE(vp.xmin, -2.0);
  EXPECT_GE(vp.ymax, 4.0);
}

TEST(Figure, RootsOnDrawnLineAndCircle) {
  const Figure fig = render_figure({{-1.0, -7.0}, {-18.0, 1.0}}, 800);
  const auto doc = svg_probe::parse(fig.svg);
  const auto* circle = doc.by_id("circle-C");
  const auto* line = doc.by_id("line-L1");
  ASSERT_NE(circle, nullptr);
  ASSERT_NE(line, nullptr);
  const Complex center{svg_probe::num(*circle, "cx"), svg_probe::num(*circle, "cy")};
  const double r = svg_probe::num(*circle, "r");
  const Complex a{svg_probe::num(*line, "x1"), svg_probe::num(*line, "y1")};
  const Complex b{svg_probe::num(*line, "x2"), svg_probe::num(*line, "y2")};
  for (const char* id : {"r1", "r2"}) {
    const Complex m = marker_px(doc, id);
    EXPECT_LE(std::abs(std::abs(m - center) - r), 1.0) << id;
    const Complex dir = (b - a) / std::abs(b - a);
    EXPECT_LE(std::abs((std::conj(dir) * (m - a)).imag()), 1.0) << id;
    const double t = (std::conj(dir) * (m - a)).real();
    EXPECT_GT(t, 0.0);
    EXPECT_LT(t, std::abs(b - a));
  }
}

TEST(Figure, DeterministicText) {
  EXPECT_EQ(render_figure({{-1.0, -7.0}, {-18.0, 1.0}}).svg,
            render_figure({{-1.0, -7.0}, {-18.0, 1.0}}).svg);
}

TEST(Figure, DegenerateInputRejected) {
  try {
    render_figure({0.0, 1.0});
    FAIL();
  } catch (const LcError& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateInput);
  }
}
