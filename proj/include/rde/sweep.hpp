#pragma once

// Bifurcation sweeps over a, CSV and SVG emission.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string_view>
#include <vector>

#include "rde/params.hpp"

namespace rde {

struct SweepConfig {
  Rational a_min{0};
  Rational a_max{0};
  Rational step{1, 200};
  Rational b{0};
  SeedPair<Rational> seed{Rational(0), Rational(0)};
  std::int64_t iters = 400;
  std::int64_t keep_from = 350;
  unsigned threads = 0;  // 0 = hardware concurrency
};

void validate_config(const SweepConfig& cfg);

// floor((a_max - a_min) / step) + 1, computed exactly.
std::int64_t grid_size(const SweepConfig& cfg);

// a_min + k step rounded once to double.
double grid_point(const SweepConfig& cfg, std::int64_t k);

enum class SampleFlag { Ok, Singular, NonFinite };

std::string_view to_string(SampleFlag flag) noexcept;

struct BifurcationSample {
  double a = 0.0;
  std::int64_t n = 0;
  std::optional<double> x;  // present iff flag == Ok
  SampleFlag flag = SampleFlag::Ok;

  friend bool operator==(const BifurcationSample&, const BifurcationSample&) = default;
};

// Float iteration per grid point; samples for keep_from <= n <= iters. A column
// whose orbit fails at step m ends with one flagged row at n = m.
std::vector<BifurcationSample> sweep(const SweepConfig& cfg);

void emit_csv(std::ostream& out, const std::vector<BifurcationSample>& samples);

struct PlotOptions {
  int width = 800;
  int height = 600;
  double marker_radius = 0.6;
  std::optional<double> y_min;  // clip range; markers outside are dropped
  std::optional<double> y_max;
  std::string_view title = "Bifurcation diagram";
};

// SVG 1.1 scatter of (a, x) over the Ok samples.
void emit_svg(std::ostream& out, const std::vector<BifurcationSample>& samples, const PlotOptions& opts = {});

}  // namespace rde
