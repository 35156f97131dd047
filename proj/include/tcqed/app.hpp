#pragma once

// Front-end services shared by the command line tool and the test suites:
// trajectory runs, parameter sweeps, figure presets, CSV I/O and the
// self-verification battery.

#include "tcqed/closedform.hpp"
#include "tcqed/model.hpp"

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tcqed {

inline constexpr std::string_view kToolVersion = "tcqed 0.1.0";

struct TrajectoryRecord {
  double t = 0.0;
  double a1 = 0.0;
  double a2 = 0.0;
  double a3_re = 0.0;
  double a3_im = 0.0;
  double a5 = 0.0;
  double a6 = 0.0;
  double negativity = 0.0;
  double bell = 0.0;
  std::optional<double> negativity_oracle;
  std::optional<double> bell_oracle;

  friend bool operator==(const TrajectoryRecord&, const TrajectoryRecord&) = default;
};

struct SweepAxis {
  std::string name;  // theta | big_omega | gamma | n
  std::vector<double> values;
};

struct RunConfig {
  ModelParams params;
  double t_max = 20.0;
  int steps = 2000;
  bool with_oracle = false;
  int n_max = 0;  // <= 0: n + 2
  std::optional<SweepAxis> sweep;

  // Presets only: panel label and the parameters chosen here rather than
  // given in the figure caption.
  std::string label;
  std::vector<std::string> reconstructed;

  // Throws InvalidArgument.
  void validate() const;
};

// Sets one sweepable parameter by name; n must be a non-negative integer.
void apply_parameter(ModelParams& p, std::string_view name, double value);

// steps + 1 uniform samples on [0, t_max]; oracle columns iff with_oracle.
std::vector<TrajectoryRecord> run_trajectory(const RunConfig& cfg);

// One config per sweep value (or cfg itself without a sweep).
std::vector<RunConfig> expand_sweep(const RunConfig& cfg);

// Runs every config concurrently; results keep the input order.
std::vector<std::vector<TrajectoryRecord>> run_all(std::span<const RunConfig> cfgs);

// Ids "fig1" ... "fig8"; throws UnknownFigure.
std::vector<RunConfig> figure_preset(std::string_view id);
// Caption-stated values for a figure, as "name=value" strings.
std::vector<std::string> figure_caption_params(std::string_view id);

// Accepts plain numbers and multiples of pi: "pi/4", "3pi/4", "-pi/8", "3*pi/4".
double parse_angle(std::string_view text);

// --- CSV ---------------------------------------------------------------------

std::string csv_header(bool with_oracle);
std::string csv_row(const TrajectoryRecord& r, bool with_oracle);
// "# "-prefixed metadata, one header line, then rows.
void write_csv(std::ostream& out, std::span<const std::string> metadata, std::span<const TrajectoryRecord> rows,
               bool with_oracle);
// Skips '#' lines; reads the header to decide whether oracle columns exist.
std::vector<TrajectoryRecord> read_csv(std::istream& in);

std::vector<std::string> describe_config(const RunConfig& cfg);

// --- self verification ---------------------------------------------------------

enum class Battery { Standard, Extended };

struct VerifyOptions {
  Battery battery = Battery::Standard;
  // Added to Delta in the closed-form path only (mutation probe).
  double delta_perturbation = 0.0;
  int samples = 201;
};

struct CheckResult {
  std::string name;
  double observed = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

VerifyReport verify(const VerifyOptions& options);
void print_report(std::ostream& out, const VerifyReport& report);

}  // namespace tcqed
