#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "atomwalk/constants.hpp"

namespace atomwalk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitFile = 3;
inline constexpr int kExitDomain = 4;

enum class Command { speeds, simulate, bands, separate, validate };

/// Flag values for one invocation. Masses in u, wavelengths in nm, times in s,
/// frequencies in rad/s, momenta in units of hbar k of the species concerned.
struct RunConfig {
  Command command = Command::speeds;
  std::optional<std::string> catalog_path;
  ConstantSet constant_set = ConstantSet::paper;
  std::optional<std::string> output_path;

  std::vector<std::string> species;  // selection for simulate / bands / separate
  std::vector<std::string> pair;     // separate --pair A,B
  double rabi = 1e6;
  double detuning = 0.0;
  double pi_hk = 0.05;
  double pc_hk = 0.0;
  double c0_sq = 1.0;
  double x0 = 0.0;
  bool reverse = false;

  double t_max = 30e-6;
  std::optional<std::size_t> steps;  // default: 200 per Rabi period
  std::size_t grid_points = 4096;

  double p_span_hk = 2.0;  // bands: p in [-span, span] hbar k
  std::size_t band_points = 401;

  double t = 42e-6;  // separate
  double kappa = 2.0;
};

/// Executes one command, writing the document to config.output_path or `out`.
/// Diagnostics go to `err`. Returns one of the kExit* codes.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses flags (without the program name) and calls run().
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// printf("%.9g").
std::string format_number(double v);

}  // namespace atomwalk::cli
