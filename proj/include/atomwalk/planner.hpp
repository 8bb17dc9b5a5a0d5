#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "atomwalk/catalog.hpp"
#include "atomwalk/constants.hpp"
#include "atomwalk/dynamics.hpp"

namespace atomwalk {

/// One component of a mixed beam.
struct MixtureMember {
  Species species;
  double c0_sq = 1.0;
  double c1_sq = 0.0;
  double p_c = 0.0;  // kg m/s

  void validate() const;
};

struct SpeedRow {
  std::string name;
  double mass_u;
  double wavelength_nm;
  double vbar;  // m/s
};

struct PairReport {
  std::string name_i;
  std::string name_j;
  double delta_v;  // |vbar_i - vbar_j|, m/s
  double gap;      // m
  double width_i;  // m
  double width_j;  // m
  bool resolvable;
  std::optional<double> t_required;  // s
};

struct SeparationReport {
  double t;
  double kappa;
  double pi_width;
  std::vector<PairReport> pairs;
};

/// Period-averaged speed of a mixture member.
double member_speed(const MixtureMember& m, const PhysicalConstants& consts);

/// Ground-state, at-rest speeds h / (2 M lambda) in catalog order.
std::vector<SpeedRow> speed_table(const Catalog& catalog, const PhysicalConstants& consts);

/// |vbar_a - vbar_b| t, secular drift only.
double pairwise_gap(const MixtureMember& a, const MixtureMember& b, double t, const PhysicalConstants& consts);

/// Minimum-uncertainty ballistic spreading:
/// sigma_x(t) = sqrt(sigma_x0^2 + (sigma_p t / M)^2), sigma_p = Pi / sqrt 2, sigma_x0 = hbar / (2 sigma_p).
double packet_width(const WavepacketSpec& spec, double mass_kg, double t);

/// Every unordered pair of the mixture, with resolvability gap >= kappa (w_i + w_j)
/// and the earliest time that criterion is met (searched on [0, 10 s]).
SeparationReport separation_report(std::span<const MixtureMember> mixture, double t, double kappa,
                                   double pi_width, const PhysicalConstants& consts);

}  // namespace atomwalk
