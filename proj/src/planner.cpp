#include "atomwalk/planner.hpp"

#include <cmath>

#include "atomwalk/errors.hpp"

namespace atomwalk {

namespace {

constexpr double kSearchHorizon = 10.0;  // s
constexpr int kMaxBisections = 200;

struct PairGeometry {
  double delta_v;
  double mass_i;
  double mass_j;
  double kappa;
  WavepacketSpec packet;

  double width_sum(double t) const { return packet_width(packet, mass_i, t) + packet_width(packet, mass_j, t); }
  double margin(double t) const { return delta_v * t - kappa * width_sum(t); }
};

// margin(t) is concave with margin(0) < 0, so it has at most one root once
// delta_v beats the asymptotic spreading rate.
std::optional<double> earliest_resolution(const PairGeometry& g) {
  const double sigma_p = g.packet.pi_width / std::sqrt(2.0);
  const double spreading_rate = g.kappa * sigma_p * (1.0 / g.mass_i + 1.0 / g.mass_j);
  if (!(g.delta_v > spreading_rate)) return std::nullopt;
  if (g.margin(kSearchHorizon) < 0.0) return std::nullopt;

  double lo = 0.0;
  double hi = kSearchHorizon;
  for (int it = 0; it < kMaxBisections && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (g.margin(mid) >= 0.0 ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace

void MixtureMember::validate() const {
  validate_species(species);
  if (!(c0_sq >= 0.0 && c0_sq <= 1.0 && c1_sq >= 0.0 && c1_sq <= 1.0) ||
      std::abs(c0_sq + c1_sq - 1.0) > 1e-12) {
    throw DomainError("populations of '" + species.name + "' must lie in [0, 1] and sum to 1");
  }
  if (!std::isfinite(p_c)) throw DomainError("p_c must be finite");
}

double member_speed(const MixtureMember& m, const PhysicalConstants& consts) {
  m.validate();
  return average_speed(m.species, m.c0_sq, m.c1_sq, m.p_c, consts);
}

std::vector<SpeedRow> speed_table(const Catalog& catalog, const PhysicalConstants& consts) {
  std::vector<SpeedRow> rows;
  rows.reserve(catalog.size());
  for (const auto& s : catalog) {
    rows.push_back({s.name, s.mass_u, s.wavelength_nm, average_speed(s, 1.0, 0.0, 0.0, consts)});
  }
  return rows;
}

double pairwise_gap(const MixtureMember& a, const MixtureMember& b, double t, const PhysicalConstants& consts) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("time must be finite and non-negative");
  return std::abs(member_speed(a, consts) - member_speed(b, consts)) * t;
}

double packet_width(const WavepacketSpec& spec, double mass_kg, double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("time must be finite and non-negative");
  if (!(mass_kg > 0.0)) throw DomainError("mass must be positive");
  if (!(spec.pi_width > 0.0)) throw DomainError("momentum width must be positive");
  const double sigma_p = spec.pi_width / std::sqrt(2.0);
  const double sigma_x0 = kHbar / (2.0 * sigma_p);
  return std::hypot(sigma_x0, sigma_p * t / mass_kg);
}

SeparationReport separation_report(std::span<const MixtureMember> mixture, double t, double kappa,
                                   double pi_width, const PhysicalConstants& consts) {
  if (mixture.size() < 2) throw DomainError("a separation report needs at least two mixture members");
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("time must be finite and non-negative");
  if (!(kappa > 0.0) || !std::isfinite(kappa)) throw DomainError("kappa must be positive");
  if (!(pi_width > 0.0) || !std::isfinite(pi_width)) throw DomainError("momentum width must be positive");

  std::vector<double> speeds;
  std::vector<double> masses;
  for (const auto& m : mixture) {
    speeds.push_back(member_speed(m, consts));
    masses.push_back(mass_to_si(m.species.mass_u, consts));
  }

  SeparationReport report{t, kappa, pi_width, {}};
  for (std::size_t i = 0; i < mixture.size(); ++i) {
    for (std::size_t j = i + 1; j < mixture.size(); ++j) {
      WavepacketSpec packet;
      packet.pi_width = pi_width;
      const PairGeometry g{std::abs(speeds[i] - speeds[j]), masses[i], masses[j], kappa, packet};
      PairReport pr;
      pr.name_i = mixture[i].species.name;
      pr.name_j = mixture[j].species.name;
      pr.delta_v = g.delta_v;
      pr.gap = g.delta_v * t;
      pr.width_i = packet_width(packet, masses[i], t);
      pr.width_j = packet_width(packet, masses[j], t);
      pr.resolvable = pr.gap >= kappa * (pr.width_i + pr.width_j);
      pr.t_required = earliest_resolution(g);
      report.pairs.push_back(std::move(pr));
    }
  }
  return report;
}

}  // namespace atomwalk
