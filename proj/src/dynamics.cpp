#include "atomwalk/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "atomwalk/errors.hpp"
#include "atomwalk/summation.hpp"

namespace atomwalk {

namespace {

constexpr double kMaxTailFraction = 1e-6;

void require_mass(double mass_kg) {
  if (!(mass_kg > 0.0) || !std::isfinite(mass_kg)) throw DomainError("mass must be positive and finite");
}

void require_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("time must be finite and non-negative");
}

bool close_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

struct GridMoments {
  double norm0;
  double norm1;
  double mean_p;
};

GridMoments moments(std::span<const BlockAmplitudes> blocks, double dp, double photon_p) {
  CompensatedSum n0, n1, p;
  for (const auto& b : blocks) {
    const double a0 = std::norm(b.phi0);
    const double a1 = std::norm(b.phi1);
    n0.add(a0);
    n1.add(a1);
    p.add(a0 * b.p + a1 * (b.p + photon_p));
  }
  return {n0.value() * dp, n1.value() * dp, p.value() * dp};
}

}  // namespace

// ---- LightField -------------------------------------------------------------

LightField LightField::make(double wavelength_m, double rabi, double detuning, Direction dir) {
  LightField f;
  f.wavelength = wavelength_m;
  f.k = static_cast<double>(static_cast<int>(dir)) * wavenumber(wavelength_m);
  f.rabi = rabi;
  f.detuning = detuning;
  f.validate();
  return f;
}

LightField LightField::from_dipole(double wavelength_m, double dipole_moment, double field_amplitude,
                                   double detuning, Direction dir) {
  if (!std::isfinite(dipole_moment) || !(field_amplitude >= 0.0) || !std::isfinite(field_amplitude)) {
    throw DomainError("dipole moment and field amplitude must be finite, field amplitude >= 0");
  }
  LightField f = make(wavelength_m, std::abs(dipole_moment) * field_amplitude / kHbar, detuning, dir);
  f.dipole_moment = dipole_moment;
  f.field_amplitude = field_amplitude;
  return f;
}

LightField LightField::for_species(const Species& s, double rabi, double detuning, Direction dir) {
  return make(s.wavelength_nm * kNanometre, rabi, detuning, dir);
}

LightField LightField::reversed() const {
  LightField f = *this;
  f.k = -k;
  return f;
}

void LightField::validate() const {
  if (!(wavelength > 0.0) || !std::isfinite(wavelength)) throw DomainError("wavelength must be positive");
  if (!close_rel(std::abs(k), kTwoPi / wavelength, 1e-12)) throw DomainError("|k| must equal 2 pi / wavelength");
  if (!(rabi >= 0.0) || !std::isfinite(rabi)) throw DomainError("Rabi frequency must be finite and >= 0");
  if (!std::isfinite(detuning)) throw DomainError("detuning must be finite");
  if (dipole_moment && field_amplitude &&
      !close_rel(rabi, std::abs(*dipole_moment) * *field_amplitude / kHbar, 1e-12)) {
    throw DomainError("Rabi frequency inconsistent with |mu| E0 / hbar");
  }
}

// ---- WavepacketSpec / MomentumGrid ------------------------------------------

WavepacketSpec WavepacketSpec::with_populations(double p_c, double pi_width, double c0_sq, double x0) {
  if (!(c0_sq >= 0.0 && c0_sq <= 1.0)) throw DomainError("ground population must lie in [0, 1]");
  WavepacketSpec s;
  s.p_c = p_c;
  s.pi_width = pi_width;
  s.c0 = std::sqrt(c0_sq);
  s.c1 = std::sqrt(1.0 - c0_sq);
  s.x0 = x0;
  s.validate();
  return s;
}

void WavepacketSpec::validate() const {
  if (!std::isfinite(p_c) || !std::isfinite(x0)) throw DomainError("p_c and x0 must be finite");
  if (!(pi_width > 0.0) || !std::isfinite(pi_width)) throw DomainError("momentum width must be positive");
  if (std::abs(std::norm(c0) + std::norm(c1) - 1.0) > 1e-12) {
    throw DomainError("internal amplitudes must satisfy |c0|^2 + |c1|^2 = 1");
  }
}

MomentumGrid MomentumGrid::centered(double center, double half_width, std::size_t n_points) {
  MomentumGrid g{center - half_width, center + half_width, n_points};
  g.validate();
  return g;
}

MomentumGrid MomentumGrid::default_for(const WavepacketSpec& spec) {
  return centered(spec.p_c, 6.0 * spec.pi_width, 4096);
}

void MomentumGrid::validate() const {
  if (n_points < 2) throw DomainError("momentum grid needs at least 2 points");
  if (!std::isfinite(p_min) || !std::isfinite(p_max) || !(p_max > p_min)) {
    throw DomainError("momentum grid requires p_max > p_min");
  }
}

// ---- spectrum ---------------------------------------------------------------

double kinetic_frequency(double p, double mass_kg) {
  require_mass(mass_kg);
  return p * p / (2.0 * mass_kg * kHbar);
}

double shift_delta(double p, const LightField& field, double mass_kg) {
  require_mass(mass_kg);
  return field.detuning + p * field.k / mass_kg + kHbar * field.k * field.k / (2.0 * mass_kg);
}

double effective_rabi(double delta, double rabi) {
  if (!(rabi >= 0.0)) throw DomainError("Rabi frequency must be >= 0");
  return std::hypot(delta, rabi);
}

DressedFrequencies dressed_frequencies(double p, const LightField& field, double mass_kg) {
  const double sigma = effective_rabi(shift_delta(p, field, mass_kg), field.rabi);
  const double center = 0.5 * (field.detuning + kinetic_frequency(p + field.photon_momentum(), mass_kg) +
                               kinetic_frequency(p, mass_kg));
  return {center - 0.5 * sigma, center + 0.5 * sigma};
}

std::vector<BandPoint> band_structure(const MomentumGrid& grid, const LightField& field, double mass_kg) {
  grid.validate();
  field.validate();
  std::vector<BandPoint> bands;
  bands.reserve(grid.n_points);
  for (std::size_t i = 0; i < grid.n_points; ++i) {
    const double p = grid.at(i);
    const auto w = dressed_frequencies(p, field, mass_kg);
    bands.push_back({p, w.w0, w.w1, kinetic_frequency(p, mass_kg),
                     field.detuning + kinetic_frequency(p + field.photon_momentum(), mass_kg)});
  }
  return bands;
}

// ---- block evolution --------------------------------------------------------

BlockCoefficients block_coefficients(const BlockAmplitudes& init, double delta, double sigma, double rabi) {
  if (!(sigma > 0.0)) throw DegenerateBlockError("effective Rabi frequency is zero (Omega = delta = 0)");
  const double inv = 1.0 / (2.0 * sigma);
  return {
      inv * ((sigma + delta) * init.phi0 + rabi * init.phi1),
      inv * ((sigma - delta) * init.phi0 - rabi * init.phi1),
      inv * ((sigma - delta) * init.phi1 + rabi * init.phi0),
      inv * ((sigma + delta) * init.phi1 - rabi * init.phi0),
  };
}

DressedBlock dress_block(const BlockAmplitudes& init, const LightField& field, double mass_kg) {
  DressedBlock d;
  d.initial = init;
  d.delta = shift_delta(init.p, field, mass_kg);
  d.sigma = effective_rabi(d.delta, field.rabi);
  const auto w = dressed_frequencies(init.p, field, mass_kg);
  d.w0 = w.w0;
  d.w1 = w.w1;
  d.degenerate = !(d.sigma > 0.0);
  if (!d.degenerate) d.coeffs = block_coefficients(init, d.delta, d.sigma, field.rabi);
  return d;
}

BlockAmplitudes DressedBlock::at(double t) const {
  if (degenerate) {
    // Equal diagonal entries and no coupling: common free phase.
    const Complex phase = std::polar(1.0, -w0 * t);
    return {initial.p, initial.phi0 * phase, initial.phi1 * phase};
  }
  // (A+ e^{i Sigma t/2} + A- e^{-i Sigma t/2}) e^{-i (w0 + w1) t / 2}
  const Complex lower = std::polar(1.0, -w0 * t);
  const Complex upper = std::polar(1.0, -w1 * t);
  return {initial.p, coeffs.a_plus * lower + coeffs.a_minus * upper,
          coeffs.b_plus * lower + coeffs.b_minus * upper};
}

BlockAmplitudes evolve_block_analytic(const BlockAmplitudes& init, const LightField& field,
                                      double mass_kg, double t) {
  require_time(t);
  if (t == 0.0) return init;
  return dress_block(init, field, mass_kg).at(t);
}

// ---- wavepackets ------------------------------------------------------------

QuantumState init_gaussian(const WavepacketSpec& spec, const MomentumGrid& grid, const LightField& field,
                           double mass_kg) {
  spec.validate();
  grid.validate();
  field.validate();
  require_mass(mass_kg);

  // Fraction of exp(-(p - p_c)^2 / Pi^2) lying outside the grid.
  const double lo = (grid.p_min - spec.p_c) / spec.pi_width;
  const double hi = (grid.p_max - spec.p_c) / spec.pi_width;
  const double tail = 0.5 * (std::erfc(hi) + std::erfc(-lo));
  if (tail > kMaxTailFraction) {
    throw CoverageError("momentum grid truncates " + std::to_string(tail) +
                        " of the initial norm (limit 1e-6); widen it to at least p_c +- 5 Pi");
  }

  QuantumState state{grid, {}, mass_kg, field, 0.0};
  state.blocks.reserve(grid.n_points);
  const double prefactor = 1.0 / (std::pow(kPi, 0.25) * std::sqrt(spec.pi_width));
  for (std::size_t i = 0; i < grid.n_points; ++i) {
    const double p = grid.at(i);
    const double x = (p - spec.p_c) / spec.pi_width;
    const double g = prefactor * std::exp(-0.5 * x * x);
    state.blocks.push_back({p, spec.c0 * g, spec.c1 * g});
  }

  const double norm = total_norm(state);
  if (!(norm > 0.0)) throw CoverageError("momentum grid too coarse to resolve the packet");
  const double scale = 1.0 / std::sqrt(norm);
  for (auto& b : state.blocks) {
    b.phi0 *= scale;
    b.phi1 *= scale;
  }
  return state;
}

QuantumState evolve(const QuantumState& state, double t) {
  require_time(t - state.time);
  QuantumState out = state;
  out.time = t;
  const double dt = t - state.time;
  for (auto& b : out.blocks) b = evolve_block_analytic(b, state.field, state.mass_kg, dt);
  return out;
}

double total_norm(const QuantumState& state) {
  const auto m = moments(state.blocks, state.grid.spacing(), state.field.photon_momentum());
  return m.norm0 + m.norm1;
}

double excited_population(const QuantumState& state) {
  return moments(state.blocks, state.grid.spacing(), state.field.photon_momentum()).norm1;
}

double expectation_momentum(const QuantumState& state) {
  return moments(state.blocks, state.grid.spacing(), state.field.photon_momentum()).mean_p;
}

std::vector<double> uniform_times(double t_max, std::size_t steps) {
  require_time(t_max);
  if (steps == 0) throw DomainError("need at least one time step");
  std::vector<double> times(steps + 1);
  for (std::size_t i = 0; i <= steps; ++i) {
    times[i] = t_max * static_cast<double>(i) / static_cast<double>(steps);
  }
  return times;
}

Trajectory simulate(const WavepacketSpec& spec, const MomentumGrid& grid, const LightField& field,
                    double mass_kg, std::span<const double> times) {
  if (times.empty() || times.front() != 0.0) throw DomainError("time samples must start at t = 0");
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (!(times[i] >= times[i - 1]) || !std::isfinite(times[i])) {
      throw DomainError("time samples must be finite and non-decreasing");
    }
  }

  const QuantumState initial = init_gaussian(spec, grid, field, mass_kg);
  std::vector<DressedBlock> dressed;
  dressed.reserve(initial.blocks.size());
  for (const auto& b : initial.blocks) dressed.push_back(dress_block(b, field, mass_kg));

  const double dp = grid.spacing();
  const double photon_p = field.photon_momentum();

  Trajectory traj;
  traj.times.assign(times.begin(), times.end());
  const std::size_t n = times.size();
  traj.mean_p.resize(n);
  traj.mean_v.resize(n);
  traj.mean_x.resize(n);
  traj.norm.resize(n);
  traj.pop_excited.resize(n);

  std::vector<BlockAmplitudes> current(dressed.size());
  for (std::size_t i = 0; i < n; ++i) {
    const double t = times[i];
    for (std::size_t j = 0; j < dressed.size(); ++j) {
      current[j] = t == 0.0 ? dressed[j].initial : dressed[j].at(t);
    }
    const auto m = moments(current, dp, photon_p);
    traj.mean_p[i] = m.mean_p;
    traj.mean_v[i] = m.mean_p / mass_kg;
    traj.norm[i] = m.norm0 + m.norm1;
    traj.pop_excited[i] = m.norm1;
    traj.mean_x[i] = i == 0 ? spec.x0
                            : traj.mean_x[i - 1] +
                                  0.5 * (traj.mean_v[i - 1] + traj.mean_v[i]) * (t - times[i - 1]);
  }
  return traj;
}

// ---- strong-coupling closed forms -------------------------------------------

double closed_form_displacement(double t, const WavepacketSpec& spec, const LightField& field,
                                double mass_kg) {
  require_time(t);
  require_mass(mass_kg);
  if (!(field.rabi > 0.0)) throw DomainError("closed-form displacement needs Omega > 0; use free flight");
  const double omega = field.rabi;
  const double drift = (std::norm(spec.c0) - std::norm(spec.c1)) * field.photon_momentum() / (2.0 * mass_kg);
  return spec.x0 + spec.p_c * t / mass_kg + drift * (t - std::sin(omega * t) / omega);
}

double closed_form_velocity(double t, const WavepacketSpec& spec, const LightField& field, double mass_kg) {
  require_time(t);
  require_mass(mass_kg);
  const double drift = (std::norm(spec.c0) - std::norm(spec.c1)) * field.photon_momentum() / (2.0 * mass_kg);
  return spec.p_c / mass_kg + drift * (1.0 - std::cos(field.rabi * t));
}

double secular_velocity(const WavepacketSpec& spec, const LightField& field, double mass_kg) {
  require_mass(mass_kg);
  return spec.p_c / mass_kg +
         (std::norm(spec.c0) - std::norm(spec.c1)) * field.photon_momentum() / (2.0 * mass_kg);
}

double average_speed(const Species& species, double c0_sq, double c1_sq, double p_c,
                     const PhysicalConstants& consts) {
  if (!(c0_sq >= 0.0 && c0_sq <= 1.0 && c1_sq >= 0.0 && c1_sq <= 1.0) ||
      std::abs(c0_sq + c1_sq - 1.0) > 1e-12) {
    throw DomainError("populations must lie in [0, 1] and sum to 1");
  }
  if (!std::isfinite(p_c)) throw DomainError("p_c must be finite");
  const double mass = mass_to_si(species.mass_u, consts);
  const double lambda = species.wavelength_nm * kNanometre;
  if (!(lambda > 0.0)) throw DomainError("wavelength must be positive");
  return p_c / mass + (c0_sq - c1_sq) * consts.h / (2.0 * mass * lambda);
}

}  // namespace atomwalk
