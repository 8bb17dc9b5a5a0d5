#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "atomwalk/catalog.hpp"
#include "atomwalk/constants.hpp"

namespace atomwalk {

using Complex = std::complex<double>;

enum class Direction { forward = 1, backward = -1 };

/// Monochromatic travelling wave driving the ground-to-excited transition.
/// k carries the propagation direction along x.
struct LightField {
  double wavelength = 0.0;  // m
  double k = 0.0;           // rad/m
  double rabi = 0.0;        // Omega, rad/s
  double detuning = 0.0;    // Delta = w1 - w0 - w, rad/s
  std::optional<double> dipole_moment;    // C m
  std::optional<double> field_amplitude;  // V/m

  static LightField make(double wavelength_m, double rabi, double detuning = 0.0,
                         Direction dir = Direction::forward);
  /// Omega = |mu| E0 / hbar.
  static LightField from_dipole(double wavelength_m, double dipole_moment, double field_amplitude,
                                double detuning = 0.0, Direction dir = Direction::forward);
  static LightField for_species(const Species& s, double rabi, double detuning = 0.0,
                                Direction dir = Direction::forward);

  /// Same field propagating the other way.
  LightField reversed() const;
  /// Photon momentum hbar k (signed), kg m/s.
  double photon_momentum() const noexcept { return kHbar * k; }
  /// Throws DomainError if any invariant is broken.
  void validate() const;
};

/// Gaussian initial packet: phi_n(p,0) = C_n / (pi^1/4 sqrt(Pi)) exp(-(p - p_c)^2 / 2 Pi^2).
struct WavepacketSpec {
  double p_c = 0.0;       // kg m/s
  double pi_width = 0.0;  // Pi, kg m/s
  Complex c0{1.0, 0.0};
  Complex c1{0.0, 0.0};
  double x0 = 0.0;  // m

  /// Real amplitudes sqrt(c0_sq), sqrt(1 - c0_sq).
  static WavepacketSpec with_populations(double p_c, double pi_width, double c0_sq, double x0 = 0.0);
  void validate() const;
};

/// Uniform momentum grid discretising the p integral.
struct MomentumGrid {
  double p_min = 0.0;
  double p_max = 0.0;
  std::size_t n_points = 0;

  static MomentumGrid centered(double center, double half_width, std::size_t n_points);
  /// center +- 6 Pi, 4096 points.
  static MomentumGrid default_for(const WavepacketSpec& spec);

  double spacing() const noexcept { return (p_max - p_min) / static_cast<double>(n_points - 1); }
  /// Mirror-symmetric about the grid centre: a grid centred on 0 has at(n-1-i) == -at(i).
  double at(std::size_t i) const noexcept {
    const double last = static_cast<double>(n_points - 1);
    return 0.5 * (p_min + p_max) + 0.5 * (p_max - p_min) * (2.0 * static_cast<double>(i) - last) / last;
  }
  void validate() const;
};

/// Amplitudes of |0,p> and |1,p+hbar k> for one momentum block.
struct BlockAmplitudes {
  double p = 0.0;
  Complex phi0;
  Complex phi1;

  double norm() const noexcept { return std::norm(phi0) + std::norm(phi1); }
};

struct DressedFrequencies {
  double w0;
  double w1;
};

struct BlockCoefficients {
  Complex a_plus;
  Complex a_minus;
  Complex b_plus;
  Complex b_minus;
};

/// Exact solution of one 2x2 block, ready to be evaluated at any time.
struct DressedBlock {
  BlockAmplitudes initial;
  double delta = 0.0;
  double sigma = 0.0;
  double w0 = 0.0;
  double w1 = 0.0;
  BlockCoefficients coeffs{};
  bool degenerate = false;  // Omega = delta = 0: bare phases only

  BlockAmplitudes at(double t) const;
};

struct BandPoint {
  double p;
  double w0;
  double w1;
  double bare0;  // w_p
  double bare1;  // Delta + w_{p + hbar k}
};

struct QuantumState {
  MomentumGrid grid;
  std::vector<BlockAmplitudes> blocks;
  double mass_kg = 0.0;
  LightField field;
  double time = 0.0;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<double> mean_p;
  std::vector<double> mean_v;
  std::vector<double> mean_x;
  std::vector<double> norm;
  std::vector<double> pop_excited;
};

/// Kinetic frequency p^2 / (2 M hbar).
double kinetic_frequency(double p, double mass_kg);

/// delta = Delta + p k / M + hbar k^2 / (2M): detuning plus Doppler plus recoil shift.
double shift_delta(double p, const LightField& field, double mass_kg);

/// Sigma = sqrt(delta^2 + Omega^2).
double effective_rabi(double delta, double rabi);

DressedFrequencies dressed_frequencies(double p, const LightField& field, double mass_kg);

std::vector<BandPoint> band_structure(const MomentumGrid& grid, const LightField& field, double mass_kg);

/// A+-, B+- for the dressed solution. Throws DegenerateBlockError when sigma == 0.
BlockCoefficients block_coefficients(const BlockAmplitudes& init, double delta, double sigma, double rabi);

DressedBlock dress_block(const BlockAmplitudes& init, const LightField& field, double mass_kg);

/// Exact evolution of one block from t = 0 to t.
BlockAmplitudes evolve_block_analytic(const BlockAmplitudes& init, const LightField& field,
                                      double mass_kg, double t);

/// Samples the Gaussian on the grid and renormalises to unit discrete norm.
/// Throws CoverageError if the grid truncates more than 1e-6 of the norm.
QuantumState init_gaussian(const WavepacketSpec& spec, const MomentumGrid& grid,
                           const LightField& field, double mass_kg);

/// Propagates every block analytically to absolute time t >= state.time.
QuantumState evolve(const QuantumState& state, double t);

double total_norm(const QuantumState& state);
double excited_population(const QuantumState& state);

/// <p> including the photon momentum carried by the excited component.
double expectation_momentum(const QuantumState& state);

/// times[0] must be 0 and the sequence non-decreasing. <x> is the trapezoid
/// integral of <p>/M.
Trajectory simulate(const WavepacketSpec& spec, const MomentumGrid& grid, const LightField& field,
                    double mass_kg, std::span<const double> times);

/// steps + 1 equally spaced samples on [0, t_max].
std::vector<double> uniform_times(double t_max, std::size_t steps);

/// Strong-coupling displacement
/// x0 + p_c t / M + (|C0|^2 - |C1|^2) (hbar k / 2M) (t - sin(Omega t) / Omega).
double closed_form_displacement(double t, const WavepacketSpec& spec, const LightField& field,
                                double mass_kg);

/// p_c / M + (|C0|^2 - |C1|^2) (hbar k / 2M) (1 - cos(Omega t)).
double closed_form_velocity(double t, const WavepacketSpec& spec, const LightField& field,
                            double mass_kg);

/// Period average of closed_form_velocity.
double secular_velocity(const WavepacketSpec& spec, const LightField& field, double mass_kg);

/// p_c / M + (c0_sq - c1_sq) h / (2 M lambda) for a catalog species.
double average_speed(const Species& species, double c0_sq, double c1_sq, double p_c,
                     const PhysicalConstants& consts);

}  // namespace atomwalk
