#include "atomwalk/oracle.hpp"

#include <cmath>
#include <string>

#include "atomwalk/errors.hpp"

namespace atomwalk {

namespace {

constexpr double kMaxRabiStep = 0.01;
constexpr double kMaxSigmaStep = 0.02;

struct BlockHamiltonian {
  double h00;
  double h01;
  double h11;

  // -i H y
  void derivative(const Complex& y0, const Complex& y1, Complex& d0, Complex& d1) const {
    constexpr Complex minus_i{0.0, -1.0};
    d0 = minus_i * (h00 * y0 + h01 * y1);
    d1 = minus_i * (h01 * y0 + h11 * y1);
  }
};

}  // namespace

BlockAmplitudes evolve_block_numeric(const BlockAmplitudes& init, const LightField& field, double mass_kg,
                                     double t, const IntegratorConfig& cfg) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("time must be finite and non-negative");
  if (!(cfg.dt > 0.0) || !std::isfinite(cfg.dt)) throw ConfigError("integrator step must be positive");
  if (field.rabi * cfg.dt > kMaxRabiStep) throw ConfigError("integrator step too coarse: Omega dt > 0.01");
  const double sigma = effective_rabi(shift_delta(init.p, field, mass_kg), field.rabi);
  if (sigma * cfg.dt > kMaxSigmaStep) throw ConfigError("integrator step too coarse: Sigma dt > 0.02");
  if (t == 0.0) return init;

  const double steps_needed = std::ceil(t / cfg.dt);
  if (steps_needed > static_cast<double>(cfg.max_steps)) {
    throw ConfigError("integration needs " + std::to_string(steps_needed) + " steps, budget is " +
                      std::to_string(cfg.max_steps));
  }
  const auto steps = static_cast<std::size_t>(steps_needed);
  const double h = t / static_cast<double>(steps);

  // The trace only contributes a global phase, applied exactly at the end, so the
  // step error is governed by Omega and Sigma alone.
  const double bare0 = kinetic_frequency(init.p, mass_kg);
  const double bare1 = field.detuning + kinetic_frequency(init.p + field.photon_momentum(), mass_kg);
  const double mean = 0.5 * (bare0 + bare1);
  const BlockHamiltonian hamiltonian{bare0 - mean, -0.5 * field.rabi, bare1 - mean};

  Complex y0 = init.phi0;
  Complex y1 = init.phi1;
  Complex k1a, k1b, k2a, k2b, k3a, k3b, k4a, k4b;
  for (std::size_t s = 0; s < steps; ++s) {
    hamiltonian.derivative(y0, y1, k1a, k1b);
    hamiltonian.derivative(y0 + 0.5 * h * k1a, y1 + 0.5 * h * k1b, k2a, k2b);
    hamiltonian.derivative(y0 + 0.5 * h * k2a, y1 + 0.5 * h * k2b, k3a, k3b);
    hamiltonian.derivative(y0 + h * k3a, y1 + h * k3b, k4a, k4b);
    y0 += (h / 6.0) * (k1a + 2.0 * k2a + 2.0 * k3a + k4a);
    y1 += (h / 6.0) * (k1b + 2.0 * k2b + 2.0 * k3b + k4b);
  }
  const Complex phase = std::polar(1.0, -mean * t);
  return {init.p, phase * y0, phase * y1};
}

}  // namespace atomwalk
