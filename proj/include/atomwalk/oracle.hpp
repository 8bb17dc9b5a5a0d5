#pragma once

#include <cstddef>

#include "atomwalk/dynamics.hpp"

namespace atomwalk {

enum class IntegrationMethod { rk4 };

struct IntegratorConfig {
  double dt = 0.0;  // s, upper bound on the step
  IntegrationMethod method = IntegrationMethod::rk4;
  std::size_t max_steps = 100'000'000;
};

/// Brute-force integration of the 2x2 block equation
///   i d/dt (phi0, phi1) = [[w_p, -Omega/2], [-Omega/2, Delta + w_{p+hbar k}]] (phi0, phi1)
/// with fixed-step classical RK4. The step is shrunk so that t is hit exactly.
/// No renormalisation is applied.
///
/// Throws ConfigError if dt <= 0, Omega dt > 0.01, Sigma dt > 0.02 or the
/// required step count exceeds max_steps.
BlockAmplitudes evolve_block_numeric(const BlockAmplitudes& init, const LightField& field, double mass_kg,
                                     double t, const IntegratorConfig& cfg);

}  // namespace atomwalk
