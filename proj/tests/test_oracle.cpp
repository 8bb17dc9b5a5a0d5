#include <doctest.h>

#include <cmath>
#include <random>

#include "atomwalk/catalog.hpp"
#include "atomwalk/errors.hpp"
#include "atomwalk/oracle.hpp"

using namespace atomwalk;

namespace {

constexpr double kRabi = 1e6;

const Species& rb87() { return embedded_table1().at("Rb-87"); }
double rb_mass() { return mass_to_si(rb87().mass_u, PhysicalConstants::paper()); }

LightField field_with_ratio(double ratio, double p = 0.0, double rabi = kRabi) {
  auto f = LightField::for_species(rb87(), rabi);
  f.detuning = ratio * rabi - shift_delta(p, f, rb_mass());
  return f;
}

double max_error(const BlockAmplitudes& a, const BlockAmplitudes& b) {
  return std::max(std::abs(a.phi0 - b.phi0), std::abs(a.phi1 - b.phi1));
}

BlockAmplitudes random_block(std::mt19937_64& rng, double p) {
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  const double th = 0.25 * angle(rng);
  return {p, std::polar(std::cos(th), angle(rng)), std::polar(std::sin(th), angle(rng))};
}

}  // namespace

TEST_CASE("zero time returns the input") {
  const BlockAmplitudes init{0.0, {0.3, 0.4}, {0.5, -0.1}};
  const auto out = evolve_block_numeric(init, field_with_ratio(0.5), rb_mass(), 0.0, {1e-9});
  CHECK(out.phi0 == init.phi0);
  CHECK(out.phi1 == init.phi1);
}

TEST_CASE("resonant pi pulse") {
  const auto out = evolve_block_numeric({0.0, 1.0, 0.0}, field_with_ratio(0.0), rb_mass(), kPi / kRabi,
                                        {0.002 / kRabi});
  CHECK(std::norm(out.phi1) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("large detuning agrees with the analytic solution over 10 periods") {
  std::mt19937_64 rng(3);
  const auto f = field_with_ratio(2.0);
  for (int i = 0; i < 5; ++i) {
    const auto init = random_block(rng, 0.0);
    const double t = 10.0 * kTwoPi / kRabi;
    const auto numeric = evolve_block_numeric(init, f, rb_mass(), t, {0.002 / kRabi});
    CHECK(max_error(numeric, evolve_block_analytic(init, f, rb_mass(), t)) < 1e-8);
  }
}

TEST_CASE("configuration is checked at entry") {
  const BlockAmplitudes init{0.0, 1.0, 0.0};
  const auto f = field_with_ratio(0.0);
  CHECK_THROWS_AS(evolve_block_numeric(init, f, rb_mass(), 1e-6, {0.0}), ConfigError);
  CHECK_THROWS_AS(evolve_block_numeric(init, f, rb_mass(), 1e-6, {-1e-9}), ConfigError);
  CHECK_THROWS_AS(evolve_block_numeric(init, f, rb_mass(), 1e-6, {0.011 / kRabi}), ConfigError);
  // Omega dt is fine here but Sigma dt = sqrt(5) * 0.009 is not.
  CHECK_THROWS_AS(evolve_block_numeric(init, field_with_ratio(2.0), rb_mass(), 1e-6, {0.0095 / kRabi}),
                  ConfigError);
  CHECK_THROWS_AS(evolve_block_numeric(init, f, rb_mass(), 1e-3, {0.001 / kRabi, IntegrationMethod::rk4, 1000}),
                  ConfigError);
  CHECK_THROWS_AS(evolve_block_numeric(init, f, rb_mass(), -1.0, {0.001 / kRabi}), DomainError);
}

TEST_CASE("norm drift over 10 periods at the coarsest allowed step") {
  const double t = 10.0 * kTwoPi / kRabi;
  std::mt19937_64 rng(8);
  for (double ratio : {0.0, 0.5}) {
    const auto init = random_block(rng, 0.0);
    const auto out = evolve_block_numeric(init, field_with_ratio(ratio), rb_mass(), t, {0.01 / kRabi});
    CHECK(std::abs(out.norm() - init.norm()) < 1e-8);
  }
  // Sigma dt at its 0.02 cap.
  const auto init = random_block(rng, 0.0);
  const auto out = evolve_block_numeric(init, field_with_ratio(2.0), rb_mass(), t, {0.02 / std::sqrt(5.0) / kRabi});
  CHECK(std::abs(out.norm() - init.norm()) < 1e-8);
}

TEST_CASE("fourth-order convergence") {
  const auto f = field_with_ratio(2.0);
  const BlockAmplitudes init{0.0, 1.0, 0.0};
  const double t = 10.0 * kTwoPi / kRabi;
  const auto exact = evolve_block_analytic(init, f, rb_mass(), t);
  const double coarse = max_error(evolve_block_numeric(init, f, rb_mass(), t, {0.008 / kRabi}), exact);
  const double fine = max_error(evolve_block_numeric(init, f, rb_mass(), t, {0.004 / kRabi}), exact);
  CHECK(coarse / fine >= 12.0);
  CHECK(coarse / fine <= 20.0);
}

TEST_CASE("randomised agreement with the analytic solution") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> ratio(-2.0, 2.0);
  std::uniform_real_distribution<double> log_rabi(4.0, 6.5);
  std::uniform_real_distribution<double> periods(0.1, 5.0);
  const double hk = kHbar * wavenumber(rb87().wavelength_nm * kNanometre);
  for (int i = 0; i < 100; ++i) {
    const double rabi = std::pow(10.0, log_rabi(rng));
    const double p = ratio(rng) * hk;
    const auto f = field_with_ratio(ratio(rng), p, rabi);
    const auto init = random_block(rng, p);
    const double t = periods(rng) * kTwoPi / rabi;
    const auto numeric = evolve_block_numeric(init, f, rb_mass(), t, {0.004 / rabi});
    CHECK(max_error(numeric, evolve_block_analytic(init, f, rb_mass(), t)) < 1e-7);
  }
}
