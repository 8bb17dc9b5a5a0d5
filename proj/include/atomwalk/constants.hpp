#pragma once

#include <numbers>
#include <string_view>

namespace atomwalk {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Exact SI value; shared by both constant sets.
inline constexpr double kPlanck = 6.62607015e-34;      // J s
inline constexpr double kHbar = kPlanck / kTwoPi;      // J s
inline constexpr double kSpeedOfLight = 299792458.0;   // m/s

inline constexpr double kAtomicMassPaper = 1.67e-27;            // kg, rounded value behind the reference speed table
inline constexpr double kAtomicMassCodata = 1.66053906660e-27;  // kg

inline constexpr double kNanometre = 1e-9;

enum class ConstantSet { paper, codata };

struct PhysicalConstants {
  double h;
  double hbar;
  double u;
  double c;
  ConstantSet set_tag;

  static constexpr PhysicalConstants paper() {
    return {kPlanck, kHbar, kAtomicMassPaper, kSpeedOfLight, ConstantSet::paper};
  }
  static constexpr PhysicalConstants codata() {
    return {kPlanck, kHbar, kAtomicMassCodata, kSpeedOfLight, ConstantSet::codata};
  }
};

PhysicalConstants constants_for(ConstantSet set);

/// Parses "paper" or "codata"; throws DomainError otherwise.
ConstantSet parse_constant_set(std::string_view name);
std::string_view to_string(ConstantSet set);

/// Atomic mass units to kg. Throws DomainError for mass <= 0.
double mass_to_si(double mass_u, const PhysicalConstants& consts);

/// k = 2 pi / lambda in rad/m. Throws DomainError for wavelength <= 0.
double wavenumber(double wavelength_m);

}  // namespace atomwalk
