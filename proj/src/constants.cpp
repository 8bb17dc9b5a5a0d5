#include "atomwalk/constants.hpp"

#include <cmath>
#include <string>

#include "atomwalk/errors.hpp"

namespace atomwalk {

PhysicalConstants constants_for(ConstantSet set) {
  return set == ConstantSet::paper ? PhysicalConstants::paper() : PhysicalConstants::codata();
}

ConstantSet parse_constant_set(std::string_view name) {
  if (name == "paper") return ConstantSet::paper;
  if (name == "codata") return ConstantSet::codata;
  throw DomainError("unknown constant set '" + std::string(name) + "' (expected paper or codata)");
}

std::string_view to_string(ConstantSet set) {
  return set == ConstantSet::paper ? "paper" : "codata";
}

double mass_to_si(double mass_u, const PhysicalConstants& consts) {
  if (!(mass_u > 0.0) || !std::isfinite(mass_u)) {
    throw DomainError("mass must be positive and finite, got " + std::to_string(mass_u) + " u");
  }
  return mass_u * consts.u;
}

double wavenumber(double wavelength_m) {
  if (!(wavelength_m > 0.0) || !std::isfinite(wavelength_m)) {
    throw DomainError("wavelength must be positive and finite");
  }
  return kTwoPi / wavelength_m;
}

}  // namespace atomwalk
