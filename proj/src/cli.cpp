#include "atomwalk/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <system_error>

#include "atomwalk/acceptance.hpp"
#include "atomwalk/catalog.hpp"
#include "atomwalk/dynamics.hpp"
#include "atomwalk/errors.hpp"
#include "atomwalk/planner.hpp"

namespace atomwalk::cli {

namespace {

constexpr double kStepsPerRabiPeriod = 200.0;
constexpr std::size_t kFreeFlightSteps = 1000;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Catalog load(const RunConfig& config) {
  if (!config.catalog_path) return embedded_table1();
  try {
    return load_catalog(*config.catalog_path);
  } catch (const std::system_error& e) {
    throw FileError(e.what());
  } catch (const ParseError& e) {
    throw FileError(*config.catalog_path + ": " + e.what());
  } catch (const ValidationError& e) {
    throw FileError(*config.catalog_path + ": " + e.what());
  }
}

const Species& lookup(const Catalog& catalog, const std::string& name) {
  for (const auto& s : catalog) {
    if (s.name == name) return s;
  }
  throw UsageError("unknown species '" + name + "' (catalog " + catalog.source_tag() + ")");
}

std::vector<Species> select(const Catalog& catalog, const std::vector<std::string>& names) {
  if (names.empty()) return catalog.entries();
  std::vector<Species> out;
  for (const auto& n : names) out.push_back(lookup(catalog, n));
  return out;
}

void check_finite(const RunConfig& c) {
  for (double v : {c.rabi, c.detuning, c.pi_hk, c.pc_hk, c.c0_sq, c.x0, c.t_max, c.p_span_hk, c.t, c.kappa}) {
    if (!std::isfinite(v)) throw UsageError("numeric flags must be finite");
  }
}

LightField field_for(const Species& s, const RunConfig& c) {
  return LightField::for_species(s, c.rabi, c.detuning, c.reverse ? Direction::backward : Direction::forward);
}

double recoil_momentum(const Species& s) {
  return kHbar * wavenumber(s.wavelength_nm * kNanometre);
}

void emit_speeds(const Catalog& catalog, const PhysicalConstants& consts, std::ostream& os) {
  os << "name,mass_u,wavelength_nm,vbar_mps\n";
  for (const auto& row : speed_table(catalog, consts)) {
    os << row.name << ',' << format_number(row.mass_u) << ',' << format_number(row.wavelength_nm) << ','
       << format_number(row.vbar) << '\n';
  }
}

void emit_simulation(const Catalog& catalog, const RunConfig& c, const PhysicalConstants& consts,
                     std::ostream& os) {
  if (c.grid_points < 2) throw UsageError("--grid-points must be at least 2");
  if (c.steps && *c.steps == 0) throw UsageError("--steps must be positive");
  os << "species,t_s,mean_p_kgmps,mean_v_mps,mean_x_m,norm,pop_excited\n";
  for (const auto& s : select(catalog, c.species)) {
    const double mass = mass_to_si(s.mass_u, consts);
    const LightField field = field_for(s, c);
    const double hk = recoil_momentum(s);
    const auto spec = WavepacketSpec::with_populations(c.pc_hk * hk, c.pi_hk * hk, c.c0_sq, c.x0);
    const auto grid = MomentumGrid::centered(spec.p_c, 6.0 * spec.pi_width, c.grid_points);

    std::size_t steps = kFreeFlightSteps;
    if (c.steps) {
      steps = *c.steps;
    } else if (field.rabi > 0.0) {
      steps = static_cast<std::size_t>(std::ceil(c.t_max * field.rabi / kTwoPi * kStepsPerRabiPeriod));
      steps = std::max<std::size_t>(steps, 1);
    }
    const auto times = uniform_times(c.t_max, steps);
    const auto traj = simulate(spec, grid, field, mass, times);
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
      os << s.name << ',' << format_number(traj.times[i]) << ',' << format_number(traj.mean_p[i]) << ','
         << format_number(traj.mean_v[i]) << ',' << format_number(traj.mean_x[i]) << ','
         << format_number(traj.norm[i]) << ',' << format_number(traj.pop_excited[i]) << '\n';
    }
  }
}

void emit_bands(const Catalog& catalog, const RunConfig& c, const PhysicalConstants& consts,
                std::ostream& os) {
  if (c.species.size() > 1) throw UsageError("bands takes a single --species");
  if (c.band_points < 2) throw UsageError("--points must be at least 2");
  if (!(c.p_span_hk > 0.0)) throw UsageError("--p-span must be positive");
  if (c.species.empty() && catalog.empty()) throw UsageError("catalog is empty");
  const Species& s = c.species.empty() ? catalog.entries().front() : lookup(catalog, c.species.front());
  const double hk = recoil_momentum(s);
  const auto grid = MomentumGrid::centered(0.0, c.p_span_hk * hk, c.band_points);
  os << "p_kgmps,W0_radps,W1_radps,bare0_radps,bare1_radps\n";
  for (const auto& b : band_structure(grid, field_for(s, c), mass_to_si(s.mass_u, consts))) {
    os << format_number(b.p) << ',' << format_number(b.w0) << ',' << format_number(b.w1) << ','
       << format_number(b.bare0) << ',' << format_number(b.bare1) << '\n';
  }
}

void emit_separation(const Catalog& catalog, const RunConfig& c, const PhysicalConstants& consts,
                     std::ostream& os) {
  if (!c.pair.empty() && !c.species.empty()) throw UsageError("use either --pair or --species, not both");
  const auto& names = c.pair.empty() ? c.species : c.pair;
  if (!c.pair.empty() && c.pair.size() != 2) throw UsageError("--pair takes exactly two names, A,B");
  if (names.size() < 2) throw UsageError("separate needs --pair A,B or --species with at least two names");

  std::vector<MixtureMember> mixture;
  for (const auto& s : select(catalog, names)) {
    mixture.push_back({s, c.c0_sq, 1.0 - c.c0_sq, c.pc_hk * recoil_momentum(s)});
  }
  // Momentum width referenced to the first member's photon momentum.
  const double pi_width = c.pi_hk * recoil_momentum(mixture.front().species);
  const auto report = separation_report(mixture, c.t, c.kappa, pi_width, consts);

  os << "species_i,species_j,delta_v_mps,gap_m,gap_nm,width_i_m,width_j_m,resolvable,t_required_s\n";
  for (const auto& p : report.pairs) {
    os << p.name_i << ',' << p.name_j << ',' << format_number(p.delta_v) << ',' << format_number(p.gap) << ','
       << format_number(p.gap / kNanometre) << ',' << format_number(p.width_i) << ','
       << format_number(p.width_j) << ',' << (p.resolvable ? "true" : "false") << ','
       << (p.t_required ? format_number(*p.t_required) : std::string("none")) << '\n';
  }
}

int dispatch(const RunConfig& config, std::ostream& doc) {
  const auto consts = constants_for(config.constant_set);
  switch (config.command) {
    case Command::speeds:
      emit_speeds(load(config), consts, doc);
      return kExitOk;
    case Command::simulate:
      emit_simulation(load(config), config, consts, doc);
      return kExitOk;
    case Command::bands:
      emit_bands(load(config), config, consts, doc);
      return kExitOk;
    case Command::separate:
      emit_separation(load(config), config, consts, doc);
      return kExitOk;
    case Command::validate: {
      const auto results = acceptance::run_all();
      acceptance::print(results, doc);
      return acceptance::all_passed(results) ? kExitOk : kExitValidationFailed;
    }
  }
  return kExitUsage;
}

}  // namespace

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::ostringstream doc;
  int status = kExitOk;
  try {
    check_finite(config);
    status = dispatch(config, doc);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FileError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFile;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }

  if (config.output_path) {
    std::ofstream file(*config.output_path, std::ios::binary | std::ios::trunc);
    if (!file || !(file << doc.str()) || !file.flush()) {
      err << "error: cannot write '" << *config.output_path << "'\n";
      return kExitFile;
    }
  } else {
    out << doc.str();
  }
  return status;
}

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  std::string constants = "paper";
  std::string output;
  std::string catalog;
  std::size_t steps = 0;

  CLI::App app{"Coherent walking of two-level atoms in a travelling light field"};
  app.require_subcommand(1);
  app.fallthrough();
  app.option_defaults()->always_capture_default();
  app.add_option("--catalog", catalog, "Species catalog file (default: embedded reference table)");
  app.add_option("--constants", constants, "Constant set: paper or codata")
      ->check(CLI::IsMember({"paper", "codata"}));
  app.add_option("-o,--output", output, "Write the CSV document to this path instead of stdout");

  auto* speeds = app.add_subcommand("speeds", "Period-averaged speeds h/(2 M lambda) for every species");

  auto* sim = app.add_subcommand("simulate", "Wavepacket trajectories <p>, <v>, <x> per species");
  auto* bands = app.add_subcommand("bands", "Dressed and bare frequencies across momentum");
  auto* sep = app.add_subcommand("separate", "Pairwise separation report");
  auto* validate = app.add_subcommand("validate", "Run the acceptance suite");

  for (auto* sub : {sim, bands, sep}) {
    sub->add_option("--species", config.species, "Comma-separated species names")->delimiter(',');
    sub->add_option("--pi-hk", config.pi_hk, "Momentum width Pi in units of hbar k");
    sub->add_option("--pc-hk", config.pc_hk, "Centre momentum p_c in units of hbar k");
    sub->add_option("--c0sq", config.c0_sq, "Ground-state population |C0|^2");
  }
  for (auto* sub : {sim, bands}) {
    sub->add_option("--rabi", config.rabi, "Rabi frequency Omega, rad/s");
    sub->add_option("--detuning", config.detuning, "Detuning Delta, rad/s");
    sub->add_flag("--reverse", config.reverse, "Light propagates towards -x");
  }
  sim->add_option("--t-max", config.t_max, "End time, s");
  sim->add_option("--steps", steps, "Time steps (default 200 per Rabi period)");
  sim->add_option("--grid-points", config.grid_points, "Momentum grid points");
  sim->add_option("--x0", config.x0, "Initial mean position, m");
  bands->add_option("--p-span", config.p_span_hk, "Momentum half-range in units of hbar k");
  bands->add_option("--points", config.band_points, "Momentum samples");
  sep->add_option("--pair", config.pair, "Two species names, A,B")->delimiter(',');
  sep->add_option("--t", config.t, "Interaction time, s");
  sep->add_option("--kappa", config.kappa, "Resolvability threshold in combined widths");

  std::vector<const char*> argv{"atomwalk"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  if (speeds->parsed()) config.command = Command::speeds;
  if (sim->parsed()) config.command = Command::simulate;
  if (bands->parsed()) config.command = Command::bands;
  if (sep->parsed()) config.command = Command::separate;
  if (validate->parsed()) config.command = Command::validate;
  config.constant_set = parse_constant_set(constants);
  if (!output.empty()) config.output_path = output;
  if (!catalog.empty()) config.catalog_path = catalog;
  if (steps) config.steps = steps;
  return run(config, out, err);
}

}  // namespace atomwalk::cli
