#include "atomwalk/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>
#include <string_view>

#include "atomwalk/catalog.hpp"
#include "atomwalk/cli.hpp"
#include "atomwalk/dynamics.hpp"
#include "atomwalk/errors.hpp"
#include "atomwalk/oracle.hpp"
#include "atomwalk/planner.hpp"

namespace atomwalk::acceptance {

namespace {

using Clock = std::chrono::steady_clock;

struct PrintedSpeed {
  std::string_view name;
  double vbar;  // m/s, as tabulated
};

// Tabulated speed column, kept here as the golden reference only.
constexpr PrintedSpeed kPrintedSpeeds[] = {
    {"Li-7", 0.042153},    {"C-12", 0.099775},    {"Ne-20", 0.01583},     {"Mg-24", 0.0290},
    {"Mg-25", 0.027838},   {"Mg-26", 0.02677},    {"Si-28", 0.028202},    {"Ca-40", 0.011745},
    {"Ti-48", 0.0082515},  {"Fe-56", 0.014282},   {"Co-59", 0.0095446},   {"Ga-69", 0.0071367},
    {"Rb-85", 0.0029952},  {"Rb-87", 0.0029264},  {"Sr-87", 0.0049544},   {"Nb-93", 0.0060399},
    {"Ag-107", 0.0056564}, {"Cd-114", 0.0076122}, {"In-115", 0.0042092},  {"Cs-133", 0.0017517},
    {"Eu-153", 0.0028011}, {"Yb-173", 0.0020645}, {"Au-197", 0.0037639},  {"U-238", 0.0023247},
};

std::string num(double v) {
  std::ostringstream os;
  os.precision(4);
  os << v;
  return os.str();
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Probe {
  const Species& species;
  double mass;
  double hk;
};

Probe probe(std::string_view name) {
  const auto& s = embedded_table1().at(name);
  const double mass = mass_to_si(s.mass_u, PhysicalConstants::paper());
  return {s, mass, kHbar * wavenumber(s.wavelength_nm * kNanometre)};
}

// Detuning that puts delta(p) at the requested value.
LightField field_with_delta(const Species& s, double mass, double rabi, double p, double delta) {
  LightField f = LightField::for_species(s, rabi);
  f.detuning = 0.0;
  f.detuning = delta - shift_delta(p, f, mass);
  return f;
}

Complex random_phase(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  return std::polar(1.0, angle(rng));
}

BlockAmplitudes random_unit_block(std::mt19937_64& rng, double p) {
  std::uniform_real_distribution<double> theta(0.0, 0.5 * kPi);
  const double th = theta(rng);
  return {p, std::cos(th) * random_phase(rng), std::sin(th) * random_phase(rng)};
}

double amplitude_error(const BlockAmplitudes& a, const BlockAmplitudes& b) {
  return std::max(std::abs(a.phi0 - b.phi0), std::abs(a.phi1 - b.phi1));
}

// Max error between analytic and RK4 evolution sampled at every Rabi period up to `periods`.
double oracle_error(const BlockAmplitudes& init, const LightField& field, double mass, int periods,
                    double rabi_dt) {
  const double period = kTwoPi / field.rabi;
  const IntegratorConfig cfg{rabi_dt / field.rabi};
  BlockAmplitudes numeric = init;
  double worst = 0.0;
  for (int n = 1; n <= periods; ++n) {
    numeric = evolve_block_numeric(numeric, field, mass, period, cfg);
    const auto exact = evolve_block_analytic(init, field, mass, n * period);
    worst = std::max(worst, amplitude_error(numeric, exact));
  }
  return worst;
}

// ---- 1 -------------------------------------------------------------------------

CriterionResult table_golden() {
  CriterionResult r{1, "Embedded reference speeds vs tabulated column, 0.05% relative", false, {}, {}, 0.0};
  const auto start = Clock::now();
  const auto rows = speed_table(embedded_table1(), PhysicalConstants::paper());
  double worst = 0.0;
  std::size_t matched = 0;
  for (const auto& ref : kPrintedSpeeds) {
    const auto it = std::find_if(rows.begin(), rows.end(), [&](const SpeedRow& row) { return row.name == ref.name; });
    if (it == rows.end()) {
      r.notes.push_back("missing row " + std::string(ref.name));
      continue;
    }
    const double rel = std::abs(it->vbar - ref.vbar) / ref.vbar;
    worst = std::max(worst, rel);
    if (rel <= 5e-4) {
      ++matched;
    } else {
      r.notes.push_back(std::string(ref.name) + ": computed " + num(it->vbar) + " m/s vs tabulated " +
                        num(ref.vbar) + " m/s (" + num(rel * 100.0) + "% off); tabulated mass and " +
                        "wavelength do not reproduce the tabulated speed");
    }
  }
  r.seconds = seconds_since(start);
  r.passed = rows.size() == 24 && matched == 24 && r.seconds < 1.0;
  r.detail = std::to_string(matched) + "/24 rows within 0.05%, worst " + num(worst * 100.0) + "%";
  return r;
}

// ---- 2 -------------------------------------------------------------------------

CriterionResult oracle_equivalence() {
  CriterionResult r{2, "Analytic block evolution vs RK4 oracle, 10 Rabi periods", false, {}, {}, 0.0};
  const auto start = Clock::now();
  const auto rb = probe("Rb-87");
  constexpr double rabi = 1e6;
  std::mt19937_64 rng(20240521);
  std::uniform_real_distribution<double> momentum(-1.0, 1.0);

  double worst = 0.0;
  for (double ratio : {0.0, 0.5, 2.0}) {
    for (int trial = 0; trial < 100; ++trial) {
      const double p = momentum(rng) * rb.hk;
      const auto field = field_with_delta(rb.species, rb.mass, rabi, p, ratio * rabi);
      worst = std::max(worst, oracle_error(random_unit_block(rng, p), field, rb.mass, 10, 0.002));
    }
  }

  // Convergence order at the most demanding ratio; Sigma dt stays within 0.02.
  const auto field = field_with_delta(rb.species, rb.mass, rabi, 0.0, 2.0 * rabi);
  const BlockAmplitudes ground{0.0, 1.0, 0.0};
  const double coarse = oracle_error(ground, field, rb.mass, 10, 0.008);
  const double fine = oracle_error(ground, field, rb.mass, 10, 0.004);
  const double factor = coarse / fine;

  r.seconds = seconds_since(start);
  r.passed = worst < 1e-8 && factor >= 12.0 && factor <= 20.0 && r.seconds < 10.0;
  r.detail = "max amplitude error " + num(worst) + " (< 1e-8) over 300 blocks; halving dt shrinks error by " +
             num(factor) + "x (in [12, 20])";
  return r;
}

// ---- 3 -------------------------------------------------------------------------

struct StrongCouplingRun {
  Trajectory traj;
  WavepacketSpec spec;
  LightField field;
  double mass;
  double period;
};

StrongCouplingRun strong_coupling_run(std::string_view name, double ratio, std::size_t points, int periods,
                                      Direction dir = Direction::forward) {
  const auto pr = probe(name);
  auto spec = WavepacketSpec::with_populations(0.0, 0.05 * pr.hk, 1.0);
  const auto grid = MomentumGrid::centered(0.0, 6.0 * spec.pi_width, points);
  LightField field = LightField::for_species(pr.species, 1.0, 0.0, dir);
  double max_delta = 0.0;
  for (std::size_t i = 0; i < grid.n_points; ++i) {
    max_delta = std::max(max_delta, std::abs(shift_delta(grid.at(i), field, pr.mass)));
  }
  field.rabi = ratio * max_delta;
  const double period = kTwoPi / field.rabi;
  const auto times = uniform_times(periods * period, static_cast<std::size_t>(periods) * 200);
  return {simulate(spec, grid, field, pr.mass, times), spec, field, pr.mass, period};
}

CriterionResult strong_coupling() {
  CriterionResult r{3, "Grid simulation vs strong-coupling displacement and mean velocity", false, {}, {}, 0.0};
  const auto start = Clock::now();
  const auto run = strong_coupling_run("Rb-87", 100.0, 4096, 3);
  const double scale = std::abs(run.field.photon_momentum()) * run.period / (2.0 * run.mass);
  double worst = 0.0;
  for (std::size_t i = 0; i < run.traj.times.size(); ++i) {
    const double closed = closed_form_displacement(run.traj.times[i], run.spec, run.field, run.mass);
    worst = std::max(worst, std::abs(run.traj.mean_x[i] - closed));
  }
  const double t_end = run.traj.times.back();
  const double averaged = (run.traj.mean_x.back() - run.spec.x0) / t_end;
  const double expected = secular_velocity(run.spec, run.field, run.mass);
  const double v_rel = std::abs(averaged - expected) / std::abs(expected);

  r.seconds = seconds_since(start);
  r.passed = worst < 0.01 * scale && v_rel < 5e-3 && r.seconds < 30.0;
  r.detail = "max |x_sim - x_closed| = " + num(worst / scale * 100.0) + "% of hbar k T / 2M (< 1%); " +
             "period-averaged velocity off by " + num(v_rel * 100.0) + "% (< 0.5%)";
  return r;
}

// ---- 4 -------------------------------------------------------------------------

CriterionResult conservation() {
  CriterionResult r{4, "Norm conservation and spectral identities", false, {}, {}, 0.0};
  const auto start = Clock::now();

  double traj_drift = 0.0;
  auto track = [&](const Trajectory& t) {
    for (double n : t.norm) traj_drift = std::max(traj_drift, std::abs(n - 1.0));
  };
  track(strong_coupling_run("Rb-87", 100.0, 4096, 3).traj);
  track(strong_coupling_run("Li-7", 10.0, 1024, 5, Direction::backward).traj);
  {
    const auto pr = probe("Cs-133");
    WavepacketSpec spec;
    spec.p_c = 0.2 * pr.hk;
    spec.pi_width = 0.1 * pr.hk;
    spec.c0 = std::polar(std::sqrt(0.3), 0.4);
    spec.c1 = std::polar(std::sqrt(0.7), -1.1);
    const auto field = LightField::for_species(pr.species, 2e5, 3e4);
    track(simulate(spec, MomentumGrid::default_for(spec), field, pr.mass, uniform_times(50e-6, 400)));
  }

  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> log_rabi(4.0, 7.0);
  std::uniform_real_distribution<double> log_time(-8.0, -4.0);
  const auto& table = embedded_table1().entries();
  double block_drift = 0.0;
  double sum_err = 0.0;
  double diff_err = 0.0;
  const auto consts = PhysicalConstants::paper();
  for (int i = 0; i < 10000; ++i) {
    const auto& s = table[static_cast<std::size_t>(i) % table.size()];
    const double mass = mass_to_si(s.mass_u, consts);
    const double rabi = std::pow(10.0, log_rabi(rng));
    const auto field = LightField::for_species(s, rabi, 3.0 * rabi * unit(rng));
    const double p = 3.0 * unit(rng) * std::abs(field.photon_momentum());
    const auto init = random_unit_block(rng, p);
    const auto later = evolve_block_analytic(init, field, mass, std::pow(10.0, log_time(rng)));
    block_drift = std::max(block_drift, std::abs(later.norm() - init.norm()) / init.norm());

    const auto w = dressed_frequencies(p, field, mass);
    const double bare_sum = field.detuning + kinetic_frequency(p + field.photon_momentum(), mass) +
                            kinetic_frequency(p, mass);
    const double sigma = effective_rabi(shift_delta(p, field, mass), field.rabi);
    sum_err = std::max(sum_err, std::abs(w.w0 + w.w1 - bare_sum) / (std::abs(w.w0) + std::abs(w.w1)));
    diff_err = std::max(diff_err, std::abs(w.w1 - w.w0 - sigma) / sigma);
  }

  r.seconds = seconds_since(start);
  r.passed = traj_drift <= 1e-9 && block_drift <= 1e-12 && sum_err <= 1e-12 && diff_err <= 1e-12;
  r.detail = "trajectory norm drift " + num(traj_drift) + " (<= 1e-9); block norm drift " + num(block_drift) +
             " (<= 1e-12); W0+W1 " + num(sum_err) + ", W1-W0 " + num(diff_err) + " relative (<= 1e-12)";
  return r;
}

// ---- 5 -------------------------------------------------------------------------

CriterionResult separation_gaps() {
  CriterionResult r{5, "Pairwise separation gaps from tabulated speeds", false, {}, {}, 0.0};
  const auto start = Clock::now();
  const auto consts = PhysicalConstants::paper();
  const auto& table = embedded_table1();
  auto gap_nm = [&](std::string_view a, std::string_view b, double t) {
    return pairwise_gap({table.at(a)}, {table.at(b)}, t, consts) / kNanometre;
  };

  struct Check {
    std::string_view a, b;
    double t, expected, tol;
    std::string_view quoted;
  };
  const Check checks[] = {
      {"Mg-24", "Mg-25", 42e-6, 48.8, 0.5, "nearly 50 nm"},
      {"U-238", "Yb-173", 30e-6, 7.8, 0.2, "nearly 10 nm"},
      {"Rb-85", "Rb-87", 500e-6, 34.4, 0.5, "about 50 nm"},
  };
  bool ok = true;
  std::ostringstream detail;
  for (const auto& c : checks) {
    const double g = gap_nm(c.a, c.b, c.t);
    const bool hit = std::abs(g - c.expected) <= c.tol;
    ok = ok && hit;
    detail << c.a << "/" << c.b << " at " << num(c.t * 1e6) << " us: " << num(g) << " nm (" << num(c.expected)
           << " +- " << num(c.tol) << ")" << (hit ? "" : " MISS") << "; ";
  }
  r.notes.push_back(
      "Rb-85/Rb-87 at 500 us: the quoted figure is 'about 50 nm' but the tabulated speeds give " +
      num(gap_nm("Rb-85", "Rb-87", 500e-6)) + " nm; reporting the table-consistent value, not matching the quote");
  r.notes.push_back("Mg-24/Mg-25 quoted 'nearly 50 nm', U-238/Yb-173 quoted 'nearly 10 nm'");
  r.seconds = seconds_since(start);
  r.passed = ok;
  r.detail = detail.str();
  return r;
}

// ---- 6 -------------------------------------------------------------------------

CriterionResult resonant_rabi() {
  CriterionResult r{6, "Resonant Rabi flopping, sin^2(Omega t / 2)", false, {}, {}, 0.0};
  const auto start = Clock::now();
  const auto rb = probe("Rb-87");
  constexpr double rabi = 1e6;
  const auto field = field_with_delta(rb.species, rb.mass, rabi, 0.0, 0.0);
  const BlockAmplitudes ground{0.0, 1.0, 0.0};
  const double period = kTwoPi / rabi;

  double analytic_err = 0.0;
  for (int i = 0; i <= 800; ++i) {
    const double t = 4.0 * period * i / 800.0;
    const double pop = std::norm(evolve_block_analytic(ground, field, rb.mass, t).phi1);
    analytic_err = std::max(analytic_err, std::abs(pop - std::pow(std::sin(0.5 * rabi * t), 2)));
  }

  const IntegratorConfig cfg{0.002 / rabi};
  double oracle_err = 0.0;
  BlockAmplitudes numeric = ground;
  const double slice = period / 40.0;
  for (int i = 1; i <= 160; ++i) {
    numeric = evolve_block_numeric(numeric, field, rb.mass, slice, cfg);
    oracle_err = std::max(oracle_err, std::abs(std::norm(numeric.phi1) - std::pow(std::sin(0.5 * rabi * i * slice), 2)));
  }

  const double pi_time = kPi / rabi;
  const double transfer_analytic = std::norm(evolve_block_analytic(ground, field, rb.mass, pi_time).phi1);
  const double transfer_oracle = std::norm(evolve_block_numeric(ground, field, rb.mass, pi_time, cfg).phi1);

  r.seconds = seconds_since(start);
  r.passed = analytic_err <= 1e-9 && oracle_err <= 1e-8 && std::abs(1.0 - transfer_analytic) <= 1e-9 &&
             std::abs(1.0 - transfer_oracle) <= 1e-8;
  r.detail = "analytic error " + num(analytic_err) + " (<= 1e-9), oracle error " + num(oracle_err) +
             " (<= 1e-8); population at pi/Omega: " + num(transfer_analytic) + " analytic, " + num(transfer_oracle) +
             " oracle";
  return r;
}

// ---- 7 -------------------------------------------------------------------------

std::string random_token(std::mt19937_64& rng, std::string_view alphabet, std::size_t min_len, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::string out(len(rng), ' ');
  for (auto& c : out) c = alphabet[pick(rng)];
  return out;
}

Catalog random_catalog(std::mt19937_64& rng) {
  constexpr std::string_view name_chars = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789-_";
  constexpr std::string_view label_chars = "0123456789spdfSPDFGa()[]/ -+^'";
  std::uniform_int_distribution<int> count(0, 20);
  std::uniform_real_distribution<double> mantissa(1.0, 10.0);
  std::uniform_int_distribution<int> exponent(-3, 3);
  std::vector<Species> entries;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    Species s;
    s.name = random_token(rng, name_chars, 1, 6) + "-" + std::to_string(i);
    auto label = random_token(rng, label_chars, 0, 30);
    const auto first = label.find_first_not_of(' ');
    label = first == std::string::npos ? "" : label.substr(first, label.find_last_not_of(' ') - first + 1);
    s.transition_label = label;
    s.mass_u = mantissa(rng) * std::pow(10.0, exponent(rng));
    s.wavelength_nm = mantissa(rng) * std::pow(10.0, exponent(rng) + 2);
    entries.push_back(std::move(s));
  }
  return Catalog(std::move(entries), "random");
}

template <typename Error>
bool rejects_at_line(std::string_view text, std::size_t line) {
  try {
    (void)parse_catalog(text);
  } catch (const Error& e) {
    return e.line() == line;
  } catch (...) {
    return false;
  }
  return false;
}

CriterionResult parser_roundtrip() {
  CriterionResult r{7, "Catalog serialize/parse round-trip and malformed-line diagnostics", false, {}, {}, 0.0};
  const auto start = Clock::now();
  std::mt19937_64 rng(4242);
  int exact = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto catalog = random_catalog(rng);
    const auto back = parse_catalog(serialize_catalog(catalog));
    if (back.entries() == catalog.entries()) ++exact;
  }

  const std::string header = std::string(kCatalogHeader) + "\n";
  struct Case {
    std::string text;
    std::size_t line;
    bool parse_error;
  };
  const Case cases[] = {
      {header + "Li-7,7.016004,2s - 2p,670.7926\nX,abc,label,500\n", 3, true},
      {header + "# comment\n\nX,1.0,label\n", 4, true},
      {header + "X,1.0,label,500,extra\n", 2, true},
      {header + "A,1.0,l,500\nB,2.0,l,1e\n", 3, true},
      {header + "U-238,238.050784,a,358.48774\nU-238,238.050784,a,358.48774\n", 3, false},
      {header + "A,1.0,l,500\n\nB,-2.0,l,600\n", 4, false},
      {"name,mass,transition,wavelength\n", 1, true},
  };
  int diagnosed = 0;
  for (const auto& c : cases) {
    const bool hit = c.parse_error ? rejects_at_line<ParseError>(c.text, c.line)
                                   : rejects_at_line<ValidationError>(c.text, c.line);
    if (hit) ++diagnosed;
  }

  r.seconds = seconds_since(start);
  r.passed = exact == 1000 && diagnosed == static_cast<int>(std::size(cases));
  r.detail = std::to_string(exact) + "/1000 random catalogs round-trip exactly; " + std::to_string(diagnosed) +
             "/" + std::to_string(std::size(cases)) + " malformed documents rejected at the right line";
  return r;
}

// ---- 8 -------------------------------------------------------------------------

CriterionResult determinism() {
  CriterionResult r{8, "CLI output is byte-identical across runs", false, {}, {}, 0.0};
  const auto start = Clock::now();
  const std::vector<std::vector<std::string>> commands = {
      {"speeds"},
      {"--constants", "codata", "speeds"},
      {"simulate", "--species", "Li-7,Rb-87", "--grid-points", "512", "--t-max", "2e-5"},
      {"simulate", "--species", "Cs-133", "--rabi", "0", "--grid-points", "256", "--steps", "50"},
      {"bands", "--species", "Rb-87", "--detuning", "-2.36e4"},
      {"separate", "--pair", "Mg-24,Mg-25", "--t", "42e-6"},
      {"separate", "--species", "Li-7,C-12,Rb-85,Rb-87", "--t", "5e-4", "--kappa", "1"},
  };
  int identical = 0;
  for (const auto& args : commands) {
    std::ostringstream out1, out2, err1, err2;
    const int s1 = cli::run_cli(args, out1, err1);
    const int s2 = cli::run_cli(args, out2, err2);
    if (s1 == cli::kExitOk && s1 == s2 && !out1.str().empty() && out1.str() == out2.str()) {
      ++identical;
    } else {
      std::string joined;
      for (const auto& a : args) joined += a + " ";
      r.notes.push_back("differs or failed: " + joined);
    }
  }
  r.seconds = seconds_since(start);
  r.passed = identical == static_cast<int>(commands.size());
  r.detail = std::to_string(identical) + "/" + std::to_string(commands.size()) + " commands reproduce byte-for-byte";
  return r;
}

CriterionResult guarded(int id, const std::function<CriterionResult()>& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    CriterionResult r{id, "criterion " + std::to_string(id), false, {}, {}, 0.0};
    r.detail = std::string("threw: ") + e.what();
    return r;
  }
}

}  // namespace

std::vector<CriterionResult> run_all() {
  const std::pair<int, std::function<CriterionResult()>> criteria[] = {
      {1, table_golden},  {2, oracle_equivalence}, {3, strong_coupling}, {4, conservation},
      {5, separation_gaps},   {6, resonant_rabi},      {7, parser_roundtrip}, {8, determinism},
  };
  std::vector<CriterionResult> results;
  for (const auto& [id, fn] : criteria) results.push_back(guarded(id, fn));
  return results;
}

void print(const std::vector<CriterionResult>& results, std::ostream& out) {
  for (const auto& r : results) {
    out << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.title << ": " << r.detail << " ("
        << num(r.seconds) << " s)\n";
    for (const auto& n : r.notes) out << "    note: " << n << '\n';
  }
  const auto passed = std::count_if(results.begin(), results.end(), [](const auto& r) { return r.passed; });
  out << passed << "/" << results.size() << " criteria passed\n";
}

bool all_passed(const std::vector<CriterionResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
}

}  // namespace atomwalk::acceptance
