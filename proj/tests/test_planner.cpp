#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "atomwalk/catalog.hpp"
#include "atomwalk/errors.hpp"
#include "atomwalk/planner.hpp"

using namespace atomwalk;

namespace {

const PhysicalConstants kPaper = PhysicalConstants::paper();

MixtureMember member(const char* name) { return {embedded_table1().at(name)}; }

double speed(const char* name) { return member_speed(member(name), kPaper); }

}  // namespace

TEST_CASE("speed_table") {
  const auto rows = speed_table(embedded_table1(), kPaper);
  REQUIRE(rows.size() == 24);
  CHECK(rows.front().name == "Li-7");
  CHECK(rows.front().vbar == doctest::Approx(0.042153).epsilon(5e-4));
  CHECK(rows.back().name == "U-238");
  CHECK(rows.back().vbar == doctest::Approx(0.0023247).epsilon(5e-4));

  auto s = embedded_table1().at("Ca-40");
  const double v = average_speed(s, 1.0, 0.0, 0.0, kPaper);
  s.mass_u *= 2.0;
  CHECK(average_speed(s, 1.0, 0.0, 0.0, kPaper) == v / 2.0);

  // Per-row function: shuffling the catalog permutes the rows.
  auto entries = embedded_table1().entries();
  std::mt19937 rng(1);
  std::shuffle(entries.begin(), entries.end(), rng);
  for (const auto& row : speed_table(Catalog(entries, "shuffled"), kPaper)) {
    const auto it = std::find_if(rows.begin(), rows.end(), [&](const SpeedRow& r) { return r.name == row.name; });
    REQUIRE(it != rows.end());
    CHECK(it->vbar == row.vbar);
  }
  CHECK(speed_table(Catalog{}, kPaper).empty());
}

TEST_CASE("pairwise_gap") {
  CHECK(pairwise_gap(member("Mg-24"), member("Mg-25"), 42e-6, kPaper) / kNanometre ==
        doctest::Approx(48.8).epsilon(0.5 / 48.8));
  CHECK(pairwise_gap(member("U-238"), member("Yb-173"), 30e-6, kPaper) / kNanometre ==
        doctest::Approx(7.805).epsilon(1e-3));
  CHECK(pairwise_gap(member("Rb-85"), member("Rb-87"), 500e-6, kPaper) / kNanometre ==
        doctest::Approx(34.42).epsilon(1e-3));
  for (double t : {0.0, 1e-6, 1e-3}) CHECK(pairwise_gap(member("Au-197"), member("Au-197"), t, kPaper) == 0.0);

  const auto a = member("Sr-87");
  const auto b = member("Rb-87");
  const double g1 = pairwise_gap(a, b, 1e-5, kPaper);
  CHECK(pairwise_gap(b, a, 1e-5, kPaper) == g1);
  CHECK(pairwise_gap(a, b, 3e-5, kPaper) == doctest::Approx(3.0 * g1).epsilon(1e-14));
  CHECK_THROWS_AS(pairwise_gap(a, b, -1.0, kPaper), DomainError);

  auto excited = a;
  excited.c0_sq = 0.2;
  CHECK_THROWS_AS(pairwise_gap(excited, b, 1.0, kPaper), DomainError);
}

TEST_CASE("packet_width") {
  WavepacketSpec spec;
  spec.pi_width = 2e-28;
  const double mass = mass_to_si(87.0, kPaper);
  const double sigma_p = spec.pi_width / std::sqrt(2.0);
  const double sigma_x0 = kHbar / (2.0 * sigma_p);
  CHECK(packet_width(spec, mass, 0.0) == doctest::Approx(kHbar / (std::sqrt(2.0) * spec.pi_width)).epsilon(1e-14));
  CHECK(packet_width(spec, mass, 10.0) == doctest::Approx(sigma_p * 10.0 / mass).epsilon(1e-6));
  for (double t : {1e-6, 1e-4, 1e-2}) {
    const double w = packet_width(spec, mass, t);
    const double spread = sigma_p * t / mass;
    CHECK(std::abs(w * w - sigma_x0 * sigma_x0 - spread * spread) <= 1e-12 * w * w);
  }
  CHECK_THROWS_AS(packet_width(spec, mass, -1.0), DomainError);
}

TEST_CASE("separation_report") {
  SUBCASE("rubidium isotopes") {
    const MixtureMember mix[] = {member("Rb-85"), member("Rb-87")};
    const auto r = separation_report(mix, 500e-6, 2.0, 1e-28, kPaper);
    REQUIRE(r.pairs.size() == 1);
    CHECK(r.pairs[0].gap / kNanometre == doctest::Approx(34.4).epsilon(0.5 / 34.4));
    CHECK(r.pairs[0].name_i == "Rb-85");
  }
  SUBCASE("identical members never resolve") {
    const MixtureMember mix[] = {member("Mg-24"), member("Mg-24")};
    for (double t : {0.0, 1e-4, 1.0}) {
      const auto r = separation_report(mix, t, 2.0, 1e-28, kPaper);
      CHECK_FALSE(r.pairs[0].resolvable);
      CHECK_FALSE(r.pairs[0].t_required.has_value());
    }
  }
  SUBCASE("lithium and carbon at 42 us") {
    const MixtureMember mix[] = {member("Li-7"), member("C-12")};
    // Close to the width-minimising momentum spread for both species at this time.
    const auto r = separation_report(mix, 42e-6, 2.0, 1.9e-28, kPaper);
    const auto& p = r.pairs[0];
    CHECK(p.gap == doctest::Approx(2.42e-6).epsilon(2e-3));
    CHECK(p.resolvable);
    REQUIRE(p.t_required.has_value());
    CHECK(*p.t_required < 42e-6);
  }
  SUBCASE("earliest resolution time solves gap = kappa (w_i + w_j)") {
    const MixtureMember mix[] = {member("Li-7"), member("C-12"), member("Cd-114"), member("In-115")};
    const double pi_width = 1.5e-28;
    const double kappa = 2.0;
    const auto r = separation_report(mix, 1e-4, kappa, pi_width, kPaper);
    CHECK(r.pairs.size() == 6);
    WavepacketSpec packet;
    packet.pi_width = pi_width;
    for (const auto& p : r.pairs) {
      if (!p.t_required) continue;
      const double t = *p.t_required;
      const double mi = mass_to_si(embedded_table1().at(p.name_i).mass_u, kPaper);
      const double mj = mass_to_si(embedded_table1().at(p.name_j).mass_u, kPaper);
      const double widths = kappa * (packet_width(packet, mi, t) + packet_width(packet, mj, t));
      CHECK(p.delta_v * t == doctest::Approx(widths).epsilon(1e-6));
      // Monotone beyond the threshold.
      for (double later : {1.01 * t, 2.0 * t, 10.0 * t}) {
        const double w = kappa * (packet_width(packet, mi, later) + packet_width(packet, mj, later));
        CHECK(p.delta_v * later >= w);
      }
    }
  }
  SUBCASE("slow separation with fast spreading never resolves") {
    const MixtureMember mix[] = {member("Mg-24"), member("Mg-25")};
    const auto r = separation_report(mix, 42e-6, 2.0, 1e-27, kPaper);
    CHECK_FALSE(r.pairs[0].resolvable);
    CHECK_FALSE(r.pairs[0].t_required.has_value());
  }
  SUBCASE("errors") {
    const MixtureMember one[] = {member("Li-7")};
    CHECK_THROWS_AS(separation_report(one, 1e-5, 2.0, 1e-28, kPaper), DomainError);
    const MixtureMember two[] = {member("Li-7"), member("C-12")};
    CHECK_THROWS_AS(separation_report(two, 1e-5, 0.0, 1e-28, kPaper), DomainError);
    CHECK_THROWS_AS(separation_report(two, 1e-5, 2.0, 0.0, kPaper), DomainError);
  }
}

TEST_CASE("speed ladder across element groups") {
  // Tabulated rows grouped by the periodic-table ranges H-He, Li-F, Ne-Ar, K-Kr, Rb-Xe, Cs-Rn, Fr-U.
  const std::vector<std::vector<const char*>> groups = {
      {"Li-7", "C-12"},
      {"Ne-20", "Mg-24", "Mg-25", "Mg-26", "Si-28"},
      {"Ca-40", "Ti-48", "Fe-56", "Co-59", "Ga-69"},
      {"Rb-85", "Rb-87", "Sr-87", "Nb-93", "Ag-107", "Cd-114", "In-115"},
      {"Cs-133", "Eu-153", "Yb-173", "Au-197"},
      {"U-238"},
  };
  double prev_max = INFINITY;
  double prev_mean = INFINITY;
  for (const auto& g : groups) {
    double max = 0.0;
    double sum = 0.0;
    for (const char* name : g) {
      max = std::max(max, speed(name));
      sum += speed(name);
    }
    const double mean = sum / static_cast<double>(g.size());
    CHECK(max < prev_max);
    CHECK(mean < prev_mean);
    prev_max = max;
    prev_mean = mean;
  }
  CHECK(speed("Li-7") > speed("Ne-20"));
  CHECK(speed("Ne-20") > speed("U-238"));
  // Heavy atoms on short wavelengths can outrun lighter ones.
  CHECK(speed("Cd-114") > speed("Ga-69"));
  CHECK(speed("Sr-87") > speed("Rb-87"));
  CHECK(speed("Cd-114") > speed("In-115"));
}
