#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "istn/fading.hpp"
#include "istn/geometry.hpp"

namespace istn {

enum class Tier : int { Ground = 0, Air = 1, Space = 2 };

inline constexpr std::array<Tier, 3> kTiers = {Tier::Ground, Tier::Air, Tier::Space};

const char* tier_name(Tier t);

// Per-tier OFDMA constants. Tiers use disjoint spectrum, so there is no
// cross-tier interference anywhere in the model.
struct TierParams {
  double carrier_hz = 0.0;
  double rb_bandwidth_hz = 0.0;
  int rb_count = 0;
  double peak_power_w = 0.0;
};

struct SubareaRect {
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;  // meters
  double fraction = 0.0;                  // share of users dropped here
  // The remainder subarea samples inside its rectangle but outside all
  // non-remainder rectangles.
  bool remainder = false;
};

struct TbsGridSpec {
  int rows = 3;
  int cols = 3;
  int subarea = 0;          // index into SubareaLayout::subareas
  double height_m = 25.0;   // antenna height
};

struct SubareaLayout {
  double area_side_m = 180e3;
  std::vector<SubareaRect> subareas;
  TbsGridSpec tbs_grid;
};

// The paper's layout: two 30 km boxes (one with the TBS grid) and the rest of
// a 180 km square, with a 0.40/0.30/0.30 user split.
SubareaLayout default_layout();

// Throws std::invalid_argument naming the offending field.
void validate(const SubareaLayout& layout);

// Largest-remainder apportionment of `total` over `fractions`; sums exactly.
std::vector<int> apportion_largest_remainder(int total, const std::vector<double>& fractions);

struct Scenario {
  std::vector<Position3D> users;
  std::vector<Position3D> tbs;
  std::vector<Position3D> haps;
  Position3D satellite;
  std::vector<Position3D> gateways;

  std::array<TierParams, 3> tiers;  // indexed by Tier

  // Back-haul constants. Station 0 is the satellite, 1..W the gateways.
  double bh_bandwidth_hz = 4e6;
  double bh_power_w = 40.0;
  double bh_carrier_hz = 3.4e9;
  std::vector<int> bh_capacity;  // size W+1, [0] = satellite

  double noise_psd_w_hz = 0.0;      // thermal noise power spectral density
  double attenuation_factor = 2.0;  // chi

  std::array<FadingModel, 3> fh_fading;  // per tier
  FadingModel bh_fading = RicianFading{10.0};

  // Model geometry used by the solvers, not by the channel itself.
  double tbs_cell_radius_m = 1000.0;
  double center_fraction = 0.8;          // center/edge threshold as a cell-radius multiple
  double hap_coverage_radius_m = 30e3;
  double area_side_m = 180e3;

  uint64_t rng_seed = 1;

  int user_count() const { return static_cast<int>(users.size()); }
  int tbs_count() const { return static_cast<int>(tbs.size()); }
  int hap_count() const { return static_cast<int>(haps.size()); }
  int gateway_count() const { return static_cast<int>(gateways.size()); }

  int station_count(Tier t) const {
    switch (t) {
      case Tier::Ground: return tbs_count();
      case Tier::Air: return hap_count();
      case Tier::Space: return 1;
    }
    return 0;
  }

  const Position3D& station_position(Tier t, int s) const {
    switch (t) {
      case Tier::Ground: return tbs[static_cast<size_t>(s)];
      case Tier::Air: return haps[static_cast<size_t>(s)];
      case Tier::Space: return satellite;
    }
    return satellite;
  }

  const TierParams& tier(Tier t) const { return tiers[static_cast<size_t>(t)]; }

  // Number of back-haul stations including the satellite.
  int bh_station_count() const { return gateway_count() + 1; }

  const Position3D& bh_station_position(int w) const {
    return w == 0 ? satellite : gateways[static_cast<size_t>(w - 1)];
  }

  double uniform_power(Tier t) const {
    const TierParams& p = tier(t);
    return p.rb_count > 0 ? p.peak_power_w / p.rb_count : 0.0;
  }
};

void validate(const Scenario& sc);

struct ScenarioCounts {
  int users = 0;
  int tbs = 9;
  int haps = 5;
  int gateways = 4;
};

// Drops users per subarea (largest-remainder split), places the TBS grid,
// the default HAP/satellite/gateway geometry, and fills Table-style constants
// with their defaults. Same seed, same scenario, bit for bit.
Scenario generate_scenario(const SubareaLayout& layout, const ScenarioCounts& counts,
                           uint64_t seed);

}  // namespace istn
