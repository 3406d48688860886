#pragma once

#include <stdexcept>
#include <variant>

#include "istn/rng.hpp"

namespace istn {

// Small-scale fading power distributions. All models are normalized so the
// samplers can be validated against their analytic first moments.
struct RayleighFading {};  // exponential power, unit mean

struct RicianFading {
  double k = 10.0;  // LoS/scatter power ratio, linear
};

struct ShadowedRicianFading {
  double omega0 = 0.372;  // LoS average power
  double omega1 = 0.0129; // half the multipath average power
  double omega2 = 7.64;   // Nakagami shape of the LoS amplitude
};

using FadingModel = std::variant<RayleighFading, RicianFading, ShadowedRicianFading>;

void validate(const FadingModel& model);

// One power-gain draw. Rayleigh and Rician are unit mean; shadowed Rician has
// mean omega0 + 2*omega1.
double sample_fading(const FadingModel& model, RngStream& rng);

// Analytic first moment of the model; placement runs on these instead of draws.
double fading_mean(const FadingModel& model);

}  // namespace istn
