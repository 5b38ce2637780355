#pragma once

#include "suc/instance.hpp"

#include <cstdint>

namespace suc {

/// Inclusive integer range for generator draws.
struct IntRange {
  int lo = 0;
  int hi = 0;
};

/// Parameters of the synthetic instance generator. Defaults are sized to a
/// two-day horizon of half-hour steps (T = 96) with one offline level and
/// three online layers of three levels (|S| = 10); these figures are
/// assumptions, not values taken from any particular fleet.
struct GeneratorParams {
  int horizon = 96;
  int online_layers = 3;
  int levels_per_layer = 3;

  IntRange layer_change_duration{1, 3};
  IntRange startup_duration{2, 6};
  IntRange shutdown_duration{1, 3};
  IntRange tau_lay{4, 8};
  IntRange tau_mod{8, 16};
  IntRange max_startups{1, 2};
  IntRange max_layer_changes{3, 6};
  IntRange max_deep{2, 4};

  /// Price curve: base + amplitude * sin(2*pi*t/period + phase) + noise.
  double price_base = 50.0;
  double price_amplitude = 30.0;
  double price_noise = 5.0;
  int price_period = 48;

  std::uint64_t seed = 1;
};

/// Throws std::invalid_argument when a range is empty or a size is not
/// positive.
void validate_params(const GeneratorParams& params);

/// Deterministic in params.seed. The result always validates, always
/// contains the self-transitions (s, s, 1), and always admits the stay-put
/// plan at the initial (offline) level at cost 0, so it is never
/// infeasible. Costs are integer-valued so that optimal costs compare
/// exactly.
Instance generate_instance(const GeneratorParams& params);

} // namespace suc
