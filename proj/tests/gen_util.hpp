// Shared randomized generators for the test suites.
#pragma once

#include "suc/generator.hpp"
#include "suc/instance.hpp"
#include "suc/resource.hpp"
#include "suc/rng.hpp"

#include <vector>

namespace suc::testgen {

inline MinDurResource random_mindur(Rng& rng, Duration max_dur = 12) {
  switch (rng.uniform_int(0, 2)) {
    case 0:
      return MinDurResource::stay(
          static_cast<Duration>(rng.uniform_int(0, max_dur)));
    case 1:
      return MinDurResource::change(
          static_cast<Duration>(rng.uniform_int(0, max_dur)),
          static_cast<Duration>(rng.uniform_int(0, max_dur)));
    default:
      return MinDurResource::infeasible();
  }
}

inline FullResource random_resource(Rng& rng, Duration max_dur = 12) {
  FullResource r;
  r.lay = random_mindur(rng, max_dur);
  r.mod = random_mindur(rng, max_dur);
  r.startups = static_cast<Count>(rng.uniform_int(0, 3));
  r.layer_changes = static_cast<Count>(rng.uniform_int(0, 4));
  r.deep = static_cast<Count>(rng.uniform_int(0, 3));
  r.cost = static_cast<double>(rng.uniform_int(-50, 50));
  return r;
}

/// Every element with durations in {0..max_dur}, plus infeasible().
inline std::vector<MinDurResource> mindur_universe(Duration max_dur) {
  std::vector<MinDurResource> u;
  for (Duration a = 0; a <= max_dur; ++a) u.push_back(MinDurResource::stay(a));
  for (Duration x = 0; x <= max_dur; ++x) {
    for (Duration y = 0; y <= max_dur; ++y) {
      u.push_back(MinDurResource::change(x, y));
    }
  }
  u.push_back(MinDurResource::infeasible());
  return u;
}

/// Small-instance generator parameters for oracle-sized tests
/// (T <= 12, |S| <= 5).
inline GeneratorParams small_params(std::uint64_t seed) {
  Rng rng(Rng::derive(seed, 77));
  GeneratorParams p;
  p.horizon = static_cast<int>(rng.uniform_int(4, 12));
  p.online_layers = static_cast<int>(rng.uniform_int(1, 2));
  p.levels_per_layer = static_cast<int>(rng.uniform_int(1, 2));
  p.layer_change_duration = {1, 2};
  p.startup_duration = {1, 3};
  p.shutdown_duration = {1, 2};
  p.tau_lay = {1, 3};
  p.tau_mod = {1, 4};
  p.max_startups = {0, 2};
  p.max_layer_changes = {0, 3};
  p.max_deep = {0, 2};
  p.price_base = 20.0;
  p.price_amplitude = 10.0;
  p.price_noise = 4.0;
  p.price_period = 8;
  p.seed = seed;
  return p;
}

} // namespace suc::testgen
