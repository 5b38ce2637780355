#include "suc/generator.hpp"

#include "suc/rng.hpp"

#include <cassert>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace suc {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("generator params: " + what);
}

void check_range(const IntRange& r, int min_lo, const char* name) {
  require(r.lo <= r.hi, std::string(name) + " range is empty");
  require(r.lo >= min_lo, std::string(name) + " range below " +
                              std::to_string(min_lo));
}

int draw(Rng& rng, const IntRange& r) {
  return static_cast<int>(rng.uniform_int(r.lo, r.hi));
}

int draw_duration(Rng& rng, const IntRange& r, int horizon) {
  // Durations must fit a plan, i.e. lie in [1, horizon-1].
  return std::min(draw(rng, r), horizon - 1);
}

} // namespace

void validate_params(const GeneratorParams& p) {
  require(p.horizon >= 2, "horizon must be at least 2");
  require(p.online_layers >= 1, "online_layers must be positive");
  require(p.levels_per_layer >= 1, "levels_per_layer must be positive");
  check_range(p.layer_change_duration, 1, "layer_change_duration");
  check_range(p.startup_duration, 1, "startup_duration");
  check_range(p.shutdown_duration, 1, "shutdown_duration");
  check_range(p.tau_lay, 0, "tau_lay");
  check_range(p.tau_mod, 0, "tau_mod");
  check_range(p.max_startups, 0, "max_startups");
  check_range(p.max_layer_changes, 0, "max_layer_changes");
  check_range(p.max_deep, 0, "max_deep");
  require(p.price_period >= 1, "price_period must be positive");
  require(p.price_noise >= 0.0, "price_noise must be non-negative");
}

Instance generate_instance(const GeneratorParams& p) {
  validate_params(p);
  Rng rng(p.seed);
  const int T = p.horizon;
  const int L = p.online_layers;
  const int K = p.levels_per_layer;

  Instance inst;
  inst.horizon = T;

  // Level 0 is the offline level; online layers are 1..L with K levels each.
  inst.levels.push_back(Level{0, 0, 0, 0.0});
  std::vector<double> power{0.0};
  const auto online_id = [&](int layer, int j) {
    return 1 + (layer - 1) * K + j;
  };
  for (int layer = 1; layer <= L; ++layer) {
    for (int j = 0; j < K; ++j) {
      inst.levels.push_back(Level{online_id(layer, j), layer, 1, 0.0});
      power.push_back(40.0 * layer + 8.0 * j);
    }
  }

  int next_id = 0;
  const auto add_transition = [&](int from, int to, Duration tau, bool startup,
                                  bool layer_change, bool deep) {
    inst.transitions.push_back(
        Transition{next_id++, from, to, tau, startup, layer_change, deep});
  };

  for (const Level& s : inst.levels) {
    add_transition(s.id, s.id, 1, false, false, false);
  }
  for (int layer = 1; layer <= L; ++layer) {
    for (int j = 0; j + 1 < K; ++j) {
      add_transition(online_id(layer, j), online_id(layer, j + 1), 1, false,
                     false, false);
      add_transition(online_id(layer, j + 1), online_id(layer, j), 1, false,
                     false, false);
    }
  }
  for (int layer = 1; layer + 1 <= L; ++layer) {
    add_transition(online_id(layer, K - 1), online_id(layer + 1, 0),
                   draw_duration(rng, p.layer_change_duration, T), false, true,
                   false);
    add_transition(online_id(layer + 1, 0), online_id(layer, K - 1),
                   draw_duration(rng, p.layer_change_duration, T), false, true,
                   true);
  }
  add_transition(0, online_id(1, 0), draw_duration(rng, p.startup_duration, T),
                 true, true, false);
  add_transition(online_id(1, 0), 0,
                 draw_duration(rng, p.shutdown_duration, T), false, true, true);

  inst.tau_lay = draw(rng, p.tau_lay);
  inst.tau_mod = draw(rng, p.tau_mod);
  inst.tau_init_lay = static_cast<Duration>(rng.uniform_int(0, inst.tau_lay));
  inst.tau_init_mod = static_cast<Duration>(rng.uniform_int(0, inst.tau_mod));
  inst.limits.max_startups = draw(rng, p.max_startups);
  inst.limits.max_layer_changes = draw(rng, p.max_layer_changes);
  inst.limits.max_deep = draw(rng, p.max_deep);
  inst.initial_level = 0;

  // Hourly-cycle electricity price plus noise; costs are the production
  // margin at the destination level, rounded so they stay integral.
  const double phase = rng.uniform_real(0.0, 2.0 * std::numbers::pi);
  std::vector<double> price(static_cast<std::size_t>(T) + 1, 0.0);
  for (int t = 1; t <= T; ++t) {
    price[static_cast<std::size_t>(t)] =
        p.price_base +
        p.price_amplitude *
            std::sin(2.0 * std::numbers::pi * (t - 1) / p.price_period +
                     phase) +
        p.price_noise * rng.uniform_real(-1.0, 1.0);
  }
  const double marginal = 0.6 * p.price_base;
  const double startup_fee = static_cast<double>(rng.uniform_int(300, 800));
  const double shutdown_fee = static_cast<double>(rng.uniform_int(20, 80));

  inst.costs.assign(inst.transitions.size() * static_cast<std::size_t>(T),
                    std::numeric_limits<double>::quiet_NaN());
  for (std::size_t a = 0; a < inst.transitions.size(); ++a) {
    const Transition& tr = inst.transitions[a];
    const double dest_power =
        power[static_cast<std::size_t>(inst.level_index(tr.to))];
    for (int t = 1; t + tr.tau <= T; ++t) {
      double value = 0.0;
      for (int u = t; u < t + tr.tau; ++u) {
        value += (marginal - price[static_cast<std::size_t>(u)]) * dest_power /
                 100.0;
      }
      if (tr.startup) value += startup_fee;
      if (inst.levels[static_cast<std::size_t>(inst.level_index(tr.to))].mode ==
              0 &&
          tr.from != tr.to) {
        value += shutdown_fee;
      }
      inst.set_cost(static_cast<int>(a), t,
                    static_cast<double>(std::llround(value)));
    }
  }

  assert(validate_instance(inst).empty());
  return inst;
}

} // namespace suc
