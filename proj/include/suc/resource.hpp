#pragma once

#include "suc/mindur.hpp"

#include <cstdint>

namespace suc {

/// Transition counter (startups, layer changes, deep transitions).
using Count = std::int32_t;

/// Minimum dwell parameters for the two monoid components.
struct TauParams {
  Duration lay = 0;
  Duration mod = 0;

  friend constexpr bool operator==(const TauParams&, const TauParams&) = default;
};

/// Upper limits on the transition counters.
struct Limits {
  Count max_startups = 0;
  Count max_layer_changes = 0;
  Count max_deep = 0;

  friend constexpr bool operator==(const Limits&, const Limits&) = default;
};

/// Product resource carried by every arc and path: the layer and mode
/// minimum-dwell components, the three transition counters and the
/// accumulated cost. Sum and order are componentwise.
struct FullResource {
  MinDurResource lay{};
  MinDurResource mod{};
  Count startups = 0;
  Count layer_changes = 0;
  Count deep = 0;
  double cost = 0.0;

  friend constexpr bool operator==(const FullResource&,
                                   const FullResource&) = default;
};

/// Counter value used by the no-path sentinel bound. Large enough to exceed
/// any limit, small enough that sums never overflow a Count.
inline constexpr Count kNoPathCount = Count{1} << 30;

FullResource oplus(const FullResource& a, const FullResource& b,
                   const TauParams& taus);
bool leq(const FullResource& a, const FullResource& b);
FullResource meet(const FullResource& a, const FullResource& b);

/// 1 iff some component is infeasible or some counter exceeds its limit.
int rho(const FullResource& r, const Limits& limits);

inline double cost_of(const FullResource& r) { return r.cost; }

/// Bound assigned to vertices with no path to the destination: the top of
/// the lattice. It is neutral under meet and fails every feasibility test.
FullResource no_path_bound();

} // namespace suc
