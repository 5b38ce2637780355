#include "suc/resource.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace suc {

FullResource oplus(const FullResource& a, const FullResource& b,
                   const TauParams& taus) {
  assert(a.startups >= 0 && b.startups >= 0);
  assert(a.layer_changes >= 0 && b.layer_changes >= 0);
  assert(a.deep >= 0 && b.deep >= 0);
  FullResource r;
  r.lay = oplus(a.lay, b.lay, taus.lay);
  r.mod = oplus(a.mod, b.mod, taus.mod);
  r.startups = a.startups + b.startups;
  r.layer_changes = a.layer_changes + b.layer_changes;
  r.deep = a.deep + b.deep;
  r.cost = a.cost + b.cost;
  return r;
}

bool leq(const FullResource& a, const FullResource& b) {
  return a.cost <= b.cost && a.startups <= b.startups &&
         a.layer_changes <= b.layer_changes && a.deep <= b.deep &&
         leq(a.lay, b.lay) && leq(a.mod, b.mod);
}

FullResource meet(const FullResource& a, const FullResource& b) {
  FullResource r;
  r.lay = meet(a.lay, b.lay);
  r.mod = meet(a.mod, b.mod);
  r.startups = std::min(a.startups, b.startups);
  r.layer_changes = std::min(a.layer_changes, b.layer_changes);
  r.deep = std::min(a.deep, b.deep);
  r.cost = std::min(a.cost, b.cost);
  return r;
}

int rho(const FullResource& r, const Limits& limits) {
  if (rho(r.lay) != 0 || rho(r.mod) != 0) return 1;
  if (r.startups > limits.max_startups) return 1;
  if (r.layer_changes > limits.max_layer_changes) return 1;
  if (r.deep > limits.max_deep) return 1;
  return 0;
}

FullResource no_path_bound() {
  FullResource r;
  r.lay = MinDurResource::infeasible();
  r.mod = MinDurResource::infeasible();
  r.startups = kNoPathCount;
  r.layer_changes = kNoPathCount;
  r.deep = kNoPathCount;
  r.cost = std::numeric_limits<double>::infinity();
  return r;
}

} // namespace suc
