#include "suc/mindur.hpp"

#include <algorithm>

namespace suc {

MinDurResource oplus(const MinDurResource& a, const MinDurResource& b,
                     Duration tau_min) {
  if (a.is_infeasible() || b.is_infeasible()) {
    return MinDurResource::infeasible();
  }
  if (a.is_stay() && b.is_stay()) {
    return MinDurResource::stay(a.stay_duration() + b.stay_duration());
  }
  if (a.is_stay()) {
    return MinDurResource::change(a.stay_duration() + b.first_dwell(),
                                  b.last_dwell());
  }
  if (b.is_stay()) {
    return MinDurResource::change(a.first_dwell(),
                                  a.last_dwell() + b.stay_duration());
  }
  // Two changes: the dwell in the layer in-between must reach tau_min.
  if (a.last_dwell() + b.first_dwell() < tau_min) {
    return MinDurResource::infeasible();
  }
  return MinDurResource::change(a.first_dwell(), b.last_dwell());
}

bool leq(const MinDurResource& a, const MinDurResource& b) {
  if (a.is_infeasible()) return b.is_infeasible();
  if (b.is_infeasible()) return true;
  if (a.is_stay()) {
    if (b.is_stay()) return a.stay_duration() >= b.stay_duration();
    return a.stay_duration() >= b.first_dwell() &&
           a.stay_duration() >= b.last_dwell();
  }
  if (b.is_stay()) return false;
  return a.first_dwell() >= b.first_dwell() &&
         a.last_dwell() >= b.last_dwell();
}

MinDurResource meet(const MinDurResource& a, const MinDurResource& b) {
  if (a.is_infeasible()) return b;
  if (b.is_infeasible()) return a;
  if (a.is_stay() && b.is_stay()) {
    return MinDurResource::stay(std::max(a.stay_duration(), b.stay_duration()));
  }
  if (a.is_stay()) {
    return MinDurResource::stay(
        std::max({a.stay_duration(), b.first_dwell(), b.last_dwell()}));
  }
  if (b.is_stay()) {
    return MinDurResource::stay(
        std::max({b.stay_duration(), a.first_dwell(), a.last_dwell()}));
  }
  return MinDurResource::change(std::max(a.first_dwell(), b.first_dwell()),
                                std::max(a.last_dwell(), b.last_dwell()));
}

int rho(const MinDurResource& a) { return a.is_infeasible() ? 1 : 0; }

} // namespace suc
