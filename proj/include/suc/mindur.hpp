#pragma once

#include <cassert>
#include <cstdint>

namespace suc {

/// Time duration in discrete steps. All durations in the model are
/// non-negative integers.
using Duration = std::int32_t;

/// Resource tracking minimum dwell times in a layer (or a mode).
///
/// A value summarizes what happens along an arc or a path:
///  - stay(a): no change occurred, a time steps spent in the current layer;
///  - change(x, y): at least one change occurred, x steps were spent in the
///    first layer seen and y steps in the last one;
///  - infeasible(): some dwell between two changes was shorter than the
///    minimum.
///
/// The minimum dwell tau_min is not stored in the element; it parameterizes
/// the sum (see oplus). The same type therefore serves both the layer and
/// the mode component.
class MinDurResource {
public:
  enum class Kind : std::uint8_t { Stay, Change, Infeasible };

  /// Neutral element stay(0).
  constexpr MinDurResource() : kind_(Kind::Stay), x_(0), y_(0) {}

  static constexpr MinDurResource stay(Duration a) {
    assert(a >= 0);
    return MinDurResource(Kind::Stay, a, 0);
  }
  static constexpr MinDurResource change(Duration x, Duration y) {
    assert(x >= 0 && y >= 0);
    return MinDurResource(Kind::Change, x, y);
  }
  static constexpr MinDurResource infeasible() {
    return MinDurResource(Kind::Infeasible, 0, 0);
  }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_stay() const { return kind_ == Kind::Stay; }
  constexpr bool is_change() const { return kind_ == Kind::Change; }
  constexpr bool is_infeasible() const { return kind_ == Kind::Infeasible; }

  constexpr Duration stay_duration() const {
    assert(is_stay());
    return x_;
  }
  /// Dwell in the first layer seen (Change only).
  constexpr Duration first_dwell() const {
    assert(is_change());
    return x_;
  }
  /// Dwell in the last layer seen (Change only).
  constexpr Duration last_dwell() const {
    assert(is_change());
    return y_;
  }

  friend constexpr bool operator==(const MinDurResource&,
                                   const MinDurResource&) = default;

private:
  constexpr MinDurResource(Kind k, Duration x, Duration y)
      : kind_(k), x_(x), y_(y) {}

  Kind kind_;
  Duration x_;
  Duration y_;
};

/// Monoid sum. Non-commutative; stay(0) is neutral, infeasible() absorbing.
/// Two consecutive changes with a combined in-between dwell below tau_min
/// yield infeasible().
MinDurResource oplus(const MinDurResource& a, const MinDurResource& b,
                     Duration tau_min);

/// Partial order. Longer dwells compare smaller (they leave more slack);
/// infeasible() is the top element and compares equal only to itself.
bool leq(const MinDurResource& a, const MinDurResource& b);

/// Greatest lower bound under leq.
MinDurResource meet(const MinDurResource& a, const MinDurResource& b);

/// Infeasibility indicator: 1 iff the element is infeasible().
int rho(const MinDurResource& a);

} // namespace suc
