#pragma once

#include "suc/model.hpp"
#include "suc/solver.hpp"

#include <span>
#include <string>

namespace suc {

/// Renders the explored search space as an SVG 1.1 document: the x-axis is
/// the time horizon, the y-axis the power levels. Arcs extended once are
/// gray, arcs shared by several partial paths are black, and the optimal
/// path (when given) is drawn on top in red.
std::string render_search_svg(const Instance& inst, const SucGraph& sg,
                              std::span<const std::int64_t> arc_extensions,
                              const Solution* best);

} // namespace suc
