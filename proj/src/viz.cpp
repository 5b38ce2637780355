#include "suc/viz.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace suc {

namespace {

std::string fmt1(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", v);
  return buf;
}

} // namespace

std::string render_search_svg(const Instance& inst, const SucGraph& sg,
                              std::span<const std::int64_t> arc_extensions,
                              const Solution* best) {
  const Digraph& g = sg.graph;
  if (arc_extensions.size() != static_cast<std::size_t>(g.arc_count())) {
    throw std::invalid_argument("render_search_svg: trace size mismatch");
  }
  const int T = sg.horizon;
  const int S = sg.level_count;

  // Level rows, offline modes at the bottom, higher layers above.
  std::vector<int> order(static_cast<std::size_t>(S));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const Level& la = inst.levels[static_cast<std::size_t>(a)];
    const Level& lb = inst.levels[static_cast<std::size_t>(b)];
    if (la.mode != lb.mode) return la.mode < lb.mode;
    if (la.layer != lb.layer) return la.layer < lb.layer;
    return la.id < lb.id;
  });
  std::vector<int> row(static_cast<std::size_t>(S));
  for (int r = 0; r < S; ++r) row[static_cast<std::size_t>(order[r])] = r;

  const double width = 1200.0, height = 640.0;
  const double ml = 70.0, mr = 30.0, mt = 30.0, mb = 50.0;
  const double dx = (width - ml - mr) / (T + 1);
  const double dy = S > 1 ? (height - mt - mb) / (S - 1) : 0.0;
  const auto x_of = [&](int t) { return ml + dx * t; };
  const auto y_of_row = [&](int r) { return height - mb - dy * r; };
  const double y_mid = S > 1 ? (mt + (height - mb)) / 2.0 : height - mb;

  const auto point = [&](VertexId v, double& x, double& y) {
    if (v == g.origin()) {
      x = x_of(0);
      y = y_mid;
    } else if (v == g.destination()) {
      x = x_of(T + 1);
      y = y_mid;
    } else {
      x = x_of(sg.time_of(v));
      y = y_of_row(row[static_cast<std::size_t>(sg.level_of(v))]);
    }
  };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << width << "\" height=\"" << height << "\" viewBox=\"0 0 " << width
      << " " << height << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Level gridlines and labels.
  for (int r = 0; r < S; ++r) {
    const double y = y_of_row(r);
    svg << "<line x1=\"" << fmt1(ml) << "\" y1=\"" << fmt1(y) << "\" x2=\""
        << fmt1(width - mr) << "\" y2=\"" << fmt1(y)
        << "\" stroke=\"#eeeeee\" stroke-width=\"1\"/>\n";
    svg << "<text x=\"" << fmt1(ml - 10.0) << "\" y=\"" << fmt1(y + 4.0)
        << "\" text-anchor=\"end\" font-size=\"12\" fill=\"#444444\">s"
        << inst.levels[static_cast<std::size_t>(order[r])].id << "</text>\n";
  }
  const int tick = std::max(1, T / 8);
  for (int t = 0; t <= T + 1; t += tick) {
    svg << "<text x=\"" << fmt1(x_of(t)) << "\" y=\"" << fmt1(height - mb + 24.0)
        << "\" text-anchor=\"middle\" font-size=\"12\" fill=\"#444444\">"
        << t << "</text>\n";
  }

  // Explored arcs: single-use gray first, shared ones black on top.
  const auto emit_arc = [&](ArcId a, const char* color, double w) {
    double x1, y1, x2, y2;
    point(g.arc(a).tail, x1, y1);
    point(g.arc(a).head, x2, y2);
    svg << "<line class=\"arc\" x1=\"" << fmt1(x1) << "\" y1=\"" << fmt1(y1)
        << "\" x2=\"" << fmt1(x2) << "\" y2=\"" << fmt1(y2) << "\" stroke=\""
        << color << "\" stroke-width=\"" << w << "\"/>\n";
  };
  for (ArcId a = 0; a < g.arc_count(); ++a) {
    if (arc_extensions[static_cast<std::size_t>(a)] == 1) {
      emit_arc(a, "#b8b8b8", 1.0);
    }
  }
  for (ArcId a = 0; a < g.arc_count(); ++a) {
    if (arc_extensions[static_cast<std::size_t>(a)] > 1) {
      emit_arc(a, "#000000", 1.2);
    }
  }

  if (best != nullptr) {
    svg << "<polyline class=\"best\" fill=\"none\" stroke=\"#d62728\" "
           "stroke-width=\"2.5\" points=\"";
    bool first = true;
    for (ArcId a : best->arcs) {
      double x1, y1, x2, y2;
      point(g.arc(a).tail, x1, y1);
      point(g.arc(a).head, x2, y2);
      if (first) {
        svg << fmt1(x1) << ',' << fmt1(y1) << ' ';
        first = false;
      }
      svg << fmt1(x2) << ',' << fmt1(y2) << ' ';
    }
    svg << "\"/>\n";
  }

  svg << "</svg>\n";
  return svg.str();
}

} // namespace suc
