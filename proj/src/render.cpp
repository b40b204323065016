#include "linkred/render.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "linkred/error.hpp"

namespace linkred {

namespace {

constexpr double kColumn = 40.0;   // horizontal spacing of positions
constexpr double kRow = 36.0;      // height of one letter
constexpr double kArcStep = 14.0;  // spacing between nested closure arcs
constexpr double kMargin = 20.0;
constexpr double kGap = 0.22;      // fraction of an under-segment hidden on each side of the centre

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

const std::vector<std::string>& palette() {
  static const std::vector<std::string> colors{
      "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b",
      "#e377c2", "#17becf", "#bcbd22", "#7f7f7f", "#393b79", "#637939"};
  return colors;
}

ClosureLayout layout_closure(const BraidWord& w) {
  const int n = w.strands();
  const int rows = static_cast<int>(w.length());
  ClosureLayout out;
  out.strands = n;
  out.rows = rows;

  std::vector<int> component(n + 1);
  const auto cycles = permutation_of(w).cycles();
  out.components = static_cast<int>(cycles.size());
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    for (int s : cycles[c]) component[s] = static_cast<int>(c) + 1;
  }
  for (int c = 0; c < out.components; ++c) out.colors.push_back(palette()[c % palette().size()]);

  const double arc_room = kArcStep * (n + 1);
  const double box_height = std::max(rows, 1) * kRow;
  const double top = kMargin + arc_room;
  const double bottom = top + box_height;
  const double row_height = box_height / std::max(rows, 1);
  auto x_of = [&](int position) { return kMargin + (position - 1) * kColumn; };
  auto y_of = [&](int boundary) { return bottom - boundary * row_height; };  // boundary 0 = bottom
  out.width = x_of(n) + arc_room + kMargin;
  out.height = bottom + arc_room + kMargin;

  std::vector<int> occupant(n);
  std::iota(occupant.begin(), occupant.end(), 1);
  if (rows == 0) {
    for (int p = 1; p <= n; ++p) {
      out.segments.push_back({component[p], p, {x_of(p), y_of(1)}, {x_of(p), y_of(0)}, -1, false});
    }
  }
  for (int t = 0; t < rows; ++t) {
    const int letter = w.letters()[t];
    const int left = std::abs(letter);
    for (int p = 1; p <= n; ++p) {
      if (p == left || p == left + 1) continue;
      const int s = occupant[p - 1];
      out.segments.push_back({component[s], s, {x_of(p), y_of(t)}, {x_of(p), y_of(t + 1)}, -1, false});
    }
    const int a = occupant[left - 1], b = occupant[left];
    const Point a0{x_of(left), y_of(t)}, a1{x_of(left + 1), y_of(t + 1)};
    const Point b0{x_of(left + 1), y_of(t)}, b1{x_of(left), y_of(t + 1)};
    const bool a_over = letter > 0;
    const int over = a_over ? a : b, under = a_over ? b : a;
    const Point o0 = a_over ? a0 : b0, o1 = a_over ? a1 : b1;
    const Point u0 = a_over ? b0 : a0, u1 = a_over ? b1 : a1;
    out.segments.push_back({component[over], over, o0, o1, t, false});
    const Point mid{(u0.x + u1.x) / 2, (u0.y + u1.y) / 2};
    const Point cut0{mid.x - (mid.x - u0.x) * kGap * 2, mid.y - (mid.y - u0.y) * kGap * 2};
    const Point cut1{mid.x + (u1.x - mid.x) * kGap * 2, mid.y + (u1.y - mid.y) * kGap * 2};
    out.segments.push_back({component[under], under, u0, cut0, t, true});
    out.segments.push_back({component[under], under, cut1, u1, t, true});
    std::swap(occupant[left - 1], occupant[left]);
  }

  // occupant now holds the strand arriving at each top position; its arc
  // returns to the bottom of the same position.
  const double right = x_of(n);
  for (int p = 1; p <= n; ++p) {
    LayoutArc arc;
    arc.position = p;
    arc.depth = n - p;
    arc.component = component[occupant[p - 1]];
    const double reach = (arc.depth + 1) * kArcStep;
    const double y_top = y_of(std::max(rows, 1)), y_bottom = y_of(0);
    arc.path = {{x_of(p), y_top},
                {x_of(p), y_top - reach},
                {right + reach, y_top - reach},
                {right + reach, y_bottom + reach},
                {x_of(p), y_bottom + reach},
                {x_of(p), y_bottom}};
    arc.arrow_at = {right + reach, (y_top + y_bottom) / 2};
    out.arcs.push_back(std::move(arc));
  }
  return out;
}

std::string to_svg(const ClosureLayout& layout, const RenderOptions& options) {
  for (int c : options.highlight) {
    if (c < 1 || c > layout.components) {
      throw Error(ErrorCode::UnknownComponent, "highlight " + std::to_string(c) + " outside 1.." +
                                                   std::to_string(layout.components));
    }
  }
  const double s = options.scale > 0 ? options.scale : 1.0;
  auto lit = [&](int component) {
    return options.highlight.empty() ||
           std::find(options.highlight.begin(), options.highlight.end(), component) !=
               options.highlight.end();
  };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(layout.width * s)
      << "\" height=\"" << num(layout.height * s) << "\" viewBox=\"0 0 " << num(layout.width) << ' '
      << num(layout.height) << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  for (int c = 1; c <= layout.components; ++c) {
    svg << "<g id=\"component-" << c << "\" class=\"component" << (lit(c) ? "" : " dimmed")
        << "\" stroke=\"" << layout.colors[c - 1] << "\" fill=\"none\" stroke-width=\"3\""
        << " stroke-linecap=\"round\" opacity=\"" << (lit(c) ? "1" : "0.25") << "\">\n";
    for (const auto& seg : layout.segments) {
      if (seg.component != c) continue;
      svg << "<line class=\"" << (seg.under ? "under" : "strand") << "\"";
      if (seg.crossing >= 0) svg << " data-crossing=\"" << seg.crossing << "\"";
      svg << " x1=\"" << num(seg.from.x) << "\" y1=\"" << num(seg.from.y) << "\" x2=\""
          << num(seg.to.x) << "\" y2=\"" << num(seg.to.y) << "\"/>\n";
    }
    for (const auto& arc : layout.arcs) {
      if (arc.component != c) continue;
      svg << "<path class=\"arc\" data-position=\"" << arc.position << "\" d=\"M";
      for (std::size_t i = 0; i < arc.path.size(); ++i) {
        svg << (i ? " L" : "") << num(arc.path[i].x) << ' ' << num(arc.path[i].y);
      }
      svg << "\"/>\n";
      if (options.show_orientation) {
        const Point a = arc.arrow_at;
        svg << "<path class=\"arrow\" fill=\"" << layout.colors[c - 1] << "\" stroke=\"none\" d=\"M"
            << num(a.x - 5) << ' ' << num(a.y - 4) << " L" << num(a.x + 5) << ' ' << num(a.y - 4)
            << " L" << num(a.x) << ' ' << num(a.y + 5) << " Z\"/>\n";
      }
    }
    svg << "</g>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace linkred
