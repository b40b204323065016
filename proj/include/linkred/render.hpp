#pragma once

#include <string>
#include <vector>

#include "linkred/braid.hpp"
#include "linkred/graph.hpp"

namespace linkred {

struct Point {
  double x = 0;
  double y = 0;
};

/// Straight piece of a strand inside the braid box. The under-strand at a
/// crossing is split in two pieces that leave a gap around the over-strand;
/// both pieces carry the crossing's index.
struct LayoutSegment {
  int component = 0;
  int strand = 0;  // starting strand
  Point from, to;
  int crossing = -1;
  bool under = false;
};

/// Closure arc from the top of `position` round the right side to its bottom.
struct LayoutArc {
  int position = 0;
  int component = 0;
  int depth = 0;  // n - position; deeper arcs enclose shallower ones
  std::vector<Point> path;
  Point arrow_at;  // midpoint of the outer vertical run, flow pointing down
};

/// Geometry of the closure of a braid word. Letters are stacked bottom to
/// top in word order with strands flowing upward; positions run left to
/// right.
struct ClosureLayout {
  int strands = 0;
  int rows = 0;
  int components = 0;
  double width = 0;
  double height = 0;
  std::vector<LayoutSegment> segments;
  std::vector<LayoutArc> arcs;
  std::vector<std::string> colors;  // per component, 1-based index - 1
};

ClosureLayout layout_closure(const BraidWord& w);

struct RenderOptions {
  /// Components drawn at full opacity; empty means all of them.
  std::vector<int> highlight;
  bool show_orientation = true;
  double scale = 1.0;
};

/// Standalone SVG 1.1. Pure function of its inputs. Throws UnknownComponent
/// for a highlight outside 1..components.
std::string to_svg(const ClosureLayout& layout, const RenderOptions& options = {});

/// Fixed palette, cycled by component index.
const std::vector<std::string>& palette();

}  // namespace linkred
