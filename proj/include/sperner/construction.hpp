#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sperner/grid.hpp"
#include "sperner/qbf.hpp"
#include "sperner/walker.hpp"

namespace sperner {

/// Geometry knobs of the gadget layout ("layout v1").
struct LayoutParams {
  Coord leaf_width = 32;   // LW
  Coord leaf_height = 32;  // LH
  Coord margin = 8;        // M
  Coord gap = 8;           // G

  static constexpr Coord kMinLeafSide = 24;
  static constexpr Coord kMinMargin = 7;
  static constexpr Coord kMinGap = 8;

  /// Throws InvalidArgument when a value is below its minimum.
  void validate() const;
  friend bool operator==(const LayoutParams&, const LayoutParams&) = default;
};

inline constexpr const char* kLayoutVersion = "layout v1";

struct Box {
  Coord x = 0;
  Coord y = 0;
  Coord width = 0;
  Coord height = 0;
  bool contains(Point p) const {
    return p.x >= x && p.x < x + width && p.y >= y && p.y < y + height;
  }
  Coord right() const { return x + width - 1; }
  Coord top() const { return y + height - 1; }
  friend bool operator==(const Box&, const Box&) = default;
};

/// A wire end on a box edge: the 1-track cell just inside the box, and the
/// direction the wire travels through it (east or west).
struct Terminal {
  Point at;
  Direction heading = Direction::kRight;
  bool incoming = false;
  friend bool operator==(const Terminal&, const Terminal&) = default;
};

struct StructureLayout {
  Prefix prefix;
  Box box;
  Terminal left_in;
  Terminal yes_out;
  Terminal right_in;
  Terminal no_out;
};

/// Directed axis-aligned lattice path. The 1-track is the path itself; the
/// 2-track runs one cell to the right of the travel direction. Its corners sit at
/// p + right(d_in) + right(d_out), so at a right turn the pinched corner cell is
/// skipped and at a left turn the outer corner cell is included.
class WirePolyline {
 public:
  explicit WirePolyline(std::vector<Point> waypoints, std::string label = {});

  const std::vector<Point>& waypoints() const { return one_; }
  const std::vector<Point>& two_track_waypoints() const { return two_; }
  const std::string& label() const { return label_; }

  /// Direction of segment i (from waypoint i to i+1).
  Direction segment_direction(std::size_t i) const { return dirs_[i]; }
  std::size_t segment_count() const { return dirs_.size(); }

  /// Cells of each track in travel order.
  std::vector<Point> one_track_cells() const;
  std::vector<Point> two_track_cells() const;

  /// Inclusive bounding box of both tracks.
  Box bounds() const { return bounds_; }

  WirePolyline translated(Point delta) const;

 private:
  std::vector<Point> one_;
  std::vector<Point> two_;
  std::vector<Direction> dirs_;
  Box bounds_;
  std::string label_;
};

/// 1 on the 1-track, 2 on the 2-track, nullopt elsewhere. O(#segments).
std::optional<Color> wire_color_at(const WirePolyline& w, Point p);

/// Closed-form sizes of the structure boxes per level (index = |x|).
struct LevelSizes {
  std::vector<Coord> width;
  std::vector<Coord> height;
};
LevelSizes level_sizes(int n, const LayoutParams& params);

/// Side exponent of the Brouwer domain built for an n-variable formula.
int domain_size_param(int n, const LayoutParams& params);

/// The row shared by every structure centre.
Coord center_row(int n, const LayoutParams& params);

StructureLayout layout(const QbfFormula& formula, const Prefix& x, const LayoutParams& params);

/// Wires owned by S(Phi_x): leaf gadget, forall/exists connector, and for the
/// empty prefix additionally the origin wire, the YES/NO stubs and the aux source.
/// Connectors include the terminal cells of the boxes they join.
std::vector<WirePolyline> structure_wires(const QbfFormula& formula, const Prefix& x,
                                          const LayoutParams& params);

struct TerminalSquares {
  Square yes;
  Square no;
  Square aux_source;
};
TerminalSquares terminals(const QbfFormula& formula, const LayoutParams& params);

/// C_Phi as a lazy per-point colouring: boundary, then the deepest structure box
/// containing the point, then that structure's wires. O(n) per query.
BrouwerInstance build_brouwer(const QbfFormula& formula, const LayoutParams& params = {});

/// Independent materialization: paints every wire of every structure plus the
/// boundary into a dense grid. Reports cells painted twice with different colours.
struct Rasterization {
  int m = 0;
  std::vector<Color> cells;  // y-major, side*side
  std::vector<Point> conflicts;
  Color at(Point p) const {
    return cells[static_cast<std::size_t>(p.y * (Coord{1} << m) + p.x)];
  }
};
Rasterization rasterize_full(const QbfFormula& formula, const LayoutParams& params,
                             std::uint64_t max_cells = std::uint64_t{1} << 24);

}  // namespace sperner
