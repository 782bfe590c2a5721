#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sperner/error.hpp"

namespace sperner {

using Coord = std::int64_t;

/// Largest supported size parameter; coordinates stay below 2^kMaxSizeParam.
inline constexpr int kMaxSizeParam = 62;

enum class Color : std::uint8_t { k0 = 0, k1 = 1, k2 = 2 };

inline char to_char(Color c) { return static_cast<char>('0' + static_cast<int>(c)); }
std::optional<Color> color_from_char(char c);

struct Point {
  Coord x = 0;
  Coord y = 0;
  friend auto operator<=>(const Point&, const Point&) = default;
  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
};

/// Unit square identified by its lower-left vertex.
struct Square {
  Point anchor;
  friend auto operator<=>(const Square&, const Square&) = default;
  std::array<Point, 4> vertices() const {
    const auto [x, y] = anchor;
    return {Point{x, y}, Point{x + 1, y}, Point{x, y + 1}, Point{x + 1, y + 1}};
  }
};

enum class TriangleKind : std::uint8_t { kLower, kUpper };

/// Triangle of the down-right diagonal triangulation. Lower: (x,y),(x+1,y),(x,y+1).
/// Upper: (x+1,y),(x+1,y+1),(x,y+1). Vertices are listed counter-clockwise.
struct Triangle {
  Point anchor;
  TriangleKind kind = TriangleKind::kLower;
  friend auto operator<=>(const Triangle&, const Triangle&) = default;
  std::array<Point, 3> vertices() const {
    const auto [x, y] = anchor;
    if (kind == TriangleKind::kLower) return {Point{x, y}, Point{x + 1, y}, Point{x, y + 1}};
    return {Point{x + 1, y}, Point{x + 1, y + 1}, Point{x, y + 1}};
  }
};

/// Half-open rectangle [x0, x1) x [y0, y1).
struct Region {
  Coord x0 = 0;
  Coord y0 = 0;
  Coord x1 = 0;
  Coord y1 = 0;
  Coord width() const { return x1 > x0 ? x1 - x0 : 0; }
  Coord height() const { return y1 > y0 ? y1 - y0 : 0; }
  std::uint64_t area() const {
    return static_cast<std::uint64_t>(width()) * static_cast<std::uint64_t>(height());
  }
  bool contains(Point p) const { return p.x >= x0 && p.x < x1 && p.y >= y0 && p.y < y1; }
  friend bool operator==(const Region&, const Region&) = default;
};

Region parse_region(std::string_view text);

/// Pure per-point colouring. Implementations must be deterministic and safe to
/// call concurrently.
class Coloring {
 public:
  virtual ~Coloring() = default;
  virtual Color color_at(Point p) const = 0;
};

/// 2D-discrete-Brouwer instance over [0, 2^m)^2.
class BrouwerInstance {
 public:
  BrouwerInstance(int m, std::shared_ptr<const Coloring> coloring);

  int size_param() const { return m_; }
  Coord side() const { return Coord{1} << m_; }
  bool in_domain(Point p) const { return p.x >= 0 && p.y >= 0 && p.x < side() && p.y < side(); }

  /// Throws DomainError outside [0, 2^m)^2.
  Color color(Point p) const;
  /// Off-grid points read as background 0.
  Color color_or_background(Point p) const { return in_domain(p) ? coloring_->color_at(p) : Color::k0; }
  const std::shared_ptr<const Coloring>& coloring() const { return coloring_; }

 private:
  int m_;
  std::shared_ptr<const Coloring> coloring_;
};

/// Sperner instance over the triangle {x, y >= 0, x + y < 2^m}.
class SpernerInstance {
 public:
  SpernerInstance(int m, std::shared_ptr<const Coloring> coloring);

  int size_param() const { return m_; }
  Coord side() const { return Coord{1} << m_; }
  bool in_domain(Point p) const { return p.x >= 0 && p.y >= 0 && p.x + p.y < side(); }
  bool in_domain(const Triangle& t) const;

  Color color(Point p) const;
  const std::shared_ptr<const Coloring>& coloring() const { return coloring_; }

 private:
  int m_;
  std::shared_ptr<const Coloring> coloring_;
};

/// Colour fixed by the Brouwer boundary condition, or nullopt for interior points.
/// Left column wins over the bottom row, which wins over the top/right edges.
std::optional<Color> boundary_color_brouwer(int m, Point p);

/// Whether colour `c` may sit at `p` under the Sperner boundary restrictions:
/// no 0 on x = 0, no 1 on y = 0, no 2 on x + y = 2^m - 1.
bool sperner_boundary_allows(int m, Point p, Color c);

bool trichromatic(std::span<const Color> colors);
bool trichromatic_square(const BrouwerInstance& inst, const Square& s);
bool trichromatic_triangle(const SpernerInstance& inst, const Triangle& t);

/// Square-grid colouring backed by an explicit array (row-major, y-major).
class DenseColoring final : public Coloring {
 public:
  DenseColoring(Coord width, Coord height, std::vector<Color> cells);
  Color color_at(Point p) const override;
  Coord width() const { return width_; }
  Coord height() const { return height_; }

 private:
  Coord width_;
  Coord height_;
  std::vector<Color> cells_;
};

/// Text export: header "brouwer <m>" or "sperner <m>", then one row per line
/// from the top row down to y = 0. Sperner rows hold only x + y < 2^m.
std::string export_dense(const BrouwerInstance& inst);
std::string export_dense(const SpernerInstance& inst);

/// Parsed dense text; exactly one of the two instances is set.
struct DenseInstance {
  std::optional<BrouwerInstance> brouwer;
  std::optional<SpernerInstance> sperner;
};
DenseInstance import_dense(std::string_view text);

/// Builds a Brouwer instance from rows listed top to bottom (as in the text export).
BrouwerInstance brouwer_from_rows(int m, const std::vector<std::string>& rows_top_down);

}  // namespace sperner
