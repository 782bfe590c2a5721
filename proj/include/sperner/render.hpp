#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sperner/construction.hpp"
#include "sperner/grid.hpp"

namespace sperner {

inline constexpr std::uint64_t kAsciiCellLimit = 10000;
inline constexpr std::uint64_t kSvgCellLimit = 1000000;

/// One line per row, top row first: '.' for 0, '1', '2'. Sperner points
/// outside the triangle print as ' '. Throws DomainError past kAsciiCellLimit.
std::string render_ascii(const BrouwerInstance& inst, const Region& region);
std::string render_ascii(const SpernerInstance& inst, const Region& region);

struct SvgOverlay {
  /// Walk trace drawn as an arrowed polyline through square centres.
  std::vector<Square> trace;
  /// Dashed rectangles, e.g. structure boxes.
  std::vector<Box> boxes;
};

/// SVG 1.1 document with 12-unit cells: lattice, one circle per grid point
/// (white 0, grey 1, black 2), then boxes, then the trace.
std::string render_svg(const BrouwerInstance& inst, const Region& region,
                       const SvgOverlay& overlay = {});
std::string render_svg(const SpernerInstance& inst, const Region& region,
                       const SvgOverlay& overlay = {});

}  // namespace sperner
