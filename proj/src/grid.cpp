#include "sperner/grid.hpp"

#include <charconv>
#include <sstream>

namespace sperner {

namespace {

// Dense text export is for desk-scale instances only.
constexpr int kMaxExportParam = 12;

void check_size_param(int m) {
  if (m < 1 || m > kMaxSizeParam) {
    throw InvalidArgument("size parameter " + std::to_string(m) + " outside 1.." +
                          std::to_string(kMaxSizeParam));
  }
}

std::string point_str(Point p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

}  // namespace

std::optional<Color> color_from_char(char c) {
  switch (c) {
    case '0':
    case '.':
      return Color::k0;
    case '1':
      return Color::k1;
    case '2':
      return Color::k2;
    default:
      return std::nullopt;
  }
}

Region parse_region(std::string_view text) {
  Coord v[4];
  std::size_t pos = 0;
  for (int i = 0; i < 4; ++i) {
    const std::size_t end = i < 3 ? text.find(',', pos) : text.size();
    if (end == std::string_view::npos) throw ParseError("region must be x0,y0,x1,y1");
    const std::string_view field = text.substr(pos, end - pos);
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v[i]);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
      throw ParseError("bad region coordinate '" + std::string(field) + "'");
    }
    pos = end + 1;
  }
  return Region{v[0], v[1], v[2], v[3]};
}

BrouwerInstance::BrouwerInstance(int m, std::shared_ptr<const Coloring> coloring)
    : m_(m), coloring_(std::move(coloring)) {
  check_size_param(m);
  if (!coloring_) throw InvalidArgument("null colouring");
}

Color BrouwerInstance::color(Point p) const {
  if (!in_domain(p)) throw DomainError("point " + point_str(p) + " outside Brouwer domain");
  return coloring_->color_at(p);
}

SpernerInstance::SpernerInstance(int m, std::shared_ptr<const Coloring> coloring)
    : m_(m), coloring_(std::move(coloring)) {
  check_size_param(m);
  if (!coloring_) throw InvalidArgument("null colouring");
}

bool SpernerInstance::in_domain(const Triangle& t) const {
  for (Point v : t.vertices()) {
    if (!in_domain(v)) return false;
  }
  return true;
}

Color SpernerInstance::color(Point p) const {
  if (!in_domain(p)) throw DomainError("point " + point_str(p) + " outside Sperner domain");
  return coloring_->color_at(p);
}

std::optional<Color> boundary_color_brouwer(int m, Point p) {
  const Coord side = Coord{1} << m;
  if (p.x < 0 || p.y < 0 || p.x >= side || p.y >= side) {
    throw DomainError("point " + point_str(p) + " outside Brouwer domain");
  }
  if (p.x == 0) return Color::k1;
  if (p.y == 0) return Color::k2;
  if (p.x == side - 1 || p.y == side - 1) return Color::k0;
  return std::nullopt;
}

bool sperner_boundary_allows(int m, Point p, Color c) {
  const Coord side = Coord{1} << m;
  if (p.x == 0 && c == Color::k0) return false;
  if (p.y == 0 && c == Color::k1) return false;
  if (p.x + p.y == side - 1 && c == Color::k2) return false;
  return true;
}

bool trichromatic(std::span<const Color> colors) {
  unsigned seen = 0;
  for (Color c : colors) seen |= 1u << static_cast<unsigned>(c);
  return seen == 0b111;
}

bool trichromatic_square(const BrouwerInstance& inst, const Square& s) {
  std::array<Color, 4> colors{};
  const auto vs = s.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) colors[i] = inst.color(vs[i]);
  return trichromatic(colors);
}

bool trichromatic_triangle(const SpernerInstance& inst, const Triangle& t) {
  std::array<Color, 3> colors{};
  const auto vs = t.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) colors[i] = inst.color(vs[i]);
  return trichromatic(colors);
}

DenseColoring::DenseColoring(Coord width, Coord height, std::vector<Color> cells)
    : width_(width), height_(height), cells_(std::move(cells)) {
  if (width < 0 || height < 0 || cells_.size() != static_cast<std::size_t>(width * height)) {
    throw InvalidArgument("dense colouring size mismatch");
  }
}

Color DenseColoring::color_at(Point p) const {
  if (p.x < 0 || p.y < 0 || p.x >= width_ || p.y >= height_) return Color::k0;
  return cells_[static_cast<std::size_t>(p.y * width_ + p.x)];
}

std::string export_dense(const BrouwerInstance& inst) {
  if (inst.size_param() > kMaxExportParam) throw DomainError("instance too large for dense export");
  const Coord side = inst.side();
  std::string out = "brouwer " + std::to_string(inst.size_param()) + "\n";
  out.reserve(out.size() + static_cast<std::size_t>(side * (side + 1)));
  for (Coord y = side - 1; y >= 0; --y) {
    for (Coord x = 0; x < side; ++x) out.push_back(to_char(inst.color({x, y})));
    out.push_back('\n');
  }
  return out;
}

std::string export_dense(const SpernerInstance& inst) {
  if (inst.size_param() > kMaxExportParam) throw DomainError("instance too large for dense export");
  const Coord side = inst.side();
  std::string out = "sperner " + std::to_string(inst.size_param()) + "\n";
  for (Coord y = side - 1; y >= 0; --y) {
    for (Coord x = 0; x + y < side; ++x) out.push_back(to_char(inst.color({x, y})));
    out.push_back('\n');
  }
  return out;
}

BrouwerInstance brouwer_from_rows(int m, const std::vector<std::string>& rows_top_down) {
  check_size_param(m);
  if (m > kMaxExportParam) throw DomainError("dense instance too large");
  const Coord side = Coord{1} << m;
  if (static_cast<Coord>(rows_top_down.size()) != side) {
    throw ParseError("expected " + std::to_string(side) + " rows");
  }
  std::vector<Color> cells(static_cast<std::size_t>(side * side));
  for (Coord r = 0; r < side; ++r) {
    const std::string& row = rows_top_down[static_cast<std::size_t>(r)];
    if (static_cast<Coord>(row.size()) != side) {
      throw ParseError("row " + std::to_string(r) + " has wrong length", static_cast<int>(r) + 2);
    }
    const Coord y = side - 1 - r;
    for (Coord x = 0; x < side; ++x) {
      const auto c = color_from_char(row[static_cast<std::size_t>(x)]);
      if (!c) throw ParseError("bad colour character", static_cast<int>(r) + 2);
      cells[static_cast<std::size_t>(y * side + x)] = *c;
    }
  }
  return BrouwerInstance(m, std::make_shared<DenseColoring>(side, side, std::move(cells)));
}

DenseInstance import_dense(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string kind;
  int m = 0;
  if (!(in >> kind >> m)) throw ParseError("missing dense header", 1);
  if (kind != "brouwer" && kind != "sperner") throw ParseError("unknown dense kind " + kind, 1);
  check_size_param(m);
  if (m > kMaxExportParam) throw DomainError("dense instance too large");
  std::vector<std::string> rows;
  for (std::string row; in >> row;) rows.push_back(row);

  DenseInstance result;
  if (kind == "brouwer") {
    result.brouwer = brouwer_from_rows(m, rows);
    return result;
  }
  const Coord side = Coord{1} << m;
  if (static_cast<Coord>(rows.size()) != side) {
    throw ParseError("expected " + std::to_string(side) + " rows");
  }
  std::vector<Color> cells(static_cast<std::size_t>(side * side), Color::k0);
  for (Coord r = 0; r < side; ++r) {
    const Coord y = side - 1 - r;
    const std::string& row = rows[static_cast<std::size_t>(r)];
    if (static_cast<Coord>(row.size()) != side - y) {
      throw ParseError("sperner row " + std::to_string(r) + " has wrong length",
                       static_cast<int>(r) + 2);
    }
    for (Coord x = 0; x < side - y; ++x) {
      const auto c = color_from_char(row[static_cast<std::size_t>(x)]);
      if (!c) throw ParseError("bad colour character", static_cast<int>(r) + 2);
      cells[static_cast<std::size_t>(y * side + x)] = *c;
    }
  }
  result.sperner = SpernerInstance(m, std::make_shared<DenseColoring>(side, side, std::move(cells)));
  return result;
}

}  // namespace sperner
