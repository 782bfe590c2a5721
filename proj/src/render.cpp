#include "sperner/render.hpp"

#include <functional>
#include <optional>
#include <sstream>

namespace sperner {

namespace {

constexpr int kCell = 12;
constexpr int kRadius = 4;

using PointColor = std::function<std::optional<Color>(Point)>;

void check_limit(const Region& region, std::uint64_t limit) {
  if (region.area() > limit) throw DomainError("region too large to render");
}

std::string ascii(const Region& region, const PointColor& color) {
  check_limit(region, kAsciiCellLimit);
  std::string out;
  if (region.area() == 0) return out;
  for (Coord y = region.y1 - 1; y >= region.y0; --y) {
    for (Coord x = region.x0; x < region.x1; ++x) {
      const std::optional<Color> c = color({x, y});
      out.push_back(!c ? ' ' : *c == Color::k0 ? '.' : to_char(*c));
    }
    out.push_back('\n');
  }
  return out;
}

const char* fill(Color c) {
  switch (c) {
    case Color::k0:
      return "#ffffff";
    case Color::k1:
      return "#9a9a9a";
    case Color::k2:
      return "#000000";
  }
  return "#ffffff";
}

std::string svg(const Region& region, const PointColor& color, const SvgOverlay& overlay) {
  check_limit(region, kSvgCellLimit);
  const Coord w = region.width();
  const Coord h = region.height();
  // Point (x, y) sits at the centre of its cell; y grows upward.
  auto px = [&](double x) { return (x - static_cast<double>(region.x0)) * kCell + kCell / 2.0; };
  auto py = [&](double y) { return (static_cast<double>(region.y1 - 1) - y) * kCell + kCell / 2.0; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w * kCell
     << "\" height=\"" << h * kCell << "\" viewBox=\"0 0 " << w * kCell << ' ' << h * kCell
     << "\">\n"
     << "<defs><marker id=\"arrow\" markerWidth=\"8\" markerHeight=\"8\" refX=\"6\" refY=\"4\" "
        "orient=\"auto\"><path d=\"M0,0 L8,4 L0,8 z\" fill=\"#d62728\"/></marker></defs>\n";

  if (w > 0 && h > 0) {
    os << "<g id=\"lattice\" stroke=\"#dddddd\" stroke-width=\"1\">\n";
    for (Coord y = region.y1 - 1; y >= region.y0; --y) {
      os << "<line x1=\"" << px(static_cast<double>(region.x0)) << "\" y1=\"" << py(static_cast<double>(y))
         << "\" x2=\"" << px(static_cast<double>(region.x1 - 1)) << "\" y2=\""
         << py(static_cast<double>(y)) << "\"/>\n";
    }
    for (Coord x = region.x0; x < region.x1; ++x) {
      os << "<line x1=\"" << px(static_cast<double>(x)) << "\" y1=\"" << py(static_cast<double>(region.y1 - 1))
         << "\" x2=\"" << px(static_cast<double>(x)) << "\" y2=\"" << py(static_cast<double>(region.y0))
         << "\"/>\n";
    }
    os << "</g>\n<g id=\"points\" stroke=\"#000000\" stroke-width=\"0.75\">\n";
    for (Coord y = region.y1 - 1; y >= region.y0; --y) {
      for (Coord x = region.x0; x < region.x1; ++x) {
        const std::optional<Color> c = color({x, y});
        if (!c) continue;
        os << "<circle cx=\"" << px(static_cast<double>(x)) << "\" cy=\"" << py(static_cast<double>(y))
           << "\" r=\"" << kRadius << "\" fill=\"" << fill(*c) << "\"/>\n";
      }
    }
    os << "</g>\n";
  }

  if (!overlay.boxes.empty()) {
    os << "<g id=\"boxes\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" "
          "stroke-dasharray=\"6,4\">\n";
    for (const Box& b : overlay.boxes) {
      os << "<rect x=\"" << px(static_cast<double>(b.x)) << "\" y=\"" << py(static_cast<double>(b.top()))
         << "\" width=\"" << (b.width - 1) * kCell << "\" height=\"" << (b.height - 1) * kCell
         << "\"/>\n";
    }
    os << "</g>\n";
  }

  if (!overlay.trace.empty()) {
    os << "<polyline id=\"trace\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"2\" "
          "stroke-dasharray=\"5,3\" marker-end=\"url(#arrow)\" points=\"";
    for (std::size_t i = 0; i < overlay.trace.size(); ++i) {
      const Point a = overlay.trace[i].anchor;
      if (i > 0) os << ' ';
      os << px(static_cast<double>(a.x) + 0.5) << ',' << py(static_cast<double>(a.y) + 0.5);
    }
    os << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

PointColor brouwer_color(const BrouwerInstance& inst) {
  return [&inst](Point p) -> std::optional<Color> {
    if (!inst.in_domain(p)) return std::nullopt;
    return inst.color(p);
  };
}

PointColor sperner_color(const SpernerInstance& inst) {
  return [&inst](Point p) -> std::optional<Color> {
    if (!inst.in_domain(p)) return std::nullopt;
    return inst.color(p);
  };
}

}  // namespace

std::string render_ascii(const BrouwerInstance& inst, const Region& region) {
  return ascii(region, brouwer_color(inst));
}

std::string render_ascii(const SpernerInstance& inst, const Region& region) {
  return ascii(region, sperner_color(inst));
}

std::string render_svg(const BrouwerInstance& inst, const Region& region, const SvgOverlay& overlay) {
  return svg(region, brouwer_color(inst), overlay);
}

std::string render_svg(const SpernerInstance& inst, const Region& region, const SvgOverlay& overlay) {
  return svg(region, sperner_color(inst), overlay);
}

}  // namespace sperner
