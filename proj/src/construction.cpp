#include "sperner/construction.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <functional>
#include <limits>

namespace sperner {

namespace {

// Terminal rows relative to the shared centre row.
constexpr Coord kYesOffset = -4;
constexpr Coord kNoOffset = 4;
// YES/NO stubs run this many cells past the root's right edge.
constexpr Coord kStubLength = 4;
// Gap between the aux source and the 0-coloured right border.
constexpr Coord kAuxInset = 2;

constexpr Coord kCoordLimit = Coord{1} << kMaxSizeParam;

Point right_of(Direction d) {
  switch (d) {
    case Direction::kUp:
      return {1, 0};
    case Direction::kRight:
      return {0, -1};
    case Direction::kDown:
      return {-1, 0};
    case Direction::kLeft:
      return {0, 1};
    case Direction::kStart:
      break;
  }
  return {0, 0};
}

Direction direction_between(Point a, Point b) {
  if (a.x == b.x && a.y != b.y) return b.y > a.y ? Direction::kUp : Direction::kDown;
  if (a.y == b.y && a.x != b.x) return b.x > a.x ? Direction::kRight : Direction::kLeft;
  throw InvalidArgument("wire waypoints must differ in exactly one coordinate");
}

bool on_segment(Point a, Point b, Point p) {
  if (a.x == b.x) return p.x == a.x && p.y >= std::min(a.y, b.y) && p.y <= std::max(a.y, b.y);
  return p.y == a.y && p.x >= std::min(a.x, b.x) && p.x <= std::max(a.x, b.x);
}

void append_cells(const std::vector<Point>& pts, std::vector<Point>& out) {
  out.push_back(pts.front());
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const Point step = offset(direction_between(pts[i], pts[i + 1]));
    for (Point p = pts[i]; p != pts[i + 1];) {
      p = p + step;
      out.push_back(p);
    }
  }
}

Coord checked_add(Coord a, Coord b) {
  if (a > kCoordLimit - b) throw DomainError("layout exceeds the coordinate magnitude bound");
  return a + b;
}

// --- gadget geometry ------------------------------------------------------
//
// All gadgets are described by their 1-track waypoints. Terminal rows are
// C-4 (YES out), C (left in / right in) and C+4 (NO out). A connector's wires
// start and end on the terminal cells of the boxes they join.

std::vector<WirePolyline> leaf_wires(bool satisfied, const Box& b, Coord c) {
  const Coord l = b.x;
  const Coord r = b.right();
  const Coord u = l + b.width / 4;
  const Coord v = l + b.width / 2;
  const Coord yes = c + kYesOffset;
  const Coord no = c + kNoOffset;
  if (satisfied) {
    return {WirePolyline({{l, c}, {u, c}, {u, yes}, {r, yes}}, "leaf left_in->yes"),
            WirePolyline({{r, c}, {v, c}, {v, no}, {r, no}}, "leaf right_in->no")};
  }
  return {WirePolyline({{l, c}, {u, c}, {u, no}, {r, no}}, "leaf left_in->no"),
          WirePolyline({{r, c}, {v, c}, {v, yes}, {r, yes}}, "leaf right_in->yes")};
}

std::vector<WirePolyline> connector_wires(Quantifier q, const Box& parent, const Box& c0,
                                          const Box& c1, Coord c) {
  const Coord yes = c + kYesOffset;
  const Coord no = c + kNoOffset;
  const Coord g = c0.x + c0.width;   // first gap column
  const Coord x1 = c1.x;             // child1 left column
  const Coord h = c1.x + c1.width;   // first column right of child1
  const Coord rp = parent.right();
  const Coord above = c0.y + c0.height;  // first row above the children
  const Coord below = c0.y;              // bottom row of the children

  std::vector<WirePolyline> wires;
  wires.emplace_back(std::vector<Point>{{parent.x, c}, {c0.x, c}}, "left_in->child0.left_in");
  if (q == Quantifier::kForall) {
    wires.emplace_back(std::vector<Point>{{g - 1, yes}, {x1 - 2, yes}, {x1 - 2, c}, {x1, c}},
                       "child0.yes->child1.left_in");
    wires.emplace_back(std::vector<Point>{{h - 1, yes}, {rp, yes}}, "child1.yes->yes_out");
    wires.emplace_back(std::vector<Point>{{rp, c}, {h - 1, c}}, "right_in->child1.right_in");
    wires.emplace_back(std::vector<Point>{{h - 1, no},
                                          {h, no},
                                          {h, above + 1},
                                          {g + 4, above + 1},
                                          {g + 4, c},
                                          {g - 1, c}},
                       "child1.no->child0.right_in");
    wires.emplace_back(std::vector<Point>{{g - 1, no},
                                          {g, no},
                                          {g, above + 5},
                                          {h + 4, above + 5},
                                          {h + 4, no},
                                          {rp, no}},
                       "child0.no->no_out");
  } else {
    wires.emplace_back(std::vector<Point>{{g - 1, no}, {x1 - 1, no}, {x1 - 1, c}, {x1, c}},
                       "child0.no->child1.left_in");
    wires.emplace_back(std::vector<Point>{{h - 1, no}, {rp, no}}, "child1.no->no_out");
    wires.emplace_back(std::vector<Point>{{rp, c}, {h - 1, c}}, "right_in->child1.right_in");
    wires.emplace_back(std::vector<Point>{{h - 1, yes},
                                          {h + 1, yes},
                                          {h + 1, below - 3},
                                          {g + 3, below - 3},
                                          {g + 3, c},
                                          {g - 1, c}},
                       "child1.yes->child0.right_in");
    wires.emplace_back(std::vector<Point>{{g - 1, yes},
                                          {g + 1, yes},
                                          {g + 1, below - 5},
                                          {h + 3, below - 5},
                                          {h + 3, yes},
                                          {rp, yes}},
                       "child0.yes->yes_out");
  }
  return wires;
}

std::vector<WirePolyline> root_outer_wires(const Box& root, Coord c, Coord side) {
  const Coord r = root.right();
  return {WirePolyline({{0, 0}, {0, c}, {root.x, c}}, "origin->left_in"),
          WirePolyline({{r, c + kYesOffset}, {r + kStubLength, c + kYesOffset}}, "yes stub"),
          WirePolyline({{r, c + kNoOffset}, {r + kStubLength, c + kNoOffset}}, "no stub"),
          WirePolyline({{side - 1 - kAuxInset, c}, {r, c}}, "aux source->right_in")};
}

Box child_box(const Box& parent, const LevelSizes& sizes, int child_level, bool bit,
              const LayoutParams& params) {
  const Coord w = sizes.width[static_cast<std::size_t>(child_level)];
  const Coord hgt = sizes.height[static_cast<std::size_t>(child_level)];
  const Coord x = parent.x + params.margin + (bit ? w + params.gap : 0);
  return Box{x, parent.y + params.margin, w, hgt};
}

Box root_box(int n, const LayoutParams& params, const LevelSizes& sizes) {
  (void)n;
  return Box{params.margin, params.margin, sizes.width[0], sizes.height[0]};
}

std::optional<Color> first_hit(const std::vector<WirePolyline>& wires, Point p) {
  for (const WirePolyline& w : wires) {
    if (auto c = wire_color_at(w, p)) return c;
  }
  return std::nullopt;
}

// CNF clause as variable bitmasks over the full assignment.
struct MaskClause {
  std::uint64_t pos = 0;
  std::uint64_t neg = 0;
};

class QbfColoring final : public Coloring {
 public:
  QbfColoring(const QbfFormula& formula, const LayoutParams& params)
      : n_(formula.num_vars()),
        params_(params),
        sizes_(level_sizes(n_, params)),
        m_(domain_size_param(n_, params)),
        center_(center_row(n_, params)),
        root_(root_box(n_, params, sizes_)) {
    for (const Clause& clause : formula.matrix()) {
      MaskClause mc;
      for (Literal lit : clause) {
        const std::uint64_t bit = std::uint64_t{1} << (std::abs(lit) - 1);
        (lit > 0 ? mc.pos : mc.neg) |= bit;
      }
      clauses_.push_back(mc);
    }
    // Every box at a level shares its y, so templates only need an x shift.
    connectors_.resize(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
      const Box parent{0, params.margin * (i + 1), sizes_.width[static_cast<std::size_t>(i)],
                       sizes_.height[static_cast<std::size_t>(i)]};
      connectors_[static_cast<std::size_t>(i)] =
          connector_wires(formula.quantifier_at(i), parent,
                          child_box(parent, sizes_, i + 1, false, params),
                          child_box(parent, sizes_, i + 1, true, params), center_);
    }
    const Box leaf{0, params.margin * (n_ + 1), params.leaf_width, params.leaf_height};
    leaves_[0] = leaf_wires(false, leaf, center_);
    leaves_[1] = leaf_wires(true, leaf, center_);
    outer_ = root_outer_wires(root_, center_, Coord{1} << m_);
  }

  int size_param() const { return m_; }

  Color color_at(Point p) const override {
    if (auto b = boundary_color_brouwer(m_, p)) return *b;
    if (!root_.contains(p)) return first_hit(outer_, p).value_or(Color::k0);

    Coord bx = root_.x;
    std::uint64_t assignment = 0;
    for (int i = 0; i < n_; ++i) {
      const auto child = static_cast<std::size_t>(i + 1);
      const Coord w = sizes_.width[child];
      const Coord cy = params_.margin * (i + 2);
      if (p.y >= cy && p.y < cy + sizes_.height[child]) {
        const Coord c0x = bx + params_.margin;
        const Coord c1x = c0x + w + params_.gap;
        if (p.x >= c0x && p.x < c0x + w) {
          bx = c0x;
          continue;
        }
        if (p.x >= c1x && p.x < c1x + w) {
          bx = c1x;
          assignment |= std::uint64_t{1} << i;
          continue;
        }
      }
      return first_hit(connectors_[static_cast<std::size_t>(i)], {p.x - bx, p.y})
          .value_or(Color::k0);
    }
    return first_hit(leaves_[satisfied(assignment) ? 1 : 0], {p.x - bx, p.y}).value_or(Color::k0);
  }

 private:
  bool satisfied(std::uint64_t a) const {
    for (const MaskClause& c : clauses_) {
      if (((c.pos & a) | (c.neg & ~a)) == 0) return false;
    }
    return true;
  }

  int n_;
  LayoutParams params_;
  LevelSizes sizes_;
  int m_;
  Coord center_;
  Box root_;
  std::vector<MaskClause> clauses_;
  std::vector<std::vector<WirePolyline>> connectors_;
  std::array<std::vector<WirePolyline>, 2> leaves_;
  std::vector<WirePolyline> outer_;
};

}  // namespace

// ---------------------------------------------------------------------------

void LayoutParams::validate() const {
  if (leaf_width < kMinLeafSide || leaf_height < kMinLeafSide) {
    throw InvalidArgument("leaf width/height must be at least " + std::to_string(kMinLeafSide));
  }
  if (margin < kMinMargin) {
    throw InvalidArgument("margin must be at least " + std::to_string(kMinMargin));
  }
  if (gap < kMinGap) throw InvalidArgument("gap must be at least " + std::to_string(kMinGap));
}

WirePolyline::WirePolyline(std::vector<Point> waypoints, std::string label)
    : one_(std::move(waypoints)), label_(std::move(label)) {
  if (one_.size() < 2) throw InvalidArgument("wire needs at least two waypoints");
  for (std::size_t i = 0; i + 1 < one_.size(); ++i) {
    dirs_.push_back(direction_between(one_[i], one_[i + 1]));
    if (i > 0 && (dirs_[i] == dirs_[i - 1] || offset(dirs_[i]) + offset(dirs_[i - 1]) == Point{})) {
      throw InvalidArgument("consecutive wire segments must turn by 90 degrees");
    }
  }
  two_.reserve(one_.size());
  two_.push_back(one_.front() + right_of(dirs_.front()));
  for (std::size_t k = 1; k + 1 < one_.size(); ++k) {
    two_.push_back(one_[k] + right_of(dirs_[k - 1]) + right_of(dirs_[k]));
  }
  two_.push_back(one_.back() + right_of(dirs_.back()));
  for (std::size_t i = 0; i + 1 < two_.size(); ++i) {
    if (two_[i] == two_[i + 1] || direction_between(two_[i], two_[i + 1]) != dirs_[i]) {
      throw InvalidArgument("wire turn too tight for its 2-track");
    }
  }

  Coord x0 = std::numeric_limits<Coord>::max();
  Coord y0 = x0;
  Coord x1 = std::numeric_limits<Coord>::min();
  Coord y1 = x1;
  for (const auto* pts : {&one_, &two_}) {
    for (Point p : *pts) {
      x0 = std::min(x0, p.x);
      y0 = std::min(y0, p.y);
      x1 = std::max(x1, p.x);
      y1 = std::max(y1, p.y);
    }
  }
  bounds_ = Box{x0, y0, x1 - x0 + 1, y1 - y0 + 1};
}

std::vector<Point> WirePolyline::one_track_cells() const {
  std::vector<Point> out;
  append_cells(one_, out);
  return out;
}

std::vector<Point> WirePolyline::two_track_cells() const {
  std::vector<Point> out;
  append_cells(two_, out);
  return out;
}

WirePolyline WirePolyline::translated(Point delta) const {
  std::vector<Point> pts = one_;
  for (Point& p : pts) p = p + delta;
  return WirePolyline(std::move(pts), label_);
}

std::optional<Color> wire_color_at(const WirePolyline& w, Point p) {
  if (!w.bounds().contains(p)) return std::nullopt;
  const auto& one = w.waypoints();
  for (std::size_t i = 0; i + 1 < one.size(); ++i) {
    if (on_segment(one[i], one[i + 1], p)) return Color::k1;
  }
  const auto& two = w.two_track_waypoints();
  for (std::size_t i = 0; i + 1 < two.size(); ++i) {
    if (on_segment(two[i], two[i + 1], p)) return Color::k2;
  }
  return std::nullopt;
}

LevelSizes level_sizes(int n, const LayoutParams& params) {
  params.validate();
  if (n < 1) throw InvalidArgument("formula must have at least one variable");
  LevelSizes s;
  s.width.assign(static_cast<std::size_t>(n) + 1, 0);
  s.height.assign(static_cast<std::size_t>(n) + 1, 0);
  s.width[static_cast<std::size_t>(n)] = params.leaf_width;
  s.height[static_cast<std::size_t>(n)] = params.leaf_height;
  for (int i = n - 1; i >= 0; --i) {
    const auto k = static_cast<std::size_t>(i);
    const Coord w = s.width[k + 1];
    if (w > kCoordLimit / 2) throw DomainError("layout exceeds the coordinate magnitude bound");
    s.width[k] = checked_add(checked_add(2 * w, params.gap), 2 * params.margin);
    s.height[k] = checked_add(s.height[k + 1], 2 * params.margin);
  }
  return s;
}

int domain_size_param(int n, const LayoutParams& params) {
  const LevelSizes s = level_sizes(n, params);
  const Coord need = checked_add(std::max(s.width[0], s.height[0]), 2 * params.margin);
  const int m = static_cast<int>(std::bit_width(static_cast<std::uint64_t>(need - 1)));
  if (m > kMaxSizeParam) throw DomainError("domain exceeds the coordinate magnitude bound");
  return m;
}

Coord center_row(int n, const LayoutParams& params) {
  const LevelSizes s = level_sizes(n, params);
  return params.margin + s.height[0] / 2;
}

StructureLayout layout(const QbfFormula& formula, const Prefix& x, const LayoutParams& params) {
  const int n = formula.num_vars();
  if (static_cast<int>(x.size()) > n) throw InvalidArgument("prefix longer than the formula");
  const LevelSizes sizes = level_sizes(n, params);
  const Coord c = params.margin + sizes.height[0] / 2;
  Box box = root_box(n, params, sizes);
  for (std::size_t i = 0; i < x.size(); ++i) {
    box = child_box(box, sizes, static_cast<int>(i) + 1, x[i], params);
  }
  StructureLayout out;
  out.prefix = x;
  out.box = box;
  out.left_in = Terminal{{box.x, c}, Direction::kRight, true};
  out.yes_out = Terminal{{box.right(), c + kYesOffset}, Direction::kRight, false};
  out.right_in = Terminal{{box.right(), c}, Direction::kLeft, true};
  out.no_out = Terminal{{box.right(), c + kNoOffset}, Direction::kRight, false};
  return out;
}

std::vector<WirePolyline> structure_wires(const QbfFormula& formula, const Prefix& x,
                                          const LayoutParams& params) {
  const int n = formula.num_vars();
  const StructureLayout lay = layout(formula, x, params);
  const Coord c = lay.left_in.at.y;
  std::vector<WirePolyline> wires;
  if (static_cast<int>(x.size()) == n) {
    wires = leaf_wires(formula.matrix_satisfied(x), lay.box, c);
  } else {
    const LevelSizes sizes = level_sizes(n, params);
    const int child_level = static_cast<int>(x.size()) + 1;
    wires = connector_wires(formula.quantifier_at(static_cast<int>(x.size())), lay.box,
                            child_box(lay.box, sizes, child_level, false, params),
                            child_box(lay.box, sizes, child_level, true, params), c);
  }
  if (x.empty()) {
    const int m = domain_size_param(n, params);
    for (WirePolyline& w : root_outer_wires(lay.box, c, Coord{1} << m)) wires.push_back(std::move(w));
  }
  return wires;
}

TerminalSquares terminals(const QbfFormula& formula, const LayoutParams& params) {
  const int n = formula.num_vars();
  const StructureLayout root = layout(formula, {}, params);
  const Coord c = root.left_in.at.y;
  const Coord end = root.box.right() + kStubLength;
  const Coord side = Coord{1} << domain_size_param(n, params);
  // The YES/NO stubs head east, so their 2-track sits one row below the 1-track.
  return TerminalSquares{Square{{end, c + kYesOffset - 1}}, Square{{end, c + kNoOffset - 1}},
                         Square{{side - 1 - kAuxInset, c}}};
}

BrouwerInstance build_brouwer(const QbfFormula& formula, const LayoutParams& params) {
  auto coloring = std::make_shared<QbfColoring>(formula, params);
  const int m = coloring->size_param();
  return BrouwerInstance(m, std::move(coloring));
}

Rasterization rasterize_full(const QbfFormula& formula, const LayoutParams& params,
                             std::uint64_t max_cells) {
  const int n = formula.num_vars();
  Rasterization r;
  r.m = domain_size_param(n, params);
  const Coord side = Coord{1} << r.m;
  if (static_cast<std::uint64_t>(side) * static_cast<std::uint64_t>(side) > max_cells) {
    throw DomainError("instance too large to rasterize");
  }
  r.cells.assign(static_cast<std::size_t>(side * side), Color::k0);
  std::vector<bool> painted(r.cells.size(), false);

  auto paint = [&](Point p, Color col) {
    if (p.x < 0 || p.y < 0 || p.x >= side || p.y >= side) {
      r.conflicts.push_back(p);
      return;
    }
    const auto idx = static_cast<std::size_t>(p.y * side + p.x);
    if (painted[idx] && r.cells[idx] != col) r.conflicts.push_back(p);
    r.cells[idx] = col;
    painted[idx] = true;
  };

  Prefix x;
  std::function<void()> visit = [&] {
    for (const WirePolyline& w : structure_wires(formula, x, params)) {
      for (Point p : w.one_track_cells()) paint(p, Color::k1);
      for (Point p : w.two_track_cells()) paint(p, Color::k2);
    }
    if (static_cast<int>(x.size()) == n) return;
    for (bool bit : {false, true}) {
      x.push_back(bit);
      visit();
      x.pop_back();
    }
  };
  visit();

  // Border colours win; a wire cell that disagrees with them is a conflict.
  for (Coord y = 0; y < side; ++y) {
    for (Coord xx = 0; xx < side; ++xx) {
      if (xx != 0 && y != 0 && xx != side - 1 && y != side - 1) continue;
      const Point p{xx, y};
      const Color b = *boundary_color_brouwer(r.m, p);
      const auto idx = static_cast<std::size_t>(y * side + xx);
      if (painted[idx] && r.cells[idx] != b) r.conflicts.push_back(p);
      r.cells[idx] = b;
    }
  }
  std::sort(r.conflicts.begin(), r.conflicts.end());
  r.conflicts.erase(std::unique(r.conflicts.begin(), r.conflicts.end()), r.conflicts.end());
  return r;
}

}  // namespace sperner
