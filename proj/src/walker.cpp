#include "sperner/walker.hpp"

#include <array>
#include <limits>
#include <ostream>

namespace sperner {

namespace {

constexpr std::array<Direction, 4> kMoves = {Direction::kUp, Direction::kRight, Direction::kDown,
                                             Direction::kLeft};

std::string square_str(const Square& s) {
  return "(" + std::to_string(s.anchor.x) + "," + std::to_string(s.anchor.y) + ")";
}

bool square_in_domain(const BrouwerInstance& inst, const Square& s) {
  return s.anchor.x >= 0 && s.anchor.y >= 0 && s.anchor.x < inst.side() - 1 &&
         s.anchor.y < inst.side() - 1;
}

// Keeps either every state or the last `ring` states.
template <typename Cell>
class TraceSink {
 public:
  explicit TraceSink(const TraceOptions& opts) : opts_(opts) {}

  void record(const Cell& cell) {
    if (opts_.full) {
      kept_.push_back(cell);
    } else if (opts_.ring > 0) {
      kept_.push_back(cell);
      if (kept_.size() > opts_.ring) kept_.pop_front();
    }
  }

  std::vector<Cell> take() { return {kept_.begin(), kept_.end()}; }

 private:
  const TraceOptions& opts_;
  std::deque<Cell> kept_;
};

void log_state(std::ostream* log, const WalkState& st) {
  if (!log) return;
  *log << st.steps << ' ' << st.current.anchor.x << ' ' << st.current.anchor.y << ' '
       << to_string(st.prev_dir) << '\n';
}

}  // namespace

std::string_view to_string(Direction d) {
  switch (d) {
    case Direction::kStart:
      return "start";
    case Direction::kUp:
      return "up";
    case Direction::kRight:
      return "right";
    case Direction::kDown:
      return "down";
    case Direction::kLeft:
      return "left";
  }
  return "?";
}

std::string_view to_string(WalkOutcome o) {
  switch (o) {
    case WalkOutcome::kSolution:
      return "solution";
    case WalkOutcome::kCapExceeded:
      return "cap-exceeded";
    case WalkOutcome::kError:
      return "error";
  }
  return "?";
}

Point offset(Direction d) {
  switch (d) {
    case Direction::kUp:
      return {0, 1};
    case Direction::kRight:
      return {1, 0};
    case Direction::kDown:
      return {0, -1};
    case Direction::kLeft:
      return {-1, 0};
    case Direction::kStart:
      break;
  }
  return {0, 0};
}

Direction right_turn(Direction d) {
  switch (d) {
    case Direction::kUp:
      return Direction::kRight;
    case Direction::kRight:
      return Direction::kDown;
    case Direction::kDown:
      return Direction::kLeft;
    case Direction::kLeft:
      return Direction::kUp;
    case Direction::kStart:
      break;
  }
  return Direction::kStart;
}

std::pair<Point, Point> exit_edge(const Square& s, Direction d) {
  const auto [x, y] = s.anchor;
  switch (d) {
    case Direction::kUp:
      return {{x, y + 1}, {x + 1, y + 1}};
    case Direction::kRight:
      return {{x + 1, y + 1}, {x + 1, y}};
    case Direction::kDown:
      return {{x + 1, y}, {x, y}};
    case Direction::kLeft:
      return {{x, y}, {x, y + 1}};
    case Direction::kStart:
      break;
  }
  throw InvalidArgument("exit_edge needs a move direction");
}

StepResult brouwer_step(const BrouwerInstance& inst, const WalkState& st) {
  if (!square_in_domain(inst, st.current)) {
    throw DomainError("square " + square_str(st.current) + " outside domain");
  }
  const auto [x, y] = st.current.anchor;
  // Vertex colours: c00 = (x,y), c10 = (x+1,y), c01 = (x,y+1), c11 = (x+1,y+1).
  const Color c00 = inst.color({x, y});
  const Color c10 = inst.color({x + 1, y});
  const Color c01 = inst.color({x, y + 1});
  const Color c11 = inst.color({x + 1, y + 1});
  const std::array<Color, 4> all = {c00, c10, c01, c11};
  if (trichromatic(all)) return st.current;

  auto qualifies = [](Color left, Color right) {
    return left == Color::k1 && right == Color::k2;
  };
  std::array<bool, 4> exits = {
      qualifies(c01, c11),  // up
      qualifies(c11, c10),  // right
      qualifies(c10, c00),  // down
      qualifies(c00, c01),  // left
  };
  int count = 0;
  Direction chosen = Direction::kStart;
  for (std::size_t i = 0; i < kMoves.size(); ++i) {
    if (exits[i]) {
      ++count;
      chosen = kMoves[i];
    }
  }
  if (count == 0) {
    throw MalformedInstance("no 1|2 exit edge from square " + square_str(st.current));
  }
  if (count == 2) {
    if (st.prev_dir == Direction::kStart) {
      throw MalformedInstance("ambiguous exit from start square " + square_str(st.current));
    }
    chosen = right_turn(st.prev_dir);
    const auto idx = static_cast<std::size_t>(chosen) - 1;
    if (!exits[idx]) {
      throw MalformedInstance("no right-turn exit from 1,2,1,2 square " + square_str(st.current));
    }
  } else if (count > 2) {
    throw MalformedInstance("more than two exits from square " + square_str(st.current));
  }

  const Square next{st.current.anchor + offset(chosen)};
  if (!square_in_domain(inst, next)) {
    throw MalformedInstance("walk leaves the domain at square " + square_str(st.current));
  }
  return WalkState{next, chosen, st.steps + 1};
}

std::uint64_t default_cap(int m) {
  if (2 * m >= 64) return std::numeric_limits<std::uint64_t>::max();
  return std::uint64_t{1} << (2 * m);
}

WalkResult brouwer_walk(const BrouwerInstance& inst, std::uint64_t cap, const TraceOptions& trace) {
  if (cap < 1) throw InvalidArgument("step cap must be at least 1");
  WalkResult result;
  TraceSink<WalkState> sink(trace);
  WalkState st{Square{{0, 0}}, Direction::kStart, 0};
  try {
    for (;;) {
      sink.record(st);
      log_state(trace.log, st);
      StepResult r = brouwer_step(inst, st);
      if (const Square* sol = std::get_if<Square>(&r)) {
        result.outcome = WalkOutcome::kSolution;
        result.solution = *sol;
        break;
      }
      if (st.steps >= cap) {
        result.outcome = WalkOutcome::kCapExceeded;
        break;
      }
      st = std::get<WalkState>(r);
    }
  } catch (const std::exception& e) {
    result.outcome = WalkOutcome::kError;
    result.error = e.what();
  }
  result.steps = st.steps;
  result.trace = sink.take();
  return result;
}

// ---------------------------------------------------------------------------
// Sperner walk

namespace {

constexpr Color kExtraPointColor = Color::k1;

bool virtual_in_domain(const SpernerInstance& inst, Coord y) {
  return y >= 0 && y + 1 < inst.side();
}

}  // namespace

std::optional<SpernerCell> sperner_step(const SpernerInstance& inst, const SpernerCell& cell) {
  // Each edge is (u, v) in counter-clockwise order; crossing it outward puts v on
  // the left and u on the right.
  struct Edge {
    Color u;
    Color v;
    SpernerCell across;
  };
  std::array<Edge, 3> edges;
  if (cell.is_virtual) {
    const Coord y = cell.virtual_y;
    const Color a = inst.color({0, y});
    const Color b = inst.color({0, y + 1});
    edges = {Edge{a, b, SpernerCell::real({{0, y}, TriangleKind::kLower})},
             Edge{b, kExtraPointColor, SpernerCell::virt(y + 1)},
             Edge{kExtraPointColor, a, SpernerCell::virt(y - 1)}};
  } else {
    const Triangle& t = cell.triangle;
    const auto [x, y] = t.anchor;
    const auto vs = t.vertices();
    const Color a = inst.color(vs[0]);
    const Color b = inst.color(vs[1]);
    const Color c = inst.color(vs[2]);
    if (t.kind == TriangleKind::kLower) {
      const SpernerCell left =
          x == 0 ? SpernerCell::virt(y) : SpernerCell::real({{x - 1, y}, TriangleKind::kUpper});
      edges = {Edge{a, b, SpernerCell::real({{x, y - 1}, TriangleKind::kUpper})},
               Edge{b, c, SpernerCell::real({{x, y}, TriangleKind::kUpper})},
               Edge{c, a, left}};
    } else {
      edges = {Edge{a, b, SpernerCell::real({{x + 1, y}, TriangleKind::kLower})},
               Edge{b, c, SpernerCell::real({{x, y + 1}, TriangleKind::kLower})},
               Edge{c, a, SpernerCell::real({{x, y}, TriangleKind::kLower})}};
    }
  }

  std::optional<SpernerCell> next;
  for (const Edge& e : edges) {
    if (e.v == Color::k1 && e.u == Color::k2) {
      if (next) throw MalformedInstance("triangle with two outgoing 1|2 edges");
      next = e.across;
    }
  }
  if (!next) return std::nullopt;
  const bool ok = next->is_virtual ? virtual_in_domain(inst, next->virtual_y)
                                   : inst.in_domain(next->triangle);
  if (!ok) throw MalformedInstance("Sperner walk leaves the domain");
  return next;
}

SpernerWalkResult sperner_walk(const SpernerInstance& inst, std::uint64_t cap,
                               const TraceOptions& trace) {
  if (cap < 1) throw InvalidArgument("step cap must be at least 1");
  SpernerWalkResult result;
  TraceSink<SpernerCell> sink(trace);
  SpernerCell cell = SpernerCell::virt(0);
  std::uint64_t steps = 0;
  try {
    for (;;) {
      sink.record(cell);
      if (trace.log) {
        if (cell.is_virtual) {
          *trace.log << steps << " -1 " << cell.virtual_y << " virtual\n";
        } else {
          *trace.log << steps << ' ' << cell.triangle.anchor.x << ' ' << cell.triangle.anchor.y
                     << (cell.triangle.kind == TriangleKind::kLower ? " lower\n" : " upper\n");
        }
      }
      if (!cell.is_virtual && trichromatic_triangle(inst, cell.triangle)) {
        result.outcome = WalkOutcome::kSolution;
        result.solution = cell.triangle;
        break;
      }
      const std::optional<SpernerCell> next = sperner_step(inst, cell);
      if (!next) throw MalformedInstance("non-trichromatic triangle without an exit");
      if (steps >= cap) {
        result.outcome = WalkOutcome::kCapExceeded;
        break;
      }
      cell = *next;
      ++steps;
    }
  } catch (const std::exception& e) {
    result.outcome = WalkOutcome::kError;
    result.error = e.what();
  }
  result.steps = steps;
  result.trace = sink.take();
  return result;
}

// ---------------------------------------------------------------------------
// End-of-Line view

EolResult eol_follow(const EolInstance& e, std::uint64_t cap) {
  if (cap < 1) throw InvalidArgument("step cap must be at least 1");
  EolResult result;
  std::uint64_t u = 0;
  try {
    for (;;) {
      const std::uint64_t v = e.successor(u);
      if (v == u || e.predecessor(v) != u) {
        result.outcome = WalkOutcome::kSolution;
        break;
      }
      if (v == 0) throw MalformedInstance("arc into the source node 0");
      if (result.steps >= cap) {
        result.outcome = WalkOutcome::kCapExceeded;
        break;
      }
      u = v;
      ++result.steps;
    }
  } catch (const std::exception& ex) {
    result.outcome = WalkOutcome::kError;
    result.error = ex.what();
  }
  result.node = u;
  return result;
}

namespace {
constexpr int kTagBits = 3;
}  // namespace

bool eol_node_valid(const BrouwerInstance& inst, const Square& s, Direction entered) {
  if (!square_in_domain(inst, s)) return false;
  const bool origin = s.anchor == Point{0, 0};
  if (entered == Direction::kStart) return origin;
  if (origin) return false;
  const Square prev{s.anchor - offset(entered)};
  if (!square_in_domain(inst, prev)) return false;
  const auto [left, right] = exit_edge(prev, entered);
  return inst.color(left) == Color::k1 && inst.color(right) == Color::k2;
}

std::uint64_t encode_eol_node(int m, const Square& s, Direction entered) {
  return (static_cast<std::uint64_t>(s.anchor.x) << (m + kTagBits)) |
         (static_cast<std::uint64_t>(s.anchor.y) << kTagBits) | static_cast<std::uint64_t>(entered);
}

std::pair<Square, Direction> decode_eol_node(int m, std::uint64_t node) {
  const std::uint64_t tag = node & ((1u << kTagBits) - 1);
  const std::uint64_t y = (node >> kTagBits) & ((std::uint64_t{1} << m) - 1);
  const std::uint64_t x = node >> (m + kTagBits);
  const Direction d = tag <= 4 ? static_cast<Direction>(tag) : Direction::kStart;
  return {Square{{static_cast<Coord>(x), static_cast<Coord>(y)}}, d};
}

EolInstance brouwer_as_eol(const BrouwerInstance& inst) {
  const int m = inst.size_param();
  if (2 * m + kTagBits > 64) throw InvalidArgument("instance too large for 64-bit EOL node ids");

  auto successor = [inst, m](std::uint64_t u) -> std::uint64_t {
    const std::uint64_t tag = u & ((1u << kTagBits) - 1);
    if (tag > 4) return u;
    const auto [s, entered] = decode_eol_node(m, u);
    if (!eol_node_valid(inst, s, entered)) return u;
    try {
      const StepResult r = brouwer_step(inst, WalkState{s, entered, 0});
      if (const WalkState* next = std::get_if<WalkState>(&r)) {
        return encode_eol_node(m, next->current, next->prev_dir);
      }
    } catch (const MalformedInstance&) {
    }
    return u;
  };

  auto predecessor = [inst, m, successor](std::uint64_t v) -> std::uint64_t {
    const std::uint64_t tag = v & ((1u << kTagBits) - 1);
    if (tag > 4) return v;
    const auto [s, entered] = decode_eol_node(m, v);
    if (entered == Direction::kStart || !eol_node_valid(inst, s, entered)) return v;
    const Square prev{s.anchor - offset(entered)};
    for (Direction t : {Direction::kStart, Direction::kUp, Direction::kRight, Direction::kDown,
                        Direction::kLeft}) {
      if (!eol_node_valid(inst, prev, t)) continue;
      const std::uint64_t u = encode_eol_node(m, prev, t);
      if (successor(u) == v) return u;
    }
    return v;
  };

  return EolInstance{2 * m + kTagBits, successor, predecessor};
}

}  // namespace sperner
