#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sperner/grid.hpp"

namespace sperner {

/// Direction of the last move; kStart only before the first move.
enum class Direction : std::uint8_t { kStart = 0, kUp = 1, kRight = 2, kDown = 3, kLeft = 4 };

std::string_view to_string(Direction d);
Point offset(Direction d);
Direction right_turn(Direction d);

struct WalkState {
  Square current;
  Direction prev_dir = Direction::kStart;
  std::uint64_t steps = 0;
  friend bool operator==(const WalkState&, const WalkState&) = default;
};

/// The two vertices of the edge crossed when leaving `s` in direction `d`, as
/// (left, right) seen looking outward.
std::pair<Point, Point> exit_edge(const Square& s, Direction d);

/// Either the trichromatic square the walker stops at, or the next state.
using StepResult = std::variant<Square, WalkState>;

/// One step of the Brouwer path-following rule. Exits through the edge with
/// colour 1 on the left and 2 on the right; with two such edges (a 1,2,1,2
/// square) the one that turns right relative to `st.prev_dir` wins.
/// Throws MalformedInstance when no exit exists or the exit leaves the domain.
StepResult brouwer_step(const BrouwerInstance& inst, const WalkState& st);

enum class WalkOutcome : std::uint8_t { kSolution, kCapExceeded, kError };
std::string_view to_string(WalkOutcome o);

/// Trace retention. Nothing is kept by default; `ring` keeps the last K cells,
/// `full` keeps everything, and `log` receives one `<step> <x> <y> <dir>` line per cell.
struct TraceOptions {
  std::size_t ring = 0;
  bool full = false;
  std::ostream* log = nullptr;
};

struct WalkResult {
  WalkOutcome outcome = WalkOutcome::kError;
  std::optional<Square> solution;
  std::uint64_t steps = 0;
  std::string error;
  std::vector<WalkState> trace;
};

/// 2^(2m), the number of unit squares, saturated to uint64.
std::uint64_t default_cap(int m);

WalkResult brouwer_walk(const BrouwerInstance& inst, std::uint64_t cap,
                        const TraceOptions& trace = {});

/// A triangle of the extended Sperner triangulation: a real triangle, or the
/// virtual triangle {p, (0, y), (0, y + 1)} through the extra point p left of x = 0.
struct SpernerCell {
  bool is_virtual = false;
  Triangle triangle;
  Coord virtual_y = 0;
  friend bool operator==(const SpernerCell&, const SpernerCell&) = default;

  static SpernerCell real(Triangle t) { return {false, t, 0}; }
  static SpernerCell virt(Coord y) { return {true, {}, y}; }
};

struct SpernerWalkResult {
  WalkOutcome outcome = WalkOutcome::kError;
  std::optional<Triangle> solution;
  std::uint64_t steps = 0;
  std::string error;
  std::vector<SpernerCell> trace;
};

/// Single Sperner step: the neighbour across the unique edge with colour 1 on the
/// left and 2 on the right, or nullopt when the cell has no such edge.
std::optional<SpernerCell> sperner_step(const SpernerInstance& inst, const SpernerCell& cell);

/// Follows the triangle graph from the virtual triangle {p, (0,0), (0,1)} until a
/// trichromatic real triangle is reached.
SpernerWalkResult sperner_walk(const SpernerInstance& inst, std::uint64_t cap,
                               const TraceOptions& trace = {});

/// End-of-Line instance with node identifiers packed into `node_bits` low bits.
/// Arc u -> v iff u != v, successor(u) == v and predecessor(v) == u; node 0 has
/// no incoming arc.
struct EolInstance {
  int node_bits = 0;
  std::function<std::uint64_t(std::uint64_t)> successor;
  std::function<std::uint64_t(std::uint64_t)> predecessor;

  bool has_arc(std::uint64_t u, std::uint64_t v) const {
    return u != v && v != 0 && successor(u) == v && predecessor(v) == u;
  }
};

struct EolResult {
  WalkOutcome outcome = WalkOutcome::kError;
  std::uint64_t node = 0;
  std::uint64_t steps = 0;
  std::string error;
};

/// Iterates the successor from node 0 until a node without an outgoing arc.
EolResult eol_follow(const EolInstance& e, std::uint64_t cap);

/// Node encoding used by brouwer_as_eol: x, y and the entry-direction tag.
std::uint64_t encode_eol_node(int m, const Square& s, Direction entered);
std::pair<Square, Direction> decode_eol_node(int m, std::uint64_t node);

/// Whether (s, entered) names a node of brouwer_as_eol: the start square with the
/// start tag, or a square whose neighbour behind `entered` exits into it.
bool eol_node_valid(const BrouwerInstance& inst, const Square& s, Direction entered);

/// The End-of-Line graph whose path from 0 is the Brouwer walk. A 1,2,1,2 square
/// contributes one node per entry direction. Requires 2m + 3 <= 64.
EolInstance brouwer_as_eol(const BrouwerInstance& inst);

}  // namespace sperner
