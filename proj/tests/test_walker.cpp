#include <doctest.h>

#include <set>
#include <sstream>

#include "sperner/construction.hpp"
#include "sperner/reduction.hpp"
#include "sperner/verify.hpp"
#include "sperner/walker.hpp"
#include "support/examples.hpp"
#include "support/gen.hpp"

using namespace sperner;

namespace {

// 4x4 instance with a chosen colour at (1,1) and the rest of the interior 0.
BrouwerInstance start_case(Color c11) {
  std::vector<std::string> rows = {"1000", "1000", "1000", "1222"};
  rows[2][1] = to_char(c11);
  return brouwer_from_rows(2, rows);
}

// 1,2,1,2 square at (1,1): (1,1)=1, (2,1)=2, (1,2)=2, (2,2)=1 looks like
//   2 1
//   1 2
BrouwerInstance saddle() {
  return brouwer_from_rows(3, {"10000000", "10000000", "10000000", "10000000", "10000000",
                               "12100000", "11200000", "12222222"});
}

}  // namespace

TEST_CASE("start square exits are forced by the boundary") {
  const WalkState st{Square{{0, 0}}, Direction::kStart, 0};
  auto up = brouwer_step(start_case(Color::k2), st);
  REQUIRE(std::holds_alternative<WalkState>(up));
  CHECK(std::get<WalkState>(up).current.anchor == Point{0, 1});
  CHECK(std::get<WalkState>(up).prev_dir == Direction::kUp);

  auto right = brouwer_step(start_case(Color::k1), st);
  REQUIRE(std::holds_alternative<WalkState>(right));
  CHECK(std::get<WalkState>(right).current.anchor == Point{1, 0});

  auto done = brouwer_step(start_case(Color::k0), st);
  REQUIRE(std::holds_alternative<Square>(done));
  const WalkResult r = brouwer_walk(start_case(Color::k0), 10);
  CHECK(r.outcome == WalkOutcome::kSolution);
  CHECK(r.steps == 0);
}

TEST_CASE("small grid: single step from (0,1) moving up goes right") {
  const auto next = brouwer_step(fixtures::small_grid(), WalkState{Square{{0, 1}}, Direction::kUp, 1});
  REQUIRE(std::holds_alternative<WalkState>(next));
  CHECK(std::get<WalkState>(next).current.anchor == Point{1, 1});
  CHECK(std::get<WalkState>(next).prev_dir == Direction::kRight);
}

TEST_CASE("small grid: the walk visits five squares and stops at (2,0)") {
  const WalkResult r = brouwer_walk(fixtures::small_grid(), 100, TraceOptions{0, true});
  REQUIRE(r.outcome == WalkOutcome::kSolution);
  CHECK(r.solution->anchor == Point{2, 0});
  REQUIRE(r.trace.size() == fixtures::kSmallGridWalk.size());
  for (std::size_t i = 0; i < r.trace.size(); ++i) CHECK(r.trace[i].current.anchor == fixtures::kSmallGridWalk[i]);
}

TEST_CASE("a 1,2,1,2 square entered moving up exits to the right") {
  const BrouwerInstance inst = saddle();
  auto r = brouwer_step(inst, WalkState{Square{{1, 1}}, Direction::kUp, 3});
  REQUIRE(std::holds_alternative<WalkState>(r));
  CHECK(std::get<WalkState>(r).prev_dir == Direction::kRight);
  auto l = brouwer_step(inst, WalkState{Square{{1, 1}}, Direction::kDown, 3});
  REQUIRE(std::holds_alternative<WalkState>(l));
  CHECK(std::get<WalkState>(l).prev_dir == Direction::kLeft);
}

TEST_CASE("walk errors and caps") {
  CHECK_THROWS_AS(brouwer_walk(fixtures::small_grid(), 0), InvalidArgument);
  const WalkResult capped = brouwer_walk(fixtures::small_grid(), 2);
  CHECK(capped.outcome == WalkOutcome::kCapExceeded);
  CHECK(capped.steps == 2);

  // An all-1 interior with a 2 below has no exit out of the start square.
  const BrouwerInstance bad = brouwer_from_rows(2, {"1111", "1111", "1111", "1222"});
  const WalkResult r = brouwer_walk(bad, 100);
  CHECK(r.outcome == WalkOutcome::kError);
  CHECK_FALSE(r.error.empty());
}

TEST_CASE("trace log lines are '<step> <x> <y> <dir>'") {
  std::ostringstream log;
  TraceOptions t;
  t.log = &log;
  brouwer_walk(fixtures::small_grid(), 100, t);
  CHECK(log.str() == "0 0 0 start\n1 0 1 up\n2 1 1 right\n3 1 0 down\n4 2 0 right\n");
}

TEST_CASE("ring trace keeps the last K cells") {
  const WalkResult r = brouwer_walk(fixtures::small_grid(), 100, TraceOptions{2, false});
  REQUIRE(r.trace.size() == 2);
  CHECK(r.trace.back().current.anchor == Point{2, 0});
}

TEST_CASE("Sperner walk: a trichromatic first triangle ends at once") {
  // (0,0)=2 (0,1)=1 (1,0)=0 gives colours 2,0,1 on the first real triangle.
  const DenseInstance d = import_dense("sperner 2\n1\n10\n100\n2022\n");
  REQUIRE(d.sperner);
  const SpernerWalkResult r = sperner_walk(*d.sperner, 100, TraceOptions{0, true});
  REQUIRE(r.outcome == WalkOutcome::kSolution);
  CHECK(r.solution == Triangle{{0, 0}, TriangleKind::kLower});
  CHECK(r.steps == 1);
}

TEST_CASE("Sperner walk on the reduced small grid ends inside the doubled solution square") {
  const SpernerInstance sp = brouwer_to_sperner(fixtures::small_grid());
  const SpernerWalkResult r = sperner_walk(sp, 1000);
  REQUIRE(r.outcome == WalkOutcome::kSolution);
  CHECK(trichromatic_triangle(sp, *r.solution));
  CHECK(sperner_solution_to_brouwer(*r.solution).anchor == Point{2, 0});
}

TEST_CASE("eol_follow on hand-made chains") {
  EolInstance one{4, [](std::uint64_t u) { return u == 0 ? 1 : u; },
                  [](std::uint64_t v) { return v == 1 ? 0 : v; }};
  EolResult r = eol_follow(one, 10);
  CHECK(r.outcome == WalkOutcome::kSolution);
  CHECK(r.node == 1);

  EolInstance chain{4, [](std::uint64_t u) { return u < 2 ? u + 1 : u; },
                    [](std::uint64_t v) { return v >= 1 && v <= 2 ? v - 1 : v; }};
  CHECK(eol_follow(chain, 10).node == 2);
  CHECK(eol_follow(chain, 1).outcome == WalkOutcome::kCapExceeded);
}

TEST_CASE("EOL view of small grid ends at the walk's endpoint") {
  const BrouwerInstance inst = fixtures::small_grid();
  const EolInstance e = brouwer_as_eol(inst);
  const EolResult r = eol_follow(e, 100);
  REQUIRE(r.outcome == WalkOutcome::kSolution);
  CHECK(decode_eol_node(2, r.node).first.anchor == Point{2, 0});
  CHECK(check_eol_degrees(inst).passed);
}

TEST_CASE("a 1,2,1,2 square gets two EOL nodes with disjoint arcs") {
  const BrouwerInstance inst = saddle();
  const EolInstance e = brouwer_as_eol(inst);
  std::vector<std::uint64_t> nodes;
  for (Direction d : {Direction::kUp, Direction::kRight, Direction::kDown, Direction::kLeft}) {
    if (eol_node_valid(inst, Square{{1, 1}}, d)) nodes.push_back(encode_eol_node(3, Square{{1, 1}}, d));
  }
  REQUIRE(nodes.size() == 2);
  CHECK(nodes[0] != nodes[1]);
  const std::uint64_t s0 = e.successor(nodes[0]);
  const std::uint64_t s1 = e.successor(nodes[1]);
  const std::uint64_t p0 = e.predecessor(nodes[0]);
  const std::uint64_t p1 = e.predecessor(nodes[1]);
  CHECK(s0 != s1);
  CHECK(p0 != p1);
  CHECK(check_eol_degrees(inst).passed);
}

TEST_CASE("EOL node encoding round-trips") {
  for (Direction d : {Direction::kStart, Direction::kUp, Direction::kLeft}) {
    const auto [s, back] = decode_eol_node(7, encode_eol_node(7, Square{{100, 3}}, d));
    CHECK(s.anchor == Point{100, 3});
    CHECK(back == d);
  }
  CHECK(encode_eol_node(5, Square{{0, 0}}, Direction::kStart) == 0);
}

TEST_CASE("property: walks on constructed instances never revisit a state and EOL agrees") {
  const bool ok = gen::for_all<QbfFormula>(
      4000, 25, [](gen::Rng& r) { return gen::random_formula(r, r.uniform(1, 3), 3, 2); },
      [](const QbfFormula& f) {
        const BrouwerInstance inst = build_brouwer(f);
        const WalkResult w = brouwer_walk(inst, default_cap(inst.size_param()), TraceOptions{0, true});
        if (w.outcome != WalkOutcome::kSolution || !trichromatic_square(inst, *w.solution)) return false;
        std::set<std::pair<Point, int>> seen;
        for (const WalkState& s : w.trace) {
          if (!seen.insert({s.current.anchor, static_cast<int>(s.prev_dir)}).second) return false;
        }
        const EolInstance e = brouwer_as_eol(inst);
        // Every arc on the path is the walker's own step.
        for (std::size_t i = 0; i + 1 < w.trace.size(); ++i) {
          const std::uint64_t u = encode_eol_node(inst.size_param(), w.trace[i].current, w.trace[i].prev_dir);
          const std::uint64_t v =
              encode_eol_node(inst.size_param(), w.trace[i + 1].current, w.trace[i + 1].prev_dir);
          if (!e.has_arc(u, v)) return false;
        }
        const EolResult r = eol_follow(e, default_cap(inst.size_param()));
        return r.outcome == WalkOutcome::kSolution &&
               decode_eol_node(inst.size_param(), r.node).first == *w.solution;
      },
      gen::describe);
  CHECK(ok);
}
