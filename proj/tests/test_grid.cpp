#include <doctest.h>

#include <algorithm>

#include "sperner/grid.hpp"
#include "sperner/verify.hpp"
#include "support/examples.hpp"

using namespace sperner;

namespace {

// Colouring with fixed vertex colours on the unit square / triangle at the origin.
BrouwerInstance square_with(Color a, Color b, Color c, Color d) {
  std::vector<Color> cells(16, Color::k0);
  cells[0] = a;
  cells[1] = b;
  cells[4] = c;
  cells[5] = d;
  return BrouwerInstance(2, std::make_shared<DenseColoring>(4, 4, cells));
}

}  // namespace

TEST_CASE("boundary_color_brouwer examples") {
  CHECK(boundary_color_brouwer(3, {0, 5}) == Color::k1);
  CHECK(boundary_color_brouwer(3, {3, 0}) == Color::k2);
  CHECK(boundary_color_brouwer(3, {0, 0}) == Color::k1);
  CHECK(boundary_color_brouwer(3, {7, 4}) == Color::k0);
  CHECK_FALSE(boundary_color_brouwer(3, {4, 4}).has_value());
}

TEST_CASE("boundary corners follow the precedence order") {
  CHECK(boundary_color_brouwer(3, {0, 7}) == Color::k1);
  CHECK(boundary_color_brouwer(3, {7, 0}) == Color::k2);
  CHECK(boundary_color_brouwer(3, {7, 7}) == Color::k0);
  CHECK_THROWS_AS(boundary_color_brouwer(3, {8, 1}), DomainError);
  CHECK_THROWS_AS(boundary_color_brouwer(3, {-1, 1}), DomainError);
}

TEST_CASE("trichromatic predicates") {
  CHECK(trichromatic_square(square_with(Color::k1, Color::k2, Color::k0, Color::k0), Square{{0, 0}}));
  CHECK_FALSE(trichromatic_square(square_with(Color::k1, Color::k2, Color::k1, Color::k2), Square{{0, 0}}));
  const std::array<Color, 3> t0{Color::k0, Color::k1, Color::k2};
  const std::array<Color, 3> t1{Color::k1, Color::k1, Color::k2};
  CHECK(trichromatic(t0));
  CHECK_FALSE(trichromatic(t1));
}

TEST_CASE("trichromatic_square does not depend on vertex order") {
  std::array<Color, 4> cs{Color::k0, Color::k1, Color::k2, Color::k2};
  std::sort(cs.begin(), cs.end());
  do {
    const BrouwerInstance inst = square_with(cs[0], cs[1], cs[2], cs[3]);
    CHECK(trichromatic_square(inst, Square{{0, 0}}));
  } while (std::next_permutation(cs.begin(), cs.end()));
}

TEST_CASE("small grid: trichromatic squares of the transcribed grid") {
  // The walk ends at (2,0); the grid as drawn has two more solutions next to
  // the 0-coloured top and right edges.
  const BrouwerInstance inst = fixtures::small_grid();
  const auto sols = enumerate_solutions(inst, Region{0, 0, 3, 3});
  CHECK(sols == std::vector<Square>{Square{{1, 2}}, Square{{2, 0}}, Square{{2, 1}}});
  CHECK(trichromatic_square(inst, Square{{2, 0}}));
  CHECK_FALSE(trichromatic_square(inst, Square{{1, 1}}));
}

TEST_CASE("reduced small grid as drawn: the triangles at the end of the drawn path are trichromatic") {
  auto drawn = std::make_shared<DenseColoring>(16, 16, [] {
    std::vector<Color> cells(256);
    for (Coord y = 0; y < 16; ++y) {
      for (Coord x = 0; x + y < 16; ++x) cells[static_cast<std::size_t>(y * 16 + x)] = fixtures::small_reduced_as_drawn({x, y});
    }
    return cells;
  }());
  const SpernerInstance inst(4, drawn);
  const auto sols = enumerate_solutions(inst, Region{0, 0, 15, 15});
  CHECK_FALSE(sols.empty());
  // The drawn path ends between x = 4 and x = 5 at height 1..2.
  CHECK(std::find(sols.begin(), sols.end(), Triangle{{4, 1}, TriangleKind::kLower}) != sols.end());
}

TEST_CASE("Sperner boundary restrictions") {
  CHECK_FALSE(sperner_boundary_allows(3, {0, 4}, Color::k0));
  CHECK_FALSE(sperner_boundary_allows(3, {4, 0}, Color::k1));
  CHECK_FALSE(sperner_boundary_allows(3, {3, 4}, Color::k2));
  CHECK(sperner_boundary_allows(3, {2, 2}, Color::k0));
}

TEST_CASE("dense text export round-trips") {
  const BrouwerInstance inst = fixtures::small_grid();
  const std::string text = export_dense(inst);
  CHECK(text == "brouwer 2\n1000\n1120\n1210\n1222\n");
  const DenseInstance back = import_dense(text);
  REQUIRE(back.brouwer);
  CHECK(export_dense(*back.brouwer) == text);

  const std::string sp = "sperner 1\n1\n22\n";
  const DenseInstance s = import_dense(sp);
  REQUIRE(s.sperner);
  CHECK(export_dense(*s.sperner) == sp);
}

TEST_CASE("dense import rejects malformed text") {
  CHECK_THROWS_AS(import_dense("brouwer 2\n1000\n1120\n"), ParseError);
  CHECK_THROWS_AS(import_dense("brouwer 1\n13\n12\n"), ParseError);
  CHECK_THROWS_AS(import_dense("square 1\n11\n12\n"), ParseError);
}

TEST_CASE("regions parse as four integers") {
  CHECK(parse_region("0,1,10,12") == Region{0, 1, 10, 12});
  CHECK(parse_region("3,3,3,3").area() == 0);
  CHECK_THROWS_AS(parse_region("0,1,2"), ParseError);
  CHECK_THROWS_AS(parse_region("0,1,2,x"), ParseError);
}

TEST_CASE("colour lookups outside the domain throw") {
  const BrouwerInstance inst = fixtures::small_grid();
  CHECK_THROWS_AS(inst.color({4, 0}), DomainError);
  CHECK(inst.color_or_background({4, 0}) == Color::k0);
}
