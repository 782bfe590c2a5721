#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sperner/construction.hpp"
#include "sperner/grid.hpp"
#include "sperner/qbf.hpp"
#include "sperner/walker.hpp"

namespace sperner {

inline constexpr std::uint64_t kDefaultDensifyLimit = std::uint64_t{1} << 24;

/// Materialized colours of a rectangle, y-major.
struct DenseGrid {
  Region region;
  std::vector<Color> cells;

  Color at(Point p) const {
    return cells[static_cast<std::size_t>((p.y - region.y0) * region.width() + (p.x - region.x0))];
  }
  friend bool operator==(const DenseGrid&, const DenseGrid&) = default;
};

/// Brouwer: points outside [0, 2^m)^2 are rejected. Sperner: points outside
/// the triangle are stored as 0. `jobs` splits the rows across threads.
DenseGrid densify(const BrouwerInstance& inst, const Region& region,
                  std::uint64_t limit = kDefaultDensifyLimit, unsigned jobs = 1);
DenseGrid densify(const SpernerInstance& inst, const Region& region,
                  std::uint64_t limit = kDefaultDensifyLimit, unsigned jobs = 1);

/// Whole domain as a region: [0, 2^m)^2.
Region full_region(int m);

/// Trichromatic squares / triangles whose anchor lies in `anchors`, sorted.
std::vector<Square> enumerate_solutions(const BrouwerInstance& inst, const Region& anchors,
                                        std::uint64_t limit = kDefaultDensifyLimit);
std::vector<Triangle> enumerate_solutions(const SpernerInstance& inst, const Region& anchors,
                                          std::uint64_t limit = kDefaultDensifyLimit);

/// Outcome of one named check. `counterexample` is the first failing point.
struct CheckReport {
  explicit CheckReport(std::string check_name = {}) : name(std::move(check_name)) {}

  std::string name;
  bool passed = true;
  std::optional<Point> counterexample;
  std::string detail;
  std::uint64_t checked = 0;

  void fail(Point at, std::string why);
};

/// "<name>: PASS (<checked> checked)" or "<name>: FAIL at (x,y): <detail>".
std::string format_report(const CheckReport& r);
std::string format_reports(const std::vector<CheckReport>& rs);

/// The four wire conditions along both tracks, evaluated against the full
/// instance colouring (off-grid reads as 0). Also checks that the tracks carry
/// colours 1 and 2 in the instance.
CheckReport check_wire_wellformed(const WirePolyline& w, const BrouwerInstance& inst);

/// Wires of every structure, joined end to start into chains, must be at L-inf
/// distance >= 2 from each other and stay off the border (origin chain excepted).
/// Also checks each wire lies in its owner's box (root outer wires excepted).
CheckReport check_wire_separation(const QbfFormula& formula, const LayoutParams& params);

enum class RoutingMode : std::uint8_t { kExhaustive, kTraceBased };

struct RoutingOptions {
  RoutingMode mode = RoutingMode::kExhaustive;
  /// Replaces the built colouring, e.g. with a mutated one.
  std::shared_ptr<const Coloring> coloring;
};

/// Walks from left_in and right_in inside box(Phi_x). left_in must leave at
/// yes_out iff Phi_x is true, right_in at the other outgoing terminal, and no
/// trace may stop inside the box. Exhaustive mode also scans every square of the
/// box for trichromatic ones.
CheckReport check_structure_routing(const QbfFormula& formula, const Prefix& x,
                                    const LayoutParams& params, const RoutingOptions& opts = {});

/// Solution preservation under g, lockstep of the two walks, and endpoint
/// agreement. `reduced` replaces brouwer_to_sperner(inst) when given.
CheckReport check_reduction_correspondence(const BrouwerInstance& inst,
                                           const std::optional<SpernerInstance>& reduced = {});

/// Degrees of the End-of-Line view over every node of the domain: each node has
/// in/out degree <= 1, and every unbalanced node other than 0 sits on or right
/// after a trichromatic square.
CheckReport check_eol_degrees(const BrouwerInstance& inst);

/// Boundary condition: every border point when the border has at most
/// `samples` points, otherwise `samples` uniform random border points.
CheckReport check_boundary(const BrouwerInstance& inst, std::uint64_t samples = 10000,
                           std::uint64_t seed = 1);

/// Seeds one defect per structure (a cell in the middle of one of its wires
/// turned to 0) and runs check_structure_routing on the mutated colouring. Passes
/// only when every seeded defect is rejected. In trace mode the defect goes on a
/// wire the unmutated traces pass, since wires on closed loops are never walked.
/// `base` defaults to the built colouring.
CheckReport check_routing_mutations(const QbfFormula& formula, const LayoutParams& params,
                                    RoutingMode mode,
                                    std::shared_ptr<const Coloring> base = nullptr);

/// Makes the triangle halfway along the Sperner walk trichromatic by recolouring
/// one vertex, and expects check_reduction_correspondence to reject the result.
CheckReport check_reduction_mutation(const BrouwerInstance& inst);

/// FNV-1a over the region bounds and cell colours.
std::uint64_t grid_hash(const DenseGrid& g);

/// Point overrides on top of another colouring.
class MutatedColoring final : public Coloring {
 public:
  MutatedColoring(std::shared_ptr<const Coloring> base, std::vector<std::pair<Point, Color>> edits);
  Color color_at(Point p) const override;

 private:
  std::shared_ptr<const Coloring> base_;
  std::vector<std::pair<Point, Color>> edits_;
};

}  // namespace sperner
