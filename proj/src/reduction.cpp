#include "sperner/reduction.hpp"

namespace sperner {

namespace {

class DoubledColoring final : public Coloring {
 public:
  explicit DoubledColoring(BrouwerInstance base) : base_(std::move(base)) {}

  Color color_at(Point p) const override {
    const auto [x, y] = p;
    if (x == 0) return y == 0 ? Color::k2 : Color::k1;
    if (y == 0) return x < 2 * base_.side() ? Color::k2 : Color::k0;

    const bool x_odd = (x & 1) != 0;
    const bool y_odd = (y & 1) != 0;
    Point source;
    if (x_odd && y_odd) {
      source = {(x + 1) / 2, (y + 1) / 2};
    } else {
      source = {x / 2, y / 2};
    }
    return base_.in_domain(source) ? base_.color(source) : Color::k0;
  }

 private:
  BrouwerInstance base_;
};

}  // namespace

SpernerInstance brouwer_to_sperner(const BrouwerInstance& inst) {
  return SpernerInstance(inst.size_param() + 2, std::make_shared<DoubledColoring>(inst));
}

Square sperner_solution_to_brouwer(const Triangle& t) {
  return Square{{t.anchor.x / 2, t.anchor.y / 2}};
}

}  // namespace sperner
