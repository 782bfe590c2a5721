#include "sperner/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "sperner/reduction.hpp"

namespace sperner {

namespace {

std::string pt(Point p) { return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")"; }

void check_limit(const Region& region, std::uint64_t limit) {
  if (region.area() > limit) {
    throw DomainError("region of " + std::to_string(region.area()) + " cells exceeds limit " +
                      std::to_string(limit));
  }
}

template <typename Fn>
DenseGrid fill_rows(const Region& region, unsigned jobs, Fn&& color) {
  DenseGrid g{region, std::vector<Color>(static_cast<std::size_t>(region.area()))};
  const Coord w = region.width();
  const Coord h = region.height();
  auto rows = [&](Coord r0, Coord r1) {
    for (Coord r = r0; r < r1; ++r) {
      for (Coord c = 0; c < w; ++c) {
        g.cells[static_cast<std::size_t>(r * w + c)] = color(Point{region.x0 + c, region.y0 + r});
      }
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<Coord>(h, 1))));
  if (jobs == 1) {
    rows(0, h);
    return g;
  }
  std::vector<std::thread> pool;
  for (unsigned j = 0; j < jobs; ++j) {
    pool.emplace_back(rows, h * j / jobs, h * (j + 1) / jobs);
  }
  for (auto& t : pool) t.join();
  return g;
}

Point right_vec(Point step) { return {step.y, -step.x}; }

bool unit_step(Point a, Point b) {
  const Point d = b - a;
  return std::abs(d.x) + std::abs(d.y) == 1;
}

}  // namespace

DenseGrid densify(const BrouwerInstance& inst, const Region& region, std::uint64_t limit,
                  unsigned jobs) {
  check_limit(region, limit);
  if (region.area() > 0 &&
      (!inst.in_domain({region.x0, region.y0}) || !inst.in_domain({region.x1 - 1, region.y1 - 1}))) {
    throw DomainError("region outside the Brouwer domain");
  }
  const Coloring& c = *inst.coloring();
  return fill_rows(region, jobs, [&](Point p) { return c.color_at(p); });
}

DenseGrid densify(const SpernerInstance& inst, const Region& region, std::uint64_t limit,
                  unsigned jobs) {
  check_limit(region, limit);
  const Coloring& c = *inst.coloring();
  return fill_rows(region, jobs,
                   [&](Point p) { return inst.in_domain(p) ? c.color_at(p) : Color::k0; });
}

Region full_region(int m) {
  const Coord side = Coord{1} << m;
  return Region{0, 0, side, side};
}

std::vector<Square> enumerate_solutions(const BrouwerInstance& inst, const Region& anchors,
                                        std::uint64_t limit) {
  if (anchors.area() == 0) return {};
  const Region pts{anchors.x0, anchors.y0, anchors.x1 + 1, anchors.y1 + 1};
  const DenseGrid g = densify(inst, pts, limit);
  std::vector<Square> out;
  for (Coord y = anchors.y0; y < anchors.y1; ++y) {
    for (Coord x = anchors.x0; x < anchors.x1; ++x) {
      const std::array<Color, 4> cs{g.at({x, y}), g.at({x + 1, y}), g.at({x, y + 1}),
                                    g.at({x + 1, y + 1})};
      if (trichromatic(cs)) out.push_back(Square{{x, y}});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Triangle> enumerate_solutions(const SpernerInstance& inst, const Region& anchors,
                                          std::uint64_t limit) {
  if (anchors.area() == 0) return {};
  const Region pts{anchors.x0, anchors.y0, anchors.x1 + 1, anchors.y1 + 1};
  const DenseGrid g = densify(inst, pts, limit);
  const Coord w = pts.width();
  auto bit = [&](Coord x, Coord y) {
    return 1u << static_cast<unsigned>(g.cells[static_cast<std::size_t>((y - pts.y0) * w + (x - pts.x0))]);
  };
  std::vector<Triangle> out;
  for (Coord y = anchors.y0; y < anchors.y1; ++y) {
    // Lower triangles need x + y + 1 < side, upper ones x + y + 2 < side.
    const Coord x_end = std::min(anchors.x1, inst.side() - 1 - y);
    for (Coord x = anchors.x0; x < x_end; ++x) {
      const unsigned base = bit(x + 1, y) | bit(x, y + 1);
      if ((base | bit(x, y)) == 0b111) out.push_back(Triangle{{x, y}, TriangleKind::kLower});
      if (x + y + 2 < inst.side() && (base | bit(x + 1, y + 1)) == 0b111) {
        out.push_back(Triangle{{x, y}, TriangleKind::kUpper});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void CheckReport::fail(Point at, std::string why) {
  if (!passed) return;
  passed = false;
  counterexample = at;
  detail = std::move(why);
}

std::string format_report(const CheckReport& r) {
  std::ostringstream os;
  os << r.name << ": ";
  if (r.passed) {
    os << "PASS (" << r.checked << " checked)";
  } else {
    os << "FAIL";
    if (r.counterexample) os << " at " << pt(*r.counterexample);
    os << ": " << r.detail;
  }
  return os.str();
}

std::string format_reports(const std::vector<CheckReport>& rs) {
  std::string out;
  for (const CheckReport& r : rs) out += format_report(r) + "\n";
  return out;
}

// ---------------------------------------------------------------------------

CheckReport check_wire_wellformed(const WirePolyline& w, const BrouwerInstance& inst) {
  CheckReport r{"wire " + (w.label().empty() ? std::string("(unnamed)") : w.label())};
  std::vector<Point> one = w.one_track_cells();
  std::vector<Point> two = w.two_track_cells();
  std::vector<Point> one_sorted = one;
  std::vector<Point> two_sorted = two;
  std::sort(one_sorted.begin(), one_sorted.end());
  std::sort(two_sorted.begin(), two_sorted.end());
  auto in = [](const std::vector<Point>& s, Point p) { return std::binary_search(s.begin(), s.end(), p); };
  auto col = [&](Point p) { return inst.color_or_background(p); };

  for (Point p : one) {
    if (col(p) != Color::k1) r.fail(p, "1-track cell coloured " + std::string(1, to_char(col(p))));
  }
  for (Point p : two) {
    if (col(p) != Color::k2) r.fail(p, "2-track cell coloured " + std::string(1, to_char(col(p))));
  }

  // `partner` is the other track; it must appear on side `toward` and a 0 on the other side.
  auto track = [&](const std::vector<Point>& cells, const std::vector<Point>& partner, int toward,
                   const char* name) {
    for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
      const Point a = cells[i];
      const Point b = cells[i + 1];
      ++r.checked;
      if (!unit_step(a, b)) {
        r.fail(b, std::string(name) + " cells not adjacent");
        continue;
      }
      const Point rv = right_vec(b - a);
      const Point side_in{rv.x * toward, rv.y * toward};
      const Point side_out{-side_in.x, -side_in.y};
      if (!in(partner, a + side_in) && !in(partner, b + side_in)) {
        r.fail(a, std::string(name) + " step lacks a partner-track neighbour");
      }
      if (col(a + side_out) != Color::k0 && col(b + side_out) != Color::k0) {
        r.fail(a, std::string(name) + " step lacks a 0 neighbour on its outer side");
      }
    }
  };
  track(one, two_sorted, +1, "1-track");
  track(two, one_sorted, -1, "2-track");
  return r;
}

CheckReport check_wire_separation(const QbfFormula& formula, const LayoutParams& params) {
  CheckReport r{"wire separation"};
  const int n = formula.num_vars();
  const int m = domain_size_param(n, params);
  const Coord side = Coord{1} << m;
  check_limit(full_region(m), kDefaultDensifyLimit);

  std::vector<WirePolyline> wires;
  Prefix x;
  std::function<void()> visit = [&] {
    std::vector<WirePolyline> own = structure_wires(formula, x, params);
    const Box box = layout(formula, x, params).box;
    const std::size_t gadget = x.empty() ? own.size() - 4 : own.size();
    for (std::size_t i = 0; i < own.size(); ++i) {
      if (i < gadget) {
        for (const auto& cells : {own[i].one_track_cells(), own[i].two_track_cells()}) {
          for (Point p : cells) {
            if (!box.contains(p)) r.fail(p, "wire '" + own[i].label() + "' leaves its owner's box");
          }
        }
      }
      wires.push_back(std::move(own[i]));
    }
    if (static_cast<int>(x.size()) == n) return;
    for (bool b : {false, true}) {
      x.push_back(b);
      visit();
      x.pop_back();
    }
  };
  visit();

  // Union wires joined end to start.
  std::vector<std::size_t> parent(wires.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
    return parent[i] == i ? i : parent[i] = find(parent[i]);
  };
  std::map<Point, std::size_t> starts;
  for (std::size_t i = 0; i < wires.size(); ++i) {
    if (!starts.emplace(wires[i].waypoints().front(), i).second) {
      r.fail(wires[i].waypoints().front(), "two wires start at the same cell");
    }
  }
  for (std::size_t i = 0; i < wires.size(); ++i) {
    auto it = starts.find(wires[i].waypoints().back());
    if (it != starts.end()) parent[find(i)] = find(it->second);
  }

  std::vector<std::int32_t> owner(static_cast<std::size_t>(side * side), -1);
  std::int32_t origin_chain = -1;
  for (std::size_t i = 0; i < wires.size(); ++i) {
    const auto chain = static_cast<std::int32_t>(find(i));
    if (wires[i].waypoints().front() == Point{0, 0}) origin_chain = chain;
    for (const auto& cells : {wires[i].one_track_cells(), wires[i].two_track_cells()}) {
      for (Point p : cells) {
        if (p.x < 0 || p.y < 0 || p.x >= side || p.y >= side) {
          r.fail(p, "wire '" + wires[i].label() + "' leaves the domain");
          continue;
        }
        std::int32_t& o = owner[static_cast<std::size_t>(p.y * side + p.x)];
        if (o != -1 && o != chain) r.fail(p, "wires overlap");
        o = chain;
      }
    }
  }
  for (Coord y = 0; y < side; ++y) {
    for (Coord xx = 0; xx < side; ++xx) {
      const std::int32_t o = owner[static_cast<std::size_t>(y * side + xx)];
      if (o == -1) continue;
      ++r.checked;
      const bool border = xx == 0 || y == 0 || xx == side - 1 || y == side - 1;
      if (border && o != origin_chain) r.fail({xx, y}, "wire cell on the border");
      for (Coord dy = -1; dy <= 1; ++dy) {
        for (Coord dx = -1; dx <= 1; ++dx) {
          const Coord nx = xx + dx;
          const Coord ny = y + dy;
          if (nx < 0 || ny < 0 || nx >= side || ny >= side) continue;
          const std::int32_t q = owner[static_cast<std::size_t>(ny * side + nx)];
          if (q != -1 && q != o) r.fail({xx, y}, "two wires at L-inf distance 1");
        }
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------

namespace {

// Routing check; `touched` collects the vertices of every square the two traces visit.
CheckReport route(const QbfFormula& formula, const Prefix& x, const LayoutParams& params,
                  const RoutingOptions& opts, std::set<Point>* touched) {
  CheckReport r{"routing x=" + (x.empty() ? std::string("e") : prefix_to_string(x))};
  const StructureLayout lay = layout(formula, x, params);
  const int m = domain_size_param(formula.num_vars(), params);
  const BrouwerInstance inst =
      opts.coloring ? BrouwerInstance(m, opts.coloring) : build_brouwer(formula, params);
  const Box& b = lay.box;
  const Coord c = lay.left_in.at.y;
  const bool truth = eval_qbf(formula, x);

  auto inside = [&](const Square& s) {
    return s.anchor.x >= b.x && s.anchor.y >= b.y && s.anchor.x + 1 <= b.right() &&
           s.anchor.y + 1 <= b.top();
  };
  const std::uint64_t cap = 4 * static_cast<std::uint64_t>(b.width) * static_cast<std::uint64_t>(b.height);

  auto trace = [&](WalkState st, const std::string& from) -> std::optional<Square> {
    while (inside(st.current)) {
      if (touched) {
        for (Point v : st.current.vertices()) touched->insert(v);
      }
      StepResult step;
      try {
        step = brouwer_step(inst, st);
      } catch (const MalformedInstance& e) {
        r.fail(st.current.anchor, "trace from " + from + ": " + e.what());
        return std::nullopt;
      }
      if (const Square* sol = std::get_if<Square>(&step)) {
        r.fail(sol->anchor, "trace from " + from + " stops at a wire end inside the box");
        return std::nullopt;
      }
      st = std::get<WalkState>(step);
      if (++r.checked > cap) {
        r.fail(st.current.anchor, "trace from " + from + " does not leave the box");
        return std::nullopt;
      }
    }
    return st.current;
  };

  const Square yes{{b.right(), c - 5}};
  const Square no{{b.right(), c + 3}};
  auto expect = [&](const std::optional<Square>& got, const Square& want, const std::string& from,
                    const char* want_name) {
    if (got && *got != want) {
      r.fail(got->anchor, "trace from " + from + " leaves the box away from " + want_name);
    }
  };
  expect(trace(WalkState{Square{{b.x, c - 1}}, Direction::kRight, 0}, "left_in"), truth ? yes : no,
         "left_in", truth ? "yes_out" : "no_out");
  expect(trace(WalkState{Square{{b.right() - 1, c}}, Direction::kLeft, 0}, "right_in"),
         truth ? no : yes, "right_in", truth ? "no_out" : "yes_out");

  if (opts.mode == RoutingMode::kExhaustive) {
    const Region anchors{b.x, b.y, b.right(), b.top()};
    for (const Square& s : enumerate_solutions(inst, anchors)) {
      r.fail(s.anchor, "trichromatic square inside the box");
    }
    r.checked += anchors.area();
  }
  return r;
}

}  // namespace

CheckReport check_structure_routing(const QbfFormula& formula, const Prefix& x,
                                    const LayoutParams& params, const RoutingOptions& opts) {
  return route(formula, x, params, opts, nullptr);
}

// ---------------------------------------------------------------------------

CheckReport check_reduction_correspondence(const BrouwerInstance& inst,
                                           const std::optional<SpernerInstance>& reduced) {
  CheckReport r{"reduction correspondence"};
  const SpernerInstance sp = reduced ? *reduced : brouwer_to_sperner(inst);
  const Coord side = sp.side();

  for (const Triangle& t : enumerate_solutions(sp, Region{0, 0, side - 1, side - 1})) {
    ++r.checked;
    const Square s = sperner_solution_to_brouwer(t);
    const bool ok = s.anchor.x >= 0 && s.anchor.y >= 0 && s.anchor.x + 1 < inst.side() &&
                    s.anchor.y + 1 < inst.side() && trichromatic_square(inst, s);
    if (!ok) r.fail(t.anchor, "g maps a Sperner solution to a non-solution square " + pt(s.anchor));
  }

  const WalkResult bw = brouwer_walk(inst, default_cap(inst.size_param()), TraceOptions{0, true});
  const SpernerWalkResult sw = sperner_walk(sp, default_cap(sp.size_param()), TraceOptions{0, true});
  if (bw.outcome != WalkOutcome::kSolution) {
    r.fail({0, 0}, "Brouwer walk did not finish: " + std::string(to_string(bw.outcome)) + " " + bw.error);
    return r;
  }
  if (sw.outcome != WalkOutcome::kSolution) {
    r.fail({0, 0}, "Sperner walk did not finish: " + std::string(to_string(sw.outcome)) + " " + sw.error);
    return r;
  }

  // g of the Sperner trace, ignoring virtual cells, must advance through the
  // Brouwer trace one square at a time.
  std::size_t at = 0;
  for (const SpernerCell& cell : sw.trace) {
    if (cell.is_virtual) continue;
    ++r.checked;
    const Square g = sperner_solution_to_brouwer(cell.triangle);
    if (g == bw.trace[at].current) continue;
    if (at + 1 < bw.trace.size() && g == bw.trace[at + 1].current) {
      ++at;
      continue;
    }
    r.fail(cell.triangle.anchor, "lockstep broken: g jumps from " + pt(bw.trace[at].current.anchor) +
                                     " to " + pt(g.anchor));
    return r;
  }
  if (sperner_solution_to_brouwer(*sw.solution) != *bw.solution || at + 1 != bw.trace.size()) {
    r.fail(sw.solution->anchor, "Sperner endpoint maps to " +
                                    pt(sperner_solution_to_brouwer(*sw.solution).anchor) +
                                    ", Brouwer endpoint is " + pt(bw.solution->anchor));
  }
  return r;
}

CheckReport check_eol_degrees(const BrouwerInstance& inst) {
  CheckReport r{"eol degrees"};
  const int m = inst.size_param();
  const Coord side = inst.side();
  const EolInstance e = brouwer_as_eol(inst);
  constexpr int kTags = 5;
  auto index = [&](const Square& s, Direction d) {
    return static_cast<std::size_t>((s.anchor.y * (side - 1) + s.anchor.x) * kTags +
                                    static_cast<int>(d));
  };
  const std::size_t count = static_cast<std::size_t>((side - 1) * (side - 1) * kTags);
  if (count > kDefaultDensifyLimit * kTags) throw DomainError("instance too large for a degree sweep");
  std::vector<std::uint8_t> indeg(count, 0);
  std::vector<std::uint8_t> outdeg(count, 0);
  std::vector<std::uint8_t> valid(count, 0);

  for (Coord y = 0; y + 1 < side; ++y) {
    for (Coord x = 0; x + 1 < side; ++x) {
      for (int t = 0; t < kTags; ++t) {
        const Square s{{x, y}};
        const auto d = static_cast<Direction>(t);
        if (!eol_node_valid(inst, s, d)) continue;
        ++r.checked;
        const std::size_t i = index(s, d);
        valid[i] = 1;
        const std::uint64_t u = encode_eol_node(m, s, d);
        const std::uint64_t v = e.successor(u);
        if (!e.has_arc(u, v)) continue;
        const auto [vs, vd] = decode_eol_node(m, v);
        ++outdeg[i];
        if (++indeg[index(vs, vd)] > 1) r.fail(vs.anchor, "node with in-degree 2");
      }
    }
  }
  for (Coord y = 0; y + 1 < side; ++y) {
    for (Coord x = 0; x + 1 < side; ++x) {
      for (int t = 0; t < kTags; ++t) {
        const Square s{{x, y}};
        const auto d = static_cast<Direction>(t);
        const std::size_t i = index(s, d);
        if (!valid[i] || indeg[i] == outdeg[i]) continue;
        if (x == 0 && y == 0 && d == Direction::kStart) continue;
        const bool here = trichromatic_square(inst, s);
        const bool behind = d != Direction::kStart && trichromatic_square(inst, Square{s.anchor - offset(d)});
        if (!here && !behind) r.fail(s.anchor, "unbalanced node away from any solution");
      }
    }
  }
  if (outdeg[index(Square{{0, 0}}, Direction::kStart)] + (trichromatic_square(inst, Square{{0, 0}}) ? 1 : 0) != 1) {
    r.fail({0, 0}, "source node 0 has no outgoing arc");
  }
  return r;
}

CheckReport check_boundary(const BrouwerInstance& inst, std::uint64_t samples, std::uint64_t seed) {
  CheckReport r{"boundary"};
  const int m = inst.size_param();
  const Coord side = inst.side();
  auto test = [&](Point p) {
    ++r.checked;
    const Color want = *boundary_color_brouwer(m, p);
    const Color got = inst.color(p);
    if (got != want) {
      r.fail(p, "border colour " + std::string(1, to_char(got)) + ", expected " + to_char(want));
    }
  };
  const std::uint64_t border = 4 * static_cast<std::uint64_t>(side - 1);
  if (border <= samples) {
    for (Coord i = 0; i < side; ++i) {
      test({0, i});
      test({side - 1, i});
      if (i > 0 && i < side - 1) {
        test({i, 0});
        test({i, side - 1});
      }
    }
    return r;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Coord> coord(0, side - 1);
  std::uniform_int_distribution<int> edge(0, 3);
  for (std::uint64_t k = 0; k < samples; ++k) {
    const Coord t = coord(rng);
    switch (edge(rng)) {
      case 0:
        test({0, t});
        break;
      case 1:
        test({t, 0});
        break;
      case 2:
        test({side - 1, t});
        break;
      default:
        test({t, side - 1});
        break;
    }
  }
  return r;
}

CheckReport check_routing_mutations(const QbfFormula& formula, const LayoutParams& params,
                                    RoutingMode mode, std::shared_ptr<const Coloring> base) {
  CheckReport r{"routing mutations"};
  if (!base) base = build_brouwer(formula, params).coloring();
  const int n = formula.num_vars();
  Prefix x;
  std::uint64_t serial = 0;
  std::function<void()> visit = [&] {
    std::vector<WirePolyline> wires = structure_wires(formula, x, params);
    if (x.empty()) wires.erase(wires.end() - 4, wires.end());  // outer wires lie outside the box

    // Trace mode only sees cells next to the terminal traces; wires on closed
    // loops (both children of a connector true) are skipped there.
    std::set<Point> touched;
    if (mode == RoutingMode::kTraceBased) route(formula, x, params, RoutingOptions{mode, base}, &touched);
    const WirePolyline* w = nullptr;
    Point target;
    for (std::size_t k = 0; k < 2 * wires.size() && !w; ++k) {
      const std::size_t pick = serial + k;
      const WirePolyline& cand = wires[pick % wires.size()];
      const std::vector<Point> cells = (pick / wires.size()) % 2 == 0 ? cand.one_track_cells()
                                                                       : cand.two_track_cells();
      const Point mid = cells[cells.size() / 2];
      if (mode == RoutingMode::kExhaustive || touched.count(mid)) {
        w = &cand;
        target = mid;
      }
    }
    ++serial;
    if (!w) {
      const Box& b = layout(formula, x, params).box;
      r.fail({b.x, b.y}, "no wire cell on the traces of x=" + prefix_to_string(x));
    } else {
      RoutingOptions opts{mode, std::make_shared<MutatedColoring>(
                                    base, std::vector<std::pair<Point, Color>>{{target, Color::k0}})};
      ++r.checked;
      if (check_structure_routing(formula, x, params, opts).passed) {
        r.fail(target, "defect in '" + w->label() + "' of x=" + prefix_to_string(x) + " not detected");
      }
    }
    if (static_cast<int>(x.size()) == n) return;
    for (bool b : {false, true}) {
      x.push_back(b);
      visit();
      x.pop_back();
    }
  };
  visit();
  return r;
}

CheckReport check_reduction_mutation(const BrouwerInstance& inst) {
  CheckReport r{"reduction mutation"};
  const SpernerInstance sp = brouwer_to_sperner(inst);
  const SpernerWalkResult sw = sperner_walk(sp, default_cap(sp.size_param()), TraceOptions{0, true});
  std::vector<Triangle> path;
  for (const SpernerCell& c : sw.trace) {
    if (!c.is_virtual) path.push_back(c.triangle);
  }
  if (path.size() < 3) {
    r.fail({0, 0}, "Sperner walk too short to mutate");
    return r;
  }
  const Triangle t = path[path.size() / 2];
  const auto vs = t.vertices();
  std::array<Color, 3> cs{};
  for (std::size_t i = 0; i < 3; ++i) cs[i] = sp.color(vs[i]);
  // A path triangle holds colours 1 and 2; recolour a duplicated one to 0.
  std::optional<Point> target;
  for (std::size_t i = 0; i < 3 && !target; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (cs[i] == cs[j]) target = vs[i];
    }
  }
  if (!target) {
    r.fail(t.anchor, "mid-path triangle is already trichromatic");
    return r;
  }
  const SpernerInstance mutated(
      sp.size_param(), std::make_shared<MutatedColoring>(
                           sp.coloring(), std::vector<std::pair<Point, Color>>{{*target, Color::k0}}));
  ++r.checked;
  if (check_reduction_correspondence(inst, mutated).passed) {
    r.fail(*target, "recoloured Sperner point not detected");
  }
  return r;
}

std::uint64_t grid_hash(const DenseGrid& g) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 0x100000001b3ull;
    }
  };
  mix(static_cast<std::uint64_t>(g.region.x0));
  mix(static_cast<std::uint64_t>(g.region.y0));
  mix(static_cast<std::uint64_t>(g.region.x1));
  mix(static_cast<std::uint64_t>(g.region.y1));
  for (Color c : g.cells) {
    h ^= static_cast<std::uint64_t>(c);
    h *= 0x100000001b3ull;
  }
  return h;
}

MutatedColoring::MutatedColoring(std::shared_ptr<const Coloring> base,
                                 std::vector<std::pair<Point, Color>> edits)
    : base_(std::move(base)), edits_(std::move(edits)) {
  if (!base_) throw InvalidArgument("null colouring");
}

Color MutatedColoring::color_at(Point p) const {
  for (const auto& [q, c] : edits_) {
    if (q == p) return c;
  }
  return base_->color_at(p);
}

}  // namespace sperner
