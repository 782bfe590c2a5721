// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "sperner/construction.hpp"
#include "sperner/reduction.hpp"
#include "sperner/verify.hpp"
#include "sperner/walker.hpp"
#include "support/examples.hpp"
#include "support/gen.hpp"

using namespace sperner;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Verdict {
  bool passed = true;
  std::vector<std::string> failures;  // first three kept
  std::size_t failure_count = 0;
  void fail(const std::string& why) {
    if (failures.size() < 3) failures.push_back(why);
    ++failure_count;
    passed = false;
  }
};

int g_failed = 0;

void report(int id, const Verdict& v, const std::string& summary) {
  std::cout << "criterion " << id << ": " << (v.passed ? "PASS" : "FAIL") << " - " << summary;
  if (!v.passed) {
    std::cout << " [";
    for (std::size_t i = 0; i < v.failures.size(); ++i) std::cout << (i ? "; " : "") << v.failures[i];
    if (v.failure_count > v.failures.size()) std::cout << "; ... " << v.failure_count << " in total";
    std::cout << "]";
  }
  std::cout << "\n" << std::flush;
  if (!v.passed) ++g_failed;
}

std::string sq(const Square& s) {
  return "(" + std::to_string(s.anchor.x) + "," + std::to_string(s.anchor.y) + ")";
}

enum class Endpoint { kYes, kNo, kAux, kOther, kNone };

Endpoint classify(const std::optional<Square>& s, const TerminalSquares& t) {
  if (!s) return Endpoint::kNone;
  if (*s == t.yes) return Endpoint::kYes;
  if (*s == t.no) return Endpoint::kNo;
  if (*s == t.aux_source) return Endpoint::kAux;
  return Endpoint::kOther;
}

std::vector<Prefix> all_prefixes(int n) {
  std::vector<Prefix> out{Prefix{}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (static_cast<int>(out[i].size()) == n) continue;
    for (bool b : {false, true}) {
      Prefix p = out[i];
      p.push_back(b);
      out.push_back(p);
    }
  }
  return out;
}

// One formula of the family together with what later criteria reuse.
struct Case {
  QbfFormula formula;
  bool truth = false;
  std::optional<Square> walk_end;
  std::size_t grid = 0;  // index into the distinct-grid table
};

// A distinct colouring. Formulas whose instances coincide point for point share
// every structural check.
struct DistinctGrid {
  std::size_t representative = 0;  // index of the first case with this grid
  std::shared_ptr<const Coloring> coloring;  // dense when it matched the rasterization
  int m = 0;
};

}  // namespace

int main() {
  const LayoutParams params;

  std::vector<QbfFormula> family = gen::exhaustive_family(3);
  const std::size_t exhaustive_count = family.size();
  gen::Rng rng(20240601);
  for (int i = 0; i < 100; ++i) family.push_back(gen::random_formula(rng, 3, 6, 3));
  std::cout << "family: " << exhaustive_count << " exhaustive + 100 random formulas\n";

  std::vector<Case> cases;
  cases.reserve(family.size());

  // 1. build + follow classifies the endpoint as YES iff the formula is true.
  {
    Verdict v;
    const auto t0 = Clock::now();
    std::size_t mismatches = 0;
    for (const QbfFormula& f : family) {
      Case c{f, eval_qbf(f, {}), std::nullopt, 0};
      const BrouwerInstance inst = build_brouwer(f, params);
      const WalkResult r = brouwer_walk(inst, default_cap(inst.size_param()));
      c.walk_end = r.solution;
      const Endpoint e = classify(r.solution, terminals(f, params));
      if (e != (c.truth ? Endpoint::kYes : Endpoint::kNo)) {
        ++mismatches;
        v.fail(gen::describe(f) + ": walk " + std::string(to_string(r.outcome)));
      }
      cases.push_back(std::move(c));
    }
    const double secs = seconds_since(t0);
    if (secs >= 30.0) v.fail("runtime " + std::to_string(secs) + " s");
    std::ostringstream s;
    s << cases.size() << " formulas, " << mismatches << " mismatches, " << secs << " s";
    report(1, v, s.str());
  }

  // 2-4 per instance; identical grids are collected for 5, 6 and 8.
  std::vector<DistinctGrid> grids;
  std::multimap<std::uint64_t, std::size_t> by_hash;
  std::vector<std::vector<Color>> grid_cells;
  Verdict v2, v3, v4;
  std::uint64_t points3 = 0, border4 = 0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const QbfFormula& f = cases[i].formula;
    const BrouwerInstance lazy = build_brouwer(f, params);
    const int m = lazy.size_param();
    const DenseGrid dense = densify(lazy, full_region(m));

    const Rasterization ras = rasterize_full(f, params);
    bool agree = ras.conflicts.empty() && ras.cells == dense.cells;
    if (!ras.conflicts.empty()) v3.fail(gen::describe(f) + ": rasterization conflict");
    else if (!agree) v3.fail(gen::describe(f) + ": lazy and dense colourings differ");
    points3 += dense.cells.size();

    const CheckReport b = check_boundary(lazy, 1u << 20);
    border4 += b.checked;
    if (!b.passed) v4.fail(gen::describe(f) + ": " + format_report(b));

    // Dense backing only when the two colourings agree; otherwise keep the lazy one.
    std::shared_ptr<const Coloring> backing =
        agree ? std::shared_ptr<const Coloring>(std::make_shared<DenseColoring>(lazy.side(), lazy.side(), dense.cells))
              : lazy.coloring();
    const BrouwerInstance inst(m, backing);

    const TerminalSquares t = terminals(f, params);
    std::vector<Square> want{t.yes, t.no, t.aux_source};
    std::sort(want.begin(), want.end());
    const auto sols = enumerate_solutions(inst, Region{0, 0, inst.side() - 1, inst.side() - 1});
    if (sols != want) {
      std::string got;
      for (const Square& s : sols) got += sq(s);
      v2.fail(gen::describe(f) + ": solutions " + got);
    }

    const std::uint64_t h = grid_hash(dense);
    std::optional<std::size_t> found;
    for (auto [it, end] = by_hash.equal_range(h); it != end; ++it) {
      if (grid_cells[it->second] == dense.cells) found = it->second;
    }
    if (!found || !agree) {
      found = grids.size();
      grids.push_back({i, backing, m});
      grid_cells.push_back(dense.cells);
      by_hash.emplace(h, *found);
    }
    cases[i].grid = *found;
  }
  report(2, v2, std::to_string(cases.size()) + " instances scanned for exactly {YES, NO, aux}");
  report(3, v3, std::to_string(points3) + " points compared against an independent rasterization");

  // 4 at scale: sampled border of an n = 10 instance.
  {
    gen::Rng big_rng(4242);
    const QbfFormula big = gen::random_formula(big_rng, 10, 12, 3);
    const BrouwerInstance inst = build_brouwer(big, params);
    const CheckReport b = check_boundary(inst, 10000, 7);
    if (!b.passed) v4.fail("n=10: " + format_report(b));
    std::ostringstream s;
    s << border4 << " border points over the family (exhaustive), " << b.checked
      << " samples at n=10 (m=" << inst.size_param() << ")";
    report(4, v4, s.str());
  }
  std::cout << "distinct grids: " << grids.size() << "\n";

  // 5. routing for every prefix, and mutation runs must be rejected.
  {
    Verdict v;
    std::uint64_t structures = 0, mutants = 0;
    for (const DistinctGrid& g : grids) {
      const QbfFormula& f = cases[g.representative].formula;
      RoutingOptions opts;
      opts.mode = RoutingMode::kExhaustive;
      opts.coloring = g.coloring;
      for (const Prefix& x : all_prefixes(f.num_vars())) {
        const CheckReport r = check_structure_routing(f, x, params, opts);
        ++structures;
        if (!r.passed) v.fail(gen::describe(f) + " prefix '" + prefix_to_string(x) + "': " + format_report(r));
      }
      for (RoutingMode mode : {RoutingMode::kExhaustive, RoutingMode::kTraceBased}) {
        const CheckReport mut = check_routing_mutations(f, params, mode, g.coloring);
        mutants += mut.checked;
        if (!mut.passed) v.fail(gen::describe(f) + ": " + format_report(mut));
      }
    }
    std::ostringstream s;
    s << structures << " structures routed over " << grids.size() << " distinct grids, " << mutants
      << " seeded defects (exhaustive and trace modes) all rejected";
    report(5, v, s.str());
  }

  // 6. reduction correspondence.
  {
    Verdict v;
    std::uint64_t steps = 0;
    for (const DistinctGrid& g : grids) {
      const CheckReport r = check_reduction_correspondence(BrouwerInstance(g.m, g.coloring));
      steps += r.checked;
      if (!r.passed) v.fail(gen::describe(cases[g.representative].formula) + ": " + format_report(r));
    }
    report(6, v, std::to_string(grids.size()) + " distinct grids, " + std::to_string(steps) +
                     " points/steps checked");
  }

  // 7. the small worked example and its reduction.
  {
    Verdict v;
    const BrouwerInstance small = fixtures::small_grid();
    TraceOptions keep;
    keep.full = true;
    const WalkResult w = brouwer_walk(small, default_cap(2), keep);
    std::vector<Point> visited;
    for (const WalkState& s : w.trace) visited.push_back(s.current.anchor);
    if (visited != fixtures::kSmallGridWalk) v.fail("walk visits a different square sequence");
    if (!w.solution || *w.solution != Square{{2, 0}}) v.fail("walk does not end at (2,0)");
    const std::vector<Square> small_sols = enumerate_solutions(small, Region{0, 0, 3, 3});
    if (small_sols != std::vector<Square>{Square{{2, 0}}}) {
      std::string all;
      for (const Square& s : small_sols) all += sq(s);
      v.fail("(2,0) is not the unique solution: trichromatic squares " + all);
    }

    const SpernerInstance sp = brouwer_to_sperner(small);
    const DenseGrid g = densify(sp, full_region(sp.size_param()));
    std::vector<Point> diff;
    for (Coord y = 0; y < sp.side(); ++y) {
      for (Coord x = 0; x + y < sp.side(); ++x) {
        if (g.at({x, y}) != fixtures::small_reduced_as_drawn({x, y})) diff.push_back({x, y});
      }
    }
    std::string where;
    for (Point p : diff) where += sq(Square{p});
    if (!diff.empty()) {
      v.fail("reduced grid differs from the drawn triangulation at " + where + " (rule gives " +
             std::string(1, to_char(g.at(diff.front()))) + ", drawing shows " +
             std::string(1, to_char(fixtures::small_reduced_as_drawn(diff.front()))) + ")");
    }
    const SpernerWalkResult sw = sperner_walk(sp, default_cap(sp.size_param()));
    if (!sw.solution || sperner_solution_to_brouwer(*sw.solution) != Square{{2, 0}}) {
      v.fail("Sperner walk does not end inside the doubled square (2,0)");
    }
    std::ostringstream s;
    s << "walk " << visited.size() << " squares to " << (w.solution ? sq(*w.solution) : "none")
      << ", " << small_sols.size() << " trichromatic square(s); reduced grid differs from drawing at " << diff.size() << " point(s); Sperner endpoint maps to "
      << (sw.solution ? sq(sperner_solution_to_brouwer(*sw.solution)) : "none");
    report(7, v, s.str());
  }

  // 8. End-of-Line view.
  {
    Verdict v;
    std::uint64_t nodes = 0;
    std::vector<bool> degree_done(grids.size(), false);
    for (const Case& c : cases) {
      const DistinctGrid& g = grids[c.grid];
      const BrouwerInstance inst(g.m, g.coloring);
      const EolInstance e = brouwer_as_eol(inst);
      const EolResult r = eol_follow(e, default_cap(g.m) * 8);
      const auto [end, dir] = decode_eol_node(g.m, r.node);
      if (r.outcome != WalkOutcome::kSolution || !c.walk_end || end != *c.walk_end) {
        v.fail(gen::describe(c.formula) + ": EOL endpoint " + sq(end) + " vs walk " +
               (c.walk_end ? sq(*c.walk_end) : "none"));
      }
      if (!degree_done[c.grid]) {
        degree_done[c.grid] = true;
        const CheckReport d = check_eol_degrees(inst);
        nodes += d.checked;
        if (!d.passed) v.fail(gen::describe(c.formula) + ": " + format_report(d));
      }
    }
    report(8, v, std::to_string(cases.size()) + " endpoints compared, " + std::to_string(nodes) +
                     " nodes degree-checked");
  }

  // 9. one n = 10 instance end to end, plus oracle query latency.
  {
    Verdict v;
    gen::Rng big_rng(99);
    const QbfFormula f = gen::random_formula(big_rng, 10, 12, 3);
    const auto t0 = Clock::now();
    const bool truth = eval_qbf(f, {});
    const BrouwerInstance inst = build_brouwer(f, params);
    const WalkResult w = brouwer_walk(inst, default_cap(inst.size_param()));
    const double secs = seconds_since(t0);
    const Endpoint e = classify(w.solution, terminals(f, params));
    if (w.outcome != WalkOutcome::kSolution) v.fail("walk " + std::string(to_string(w.outcome)));
    if (e != (truth ? Endpoint::kYes : Endpoint::kNo)) v.fail("endpoint does not match eval");
    if (secs >= 60.0) v.fail("wall time " + std::to_string(secs) + " s");

    constexpr int kQueries = 1000000;
    std::vector<Point> pts(kQueries);
    gen::Rng qrng(5);
    const auto side = static_cast<std::uint64_t>(inst.side());
    for (Point& p : pts) p = {static_cast<Coord>(qrng.bits() % side), static_cast<Coord>(qrng.bits() % side)};
    unsigned sink = 0;
    const auto q0 = Clock::now();
    for (const Point& p : pts) sink += static_cast<unsigned>(inst.color(p));
    const double per_query_us = seconds_since(q0) * 1e6 / kQueries;

    std::ostringstream s;
    s << "n=10, m=" << inst.size_param() << ", eval " << (truth ? "TRUE" : "FALSE") << ", walk "
      << w.steps << " steps, " << secs << " s; mean query " << per_query_us << " us (target < 50, not gated"
      << (sink == 0 ? "" : "") << ")";
    report(9, v, s.str());
  }

  std::cout << (g_failed == 0 ? "all criteria passed" : std::to_string(g_failed) + " criterion(s) failed")
            << "\n";
  return g_failed == 0 ? 0 : 1;
}
