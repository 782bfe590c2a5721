// sperner_forge: build, walk, render and verify QBF-derived Brouwer/Sperner instances.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "sperner/construction.hpp"
#include "sperner/descriptor.hpp"
#include "sperner/qbf.hpp"
#include "sperner/reduction.hpp"
#include "sperner/render.hpp"
#include "sperner/verify.hpp"
#include "sperner/walker.hpp"

namespace {

using namespace sperner;
using nlohmann::json;

enum Exit : int { kOk = 0, kUsage = 1, kVerifyFailed = 2, kCapExceeded = 3, kMalformed = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

json point_json(Point p) { return json::array({p.x, p.y}); }

std::string point_str(Point p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

json report_json(const CheckReport& r) {
  json j{{"check", r.name}, {"passed", r.passed}, {"checked", r.checked}};
  if (r.counterexample) j["counterexample"] = point_json(*r.counterexample);
  if (!r.passed) j["detail"] = r.detail;
  return j;
}

unsigned env_jobs() {
  if (const char* v = std::getenv("SPERNER_FORGE_JOBS")) {
    const int n = std::atoi(v);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return 1;
}

struct Options {
  bool json_out = false;
  unsigned jobs = 0;

  std::string input;
  std::string output;

  LayoutParams params;

  std::uint64_t cap = 0;
  std::string trace_path;
  bool sperner = false;

  std::string region;
  std::string format = "ascii";
  bool overlay_trace = false;
  bool overlay_boxes = false;

  bool exhaustive = false;
  bool trace_based = false;
  bool mutation = false;
};

Region region_or_full(const Options& o, Coord side) {
  return o.region.empty() ? Region{0, 0, side, side} : parse_region(o.region);
}

std::optional<std::string> classify(const LoadedInstance& inst, const Square& s) {
  if (!inst.descriptor) return std::nullopt;
  const TerminalSquares t = terminals(inst.descriptor->formula, inst.descriptor->params);
  if (s == t.yes) return "YES";
  if (s == t.no) return "NO";
  if (s == t.aux_source) return "AUX";
  return "OTHER";
}

// --- subcommands ----------------------------------------------------------

int cmd_eval(const Options& o) {
  const QbfFormula f = parse_qdimacs(read_file(o.input));
  const bool v = eval_qbf(f, {});
  if (o.json_out) {
    std::cout << json{{"value", v}}.dump() << "\n";
  } else {
    std::cout << (v ? "TRUE" : "FALSE") << "\n";
  }
  return kOk;
}

int cmd_build(const Options& o) {
  const InstanceDescriptor d{parse_qdimacs(read_file(o.input)), o.params};
  const int m = domain_size_param(d.formula.num_vars(), d.params);
  write_output(o.output, descriptor_to_json(d));
  if (o.json_out && !o.output.empty() && o.output != "-") {
    std::cout << json{{"output", o.output}, {"m", m}}.dump() << "\n";
  } else if (!o.output.empty() && o.output != "-") {
    std::cout << "wrote " << o.output << " (m=" << m << ")\n";
  }
  return kOk;
}

int cmd_follow(const Options& o) {
  const LoadedInstance inst = load_instance(read_file(o.input));
  std::ofstream log;
  TraceOptions trace;
  if (!o.trace_path.empty()) {
    log.open(o.trace_path);
    if (!log) throw UsageError("cannot write '" + o.trace_path + "'");
    trace.log = &log;
  }

  json j;
  std::string text;
  WalkOutcome outcome;
  std::string error;
  std::uint64_t steps = 0;
  std::optional<Square> mapped;

  if (o.sperner || inst.is_sperner()) {
    const SpernerInstance sp = inst.sperner ? *inst.sperner : brouwer_to_sperner(*inst.brouwer);
    const SpernerWalkResult r = sperner_walk(sp, o.cap ? o.cap : default_cap(sp.size_param()), trace);
    outcome = r.outcome;
    error = r.error;
    steps = r.steps;
    if (r.solution) {
      const Triangle& t = *r.solution;
      const char* kind = t.kind == TriangleKind::kLower ? "lower" : "upper";
      j["triangle"] = {{"anchor", point_json(t.anchor)}, {"kind", kind}};
      text = "endpoint triangle " + point_str(t.anchor) + " " + kind;
      if (inst.brouwer) {
        mapped = sperner_solution_to_brouwer(t);
        j["square"] = point_json(mapped->anchor);
        text += " -> square " + point_str(mapped->anchor);
      }
    }
  } else {
    const BrouwerInstance& b = *inst.brouwer;
    const WalkResult r = brouwer_walk(b, o.cap ? o.cap : default_cap(b.size_param()), trace);
    outcome = r.outcome;
    error = r.error;
    steps = r.steps;
    if (r.solution) {
      mapped = r.solution;
      j["square"] = point_json(r.solution->anchor);
      text = "endpoint square " + point_str(r.solution->anchor);
    }
  }

  j["outcome"] = std::string(to_string(outcome));
  j["steps"] = steps;
  if (outcome == WalkOutcome::kSolution) {
    text += " steps " + std::to_string(steps);
    if (mapped) {
      if (auto c = classify(inst, *mapped)) {
        j["terminal"] = *c;
        text += " " + *c + " terminal";
      }
    }
  } else {
    text = std::string(to_string(outcome)) + " after " + std::to_string(steps) + " steps";
    if (!error.empty()) {
      j["error"] = error;
      text += ": " + error;
    }
  }
  std::cout << (o.json_out ? j.dump() : text) << "\n";
  if (outcome == WalkOutcome::kCapExceeded) return kCapExceeded;
  if (outcome == WalkOutcome::kError) return kMalformed;
  return kOk;
}

int cmd_render(const Options& o) {
  const LoadedInstance inst = load_instance(read_file(o.input));
  if (o.format != "ascii" && o.format != "svg") throw UsageError("--format must be ascii or svg");
  const Coord side = inst.is_sperner() ? inst.sperner->side() : inst.brouwer->side();
  const Region region = region_or_full(o, side);

  std::string doc;
  if (o.format == "ascii") {
    doc = inst.is_sperner() ? render_ascii(*inst.sperner, region) : render_ascii(*inst.brouwer, region);
  } else {
    SvgOverlay overlay;
    if (o.overlay_trace && !inst.is_sperner()) {
      const BrouwerInstance& b = *inst.brouwer;
      for (const WalkState& s : brouwer_walk(b, default_cap(b.size_param()), {0, true}).trace) {
        overlay.trace.push_back(s.current);
      }
    }
    if (o.overlay_boxes && inst.descriptor && !inst.is_sperner()) {
      const QbfFormula& f = inst.descriptor->formula;
      std::vector<Prefix> stack{Prefix{}};
      while (!stack.empty()) {
        Prefix x = stack.back();
        stack.pop_back();
        overlay.boxes.push_back(layout(f, x, inst.descriptor->params).box);
        if (static_cast<int>(x.size()) == f.num_vars()) continue;
        for (bool bit : {true, false}) {
          Prefix y = x;
          y.push_back(bit);
          stack.push_back(std::move(y));
        }
      }
    }
    doc = inst.is_sperner() ? render_svg(*inst.sperner, region, overlay)
                            : render_svg(*inst.brouwer, region, overlay);
  }
  write_output(o.output, doc);
  return kOk;
}

int cmd_solutions(const Options& o) {
  const LoadedInstance inst = load_instance(read_file(o.input));
  json list = json::array();
  std::string text;
  if (inst.is_sperner()) {
    const SpernerInstance& sp = *inst.sperner;
    const Region r = region_or_full(o, sp.side() - 1);
    for (const Triangle& t : enumerate_solutions(sp, r)) {
      const char* kind = t.kind == TriangleKind::kLower ? "lower" : "upper";
      list.push_back({{"anchor", point_json(t.anchor)}, {"kind", kind}});
      text += "triangle " + point_str(t.anchor) + " " + kind + "\n";
    }
  } else {
    const BrouwerInstance& b = *inst.brouwer;
    const Region r = region_or_full(o, b.side() - 1);
    for (const Square& s : enumerate_solutions(b, r)) {
      json e{{"anchor", point_json(s.anchor)}};
      text += "square " + point_str(s.anchor);
      if (auto c = classify(inst, s)) {
        e["terminal"] = *c;
        text += " " + *c;
      }
      list.push_back(e);
      text += "\n";
    }
  }
  if (o.json_out) {
    std::cout << json{{"solutions", list}}.dump() << "\n";
  } else {
    std::cout << text;
  }
  return kOk;
}

int cmd_reduce(const Options& o) {
  const std::string text = read_file(o.input);
  const LoadedInstance inst = load_instance(text);
  if (inst.is_sperner()) throw UsageError("input is already a Sperner instance");
  std::string out;
  if (inst.descriptor) {
    out = reduced_to_json(*inst.descriptor);
  } else {
    out = reduced_to_json(text);
  }
  write_output(o.output, out);
  if (!o.output.empty() && o.output != "-") {
    const int m = inst.brouwer->size_param() + 2;
    std::cout << (o.json_out ? json{{"output", o.output}, {"m", m}}.dump()
                             : "wrote " + o.output + " (m=" + std::to_string(m) + ")")
              << "\n";
  }
  return kOk;
}

int cmd_verify(const Options& o) {
  const LoadedInstance inst = load_instance(read_file(o.input));
  if (o.exhaustive && o.trace_based) throw UsageError("--exhaustive and --trace-based are exclusive");
  const BrouwerInstance& b = *inst.brouwer;
  const bool dense_ok = full_region(b.size_param()).area() <= kDefaultDensifyLimit;
  const bool exhaustive = o.exhaustive || (!o.trace_based && dense_ok);
  if (exhaustive && !dense_ok) throw UsageError("instance too large for --exhaustive");
  const unsigned jobs = o.jobs ? o.jobs : env_jobs();

  std::vector<CheckReport> reports;
  reports.push_back(check_boundary(b, exhaustive ? 4 * static_cast<std::uint64_t>(b.side()) : 10000));

  if (inst.descriptor) {
    const QbfFormula& f = inst.descriptor->formula;
    const LayoutParams& p = inst.descriptor->params;
    const RoutingMode mode = exhaustive ? RoutingMode::kExhaustive : RoutingMode::kTraceBased;

    // Exhaustive runs reuse one densified copy of the colouring.
    std::shared_ptr<const Coloring> coloring = b.coloring();
    if (exhaustive) {
      DenseGrid g = densify(b, full_region(b.size_param()), kDefaultDensifyLimit, jobs);
      coloring = std::make_shared<DenseColoring>(b.side(), b.side(), std::move(g.cells));
    }
    const BrouwerInstance dense(b.size_param(), coloring);

    CheckReport routing("structure routing");
    CheckReport wires("wire well-formedness");
    Prefix x;
    std::function<void()> visit = [&] {
      const CheckReport r = check_structure_routing(f, x, p, RoutingOptions{mode, coloring});
      ++routing.checked;
      if (!r.passed) routing.fail(r.counterexample.value_or(Point{}), r.name + ": " + r.detail);
      if (exhaustive) {
        for (const WirePolyline& w : structure_wires(f, x, p)) {
          const CheckReport wr = check_wire_wellformed(w, dense);
          ++wires.checked;
          if (!wr.passed) wires.fail(wr.counterexample.value_or(Point{}), wr.name + ": " + wr.detail);
        }
      }
      if (static_cast<int>(x.size()) == f.num_vars()) return;
      for (bool bit : {false, true}) {
        x.push_back(bit);
        visit();
        x.pop_back();
      }
    };
    visit();
    reports.push_back(routing);

    const TerminalSquares t = terminals(f, p);
    CheckReport endpoint("walk endpoint");
    const WalkResult walk = brouwer_walk(b, default_cap(b.size_param()));
    const Square want = eval_qbf(f, {}) ? t.yes : t.no;
    if (walk.outcome != WalkOutcome::kSolution) {
      endpoint.fail({0, 0}, "walk ended with " + std::string(to_string(walk.outcome)));
    } else if (*walk.solution != want) {
      endpoint.fail(walk.solution->anchor, "walk ends away from the terminal eval_qbf selects");
    }
    endpoint.checked = walk.steps;
    reports.push_back(endpoint);

    if (exhaustive) {
      reports.push_back(wires);
      reports.push_back(check_wire_separation(f, p));
      CheckReport sols("solution set");
      const std::vector<Square> found = enumerate_solutions(dense, Region{0, 0, b.side() - 1, b.side() - 1});
      std::vector<Square> expected{t.yes, t.no, t.aux_source};
      std::sort(expected.begin(), expected.end());
      sols.checked = found.size();
      if (found != expected) {
        sols.fail(found.empty() ? Point{} : found.front().anchor,
                  std::to_string(found.size()) + " solutions, expected the 3 terminal squares");
      }
      reports.push_back(sols);
      const Rasterization ras = rasterize_full(f, p);
      CheckReport agree("lazy/dense agreement");
      if (!ras.conflicts.empty()) agree.fail(ras.conflicts.front(), "rasterization conflict");
      for (Coord y = 0; y < b.side() && agree.passed; ++y) {
        for (Coord xx = 0; xx < b.side(); ++xx) {
          ++agree.checked;
          if (b.color({xx, y}) != ras.at({xx, y})) {
            agree.fail({xx, y}, "lazy colour differs from rasterization");
            break;
          }
        }
      }
      reports.push_back(agree);
    }
    if (o.mutation) reports.push_back(check_routing_mutations(f, p, mode, coloring));
  }

  if (exhaustive && b.size_param() + 2 <= 12) {
    const BrouwerInstance dense(b.size_param(),
                                std::make_shared<DenseColoring>(
                                    b.side(), b.side(),
                                    densify(b, full_region(b.size_param()), kDefaultDensifyLimit, jobs).cells));
    reports.push_back(check_reduction_correspondence(dense));
    reports.push_back(check_eol_degrees(dense));
    if (o.mutation) reports.push_back(check_reduction_mutation(dense));
  }

  bool ok = true;
  json arr = json::array();
  for (const CheckReport& r : reports) {
    ok = ok && r.passed;
    arr.push_back(report_json(r));
  }
  if (o.json_out) {
    std::cout << json{{"passed", ok}, {"reports", arr}}.dump() << "\n";
  } else {
    std::cout << format_reports(reports);
  }
  return ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Build, walk, render and verify QBF-derived Brouwer/Sperner instances"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json_out, "Machine-readable output");
  app.add_option("--jobs", o.jobs, "Worker threads for sweeps (default: $SPERNER_FORGE_JOBS or 1)")
      ->check(CLI::PositiveNumber);

  auto* eval = app.add_subcommand("eval", "Decide a QDIMACS formula by brute force");
  eval->add_option("-i,--input", o.input, "QDIMACS file")->required();

  auto* build = app.add_subcommand("build", "Write an instance descriptor for a formula");
  build->add_option("-i,--input", o.input, "QDIMACS file")->required();
  build->add_option("-o,--output", o.output, "Descriptor file ('-' for stdout)")->required();
  build->add_option("--lw", o.params.leaf_width, "Leaf box width");
  build->add_option("--lh", o.params.leaf_height, "Leaf box height");
  build->add_option("--m", o.params.margin, "Margin");
  build->add_option("--g", o.params.gap, "Sibling gap");

  auto* follow = app.add_subcommand("follow", "Run the path-following walk");
  follow->add_option("-i,--input", o.input, "Instance file")->required();
  follow->add_option("--cap", o.cap, "Step cap (default 2^(2m))")->check(CLI::PositiveNumber);
  follow->add_option("--trace", o.trace_path, "Write one line per visited cell");
  follow->add_flag("--sperner", o.sperner, "Walk the reduced Sperner instance");

  auto* render = app.add_subcommand("render", "Render a region as ASCII or SVG");
  render->add_option("-i,--input", o.input, "Instance file")->required();
  render->add_option("--region", o.region, "x0,y0,x1,y1 (half-open; default whole domain)");
  render->add_option("--format", o.format, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}));
  render->add_option("-o,--output", o.output, "Output file (default stdout)");
  render->add_flag("--overlay-trace", o.overlay_trace, "Draw the Brouwer walk (svg)");
  render->add_flag("--boxes", o.overlay_boxes, "Draw structure boxes (svg)");

  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  verify->add_option("-i,--input", o.input, "Instance file")->required();
  verify->add_flag("--exhaustive", o.exhaustive, "Densify the whole domain");
  verify->add_flag("--trace-based", o.trace_based, "Terminal-to-terminal traces only");
  verify->add_flag("--mutation", o.mutation, "Also check that seeded defects are caught");

  auto* reduce = app.add_subcommand("reduce", "Wrap an instance with the Sperner reduction");
  reduce->add_option("-i,--input", o.input, "Brouwer instance file")->required();
  reduce->add_option("-o,--output", o.output, "Reduced descriptor ('-' for stdout)")->required();

  auto* solutions = app.add_subcommand("solutions", "List every solution in a region");
  solutions->add_option("-i,--input", o.input, "Instance file")->required();
  solutions->add_option("--region", o.region, "Anchor region x0,y0,x1,y1 (half-open)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*eval) return cmd_eval(o);
    if (*build) return cmd_build(o);
    if (*follow) return cmd_follow(o);
    if (*render) return cmd_render(o);
    if (*verify) return cmd_verify(o);
    if (*reduce) return cmd_reduce(o);
    if (*solutions) return cmd_solutions(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return kMalformed;
  } catch (const MalformedInstance& e) {
    std::cerr << "malformed instance: " << e.what() << "\n";
    return kMalformed;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
