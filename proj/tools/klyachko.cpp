/*
 * Copyright 2026 The klyachko authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Command-line front end for Klyachko diagrams of monomial ideals.

#include "klyachko/check.hpp"
#include "klyachko/diagram.hpp"
#include "klyachko/errors.hpp"
#include "klyachko/hilbert.hpp"
#include "klyachko/json_io.hpp"
#include "klyachko/reconstruction.hpp"
#include "klyachko/render.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace klyachko;
using io::Json;

constexpr int kExitInput = 2;
constexpr int kExitResource = 3;
constexpr int kExitCheck = 4;

struct Options {
  std::string fan;
  std::vector<std::string> inputs;
  std::string degrees;
  std::string box;
  std::optional<Int> window;
  bool render = false;
  std::uint64_t seed = 1;
  std::size_t random = 0;
  std::string out;
};

// "a..b" or "a", comma separated per class-group coordinate.
std::vector<std::pair<Int, Int>> parse_ranges(const std::string& text, std::size_t ell, const std::string& flag) {
  std::vector<std::pair<Int, Int>> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string part = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    const std::size_t dots = part.find("..");
    try {
      std::size_t used = 0;
      if (dots == std::string::npos) {
        const Int v = std::stoll(part, &used);
        if (used != part.size()) throw std::invalid_argument(part);
        out.emplace_back(v, v);
      } else {
        const std::string a = part.substr(0, dots), b = part.substr(dots + 2);
        const Int lo = std::stoll(a, &used);
        if (used != a.size()) throw std::invalid_argument(part);
        const Int hi = std::stoll(b, &used);
        if (used != b.size()) throw std::invalid_argument(part);
        out.emplace_back(lo, hi);
      }
    } catch (const std::logic_error&) {
      throw InputError(flag + ": cannot parse range '" + part + "'");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.size() != ell)
    throw InputError(flag + " needs " + std::to_string(ell) + " comma-separated range(s), got " + std::to_string(out.size()));
  return out;
}

std::vector<ClassDegree> expand(const std::vector<std::pair<Int, Int>>& ranges) {
  std::vector<ClassDegree> out;
  IntVec u;
  for (const auto& [lo, hi] : ranges) {
    if (lo > hi) return out;
    u.push_back(lo);
  }
  while (true) {
    out.emplace_back(u);
    std::size_t k = u.size();
    while (k > 0 && u[k - 1] == ranges[k - 1].second) {
      u[k - 1] = ranges[k - 1].first;
      --k;
    }
    if (k == 0) break;
    ++u[k - 1];
  }
  return out;
}

class Session {
 public:
  explicit Session(const Options& o) : opts_(o), inputs_(o.inputs) {
    std::string fan_source = o.fan;
    if (fan_source.empty()) {
      if (inputs_.empty()) throw InputError("no fan given");
      fan_source = inputs_.front();
      inputs_.erase(inputs_.begin());
    }
    variety_.emplace(ToricVariety::create(io::load_fan(fan_source)));
  }

  const ToricVariety& X() const { return *variety_; }
  const Fan& fan() const { return variety_->fan(); }

  Json input(std::size_t i) const {
    if (i >= inputs_.size()) throw InputError("missing input file #" + std::to_string(i + 1));
    return io::read_file(inputs_[i]);
  }
  std::size_t input_count() const { return inputs_.size(); }

  MonomialIdeal ideal(std::size_t i) const {
    const Json j = input(i);
    if (io::looks_like_diagram(j)) throw InputError(inputs_[i] + " is a diagram; this command needs an ideal");
    return io::ideal_from_json(j, fan().num_rays());
  }

  KlyachkoDiagram diagram(std::size_t i) const {
    const Json j = input(i);
    if (io::looks_like_diagram(j)) return io::diagram_from_json(j, fan());
    return compute_diagram(io::ideal_from_json(j, fan().num_rays()), fan());
  }

  void emit(const std::string& text) const {
    if (opts_.out.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(opts_.out);
    if (!f) throw InputError("cannot write " + opts_.out);
    f << text;
  }

  Int render_window(const KlyachkoDiagram& diag) const {
    if (opts_.window) return *opts_.window;
    Int e = 0;
    for (const auto& entry : maximal_entries(diag, fan()))
      for (const auto& c : entry->delta.cells())
        for (const auto& b : c.bounds) {
          if (b.lo != kNegInf) e = std::max(e, std::abs(b.lo));
          if (b.hi != kPosInf) e = std::max(e, std::abs(b.hi));
        }
    for (Int v : diag.s) e = std::max(e, v);
    return std::min<Int>(e + 2, 30);
  }

  const Options& opts() const { return opts_; }

 private:
  const Options& opts_;
  std::vector<std::string> inputs_;
  std::optional<ToricVariety> variety_;
};

int cmd_diagram(const Options& o) {
  Session s(o);
  const KlyachkoDiagram diag = compute_diagram(s.ideal(0), s.fan());
  if (o.render) {
    std::cout << render_ascii(diag, s.fan(), s.render_window(diag));
    if (!o.out.empty()) s.emit(render_svg(diag, s.fan(), s.render_window(diag)));
    return 0;
  }
  s.emit(io::dump(io::diagram_to_json(diag, s.fan())));
  return 0;
}

int cmd_render(const Options& o) {
  Session s(o);
  const KlyachkoDiagram diag = s.diagram(0);
  std::cout << render_ascii(diag, s.fan(), s.render_window(diag));
  if (!o.out.empty()) s.emit(render_svg(diag, s.fan(), s.render_window(diag)));
  return 0;
}

int cmd_saturate(const Options& o) {
  Session s(o);
  const KlyachkoDiagram diag = s.diagram(0);
  std::optional<SearchBox> box;
  if (!o.box.empty()) box = SearchBox{parse_ranges(o.box, s.X().grading().ell, "--box")};
  s.emit(io::dump(io::reconstruction_to_json(reconstruct_generators(s.X(), diag, box), s.fan())));
  return 0;
}

int cmd_hilbert(const Options& o) {
  Session s(o);
  if (o.degrees.empty()) throw InputError("hilbert needs --degrees");
  const auto degrees = expand(parse_ranges(o.degrees, s.X().grading().ell, "--degrees"));
  const HilbertReport report = hilbert_report(s.X(), s.ideal(0), degrees);
  Json values = Json::array();
  for (const auto& a : degrees) values.push_back(Json{{"degree", a.coords}, {"value", report.values.at(a)}});
  Json j = io::constancy_to_json(report.constancy);
  j["values"] = values;
  s.emit(io::dump(j));
  return 0;
}

int cmd_h1(const Options& o) {
  Session s(o);
  const MonomialIdeal ideal = s.ideal(0);
  const KlyachkoDiagram diag = compute_diagram(ideal, s.fan());
  Json pieces = Json::array();
  Json j;
  if (o.degrees.empty()) {
    for (const auto& p : local_cohomology_h1_scan(s.X(), ideal, diag)) pieces.push_back(io::graded_piece_to_json(p, s.fan()));
    j["scan"] = "nonzero pieces among the degrees of x^k with k bounded by the generator exponents; other degrees not scanned";
  } else {
    for (const auto& a : expand(parse_ranges(o.degrees, s.X().grading().ell, "--degrees")))
      pieces.push_back(io::graded_piece_to_json(
          local_cohomology_h1(s.X(), ideal, diag, s.X().grading().canonical_lift(a)), s.fan()));
  }
  j["pieces"] = pieces;
  s.emit(io::dump(j));
  return 0;
}

int cmd_sum(const Options& o) {
  Session s(o);
  if (s.input_count() != 2) throw InputError("sum needs exactly two inputs");
  s.emit(io::dump(io::diagram_to_json(sum_diagram(s.diagram(0), s.diagram(1)), s.fan())));
  return 0;
}

int report(const std::string& label, const std::vector<PropertyResult>& results) {
  int failed = 0;
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << label << r.name;
    if (!r.passed) {
      std::cout << ": " << r.witness;
      ++failed;
    }
    std::cout << '\n';
  }
  return failed;
}

int cmd_check(const Options& o) {
  Session s(o);
  CheckOptions copts{o.window};
  int failed = 0;
  if (o.random > 0) {
    std::mt19937_64 rng(o.seed);
    for (std::size_t i = 0; i < o.random; ++i) {
      const MonomialIdeal ideal = random_ideal(rng, s.fan().num_rays());
      auto results = check_ideal(s.X(), ideal, copts);
      Json gens = io::ideal_to_json(ideal, s.fan())["gens"];
      bool ok = true;
      for (const auto& r : results) ok = ok && r.passed;
      if (!ok) failed += report("random #" + std::to_string(i) + " " + gens.dump() + " ", results);
    }
    std::cout << (failed ? "FAIL " : "PASS ") << o.random << " random ideals, seed " << o.seed << '\n';
  } else {
    const MonomialIdeal ideal = s.ideal(0);
    if (s.input_count() > 1)
      failed = report("", check_ideal(s.X(), ideal, s.diagram(1), copts));
    else
      failed = report("", check_ideal(s.X(), ideal, copts));
  }
  return failed ? kExitCheck : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Klyachko diagrams of monomial ideals on smooth complete toric varieties"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, const std::string& inputs_help) {
    sub->add_option("--fan", o.fan, "catalog name (P<n>, H<a>, P<n>xP<m>) or fan JSON file");
    sub->add_option("inputs", o.inputs, "fan (unless --fan is given) followed by " + inputs_help);
    sub->add_option("--out", o.out, "write output to this file");
  };

  auto* diagram = app.add_subcommand("diagram", "Klyachko diagram of an ideal");
  common(diagram, "ideal.json");
  diagram->add_flag("--render", o.render, "print ASCII panels (and SVG to --out) instead of JSON");
  diagram->add_option("--window", o.window, "render window");

  auto* saturate = app.add_subcommand("saturate", "generators of the saturation from a diagram or ideal");
  common(saturate, "diagram.json or ideal.json");
  saturate->add_option("--box", o.box, "degree search box, lo..hi per class-group coordinate");

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of R/I^sat");
  common(hilbert, "ideal.json");
  hilbert->add_option("--degrees", o.degrees, "degree ranges, e.g. -1..4 or 0..3,0..2")->required();

  auto* h1 = app.add_subcommand("h1", "graded pieces of the first local cohomology");
  common(h1, "ideal.json");
  h1->add_option("--degrees", o.degrees, "degree ranges; without it a bounded scan is reported");

  auto* sum = app.add_subcommand("sum", "diagram of I + J from the diagrams of I and J");
  common(sum, "two ideal or diagram files");

  auto* check = app.add_subcommand("check", "cross-check the diagram pipeline against brute-force oracles");
  common(check, "ideal.json [diagram.json]");
  check->add_option("--window", o.window, "membership window W (pairings in -W..W)");
  check->add_option("--random", o.random, "check this many seeded random ideals instead");
  check->add_option("--seed", o.seed, "seed for --random");

  auto* render = app.add_subcommand("render", "ASCII panels (and SVG to --out) for a rank-2 diagram");
  common(render, "diagram.json or ideal.json");
  render->add_option("--window", o.window, "render window");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*diagram) return cmd_diagram(o);
    if (*saturate) return cmd_saturate(o);
    if (*hilbert) return cmd_hilbert(o);
    if (*h1) return cmd_h1(o);
    if (*sum) return cmd_sum(o);
    if (*check) return cmd_check(o);
    if (*render) return cmd_render(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const SearchBoxTooSmall& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const Unbounded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const OverflowError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return 0;
}
