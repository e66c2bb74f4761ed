#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>

#include "kneser/dynamics.hpp"
#include "kneser/extensions.hpp"
#include "kneser/gliders.hpp"
#include "kneser/gluing.hpp"
#include "kneser/listing.hpp"

using namespace kneser;
using json = nlohmann::json;

namespace {

enum Exit { ok = 0, not_verified = 1, bad_params = 2, infeasible = 3, timed_out = 4 };

struct FamilyFlags {
  std::vector<int> kneser, johnson, gen_kneser, bipartite;

  void attach(CLI::App* app) {
    app->add_option("--kneser", kneser, "Kneser graph K(n,k)")->expected(2);
    app->add_option("--johnson", johnson, "generalized Johnson graph J(n,k,s)")->expected(3);
    app->add_option("--gen-kneser", gen_kneser, "generalized Kneser graph K(n,k,s)")->expected(3);
    app->add_option("--bipartite", bipartite, "bipartite Kneser graph H(n,k)")->expected(2);
  }

  GraphSpec resolve() const {
    std::vector<GraphSpec> picked;
    if (!kneser.empty()) picked.push_back(GraphSpec::kneser(kneser[0], kneser[1]));
    if (!johnson.empty()) picked.push_back(GraphSpec::johnson(johnson[0], johnson[1], johnson[2]));
    if (!gen_kneser.empty()) {
      picked.push_back(GraphSpec::gen_kneser(gen_kneser[0], gen_kneser[1], gen_kneser[2]));
    }
    if (!bipartite.empty()) picked.push_back(GraphSpec::bipartite(bipartite[0], bipartite[1]));
    if (picked.size() != 1) throw ParameterError("give exactly one graph family");
    picked[0].validate();
    return picked[0];
  }
};

std::string outcome_name(Outcome o) {
  switch (o) {
    case Outcome::cycle: return "cycle";
    case Outcome::path: return "path";
    case Outcome::timeout: return "timeout";
    case Outcome::too_large: return "too-large";
  }
  return "?";
}

std::string rule_name(int family) {
  return family == 0 ? "other" : "rule" + std::to_string(family);
}

int exit_for(Outcome o) {
  switch (o) {
    case Outcome::cycle: return ok;
    case Outcome::path: return infeasible;
    case Outcome::timeout:
    case Outcome::too_large: return timed_out;
  }
  return ok;
}

int run_gen(const GraphSpec& spec, const std::string& format, const FallbackLimits& limits,
            int anchor, const std::string& out_path) {
  auto t0 = std::chrono::steady_clock::now();
  Tour tour = hamilton(spec, limits, anchor);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw ParameterError("cannot write " + out_path);
  }
  std::ostream& out = out_path.empty() ? std::cout : file;

  if (tour.outcome == Outcome::timeout || tour.outcome == Outcome::too_large) {
    std::cerr << spec.label() << ": unsupported at this scale (" << outcome_name(tour.outcome)
              << ")\n";
  } else if (tour.outcome == Outcome::path) {
    std::cerr << "warning: " << spec.label() << " has no Hamilton cycle; emitting a path\n";
  }

  if (format == "json") {
    json j;
    j["graph"] = spec.label();
    j["family"] = family_name(spec.family);
    j["n"] = spec.n;
    j["k"] = spec.k;
    j["s"] = spec.s;
    j["vertices"] = spec.vertex_count();
    j["outcome"] = outcome_name(tour.outcome);
    j["strategy"] = tour.strategy;
    j["seconds"] = secs;
    if (!tour.vertices.empty()) {
      j["verified"] = verify_tour(spec, tour.vertices, tour.outcome == Outcome::cycle).ok;
    }
    out << j.dump(2) << '\n';
  } else if (!tour.vertices.empty()) {
    write_listing(out, tour, format == "sets" ? VertexFormat::sets : VertexFormat::bits);
  }
  return exit_for(tour.outcome);
}

int run_verify(const std::string& path, bool want_path, const std::string& format) {
  Listing l;
  if (path.empty() || path == "-") {
    l = read_listing(std::cin);
  } else {
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot read " + path);
    l = read_listing(in);
  }
  bool closed = !(want_path || l.path);
  VerifyReport rep = verify_tour(l.spec, l.vertices, closed);
  if (format == "json") {
    json j{{"graph", l.spec.label()},
           {"vertices", l.vertices.size()},
           {"expected", closed ? "cycle" : "path"},
           {"ok", rep.ok},
           {"message", rep.message},
           {"position", rep.position}};
    std::cout << j.dump(2) << '\n';
  } else if (rep.ok) {
    std::cout << "OK " << l.spec.label() << ": " << rep.message << " on " << l.vertices.size()
              << " vertices\n";
  } else {
    std::cout << "FAIL " << l.spec.label() << ": " << rep.message;
    if (rep.position >= 0) std::cout << " (vertex " << rep.position + 1 << ")";
    std::cout << '\n';
  }
  return rep.ok ? ok : not_verified;
}

int run_factor(const GraphSpec& spec, const std::string& format, bool summary) {
  if (spec.family != Family::kneser) throw ParameterError("factor needs --kneser");
  auto factor = CycleFactor::build(spec.n, spec.k);
  std::map<size_t, size_t> lengths;
  for (size_t c = 0; c < factor.cycle_count(); ++c) ++lengths[factor.cycle_ranks(c).size()];

  if (format == "json") {
    json hist = json::object();
    for (auto [len, cnt] : lengths) hist[std::to_string(len)] = cnt;
    json j{{"graph", spec.label()},
           {"vertices", factor.vertex_count()},
           {"cycles", factor.cycle_count()},
           {"lengths", hist}};
    if (!summary) {
      json cycles = json::array();
      for (size_t c = 0; c < factor.cycle_count(); ++c) {
        const auto& key = factor.key(c);
        cycles.push_back({{"key", key.str()},
                          {"length", factor.cycle_ranks(c).size()},
                          {"V", speed_multiset(key).parts},
                          {"Z", train_composition(key).str()},
                          {"d", descent_count(key)}});
      }
      j["per_cycle"] = cycles;
    }
    std::cout << j.dump(2) << '\n';
    return ok;
  }

  std::cout << "# " << spec.label() << ": " << factor.vertex_count() << " vertices, "
            << factor.cycle_count() << " cycles\n";
  for (auto [len, cnt] : lengths) {
    std::cout << cnt << (cnt == 1 ? " cycle" : " cycles") << " × length " << len << '\n';
  }
  if (summary) return ok;
  std::cout << "# key\tlength\tV\tZ\td\n";
  for (size_t c = 0; c < factor.cycle_count(); ++c) {
    const auto& key = factor.key(c);
    std::cout << key.str() << '\t' << factor.cycle_ranks(c).size() << '\t'
              << speed_multiset(key).str() << '\t' << train_composition(key).str() << '\t'
              << descent_count(key) << '\n';
  }
  return ok;
}

int run_trace(const std::string& start, int steps, const std::string& svg_path) {
  CyclicBitstring x = CyclicBitstring::parse(start);
  require_factor_params(x.n(), x.k());
  if (steps < 0) {
    auto period = full_period(x, 64 * x.n() * x.n());
    steps = period ? *period : x.n();
  }
  MotionTrace trace = motion_trace(x, steps);
  std::cout << render_trace(trace);
  if (!svg_path.empty()) {
    std::ofstream svg(svg_path);
    if (!svg) throw ParameterError("cannot write " + svg_path);
    svg << render_trace_svg(trace);
  }
  return ok;
}

int run_plan(const GraphSpec& spec, int anchor, const std::string& format) {
  if (spec.family != Family::kneser) throw ParameterError("plan needs --kneser");
  if (spec.n < 2 * spec.k + 3 || spec.k < 2) {
    throw ParameterError("plan needs k >= 2 and n >= 2k+3");
  }
  auto factor = CycleFactor::build(spec.n, spec.k);
  auto plan = build_gluing_plan(factor, anchor);
  const Ranker& rk = factor.ranker();

  if (format == "json") {
    json fam = json::object();
    for (int f = 0; f < 10; ++f) {
      if (plan.family_counts[static_cast<size_t>(f)]) {
        fam[rule_name(f)] = plan.family_counts[static_cast<size_t>(f)];
      }
    }
    json j{{"graph", spec.label()},     {"anchor", plan.p},
           {"special_offset", plan.r},  {"cycles", factor.cycle_count()},
           {"nodes", plan.node_count},  {"connectors", plan.connectors.size()},
           {"tree_edges", plan.tree.size()}, {"special_pairs", plan.special_pairs.size()},
           {"families", fam}};
    std::cout << j.dump(2) << '\n';
    return ok;
  }

  std::cout << "# " << spec.label() << " anchor " << plan.p << ", special offset " << plan.r
            << '\n';
  std::cout << "# " << factor.cycle_count() << " cycles, " << plan.node_count << " nodes, "
            << plan.connectors.size() << " connectors, " << plan.tree.size() << " tree edges\n";
  for (int f = 0; f < 10; ++f) {
    if (plan.family_counts[static_cast<size_t>(f)]) {
      std::cout << "# " << rule_name(f) << ": " << plan.family_counts[static_cast<size_t>(f)]
                << '\n';
    }
  }
  for (auto [x, y] : plan.special_pairs) {
    std::cout << "special\t" << rk.unrank(x).str() << '\t' << rk.unrank(y).str() << '\n';
  }
  for (uint32_t i : plan.tree) {
    const auto& c = plan.connectors[i];
    std::cout << "tree\t" << rk.unrank(c.x).str() << '\t' << rk.unrank(c.y).str() << '\t'
              << rule_name(c.family) << '\n';
  }
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamilton cycles in Kneser graphs and relatives"};
  app.require_subcommand(1);

  FamilyFlags fam_gen, fam_factor, fam_plan;
  std::string format = "bits";
  std::string out_path, in_path, svg_path, start;
  bool want_path = false, summary = false;
  int anchor = 0, steps = -1;
  FallbackLimits limits;

  auto* gen = app.add_subcommand("gen", "list a Hamilton cycle, one vertex per line");
  fam_gen.attach(gen);
  gen->add_option("--format", format, "bits, sets or json")
      ->check(CLI::IsMember({"bits", "sets", "json"}));
  gen->add_option("--fallback-cap", limits.max_vertices, "largest graph for the fallback search");
  gen->add_option("--fallback-secs", limits.seconds, "time limit of the fallback search");
  gen->add_option("--anchor", anchor, "anchor position for the gluing rules");
  gen->add_option("-o,--output", out_path, "write the listing here instead of stdout");

  auto* verify = app.add_subcommand("verify", "check a listing produced by gen");
  verify->add_option("file", in_path, "listing file, or - for stdin");
  verify->add_flag("--path", want_path, "accept a Hamilton path");
  verify->add_option("--format", format, "text or json")->check(CLI::IsMember({"bits", "text", "json"}));

  auto* factor = app.add_subcommand("factor", "statistics of the cycle factor");
  fam_factor.attach(factor);
  factor->add_option("--format", format, "text or json")->check(CLI::IsMember({"bits", "text", "json"}));
  factor->add_flag("--summary", summary, "only the length histogram");

  auto* trace = app.add_subcommand("trace", "glider timeline from a start vertex");
  trace->add_option("--start", start, "start vertex as a bitstring")->required();
  trace->add_option("--steps", steps, "number of steps (default: one full period)");
  trace->add_option("--svg", svg_path, "also write an SVG drawing");

  auto* plan = app.add_subcommand("plan", "connectors and spanning tree of the gluing");
  fam_plan.attach(plan);
  plan->add_option("--anchor", anchor, "anchor position for the gluing rules");
  plan->add_option("--format", format, "text or json")->check(CLI::IsMember({"bits", "text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return bad_params;
  }

  try {
    if (*gen) return run_gen(fam_gen.resolve(), format, limits, anchor, out_path);
    if (*verify) return run_verify(in_path, want_path, format);
    if (*factor) return run_factor(fam_factor.resolve(), format, summary);
    if (*trace) return run_trace(start, steps, svg_path);
    if (*plan) return run_plan(fam_plan.resolve(), anchor, format);
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return bad_params;
  } catch (const ContractError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return bad_params;
  }
  return ok;
}
