// One line per acceptance criterion.  Set KNESER_FULL_SWEEP=1 to run the
// complete parameter ranges instead of the default desk-sized ones.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "kneser/dynamics.hpp"
#include "kneser/extensions.hpp"
#include "kneser/gliders.hpp"
#include "kneser/gluing.hpp"

using namespace kneser;

namespace {

struct Scope {
  bool full = false;
  uint64_t hamilton_max = 50000;   // criteria 1 and 2, k >= 2
  int rotation_max_n = 1000;       // criteria 1 and 2, k = 1
  uint64_t invariants_max = 100000; // criterion 3
  int invariants_k1_max_n = 300;
  uint64_t dynamics_max = 10000;   // criterion 4
  int dynamics_k1_max_n = 200;
  uint64_t johnson_max = 10000;    // criterion 7
};

Scope make_scope() {
  Scope s;
  const char* env = std::getenv("KNESER_FULL_SWEEP");
  if (env && std::string(env) == "1") {
    s.full = true;
    s.hamilton_max = 2000000;
    s.rotation_max_n = 10000;
    s.invariants_k1_max_n = 2000;
    s.dynamics_k1_max_n = 2000;
  }
  return s;
}

struct Verdict {
  bool pass = true;
  std::string detail;
};

class Failures {
 public:
  void add(const std::string& what) {
    if (count_++ < 5) list_ << (count_ > 1 ? "; " : "") << what;
  }
  bool any() const { return count_ > 0; }
  std::string str() const {
    return std::to_string(count_) + " failure(s): " + list_.str();
  }

 private:
  int count_ = 0;
  std::ostringstream list_;
};

std::string pk(int n, int k) { return "(" + std::to_string(n) + "," + std::to_string(k) + ")"; }

// ------------------------------------------------------------ criteria 1, 2

// The f-orbit of x starting at x, also checked against the factor cycle.
std::vector<std::string> orbit_strings(const std::string& start, bool annotated) {
  CyclicBitstring x = CyclicBitstring::parse(start);
  std::vector<std::string> out;
  std::set<std::string> from_f, from_cycle;
  CyclicBitstring y = x;
  do {
    out.push_back(annotated ? annotate(y) : y.str());
    from_f.insert(y.str());
    y = apply_f(y);
  } while (!(y == x) && out.size() <= 1000);
  for (const auto& v : cycle_of(x).vertices) from_cycle.insert(v.str());
  if (from_f != from_cycle) out.push_back("factor cycle differs");
  return out;
}

// Walks the tour by rank; nothing but the ranker and bit tests is trusted.
std::string check_tour_ranks(int n, int k, const std::vector<uint32_t>& order) {
  Ranker rk(n, k);
  uint64_t N = binomial(n, k);
  if (order.size() != N) return "tour has " + std::to_string(order.size()) + " vertices";
  std::vector<bool> seen(N, false);
  CyclicBitstring first = rk.unrank(order[0]), prev = first;
  for (size_t i = 0; i < order.size(); ++i) {
    if (order[i] >= N || seen[order[i]]) return "repeat at " + std::to_string(i);
    seen[order[i]] = true;
    CyclicBitstring x = i == 0 ? first : rk.unrank(order[i]);
    if (x.k() != k) return "weight at " + std::to_string(i);
    if (i > 0 && !prev.disjoint(x)) return "non-edge at " + std::to_string(i);
    prev = x;
  }
  if (!prev.disjoint(first)) return "closing edge missing";
  return "";
}

std::string check_factor(const CycleFactor& f) {
  uint64_t N = f.vertex_count();
  const Ranker& rk = f.ranker();
  std::vector<uint8_t> hits(N, 0);
  uint64_t total = 0;
  for (size_t c = 0; c < f.cycle_count(); ++c) {
    const auto& cyc = f.cycle_ranks(c);
    if (cyc.size() < 3) return "short cycle";
    total += cyc.size();
    for (size_t i = 0; i < cyc.size(); ++i) {
      if (hits[cyc[i]]++) return "vertex in two cycles";
      auto next = apply_f(rk.unrank(cyc[i]));
      if (rk.rank(next) != cyc[(i + 1) % cyc.size()]) return "cycle is not an orbit of f";
    }
  }
  if (total != N) return "lengths sum to " + std::to_string(total);
  return "";
}

std::vector<std::pair<int, int>> hamilton_instances(const Scope& s) {
  std::set<std::pair<int, int>> out;
  for (int k = 2; k <= 40; ++k) {
    for (int n = 2 * k + 3; binomial(n, k) <= s.hamilton_max; ++n) out.insert({n, k});
  }
  for (int k = 2; k <= 9; ++k) out.insert({2 * k + 3, k});  // (7,2) ... (21,9)
  if (!s.full) {
    // the largest instance in range for a few k
    for (int k = 2; k <= 10; ++k) {
      int n = 2 * k + 3;
      while (binomial(n + 1, k) <= 2000000) ++n;
      out.insert({n, k});
    }
  }
  return {out.begin(), out.end()};
}

std::pair<Verdict, Verdict> criteria_1_2(const Scope& s) {
  Failures f1, f2;
  int instances = 0;
  double worst = 0;
  std::string worst_at;
  for (int n = 5; n <= s.rotation_max_n; ++n) {
    Tour t = hamilton_kneser(n, 1);
    std::vector<uint32_t> order;
    Ranker rk(n, 1);
    for (const auto& v : t.vertices) order.push_back(static_cast<uint32_t>(rk.rank(v)));
    if (auto e = check_tour_ranks(n, 1, order); !e.empty()) f1.add(pk(n, 1) + " " + e);
    if (n <= 300) {
      if (auto e = check_factor(CycleFactor::build(n, 1)); !e.empty()) f2.add(pk(n, 1) + " " + e);
    }
    ++instances;
  }
  for (auto [n, k] : hamilton_instances(s)) {
    auto t0 = std::chrono::steady_clock::now();
    auto factor = CycleFactor::build(n, k);
    if (auto e = check_factor(factor); !e.empty()) f2.add(pk(n, k) + " " + e);
    auto plan = build_gluing_plan(factor, 0);
    auto ham = assemble_hamilton(factor, plan);
    if (auto e = check_tour_ranks(n, k, ham.order); !e.empty()) f1.add(pk(n, k) + " " + e);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > worst) {
      worst = secs;
      worst_at = pk(n, k);
    }
    if (secs > 600) f1.add(pk(n, k) + " took " + std::to_string(secs) + " s");
    ++instances;
  }

  // the two cycles of the Petersen graph as printed
  auto c1 = orbit_strings("10100", false);
  auto c2 = orbit_strings("11000", false);
  if (c1 != std::vector<std::string>{"10100", "01010", "00101", "10010", "01001"}) {
    f2.add("C(10100) differs");
  }
  if (c2 != std::vector<std::string>{"11000", "00110", "10001", "01100", "00011"}) {
    f2.add("C(11000) differs");
  }
  if (CycleFactor::build(5, 2).cycle_count() != 2) f2.add("K(5,2) factor is not two cycles");

  std::string scope = s.full ? "full range" : "default range: k=1 n<=" +
                                                  std::to_string(s.rotation_max_n) +
                                                  ", k>=2 binomial<=" +
                                                  std::to_string(s.hamilton_max) +
                                                  ", named (2k+3,k) for k<=9, largest n for k=2..10";
  Verdict o1{!f1.any(), f1.any() ? f1.str()
                                 : std::to_string(instances) + " tours verified (" + scope +
                                       "); slowest " + worst_at + " " +
                                       std::to_string(worst) + " s"};
  Verdict o2{!f2.any(), f2.any() ? f2.str()
                                 : "factors partition X(n,k) into f-orbits of length >= 3; "
                                   "K(5,2) cycles match"};
  return {o1, o2};
}

// ------------------------------------------------------------ criterion 3

Verdict criterion_3(const Scope& s) {
  Failures fails;
  int instances = 0;
  uint64_t vertices = 0;
  for (int k = 1; k <= 40; ++k) {
    for (int n = 2 * k + 1; binomial(n, k) <= s.invariants_max; ++n) {
      if (k == 1 && n > s.invariants_k1_max_n) break;
      auto factor = CycleFactor::build(n, k);
      const Ranker& rk = factor.ranker();
      for (size_t c = 0; c < factor.cycle_count(); ++c) {
        const auto& cyc = factor.cycle_ranks(c);
        CyclicBitstring key = rk.unrank(cyc[0]);
        SpeedMultiset v0 = speed_multiset(key);
        TrainComposition z0 = train_composition(key);
        int d0 = descent_count(key);
        if (v0.glider_count() != d0) fails.add("|V| != d at " + key.str());
        for (uint32_t r : cyc) {
          CyclicBitstring x = rk.unrank(r);
          auto part = glider_partition(x);
          SpeedMultiset v = speed_multiset(part);
          if (!(v == v0)) fails.add("V changes along the cycle of " + key.str());
          if (!(speed_multiset_direct(x) == v)) fails.add("two ways of V differ at " + x.str());
          if (!(train_composition(part) == z0)) fails.add("Z changes at " + x.str());
          if (descent_count(x) != d0) fails.add("d changes at " + x.str());
          ++vertices;
        }
      }
      ++instances;
    }
  }
  std::string scope = s.full ? "binomial<=" + std::to_string(s.invariants_max) +
                                   ", k=1 up to n=" + std::to_string(s.invariants_k1_max_n)
                             : "default range binomial<=" + std::to_string(s.invariants_max) +
                                   ", k=1 up to n=" + std::to_string(s.invariants_k1_max_n);
  return {!fails.any(), fails.any() ? fails.str()
                                    : std::to_string(instances) + " factors, " +
                                          std::to_string(vertices) + " vertices (" + scope + ")"};
}

// ------------------------------------------------------------ criterion 4

// (-1)^(glider_count-1) v1 prod_{i>=2} (n - V_i) with V_i = sum_j 2 v_min(i,j), written
// out from the speeds alone.
BigInt expected_determinant(std::vector<int> speeds, int n) {
  std::sort(speeds.begin(), speeds.end());
  int glider_count = static_cast<int>(speeds.size());
  BigInt d = speeds[0];
  for (int i = 1; i < glider_count; ++i) {
    int64_t vi = 0;
    for (int j = 0; j < glider_count; ++j) vi += 2LL * speeds[std::min(i, j)];
    d *= BigInt(n - vi);
  }
  return glider_count % 2 == 0 ? BigInt(-d) : d;
}

Verdict criterion_4(const Scope& s) {
  Failures fails;
  int instances = 0, traces = 0, multisets = 0;
  uint64_t steps = 0;
  for (int k = 1; k <= 40; ++k) {
    for (int n = 2 * k + 1; binomial(n, k) <= s.dynamics_max; ++n) {
      if (k == 1 && n > s.dynamics_k1_max_n) break;
      auto factor = CycleFactor::build(n, k);
      const Ranker& rk = factor.ranker();
      std::set<std::vector<int>> seen_speeds;
      for (uint64_t r = 0; r < factor.vertex_count(); ++r) {
        CyclicBitstring x = rk.unrank(r);
        StepResult st = advance(x);  // throws if the rewrite disagrees with f
        if (!(st.next == apply_f(x))) fails.add("rewrite differs from f at " + x.str());
      }
      for (size_t c = 0; c < factor.cycle_count(); ++c) {
        CyclicBitstring key = factor.key(c);
        auto period = full_period(key, static_cast<int>(std::min<uint64_t>(
                                           4 * factor.vertex_count() * n, 50000000)));
        if (!period) {
          fails.add("no full period for " + key.str());
          continue;
        }
        MotionTrace tr = motion_trace(key, *period);  // checks the equation at every step
        for (int t = 0; t <= *period; ++t) {
          for (int g = 0; g < tr.glider_count; ++g) {
            if (tr.pos2[t][g] != tr.predicted_pos2(t, g)) {
              fails.add("equation of motion fails for " + key.str());
            }
          }
        }
        for (int g = 0; g < tr.glider_count; ++g) {
          if (tr.classes[*period][g] != g) fails.add("class not home after a period");
        }
        steps += static_cast<uint64_t>(*period);
        ++traces;
        seen_speeds.insert(tr.speeds);
      }
      for (const auto& sp : seen_speeds) {
        SpeedMultiset sm;
        sm.parts = sp;
        std::sort(sm.parts.rbegin(), sm.parts.rend());
        BigInt det = determinant(motion_matrix(sm, n).m);
        if (det != expected_determinant(sp, n)) fails.add("determinant at " + sm.str());
        if (det == 0) fails.add("singular motion matrix at " + sm.str());
        ++multisets;
      }
      ++instances;
    }
  }
  return {!fails.any(),
          fails.any() ? fails.str()
                      : std::to_string(instances) + " factors (binomial<=" +
                            std::to_string(s.dynamics_max) + "), " + std::to_string(traces) +
                            " full-period traces, " + std::to_string(steps) + " steps, " +
                            std::to_string(multisets) + " determinants"};
}

// ------------------------------------------------------------ criterion 5

Verdict criterion_5() {
  Failures fails;
  std::ostringstream summary;
  for (auto [n, k] : std::vector<std::pair<int, int>>{{7, 2}, {9, 3}, {11, 4}, {13, 5}}) {
    int p = 0;
    int r = special_offset(n, k, p);
    auto sg = single_glider_gluing(n, k, r);
    std::set<CyclicBitstring> special;
    for (auto [i, j] : sg.pairs) {
      special.insert(single_glider_vertex(n, k, i));
      special.insert(single_glider_vertex(n, k, j));
    }
    std::set<CyclicBitstring> used;
    Ranker rk(n, k);
    int connectors = 0;
    for (uint64_t q = 0; q < rk.count(); ++q) {
      CyclicBitstring x = rk.unrank(q);
      auto m = classify_rule(x, p);
      if (!m) continue;
      CyclicBitstring y = rule_image(x, *m);
      if (!is_connector(x, y)) fails.add("not a connector at " + x.str());
      if (!used.insert(x).second || !used.insert(y).second) fails.add("overlap at " + x.str());
      if (special.count(x) || special.count(y)) fails.add("touches a special pair at " + x.str());
      if (!partition_direction_ok(x, *m)) fails.add("partition direction at " + x.str());
      ++connectors;
    }
    auto factor = CycleFactor::build(n, k);
    auto plan = build_gluing_plan(factor, p);  // throws if the auxiliary graph is disconnected
    if (plan.tree.size() + 1 != plan.node_count) fails.add("no spanning tree for " + pk(n, k));
    summary << pk(n, k) << ":" << connectors << " ";
  }
  return {!fails.any(), fails.any() ? fails.str()
                                    : "disjoint rule connectors avoiding the special pairs, "
                                      "connected auxiliary graph; " + summary.str()};
}

// ------------------------------------------------------------ criterion 6

Verdict criterion_6() {
  Failures fails;
  if (apply_f(CyclicBitstring::parse("100000101")).str() != "011000010") fails.add("f example");
  auto a1 = orbit_strings("10100", true);
  auto a2 = orbit_strings("11000", true);
  if (a1 != std::vector<std::string>{"1010-", "-1010", "0-101", "10-10", "010-1"}) {
    fails.add("C(10100)");
  }
  if (a2 != std::vector<std::string>{"1100-", "0-110", "100-1", "-1100", "00-11"}) {
    fails.add("C(11000)");
  }
  if (descent_count(CyclicBitstring::parse("001100010001")) != 3) fails.add("d example");
  auto x = CyclicBitstring::parse("100100");
  if (cycle_of(x).size() != 3) fails.add("100100 cycle length");
  if (full_period(x, 100) != 6) fails.add("100100 period");

  auto parts = [](const CyclicBitstring& v) { return speed_multiset(v).parts; };
  auto g = CyclicBitstring::parse("111000-10-10-");
  bool glued = false;
  if (parts(g) != std::vector<int>{3, 1, 1}) fails.add("gluing example partition");
  for (const auto& c : connectors_of(g)) {
    if (parts(c.y) != std::vector<int>{3, 2}) continue;
    auto four = connector_four_cycle(c);
    bool edges = true;
    for (int i = 0; i < 4; ++i) edges = edges && four[i].disjoint(four[(i + 1) % 4]);
    if (edges && !(cycle_of(c.x).key() == cycle_of(c.y).key())) glued = true;
  }
  if (!glued) fails.add("no (3,1,1)-(3,2) gluing in K(13,5)");

  auto big = CyclicBitstring::parse("111000-111000-111000-111000---");
  if (visible_pair_count(big) != 4 || connectors_of(big).size() != 20) {
    fails.add("connector count");
  }
  return {!fails.any(), fails.any() ? fails.str()
                                    : "f(100000101), two K(5,2) cycles, d=3, period 6, "
                                      "(3,1,1)-(3,2) gluing, 20 connectors"};
}

// ------------------------------------------------------------ criterion 7

Verdict criterion_7(const Scope& s) {
  Failures fails;
  Tour h72 = hamilton_bipartite(7, 2);
  if (h72.outcome != Outcome::cycle || h72.vertices.size() != 42 ||
      !verify_tour(h72.spec, h72.vertices, true).ok) {
    fails.add("H(7,2) cycle");
  }
  Tour h61 = hamilton_bipartite(6, 1);
  if (h61.outcome != Outcome::path || h61.vertices.size() != 12 ||
      !verify_tour(h61.spec, h61.vertices, false).ok) {
    fails.add("H(6,1) path");
  }
  int instances = 0;
  for (int k = 1; k <= 40; ++k) {
    for (int s_ = 0; s_ < k; ++s_) {
      for (int n = 2 * k - s_ + (s_ == 0 ? 1 : 0); binomial(n, k) <= s.johnson_max; ++n) {
        GraphSpec g = GraphSpec::johnson(n, k, s_);
        Tour t = hamilton_johnson(n, k, s_);
        bool petersen = g.is_petersen();
        auto want = petersen ? kneser::Outcome::path : kneser::Outcome::cycle;
        if (t.outcome != want || !verify_tour(g, t.vertices, !petersen).ok) {
          fails.add(g.label());
        }
        if (petersen && verify_tour(g, t.vertices, true).ok) fails.add("false cycle " + g.label());
        ++instances;
      }
    }
  }
  return {!fails.any(), fails.any() ? fails.str()
                                    : "H(7,2) cycle of 42, H(6,1) path of 12, " +
                                          std::to_string(instances) + " J(n,k,s) with <= " +
                                          std::to_string(s.johnson_max) +
                                          " vertices (Petersen cases as paths)"};
}

// ------------------------------------------------------------ criterion 8

Verdict criterion_8() {
  Failures fails;
  Tour p = hamilton_kneser(5, 2);
  if (p.outcome != kneser::Outcome::path) fails.add("K(5,2) not reported as path-only");
  if (verify_tour(p.spec, p.vertices, true).ok) fails.add("K(5,2) false cycle");
  if (!verify_tour(p.spec, p.vertices, false).ok) fails.add("K(5,2) path invalid");
  std::ostringstream times;
  for (auto [n, k] : std::vector<std::pair<int, int>>{{7, 3}, {8, 3}}) {
    auto t0 = std::chrono::steady_clock::now();
    FallbackLimits lim;
    lim.seconds = 60;
    Tour t = fallback_search(GraphSpec::kneser(n, k), lim);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (t.outcome != kneser::Outcome::cycle || !verify_tour(t.spec, t.vertices, true).ok) {
      fails.add("K" + pk(n, k) + " not solved");
    }
    if (secs > 60) fails.add("K" + pk(n, k) + " too slow");
    times << "K" << pk(n, k) << " " << secs << " s ";
  }
  return {!fails.any(), fails.any() ? fails.str()
                                    : "K(5,2) path only, " + times.str()};
}

}  // namespace

int main(int argc, char** argv) {
  Scope scope = make_scope();
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  auto wanted = [&](int c) { return only.empty() || only.count(c); };

  std::map<int, std::string> names = {
      {1, "end-to-end Hamiltonicity"}, {2, "factor correctness"}, {3, "invariance suite"},
      {4, "dynamics suite"},           {5, "connector suite"},    {6, "worked micro-examples"},
      {7, "reductions"},               {8, "fallback honesty"}};
  bool all_pass = true;
  auto report = [&](int c, const std::function<Verdict()>& run) {
    auto t0 = std::chrono::steady_clock::now();
    Verdict o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    all_pass = all_pass && o.pass;
    std::cout << "criterion " << c << " " << (o.pass ? "PASS" : "FAIL") << " " << names[c]
              << ": " << o.detail << " [" << static_cast<int>(secs) << " s]" << std::endl;
  };

  if (wanted(1) || wanted(2)) {
    std::pair<Verdict, Verdict> both;
    bool done = false;
    auto run_both = [&]() {
      if (!done) both = criteria_1_2(scope);
      done = true;
    };
    if (wanted(1)) report(1, [&] { run_both(); return both.first; });
    if (wanted(2)) report(2, [&] { run_both(); return both.second; });
  }
  if (wanted(3)) report(3, [&] { return criterion_3(scope); });
  if (wanted(4)) report(4, [&] { return criterion_4(scope); });
  if (wanted(5)) report(5, [&] { return criterion_5(); });
  if (wanted(6)) report(6, [&] { return criterion_6(); });
  if (wanted(7)) report(7, [&] { return criterion_7(scope); });
  if (wanted(8)) report(8, [&] { return criterion_8(); });
  return all_pass ? 0 : 1;
}
