#include "kneser/extensions.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <map>
#include <random>
#include <tuple>
#include <unordered_set>

namespace kneser {

std::string family_name(Family f) {
  switch (f) {
    case Family::kneser: return "kneser";
    case Family::johnson: return "johnson";
    case Family::gen_kneser: return "gen-kneser";
    case Family::bipartite: return "bipartite";
  }
  return "?";
}

std::optional<Family> parse_family(const std::string& name) {
  for (Family f : {Family::kneser, Family::johnson, Family::gen_kneser, Family::bipartite}) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

namespace {

bool johnson_admissible(int n, int k, int s) {
  return k >= 1 && s >= 0 && s < k && n >= 2 * k - s + (s == 0 ? 1 : 0);
}

}  // namespace

void GraphSpec::validate() const {
  bool ok = false;
  switch (family) {
    case Family::kneser:
    case Family::bipartite:
      ok = k >= 1 && n >= 2 * k + 1;
      break;
    case Family::johnson:
    case Family::gen_kneser:
      ok = johnson_admissible(n, k, s);
      break;
  }
  if (!ok) throw ParameterError("unsupported parameters for " + label());
}

bool GraphSpec::is_petersen() const {
  switch (family) {
    case Family::kneser: return n == 5 && k == 2;
    case Family::johnson:
    case Family::gen_kneser:
      return n == 5 && ((k == 2 && s == 0) || (k == 3 && s == 1));
    case Family::bipartite: return false;
  }
  return false;
}

uint64_t GraphSpec::vertex_count() const {
  return family == Family::bipartite ? 2 * binomial(n, k) : binomial(n, k);
}

bool GraphSpec::is_vertex(const CyclicBitstring& x) const {
  if (x.n() != n) return false;
  if (family == Family::bipartite) return x.k() == k || x.k() == n - k;
  return x.k() == k;
}

bool GraphSpec::adjacent(const CyclicBitstring& a, const CyclicBitstring& b) const {
  switch (family) {
    case Family::kneser: return a.disjoint(b);
    case Family::johnson: return a.common(b) == s;
    case Family::gen_kneser: return !(a == b) && a.common(b) <= s;
    case Family::bipartite:
      if (a.k() == b.k()) return false;
      return a.k() < b.k() ? a.subset_of(b) : b.subset_of(a);
  }
  return false;
}

std::vector<CyclicBitstring> GraphSpec::vertices() const {
  std::vector<CyclicBitstring> out;
  Ranker rk(n, k);
  for (uint64_t r = 0; r < rk.count(); ++r) out.push_back(rk.unrank(r));
  if (family == Family::bipartite) {
    Ranker big(n, n - k);
    for (uint64_t r = 0; r < big.count(); ++r) out.push_back(big.unrank(r));
  }
  return out;
}

std::string GraphSpec::label() const {
  std::string s_part = (family == Family::johnson || family == Family::gen_kneser)
                           ? "," + std::to_string(s)
                           : "";
  return family_name(family) + "(" + std::to_string(n) + "," + std::to_string(k) + s_part + ")";
}

GraphSpec complement_johnson(const GraphSpec& spec) {
  return {spec.family, spec.n, spec.n - spec.k, spec.n - 2 * spec.k + spec.s};
}

// ---------------------------------------------------------------- fallback

namespace {

using Clock = std::chrono::steady_clock;

struct Graph {
  std::vector<std::vector<uint32_t>> adj;  // sorted
  bool has_edge(uint32_t a, uint32_t b) const {
    return std::binary_search(adj[a].begin(), adj[a].end(), b);
  }
};

Graph build_graph(const GraphSpec& spec, const std::vector<CyclicBitstring>& vs) {
  Graph g;
  g.adj.resize(vs.size());
  for (uint32_t i = 0; i < vs.size(); ++i) {
    for (uint32_t j = i + 1; j < vs.size(); ++j) {
      if (spec.adjacent(vs[i], vs[j])) {
        g.adj[i].push_back(j);
        g.adj[j].push_back(i);
      }
    }
  }
  return g;
}

enum class SearchStatus { found, exhausted, out_of_budget };

class Deadline {
 public:
  explicit Deadline(double seconds)
      : end_(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                std::chrono::duration<double>(seconds))) {}
  bool passed() const { return Clock::now() >= end_; }

 private:
  Clock::time_point end_;
};

// Depth-first search over simple paths.  In cycle mode the path starts at
// vertex 0 and every unvisited vertex must keep two usable neighbours; in
// path mode every start is tried.
class Backtracker {
 public:
  Backtracker(const Graph& g, bool cycle, const Deadline& deadline, uint64_t node_budget)
      : g_(g), cycle_(cycle), deadline_(deadline), budget_(node_budget) {}

  SearchStatus run(std::vector<uint32_t>& out) {
    uint32_t N = static_cast<uint32_t>(g_.adj.size());
    if (N == 0) return SearchStatus::exhausted;
    uint32_t starts = cycle_ ? 1 : N;
    for (uint32_t s = 0; s < starts; ++s) {
      auto st = from(s);
      if (st != SearchStatus::exhausted) {
        if (st == SearchStatus::found) out = path_;
        return st;
      }
    }
    return SearchStatus::exhausted;
  }

 private:
  struct Frame {
    uint32_t v;
    std::vector<uint32_t> cand;
    size_t next = 0;
  };

  void visit(uint32_t v) {
    visited_[v] = 1;
    path_.push_back(v);
    for (uint32_t w : g_.adj[v]) --free_[w];
  }
  void leave(uint32_t v) {
    visited_[v] = 0;
    path_.pop_back();
    for (uint32_t w : g_.adj[v]) ++free_[w];
  }

  int options(uint32_t u, uint32_t cur) const {
    int o = free_[u];
    if (cycle_ && g_.has_edge(u, start_)) ++o;
    (void)cur;
    return o;
  }

  // Candidates for the step after `cur`, or none if the position is dead.
  std::vector<uint32_t> candidates(uint32_t cur) {
    std::vector<uint32_t> cand;
    uint32_t N = static_cast<uint32_t>(g_.adj.size());
    uint32_t remaining = N - static_cast<uint32_t>(path_.size());
    if (remaining == 0) return cand;
    int forced = -1;
    for (uint32_t u : g_.adj[cur]) {
      if (visited_[u]) continue;
      // u can only be reached from cur if it has fewer than two other ways out
      int need = cycle_ ? 2 : 1;
      if (options(u, cur) < need && remaining > 1) {
        if (forced >= 0) return {};
        forced = static_cast<int>(u);
      }
      cand.push_back(u);
    }
    if (forced >= 0) return {static_cast<uint32_t>(forced)};
    std::sort(cand.begin(), cand.end(), [&](uint32_t a, uint32_t b) {
      return free_[a] != free_[b] ? free_[a] < free_[b] : a < b;
    });
    return cand;
  }

  // After moving to v from c, unvisited neighbours of c lost c as an option.
  bool dead_after(uint32_t c, uint32_t v) const {
    uint32_t remaining = static_cast<uint32_t>(g_.adj.size() - path_.size());
    if (remaining <= 1) return false;
    for (uint32_t u : g_.adj[c]) {
      if (visited_[u]) continue;
      int o = options(u, v) + (g_.has_edge(u, v) ? 1 : 0);
      if (o < (cycle_ ? 2 : 1)) return true;
    }
    return false;
  }

  SearchStatus from(uint32_t s) {
    uint32_t N = static_cast<uint32_t>(g_.adj.size());
    visited_.assign(N, 0);
    free_.resize(N);
    for (uint32_t v = 0; v < N; ++v) free_[v] = static_cast<int>(g_.adj[v].size());
    path_.clear();
    start_ = s;
    visit(s);
    std::vector<Frame> stack;
    stack.push_back({s, candidates(s)});
    while (!stack.empty()) {
      if (path_.size() == N) {
        if (!cycle_ || g_.has_edge(path_.back(), start_)) return SearchStatus::found;
      }
      if ((++nodes_ & 0xfff) == 0 && deadline_.passed()) return SearchStatus::out_of_budget;
      if (nodes_ > budget_) return SearchStatus::out_of_budget;
      Frame& top = stack.back();
      if (top.next >= top.cand.size()) {
        leave(top.v);
        stack.pop_back();
        continue;
      }
      uint32_t v = top.cand[top.next++];
      uint32_t c = top.v;
      visit(v);
      if (dead_after(c, v)) {
        leave(v);
        continue;
      }
      stack.push_back({v, candidates(v)});
    }
    return SearchStatus::exhausted;
  }

  const Graph& g_;
  bool cycle_;
  const Deadline& deadline_;
  uint64_t budget_;
  uint64_t nodes_ = 0;
  uint32_t start_ = 0;
  std::vector<uint8_t> visited_;
  std::vector<int> free_;
  std::vector<uint32_t> path_;
};

// Rotation-extension: grow a path, and when stuck reverse a tail so that
// the far end changes.  Finds cycles fast in well-connected graphs but
// proves nothing.
bool rotation_extension(const Graph& g, const Deadline& deadline, uint64_t seed,
                        std::vector<uint32_t>& out) {
  uint32_t N = static_cast<uint32_t>(g.adj.size());
  std::mt19937_64 rng(seed);
  std::vector<int64_t> pos(N);
  std::vector<uint32_t> path;
  uint64_t steps = 0;
  const uint64_t restart_after = 200ull * N + 10000;
  while (!deadline.passed()) {
    std::fill(pos.begin(), pos.end(), -1);
    path.assign(1, static_cast<uint32_t>(rng() % N));
    pos[path[0]] = 0;
    for (uint64_t it = 0; it < restart_after; ++it) {
      if ((++steps & 0x3ff) == 0 && deadline.passed()) return false;
      uint32_t v = path.back();
      if (path.size() == N && g.has_edge(v, path[0])) {
        out = path;
        return true;
      }
      std::vector<uint32_t> fresh;
      for (uint32_t u : g.adj[v]) {
        if (pos[u] < 0) fresh.push_back(u);
      }
      if (!fresh.empty()) {
        uint32_t best = fresh[rng() % fresh.size()];
        pos[best] = static_cast<int64_t>(path.size());
        path.push_back(best);
        continue;
      }
      if (rng() % 8 == 0) {
        std::reverse(path.begin(), path.end());
        for (size_t i = 0; i < path.size(); ++i) pos[path[i]] = static_cast<int64_t>(i);
        continue;
      }
      const auto& nb = g.adj[v];
      uint32_t u = nb[rng() % nb.size()];
      int64_t i = pos[u];
      if (i + 1 >= static_cast<int64_t>(path.size()) - 1) continue;
      std::reverse(path.begin() + i + 1, path.end());
      for (size_t j = static_cast<size_t>(i + 1); j < path.size(); ++j) {
        pos[path[j]] = static_cast<int64_t>(j);
      }
    }
  }
  return false;
}

Tour with_vertices(const GraphSpec& spec, Outcome o, const std::vector<CyclicBitstring>& vs,
                   const std::vector<uint32_t>& order, std::string strategy) {
  Tour t{spec, o, {}, std::move(strategy)};
  t.vertices.reserve(order.size());
  for (uint32_t i : order) t.vertices.push_back(vs[i]);
  return t;
}

}  // namespace

Tour fallback_search(const GraphSpec& spec, const FallbackLimits& limits) {
  spec.validate();
  uint64_t count = spec.vertex_count();
  if (count > limits.max_vertices) return {spec, Outcome::too_large, {}, "fallback"};
  Deadline deadline(limits.seconds);
  auto vs = spec.vertices();
  Graph g = build_graph(spec, vs);

  std::vector<uint32_t> order;
  // Small graphs are settled outright; larger ones get the heuristic first.
  Backtracker quick(g, true, deadline, 2'000'000);
  SearchStatus st = quick.run(order);
  if (st == SearchStatus::out_of_budget && !deadline.passed()) {
    if (rotation_extension(g, deadline, 0x5eed ^ count, order)) st = SearchStatus::found;
  }
  if (st == SearchStatus::out_of_budget && !deadline.passed()) {
    Backtracker full(g, true, deadline, UINT64_MAX);
    st = full.run(order);
  }
  if (st == SearchStatus::found) return with_vertices(spec, Outcome::cycle, vs, order, "fallback");
  if (st == SearchStatus::out_of_budget) return {spec, Outcome::timeout, {}, "fallback"};

  Backtracker paths(g, false, deadline, UINT64_MAX);
  st = paths.run(order);
  if (st == SearchStatus::found) return with_vertices(spec, Outcome::path, vs, order, "fallback");
  if (st == SearchStatus::out_of_budget) return {spec, Outcome::timeout, {}, "fallback"};
  throw InternalError("no Hamilton path in connected graph " + spec.label());
}

// ---------------------------------------------------------------- Kneser

Tour hamilton_kneser(int n, int k, const FallbackLimits& limits, int anchor) {
  GraphSpec spec = GraphSpec::kneser(n, k);
  spec.validate();
  if (k == 1) {
    Tour t{spec, Outcome::cycle, {}, "rotation"};
    for (int i = 0; i < n; ++i) {
      int one[1] = {i};
      t.vertices.push_back(CyclicBitstring(n, one));
    }
    return t;
  }
  if (n >= 2 * k + 3) {
    auto factor = CycleFactor::build(n, k);
    auto plan = build_gluing_plan(factor, anchor);
    auto ham = assemble_hamilton(factor, plan);
    return {spec, Outcome::cycle, ham.vertices(factor.ranker()), "gluing"};
  }
  return fallback_search(spec, limits);
}

// ---------------------------------------------------------------- Johnson

namespace {

CyclicBitstring lift(const CyclicBitstring& x, bool top) {
  std::vector<uint8_t> bits = x.bits();
  bits.push_back(top ? 1 : 0);
  return CyclicBitstring::from_bits(bits);
}

CyclicBitstring complement_vertex(const CyclicBitstring& x) { return x.complement(); }

CyclicBitstring permute(const CyclicBitstring& x, const std::vector<int>& perm) {
  std::vector<uint8_t> bits(static_cast<size_t>(x.n()), 0);
  for (int i : x.ones()) bits[static_cast<size_t>(perm[static_cast<size_t>(i)])] = 1;
  return CyclicBitstring::from_bits(bits);
}

// The permutation sending c to x and d to y, block by block in increasing
// order: c∩d, c\d, d\c and the rest.
std::vector<int> edge_permutation(const CyclicBitstring& c, const CyclicBitstring& d,
                                  const CyclicBitstring& x, const CyclicBitstring& y) {
  int n = c.n();
  std::array<std::vector<int>, 4> from, to;
  auto block = [](bool a, bool b) { return a && b ? 0 : a ? 1 : b ? 2 : 3; };
  for (int i = 0; i < n; ++i) {
    from[static_cast<size_t>(block(c[i], d[i]))].push_back(i);
    to[static_cast<size_t>(block(x[i], y[i]))].push_back(i);
  }
  std::vector<int> perm(static_cast<size_t>(n));
  for (size_t b = 0; b < 4; ++b) {
    if (from[b].size() != to[b].size()) throw InternalError("edge_permutation: shapes differ");
    for (size_t i = 0; i < from[b].size(); ++i) {
      perm[static_cast<size_t>(from[b][i])] = to[b][i];
    }
  }
  return perm;
}

class JohnsonSolver {
 public:
  explicit JohnsonSolver(const FallbackLimits& limits) : limits_(limits) {}

  Tour solve(int n, int k, int s, bool allow_complement = true) {
    auto key = std::make_tuple(n, k, s);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Tour t = compute(n, k, s, allow_complement);
    memo_.emplace(key, t);
    return t;
  }

 private:
  static bool base_case(int n, int k, int s) {
    static const std::array<std::array<int, 3>, 10> base = {{{3, 1, 0},
                                                            {4, 1, 0},
                                                            {4, 2, 1},
                                                            {5, 1, 0},
                                                            {5, 2, 1},
                                                            {6, 1, 0},
                                                            {6, 2, 0},
                                                            {6, 2, 1},
                                                            {6, 3, 1},
                                                            {6, 3, 2}}};
    for (const auto& b : base) {
      if (b[0] == n && b[1] == k && b[2] == s) return true;
    }
    return false;
  }

  Tour compute(int n, int k, int s, bool allow_complement) {
    GraphSpec spec = GraphSpec::johnson(n, k, s);
    spec.validate();
    if (spec.is_petersen() || base_case(n, k, s)) return relabel(fallback_search(spec, limits_), spec);
    if (s == 0) return relabel(hamilton_kneser(n, k, limits_), spec);

    bool sub_ok = johnson_admissible(n - 1, k - 1, s - 1) && johnson_admissible(n - 1, k, s) &&
                  !GraphSpec::johnson(n - 1, k - 1, s - 1).is_petersen() &&
                  !GraphSpec::johnson(n - 1, k, s).is_petersen();
    if (sub_ok) {
      Tour with_top = solve(n - 1, k - 1, s - 1);
      Tour without_top = solve(n - 1, k, s);
      if (with_top.outcome != Outcome::cycle) return {spec, with_top.outcome, {}, "johnson"};
      if (without_top.outcome != Outcome::cycle) return {spec, without_top.outcome, {}, "johnson"};
      return stitch(spec, without_top, with_top);
    }
    GraphSpec comp = complement_johnson(spec);
    if (allow_complement && !(comp.k == k && comp.s == s) && johnson_admissible(n, comp.k, comp.s)) {
      Tour t = solve(n, comp.k, comp.s, false);
      if (t.outcome != Outcome::cycle) return {spec, t.outcome, {}, "complement"};
      Tour out{spec, Outcome::cycle, {}, "complement"};
      for (const auto& v : t.vertices) out.vertices.push_back(complement_vertex(v));
      return out;
    }
    return relabel(fallback_search(spec, limits_), spec);
  }

  static Tour relabel(Tour t, const GraphSpec& spec) {
    t.spec = spec;
    return t;
  }

  // Joins the cycle on sets avoiding the top element with the cycle on sets
  // containing it, through a 4-cycle with one edge in each.
  Tour stitch(const GraphSpec& spec, const Tour& without_top, const Tour& with_top) {
    std::vector<CyclicBitstring> a, c;
    for (const auto& v : without_top.vertices) a.push_back(lift(v, false));
    for (const auto& v : with_top.vertices) c.push_back(lift(v, true));
    size_t A = a.size(), C = c.size();

    auto join = [&](size_t i, size_t j, bool forward) {
      // a[i+1] ... a[i], then c from j around to the other end of the edge
      Tour out{spec, Outcome::cycle, {}, "johnson"};
      out.vertices.reserve(A + C);
      for (size_t t = 1; t <= A; ++t) out.vertices.push_back(a[(i + t) % A]);
      for (size_t t = 0; t < C; ++t) {
        size_t idx = forward ? (j + 1 + t) % C : (j + C - t) % C;
        out.vertices.push_back(c[idx]);
      }
      return out;
    };

    const size_t edge_limit = std::min<size_t>(A, 64);
    for (size_t i = 0; i < edge_limit; ++i) {
      const auto &a0 = a[i], &a1 = a[(i + 1) % A];
      for (size_t j = 0; j < C; ++j) {
        const auto &c0 = c[j], &c1 = c[(j + 1) % C];
        // a0 -> c0 backwards to c1 -> a1
        if (spec.adjacent(a0, c0) && spec.adjacent(c1, a1)) return join(i, j, false);
        // a0 -> c1 forwards to c0 -> a1
        if (spec.adjacent(a0, c1) && spec.adjacent(c0, a1)) return join(i, j, true);
      }
    }

    // Move an edge of the second cycle onto one that closes a 4-cycle with
    // the first edge of the first cycle.
    const auto &a0 = a[0], &a1 = a[1 % A];
    for (const auto& x : c) {
      if (!spec.adjacent(a0, x)) continue;
      for (const auto& y : c) {
        if (spec.adjacent(x, y) && spec.adjacent(y, a1)) {
          auto perm = edge_permutation(c[0], c[1 % C], x, y);
          for (auto& v : c) v = permute(v, perm);
          return join(0, 0, false);
        }
      }
    }
    throw InternalError("no stitching 4-cycle for " + spec.label());
  }

  FallbackLimits limits_;
  std::map<std::tuple<int, int, int>, Tour> memo_;
};

}  // namespace

Tour hamilton_johnson(int n, int k, int s, const FallbackLimits& limits) {
  JohnsonSolver solver(limits);
  return solver.solve(n, k, s);
}

Tour hamilton_generalized_kneser(int n, int k, int s, const FallbackLimits& limits) {
  GraphSpec spec = GraphSpec::gen_kneser(n, k, s);
  spec.validate();
  Tour t = hamilton_johnson(n, k, s, limits);
  t.spec = spec;
  return t;
}

// ---------------------------------------------------------------- bipartite

Tour hamilton_bipartite(int n, int k, const FallbackLimits& limits) {
  GraphSpec spec = GraphSpec::bipartite(n, k);
  spec.validate();
  Tour base = hamilton_kneser(n, k, limits);
  if (base.outcome != Outcome::cycle) {
    Tour t = fallback_search(spec, limits);
    return t;
  }
  const auto& x = base.vertices;
  size_t N = x.size();
  // P alternates x_i and complements starting with x_0; Q is the opposite.
  auto p_at = [&](size_t i) { return i % 2 == 0 ? x[i] : x[i].complement(); };
  auto q_at = [&](size_t i) { return i % 2 == 0 ? x[i].complement() : x[i]; };
  Tour out{spec, Outcome::cycle, {}, "doubling"};
  out.vertices.reserve(2 * N);
  if (N % 2 == 1) {
    for (size_t i = 0; i < N; ++i) out.vertices.push_back(p_at(i));
    for (size_t i = 0; i < N; ++i) out.vertices.push_back(q_at(i));
    return out;
  }
  // Two disjoint cycles: find an edge from P to Q and walk each cycle up to it.
  for (size_t i = 0; i < N; ++i) {
    for (size_t j = 0; j < N; ++j) {
      if (i % 2 != j % 2 || i == j) continue;
      if (!spec.adjacent(p_at(i), q_at(j))) continue;
      out.outcome = Outcome::path;
      for (size_t t = 1; t <= N; ++t) out.vertices.push_back(p_at((i + t) % N));
      for (size_t t = 0; t < N; ++t) out.vertices.push_back(q_at((j + t) % N));
      out.strategy = "doubling-path";
      return out;
    }
  }
  throw InternalError("no edge between the two doubled cycles");
}

Tour hamilton(const GraphSpec& spec, const FallbackLimits& limits, int anchor) {
  switch (spec.family) {
    case Family::kneser: return hamilton_kneser(spec.n, spec.k, limits, anchor);
    case Family::johnson: return hamilton_johnson(spec.n, spec.k, spec.s, limits);
    case Family::gen_kneser: return hamilton_generalized_kneser(spec.n, spec.k, spec.s, limits);
    case Family::bipartite: return hamilton_bipartite(spec.n, spec.k, limits);
  }
  throw ParameterError("unknown family");
}

VerifyReport verify_tour(const GraphSpec& spec, const std::vector<CyclicBitstring>& seq,
                         bool closed) {
  VerifyReport rep;
  uint64_t expect = spec.vertex_count();
  if (seq.size() != expect) {
    rep.message = "expected " + std::to_string(expect) + " vertices, got " +
                  std::to_string(seq.size());
    return rep;
  }
  std::unordered_set<CyclicBitstring, BitstringHash> seen;
  seen.reserve(seq.size());
  for (size_t i = 0; i < seq.size(); ++i) {
    if (!spec.is_vertex(seq[i])) {
      rep.message = "vertex " + seq[i].str() + " is not in " + spec.label();
      rep.position = static_cast<int64_t>(i);
      return rep;
    }
    if (!seen.insert(seq[i]).second) {
      rep.message = "vertex " + seq[i].str() + " repeats";
      rep.position = static_cast<int64_t>(i);
      return rep;
    }
  }
  size_t edges = closed ? seq.size() : seq.size() - 1;
  if (closed && seq.size() < 3) {
    rep.message = "a cycle needs at least 3 vertices";
    return rep;
  }
  for (size_t i = 0; i < edges; ++i) {
    const auto& a = seq[i];
    const auto& b = seq[(i + 1) % seq.size()];
    if (!spec.adjacent(a, b)) {
      rep.message = a.str() + " and " + b.str() + " are not adjacent";
      rep.position = static_cast<int64_t>(i);
      return rep;
    }
  }
  rep.ok = true;
  rep.message = closed ? "Hamilton cycle" : "Hamilton path";
  return rep;
}

}  // namespace kneser
