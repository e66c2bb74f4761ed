#include "kneser/gluing.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "kneser/dynamics.hpp"

namespace kneser {

namespace {

int mod(int64_t a, int n) {
  int64_t r = a % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

// Annotated string read from anchor p on.
struct View {
  std::string s;
  int n;
  int p;
  char at(int64_t i) const { return s[mod(p + i, n)]; }
  int abs(int64_t i) const { return mod(p + i, n); }
  int run_right(int64_t i, char c) const {
    int len = 0;
    while (len < n && at(i + len) == c) ++len;
    return len;
  }
  int run_left(int64_t i, char c) const {
    int len = 0;
    while (len < n && at(i - len) == c) ++len;
    return len;
  }
  // length of the dash-free stretch starting at i
  int word_right(int64_t i) const {
    int len = 0;
    while (len < n && at(i + len) != '-') ++len;
    return len;
  }
  int word_left(int64_t i) const {
    int len = 0;
    while (len < n && at(i - len) != '-') ++len;
    return len;
  }
  bool hill(int64_t i, int b) const {
    for (int j = 0; j < b; ++j) {
      if (at(i + j) != '1' || at(i + b + j) != '0') return false;
    }
    return true;
  }
  std::string slice(int64_t i, int len) const {
    std::string out;
    for (int j = 0; j < len; ++j) out += at(i + j);
    return out;
  }
};

struct Speeds {
  std::vector<int> v;  // ascending, v[0] is the slowest
  int glider_count() const { return static_cast<int>(v.size()); }
  int get(int i) const { return i <= glider_count() ? v[i - 1] : 0; }
  bool second_below_third() const { return glider_count() >= 3 && v[1] < v[2]; }
};

Speeds speeds_of(const CyclicBitstring& x) {
  Speeds s;
  s.v = speed_multiset_direct(x).parts;
  std::reverse(s.v.begin(), s.v.end());
  return s;
}

std::string hill_string(int b) { return std::string(b, '1') + std::string(b, '0'); }

// Rules whose anchor sits on the 0s of a hill 1^a 0^a.
std::optional<RuleMatch> match_on_zeros(const View& t, const Speeds& sp) {
  if (t.at(0) != '0') return std::nullopt;
  int zl = t.run_left(0, '0'), zr = t.run_right(0, '0');
  int a = zl + zr - 1;
  int left = -(zl - 1), right = zr - 1;
  if (2 * a > t.n) return std::nullopt;
  if (t.run_left(left - 1, '1') < a || t.at(left - a - 1) == '1') return std::nullopt;
  if (t.at(right + 1) != '-') return std::nullopt;
  if (a != sp.get(1) || a % 2 != 0) return std::nullopt;
  int start = left - a;
  int dashes = t.run_right(right + 1, '-');
  if (dashes >= 3) {
    if (sp.glider_count() < 2) return std::nullopt;
    RuleMatch m{2, t.abs(start), t.abs(right + 1)};
    m.primary_to = m.to;
    m.alternative_to = t.abs(right + 2);
    m.a = a;
    return m;
  }
  int w_start = right + 1 + dashes;
  int w_len = t.word_right(w_start);
  if (w_len == 0 || 2 * a + dashes + w_len + 1 > t.n) return std::nullopt;
  RuleMatch m{3, t.abs(start), t.abs(w_start - 1)};
  m.a = a;
  return m;
}

// Rules whose anchor sits on the 1s of a hill 1^a 0^a with a = v1 odd.
std::optional<RuleMatch> match_on_ones(const View& t, const Speeds& sp, int ell) {
  if (t.at(0) != '1') return std::nullopt;
  int ol = t.run_left(0, '1'), orr = t.run_right(0, '1');
  int a = ol + orr - 1;
  int start = -(ol - 1);
  if (2 * a > t.n || !t.hill(start, a)) return std::nullopt;
  int end = start + 2 * a - 1;
  if (t.at(end + 1) != '-') return std::nullopt;
  if (a != sp.get(1) || a % 2 != 1) return std::nullopt;
  int dashes = t.run_right(end + 1, '-');
  if (dashes >= 3 && (a >= 3 || dashes == ell)) {
    if (sp.glider_count() < 2) return std::nullopt;
    RuleMatch m{4, t.abs(start), t.abs(end + 1)};
    m.primary_to = m.to;
    m.alternative_to = t.abs(end + 2);
    m.a = a;
    return m;
  }
  int c = dashes - 1;
  if (!(a == 1 || c <= 1)) return std::nullopt;
  int u_len = t.word_left(start - 1);
  int w_start = end + 1 + dashes;
  int w_len = t.word_right(w_start);
  if (w_len == 0 || u_len + 2 * a + dashes + w_len + 1 > t.n) return std::nullopt;
  std::string u = t.slice(start - u_len, u_len);
  std::string w = t.slice(w_start, w_len);
  bool slow_pair = a == 1 && sp.second_below_third();
  std::string bb = slow_pair ? hill_string(sp.get(2)) : std::string();
  if (slow_pair && c == 0 && u == bb) return std::nullopt;
  if (slow_pair && w == bb && !(c == 0 && w == "10")) return std::nullopt;
  RuleMatch m{5, t.abs(start), t.abs(w_start - 1)};
  m.a = a;
  m.w_is_10 = w == "10";
  return m;
}

// Rules whose anchor sits on the 1 of a speed one hill "10-".
void match_on_pair(const View& t, const Speeds& sp, std::vector<RuleMatch>& out) {
  if (t.at(0) != '1' || t.at(1) != '0' || t.at(2) != '-') return;
  const int n = t.n;
  int d1 = t.run_right(2, '-');
  int after = 2 + d1;
  int blen = t.word_right(after);
  int b = sp.get(2);

  // hill 1^b 0^b standing right before the pair
  if (sp.second_below_third() && 2 * b + 4 <= n && t.hill(-2 * b, b) &&
      t.at(-2 * b - 1) == '-') {
    int w_len = t.word_right(3);
    if (w_len > 0 && 2 * b + 3 + w_len + 1 <= n) {
      out.push_back({6, t.abs(-2 * b), t.abs(2)});
    }
  }

  int u_len = t.word_left(-1);
  // the stretch after the first run of dashes is a single hill
  if (sp.second_below_third() && blen == 2 * b && t.hill(after, b)) {
    int d2 = t.run_right(after + 2 * b, '-');
    int tail = after + 2 * b + d2;
    if (b >= 2) {
      int w_len = t.word_right(tail);
      if (w_len > 0 && tail + w_len + 1 <= n) {
        out.push_back({7, t.abs(0), t.abs(tail - 1)});
      }
    }
    // u 10 - -^c hill -^+ with nothing else
    if (u_len > 0 && tail + u_len == n && (b >= 2 || d1 - 1 == 1)) {
      out.push_back({8, t.abs(after), t.abs(tail - 1)});
    }
  }
  if (sp.glider_count() >= 3 && sp.get(3) > 1 && d1 >= 3 && blen == 2 && t.hill(after, 1)) {
    int d2 = t.run_right(after + 2, '-');
    int tail = after + 2 + d2;
    if (u_len > 0 && tail + u_len == n) {
      out.push_back({9, t.abs(0), t.abs(d1 - 1)});
    }
  }
}

std::vector<RuleMatch> all_matches(const CyclicBitstring& x, int p) {
  const int n = x.n(), k = x.k();
  const int ell = n - 2 * k;
  std::vector<RuleMatch> out;
  View t{annotate(x), n, mod(p, n)};
  if (t.at(0) == '-') {
    if (k < 2 || t.at(1) != '1' || t.at(2) != '0') return out;
    for (int i = 3; i <= ell + 1; ++i) {
      if (t.at(i) != '-') return out;
    }
    if (t.word_right(ell + 2) == n - ell - 2) out.push_back({1, t.abs(1), t.abs(ell + 1)});
    return out;
  }
  Speeds sp = speeds_of(x);
  if (auto m = match_on_zeros(t, sp)) out.push_back(*m);
  if (auto m = match_on_ones(t, sp, ell)) out.push_back(*m);
  match_on_pair(t, sp, out);
  return out;
}

std::optional<RuleMatch> match_domain(const CyclicBitstring& x, int p) {
  auto all = all_matches(x, p);
  if (all.empty()) return std::nullopt;
  if (all.size() > 1) {
    throw InternalError("rules " + std::to_string(all[0].family) + " and " +
                        std::to_string(all[1].family) + " both apply to " + annotate(x));
  }
  return all.front();
}

}  // namespace

int visible_pair_count(const CyclicBitstring& x) {
  Matching m = parenthesis_match(x);
  if (m.unmatched.empty()) return 0;
  int n = x.n(), start = m.unmatched.front();
  int h = 0, count = 0;
  for (int s = 1; s <= n; ++s) {
    int i = (start + s) % n;
    if (m.partner[i] < 0) continue;
    if (x[i]) {
      if (h == 0) ++count;
      ++h;
    } else {
      --h;
    }
  }
  return count;
}

namespace {

std::vector<std::pair<int, int>> visible_pairs(const CyclicBitstring& x, const Matching& m) {
  std::vector<std::pair<int, int>> out;
  if (m.unmatched.empty()) return out;
  int n = x.n(), start = m.unmatched.front();
  int h = 0;
  for (int s = 1; s <= n; ++s) {
    int i = (start + s) % n;
    if (m.partner[i] < 0) continue;
    if (x[i]) {
      if (h == 0) out.emplace_back(i, m.partner[i]);
      ++h;
    } else {
      --h;
    }
  }
  return out;
}

std::set<std::pair<int, int>> pair_set(const CyclicBitstring& x, const Matching& m) {
  std::set<std::pair<int, int>> out;
  for (int i : m.matched_ones) out.emplace(i, m.partner[i]);
  (void)x;
  return out;
}

}  // namespace

std::optional<Connector> is_connector(const CyclicBitstring& x, const CyclicBitstring& y) {
  if (x.n() != y.n() || x.k() != y.k() || x == y) return std::nullopt;
  const int n = x.n();
  int from = -1, to = -1, diff = 0;
  for (int i = 0; i < n; ++i) {
    if (x[i] == y[i]) continue;
    ++diff;
    if (x[i]) from = i;
    else to = i;
  }
  if (diff != 2) return std::nullopt;
  Matching mx = parenthesis_match(x), my = parenthesis_match(y);
  if (mx.partner[from] < 0 || my.partner[to] < 0) return std::nullopt;
  std::pair<int, int> gone{from, mx.partner[from]}, born{to, my.partner[to]};
  auto vx = visible_pairs(x, mx), vy = visible_pairs(y, my);
  if (std::find(vx.begin(), vx.end(), gone) == vx.end()) return std::nullopt;
  if (std::find(vy.begin(), vy.end(), born) == vy.end()) return std::nullopt;
  auto px = pair_set(x, mx), py = pair_set(y, my);
  px.erase(gone);
  py.erase(born);
  if (px != py) return std::nullopt;
  // the two positions swapped in must be unmatched in x and vice versa
  if (mx.partner[born.first] >= 0 || mx.partner[born.second] >= 0) return std::nullopt;
  if (my.partner[gone.first] >= 0 || my.partner[gone.second] >= 0) return std::nullopt;
  Connector c;
  c.x = x;
  c.y = y;
  c.visible_pair = gone;
  c.swapped_unmatched = born;
  return c;
}

std::vector<Connector> connectors_of(const CyclicBitstring& x) {
  std::vector<Connector> out;
  Matching m = parenthesis_match(x);
  const int n = x.n();
  const auto& dash = m.unmatched;  // ascending
  int ell = static_cast<int>(dash.size());
  if (ell < 2) return out;
  for (auto [a, b] : visible_pairs(x, m)) {
    for (int i = 0; i < ell; ++i) {
      int c = dash[i], d = dash[(i + 1) % ell];
      // skip the gap that holds the visible pair
      int span = mod(d - c, n);
      if (mod(a - c, n) < span) continue;
      Connector con;
      con.x = x;
      con.y = x.with_moved_one(a, c);
      con.visible_pair = {a, b};
      con.swapped_unmatched = {c, d};
      out.push_back(std::move(con));
    }
  }
  return out;
}

std::array<CyclicBitstring, 4> connector_four_cycle(const Connector& c) {
  return {c.x, apply_f(c.x), c.y, apply_f(c.y)};
}

int rule_domain(const CyclicBitstring& x, int p) {
  auto m = match_domain(x, p);
  return m ? m->family : 0;
}

std::optional<RuleMatch> classify_rule(const CyclicBitstring& x, int p) {
  auto m = match_domain(x, p);
  if (!m) return std::nullopt;
  if (m->family == 2 || m->family == 4) {
    CyclicBitstring y = x.with_moved_one(m->from, m->to);
    int b = 1;  // the new glider has speed one
    SearchResult z = first_arrival_at(y, m->to, b, mod(p, x.n()));
    if (rule_domain(z.vertex, p) == 4) {
      m->to = m->alternative_to;
      m->took_alternative = true;
    }
  }
  return m;
}

CyclicBitstring rule_image(const CyclicBitstring& x, const RuleMatch& m) {
  return x.with_moved_one(m.from, m.to);
}

bool partition_direction_ok(const CyclicBitstring& x, const RuleMatch& m) {
  std::vector<int> before = speed_multiset_direct(x).parts;
  std::vector<int> after = speed_multiset_direct(rule_image(x, m)).parts;
  Speeds sp = speeds_of(x);
  auto plus_one = [](std::vector<int> q) {
    next_partition(q);
    return q;
  };
  auto minus_one = [](std::vector<int> q) {
    prev_partition(q);
    return q;
  };
  switch (m.family) {
    case 1:
      return after > (sp.second_below_third() ? plus_one(before) : before);
    case 2:
      return after == minus_one(before);
    case 3:
      return after > before;
    case 4:
      return after == (sp.get(1) >= 3 ? minus_one(before) : before);
    case 5: {
      bool strong = m.a == 1 && sp.second_below_third() && !m.w_is_10;
      return after > (strong ? plus_one(before) : before);
    }
    case 6:
    case 7:
    case 8:
      return after > plus_one(before);
    case 9:
      return after == before;
    default:
      return false;
  }
}

CyclicBitstring single_glider_vertex(int n, int k, int i) {
  std::vector<int> ones(k);
  for (int j = 0; j < k; ++j) ones[j] = mod(static_cast<int64_t>(i) + j, n);
  return make_vertex(n, k, ones);
}

int special_offset(int n, int k, int p) { return mod(p + (n - 2 * k) + 2, n); }

SingleGliderGluing single_glider_gluing(int n, int k, int r) {
  if (k < 1 || n < 2 * k + 1) throw ParameterError("single glider gluing needs n >= 2k+1");
  SingleGliderGluing out;
  out.n = n;
  out.k = k;
  out.g = std::gcd(n, k);
  out.r = mod(r, n);
  for (int i = 0; i < out.g; ++i) {
    std::vector<int> cyc;
    for (int j = 0; j < n / out.g; ++j) cyc.push_back(mod(i + static_cast<int64_t>(k) * j, n));
    out.cycles.push_back(std::move(cyc));
  }
  for (int j = 0; j + 1 < out.g; ++j) {
    int a = out.r + j;
    out.pairs.emplace_back(mod(a, n), mod(a + k + 1, n));
    out.four_cycles.push_back({mod(a, n), mod(a + k, n), mod(a + 2 * k + 1, n), mod(a + k + 1, n)});
  }
  return out;
}

GluingPlan build_gluing_plan(const CycleFactor& factor, int p) {
  const int n = factor.n(), k = factor.k();
  if (k < 1 || n < 2 * k + 3) throw ParameterError("gluing plan needs n >= 2k+3");
  const Ranker& rk = factor.ranker();
  const uint64_t total = rk.count();
  GluingPlan plan;
  plan.n = n;
  plan.k = k;
  plan.p = mod(p, n);
  plan.r = special_offset(n, k, plan.p);

  constexpr uint32_t kFree = UINT32_MAX;
  std::vector<uint32_t> used(total, kFree);
  SingleGliderGluing sg = single_glider_gluing(n, k, plan.r);
  for (auto [i, j] : sg.pairs) {
    uint32_t a = static_cast<uint32_t>(rk.rank(single_glider_vertex(n, k, i)));
    uint32_t b = static_cast<uint32_t>(rk.rank(single_glider_vertex(n, k, j)));
    plan.special_pairs.emplace_back(a, b);
    used[a] = used[b] = kFree - 1;
  }

  for (uint64_t r = 0; r < total; ++r) {
    CyclicBitstring x = rk.unrank(r);
    auto m = classify_rule(x, plan.p);
    if (!m) continue;
    uint32_t y = static_cast<uint32_t>(rk.rank(rule_image(x, *m)));
    uint32_t idx = static_cast<uint32_t>(plan.connectors.size());
    for (uint32_t v : {static_cast<uint32_t>(r), y}) {
      if (used[v] == kFree - 1) {
        throw InternalError("connector " + x.str() + " touches a special pair");
      }
      if (used[v] != kFree) {
        throw InternalError("connectors overlap at " + rk.unrank(v).str());
      }
      used[v] = idx;
    }
    plan.connectors.push_back({static_cast<uint32_t>(r), y, static_cast<uint8_t>(m->family)});
    ++plan.family_counts[m->family];
  }

  // aux nodes: every factor cycle, with the single glider cycles merged
  const size_t cycles = factor.cycle_count();
  std::vector<bool> single(cycles, false);
  for (int i = 0; i < n; ++i) {
    single[factor.cycle_index(rk.rank(single_glider_vertex(n, k, i)))] = true;
  }
  plan.node_of_cycle.assign(cycles, 0);
  uint32_t next = 1;
  for (size_t c = 0; c < cycles; ++c) plan.node_of_cycle[c] = single[c] ? 0 : next++;
  plan.node_count = next;
  plan.single_glider_node = 0;

  std::vector<std::vector<std::pair<uint32_t, uint32_t>>> adj(plan.node_count);
  for (uint32_t i = 0; i < plan.connectors.size(); ++i) {
    const auto& c = plan.connectors[i];
    uint32_t a = plan.node_of_cycle[factor.cycle_index(c.x)];
    uint32_t b = plan.node_of_cycle[factor.cycle_index(c.y)];
    if (a == b) continue;
    plan.aux_edges.push_back({a, b, i});
    adj[a].emplace_back(b, i);
    adj[b].emplace_back(a, i);
  }

  std::vector<bool> seen(plan.node_count, false);
  std::deque<uint32_t> queue{plan.single_glider_node};
  seen[plan.single_glider_node] = true;
  uint32_t reached = 1;
  while (!queue.empty()) {
    uint32_t a = queue.front();
    queue.pop_front();
    for (auto [b, i] : adj[a]) {
      if (seen[b]) continue;
      seen[b] = true;
      ++reached;
      plan.tree.push_back(i);
      queue.push_back(b);
    }
  }
  if (reached != plan.node_count) {
    throw InternalError("auxiliary graph is disconnected: reached " + std::to_string(reached) +
                        " of " + std::to_string(plan.node_count) + " nodes");
  }
  return plan;
}

std::vector<CyclicBitstring> HamiltonCycle::vertices(const Ranker& ranker) const {
  std::vector<CyclicBitstring> out;
  out.reserve(order.size());
  for (uint32_t r : order) out.push_back(ranker.unrank(r));
  return out;
}

namespace {

struct Splicer {
  std::vector<uint32_t> succ, pred;
  std::vector<EdgeKind> kind;  // of the edge v -> succ[v]
  std::vector<uint32_t> parent, size;  // union-find over vertices' components

  uint32_t find(uint32_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }

  void reverse_cycle(uint32_t start) {
    std::vector<uint32_t> cyc;
    uint32_t v = start;
    do {
      cyc.push_back(v);
      v = succ[v];
    } while (v != start);
    std::vector<EdgeKind> old(cyc.size());
    for (size_t i = 0; i < cyc.size(); ++i) old[i] = kind[cyc[i]];
    for (size_t i = 0; i < cyc.size(); ++i) {
      uint32_t u = cyc[i];
      std::swap(succ[u], pred[u]);
      // the edge u -> new succ was the edge from the previous vertex
      kind[u] = old[(i + cyc.size() - 1) % cyc.size()];
    }
  }

  // Removes edges {p,q} and {r,s}, adds {p,s} and {r,q}.
  void splice(uint32_t p, uint32_t q, uint32_t r, uint32_t s, EdgeKind added) {
    auto oriented = [&](uint32_t a, uint32_t b) -> int {
      int o = succ[a] == b ? 1 : succ[b] == a ? -1 : 0;
      if (o == 0 || kind[o == 1 ? a : b] != EdgeKind::factor) {
        throw InternalError("splice needs a factor edge that is already gone");
      }
      return o;
    };
    uint32_t ca = find(p), cb = find(r);
    if (ca == cb) throw InternalError("splice inside a single cycle");
    int oa = oriented(p, q), ob = oriented(r, s);
    if (oa != ob) {
      uint32_t smaller = size[ca] <= size[cb] ? p : r;
      reverse_cycle(smaller);
      oa = oriented(p, q);
      ob = oriented(r, s);
    }
    // both forward: p->q and r->s become p->s and r->q
    if (oa == 1) {
      succ[p] = s; pred[s] = p; kind[p] = added;
      succ[r] = q; pred[q] = r; kind[r] = added;
    } else {
      succ[q] = r; pred[r] = q; kind[q] = added;
      succ[s] = p; pred[p] = s; kind[s] = added;
    }
    if (size[ca] < size[cb]) std::swap(ca, cb);
    parent[cb] = ca;
    size[ca] += size[cb];
  }
};

}  // namespace

HamiltonCycle assemble_hamilton(const CycleFactor& factor, const GluingPlan& plan) {
  const uint64_t total = factor.vertex_count();
  Splicer sp;
  sp.succ.resize(total);
  sp.pred.resize(total);
  sp.kind.assign(total, EdgeKind::factor);
  sp.parent.resize(total);
  sp.size.assign(total, 1);
  for (size_t c = 0; c < factor.cycle_count(); ++c) {
    const auto& cyc = factor.cycle_ranks(c);
    for (size_t i = 0; i < cyc.size(); ++i) {
      uint32_t v = cyc[i], w = cyc[(i + 1) % cyc.size()];
      sp.succ[v] = w;
      sp.pred[w] = v;
      sp.parent[v] = cyc[0];
    }
    sp.size[cyc[0]] = static_cast<uint32_t>(cyc.size());
  }

  auto f = [&](uint32_t v) { return static_cast<uint32_t>(factor.f_rank(v)); };
  for (auto [x, y] : plan.special_pairs) {
    // (x, f(x), f(y), y): drop x-f(x) and y-f(y), add f(x)-f(y) and y-x
    sp.splice(x, f(x), f(y), y, EdgeKind::special);
  }
  for (uint32_t i : plan.tree) {
    const auto& c = plan.connectors[i];
    // (x, f(x), y, f(y)): drop x-f(x) and y-f(y), add f(x)-y and f(y)-x
    sp.splice(c.x, f(c.x), c.y, f(c.y), EdgeKind::four_cycle);
  }

  HamiltonCycle hc;
  hc.n = factor.n();
  hc.k = factor.k();
  hc.order.reserve(total);
  uint32_t v = 0;
  do {
    hc.order.push_back(v);
    hc.edge_kinds.push_back(sp.kind[v]);
    v = sp.succ[v];
  } while (v != 0 && hc.order.size() <= total);
  if (hc.order.size() != total) {
    throw InternalError("assembled cycle covers " + std::to_string(hc.order.size()) + " of " +
                        std::to_string(total) + " vertices");
  }
  return hc;
}

namespace {

VerifyReport verify_sequence(const std::vector<CyclicBitstring>& seq, int n, int k, bool closed) {
  VerifyReport rep;
  uint64_t expect = binomial(n, k);
  if (seq.size() != expect) {
    rep.message = "expected " + std::to_string(expect) + " vertices, got " +
                  std::to_string(seq.size());
    return rep;
  }
  Ranker rk(n, k);
  std::vector<bool> seen(expect, false);
  for (size_t i = 0; i < seq.size(); ++i) {
    const auto& x = seq[i];
    if (x.n() != n || x.k() != k) {
      rep.message = "vertex " + x.str() + " is not a " + std::to_string(k) + "-subset of [" +
                    std::to_string(n) + "]";
      rep.position = static_cast<int64_t>(i);
      return rep;
    }
    uint64_t r = rk.rank(x);
    if (seen[r]) {
      rep.message = "vertex " + x.str() + " repeats";
      rep.position = static_cast<int64_t>(i);
      return rep;
    }
    seen[r] = true;
  }
  size_t edges = closed ? seq.size() : seq.size() - 1;
  for (size_t i = 0; i < edges; ++i) {
    const auto& a = seq[i];
    const auto& b = seq[(i + 1) % seq.size()];
    if (!a.disjoint(b)) {
      rep.message = a.str() + " and " + b.str() + " intersect";
      rep.position = static_cast<int64_t>(i);
      return rep;
    }
  }
  rep.ok = true;
  rep.message = closed ? "hamilton cycle" : "hamilton path";
  return rep;
}

}  // namespace

VerifyReport verify_hamilton(const std::vector<CyclicBitstring>& seq, int n, int k) {
  return verify_sequence(seq, n, k, true);
}

VerifyReport verify_hamilton_path(const std::vector<CyclicBitstring>& seq, int n, int k) {
  return verify_sequence(seq, n, k, false);
}

}  // namespace kneser
