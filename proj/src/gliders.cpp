#include "kneser/gliders.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace kneser {

namespace {

int64_t floor_div(int64_t a, int64_t b) {
  int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Builds gliders over the window of one period that starts just after an
// unmatched position.  `sign` = -1 reads the steps complemented.
class GliderBuilder {
 public:
  GliderBuilder(const std::vector<int8_t>& window, int64_t base)
      : s_(window), base_(base) {}

  void factors(int l, int r, int sign, int parent, bool in_dent) {
    int h = 0, start = l;
    for (int t = l; t < r; ++t) {
      h += sign * s_[t];
      if (h == 0) {
        hill(start, t + 1, sign, parent, in_dent);
        start = t + 1;
      }
    }
    if (h != 0 || start != r) throw InternalError("unbalanced hill segment");
  }

  std::vector<Glider> take() { return std::move(out_); }

 private:
  void hill(int l, int r, int sign, int parent, bool in_dent) {
    int h = 0, top = 0, peak = -1;
    for (int t = l; t < r; ++t) {
      h += sign * s_[t];
      if (h > top) {
        top = h;
        peak = t;
      }
    }
    std::vector<int> up(top, -1), down(top + 1, -1);
    int cur = top;
    for (int t = peak; t >= l; --t) {
      int v = sign * s_[t];
      int before = cur - v;
      if (v > 0 && up[before] < 0) up[before] = t;
      cur = before;
    }
    cur = top;
    for (int t = peak + 1; t < r; ++t) {
      int v = sign * s_[t];
      if (v < 0) down[cur] = t;
      cur += v;
    }
    Glider g;
    g.A.reserve(top);
    g.B.reserve(top);
    for (int i = 0; i < top; ++i) g.A.push_back(base_ + up[i]);
    for (int j = top; j >= 1; --j) g.B.push_back(base_ + down[j]);
    g.inverted = sign < 0;
    g.parent = parent;
    g.in_dent = in_dent;
    g.free = (parent < 0 || out_[parent].free) && !in_dent;
    int me = static_cast<int>(out_.size());
    out_.push_back(std::move(g));
    for (int i = 1; i < top; ++i) {
      if (up[i - 1] + 1 < up[i]) factors(up[i - 1] + 1, up[i], sign, me, false);
    }
    int prev = up[top - 1];
    for (int j = top; j >= 1; --j) {
      if (prev + 1 < down[j]) factors(prev + 1, down[j], -sign, me, true);
      prev = down[j];
    }
  }

  const std::vector<int8_t>& s_;
  int64_t base_;
  std::vector<Glider> out_;
};

}  // namespace

std::vector<int> MotzkinPath::heights_from_anchor() const {
  std::vector<int> h(n);
  int cur = 0;
  for (int t = 1; t <= n; ++t) {
    cur += at(base_anchor + t);
    h[t - 1] = cur;
  }
  return h;
}

MotzkinPath to_motzkin(const CyclicBitstring& x) {
  if (2 * x.k() >= x.n()) throw ParameterError("to_motzkin needs n >= 2k+1");
  int n = x.n();
  std::vector<uint8_t> bits = x.bits();
  std::vector<int32_t> partner(n), scratch(n);
  MotzkinPath path;
  path.n = n;
  path.base_anchor = raw::match(bits.data(), n, partner.data(), scratch.data());
  path.steps.resize(n);
  for (int i = 0; i < n; ++i) {
    path.steps[i] = partner[i] < 0 ? 0 : (bits[i] ? 1 : -1);
  }
  return path;
}

HillDecomposition decompose_hill(std::span<const uint8_t> y) {
  int len = static_cast<int>(y.size());
  if (len < 2 || len % 2) throw ContractError("decompose_hill: not a hill");
  int h = 0;
  for (int t = 0; t < len; ++t) {
    h += y[t] ? 1 : -1;
    if (h < 0 || (h == 0 && t + 1 < len)) {
      throw ContractError("decompose_hill: proper prefixes must be positive");
    }
  }
  if (h != 0) throw ContractError("decompose_hill: unbalanced word");

  HillDecomposition d;
  int top = 0;
  h = 0;
  for (int t = 0; t < len; ++t) {
    h += y[t] ? 1 : -1;
    if (h > top) {
      top = h;
      d.peak = t;
    }
  }
  d.height = top;
  std::vector<int> up(top, -1), down(top + 1, -1);
  int cur = top;
  for (int t = d.peak; t >= 0; --t) {
    int v = y[t] ? 1 : -1;
    int before = cur - v;
    if (v > 0 && up[before] < 0) up[before] = t;
    cur = before;
  }
  cur = top;
  for (int t = d.peak + 1; t < len; ++t) {
    int v = y[t] ? 1 : -1;
    if (v < 0) down[cur] = t;
    cur += v;
  }
  d.ones = up;
  for (int j = top; j >= 1; --j) d.zeros.push_back(down[j]);
  for (int i = 1; i + 1 < top; ++i) d.bulges.emplace_back(up[i - 1] + 1, up[i]);
  int prev = up[top - 1];
  for (int j = top; j >= 2; --j) {
    d.dents.emplace_back(prev + 1, down[j]);
    prev = down[j];
  }
  return d;
}

Glider normalized(Glider g, int n) {
  int64_t shift = floor_div(g.A.front(), n) * n;
  if (shift != 0) {
    for (auto& a : g.A) a -= shift;
    for (auto& b : g.B) b -= shift;
    g.window_offset += shift;
  }
  return g;
}

GliderPartition glider_partition(const CyclicBitstring& x) {
  MotzkinPath path = to_motzkin(x);
  int n = path.n;
  GliderPartition part;
  part.n = n;
  part.k = x.k();
  part.steps = path.steps;
  part.anchor = path.base_anchor;

  std::vector<int8_t> window(n - 1);
  for (int t = 0; t < n - 1; ++t) window[t] = path.at(part.anchor + 1 + t);
  GliderBuilder builder(window, part.anchor + 1);
  int t = 0;
  while (t < n - 1) {
    if (window[t] == 0) {
      ++t;
      continue;
    }
    int e = t;
    while (e < n - 1 && window[e] != 0) ++e;
    builder.factors(t, e, 1, -1, false);
    t = e;
  }
  std::vector<Glider> raw = builder.take();
  for (auto& g : raw) {
    int64_t shift = floor_div(g.A.front(), n) * n;
    for (auto& a : g.A) a -= shift;
    for (auto& b : g.B) b -= shift;
    g.window_offset = shift;
  }
  std::vector<int> order(raw.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return raw[a].s0() < raw[b].s0(); });
  std::vector<int> where(raw.size());
  for (size_t i = 0; i < order.size(); ++i) where[order[i]] = static_cast<int>(i);
  part.gliders.reserve(raw.size());
  for (int o : order) {
    Glider g = std::move(raw[o]);
    if (g.parent >= 0) g.parent = where[g.parent];
    part.gliders.push_back(std::move(g));
  }
  part.children.assign(part.gliders.size(), {});
  part.owner.assign(n, -1);
  for (size_t i = 0; i < part.gliders.size(); ++i) {
    const Glider& g = part.gliders[i];
    if (g.parent >= 0) part.children[g.parent].push_back(static_cast<int>(i));
    for (int64_t a : g.A) part.owner[a % n] = static_cast<int>(i);
    for (int64_t b : g.B) part.owner[((b % n) + n) % n] = static_cast<int>(i);
  }
  return part;
}

bool GliderPartition::is_ancestor(int i, int j) const {
  for (int c = gliders[j].parent; c >= 0; c = gliders[c].parent) {
    if (c == i) return true;
  }
  return false;
}

bool GliderPartition::traps(int i, int j) const {
  int c = j;
  while (gliders[c].parent >= 0) {
    if (gliders[c].parent == i) return gliders[c].in_dent;
    c = gliders[c].parent;
  }
  return false;
}

std::vector<int> GliderPartition::trappers(int j) const {
  std::vector<int> out;
  bool trapped_below = false;
  for (int c = j; gliders[c].parent >= 0; c = gliders[c].parent) {
    trapped_below = gliders[c].in_dent;
    if (trapped_below) out.push_back(gliders[c].parent);
  }
  return out;
}

int GliderPartition::find(const Glider& g) const {
  Glider h = normalized(g, n);
  for (size_t i = 0; i < gliders.size(); ++i) {
    if (gliders[i].same_steps(h)) return static_cast<int>(i);
  }
  return -1;
}

int SpeedMultiset::sum() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

std::string SpeedMultiset::str() const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
  os << ')';
  return os.str();
}

SpeedMultiset speed_multiset(const GliderPartition& partition) {
  SpeedMultiset v;
  for (const auto& g : partition.gliders) v.parts.push_back(g.speed());
  std::sort(v.parts.rbegin(), v.parts.rend());
  return v;
}

SpeedMultiset speed_multiset(const CyclicBitstring& x) {
  return speed_multiset(glider_partition(x));
}

void speed_multiset_direct_raw(const uint8_t* bits, const int32_t* partner,
                               int anchor, int n, std::vector<int>& out) {
  out.clear();
  // One frame per open pair: the multiset W of what is nested inside it.
  thread_local std::vector<std::vector<int>> frames;
  size_t depth = 0;
  for (int t = 1; t < n; ++t) {
    int i = anchor + t;
    if (i >= n) i -= n;
    if (partner[i] < 0) continue;
    if (bits[i]) {
      if (frames.size() <= depth) frames.emplace_back();
      frames[depth++].clear();
    } else {
      std::vector<int>& inner = frames[--depth];
      if (inner.empty()) {
        inner.push_back(1);
      } else {
        ++*std::max_element(inner.begin(), inner.end());
      }
      std::vector<int>& dest = depth ? frames[depth - 1] : out;
      dest.insert(dest.end(), inner.begin(), inner.end());
    }
  }
  std::sort(out.rbegin(), out.rend());
}

SpeedMultiset speed_multiset_direct(const CyclicBitstring& x) {
  if (2 * x.k() >= x.n()) throw ParameterError("speed multiset needs n >= 2k+1");
  int n = x.n();
  std::vector<uint8_t> bits = x.bits();
  std::vector<int32_t> partner(n), scratch(n);
  int anchor = raw::match(bits.data(), n, partner.data(), scratch.data());
  SpeedMultiset v;
  speed_multiset_direct_raw(bits.data(), partner.data(), anchor, n, v.parts);
  return v;
}

bool next_partition(std::vector<int>& p) {
  int m = static_cast<int>(p.size());
  for (int i = m - 2; i >= 0; --i) {
    if (i == 0 || p[i] + 1 <= p[i - 1]) {
      int rest = std::accumulate(p.begin() + i + 1, p.end(), 0) - 1;
      ++p[i];
      p.resize(i + 1);
      p.insert(p.end(), rest, 1);
      return true;
    }
  }
  return false;
}

bool prev_partition(std::vector<int>& p) {
  int m = static_cast<int>(p.size());
  for (int i = m - 1; i >= 0; --i) {
    if (p[i] >= 2) {
      int rest = std::accumulate(p.begin() + i + 1, p.end(), 0) + 1;
      int cap = --p[i];
      p.resize(i + 1);
      while (rest > 0) {
        int part = std::min(cap, rest);
        p.push_back(part);
        rest -= part;
      }
      return true;
    }
  }
  return false;
}

std::vector<std::vector<int>> partitions_lex(int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> p(k, 1);
  do {
    out.push_back(p);
  } while (next_partition(p));
  return out;
}

std::string TrainComposition::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, sizes] : z) {
    if (!first) os << ' ';
    first = false;
    os << v << '^' << '(';
    for (size_t i = 0; i < sizes.size(); ++i) os << (i ? "," : "") << sizes[i];
    os << ')';
  }
  return os.str();
}

std::vector<int> least_rotation(const std::vector<int>& seq) {
  std::vector<int> best = seq;
  std::vector<int> cur = seq;
  for (size_t r = 1; r < seq.size(); ++r) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return best;
}

namespace {

std::map<int, std::vector<int>> by_speed_in_window(const GliderPartition& p) {
  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < p.glider_count(); ++i) groups[p.gliders[i].speed()].push_back(i);
  for (auto& [v, ids] : groups) {
    std::sort(ids.begin(), ids.end(), [&](int a, int b) {
      return p.gliders[a].s0() + p.gliders[a].window_offset <
             p.gliders[b].s0() + p.gliders[b].window_offset;
    });
  }
  return groups;
}

bool gap_is_slower(const GliderPartition& p, int a, int b, int v) {
  int64_t from = p.gliders[a].range_end() + p.gliders[a].window_offset + 1;
  int64_t to = p.gliders[b].range_begin() + p.gliders[b].window_offset;
  if (to < from) return false;
  for (int64_t i = from; i < to; ++i) {
    int o = p.owner[((i % p.n) + p.n) % p.n];
    if (o < 0 || p.gliders[o].speed() >= v) return false;
  }
  return true;
}

}  // namespace

bool coupled(const GliderPartition& partition, int a, int b) {
  int v = partition.gliders[a].speed();
  if (partition.gliders[b].speed() != v) return false;
  auto groups = by_speed_in_window(partition);
  const auto& ids = groups[v];
  auto it = std::find(ids.begin(), ids.end(), a);
  if (it == ids.end() || it + 1 == ids.end() || *(it + 1) != b) return false;
  return gap_is_slower(partition, a, b, v);
}

std::map<int, std::vector<std::vector<int>>> trains(const GliderPartition& partition) {
  std::map<int, std::vector<std::vector<int>>> out;
  for (const auto& [v, ids] : by_speed_in_window(partition)) {
    auto& list = out[v];
    for (size_t i = 0; i < ids.size(); ++i) {
      if (i > 0 && gap_is_slower(partition, ids[i - 1], ids[i], v)) {
        list.back().push_back(ids[i]);
      } else {
        list.push_back({ids[i]});
      }
    }
  }
  return out;
}

TrainComposition train_composition(const GliderPartition& partition) {
  TrainComposition tc;
  for (const auto& [v, list] : trains(partition)) {
    std::vector<int> sizes;
    for (const auto& t : list) sizes.push_back(static_cast<int>(t.size()));
    tc.z[v] = least_rotation(sizes);
  }
  return tc;
}

TrainComposition train_composition(const CyclicBitstring& x) {
  return train_composition(glider_partition(x));
}

GliderFlags classify_glider(const GliderPartition& partition, int index) {
  const Glider& g = partition.gliders[index];
  GliderFlags f;
  f.clean = g.range_end() - g.range_begin() + 1 == 2 * g.speed();
  int n = partition.n;
  f.open = partition.steps[((g.s2() + 1) % n + n) % n] == 0;
  f.free = g.free;
  f.inverted = g.inverted;
  return f;
}

std::string render_gliders(const GliderPartition& partition) {
  std::string s(partition.n, '-');
  for (int i = 0; i < partition.n; ++i) {
    int o = partition.owner[i];
    if (o < 0) continue;
    char letter = static_cast<char>('A' + o % 26);
    s[i] = partition.steps[i] > 0 ? letter : static_cast<char>(letter - 'A' + 'a');
  }
  return s;
}

}  // namespace kneser
