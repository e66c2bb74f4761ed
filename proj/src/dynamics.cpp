#include "kneser/dynamics.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace kneser {

namespace {

int64_t mod(int64_t a, int64_t n) {
  int64_t r = a % n;
  return r < 0 ? r + n : r;
}

int64_t floor_div(int64_t a, int64_t b) {
  int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int64_t ceil_div(int64_t a, int64_t b) { return -floor_div(-a, b); }

int8_t step_at(const GliderPartition& p, int64_t i) {
  return p.steps[mod(i, p.n)];
}

int64_t reach_end(const GliderPartition& p, const Glider& g) {
  int64_t sum = 0;
  int v = g.speed();
  for (int64_t b = g.s2() + 1;; ++b) {
    sum += step_at(p, b) < 0 ? -1 : 1;
    if (sum == v) return b;
  }
}

}  // namespace

bool CaptureAnalysis::is_mover(int glider) const {
  return std::binary_search(movers.begin(), movers.end(), glider);
}

CaptureAnalysis capture_analysis(const GliderPartition& p) {
  CaptureAnalysis ca;
  int n = p.n;
  ca.info_of.assign(p.glider_count(), -1);
  for (int i = 0; i < p.glider_count(); ++i) {
    if (!p.gliders[i].free) continue;
    ca.info_of[i] = static_cast<int>(ca.free_gliders.size());
    ca.free_gliders.push_back(i);
    CaptureInfo info;
    info.glider = i;
    info.reach_end = reach_end(p, p.gliders[i]);
    info.interval_begin = p.gliders[i].s1() + 1;
    info.interval_end = info.reach_end;
    ca.info.push_back(std::move(info));
  }

  std::vector<bool> captured_somewhere(p.glider_count(), false);
  for (auto& info : ca.info) {
    const Glider& g = p.gliders[info.glider];
    for (const auto& other : ca.info) {
      if (other.glider == info.glider) continue;
      const Glider& h = p.gliders[other.glider];
      // copy m of h is captured when s1(g) < s1(h) + mn and s+(g) > s+(h) + mn
      int64_t lo = floor_div(g.s1() - h.s1(), n) + 1;
      int64_t hi = ceil_div(info.reach_end - other.reach_end, n) - 1;
      for (int64_t m = lo; m <= hi; ++m) {
        info.captured.push_back({other.glider, m});
        captured_somewhere[other.glider] = true;
      }
    }
    std::sort(info.captured.begin(), info.captured.end(),
              [&](const GliderCopy& a, const GliderCopy& b) {
                return p.gliders[a.glider].s0() + a.shift * n <
                       p.gliders[b.glider].s0() + b.shift * n;
              });

    int64_t from = g.s2() + 1;
    std::vector<bool> covered(info.reach_end - from + 1, false);
    for (const auto& c : info.captured) {
      const Glider& h = p.gliders[c.glider];
      int64_t a = std::max(from, h.s0() + c.shift * n);
      int64_t b = std::min(info.reach_end, h.s2() + c.shift * n);
      for (int64_t t = a; t <= b; ++t) covered[t - from] = true;
    }
    for (int64_t t = from; t <= info.reach_end; ++t) {
      if (!covered[t - from]) info.gap.push_back(t);
    }
    if (static_cast<int>(info.gap.size()) != g.speed()) {
      throw InternalError("gap size differs from the speed");
    }
    info.strata.assign(g.speed() + 1, {});
    for (const auto& c : info.captured) {
      int64_t left = p.gliders[c.glider].s0() + c.shift * n;
      auto i = std::lower_bound(info.gap.begin(), info.gap.end(), left) - info.gap.begin();
      info.strata[i].push_back(c);
    }
  }
  for (int i : ca.free_gliders) {
    if (!captured_somewhere[i]) ca.movers.push_back(i);
  }
  return ca;
}

CaptureAnalysis capture_analysis(const CyclicBitstring& x) {
  return capture_analysis(glider_partition(x));
}

StepResult advance(const CyclicBitstring& x) {
  StepResult r;
  r.before = glider_partition(x);
  r.capture = capture_analysis(r.before);
  const GliderPartition& p = r.before;
  int n = p.n;

  std::vector<int8_t> phi(n, 0);
  std::vector<bool> assigned(n, false);
  for (int c : r.capture.movers) {
    const CaptureInfo& info = r.capture.of(c);
    for (int64_t i = info.interval_begin; i <= info.interval_end; ++i) {
      int64_t j = mod(i, n);
      if (assigned[j]) throw InternalError("mover intervals overlap");
      assigned[j] = true;
      phi[j] = p.steps[j] < 0 ? 1 : -1;
    }
  }

  r.next = apply_f(x);
  r.after = glider_partition(r.next);
  if (phi != r.after.steps) {
    throw InternalError("interval rewrite of " + x.str() + " differs from f(x)");
  }

  r.image.assign(p.glider_count(), -1);
  r.image_shift.assign(p.glider_count(), 0);
  r.moved.assign(p.glider_count(), false);
  std::vector<bool> hit(r.after.glider_count(), false);
  if (r.after.glider_count() != p.glider_count()) throw InternalError("glider count changed");
  for (int c = 0; c < p.glider_count(); ++c) {
    Glider g;
    if (r.capture.is_mover(c)) {
      g.A = p.gliders[c].B;
      g.B = r.capture.of(c).gap;
      r.moved[c] = true;
    } else {
      g.A = p.gliders[c].A;
      g.B = p.gliders[c].B;
    }
    int idx = r.after.find(g);
    if (idx < 0 || hit[idx]) {
      throw InternalError("glider image of class " + std::to_string(c) + " in " +
                          x.str() + " not found in f(x)");
    }
    hit[idx] = true;
    if (r.after.gliders[idx].speed() != p.gliders[c].speed()) {
      throw InternalError("glider image changed speed");
    }
    r.image[c] = idx;
    r.image_shift[c] = (g.A.front() - r.after.gliders[idx].A.front()) / n;
  }
  return r;
}

int64_t MotionTrace::predicted_pos2(int t, int c) const {
  int64_t val = pos2[0][c] + 2LL * speeds[c] * t;
  for (int j = 0; j < glider_count; ++j) {
    val += 2LL * speeds[j] * counter2(t, j, c);
    val -= 2LL * speeds[c] * counter2(t, c, j);
  }
  return val;
}

namespace {

// trapped[a * glider_count + b] holds the copy offset of class b trapped by the
// tracked instance of class a, or no value.
std::vector<std::optional<int64_t>> trap_state(const GliderPartition& part,
                                               const std::vector<int>& cls,
                                               const std::vector<int64_t>& shift) {
  int glider_count = static_cast<int>(cls.size());
  int n = part.n;
  std::vector<int> original(glider_count);
  for (int c = 0; c < glider_count; ++c) original[cls[c]] = c;
  std::vector<std::optional<int64_t>> st(static_cast<size_t>(glider_count) * glider_count);
  for (int b = 0; b < glider_count; ++b) {
    int cb = cls[b];
    for (int ca : part.trappers(cb)) {
      int a = original[ca];
      int64_t d = part.relative_shift(ca, cb) / n + shift[a] - shift[b];
      st[static_cast<size_t>(a) * glider_count + b] = d;
    }
  }
  return st;
}

}  // namespace

MotionTrace motion_trace(const CyclicBitstring& x, int t_max) {
  if (t_max < 1) throw ContractError("motion_trace needs t_max >= 1");
  MotionTrace tr;
  GliderPartition part = glider_partition(x);
  int glider_count = part.glider_count();
  int n = part.n;
  tr.n = n;
  tr.glider_count = glider_count;
  for (const auto& g : part.gliders) tr.speeds.push_back(g.speed());

  std::vector<int> cls(glider_count);
  std::vector<int64_t> shift(glider_count, 0);
  for (int c = 0; c < glider_count; ++c) cls[c] = c;
  auto record = [&](const GliderPartition& pt) {
    std::vector<int64_t> pos(glider_count);
    for (int c = 0; c < glider_count; ++c) {
      pos[c] = pt.gliders[cls[c]].position2() + 2 * shift[c] * n;
    }
    tr.pos2.push_back(std::move(pos));
    tr.classes.push_back(cls);
  };

  tr.states.push_back(x);
  record(part);
  tr.counters2.emplace_back(static_cast<size_t>(glider_count) * glider_count, 0);
  auto traps = trap_state(part, cls, shift);

  CyclicBitstring cur = x;
  for (int t = 1; t <= t_max; ++t) {
    StepResult step = advance(cur);
    tr.moved_last.assign(glider_count, false);
    for (int c = 0; c < glider_count; ++c) {
      int k = cls[c];
      tr.moved_last[c] = step.moved[k];
      shift[c] += step.image_shift[k];
      cls[c] = step.image[k];
    }
    cur = step.next;
    tr.states.push_back(cur);
    record(step.after);
    auto next_traps = trap_state(step.after, cls, shift);
    std::vector<int64_t> counters = tr.counters2.back();
    for (int a = 0; a < glider_count; ++a) {
      for (int b = 0; b < glider_count; ++b) {
        size_t idx = static_cast<size_t>(a) * glider_count + b;
        // entry a*glider_count+b is "b trapped by a"; counters are stored as trapped*glider_count+trapper
        if (traps[idx] != next_traps[idx]) ++counters[static_cast<size_t>(b) * glider_count + a];
      }
    }
    tr.counters2.push_back(std::move(counters));
    traps = std::move(next_traps);
    for (int c = 0; c < glider_count; ++c) {
      if (tr.predicted_pos2(t, c) != tr.pos2[t][c]) {
        throw InternalError("equation of motion fails for " + x.str() + " at t=" +
                            std::to_string(t));
      }
    }
  }
  return tr;
}

std::optional<int> full_period(const CyclicBitstring& x, int limit) {
  GliderPartition part = glider_partition(x);
  int glider_count = part.glider_count();
  std::vector<int> cls(glider_count);
  for (int c = 0; c < glider_count; ++c) cls[c] = c;
  CyclicBitstring cur = x;
  for (int t = 1; t <= limit; ++t) {
    StepResult step = advance(cur);
    for (int c = 0; c < glider_count; ++c) cls[c] = step.image[cls[c]];
    cur = step.next;
    if (cur == x) {
      bool home = true;
      for (int c = 0; c < glider_count; ++c) home = home && cls[c] == c;
      if (home) return t;
    }
  }
  return std::nullopt;
}

MotionMatrix motion_matrix(const SpeedMultiset& speeds, int n) {
  MotionMatrix mm;
  mm.n = n;
  mm.v.assign(speeds.parts.rbegin(), speeds.parts.rend());
  int glider_count = static_cast<int>(mm.v.size());
  if (glider_count < 1) throw ContractError("motion_matrix needs at least one speed");
  mm.row_sums.assign(glider_count, 0);
  for (int i = 1; i < glider_count; ++i) {
    for (int j = 0; j < glider_count; ++j) mm.row_sums[i] += 2LL * mm.v[std::min(i, j)];
  }
  mm.m.assign(glider_count, std::vector<int64_t>(glider_count, 0));
  for (int i = 0; i < glider_count; ++i) {
    mm.m[i][0] = mm.v[i];
    for (int j = 1; j < glider_count; ++j) {
      mm.m[i][j] = i == j ? mm.row_sums[i] - 2LL * mm.v[i] - n
                          : -2LL * mm.v[std::min(i, j)];
    }
  }
  return mm;
}

BigInt determinant(const std::vector<std::vector<int64_t>>& matrix) {
  int size = static_cast<int>(matrix.size());
  if (size == 0) return 1;
  std::vector<std::vector<BigInt>> a(size, std::vector<BigInt>(size));
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) a[i][j] = matrix[i][j];
  }
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < size; ++k) {
    if (a[k][k] == 0) {
      int swap_with = -1;
      for (int i = k + 1; i < size; ++i) {
        if (a[i][k] != 0) {
          swap_with = i;
          break;
        }
      }
      if (swap_with < 0) return 0;
      std::swap(a[k], a[swap_with]);
      sign = -sign;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[size - 1][size - 1];
}

BigInt determinant_closed_form(const MotionMatrix& mm) {
  int glider_count = static_cast<int>(mm.v.size());
  BigInt d = mm.v[0];
  for (int i = 1; i < glider_count; ++i) d *= BigInt(mm.n - mm.row_sums[i]);
  if ((glider_count - 1) % 2) d = -d;
  return d;
}

bool is_slow_train_end(const GliderPartition& partition, int glider) {
  int vmin = partition.gliders[0].speed();
  for (const auto& g : partition.gliders) vmin = std::min(vmin, g.speed());
  if (partition.gliders[glider].speed() != vmin) return false;
  auto all = trains(partition);
  for (const auto& train : all.at(vmin)) {
    if (train.back() == glider) return true;
  }
  return false;
}

std::vector<int> slow_train_ends(const GliderPartition& partition) {
  std::vector<int> out;
  if (partition.glider_count() == 0) return out;
  int vmin = partition.gliders[0].speed();
  for (const auto& g : partition.gliders) vmin = std::min(vmin, g.speed());
  auto all = trains(partition);
  for (const auto& train : all.at(vmin)) out.push_back(train.back());
  std::sort(out.begin(), out.end());
  return out;
}

CyclicBitstring shift_slow_glider(const CyclicBitstring& x, int glider) {
  GliderPartition part = glider_partition(x);
  if (glider < 0 || glider >= part.glider_count() || !is_slow_train_end(part, glider)) {
    throw ContractError("shift_slow_glider needs the last glider of a slowest train");
  }
  StepResult back = advance(apply_f_inverse(x));
  int pre = -1;
  for (int c = 0; c < back.before.glider_count(); ++c) {
    if (back.image[c] == glider) pre = c;
  }
  if (pre < 0) throw InternalError("glider has no preimage");
  const Glider& g = back.before.gliders[pre];
  int n = x.n();
  int a = static_cast<int>(mod(g.s1() + 1, n));
  int b = static_cast<int>(mod(g.s2() + 1, n));
  CyclicBitstring y = x.with_bit(a, x[b]);
  return y.with_bit(b, x[a]);
}

namespace {

struct Tracked {
  int glider;
  int64_t start;  // range start modulo n
};

Tracked locate_tracked(const GliderPartition& part, int64_t probe) {
  int c = part.owner[mod(probe, part.n)];
  if (c < 0) throw InternalError("tracked glider vanished");
  const Glider& g = part.gliders[c];
  if (g.range_end() - g.range_begin() + 1 != 2 * g.speed()) {
    throw InternalError("tracked slow glider is not clean");
  }
  return {c, mod(g.s0(), part.n)};
}

bool covers(int64_t start, int len, int p, int n) {
  return mod(p - start, n) < len;
}

}  // namespace

SearchResult first_arrival(const CyclicBitstring& x, int glider, int bit, int p) {
  int n = x.n();
  if (p < 0 || p >= n || (bit != 0 && bit != 1)) throw ContractError("bad first_arrival target");
  GliderPartition part = glider_partition(x);
  if (glider < 0 || glider >= part.glider_count() || !is_slow_train_end(part, glider)) {
    throw ContractError("first_arrival needs the last glider of a slowest train");
  }
  int v = part.gliders[glider].speed();
  Tracked tr{glider, mod(part.gliders[glider].s0(), n)};
  int64_t start = tr.start;
  uint64_t cap = binomial(n, x.k());
  cap = cap > UINT64_MAX / static_cast<uint64_t>(n) ? UINT64_MAX : cap * n;

  CyclicBitstring cur = x;
  std::vector<uint8_t> bits = x.bits(), out(n);
  std::vector<int32_t> partner(n), scratch(n);
  for (uint64_t t = 0;; ++t) {
    GliderFlags flags = classify_glider(part, tr.glider);
    if (flags.open && !flags.inverted &&
        covers(tr.start + (bit ? 0 : v), v, p, n)) {
      return {cur, static_cast<int64_t>(t)};
    }
    if (t >= cap || (t > 0 && cur == x && tr.start == start)) {
      throw InternalError("first_arrival did not reach its target from " + x.str());
    }
    raw::apply_f(bits.data(), n, out.data(), partner.data(), scratch.data());
    std::swap(bits, out);
    cur = CyclicBitstring::from_bits(bits);
    part = glider_partition(cur);
    Tracked next = locate_tracked(part, tr.start + v);
    if (next.start != tr.start && next.start != mod(tr.start + v, n)) {
      throw InternalError("tracked slow glider jumped");
    }
    tr = next;
  }
}

SearchResult first_arrival_at(const CyclicBitstring& x, int q, int bit, int p) {
  GliderPartition part = glider_partition(x);
  int c = part.owner[mod(q, x.n())];
  if (c < 0) throw ContractError("first_arrival_at needs a matched position");
  return first_arrival(x, c, bit, p);
}

std::string render_trace(const MotionTrace& trace) {
  std::ostringstream os;
  for (int t = 0; t <= trace.steps(); ++t) {
    GliderPartition part = glider_partition(trace.states[t]);
    // letters follow the classes of the start vertex
    std::string s(trace.n, '-');
    for (int c = 0; c < trace.glider_count; ++c) {
      const Glider& g = part.gliders[trace.classes[t][c]];
      char letter = static_cast<char>('A' + c % 26);
      for (auto a : g.A) {
        int64_t i = mod(a, trace.n);
        s[i] = part.steps[i] > 0 ? letter : static_cast<char>(letter - 'A' + 'a');
      }
      for (auto b : g.B) {
        int64_t i = mod(b, trace.n);
        s[i] = part.steps[i] > 0 ? letter : static_cast<char>(letter - 'A' + 'a');
      }
    }
    os << t << '\t' << annotate(trace.states[t]) << '\t' << s;
    for (int c = 0; c < trace.glider_count; ++c) os << (c ? ' ' : '\t') << trace.pos2[t][c];
    os << '\n';
  }
  return os.str();
}

std::string render_trace_svg(const MotionTrace& trace) {
  static const char* palette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                  "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
                                  "#bcbd22", "#17becf"};
  const int cell = 12;
  int width = trace.n * cell, height = (trace.steps() + 1) * cell;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
     << "\" height=\"" << height << "\">\n";
  for (int t = 0; t <= trace.steps(); ++t) {
    GliderPartition part = glider_partition(trace.states[t]);
    std::vector<int> cls_of(part.glider_count());
    for (int c = 0; c < trace.glider_count; ++c) cls_of[trace.classes[t][c]] = c;
    for (int i = 0; i < trace.n; ++i) {
      int o = part.owner[i];
      int x0 = i * cell, y0 = t * cell;
      if (o < 0) {
        os << "<rect x=\"" << x0 << "\" y=\"" << y0 << "\" width=\"" << cell
           << "\" height=\"" << cell << "\" fill=\"white\" stroke=\"#ddd\"/>\n";
        continue;
      }
      const char* color = palette[cls_of[o] % 10];
      bool one = trace.states[t][i];
      os << "<rect x=\"" << x0 << "\" y=\"" << y0 << "\" width=\"" << cell
         << "\" height=\"" << cell << "\" fill=\"" << color << "\" fill-opacity=\""
         << (one ? "1" : "0.3") << "\" stroke=\"#ddd\"/>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace kneser
