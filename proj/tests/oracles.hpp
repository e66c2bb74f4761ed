#pragma once

// Brute-force reference implementations used only by the tests.

#include <algorithm>
#include <functional>
#include <vector>

#include "kneser/bitstring.hpp"

namespace oracle {

inline std::vector<kneser::CyclicBitstring> all_vertices(int n, int k) {
  std::vector<kneser::CyclicBitstring> out;
  std::vector<int> pos(k);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == k) {
      out.emplace_back(n, pos);
      return;
    }
    for (int i = start; i <= n - (k - depth); ++i) {
      pos[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return out;
}

// Repeatedly pairs a 1 with the next still-unpaired position when that
// position holds a 0.  Quadratic, but obviously cyclic.
inline std::vector<int> naive_partner(const kneser::CyclicBitstring& x) {
  int n = x.n();
  std::vector<int> partner(n, -1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      if (!x[i] || partner[i] >= 0) continue;
      int j = (i + 1) % n;
      while (j != i && partner[j] >= 0) j = (j + 1) % n;
      if (j != i && !x[j]) {
        partner[i] = j;
        partner[j] = i;
        changed = true;
      }
    }
  }
  return partner;
}

inline kneser::CyclicBitstring naive_f(const kneser::CyclicBitstring& x) {
  std::vector<int> partner = naive_partner(x);
  std::vector<int> ones;
  for (int i = 0; i < x.n(); ++i) {
    bool b = x[i];
    if (partner[i] >= 0) b = !b;
    if (b) ones.push_back(i);
  }
  return kneser::CyclicBitstring(x.n(), ones);
}

// Speeds from the nesting forest of matched pairs: split the forest into
// longest downward paths and report their lengths.
inline std::vector<int> staircase(const kneser::CyclicBitstring& x) {
  int n = x.n();
  std::vector<int> partner = naive_partner(x);
  int start = 0;
  while (partner[start] >= 0) ++start;
  // Walk one period from the unmatched position and build the forest.
  std::vector<int> parent, height;
  std::vector<std::vector<int>> kids;
  std::vector<int> stack;
  std::vector<int> roots;
  for (int t = 1; t < n; ++t) {
    int i = (start + t) % n;
    if (partner[i] < 0) continue;
    if (x[i]) {
      int id = static_cast<int>(parent.size());
      parent.push_back(stack.empty() ? -1 : stack.back());
      kids.emplace_back();
      height.push_back(0);
      if (stack.empty()) {
        roots.push_back(id);
      } else {
        kids[stack.back()].push_back(id);
      }
      stack.push_back(id);
    } else {
      int id = stack.back();
      stack.pop_back();
      int h = 0;
      for (int c : kids[id]) h = std::max(h, height[c]);
      height[id] = h + 1;
    }
  }
  std::vector<int> out;
  for (int r : roots) out.push_back(height[r]);
  for (size_t id = 0; id < kids.size(); ++id) {
    const auto& c = kids[id];
    if (c.empty()) continue;
    auto tallest = std::max_element(c.begin(), c.end(),
                                    [&](int a, int b) { return height[a] < height[b]; });
    for (int child : c) {
      if (child != *tallest) out.push_back(height[child]);
    }
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

inline long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace oracle
