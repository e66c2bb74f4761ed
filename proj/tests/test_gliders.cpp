#include "doctest.h"

#include <functional>
#include <set>

#include "kneser/gliders.hpp"
#include "oracles.hpp"

using namespace kneser;

namespace {

std::vector<std::vector<uint8_t>> hills_up_to(int max_len) {
  // all words with strictly positive proper prefixes, built as 1 (Dyck) 0
  std::vector<std::vector<uint8_t>> out;
  std::vector<uint8_t> w;
  std::function<void(int, int)> rec = [&](int h, int len) {
    if (len > 0 && h == 0) {
      out.push_back(w);
      return;
    }
    if (len == max_len) return;
    if (len > 0 && h == 1 && len + 1 <= max_len) {
      w.push_back(0);
      rec(0, len + 1);
      w.pop_back();
    }
    if (h + len + 1 < max_len) {
      w.push_back(1);
      rec(h + 1, len + 1);
      w.pop_back();
    }
    if (h > 1) {
      w.push_back(0);
      rec(h - 1, len + 1);
      w.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

}  // namespace

TEST_CASE("Motzkin path of small strings") {
  auto p = to_motzkin(CyclicBitstring::parse("11000"));
  CHECK(p.steps == std::vector<int8_t>{1, 1, -1, -1, 0});
  auto q = to_motzkin(CyclicBitstring::parse("001100001"));
  std::vector<int> flats;
  for (int i = 0; i < 9; ++i) {
    if (q.steps[i] == 0) flats.push_back(i);
  }
  CHECK(flats == std::vector<int>{1, 6, 7});
  for (int f : flats) {
    // the walk is at height 0 just before every flat step
    int h = 0;
    for (int t = 1; t <= 9; ++t) {
      int i = (q.base_anchor + t) % 9;
      if (i == f) CHECK(h == 0);
      h += q.steps[i];
    }
  }
  for (const auto& x : oracle::all_vertices(7, 3)) {
    auto m = to_motzkin(x);
    auto h = m.heights_from_anchor();
    CHECK(h.back() == 0);
    for (int v : h) CHECK(v >= 0);
    for (int t = 0; t < 7; ++t) {
      int i = (m.base_anchor + 1 + t) % 7;
      if (m.steps[i] == 0) CHECK(h[t] == 0);
    }
  }
}

TEST_CASE("hill decomposition") {
  std::vector<uint8_t> y10{1, 0};
  auto d = decompose_hill(y10);
  CHECK(d.height == 1);
  CHECK(d.bulges.empty());
  CHECK(d.dents.empty());

  std::vector<uint8_t> y1100{1, 1, 0, 0};
  auto e = decompose_hill(y1100);
  CHECK(e.height == 2);
  CHECK(e.bulges.empty());
  REQUIRE(e.dents.size() == 1);
  CHECK(e.dents[0].first == e.dents[0].second);

  std::vector<uint8_t> bad{1, 0, 1, 0};
  CHECK_THROWS_AS(decompose_hill(bad), ContractError);

  int checked = 0;
  for (const auto& y : hills_up_to(20)) {
    auto h = decompose_hill(y);
    int top = h.height;
    REQUIRE(static_cast<int>(h.ones.size()) == top);
    REQUIRE(static_cast<int>(h.zeros.size()) == top);
    if (top >= 2) {
      REQUIRE(static_cast<int>(h.bulges.size()) == top - 2);
      REQUIRE(static_cast<int>(h.dents.size()) == top - 1);
    }
    // reassemble 1 u1 1 u2 ... 1 1 v0 0 v1 ... 0 0
    std::vector<uint8_t> r;
    for (int i = 0; i < top; ++i) {
      r.push_back(1);
      if (i + 2 < top) {
        auto [a, b] = h.bulges[i];
        r.insert(r.end(), y.begin() + a, y.begin() + b);
      }
    }
    for (int j = 0; j < top; ++j) {
      if (top >= 2 && j + 1 < top) {
        auto [a, b] = h.dents[j];
        r.insert(r.end(), y.begin() + a, y.begin() + b);
      }
      r.push_back(0);
    }
    CHECK(r == y);
    // bulge u_i is a Dyck word of height at most h-1-i
    for (int i = 1; i + 1 < top; ++i) {
      auto [a, b] = h.bulges[i - 1];
      int ht = 0, mx = 0;
      for (int t = a; t < b; ++t) {
        ht += y[t] ? 1 : -1;
        CHECK(ht >= 0);
        mx = std::max(mx, ht);
      }
      CHECK(ht == 0);
      CHECK(mx <= top - 1 - i);
    }
    // dent v_j read complemented is a Dyck word of height at most h-1-j
    for (int j = 0; j + 1 < top; ++j) {
      auto [a, b] = h.dents[j];
      int ht = 0, mx = 0;
      for (int t = a; t < b; ++t) {
        ht += y[t] ? -1 : 1;
        CHECK(ht >= 0);
        mx = std::max(mx, ht);
      }
      CHECK(ht == 0);
      CHECK(mx <= top - 1 - j);
    }
    ++checked;
  }
  CHECK(checked > 1000);
}

TEST_CASE("gliders of simple strings") {
  for (int k = 1; k <= 5; ++k) {
    std::string s = std::string(k, '1') + std::string(k + 2, '0');
    auto p = glider_partition(CyclicBitstring::parse(s));
    REQUIRE(p.glider_count() == 1);
    CHECK(p.gliders[0].speed() == k);
    CHECK_FALSE(p.gliders[0].inverted);
    auto flags = classify_glider(p, 0);
    CHECK(flags.open);
    CHECK(flags.clean);
    CHECK(train_composition(p).z == std::map<int, std::vector<int>>{{k, {1}}});
  }
  // three gliders of speeds 1, 2 and 3 meeting in one string
  auto q = glider_partition(CyclicBitstring::parse("1100111000-10-"));
  CHECK(speed_multiset(q).parts == std::vector<int>{3, 2, 1});
}

TEST_CASE("glider partition invariants over all small strings") {
  for (int n = 3; n <= 12; ++n) {
    for (int k = 1; 2 * k < n; ++k) {
      for (const auto& x : oracle::all_vertices(n, k)) {
        auto p = glider_partition(x);
        std::vector<int> count(n, 0);
        int sum = 0;
        for (int i = 0; i < p.glider_count(); ++i) {
          const Glider& g = p.gliders[i];
          REQUIRE(g.A.size() == g.B.size());
          CHECK(g.A.front() >= 0);
          CHECK(g.A.front() < n);
          CHECK(g.A.back() < g.B.front());
          int up = g.inverted ? -1 : 1;
          for (auto a : g.A) {
            CHECK(p.steps[((a % n) + n) % n] == up);
            ++count[((a % n) + n) % n];
          }
          for (auto b : g.B) {
            CHECK(p.steps[((b % n) + n) % n] == -up);
            ++count[((b % n) + n) % n];
          }
          sum += g.speed();
          if (g.parent >= 0) CHECK(p.gliders[g.parent].speed() > g.speed());
          // inverted exactly when trapped by an odd number of ancestors
          CHECK(g.inverted == (p.trappers(i).size() % 2 == 1));
          CHECK(g.free == p.trappers(i).empty());
          if (g.inverted) {
            CHECK(p.steps[((g.s2() + 1) % n + n) % n] == -1);
          }
          auto flags = classify_glider(p, i);
          if (flags.open) {
            CHECK(flags.free);
          }
          if (flags.free) {
            CHECK_FALSE(flags.inverted);
          }
        }
        for (int i = 0; i < n; ++i) CHECK(count[i] == (p.steps[i] != 0 ? 1 : 0));
        CHECK(sum == k);
        CHECK(p.glider_count() == descent_count(x));
        auto v = speed_multiset(p);
        int vmin = v.parts.back();
        for (int i = 0; i < p.glider_count(); ++i) {
          if (p.gliders[i].speed() == vmin) CHECK(classify_glider(p, i).clean);
        }
        // coupled gliders are trapped by the same ancestors
        for (const auto& [speed, list] : trains(p)) {
          for (const auto& train : list) {
            for (size_t t = 1; t < train.size(); ++t) {
              CHECK(coupled(p, train[t - 1], train[t]));
              auto a = p.trappers(train[t - 1]);
              auto b = p.trappers(train[t]);
              CHECK(std::set<int>(a.begin(), a.end()) == std::set<int>(b.begin(), b.end()));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("speed multiset computed three ways") {
  for (int n = 3; n <= 13; ++n) {
    for (int k = 1; 2 * k < n; ++k) {
      for (const auto& x : oracle::all_vertices(n, k)) {
        auto v = speed_multiset(x);
        auto w = speed_multiset_direct(x);
        REQUIRE(v == w);
        CHECK(v.parts == oracle::staircase(x));
        CHECK(v.glider_count() == descent_count(x));
        CHECK(v.sum() == k);
      }
    }
  }
  CHECK(speed_multiset_direct(CyclicBitstring::parse("1111000000")).parts ==
        std::vector<int>{4});
}

TEST_CASE("train compositions") {
  // speed-1 trains of sizes 1, 2, 3, one speed-2 train of two, one speed-3 glider
  std::string tail = "11001100-111000-";
  auto x = CyclicBitstring::parse("10-1010-101010-" + tail);
  auto y = CyclicBitstring::parse("1010-10-101010-" + tail);
  auto zx = train_composition(x);
  auto zy = train_composition(y);
  CHECK(zx.z.at(1) == least_rotation({1, 2, 3}));
  CHECK(zx.z.at(2) == std::vector<int>{2});
  CHECK(zx.z.at(3) == std::vector<int>{1});
  CHECK(zy.z.at(1) == least_rotation({2, 1, 3}));
  CHECK(zx.z.at(1) == least_rotation({2, 3, 1}));
  CHECK(zy.z.at(1) == least_rotation({3, 2, 1}));
  CHECK_FALSE(zx == zy);
}

TEST_CASE("V, Z and descents are constant along every factor cycle") {
  for (int n = 3; n <= 13; ++n) {
    for (int k = 1; 2 * k < n; ++k) {
      auto factor = CycleFactor::build(n, k);
      for (size_t c = 0; c < factor.cycle_count(); ++c) {
        Cycle cyc = factor.cycle(c);
        auto v0 = speed_multiset(cyc.vertices[0]);
        auto z0 = train_composition(cyc.vertices[0]);
        int d0 = descent_count(cyc.vertices[0]);
        for (const auto& y : cyc.vertices) {
          CHECK(speed_multiset_direct(y) == v0);
          CHECK(train_composition(y) == z0);
          CHECK(descent_count(y) == d0);
        }
      }
    }
  }
}

TEST_CASE("lexicographic order of partitions") {
  auto all = partitions_lex(6);
  CHECK(all.size() == 11);
  CHECK(all.front() == std::vector<int>(6, 1));
  CHECK(all.back() == std::vector<int>{6});
  for (size_t i = 1; i < all.size(); ++i) {
    CHECK(all[i - 1] < all[i]);
    auto p = all[i];
    REQUIRE(prev_partition(p));
    CHECK(p == all[i - 1]);
  }
  auto p = std::vector<int>{3, 1, 1};
  REQUIRE(next_partition(p));
  CHECK(p == std::vector<int>{3, 2});
}

TEST_CASE("rendering marks each class with its own letter") {
  auto p = glider_partition(CyclicBitstring::parse("1100010000"));
  CHECK(render_gliders(p) == "AAaa-Bb---");
}
