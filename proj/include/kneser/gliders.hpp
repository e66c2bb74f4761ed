#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "kneser/bitstring.hpp"

namespace kneser {

// Steps of the Motzkin path: +1 for a matched 1, -1 for a matched 0 and 0
// for an unmatched 0.
struct MotzkinPath {
  int n = 0;
  std::vector<int8_t> steps;
  int base_anchor = 0;  // an unmatched position; the path is at height 0 there

  // Index into the periodic extension.
  int8_t at(int64_t i) const {
    int64_t r = i % n;
    return steps[r < 0 ? r + n : r];
  }
  // Heights after each step, walking one period from just after the anchor.
  std::vector<int> heights_from_anchor() const;
};

MotzkinPath to_motzkin(const CyclicBitstring& x);

// Decomposition of a word y (1 = up) whose proper prefixes all have positive
// height: y = 1 u1 1 u2 ... 1 u_{h-2} 1 1 v0 0 v1 0 ... 0 v_{h-2} 0 0.
struct HillDecomposition {
  int height = 0;
  int peak = 0;            // index of the up-step that first reaches `height`
  std::vector<int> ones;   // spine up-steps, ascending (one per level)
  std::vector<int> zeros;  // spine down-steps, ascending
  // Half-open index ranges.  bulges[i-1] is u_i (level i), dents[j] is v_j.
  std::vector<std::pair<int, int>> bulges;
  std::vector<std::pair<int, int>> dents;
};

HillDecomposition decompose_hill(std::span<const uint8_t> y);

struct Glider {
  std::vector<int64_t> A;  // ascending; min A lies in 0..n-1
  std::vector<int64_t> B;  // ascending
  bool inverted = false;
  bool free = true;
  int parent = -1;          // index in GliderPartition::gliders, -1 for roots
  bool in_dent = false;     // came from a dent of its parent, i.e. trapped by it
  int64_t window_offset = 0;  // add to A/B to get the instance inside the scan window

  int speed() const { return static_cast<int>(A.size()); }
  int64_t s0() const { return A.front(); }
  int64_t s1() const { return A.back(); }
  int64_t s2() const { return B.back(); }
  int64_t range_begin() const { return A.front(); }
  int64_t range_end() const { return B.back(); }  // inclusive
  int64_t position2() const { return s1() + s2(); }  // twice the position

  bool same_steps(const Glider& other) const {
    return A == other.A && B == other.B;
  }
};

// Moves a glider by a multiple of n so that min A is in 0..n-1.
Glider normalized(Glider g, int n);

struct GliderPartition {
  int n = 0;
  int k = 0;
  std::vector<int8_t> steps;
  int anchor = 0;                 // window is anchor+1 .. anchor+n
  std::vector<Glider> gliders;    // one per class, sorted by s0
  std::vector<std::vector<int>> children;
  std::vector<int> owner;         // glider owning position i, -1 if unmatched

  int glider_count() const { return static_cast<int>(gliders.size()); }
  // j's instance sits at its normalized steps plus this shift inside i's.
  int64_t relative_shift(int i, int j) const {
    return gliders[j].window_offset - gliders[i].window_offset;
  }
  bool is_ancestor(int i, int j) const;
  // True when j (shifted by relative_shift(i,j)) lies in a dent of ancestor i.
  bool traps(int i, int j) const;
  std::vector<int> trappers(int j) const;
  int find(const Glider& g) const;  // index of the class equal to g, or -1
};

GliderPartition glider_partition(const CyclicBitstring& x);

// Speeds as a partition of k, non-increasing.
struct SpeedMultiset {
  std::vector<int> parts;

  int glider_count() const { return static_cast<int>(parts.size()); }
  int sum() const;
  // i-th smallest speed, 1-based as in v_1 <= v_2 <= ...
  int v(int i) const { return parts[parts.size() - i]; }
  bool operator==(const SpeedMultiset&) const = default;
  std::string str() const;
};

SpeedMultiset speed_multiset(const GliderPartition& partition);
SpeedMultiset speed_multiset(const CyclicBitstring& x);
// Block scan plus the recursion W(1u0) = W(u) with one largest entry
// incremented; never builds gliders.
SpeedMultiset speed_multiset_direct(const CyclicBitstring& x);
// Same as above, writing into `out` from precomputed matching data.
void speed_multiset_direct_raw(const uint8_t* bits, const int32_t* partner,
                               int anchor, int n, std::vector<int>& out);

// Lexicographic successor/predecessor among partitions of the same integer.
// Return false at the ends of the order.
bool next_partition(std::vector<int>& p);
bool prev_partition(std::vector<int>& p);
std::vector<std::vector<int>> partitions_lex(int k);

struct TrainComposition {
  // speed -> train sizes left to right, rotated to the least rotation
  std::map<int, std::vector<int>> z;
  bool operator==(const TrainComposition&) const = default;
  std::string str() const;
};

std::vector<int> least_rotation(const std::vector<int>& seq);

// Trains of each speed, as lists of glider indices in left-to-right order
// starting after the anchor.
std::map<int, std::vector<std::vector<int>>> trains(const GliderPartition& partition);
TrainComposition train_composition(const GliderPartition& partition);
TrainComposition train_composition(const CyclicBitstring& x);
// Whether glider b is the next glider of the same speed after a and all
// steps between them belong to slower gliders.
bool coupled(const GliderPartition& partition, int a, int b);

struct GliderFlags {
  bool clean = false;
  bool open = false;
  bool free = false;
  bool inverted = false;
};

GliderFlags classify_glider(const GliderPartition& partition, int index);

// One character per position: glider classes get letters in order of s0,
// upper case on 1-bits and lower case on 0-bits; unmatched 0s are '-'.
std::string render_gliders(const GliderPartition& partition);

}  // namespace kneser
