#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kneser/bitstring.hpp"
#include "kneser/gliders.hpp"

namespace kneser {

// A copy of glider class `glider` moved by shift*n along the infinite string.
struct GliderCopy {
  int glider = 0;
  int64_t shift = 0;
  bool operator==(const GliderCopy&) const = default;
};

struct CaptureInfo {
  int glider = -1;
  int64_t reach_end = 0;
  std::vector<GliderCopy> captured;
  // strata[i]: captured copies with exactly i gap positions to their left
  std::vector<std::vector<GliderCopy>> strata;
  std::vector<int64_t> gap;  // ascending, exactly speed many
  int64_t interval_begin = 0;  // s1 + 1
  int64_t interval_end = 0;    // reach_end, inclusive
};

struct CaptureAnalysis {
  std::vector<int> free_gliders;
  std::vector<CaptureInfo> info;   // parallel to free_gliders
  std::vector<int> info_of;        // class -> index into info, -1 if trapped
  std::vector<int> movers;         // ascending class indices

  const CaptureInfo& of(int glider) const { return info[info_of[glider]]; }
  bool is_mover(int glider) const;
};

CaptureAnalysis capture_analysis(const GliderPartition& partition);
CaptureAnalysis capture_analysis(const CyclicBitstring& x);

// One application of f seen on the level of gliders.
struct StepResult {
  CyclicBitstring next;
  GliderPartition before;
  GliderPartition after;
  CaptureAnalysis capture;
  // image[c] is the class of the image of class c in `after`; the image of
  // the stored representative of c is the stored representative of image[c]
  // moved by image_shift[c] * n.
  std::vector<int> image;
  std::vector<int64_t> image_shift;
  std::vector<bool> moved;
};

// Builds f(x) from the movers' intervals, checks it against apply_f and
// checks the glider images against an independent partition of f(x).
// Throws InternalError on any mismatch.
StepResult advance(const CyclicBitstring& x);

struct MotionTrace {
  int n = 0;
  int glider_count = 0;
  std::vector<int> speeds;                  // per class of the start vertex
  std::vector<CyclicBitstring> states;      // x^0 .. x^steps
  std::vector<std::vector<int>> classes;    // [t][c]: class index in partition(x^t)
  std::vector<std::vector<int64_t>> pos2;   // [t][c]: twice the absolute position
  // [t][i * glider_count + j]: twice the counter for class i being trapped by class j
  std::vector<std::vector<int64_t>> counters2;
  std::vector<bool> moved_last;             // per class, in the final step

  int steps() const { return static_cast<int>(states.size()) - 1; }
  int64_t counter2(int t, int trapped, int trapper) const {
    return counters2[t][static_cast<size_t>(trapped) * glider_count + trapper];
  }
  // Right hand side of the equation of motion for class c at time t, doubled.
  int64_t predicted_pos2(int t, int c) const;
};

// Walks t_max steps from x and checks the equation of motion at every step.
MotionTrace motion_trace(const CyclicBitstring& x, int t_max);

// Smallest T > 0 after which x returns and every class is back in its own
// class.  Returns nullopt if no such T is found within `limit` steps.
std::optional<int> full_period(const CyclicBitstring& x, int limit);

using BigInt = boost::multiprecision::cpp_int;

struct MotionMatrix {
  int n = 0;
  std::vector<int> v;               // ascending speeds v_1 <= ... <= v_nu
  std::vector<int64_t> row_sums;    // V_i for i = 2..glider_count at index i-1; index 0 unused
  std::vector<std::vector<int64_t>> m;
};

MotionMatrix motion_matrix(const SpeedMultiset& speeds, int n);
BigInt determinant(const std::vector<std::vector<int64_t>>& matrix);  // Bareiss
BigInt determinant_closed_form(const MotionMatrix& matrix);

// Index of the rightmost glider of some minimum speed train, i.e. a glider
// the shift and search operations accept; -1 if none qualifies.
bool is_slow_train_end(const GliderPartition& partition, int glider);
std::vector<int> slow_train_ends(const GliderPartition& partition);

// Transposes the two bits picked out by the preimage of the glider.
CyclicBitstring shift_slow_glider(const CyclicBitstring& x, int glider);

struct SearchResult {
  CyclicBitstring vertex;
  int64_t steps = 0;
};

// Walks the cycle of x until the tracked glider is open with one of its
// `bit`-bits at position p (0-based).  The glider must be the rightmost one
// of a minimum speed train.
SearchResult first_arrival(const CyclicBitstring& x, int glider, int bit, int p);

// Same, starting from the glider that owns position q in x.
SearchResult first_arrival_at(const CyclicBitstring& x, int q, int bit, int p);

// One line per step: the vertex, its glider rendering and doubled positions.
std::string render_trace(const MotionTrace& trace);
std::string render_trace_svg(const MotionTrace& trace);

}  // namespace kneser
