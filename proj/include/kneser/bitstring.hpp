#pragma once

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kneser {

// Bad (n,k,...) combinations or malformed input.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A caller broke a documented precondition.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Something that the theory says cannot happen did happen.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A cyclic 0/1 string of length n.  Position i is 0-based, so it is position
// i+1 in the 1..n numbering.  Bits live in 64-bit words, inline up to n = 128.
class CyclicBitstring {
 public:
  CyclicBitstring() = default;
  explicit CyclicBitstring(int n);
  CyclicBitstring(int n, std::span<const int> one_positions);

  // Accepts '1', '0' and '-' (an unmatched 0 in annotated output).
  static CyclicBitstring parse(std::string_view text);

  int n() const { return n_; }
  int k() const { return k_; }
  bool operator[](int i) const {
    return (words_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1u;
  }

  std::vector<int> ones() const;
  void copy_bits(uint8_t* out) const;
  std::vector<uint8_t> bits() const;
  std::string str() const;

  CyclicBitstring with_bit(int i, bool value) const;
  // Moves a 1 from position `from` to position `to`, which must hold a 0.
  CyclicBitstring with_moved_one(int from, int to) const;

  bool disjoint(const CyclicBitstring& other) const;
  int common(const CyclicBitstring& other) const;
  CyclicBitstring complement() const;
  bool subset_of(const CyclicBitstring& other) const;

  size_t hash() const;
  const uint64_t* words() const { return words_.data(); }
  size_t word_count() const { return words_.size(); }

  bool operator==(const CyclicBitstring& other) const {
    return n_ == other.n_ && words_ == other.words_;
  }
  // Lexicographic order of the strings, position 0 first, '0' < '1'.
  std::strong_ordering operator<=>(const CyclicBitstring& other) const;

  static CyclicBitstring from_bits(std::span<const uint8_t> bits);

 private:
  void set_raw(int i, bool value);

  int n_ = 0;
  int k_ = 0;
  boost::container::small_vector<uint64_t, 2> words_;
};

struct BitstringHash {
  size_t operator()(const CyclicBitstring& x) const { return x.hash(); }
};

CyclicBitstring make_vertex(int n, int k, std::span<const int> one_positions);

// Cyclic parenthesis matching with 1 = opening and 0 = closing bracket.
struct Matching {
  int n = 0;
  std::vector<int> partner;  // -1 for an unmatched 0
  std::vector<int> matched_ones;
  std::vector<int> matched_zeros;
  std::vector<int> unmatched;

  bool is_matched(int i) const { return partner[i] >= 0; }
};

Matching parenthesis_match(const CyclicBitstring& x);

// Renders matched bits as 1/0 and unmatched 0s as '-'.
std::string annotate(const CyclicBitstring& x);

CyclicBitstring apply_f(const CyclicBitstring& x);
CyclicBitstring apply_f_inverse(const CyclicBitstring& x);

// Right shift: bit j of the result is bit (j - i mod n) of x.
CyclicBitstring rotate(const CyclicBitstring& x, long long i);

// Number of cyclic occurrences of "10".
int descent_count(const CyclicBitstring& x);

namespace raw {

// Array versions used on hot paths.  `partner` and `scratch` need n entries.
// Returns an unmatched position.  Requires n > 2k.
int match(const uint8_t* bits, int n, int32_t* partner, int32_t* scratch);
void apply_f(const uint8_t* bits, int n, uint8_t* out, int32_t* partner,
             int32_t* scratch);

}  // namespace raw

// Binomial coefficients saturating at UINT64_MAX.
uint64_t binomial(int n, int k);

// Colex ranking of k-subsets of {0..n-1}.
class Ranker {
 public:
  Ranker(int n, int k);
  int n() const { return n_; }
  int k() const { return k_; }
  uint64_t count() const { return count_; }
  uint64_t rank(const CyclicBitstring& x) const;
  uint64_t rank_bits(const uint8_t* bits) const;
  CyclicBitstring unrank(uint64_t r) const;
  void unrank_bits(uint64_t r, uint8_t* bits) const;

 private:
  uint64_t c(int a, int b) const {
    return b < 0 || b > a ? 0 : table_[static_cast<size_t>(a) * (k_ + 1) + b];
  }
  int n_, k_;
  uint64_t count_;
  std::vector<uint64_t> table_;
};

struct Cycle {
  std::vector<CyclicBitstring> vertices;
  const CyclicBitstring& key() const { return vertices.front(); }
  size_t size() const { return vertices.size(); }
};

Cycle cycle_of(const CyclicBitstring& x);

// The orbits of f on all vertices, each rotated to start at its
// lexicographically least vertex, listed in order of discovery when the
// vertices are scanned in colex order.  Vertices are held as colex ranks.
class CycleFactor {
 public:
  static CycleFactor build(int n, int k);

  int n() const { return ranker_.n(); }
  int k() const { return ranker_.k(); }
  uint64_t vertex_count() const { return ranker_.count(); }
  size_t cycle_count() const { return cycles_.size(); }
  const std::vector<uint32_t>& cycle_ranks(size_t c) const { return cycles_[c]; }
  Cycle cycle(size_t c) const;
  const CyclicBitstring& key(size_t c) const { return keys_[c]; }

  uint32_t cycle_index(uint64_t rank) const { return cycle_of_[rank]; }
  uint32_t offset(uint64_t rank) const { return offset_[rank]; }
  std::pair<uint32_t, uint32_t> locate(const CyclicBitstring& x) const;
  uint64_t f_rank(uint64_t rank) const;

  const Ranker& ranker() const { return ranker_; }

 private:
  explicit CycleFactor(Ranker r) : ranker_(std::move(r)) {}
  Ranker ranker_;
  std::vector<std::vector<uint32_t>> cycles_;
  std::vector<CyclicBitstring> keys_;
  std::vector<uint32_t> cycle_of_;
  std::vector<uint32_t> offset_;
};

void require_factor_params(int n, int k);

}  // namespace kneser
