#include "kneser/bitstring.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace kneser {

namespace {

size_t words_for(int n) { return (static_cast<size_t>(n) + 63) / 64; }

}  // namespace

CyclicBitstring::CyclicBitstring(int n) : n_(n), k_(0), words_(words_for(n), 0) {
  if (n < 0) throw ParameterError("negative length");
}

CyclicBitstring::CyclicBitstring(int n, std::span<const int> one_positions)
    : CyclicBitstring(n) {
  for (int i : one_positions) {
    if (i < 0 || i >= n) throw ParameterError("position out of range");
    if ((*this)[i]) throw ParameterError("repeated position");
    set_raw(i, true);
  }
}

CyclicBitstring CyclicBitstring::parse(std::string_view text) {
  CyclicBitstring x(static_cast<int>(text.size()));
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '1') {
      x.set_raw(static_cast<int>(i), true);
    } else if (c != '0' && c != '-') {
      throw ParameterError("bitstring may only contain 1, 0 and -");
    }
  }
  return x;
}

CyclicBitstring CyclicBitstring::from_bits(std::span<const uint8_t> bits) {
  CyclicBitstring x(static_cast<int>(bits.size()));
  for (size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) x.set_raw(static_cast<int>(i), true);
  }
  return x;
}

void CyclicBitstring::set_raw(int i, bool value) {
  uint64_t mask = uint64_t{1} << (i & 63);
  uint64_t& w = words_[static_cast<size_t>(i) >> 6];
  bool old = w & mask;
  if (old == value) return;
  if (value) {
    w |= mask;
    ++k_;
  } else {
    w &= ~mask;
    --k_;
  }
}

std::vector<int> CyclicBitstring::ones() const {
  std::vector<int> out;
  out.reserve(k_);
  for (size_t wi = 0; wi < words_.size(); ++wi) {
    uint64_t w = words_[wi];
    while (w) {
      out.push_back(static_cast<int>(wi * 64 + std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

void CyclicBitstring::copy_bits(uint8_t* out) const {
  for (int i = 0; i < n_; ++i) out[i] = (*this)[i];
}

std::vector<uint8_t> CyclicBitstring::bits() const {
  std::vector<uint8_t> out(n_);
  copy_bits(out.data());
  return out;
}

std::string CyclicBitstring::str() const {
  std::string s(n_, '0');
  for (int i = 0; i < n_; ++i) {
    if ((*this)[i]) s[i] = '1';
  }
  return s;
}

CyclicBitstring CyclicBitstring::with_bit(int i, bool value) const {
  CyclicBitstring y = *this;
  y.set_raw(((i % n_) + n_) % n_, value);
  return y;
}

CyclicBitstring CyclicBitstring::with_moved_one(int from, int to) const {
  from = ((from % n_) + n_) % n_;
  to = ((to % n_) + n_) % n_;
  if (!(*this)[from] || (*this)[to]) {
    throw ContractError("with_moved_one needs a 1 at `from` and a 0 at `to`");
  }
  CyclicBitstring y = *this;
  y.set_raw(from, false);
  y.set_raw(to, true);
  return y;
}

bool CyclicBitstring::disjoint(const CyclicBitstring& other) const {
  for (size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & other.words_[i]) return false;
  }
  return true;
}

int CyclicBitstring::common(const CyclicBitstring& other) const {
  int c = 0;
  for (size_t i = 0; i < words_.size(); ++i) {
    c += std::popcount(words_[i] & other.words_[i]);
  }
  return c;
}

bool CyclicBitstring::subset_of(const CyclicBitstring& other) const {
  for (size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

CyclicBitstring CyclicBitstring::complement() const {
  CyclicBitstring y = *this;
  for (auto& w : y.words_) w = ~w;
  if (n_ % 64) y.words_.back() &= (uint64_t{1} << (n_ % 64)) - 1;
  y.k_ = n_ - k_;
  return y;
}

size_t CyclicBitstring::hash() const {
  uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<uint64_t>(n_);
  for (uint64_t w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<size_t>(h);
}

std::strong_ordering CyclicBitstring::operator<=>(
    const CyclicBitstring& other) const {
  if (n_ != other.n_) return n_ <=> other.n_;
  for (size_t i = 0; i < words_.size(); ++i) {
    uint64_t diff = words_[i] ^ other.words_[i];
    if (diff) {
      uint64_t low = diff & (~diff + 1);
      return (words_[i] & low) ? std::strong_ordering::greater
                               : std::strong_ordering::less;
    }
  }
  return std::strong_ordering::equal;
}

CyclicBitstring make_vertex(int n, int k, std::span<const int> one_positions) {
  if (static_cast<int>(one_positions.size()) != k) {
    throw ParameterError("make_vertex: expected exactly k positions");
  }
  return CyclicBitstring(n, one_positions);
}

void require_factor_params(int n, int k) {
  if (k < 1 || n < 2 * k + 1) {
    throw ParameterError("need k >= 1 and n >= 2k+1 (got n=" +
                         std::to_string(n) + ", k=" + std::to_string(k) + ")");
  }
}

namespace raw {

int match(const uint8_t* bits, int n, int32_t* partner, int32_t* scratch) {
  // The first time the walk (+1 for a 1, -1 for a 0) reaches its minimum
  // over one period is an unmatched 0; a stack scan starting right after it
  // never has to wrap.
  int h = 0, best = std::numeric_limits<int>::max(), best_at = -1;
  for (int i = 0; i < n; ++i) {
    h += bits[i] ? 1 : -1;
    if (h < best) {
      best = h;
      best_at = i;
    }
  }
  int top = 0;
  for (int step = 1; step <= n; ++step) {
    int i = best_at + step;
    if (i >= n) i -= n;
    if (bits[i]) {
      scratch[top++] = i;
    } else if (top > 0) {
      int j = scratch[--top];
      partner[i] = j;
      partner[j] = i;
    } else {
      partner[i] = -1;
    }
  }
  return best_at;
}

void apply_f(const uint8_t* bits, int n, uint8_t* out, int32_t* partner,
             int32_t* scratch) {
  match(bits, n, partner, scratch);
  for (int i = 0; i < n; ++i) out[i] = (!bits[i] && partner[i] >= 0) ? 1 : 0;
}

}  // namespace raw

namespace {

void check_match_params(const CyclicBitstring& x) {
  if (2 * x.k() >= x.n()) {
    throw ParameterError("parenthesis matching needs n >= 2k+1");
  }
}

}  // namespace

Matching parenthesis_match(const CyclicBitstring& x) {
  check_match_params(x);
  int n = x.n();
  std::vector<uint8_t> bits = x.bits();
  std::vector<int32_t> partner(n), scratch(n);
  raw::match(bits.data(), n, partner.data(), scratch.data());
  Matching m;
  m.n = n;
  m.partner.assign(partner.begin(), partner.end());
  for (int i = 0; i < n; ++i) {
    if (partner[i] < 0) {
      m.unmatched.push_back(i);
    } else if (bits[i]) {
      m.matched_ones.push_back(i);
    } else {
      m.matched_zeros.push_back(i);
    }
  }
  return m;
}

std::string annotate(const CyclicBitstring& x) {
  Matching m = parenthesis_match(x);
  std::string s = x.str();
  for (int i : m.unmatched) s[i] = '-';
  return s;
}

CyclicBitstring apply_f(const CyclicBitstring& x) {
  check_match_params(x);
  int n = x.n();
  std::vector<uint8_t> bits = x.bits(), out(n);
  std::vector<int32_t> partner(n), scratch(n);
  raw::apply_f(bits.data(), n, out.data(), partner.data(), scratch.data());
  return CyclicBitstring::from_bits(out);
}

CyclicBitstring apply_f_inverse(const CyclicBitstring& x) {
  // Matching 0s as openers to the right is ordinary matching of the
  // reversed string.
  check_match_params(x);
  int n = x.n();
  std::vector<uint8_t> bits = x.bits(), rev(n), out(n), back(n);
  std::reverse_copy(bits.begin(), bits.end(), rev.begin());
  std::vector<int32_t> partner(n), scratch(n);
  raw::apply_f(rev.data(), n, out.data(), partner.data(), scratch.data());
  std::reverse_copy(out.begin(), out.end(), back.begin());
  return CyclicBitstring::from_bits(back);
}

CyclicBitstring rotate(const CyclicBitstring& x, long long i) {
  int n = x.n();
  if (n == 0) return x;
  int s = static_cast<int>(((i % n) + n) % n);
  std::vector<uint8_t> out(n);
  for (int j = 0; j < n; ++j) {
    int src = j - s;
    if (src < 0) src += n;
    out[j] = x[src];
  }
  return CyclicBitstring::from_bits(out);
}

int descent_count(const CyclicBitstring& x) {
  int n = x.n(), d = 0;
  for (int i = 0; i < n; ++i) {
    if (x[i] && !x[(i + 1) % n]) ++d;
  }
  return d;
}

uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > std::numeric_limits<uint64_t>::max()) {
      return std::numeric_limits<uint64_t>::max();
    }
  }
  return static_cast<uint64_t>(r);
}

Ranker::Ranker(int n, int k) : n_(n), k_(k) {
  if (n < 0 || k < 0 || k > n) throw ParameterError("Ranker: bad (n,k)");
  table_.assign(static_cast<size_t>(n + 1) * (k + 1), 0);
  const uint64_t cap = std::numeric_limits<uint64_t>::max();
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; b <= std::min(a, k); ++b) {
      uint64_t v;
      if (b == 0 || b == a) {
        v = 1;
      } else {
        uint64_t l = table_[static_cast<size_t>(a - 1) * (k + 1) + b - 1];
        uint64_t r = b <= a - 1 ? table_[static_cast<size_t>(a - 1) * (k + 1) + b] : 0;
        v = (l > cap - r) ? cap : l + r;
      }
      table_[static_cast<size_t>(a) * (k + 1) + b] = v;
    }
  }
  count_ = c(n, k);
}

uint64_t Ranker::rank(const CyclicBitstring& x) const {
  if (x.n() != n_ || x.k() != k_) throw ContractError("Ranker: size mismatch");
  uint64_t r = 0;
  int j = 0;
  for (int pos : x.ones()) r += c(pos, ++j);
  return r;
}

uint64_t Ranker::rank_bits(const uint8_t* bits) const {
  uint64_t r = 0;
  int j = 0;
  for (int pos = 0; pos < n_; ++pos) {
    if (bits[pos]) r += c(pos, ++j);
  }
  return r;
}

void Ranker::unrank_bits(uint64_t r, uint8_t* bits) const {
  std::fill(bits, bits + n_, 0);
  int pos = n_ - 1;
  for (int j = k_; j >= 1; --j) {
    while (c(pos, j) > r) --pos;
    bits[pos] = 1;
    r -= c(pos, j);
    --pos;
  }
}

CyclicBitstring Ranker::unrank(uint64_t r) const {
  if (r >= count_) throw ContractError("Ranker: rank out of range");
  std::vector<uint8_t> bits(n_);
  unrank_bits(r, bits.data());
  return CyclicBitstring::from_bits(bits);
}

Cycle cycle_of(const CyclicBitstring& x) {
  check_match_params(x);
  Cycle c;
  CyclicBitstring y = x;
  do {
    c.vertices.push_back(y);
    y = apply_f(y);
  } while (!(y == x));
  auto least = std::min_element(c.vertices.begin(), c.vertices.end());
  std::rotate(c.vertices.begin(), least, c.vertices.end());
  return c;
}

CycleFactor CycleFactor::build(int n, int k) {
  require_factor_params(n, k);
  Ranker ranker(n, k);
  if (ranker.count() > std::numeric_limits<uint32_t>::max() - 1) {
    throw ParameterError("cycle factor too large for 32-bit vertex ranks");
  }
  CycleFactor factor(std::move(ranker));
  const Ranker& rk = factor.ranker_;
  const uint64_t total = rk.count();
  constexpr uint32_t kUnseen = std::numeric_limits<uint32_t>::max();
  factor.cycle_of_.assign(total, kUnseen);
  factor.offset_.assign(total, 0);
  std::vector<uint8_t> bits(n), next(n), best(n);
  std::vector<int32_t> partner(n), scratch(n);
  std::vector<uint32_t> orbit;
  for (uint64_t start = 0; start < total; ++start) {
    if (factor.cycle_of_[start] != kUnseen) continue;
    orbit.clear();
    rk.unrank_bits(start, bits.data());
    best = bits;
    size_t best_at = 0;
    uint64_t r = start;
    do {
      orbit.push_back(static_cast<uint32_t>(r));
      if (std::lexicographical_compare(bits.begin(), bits.end(), best.begin(),
                                       best.end())) {
        best = bits;
        best_at = orbit.size() - 1;
      }
      raw::apply_f(bits.data(), n, next.data(), partner.data(), scratch.data());
      bits.swap(next);
      r = rk.rank_bits(bits.data());
    } while (r != start);
    std::rotate(orbit.begin(), orbit.begin() + best_at, orbit.end());
    uint32_t id = static_cast<uint32_t>(factor.cycles_.size());
    for (size_t i = 0; i < orbit.size(); ++i) {
      factor.cycle_of_[orbit[i]] = id;
      factor.offset_[orbit[i]] = static_cast<uint32_t>(i);
    }
    factor.keys_.push_back(CyclicBitstring::from_bits(best));
    factor.cycles_.push_back(orbit);
  }
  return factor;
}

Cycle CycleFactor::cycle(size_t c) const {
  Cycle out;
  out.vertices.reserve(cycles_[c].size());
  for (uint32_t r : cycles_[c]) out.vertices.push_back(ranker_.unrank(r));
  return out;
}

std::pair<uint32_t, uint32_t> CycleFactor::locate(const CyclicBitstring& x) const {
  uint64_t r = ranker_.rank(x);
  return {cycle_of_[r], offset_[r]};
}

uint64_t CycleFactor::f_rank(uint64_t rank) const {
  const auto& cyc = cycles_[cycle_of_[rank]];
  uint32_t o = offset_[rank] + 1;
  return cyc[o == cyc.size() ? 0 : o];
}

}  // namespace kneser
