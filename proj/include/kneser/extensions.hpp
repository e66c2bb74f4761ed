#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kneser/bitstring.hpp"
#include "kneser/gluing.hpp"

namespace kneser {

enum class Family { kneser, johnson, gen_kneser, bipartite };

std::string family_name(Family f);
std::optional<Family> parse_family(const std::string& name);

// A graph on subsets of {0..n-1}.  Kneser: disjoint k-sets.  Johnson: k-sets
// meeting in exactly s elements.  Generalized Kneser: k-sets meeting in at
// most s elements.  Bipartite: k-sets and (n-k)-sets joined by inclusion.
struct GraphSpec {
  Family family = Family::kneser;
  int n = 0, k = 0, s = 0;

  static GraphSpec kneser(int n, int k) { return {Family::kneser, n, k, 0}; }
  static GraphSpec johnson(int n, int k, int s) { return {Family::johnson, n, k, s}; }
  static GraphSpec gen_kneser(int n, int k, int s) { return {Family::gen_kneser, n, k, s}; }
  static GraphSpec bipartite(int n, int k) { return {Family::bipartite, n, k, 0}; }

  // Throws ParameterError unless the parameters give a connected graph that
  // the constructions here cover.
  void validate() const;
  bool is_petersen() const;
  uint64_t vertex_count() const;
  bool is_vertex(const CyclicBitstring& x) const;
  bool adjacent(const CyclicBitstring& a, const CyclicBitstring& b) const;
  std::vector<CyclicBitstring> vertices() const;
  std::string label() const;
};

struct FallbackLimits {
  uint64_t max_vertices = 10000;
  double seconds = 60.0;
};

enum class Outcome {
  cycle,
  path,       // no Hamilton cycle exists; a Hamilton path is returned
  timeout,    // the fallback ran out of time
  too_large,  // the fallback was needed above its vertex cap
};

struct Tour {
  GraphSpec spec;
  Outcome outcome = Outcome::cycle;
  std::vector<CyclicBitstring> vertices;
  std::string strategy;
};

// Exhaustive search for a Hamilton cycle, with a randomized rotation heuristic
// tried first on larger graphs.  If the search proves that no cycle exists it
// looks for a Hamilton path instead.
Tour fallback_search(const GraphSpec& spec, const FallbackLimits& limits = {});

Tour hamilton_kneser(int n, int k, const FallbackLimits& limits = {}, int anchor = 0);
Tour hamilton_johnson(int n, int k, int s, const FallbackLimits& limits = {});
Tour hamilton_bipartite(int n, int k, const FallbackLimits& limits = {});
Tour hamilton_generalized_kneser(int n, int k, int s, const FallbackLimits& limits = {});
Tour hamilton(const GraphSpec& spec, const FallbackLimits& limits = {}, int anchor = 0);

// Checks the listing against the graph: every vertex exactly once, and
// consecutive vertices adjacent, including last to first when `closed`.
VerifyReport verify_tour(const GraphSpec& spec, const std::vector<CyclicBitstring>& seq,
                         bool closed);

// J(n,k,s) and J(n,n-k,n-2k+s) are isomorphic under complementation.
GraphSpec complement_johnson(const GraphSpec& spec);

}  // namespace kneser
