#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kneser/bitstring.hpp"
#include "kneser/gliders.hpp"

namespace kneser {

// Two vertices that differ by moving one visible matched pair onto two
// unmatched 0s bracketing a different block.  family is 1..9 for the nine
// structural rules and 0 for a pair found any other way.
struct Connector {
  CyclicBitstring x, y;
  std::pair<int, int> visible_pair;       // the pair of x that becomes unmatched in y
  std::pair<int, int> swapped_unmatched;  // unmatched 0s of x that become a pair in y
  int family = 0;
};

std::optional<Connector> is_connector(const CyclicBitstring& x, const CyclicBitstring& y);
// Every connector containing x.
std::vector<Connector> connectors_of(const CyclicBitstring& x);
int visible_pair_count(const CyclicBitstring& x);
// (x, f(x), y, f(y))
std::array<CyclicBitstring, 4> connector_four_cycle(const Connector& c);

// A rule applying to x: its image is x with the 1 at `from` moved to `to`.
struct RuleMatch {
  int family = 0;
  int from = 0;
  int to = 0;
  // rules 2 and 4 choose between two targets
  int primary_to = -1;
  int alternative_to = -1;
  bool took_alternative = false;
  // pattern parameters used by the partition bookkeeping
  int a = 0;
  bool w_is_10 = false;
};

// Which rule's domain contains x, without resolving the choice in rules 2
// and 4.  Returns 0 if none.
int rule_domain(const CyclicBitstring& x, int p);
std::optional<RuleMatch> classify_rule(const CyclicBitstring& x, int p);
CyclicBitstring rule_image(const CyclicBitstring& x, const RuleMatch& m);
// The lexicographic relation between the speed partitions of x and its image
// that the rule promises.
bool partition_direction_ok(const CyclicBitstring& x, const RuleMatch& m);

// Vertices with a single glider of speed k: s_i is 1^k 0^k -^l shifted right by i.
CyclicBitstring single_glider_vertex(int n, int k, int i);
// Offset r of the special pairs that keeps them away from the rule
// connectors around anchor p.
int special_offset(int n, int k, int p);

struct SingleGliderGluing {
  int n = 0, k = 0, g = 0, r = 0;
  std::vector<std::vector<int>> cycles;       // indices i of s_i, in f order
  std::vector<std::pair<int, int>> pairs;     // (r+j, r+j+k+1) mod n
  std::vector<std::array<int, 4>> four_cycles;
};

SingleGliderGluing single_glider_gluing(int n, int k, int r);

struct PlanConnector {
  uint32_t x = 0, y = 0;  // colex ranks
  uint8_t family = 0;
};

struct AuxEdge {
  uint32_t a = 0, b = 0;  // aux nodes
  uint32_t connector = 0;
};

struct GluingPlan {
  int n = 0, k = 0, p = 0, r = 0;
  std::vector<PlanConnector> connectors;
  std::vector<std::pair<uint32_t, uint32_t>> special_pairs;  // ranks
  std::vector<uint32_t> node_of_cycle;  // factor cycle -> aux node
  uint32_t node_count = 0;
  uint32_t single_glider_node = 0;
  std::vector<AuxEdge> aux_edges;
  std::vector<uint32_t> tree;           // connector indices in BFS order
  std::array<uint64_t, 10> family_counts{};
};

// Throws InternalError if the connectors overlap, touch a special pair or
// leave the auxiliary graph disconnected.
GluingPlan build_gluing_plan(const CycleFactor& factor, int p = 0);

enum class EdgeKind : uint8_t { factor = 0, four_cycle = 1, special = 2 };

struct HamiltonCycle {
  int n = 0, k = 0;
  std::vector<uint32_t> order;      // colex ranks
  std::vector<EdgeKind> edge_kinds;  // edge order[i] -> order[i+1 mod N]
  std::vector<CyclicBitstring> vertices(const Ranker& ranker) const;
};

HamiltonCycle assemble_hamilton(const CycleFactor& factor, const GluingPlan& plan);

struct VerifyReport {
  bool ok = false;
  std::string message;
  int64_t position = -1;
};

VerifyReport verify_hamilton(const std::vector<CyclicBitstring>& seq, int n, int k);
// Same checks for a path: no closing edge required.
VerifyReport verify_hamilton_path(const std::vector<CyclicBitstring>& seq, int n, int k);

}  // namespace kneser
