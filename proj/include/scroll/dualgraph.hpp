#pragma once

#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "scroll/degeneration.hpp"

namespace scroll {

constexpr int kMaxGraphGenus = 16;

// Dual graph of a configuration of smooth rational curves: one vertex per
// component, one edge per node.  Simple graph; edges stored smaller-id
// first and sorted.
struct DualGraph {
  std::vector<std::string> vertex_ids;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> component_genera;  // all 0 for the limit configuration

  i64 vertex_count() const { return static_cast<i64>(vertex_ids.size()); }
  i64 edge_count() const { return static_cast<i64>(edges.size()); }
  std::vector<i64> degrees() const;
  bool is_connected() const;
};

// Dual graph of the limit unisecant family on Y in the even case: 2^g
// pencil vertices (xi) and g*2^{g-1} conic vertices (xip).  Two xi
// vertices meet iff their labelings differ at exactly one factor; an xip
// vertex meets exactly the two xi vertices extending its partial labeling.
DualGraph build_limit_graph(int g);

i64 euler_char(const DualGraph& graph);

// 1 - chi(G) for a connected all-rational configuration.
i64 arithmetic_genus(const DualGraph& graph);

// gamma = 2^g (g-1) + 1.
mpz_class genus_formula(i64 g);

struct TranspositionSet {
  int g = 0;
  std::vector<Labeling> symbols;              // the 2^g labelings
  std::vector<std::pair<int, int>> swaps;     // index pairs into symbols
};

// Hypercube-edge swaps: one transposition per pair of labelings differing
// at a single factor.
TranspositionSet monodromy_transpositions(int g);

// Transpositions generate the full symmetric group iff their graph on the
// symbols is connected.
bool is_full_symmetric(const TranspositionSet& transpositions);

std::string to_dot(const DualGraph& graph);

// Order of the permutation group generated by the swaps, by explicit
// closure.  Only for |symbols| <= 8; larger sets are a resource error.
mpz_class generated_group_order(const TranspositionSet& transpositions);

}  // namespace scroll
