#include "scroll/dualgraph.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <set>
#include <sstream>

namespace scroll {

namespace {

void check_graph_genus(int g, const char* where) {
  if (g < 1 || g > kMaxGraphGenus) {
    std::ostringstream os;
    os << where << ": genus must lie in 1.." << kMaxGraphGenus;
    throw resource_error(os.str());
  }
}

// Union-find over dense vertex ids.
struct DisjointSet {
  std::vector<int> parent;
  explicit DisjointSet(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<i64> DualGraph::degrees() const {
  std::vector<i64> deg(vertex_ids.size(), 0);
  for (const auto& [a, b] : edges) {
    ++deg[a];
    ++deg[b];
  }
  return deg;
}

bool DualGraph::is_connected() const {
  if (vertex_ids.empty()) return true;
  DisjointSet ds(vertex_ids.size());
  for (const auto& [a, b] : edges) ds.unite(a, b);
  int root = ds.find(0);
  for (std::size_t v = 1; v < vertex_ids.size(); ++v)
    if (ds.find(static_cast<int>(v)) != root) return false;
  return true;
}

DualGraph build_limit_graph(int g) {
  check_graph_genus(g, "build_limit_graph");
  DualGraph graph;
  const std::uint32_t n_xi = std::uint32_t(1) << g;
  const std::uint32_t n_xip_per_l = std::uint32_t(1) << (g - 1);

  // Vertices: xi block first (lexicographic labelings), then xip by
  // (conic factor, partial labeling).
  for (std::uint32_t w = 0; w < n_xi; ++w)
    graph.vertex_ids.push_back("xi_" + Labeling{g, w}.bits());
  for (int l = 1; l <= g; ++l)
    for (std::uint32_t p = 0; p < n_xip_per_l; ++p) {
      std::ostringstream os;
      os << "xip_" << l << "_" << Labeling{g - 1, p}.bits();
      graph.vertex_ids.push_back(os.str());
    }
  graph.component_genera.assign(graph.vertex_ids.size(), 0);

  // xi-xi: labelings differing at exactly one factor.
  for (std::uint32_t w = 0; w < n_xi; ++w)
    for (int i = 0; i < g; ++i) {
      std::uint32_t w2 = w ^ (std::uint32_t(1) << i);
      if (w < w2) graph.edges.emplace_back(static_cast<int>(w),
                                           static_cast<int>(w2));
    }

  // xi-xip: the two labelings extending the partial labeling at factor l.
  // Factor l occupies bit (g - l) of a full word; the partial word packs
  // the remaining factors in increasing order.
  for (int l = 1; l <= g; ++l) {
    int bit = g - l;
    for (std::uint32_t p = 0; p < n_xip_per_l; ++p) {
      std::uint32_t high = (p >> bit) << (bit + 1);
      std::uint32_t low = p & ((std::uint32_t(1) << bit) - 1);
      std::uint32_t base = high | low;
      int xip = static_cast<int>(n_xi + (l - 1) * n_xip_per_l + p);
      for (std::uint32_t choice = 0; choice <= 1; ++choice) {
        std::uint32_t full = base | (choice << bit);
        graph.edges.emplace_back(static_cast<int>(full), xip);
      }
    }
  }

  for (auto& [a, b] : graph.edges)
    if (a > b) std::swap(a, b);
  std::sort(graph.edges.begin(), graph.edges.end());
  assert(std::adjacent_find(graph.edges.begin(), graph.edges.end()) ==
         graph.edges.end());
  return graph;
}

i64 euler_char(const DualGraph& graph) {
  return graph.vertex_count() - graph.edge_count();
}

i64 arithmetic_genus(const DualGraph& graph) {
  if (!graph.is_connected())
    throw domain_error("arithmetic_genus: formula assumes a connected graph");
  for (int gv : graph.component_genera)
    if (gv != 0)
      throw domain_error(
          "arithmetic_genus: limit configuration must be all-rational");
  return 1 - euler_char(graph);
}

mpz_class genus_formula(i64 g) {
  if (g < 0) throw parameter_error("genus must be >= 0");
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, static_cast<unsigned long>(g));
  out = out * (g - 1) + 1;
  return out;
}

TranspositionSet monodromy_transpositions(int g) {
  check_graph_genus(g, "monodromy_transpositions");
  TranspositionSet out;
  out.g = g;
  out.symbols = all_labelings(g);
  const std::uint32_t n = std::uint32_t(1) << g;
  for (std::uint32_t w = 0; w < n; ++w)
    for (int i = 0; i < g; ++i) {
      std::uint32_t w2 = w ^ (std::uint32_t(1) << i);
      if (w < w2)
        out.swaps.emplace_back(static_cast<int>(w), static_cast<int>(w2));
    }
  std::sort(out.swaps.begin(), out.swaps.end());
  return out;
}

bool is_full_symmetric(const TranspositionSet& transpositions) {
  const std::size_t n = transpositions.symbols.size();
  if (n <= 1) return true;
  DisjointSet ds(n);
  for (const auto& [a, b] : transpositions.swaps) ds.unite(a, b);
  int root = ds.find(0);
  for (std::size_t v = 1; v < n; ++v)
    if (ds.find(static_cast<int>(v)) != root) return false;
  return true;
}

mpz_class generated_group_order(const TranspositionSet& transpositions) {
  const std::size_t n = transpositions.symbols.size();
  if (n > 8)
    throw resource_error(
        "generated_group_order: explicit closure limited to 8 symbols");

  // Permutations of up to 8 symbols packed 8 bits per image.
  auto pack = [n](const std::array<std::uint8_t, 8>& p) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < n; ++i)
      v |= std::uint64_t(p[i]) << (8 * i);
    return v;
  };
  std::array<std::uint8_t, 8> identity{};
  for (std::size_t i = 0; i < n; ++i) identity[i] = std::uint8_t(i);

  std::vector<std::array<std::uint8_t, 8>> generators;
  for (const auto& [a, b] : transpositions.swaps) {
    auto p = identity;
    std::swap(p[a], p[b]);
    generators.push_back(p);
  }

  std::set<std::uint64_t> seen{pack(identity)};
  std::vector<std::array<std::uint8_t, 8>> frontier{identity};
  while (!frontier.empty()) {
    std::vector<std::array<std::uint8_t, 8>> next;
    for (const auto& p : frontier)
      for (const auto& gsw : generators) {
        std::array<std::uint8_t, 8> q{};
        for (std::size_t i = 0; i < n; ++i) q[i] = gsw[p[i]];
        if (seen.insert(pack(q)).second) next.push_back(q);
      }
    frontier = std::move(next);
  }
  return mpz_class(static_cast<unsigned long>(seen.size()));
}

std::string to_dot(const DualGraph& graph) {
  std::ostringstream os;
  os << "graph limit_unisecants {\n";
  for (const std::string& id : graph.vertex_ids) os << "  " << id << ";\n";
  for (const auto& [a, b] : graph.edges)
    os << "  " << graph.vertex_ids[a] << " -- " << graph.vertex_ids[b]
       << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace scroll
