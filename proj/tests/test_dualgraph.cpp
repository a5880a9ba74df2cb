#include <doctest.h>

#include <algorithm>
#include <random>

#include "scroll/dualgraph.hpp"

using namespace scroll;

TEST_CASE("limit graph small cases") {
  auto g1 = build_limit_graph(1);
  CHECK(g1.vertex_count() == 3);
  CHECK(g1.edge_count() == 3);  // a triangle
  CHECK(g1.is_connected());

  auto g2 = build_limit_graph(2);
  CHECK(g2.vertex_count() == 8);
  CHECK(g2.edge_count() == 12);

  auto g3 = build_limit_graph(3);
  CHECK(g3.vertex_count() == 20);
  CHECK(g3.edge_count() == 36);

  CHECK_THROWS_AS(build_limit_graph(0), resource_error);
  CHECK_THROWS_AS(build_limit_graph(kMaxGraphGenus + 1), resource_error);
}

TEST_CASE("limit graph closed forms, degree profile, connectivity") {
  for (int g = 1; g <= 12; ++g) {
    auto graph = build_limit_graph(g);
    i64 v = graph.vertex_count(), e = graph.edge_count();
    CHECK(v == (i64(1) << (g - 1)) * (g + 2));
    CHECK(e == 3 * g * (i64(1) << (g - 1)));
    CHECK(euler_char(graph) == (i64(1) << g) * (1 - g));
    CHECK(graph.is_connected());

    auto deg = graph.degrees();
    i64 n_xi = i64(1) << g;
    i64 sum = 0;
    for (i64 i = 0; i < v; ++i) {
      CHECK(deg[i] == (i < n_xi ? 2 * g : 2));
      sum += deg[i];
    }
    CHECK(sum == 2 * e);  // handshake
  }
}

TEST_CASE("graph is simple: sorted unique smaller-first edges") {
  auto graph = build_limit_graph(4);
  CHECK(std::is_sorted(graph.edges.begin(), graph.edges.end()));
  CHECK(std::adjacent_find(graph.edges.begin(), graph.edges.end()) ==
        graph.edges.end());
  for (const auto& [a, b] : graph.edges) CHECK(a < b);
}

TEST_CASE("euler_char") {
  CHECK(euler_char(build_limit_graph(2)) == -4);
  CHECK(euler_char(build_limit_graph(1)) == 0);
  DualGraph single{{"v0"}, {}, {0}};
  CHECK(euler_char(single) == 1);
}

TEST_CASE("arithmetic_genus") {
  CHECK(arithmetic_genus(build_limit_graph(2)) == 5);
  CHECK(arithmetic_genus(build_limit_graph(1)) == 1);
  CHECK(arithmetic_genus(build_limit_graph(3)) == 17);

  DualGraph disconnected{{"a", "b"}, {}, {0, 0}};
  CHECK_THROWS_AS(arithmetic_genus(disconnected), domain_error);

  DualGraph nonrational{{"a", "b"}, {{0, 1}}, {1, 0}};
  CHECK_THROWS_AS(arithmetic_genus(nonrational), domain_error);
}

TEST_CASE("genus_formula and graph oracle equivalence") {
  CHECK(genus_formula(2) == 5);
  CHECK(genus_formula(0) == 0);
  for (int g = 1; g <= 12; ++g)
    CHECK(genus_formula(g) ==
          mpz_class(static_cast<long>(arithmetic_genus(build_limit_graph(g)))));
}

TEST_CASE("arithmetic_genus is relabeling-invariant") {
  auto graph = build_limit_graph(3);
  std::vector<int> perm(graph.vertex_ids.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  std::mt19937 rng(5);
  std::shuffle(perm.begin(), perm.end(), rng);

  DualGraph shuffled;
  shuffled.vertex_ids.resize(graph.vertex_ids.size());
  shuffled.component_genera.assign(graph.vertex_ids.size(), 0);
  for (std::size_t i = 0; i < perm.size(); ++i)
    shuffled.vertex_ids[perm[i]] = graph.vertex_ids[i];
  for (auto [a, b] : graph.edges) {
    int x = perm[a], y = perm[b];
    shuffled.edges.emplace_back(std::min(x, y), std::max(x, y));
  }
  std::sort(shuffled.edges.begin(), shuffled.edges.end());
  CHECK(arithmetic_genus(shuffled) == arithmetic_genus(graph));
}

TEST_CASE("monodromy transpositions") {
  auto t1 = monodromy_transpositions(1);
  CHECK(t1.symbols.size() == 2);
  CHECK(t1.swaps.size() == 1);

  auto t2 = monodromy_transpositions(2);
  CHECK(t2.symbols.size() == 4);
  CHECK(t2.swaps.size() == 4);

  auto t3 = monodromy_transpositions(3);
  CHECK(t3.symbols.size() == 8);
  CHECK(t3.swaps.size() == 12);

  // Each swap differs in exactly one factor.
  for (int g = 1; g <= 6; ++g) {
    auto t = monodromy_transpositions(g);
    CHECK(t.swaps.size() == std::size_t(g) << (g - 1));
    for (const auto& [a, b] : t.swaps) {
      auto diff = t.symbols[a].word ^ t.symbols[b].word;
      CHECK((diff != 0 && (diff & (diff - 1)) == 0));
    }
  }
}

TEST_CASE("is_full_symmetric via connectivity") {
  for (int g = 1; g <= 12; ++g)
    CHECK(is_full_symmetric(monodromy_transpositions(g)));

  TranspositionSet empty;
  empty.g = 1;
  empty.symbols = all_labelings(1);
  CHECK_FALSE(is_full_symmetric(empty));
}

TEST_CASE("brute-force group orders") {
  CHECK(generated_group_order(monodromy_transpositions(1)) == 2);
  CHECK(generated_group_order(monodromy_transpositions(2)) == 24);
  CHECK(generated_group_order(monodromy_transpositions(3)) == 40320);
  CHECK_THROWS_AS(generated_group_order(monodromy_transpositions(4)),
                  resource_error);
}

TEST_CASE("DOT export") {
  auto dot = to_dot(build_limit_graph(1));
  CHECK(dot ==
        "graph limit_unisecants {\n"
        "  xi_1;\n"
        "  xi_2;\n"
        "  xip_1_;\n"
        "  xi_1 -- xi_2;\n"
        "  xi_1 -- xip_1_;\n"
        "  xi_2 -- xip_1_;\n"
        "}\n");
}
