#include <gtest/gtest.h>

#include "graph_gen.hpp"
#include "mldlab/graph.hpp"

using namespace mldlab;

namespace {

Graph path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph binary_tree(int depth) {
  const int n = (1 << depth) - 1;
  std::vector<std::pair<int, int>> e;
  for (int v = 1; v < n; ++v) e.emplace_back((v - 1) / 2, v);
  return Graph(n, e);
}

}  // namespace

TEST(GraphChain, Examples) {
  auto r = find_chain_in_graph(path(5), 0, 2);
  EXPECT_EQ(*r.path, (std::vector<int>{0, 1}));
  EXPECT_EQ(r.route, ChainRoute::kRecursive);
  const Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
  for (int v = 0; v < 3; ++v) EXPECT_EQ(*find_chain_in_graph(k3, v, 1).path, (std::vector<int>{v}));
  EXPECT_FALSE(find_chain_in_graph(k3, 0, 3).path.has_value());
  const Graph t = binary_tree(5);
  ASSERT_GE(t.order(), chain_order_bound(3));
  r = find_chain_in_graph(t, 0, 3);
  ASSERT_TRUE(r.path);
  EXPECT_EQ(r.path->size(), 3u);
  EXPECT_TRUE(is_induced_path(t, *r.path));
  EXPECT_EQ(r.path->front(), 0);
  EXPECT_TRUE(oracle::induced_path_exists(t, 0, 3));
}

TEST(GraphChain, Errors) {
  EXPECT_THROW(find_chain_in_graph(path(3), 7, 1), InputError);
  EXPECT_THROW(find_chain_in_graph(path(3), 0, 0), InputError);
  const Graph star(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  EXPECT_THROW(find_chain_in_graph(star, 1, 2), InputError);
  EXPECT_THROW(find_chain_in_graph(Graph(2, {}), 0, 1), InputError);
  EXPECT_THROW(Graph(2, {{0, 0}}), InputError);
  EXPECT_THROW(Graph(2, {{0, 1}, {1, 0}}), InputError);
}

TEST(GraphGen, CountsMatchKnownSequence) {
  // connected graphs with maximum degree at most 3, by order
  const std::vector<std::size_t> expected = {0, 1, 1, 2, 6, 10, 29, 64, 194};
  const auto levels = oracle::connected_subcubic_graphs(8);
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(levels[n].size(), expected[n]) << "n = " << n;
}

TEST(GraphChain, AgreesWithSubsetOracle) {
  const auto levels = oracle::connected_subcubic_graphs(7);
  for (int n = 1; n <= 7; ++n)
    for (const auto& g : levels[n])
      for (int v = 0; v < n; ++v)
        for (int l = 1; l <= n; ++l) {
          const auto r = find_chain_in_graph(g, v, l);
          ASSERT_EQ(r.path.has_value(), oracle::induced_path_exists(g, v, l));
          if (r.path) {
            EXPECT_EQ(static_cast<int>(r.path->size()), l);
            EXPECT_EQ(r.path->front(), v);
            EXPECT_TRUE(is_induced_path(g, *r.path));
          }
          if (n >= chain_order_bound(l)) EXPECT_TRUE(r.path.has_value());
        }
}

TEST(GraphChain, DualGraphsOfChains) {
  const auto ch = log_resolve(SurfaceIdeal({{{Poly2::x().pow(2) + Poly2::y().pow(3)}, Rat(1)}}));
  const Graph g = dual_graph(ch);
  EXPECT_EQ(g.order(), 3);
  EXPECT_TRUE(g.connected());
  EXPECT_EQ(*find_chain_in_graph(g, 2, 2).path, (std::vector<int>{2, 0}));
}
