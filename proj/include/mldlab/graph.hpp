#pragma once

// Simple undirected graphs and the search for an induced path of l vertices
// with a prescribed endpoint, in graphs of maximum degree 3.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mldlab/rational.hpp"
#include "mldlab/surface.hpp"

namespace mldlab {

class Graph {
 public:
  Graph() = default;
  Graph(int n, const std::vector<std::pair<int, int>>& edges) : adj_(static_cast<std::size_t>(n)) {
    if (n < 0) throw InputError("graph: negative vertex count");
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const auto [u, v] = edges[i];
      const std::string path = "edges[" + std::to_string(i) + "]";
      if (u < 0 || v < 0 || u >= n || v >= n) throw InputError(path + ": vertex out of range");
      if (u == v) throw InputError(path + ": self-loop");
      if (has_edge(u, v)) throw InputError(path + ": repeated edge");
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
  }

  int order() const { return static_cast<int>(adj_.size()); }
  const std::vector<int>& neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  bool has_edge(int u, int v) const {
    const auto& a = adj_[u];
    return std::find(a.begin(), a.end(), v) != a.end();
  }
  int max_degree() const {
    int d = 0;
    for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
    return d;
  }
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < order(); ++u)
      for (int v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }
  bool connected() const {
    if (adj_.empty()) return true;
    std::vector<char> seen(adj_.size(), 0);
    std::vector<int> st{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!st.empty()) {
      const int u = st.back();
      st.pop_back();
      for (int w : adj_[u])
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          st.push_back(w);
        }
    }
    return count == adj_.size();
  }

 private:
  std::vector<std::vector<int>> adj_;
};

/// Dual graph of the exceptional curves of a chain; vertex i is node i.
inline Graph dual_graph(const BlowupChain& chain) {
  return Graph(static_cast<int>(chain.nodes.size()), {chain.edges.begin(), chain.edges.end()});
}

/// (3^l - 1) / 2
inline std::int64_t chain_order_bound(int l) {
  if (l < 1 || l > 39) throw InputError("chain length out of range");
  std::int64_t p = 1;
  for (int i = 0; i < l; ++i) p *= 3;
  return (p - 1) / 2;
}

/// v first, consecutive vertices adjacent, no other adjacencies, no repeats.
inline bool is_induced_path(const Graph& g, const std::vector<int>& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0 || p[i] >= g.order()) return false;
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[i] == p[j]) return false;
      if (g.has_edge(p[i], p[j]) != (j == i + 1)) return false;
    }
  }
  return true;
}

enum class ChainRoute { kRecursive, kShortestPath, kExhaustive, kNone };

inline const char* route_name(ChainRoute r) {
  switch (r) {
    case ChainRoute::kRecursive: return "recursive";
    case ChainRoute::kShortestPath: return "shortest-path";
    case ChainRoute::kExhaustive: return "exhaustive";
    case ChainRoute::kNone: return "none";
  }
  return "none";
}

struct ChainSearch {
  std::optional<std::vector<int>> path;
  ChainRoute route = ChainRoute::kNone;
};

namespace detail {

/// Remove v, keep its largest remaining component (ties: the one holding the
/// smallest neighbour of v), continue from v's smallest neighbour there.
inline std::optional<std::vector<int>> split_recursion(const Graph& g, std::vector<char> alive, int v, int l) {
  if (l == 1) return std::vector<int>{v};
  alive[v] = 0;
  std::vector<int> comp(g.order(), -1);
  std::vector<int> size;
  for (int s : g.neighbors(v)) {
    if (!alive[s] || comp[s] >= 0) continue;
    const int c = static_cast<int>(size.size());
    size.push_back(0);
    std::vector<int> st{s};
    comp[s] = c;
    while (!st.empty()) {
      const int u = st.back();
      st.pop_back();
      ++size[c];
      for (int w : g.neighbors(u))
        if (alive[w] && comp[w] < 0) {
          comp[w] = c;
          st.push_back(w);
        }
    }
  }
  if (size.empty()) return std::nullopt;
  const int best = static_cast<int>(std::max_element(size.begin(), size.end()) - size.begin());
  int next = -1;
  for (int s : g.neighbors(v))
    if (alive[s] && comp[s] == best) {
      next = s;
      break;
    }
  for (int u = 0; u < g.order(); ++u)
    if (comp[u] != best) alive[u] = 0;
  auto rest = split_recursion(g, std::move(alive), next, l - 1);
  if (!rest) return std::nullopt;
  rest->insert(rest->begin(), v);
  return rest;
}

inline std::optional<std::vector<int>> shortest_path_route(const Graph& g, int v, int l) {
  std::vector<int> dist(g.order(), -1), par(g.order(), -1);
  std::deque<int> q{v};
  dist[v] = 0;
  while (!q.empty()) {
    const int u = q.front();
    q.pop_front();
    if (dist[u] == l - 1) {
      std::vector<int> p;
      for (int w = u; w >= 0; w = par[w]) p.push_back(w);
      std::reverse(p.begin(), p.end());
      return p;
    }
    for (int w : g.neighbors(u))
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        par[w] = u;
        q.push_back(w);
      }
  }
  return std::nullopt;
}

inline std::optional<std::vector<int>> exhaustive_route(const Graph& g, int v, int l) {
  std::vector<int> p{v};
  std::function<bool()> rec = [&]() {
    if (static_cast<int>(p.size()) == l) return true;
    for (int w : g.neighbors(p.back())) {
      bool ok = true;
      for (std::size_t i = 0; i + 1 < p.size() && ok; ++i) ok = p[i] != w && !g.has_edge(p[i], w);
      if (!ok || w == p.back()) continue;
      p.push_back(w);
      if (rec()) return true;
      p.pop_back();
    }
    return false;
  };
  if (rec()) return p;
  return std::nullopt;
}

}  // namespace detail

/// Induced path of l vertices starting at v. Tries the component-splitting
/// recursion first, then a BFS shortest path (always induced), then an
/// exhaustive search; empty only if no such path exists.
inline ChainSearch find_chain_in_graph(const Graph& g, int v, int l) {
  if (v < 0 || v >= g.order()) throw InputError("graphchain: vertex " + std::to_string(v) + " is not in the graph");
  if (l < 1) throw InputError("graphchain: length must be >= 1");
  if (g.max_degree() > 3) throw InputError("graphchain: a vertex has degree > 3");
  if (!g.connected()) throw InputError("graphchain: graph is not connected");
  ChainSearch r;
  if (auto p = detail::split_recursion(g, std::vector<char>(g.order(), 1), v, l); p && is_induced_path(g, *p)) {
    r.path = std::move(p);
    r.route = ChainRoute::kRecursive;
  } else if (auto q = detail::shortest_path_route(g, v, l)) {
    r.path = std::move(q);
    r.route = ChainRoute::kShortestPath;
  } else if (auto e = detail::exhaustive_route(g, v, l)) {
    r.path = std::move(e);
    r.route = ChainRoute::kExhaustive;
  }
  return r;
}

}  // namespace mldlab
