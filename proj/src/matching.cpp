#include "relaxmatch/matching.hpp"

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <limits>
#include <queue>

#include "relaxmatch/errors.hpp"

namespace relaxmatch {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

// Compressed adjacency; relies on the canonical edge order, so the slice for
// agent a lists its resources in ascending order.
struct Adjacency {
  std::vector<std::size_t> start;
  const std::vector<Edge>* edges;

  explicit Adjacency(const BipartiteGraph& graph) : edges(&graph.edges) {
    start.assign(graph.left_count + 1, 0);
    for (const Edge& edge : graph.edges) ++start[edge.agent + 1];
    for (std::size_t i = 1; i < start.size(); ++i) start[i] += start[i - 1];
  }
};

}  // namespace

BipartiteGraph base_graph(const Instance& instance) {
  return BipartiteGraph{instance.agent_count(), instance.resource_count(), instance.compatible()};
}

BipartiteGraph graph_with(const Instance& instance, const Relaxation& relaxation) {
  BipartiteGraph graph{instance.agent_count(), instance.resource_count(), {}};
  graph.edges.reserve(instance.compatible().size() + relaxation.size());
  std::merge(instance.compatible().begin(), instance.compatible().end(), relaxation.begin(),
             relaxation.end(), std::back_inserter(graph.edges));
  return graph;
}

Matching max_cardinality_matching(const BipartiteGraph& graph) {
  Adjacency adj(graph);
  std::vector<std::uint32_t> mate_left(graph.left_count, kNone);
  std::vector<std::uint32_t> mate_right(graph.right_count, kNone);
  std::vector<std::uint32_t> dist(graph.left_count);
  constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

  auto bfs = [&]() {
    std::queue<std::uint32_t> queue;
    bool reachable_free = false;
    for (std::uint32_t u = 0; u < graph.left_count; ++u) {
      if (mate_left[u] == kNone) {
        dist[u] = 0;
        queue.push(u);
      } else {
        dist[u] = kInf;
      }
    }
    while (!queue.empty()) {
      std::uint32_t u = queue.front();
      queue.pop();
      for (std::size_t i = adj.start[u]; i < adj.start[u + 1]; ++i) {
        std::uint32_t v = (*adj.edges)[i].resource;
        std::uint32_t w = mate_right[v];
        if (w == kNone) {
          reachable_free = true;
        } else if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          queue.push(w);
        }
      }
    }
    return reachable_free;
  };

  auto dfs = [&](auto&& self, std::uint32_t u) -> bool {
    for (std::size_t i = adj.start[u]; i < adj.start[u + 1]; ++i) {
      std::uint32_t v = (*adj.edges)[i].resource;
      std::uint32_t w = mate_right[v];
      if (w == kNone || (dist[w] == dist[u] + 1 && self(self, w))) {
        mate_left[u] = v;
        mate_right[v] = u;
        return true;
      }
    }
    dist[u] = kInf;
    return false;
  };

  while (bfs()) {
    for (std::uint32_t u = 0; u < graph.left_count; ++u)
      if (mate_left[u] == kNone) dfs(dfs, u);
  }

  Matching matching;
  for (std::uint32_t u = 0; u < graph.left_count; ++u)
    if (mate_left[u] != kNone) matching.push_back(Edge{u, mate_left[u]});
  return matching;
}

std::size_t max_matching_size(const BipartiteGraph& graph) {
  return max_cardinality_matching(graph).size();
}

std::vector<std::uint32_t> guaranteed_agents(const BipartiteGraph& graph) {
  Matching matching = max_cardinality_matching(graph);
  std::vector<std::uint32_t> mate_left(graph.left_count, kNone);
  std::vector<std::uint32_t> mate_right(graph.right_count, kNone);
  for (const Edge& edge : matching) {
    mate_left[edge.agent] = edge.resource;
    mate_right[edge.resource] = edge.agent;
  }

  // An agent is dispensable exactly when an alternating path from some
  // unmatched agent reaches it (non-matching edge into a resource, matching
  // edge back to its mate). Everything else that is matched is guaranteed.
  Adjacency adj(graph);
  std::vector<char> agent_reached(graph.left_count, 0);
  std::vector<char> resource_seen(graph.right_count, 0);
  std::queue<std::uint32_t> queue;
  for (std::uint32_t u = 0; u < graph.left_count; ++u) {
    if (mate_left[u] == kNone) {
      agent_reached[u] = 1;
      queue.push(u);
    }
  }
  while (!queue.empty()) {
    std::uint32_t u = queue.front();
    queue.pop();
    for (std::size_t i = adj.start[u]; i < adj.start[u + 1]; ++i) {
      std::uint32_t v = (*adj.edges)[i].resource;
      if (v == mate_left[u] || resource_seen[v]) continue;
      resource_seen[v] = 1;
      std::uint32_t w = mate_right[v];
      if (w != kNone && !agent_reached[w]) {
        agent_reached[w] = 1;
        queue.push(w);
      }
    }
  }

  std::vector<std::uint32_t> guaranteed;
  for (std::uint32_t u = 0; u < graph.left_count; ++u)
    if (mate_left[u] != kNone && !agent_reached[u]) guaranteed.push_back(u);
  return guaranteed;
}

std::vector<std::uint32_t> gamma_bruteforce(const BipartiteGraph& graph, std::size_t size_cap) {
  if (graph.left_count + graph.right_count > size_cap)
    throw CapExceeded("gamma_bruteforce: graph has " +
                      std::to_string(graph.left_count + graph.right_count) +
                      " vertices, cap is " + std::to_string(size_cap));

  // Self-contained enumeration of every matching; intersects the matched
  // agent sets of the maximum-size ones. Deliberately shares no code with
  // the augmenting-path implementation it serves as an oracle for.
  Adjacency adj(graph);
  std::vector<char> resource_used(graph.right_count, 0);
  std::vector<std::uint32_t> matched;
  std::vector<char> in_all(graph.left_count, 0);
  std::size_t best = 0;
  bool seen_any = false;

  auto recurse = [&](auto&& self, std::uint32_t agent) -> void {
    if (matched.size() + (graph.left_count - agent) < best) return;
    if (agent == graph.left_count) {
      if (seen_any && matched.size() < best) return;
      if (!seen_any || matched.size() > best) {
        best = matched.size();
        seen_any = true;
        std::fill(in_all.begin(), in_all.end(), 0);
        for (std::uint32_t a : matched) in_all[a] = 1;
      } else {
        std::vector<char> here(graph.left_count, 0);
        for (std::uint32_t a : matched) here[a] = 1;
        for (std::uint32_t a = 0; a < graph.left_count; ++a) in_all[a] &= here[a];
      }
      return;
    }
    self(self, agent + 1);
    for (std::size_t i = adj.start[agent]; i < adj.start[agent + 1]; ++i) {
      std::uint32_t v = (*adj.edges)[i].resource;
      if (resource_used[v]) continue;
      resource_used[v] = 1;
      matched.push_back(agent);
      self(self, agent + 1);
      matched.pop_back();
      resource_used[v] = 0;
    }
  };
  recurse(recurse, 0);

  std::vector<std::uint32_t> guaranteed;
  for (std::uint32_t a = 0; a < graph.left_count; ++a)
    if (in_all[a]) guaranteed.push_back(a);
  return guaranteed;
}

namespace {

// O(n^3) assignment on a dense square cost matrix (row potentials u, column
// potentials v). Returns, per column j, the 1-based row assigned to it.
template <typename W>
std::vector<std::size_t> hungarian_square(std::size_t n, const std::vector<W>& cost,
                                          const W& inf) {
  std::vector<W> u(n + 1, W(0)), v(n + 1, W(0)), minv(n + 1, W(0));
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::fill(minv.begin(), minv.end(), inf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      std::size_t i0 = p[j0];
      std::size_t j1 = 0;
      W delta = inf;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        W cur = cost[(i0 - 1) * n + (j - 1)] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  return p;
}

template <typename W>
std::vector<std::size_t> solve_assignment(std::size_t n, const std::vector<WeightedEdge>& edges,
                                          const BigInt& max_weight) {
  // Benefit matrix padded with zeros; minimise (max_weight - benefit).
  std::vector<W> cost(n * n, static_cast<W>(max_weight));
  for (const WeightedEdge& e : edges)
    cost[static_cast<std::size_t>(e.edge.agent) * n + e.edge.resource] =
        static_cast<W>(max_weight - e.weight);
  W inf = static_cast<W>((max_weight + 1) * BigInt(n + 2) * 4);
  return hungarian_square<W>(n, cost, inf);
}

}  // namespace

WeightedMatching max_weight_matching(const WeightedGraph& graph) {
  std::vector<WeightedEdge> positive;
  positive.reserve(graph.edges.size());
  BigInt max_weight = 0;
  for (const WeightedEdge& edge : graph.edges) {
    if (edge.weight > 0) {
      positive.push_back(edge);
      if (edge.weight > max_weight) max_weight = edge.weight;
    }
  }
  if (positive.empty()) return WeightedMatching{{}, 0};

  std::size_t n = std::max(graph.left_count, graph.right_count);
  BigInt head_room = (max_weight + 1) * BigInt(n + 2) * 8;
  std::vector<std::size_t> assignment =
      head_room < (BigInt(1) << 62)
          ? solve_assignment<long long>(n, positive, max_weight)
          : solve_assignment<BigInt>(n, positive, max_weight);

  // assignment[j] = 1-based row matched to column j; keep real positive edges.
  std::vector<std::uint32_t> row_to_col(n, kNone);
  for (std::size_t j = 1; j <= n; ++j)
    if (assignment[j] != 0) row_to_col[assignment[j] - 1] = static_cast<std::uint32_t>(j - 1);

  WeightedMatching result;
  result.total_weight = 0;
  for (const WeightedEdge& edge : positive) {
    if (row_to_col[edge.edge.agent] == edge.edge.resource) {
      result.matching.push_back(edge.edge);
      result.total_weight += edge.weight;
    }
  }
  return result;
}

}  // namespace relaxmatch
