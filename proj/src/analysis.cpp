// SPDX-License-Identifier: Apache-2.0
#include "mdr/analysis.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <queue>

namespace mdr {

int c_min(const Mdfg& g) {
  if (g.nodes.empty()) throw ValidationError("c_min: empty graph");
  int m = 0;
  for (const auto& n : g.nodes) m = std::max(m, n.comp_time);
  return m;
}

int cycle_period(const Mdfg& g) {
  size_t n = g.nodes.size();
  if (n == 0) return 0;
  auto idx = g.node_index_map();
  std::vector<std::vector<size_t>> adj(n);
  std::vector<int> indeg(n, 0);
  for (const auto& e : g.edges) {
    if (!e.delay.is_zero()) continue;
    size_t s = idx.at(e.src), d = idx.at(e.dst);
    adj[s].push_back(d);
    indeg[d]++;
  }
  // Kahn + longest path ending at each node.
  std::vector<size_t> order;
  std::vector<int> deg = indeg;
  for (size_t u = 0; u < n; ++u)
    if (deg[u] == 0) order.push_back(u);
  for (size_t h = 0; h < order.size(); ++h)
    for (size_t v : adj[order[h]])
      if (--deg[v] == 0) order.push_back(v);
  if (order.size() != n)
    throw ValidationError("cycle_period: zero-delay cycle");

  std::vector<int> best(n, 0);
  for (size_t u = 0; u < n; ++u) best[u] = g.nodes[u].comp_time;
  int period = 0;
  for (size_t u_ : order) {
    period = std::max(period, best[u_]);
    for (size_t v : adj[u_])
      best[v] = std::max(best[v], best[u_] + g.nodes[v].comp_time);
  }
  for (size_t u = 0; u < n; ++u) period = std::max(period, best[u]);
  assert(g.nodes.empty() || period >= c_min(g));
  return period;
}

Mdfg zero_delay_subgraph(const Mdfg& g) {
  Mdfg z;
  z.dimension = g.dimension;
  z.nodes = g.nodes;
  for (const auto& e : g.edges)
    if (e.delay.is_zero()) z.edges.push_back(e);
  return z;
}

CellDependencyGraph build_cdg(const Mdfg& g, const IterationBounds& bounds) {
  if (bounds.dim() != g.dimension)
    throw ValidationError("build_cdg: bounds dimension mismatch");
  if (bounds.symbolic())
    throw ValidationError("build_cdg: concrete bounds required");

  long long total = 1;
  for (int j = 0; j < bounds.dim(); ++j) {
    total *= bounds.size(j);
    if (total > kMaxCdgCells)
      throw MdrError("build_cdg: cell count exceeds " + std::to_string(kMaxCdgCells));
  }

  CellDependencyGraph cdg;
  cdg.cells.reserve(static_cast<size_t>(total));
  std::vector<long long> cur = bounds.lower;
  for (;;) {
    cdg.cells.push_back(cur);
    int j = bounds.dim() - 1;
    while (j >= 0 && cur[j] == bounds.upper[j]) {
      cur[j] = bounds.lower[j];
      --j;
    }
    if (j < 0) break;
    ++cur[j];
  }

  auto cell_index = [&](const std::vector<long long>& c) -> long long {
    long long pos = 0;
    for (int j = 0; j < bounds.dim(); ++j) {
      if (c[j] < bounds.lower[j] || c[j] > bounds.upper[j]) return -1;
      pos = pos * bounds.size(j) + (c[j] - bounds.lower[j]);
    }
    return pos;
  };

  for (const auto& e : g.edges) {
    if (e.delay.is_zero()) continue;
    for (size_t p = 0; p < cdg.cells.size(); ++p) {
      std::vector<long long> q = cdg.cells[p];
      for (int j = 0; j < bounds.dim(); ++j) q[j] += e.delay[j];
      long long qi = cell_index(q);
      if (qi >= 0) cdg.arcs.emplace_back(p, static_cast<size_t>(qi));
    }
  }
  return cdg;
}

bool cdg_acyclic(const CellDependencyGraph& cdg) {
  size_t n = cdg.cells.size();
  std::vector<std::vector<size_t>> adj(n);
  std::vector<int> indeg(n, 0);
  for (auto [a, b] : cdg.arcs) {
    if (a == b) return false;
    adj[a].push_back(b);
    indeg[b]++;
  }
  std::queue<size_t> q;
  for (size_t u = 0; u < n; ++u)
    if (indeg[u] == 0) q.push(u);
  size_t seen = 0;
  while (!q.empty()) {
    size_t u = q.front();
    q.pop();
    ++seen;
    for (size_t v : adj[u])
      if (--indeg[v] == 0) q.push(v);
  }
  return seen == n;
}

std::vector<int> schedule_dim_order(const ScheduleVector& s) {
  std::vector<int> order(static_cast<size_t>(s.dim()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return std::abs(s[a]) > std::abs(s[b]);
  });
  return order;
}

bool lex_positive(const DelayVector& d, const std::vector<int>& dim_order) {
  for (int k : dim_order) {
    if (d[k] > 0) return true;
    if (d[k] < 0) return false;
  }
  return false;
}

bool is_realizable(const Mdfg& g, const ScheduleVector& s, const IterationBounds& bounds) {
  if (s.dim() != g.dimension) return false;
  auto order = schedule_dim_order(s);
  for (const auto& e : g.edges) {
    if (dot(s, e.delay) < 0) return false;
    if (!e.delay.is_zero() && !lex_positive(e.delay, order)) return false;
  }
  long long total = 1;
  for (int j = 0; j < bounds.dim(); ++j) {
    total *= bounds.size(j);
    if (total > kMaxCdgCells) return true;  // local rules only beyond the cap
  }
  return cdg_acyclic(build_cdg(g, bounds));
}

}  // namespace mdr
