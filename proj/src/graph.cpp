// SPDX-License-Identifier: Apache-2.0
#include "mdr/graph.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace mdr {

std::string to_string(StatementOp op) {
  switch (op) {
    case StatementOp::add: return "add";
    case StatementOp::mul: return "mul";
    case StatementOp::const_add: return "const-add";
    case StatementOp::const_mul: return "const-mul";
    case StatementOp::copy: return "copy";
  }
  return "?";
}

std::optional<StatementOp> statement_op_from_string(const std::string& s) {
  if (s == "add") return StatementOp::add;
  if (s == "mul") return StatementOp::mul;
  if (s == "const-add") return StatementOp::const_add;
  if (s == "const-mul") return StatementOp::const_mul;
  if (s == "copy") return StatementOp::copy;
  return std::nullopt;
}

const NodeSpec* Mdfg::find_node(const std::string& id) const {
  for (const auto& n : nodes)
    if (n.id == id) return &n;
  return nullptr;
}

size_t Mdfg::node_index(const std::string& id) const {
  for (size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].id == id) return i;
  throw ValidationError("unknown node id: " + id);
}

std::unordered_map<std::string, size_t> Mdfg::node_index_map() const {
  std::unordered_map<std::string, size_t> m;
  for (size_t i = 0; i < nodes.size(); ++i) m.emplace(nodes[i].id, i);
  return m;
}

std::vector<std::vector<size_t>> Mdfg::in_edges_by_node() const {
  auto idx = node_index_map();
  std::vector<std::vector<size_t>> in(nodes.size());
  for (size_t e = 0; e < edges.size(); ++e) {
    auto it = idx.find(edges[e].dst);
    if (it != idx.end()) in[it->second].push_back(e);
  }
  return in;
}

std::vector<std::vector<size_t>> Mdfg::out_edges_by_node() const {
  auto idx = node_index_map();
  std::vector<std::vector<size_t>> out(nodes.size());
  for (size_t e = 0; e < edges.size(); ++e) {
    auto it = idx.find(edges[e].src);
    if (it != idx.end()) out[it->second].push_back(e);
  }
  return out;
}

IterationBounds::IterationBounds(std::vector<long long> lo, std::vector<long long> hi)
    : lower(std::move(lo)), upper(std::move(hi)) {
  upper_symbol.assign(lower.size(), "");
  check_valid();
}

bool IterationBounds::symbolic() const {
  for (const auto& s : upper_symbol)
    if (!s.empty()) return true;
  return false;
}

void IterationBounds::check_valid() const {
  std::vector<std::string> bad;
  if (lower.size() != upper.size())
    bad.push_back("bounds: lower/upper length mismatch");
  else
    for (size_t j = 0; j < lower.size(); ++j)
      if ((upper_symbol.size() <= j || upper_symbol[j].empty()) && lower[j] > upper[j])
        bad.push_back("bounds[" + std::to_string(j) + "]: lower exceeds upper");
  if (!bad.empty()) throw ValidationError(bad);
}

namespace {

// DFS over zero-delay edges only; reports one representative cycle.
bool find_zero_delay_cycle(const Mdfg& g, std::string* where) {
  auto idx = g.node_index_map();
  size_t n = g.nodes.size();
  std::vector<std::vector<size_t>> adj(n);
  for (const auto& e : g.edges) {
    if (!e.delay.is_zero()) continue;
    auto s = idx.find(e.src), d = idx.find(e.dst);
    if (s == idx.end() || d == idx.end()) continue;
    if (e.delay.dim() != g.dimension) continue;
    adj[s->second].push_back(d->second);
  }
  std::vector<int> state(n, 0);  // 0 unseen, 1 on stack, 2 done
  std::function<bool(size_t)> dfs = [&](size_t u) -> bool {
    state[u] = 1;
    for (size_t v : adj[u]) {
      if (state[v] == 1) {
        if (where) *where = g.nodes[v].id;
        return true;
      }
      if (state[v] == 0 && dfs(v)) return true;
    }
    state[u] = 2;
    return false;
  };
  for (size_t u = 0; u < n; ++u)
    if (state[u] == 0 && dfs(u)) return true;
  return false;
}

}  // namespace

std::vector<std::string> validate(const Mdfg& g) {
  std::vector<std::string> out;
  if (g.dimension < 1) out.push_back("dimension: must be >= 1");

  std::set<std::string> seen;
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    const auto& n = g.nodes[i];
    std::string at = "nodes[" + std::to_string(i) + "]";
    if (n.id.empty()) out.push_back(at + ": empty id");
    if (!seen.insert(n.id).second) out.push_back(at + ": duplicate id '" + n.id + "'");
    if (n.comp_time < 1) out.push_back(at + ": comp_time must be >= 1");
    if (n.statement) {
      const auto& st = *n.statement;
      if (st.target.offset.dim() != g.dimension)
        out.push_back(at + ".statement.target: offset dimension mismatch");
      for (size_t k = 0; k < st.operands.size(); ++k)
        if (st.operands[k].offset.dim() != g.dimension)
          out.push_back(at + ".statement.operands[" + std::to_string(k) +
                        "]: offset dimension mismatch");
      size_t want = (st.op == StatementOp::add || st.op == StatementOp::mul) ? 2 : 1;
      if (st.operands.size() != want)
        out.push_back(at + ".statement: op '" + to_string(st.op) + "' takes " +
                      std::to_string(want) + " operand(s)");
    }
  }

  for (size_t i = 0; i < g.edges.size(); ++i) {
    const auto& e = g.edges[i];
    std::string at = "edges[" + std::to_string(i) + "]";
    if (!g.has_node(e.src)) out.push_back(at + ": unknown src '" + e.src + "'");
    if (!g.has_node(e.dst)) out.push_back(at + ": unknown dst '" + e.dst + "'");
    if (e.delay.dim() != g.dimension)
      out.push_back(at + ": dimension mismatch (delay has " +
                    std::to_string(e.delay.dim()) + " components, graph has " +
                    std::to_string(g.dimension) + ")");
  }

  std::string where;
  if (find_zero_delay_cycle(g, &where))
    out.push_back("zero-delay cycle through node '" + where + "'");

  return out;
}

DelayVector path_delay(const Mdfg& g, const std::vector<size_t>& edge_indices) {
  DelayVector sum = DelayVector::zero(g.dimension);
  const std::string* at = nullptr;
  for (size_t ei : edge_indices) {
    if (ei >= g.edges.size()) throw ValidationError("edge index out of range");
    const auto& e = g.edges[ei];
    if (at && *at != e.src)
      throw ValidationError("edges do not form a connected walk at '" + e.src + "'");
    sum = sum + e.delay;
    at = &e.dst;
  }
  return sum;
}

int path_time(const Mdfg& g, const std::vector<std::string>& node_ids) {
  int t = 0;
  for (const auto& id : node_ids) {
    const NodeSpec* n = g.find_node(id);
    if (!n) throw ValidationError("unknown node id: " + id);
    t += n->comp_time;
  }
  return t;
}

}  // namespace mdr
