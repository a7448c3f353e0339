// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "mdr/delay_vector.hpp"
#include "mdr/errors.hpp"

namespace mdr {

enum class StatementOp { add, mul, const_add, const_mul, copy };

std::string to_string(StatementOp op);
std::optional<StatementOp> statement_op_from_string(const std::string& s);

/// Array reference with a constant index offset per loop dimension.
struct ArrayRef {
  std::string array;
  DelayVector offset;
};

/// Assignment template of one computation node. Operand offsets are the
/// negated delays of the node's incoming edges (consumer index minus
/// producer index equals the edge delay).
struct Statement {
  ArrayRef target;
  StatementOp op = StatementOp::copy;
  std::vector<ArrayRef> operands;
  long long constant = 0;
};

struct NodeSpec {
  std::string id;
  int comp_time = 1;
  std::optional<Statement> statement;
};

struct EdgeSpec {
  std::string src;
  std::string dst;
  DelayVector delay;
};

/// Node- and edge-weighted directed graph of a uniform nested loop.
/// Multi-edges are kept as a list; edge identity is its position.
struct Mdfg {
  int dimension = 0;
  std::vector<NodeSpec> nodes;
  std::vector<EdgeSpec> edges;

  const NodeSpec* find_node(const std::string& id) const;
  size_t node_index(const std::string& id) const;  // throws on unknown id
  bool has_node(const std::string& id) const { return find_node(id) != nullptr; }

  std::unordered_map<std::string, size_t> node_index_map() const;
  std::vector<std::vector<size_t>> in_edges_by_node() const;   // node idx -> edge idxs
  std::vector<std::vector<size_t>> out_edges_by_node() const;  // node idx -> edge idxs
};

/// Concrete rectangular iteration bounds, lower[j] <= upper[j]. A dimension
/// may carry a symbolic upper-bound name; such bounds are printable by the
/// code generator but rejected by metrics and simulation.
struct IterationBounds {
  std::vector<long long> lower;
  std::vector<long long> upper;
  std::vector<std::string> upper_symbol;  // empty string = concrete

  IterationBounds() = default;
  IterationBounds(std::vector<long long> lo, std::vector<long long> hi);

  int dim() const { return static_cast<int>(lower.size()); }
  long long size(int j) const { return upper[j] - lower[j] + 1; }
  bool symbolic() const;
  void check_valid() const;  // throws ValidationError
};

/// Returns every broken invariant: dimension consistency, id uniqueness,
/// positive times, edge endpoints, zero-delay cycles. Empty list = valid.
std::vector<std::string> validate(const Mdfg& g);

/// Componentwise delay sum along a walk given as edge indices. The edges
/// must chain head-to-tail; empty walk yields the zero vector.
DelayVector path_delay(const Mdfg& g, const std::vector<size_t>& edge_indices);

/// Total computation time of the listed nodes, endpoints inclusive.
int path_time(const Mdfg& g, const std::vector<std::string>& node_ids);

}  // namespace mdr
