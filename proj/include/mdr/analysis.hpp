// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mdr/graph.hpp"

namespace mdr {

/// Largest materialized iteration space for the cell dependency graph.
inline constexpr long long kMaxCdgCells = 1'000'000;

/// Maximum node computation time: the floor every cycle period sits on.
int c_min(const Mdfg& g);

/// Longest node-weighted path over the zero-delay subgraph (single nodes
/// count as paths). Throws ValidationError on a zero-delay cycle.
int cycle_period(const Mdfg& g);

/// Same nodes, only the edges whose delay is the zero vector.
Mdfg zero_delay_subgraph(const Mdfg& g);

/// Iteration-space graph: one cell per in-bounds index tuple, one arc per
/// (nonzero-delay edge, cell) pair whose shifted endpoint stays in bounds.
struct CellDependencyGraph {
  std::vector<std::vector<long long>> cells;       // lexicographic order
  std::vector<std::pair<size_t, size_t>> arcs;     // indices into cells
};

CellDependencyGraph build_cdg(const Mdfg& g, const IterationBounds& bounds);

bool cdg_acyclic(const CellDependencyGraph& cdg);

/// Dimensions ordered for execution under schedule s: descending |s[k]|,
/// ties by lower index. This is the loop nesting order the code generator
/// uses (outermost first).
std::vector<int> schedule_dim_order(const ScheduleVector& s);

/// True iff d is lexicographically positive when its components are read
/// in the given dimension order; i.e. the dependence points forward under
/// nested-loop execution in that order.
bool lex_positive(const DelayVector& d, const std::vector<int>& dim_order);

/// Legality of executing g under schedule s within bounds: s.d(e) >= 0 for
/// every edge, every nonzero delay executable in schedule-major order, and
/// an acyclic cell dependency graph (skipped above kMaxCdgCells, where the
/// local rules stand alone).
bool is_realizable(const Mdfg& g, const ScheduleVector& s, const IterationBounds& bounds);

}  // namespace mdr
