#pragma once

// Reachability diagnostics on the directed 1-skeleton of a model.

#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

#include "pvtopo/sset.hpp"

namespace pvtopo {

struct StateReport {
  std::vector<VertexId> valid;
  std::vector<VertexId> reachable;
  std::vector<VertexId> coreachable;
  std::vector<VertexId> deadlocks;
  std::vector<VertexId> unreachable;
  // reachable, cannot reach the final state, and not final itself
  std::vector<VertexId> doomed;
};

// Vertices other than `final` with no outgoing edge.
inline std::vector<VertexId> deadlocks(const OrderedSSet& x, std::optional<VertexId> final) {
  std::vector<VertexId> out;
  for (std::size_t r = 0; r < x.num_vertices(); ++r) {
    VertexId v{static_cast<std::int32_t>(r)};
    if (v != final && x.successors(v).empty()) out.push_back(v);
  }
  return out;
}

namespace detail {

template <typename Next>
std::vector<char> flood(std::size_t n, VertexId start, Next&& next) {
  std::vector<char> seen(n, 0);
  std::deque<VertexId> queue{start};
  seen[static_cast<std::size_t>(start.rank)] = 1;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : next(v))
      if (!seen[static_cast<std::size_t>(w.rank)]) {
        seen[static_cast<std::size_t>(w.rank)] = 1;
        queue.push_back(w);
      }
  }
  return seen;
}

}  // namespace detail

// `final` may be absent from the model (an unbalanced program can make its
// terminal state invalid); then nothing is co-reachable.
inline StateReport reachability(const OrderedSSet& x, VertexId initial, std::optional<VertexId> final) {
  x.require_vertex(initial);
  if (final) x.require_vertex(*final);
  const std::size_t n = x.num_vertices();
  auto fwd = detail::flood(n, initial, [&](VertexId v) -> const auto& { return x.successors(v); });
  std::vector<char> back(n, 0);
  if (final) back = detail::flood(n, *final, [&](VertexId v) -> const auto& { return x.predecessors(v); });

  StateReport rep;
  rep.deadlocks = deadlocks(x, final);
  for (std::size_t r = 0; r < n; ++r) {
    VertexId v{static_cast<std::int32_t>(r)};
    rep.valid.push_back(v);
    if (fwd[r]) rep.reachable.push_back(v);
    else rep.unreachable.push_back(v);
    if (back[r]) rep.coreachable.push_back(v);
    if (fwd[r] && !back[r] && (!final || v != *final)) rep.doomed.push_back(v);
  }
  return rep;
}

}  // namespace pvtopo
