#pragma once

// Finite ordered simplicial sets stored by their nondegenerate simplices.
//
// A nondegenerate simplex of an ordered simplicial set is determined by its
// vertex set, so it is stored as a strictly increasing chain of vertex
// ranks. Degenerate simplices are never materialized.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pvtopo/error.hpp"

namespace pvtopo {

// A vertex is addressed by its rank in the linear extension chosen when
// the complex was built.
struct VertexId {
  std::int32_t rank = 0;
  auto operator<=>(const VertexId&) const = default;
};

using Chain = std::vector<VertexId>;

inline std::size_t dimension(const Chain& c) { return c.empty() ? 0 : c.size() - 1; }

// d_i: remove the i-th vertex.
inline Chain face(const Chain& c, std::size_t i) {
  if (c.size() < 2 || i >= c.size())
    throw Error(ErrorKind::IndexOutOfRange,
                "face index " + std::to_string(i) + " on a chain of dimension " +
                    std::to_string(dimension(c)));
  Chain out;
  out.reserve(c.size() - 1);
  for (std::size_t t = 0; t < c.size(); ++t)
    if (t != i) out.push_back(c[t]);
  return out;
}

inline bool is_strictly_increasing(const Chain& c) {
  return std::adjacent_find(c.begin(), c.end(), [](VertexId a, VertexId b) { return !(a < b); }) ==
         c.end();
}

struct ChainHash {
  std::size_t operator()(const Chain& c) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (VertexId v : c) {
      h ^= static_cast<std::uint32_t>(v.rank);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

class OrderedSSet {
 public:
  OrderedSSet() = default;

  // Downward closure of `generators` over vertices named `names` (indexed by
  // rank). Every generator must be strictly increasing.
  static OrderedSSet from_chains(std::vector<std::string> names, std::span<const Chain> generators) {
    OrderedSSet x;
    x.names_ = std::move(names);
    const auto n = static_cast<std::int32_t>(x.names_.size());
    for (std::size_t i = 0; i < x.names_.size(); ++i) {
      if (!x.by_name_.emplace(x.names_[i], VertexId{static_cast<std::int32_t>(i)}).second)
        throw Error(ErrorKind::InvalidInput, "duplicate vertex name '" + x.names_[i] + "'");
    }

    std::vector<std::unordered_map<Chain, std::size_t, ChainHash>> seen(1);
    auto insert = [&](Chain c) {
      std::size_t d = dimension(c);
      if (seen.size() <= d) seen.resize(d + 1);
      seen[d].emplace(std::move(c), 0);
    };
    for (std::int32_t v = 0; v < n; ++v) insert(Chain{VertexId{v}});

    for (const Chain& g : generators) {
      if (g.empty()) continue;
      for (VertexId v : g)
        if (v.rank < 0 || v.rank >= n)
          throw Error(ErrorKind::UnknownVertex, "rank " + std::to_string(v.rank));
      if (!is_strictly_increasing(g))
        throw Error(ErrorKind::PreconditionViolated, "generator is not strictly increasing");
      if (g.size() > kMaxGeneratorSize)
        throw Error(ErrorKind::InvalidInput,
                    "simplex of dimension " + std::to_string(dimension(g)) + " is too large");
      std::size_t d = dimension(g);
      if (seen.size() > d && seen[d].count(g)) continue;
      // all nonempty subchains
      const std::uint32_t full = (1u << g.size()) - 1;
      for (std::uint32_t mask = 1; mask <= full; ++mask) {
        Chain sub;
        for (std::size_t t = 0; t < g.size(); ++t)
          if (mask & (1u << t)) sub.push_back(g[t]);
        insert(std::move(sub));
      }
    }

    x.simplices_.resize(seen.size());
    for (std::size_t d = 0; d < seen.size(); ++d) {
      auto& level = x.simplices_[d];
      level.reserve(seen[d].size());
      for (auto& [c, _] : seen[d]) level.push_back(c);
      std::sort(level.begin(), level.end());
    }
    while (x.simplices_.size() > 1 && x.simplices_.back().empty()) x.simplices_.pop_back();
    x.rebuild_index();
    return x;
  }

  std::size_t num_vertices() const { return names_.size(); }
  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::string& name(VertexId v) const { return names_.at(static_cast<std::size_t>(v.rank)); }

  std::optional<VertexId> find_vertex(std::string_view name) const {
    auto it = by_name_.find(std::string(name));
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
  }

  VertexId vertex(std::string_view name) const {
    auto v = find_vertex(name);
    if (!v) throw Error(ErrorKind::UnknownVertex, "no vertex named '" + std::string(name) + "'");
    return *v;
  }

  bool has_vertex(VertexId v) const {
    return v.rank >= 0 && static_cast<std::size_t>(v.rank) < names_.size();
  }

  void require_vertex(VertexId v) const {
    if (!has_vertex(v)) throw Error(ErrorKind::UnknownVertex, "rank " + std::to_string(v.rank));
  }

  // Highest dimension with a stored simplex; 0 for the empty complex.
  std::size_t top_dimension() const { return simplices_.empty() ? 0 : simplices_.size() - 1; }

  // Simplices of dimension `d` in lexicographic order of ranks.
  std::span<const Chain> simplices(std::size_t d) const {
    if (d >= simplices_.size()) return {};
    return simplices_[d];
  }

  std::size_t count(std::size_t d) const { return simplices(d).size(); }
  std::size_t size(std::size_t d) const { return count(d); }

  std::vector<std::size_t> f_vector() const {
    std::vector<std::size_t> f;
    for (const auto& level : simplices_) f.push_back(level.size());
    return f;
  }

  bool contains(const Chain& c) const { return index_of(c).has_value(); }

  // Position of `c` within simplices(dimension(c)).
  std::optional<std::size_t> index_of(const Chain& c) const {
    if (c.empty()) return std::nullopt;
    std::size_t d = dimension(c);
    if (d >= index_.size()) return std::nullopt;
    auto it = index_[d].find(c);
    if (it == index_[d].end()) return std::nullopt;
    return it->second;
  }

  // The i-th face of simplex `k` of dimension `d`, as an index into dimension d-1.
  std::size_t face_index(std::size_t d, std::size_t k, std::size_t i) const {
    return *index_of(face(simplices_[d][k], i));
  }

  // Simplices of dimension >= 1 whose minimum vertex is v, ordered by
  // dimension and then lexicographically.
  std::vector<Chain> simplices_from(VertexId v) const {
    require_vertex(v);
    std::vector<Chain> out;
    for (std::size_t d = 1; d < simplices_.size(); ++d) {
      const auto& level = simplices_[d];
      auto lo = std::lower_bound(level.begin(), level.end(), Chain{v});
      for (auto it = lo; it != level.end() && it->front() == v; ++it) out.push_back(*it);
    }
    return out;
  }

  // Out- and in-neighbours in the directed 1-skeleton.
  const std::vector<VertexId>& successors(VertexId v) const {
    return succ_.at(static_cast<std::size_t>(v.rank));
  }
  const std::vector<VertexId>& predecessors(VertexId v) const {
    return pred_.at(static_cast<std::size_t>(v.rank));
  }

  // Simplices that are not a face of any other stored simplex.
  std::vector<Chain> maximal_simplices() const {
    std::vector<Chain> out;
    for (std::size_t d = 0; d < simplices_.size(); ++d) {
      std::vector<char> covered(simplices_[d].size(), 0);
      if (d + 1 < simplices_.size())
        for (const Chain& c : simplices_[d + 1])
          for (std::size_t i = 0; i <= d + 1; ++i) covered[*index_of(face(c, i))] = 1;
      for (std::size_t k = 0; k < simplices_[d].size(); ++k)
        if (!covered[k]) out.push_back(simplices_[d][k]);
    }
    return out;
  }

  std::vector<std::string> names_of(const Chain& c) const {
    std::vector<std::string> out;
    out.reserve(c.size());
    for (VertexId v : c) out.push_back(name(v));
    return out;
  }

 private:
  static constexpr std::size_t kMaxGeneratorSize = 24;

  void rebuild_index() {
    index_.assign(simplices_.size(), {});
    for (std::size_t d = 0; d < simplices_.size(); ++d)
      for (std::size_t k = 0; k < simplices_[d].size(); ++k) index_[d].emplace(simplices_[d][k], k);
    succ_.assign(names_.size(), {});
    pred_.assign(names_.size(), {});
    for (const Chain& e : simplices(1)) {
      succ_[static_cast<std::size_t>(e[0].rank)].push_back(e[1]);
      pred_[static_cast<std::size_t>(e[1].rank)].push_back(e[0]);
    }
    for (auto& p : pred_) std::sort(p.begin(), p.end());
  }

  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> by_name_;
  std::vector<std::vector<Chain>> simplices_;
  std::vector<std::unordered_map<Chain, std::size_t, ChainHash>> index_;
  std::vector<std::vector<VertexId>> succ_;
  std::vector<std::vector<VertexId>> pred_;
};

// Builds the complex generated by `maximal` (vertex-name tuples listed in
// ascending order). Vertex ranks come from a topological sort of the
// precedence the tuples imply, ties broken by first appearance. Names listed
// in `declared` come first in appearance order and may be isolated.
inline OrderedSSet build_complex(const std::vector<std::vector<std::string>>& maximal,
                                 const std::vector<std::string>& declared = {}) {
  std::vector<std::string> order;
  std::unordered_map<std::string, std::size_t> first_seen;
  auto note = [&](const std::string& s) {
    if (first_seen.emplace(s, order.size()).second) order.push_back(s);
  };
  for (const auto& s : declared) note(s);
  for (const auto& tuple : maximal) {
    for (std::size_t i = 0; i < tuple.size(); ++i)
      for (std::size_t j = i + 1; j < tuple.size(); ++j)
        if (tuple[i] == tuple[j])
          throw Error(ErrorKind::DuplicateVertexInSimplex,
                      "vertex '" + tuple[i] + "' repeated in a simplex");
    for (const auto& s : tuple) note(s);
  }

  const std::size_t n = order.size();
  std::vector<std::vector<std::size_t>> out(n);
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& tuple : maximal)
    for (std::size_t i = 0; i + 1 < tuple.size(); ++i) {
      std::size_t u = first_seen[tuple[i]], w = first_seen[tuple[i + 1]];
      out[u].push_back(w);
      ++indegree[w];
    }

  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (indegree[v] == 0) ready.push(v);
  std::vector<std::int32_t> rank(n, -1);
  std::vector<std::string> names;
  names.reserve(n);
  while (!ready.empty()) {
    std::size_t v = ready.top();
    ready.pop();
    rank[v] = static_cast<std::int32_t>(names.size());
    names.push_back(order[v]);
    for (std::size_t w : out[v])
      if (--indegree[w] == 0) ready.push(w);
  }
  if (names.size() != n) {
    std::string stuck;
    for (std::size_t v = 0; v < n; ++v)
      if (rank[v] < 0) stuck += (stuck.empty() ? "" : ", ") + order[v];
    throw Error(ErrorKind::CyclicOrder, "precedence cycle among {" + stuck + "}");
  }

  std::vector<Chain> gens;
  gens.reserve(maximal.size());
  for (const auto& tuple : maximal) {
    Chain c;
    for (const auto& s : tuple) c.push_back(VertexId{rank[first_seen[s]]});
    gens.push_back(std::move(c));
  }
  return OrderedSSet::from_chains(std::move(names), gens);
}

}  // namespace pvtopo
