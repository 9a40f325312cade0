#pragma once

// Hom-sets of the path category: directed edge paths modulo the relation
// d1(t) ~ d2(t) d0(t) for every 2-simplex t.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <vector>

#include "pvtopo/error.hpp"
#include "pvtopo/sset.hpp"

namespace pvtopo {

// A path stored as its vertex sequence; edges are consecutive pairs. A
// single vertex is the identity.
struct EdgePath {
  std::vector<VertexId> vertices;

  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  auto operator<=>(const EdgePath&) const = default;
};

// Shortest first, then lexicographic.
inline bool canonical_less(const EdgePath& a, const EdgePath& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return a.vertices < b.vertices;
}

inline std::vector<EdgePath> edge_paths(const OrderedSSet& x, VertexId a, VertexId b) {
  x.require_vertex(a);
  x.require_vertex(b);
  std::vector<EdgePath> out;
  EdgePath current{{a}};
  auto dfs = [&](auto&& self, VertexId v) -> void {
    if (v == b) {
      out.push_back(current);
      return;
    }
    for (VertexId w : x.successors(v)) {
      if (w > b) continue;
      current.vertices.push_back(w);
      self(self, w);
      current.vertices.pop_back();
    }
  };
  dfs(dfs, a);
  return out;
}

struct HomClasses {
  // Each class sorted canonically; classes ordered by representative.
  std::vector<std::vector<EdgePath>> classes;

  std::size_t size() const { return classes.size(); }
  const EdgePath& representative(std::size_t k) const { return classes.at(k).front(); }
};

// Finest partition of the edge paths a -> b closed under replacing an edge
// (u,w) by (u,v),(v,w) whenever (u,v,w) is a 2-simplex.
inline HomClasses hom_classes(const OrderedSSet& x, VertexId a, VertexId b) {
  std::vector<EdgePath> paths = edge_paths(x, a, b);
  std::map<std::vector<VertexId>, std::size_t> index;
  for (std::size_t k = 0; k < paths.size(); ++k) index.emplace(paths[k].vertices, k);

  std::vector<std::size_t> parent(paths.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };

  // middle vertices v of triangles (u,v,w), keyed by the edge (u,w)
  std::map<std::pair<VertexId, VertexId>, std::vector<VertexId>> fillers;
  for (const Chain& t : x.simplices(2)) fillers[{t[0], t[2]}].push_back(t[1]);

  for (std::size_t k = 0; k < paths.size(); ++k) {
    const auto& vs = paths[k].vertices;
    for (std::size_t e = 0; e + 1 < vs.size(); ++e) {
      auto it = fillers.find({vs[e], vs[e + 1]});
      if (it == fillers.end()) continue;
      for (VertexId mid : it->second) {
        std::vector<VertexId> longer(vs.begin(), vs.begin() + static_cast<std::ptrdiff_t>(e) + 1);
        longer.push_back(mid);
        longer.insert(longer.end(), vs.begin() + static_cast<std::ptrdiff_t>(e) + 1, vs.end());
        std::size_t other = index.at(longer);
        std::size_t ru = find(k), rv = find(other);
        if (ru != rv) parent[std::max(ru, rv)] = std::min(ru, rv);
      }
    }
  }

  std::map<std::size_t, std::vector<EdgePath>> grouped;
  for (std::size_t k = 0; k < paths.size(); ++k) grouped[find(k)].push_back(paths[k]);
  HomClasses out;
  for (auto& [root, members] : grouped) {
    std::sort(members.begin(), members.end(), canonical_less);
    out.classes.push_back(std::move(members));
  }
  std::sort(out.classes.begin(), out.classes.end(),
            [](const auto& l, const auto& r) { return canonical_less(l.front(), r.front()); });
  return out;
}

}  // namespace pvtopo
