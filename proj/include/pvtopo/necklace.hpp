#pragma once

// Necklaces in an ordered simplicial set and the simplicial mapping spaces
// they span.
//
// A simplex of the mapping space from a to b is a necklace of simplices of X
// running from a to b together with a strictly increasing flag of vertex
// subsets that starts at the joints and ends at all of the necklace's
// vertices. Because X is ordered, the vertices of a necklace are strictly
// increasing in rank and the necklace is recovered from (joints, vertices)
// by splitting at the joints, so the flag alone identifies the simplex.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "pvtopo/error.hpp"
#include "pvtopo/sset.hpp"

namespace pvtopo {

// Sorted by rank.
using VertexSet = std::vector<VertexId>;

struct Necklace {
  VertexId initial;
  VertexId final;
  std::vector<Chain> beads;

  VertexSet joints() const {
    VertexSet out{initial};
    for (const Chain& b : beads) out.push_back(b.back());
    return out;
  }

  VertexSet vertices() const {
    VertexSet out{initial};
    for (const Chain& b : beads) out.insert(out.end(), b.begin() + 1, b.end());
    return out;
  }

  std::vector<std::size_t> shape() const {
    std::vector<std::size_t> out;
    for (const Chain& b : beads) out.push_back(dimension(b));
    return out;
  }

  bool operator==(const Necklace&) const = default;
};

// Splits the sorted vertex set `verts` at `joints`; each piece must be a
// simplex of X.
inline Necklace necklace_from_sets(const OrderedSSet& x, const VertexSet& joints, const VertexSet& verts) {
  if (joints.empty() || verts.empty() || joints.front() != verts.front() || joints.back() != verts.back())
    throw Error(ErrorKind::PreconditionViolated, "joints must contain both ends of the vertex set");
  Necklace n{verts.front(), verts.back(), {}};
  std::size_t j = 1;
  Chain bead{verts.front()};
  for (std::size_t t = 1; t < verts.size(); ++t) {
    bead.push_back(verts[t]);
    if (j < joints.size() && verts[t] == joints[j]) {
      if (!x.contains(bead))
        throw Error(ErrorKind::PreconditionViolated, "bead is not a simplex of the complex");
      n.beads.push_back(std::move(bead));
      bead = Chain{verts[t]};
      ++j;
    }
  }
  if (j != joints.size() || bead.size() != 1)
    throw Error(ErrorKind::PreconditionViolated, "joints are not a subset of the vertex set");
  return n;
}

// All necklaces from a to b, in depth-first order over simplices_from.
inline std::vector<Necklace> enumerate_necklaces(const OrderedSSet& x, VertexId a, VertexId b) {
  x.require_vertex(a);
  x.require_vertex(b);
  std::vector<Necklace> out;
  if (a == b) {
    out.push_back({a, b, {}});
    return out;
  }
  std::vector<char> used(x.num_vertices(), 0);
  std::vector<Chain> beads;
  auto dfs = [&](auto&& self, VertexId v) -> void {
    if (v == b) {
      out.push_back({a, b, beads});
      return;
    }
    // beads must end at or before b
    for (const Chain& s : x.simplices_from(v)) {
      if (s.back() > b) continue;
      bool clash = false;
      for (std::size_t t = 1; t < s.size() && !clash; ++t) clash = used[static_cast<std::size_t>(s[t].rank)];
      if (clash) continue;
      for (std::size_t t = 1; t < s.size(); ++t) used[static_cast<std::size_t>(s[t].rank)] = 1;
      beads.push_back(s);
      self(self, s.back());
      beads.pop_back();
      for (std::size_t t = 1; t < s.size(); ++t) used[static_cast<std::size_t>(s[t].rank)] = 0;
    }
  };
  used[static_cast<std::size_t>(a.rank)] = 1;
  dfs(dfs, a);
  return out;
}

// The unique subnecklace of `n` with joint set `joints` and vertex set
// `verts`; requires J(n) ⊆ joints ⊆ verts ⊆ V(n).
inline Necklace subnecklace(const OrderedSSet& x, const Necklace& n, const VertexSet& joints,
                            const VertexSet& verts) {
  auto subset = [](const VertexSet& small, const VertexSet& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
  };
  if (!std::is_sorted(joints.begin(), joints.end()) || !std::is_sorted(verts.begin(), verts.end()) ||
      !subset(n.joints(), joints) || !subset(joints, verts) || !subset(verts, n.vertices()))
    throw Error(ErrorKind::PreconditionViolated, "subnecklace requires J(N) ⊆ J' ⊆ V' ⊆ V(N)");
  Necklace out{n.initial, n.final, {}};
  for (const Chain& bead : n.beads) {
    // restrict to verts, then split at joints
    Chain piece;
    for (VertexId v : bead) {
      if (!std::binary_search(verts.begin(), verts.end(), v)) continue;
      piece.push_back(v);
      if (piece.size() > 1 && std::binary_search(joints.begin(), joints.end(), v)) {
        if (!x.contains(piece))
          throw Error(ErrorKind::PreconditionViolated, "restricted bead is not a simplex");
        out.beads.push_back(piece);
        piece = Chain{v};
      }
    }
  }
  return out;
}

struct MapSimplex {
  Necklace necklace;
  // T^0 ⊂ T^1 ⊂ ... ⊂ T^n, each sorted by rank.
  std::vector<VertexSet> flag;

  std::size_t dimension() const { return flag.size() - 1; }
};

// d_i of a mapping-space simplex. Inner faces drop T^i; the outer faces pass
// to the subnecklace spanned by the remaining ends of the flag.
inline MapSimplex face_map(const OrderedSSet& x, const MapSimplex& s, std::size_t i) {
  const std::size_t n = s.dimension();
  if (n == 0 || i > n)
    throw Error(ErrorKind::IndexOutOfRange,
                "face " + std::to_string(i) + " of a " + std::to_string(n) + "-simplex");
  MapSimplex out;
  out.flag.reserve(n);
  for (std::size_t t = 0; t <= n; ++t)
    if (t != i) out.flag.push_back(s.flag[t]);
  if (i == 0 || i == n)
    out.necklace = subnecklace(x, s.necklace, out.flag.front(), out.flag.back());
  else
    out.necklace = s.necklace;
  return out;
}

// Mapping space presented by its nondegenerate simplices with face
// incidence: faces[d][k][i] is the index of d_i of simplex k in dimension d-1.
struct SSetPresentation {
  std::vector<std::vector<MapSimplex>> simplices;
  std::vector<std::vector<std::vector<std::size_t>>> faces;
  std::size_t necklace_count = 0;
  // Dimensions above this were not generated.
  std::optional<std::size_t> max_dim;

  std::size_t top_dimension() const { return simplices.empty() ? 0 : simplices.size() - 1; }
  std::size_t size(std::size_t d) const { return d < simplices.size() ? simplices[d].size() : 0; }
  std::size_t face_index(std::size_t d, std::size_t k, std::size_t i) const { return faces[d][k][i]; }

  std::vector<std::size_t> f_vector() const {
    std::vector<std::size_t> f;
    for (const auto& level : simplices) f.push_back(level.size());
    return f;
  }
};

struct MappingSpaceOptions {
  std::optional<std::size_t> max_dim;
  // 0 picks std::thread::hardware_concurrency().
  unsigned threads = 1;
};

namespace detail {

// Every ordered partition of `free` into `blocks` nonempty blocks, emitted
// as the flag joints ⊂ joints ∪ B1 ⊂ ... in lexicographic order of block
// assignments.
template <typename Emit>
void flanked_flags(const VertexSet& joints, const VertexSet& free, std::size_t blocks, Emit&& emit) {
  const std::size_t r = free.size();
  if (blocks == 0) {
    if (r == 0) emit(std::vector<VertexSet>{joints});
    return;
  }
  if (r < blocks) return;
  std::vector<std::size_t> label(r, 0);
  std::vector<std::size_t> used(blocks, 0);
  auto rec = [&](auto&& self, std::size_t t) -> void {
    if (t == r) {
      for (std::size_t u : used)
        if (u == 0) return;
      std::vector<VertexSet> flag(blocks + 1);
      flag[0] = joints;
      for (std::size_t level = 1; level <= blocks; ++level) {
        VertexSet s = flag[level - 1];
        for (std::size_t q = 0; q < r; ++q)
          if (label[q] == level - 1) s.push_back(free[q]);
        std::sort(s.begin(), s.end());
        flag[level] = std::move(s);
      }
      emit(std::move(flag));
      return;
    }
    std::size_t empty = 0;
    for (std::size_t u : used) empty += (u == 0);
    if (empty > r - t) return;
    for (std::size_t blk = 0; blk < blocks; ++blk) {
      label[t] = blk;
      ++used[blk];
      self(self, t + 1);
      --used[blk];
    }
  };
  rec(rec, 0);
}

template <typename F>
void parallel_for(std::size_t count, unsigned threads, F&& f) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < threads; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += threads) f(i);
    });
}

}  // namespace detail

// Number of strictly increasing flanked flags of length n on a necklace with
// `free` non-joint vertices: ordered partitions into n nonempty blocks.
inline std::size_t flanked_flag_count(std::size_t free, std::size_t n) {
  // surjections: S(a, k) = k * (S(a-1, k) + S(a-1, k-1))
  std::vector<std::vector<std::size_t>> s(free + 1, std::vector<std::size_t>(n + 1, 0));
  s[0][0] = 1;
  for (std::size_t a = 1; a <= free; ++a)
    for (std::size_t k = 1; k <= n; ++k) s[a][k] = k * (s[a - 1][k] + s[a - 1][k - 1]);
  return s[free][n];
}

inline SSetPresentation mapping_space(const OrderedSSet& x, VertexId a, VertexId b,
                                      MappingSpaceOptions options = {}) {
  std::vector<Necklace> necklaces = enumerate_necklaces(x, a, b);

  // per-necklace simplices, bucketed by dimension
  std::vector<std::vector<std::vector<MapSimplex>>> local(necklaces.size());
  detail::parallel_for(necklaces.size(), options.threads, [&](std::size_t q) {
    const Necklace& n = necklaces[q];
    VertexSet joints = n.joints(), verts = n.vertices(), free;
    std::set_difference(verts.begin(), verts.end(), joints.begin(), joints.end(), std::back_inserter(free));
    std::size_t top = free.size();
    if (options.max_dim) top = std::min(top, *options.max_dim);
    auto& buckets = local[q];
    buckets.resize(top + 1);
    for (std::size_t len = free.empty() ? 0 : 1; len <= top; ++len)
      detail::flanked_flags(joints, free, len,
                            [&](std::vector<VertexSet> flag) { buckets[len].push_back({n, std::move(flag)}); });
  });

  SSetPresentation p;
  p.necklace_count = necklaces.size();
  p.max_dim = options.max_dim;
  for (auto& buckets : local) {
    if (p.simplices.size() < buckets.size()) p.simplices.resize(buckets.size());
    for (std::size_t d = 0; d < buckets.size(); ++d)
      for (auto& s : buckets[d]) p.simplices[d].push_back(std::move(s));
  }
  while (!p.simplices.empty() && p.simplices.back().empty()) p.simplices.pop_back();

  p.faces.resize(p.simplices.size());
  std::map<std::vector<VertexSet>, std::size_t> lower;
  for (std::size_t d = 0; d < p.simplices.size(); ++d) {
    std::map<std::vector<VertexSet>, std::size_t> here;
    auto& level = p.simplices[d];
    p.faces[d].resize(level.size());
    for (std::size_t k = 0; k < level.size(); ++k) {
      here.emplace(level[k].flag, k);
      if (d == 0) continue;
      auto& incidence = p.faces[d][k];
      incidence.resize(d + 1);
      for (std::size_t i = 0; i <= d; ++i) {
        MapSimplex f = face_map(x, level[k], i);
        auto it = lower.find(f.flag);
        if (it == lower.end())
          throw Error(ErrorKind::PreconditionViolated, "face of a mapping-space simplex is missing");
        incidence[i] = it->second;
      }
    }
    lower = std::move(here);
  }
  return p;
}

// Beads as a wedge, e.g. "Δ¹∨Δ²".
inline std::string shape_string(const Necklace& n) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  if (n.beads.empty()) return "Δ⁰";
  std::string out;
  for (std::size_t t = 0; t < n.beads.size(); ++t) {
    if (t) out += "∨";
    out += "Δ";
    for (char c : std::to_string(dimension(n.beads[t]))) out += digits[c - '0'];
  }
  return out;
}

inline std::string set_string(const OrderedSSet& x, const VertexSet& s) {
  std::string out = "{";
  for (std::size_t t = 0; t < s.size(); ++t) {
    const std::string& name = x.name(s[t]);
    if (t) out += ",";
    out += name.find(',') == std::string::npos ? name : "(" + name + ")";
  }
  return out + "}";
}

// "(Δ¹∨Δ², {0,1,7} ⊂ {0,1,4,7})"
inline std::string describe(const OrderedSSet& x, const MapSimplex& s) {
  std::string out = "(" + shape_string(s.necklace) + ", ";
  for (std::size_t t = 0; t < s.flag.size(); ++t) out += (t ? " ⊂ " : "") + set_string(x, s.flag[t]);
  return out + ")";
}

}  // namespace pvtopo
