#pragma once

// Filtered simplicial models of PV programs.
//
// Each process is a necklace of edges whose vertices carry a degree vector:
// how far the process has decremented each semaphore on reaching that state.
// The program model is the part of the product of the process necklaces
// whose (induced) degree stays within the semaphore capacities.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pvtopo/error.hpp"
#include "pvtopo/program.hpp"
#include "pvtopo/sset.hpp"

namespace pvtopo {

using DegreeVector = std::vector<std::int64_t>;

inline constexpr std::int64_t kUnbounded = std::numeric_limits<std::int64_t>::max() / 4;

// One process: N edges, N+1 vertex degree vectors.
struct FilteredNecklace {
  std::vector<DegreeVector> degrees;

  std::size_t length() const { return degrees.empty() ? 0 : degrees.size() - 1; }
  std::size_t semaphores() const { return degrees.empty() ? 0 : degrees.front().size(); }

  // Degree of edge t (0-based, from vertex t to t+1): componentwise max of
  // its endpoints.
  DegreeVector edge_degree(std::size_t t) const {
    DegreeVector out = degrees.at(t);
    const auto& next = degrees.at(t + 1);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = std::max(out[j], next[j]);
    return out;
  }
};

inline FilteredNecklace process_model(std::span<const Operation> ops, std::size_t m) {
  FilteredNecklace x;
  x.degrees.reserve(ops.size() + 1);
  x.degrees.emplace_back(m, 0);
  for (const Operation& op : ops) {
    if (op.semaphore >= m)
      throw Error(ErrorKind::PreconditionViolated,
                  "operation references semaphore " + std::to_string(op.semaphore));
    DegreeVector next = x.degrees.back();
    next[op.semaphore] += op.kind == OpKind::P ? 1 : -1;
    x.degrees.push_back(std::move(next));
  }
  return x;
}

// A state of the product: one vertex index per process.
using GridVertex = std::vector<std::int32_t>;

// Nondegenerate product simplex: strictly increasing (componentwise <=, not
// equal) chain of grid vertices whose per-coordinate span is at most 1.
using ProductSimplex = std::vector<GridVertex>;

inline void check_bounds(std::span<const FilteredNecklace> models, const GridVertex& x) {
  if (x.size() != models.size())
    throw Error(ErrorKind::PreconditionViolated, "grid vertex has wrong arity");
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] < 0 || static_cast<std::size_t>(x[i]) > models[i].length())
      throw Error(ErrorKind::PreconditionViolated, "grid vertex out of bounds");
}

inline DegreeVector vertex_degree(std::span<const FilteredNecklace> models, const GridVertex& x) {
  check_bounds(models, x);
  DegreeVector out(models.empty() ? 0 : models.front().semaphores(), 0);
  for (std::size_t i = 0; i < models.size(); ++i) {
    const auto& row = models[i].degrees[static_cast<std::size_t>(x[i])];
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += row[j];
  }
  return out;
}

// Sum over processes of the componentwise max degree along the simplex's
// trace in that process.
inline DegreeVector simplex_degree(std::span<const FilteredNecklace> models, const ProductSimplex& s) {
  if (s.empty()) throw Error(ErrorKind::PreconditionViolated, "empty simplex");
  for (const auto& x : s) check_bounds(models, x);
  const std::size_t m = models.empty() ? 0 : models.front().semaphores();
  DegreeVector out(m, 0);
  for (std::size_t i = 0; i < models.size(); ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      std::int64_t best = std::numeric_limits<std::int64_t>::min();
      for (const auto& x : s) best = std::max(best, models[i].degrees[static_cast<std::size_t>(x[i])][j]);
      out[j] += best;
    }
  }
  return out;
}

inline bool within(const DegreeVector& degree, const DegreeVector& capacity) {
  for (std::size_t j = 0; j < degree.size(); ++j)
    if (degree[j] > capacity.at(j)) return false;
  return true;
}

inline bool is_valid(std::span<const FilteredNecklace> models, const ProductSimplex& s,
                     const DegreeVector& capacity) {
  return within(simplex_degree(models, s), capacity);
}

inline std::string grid_name(const GridVertex& x) {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) out += (i ? "," : "") + std::to_string(x[i]);
  return out;
}

struct ProgramModel {
  OrderedSSet complex;
  std::vector<FilteredNecklace> factors;
  DegreeVector capacities;
  // Grid coordinates of each vertex of `complex`, indexed by rank.
  std::vector<GridVertex> states;
  GridVertex initial;
  GridVertex final;

  std::optional<VertexId> find(const GridVertex& x) const {
    auto it = std::lower_bound(states.begin(), states.end(), x);
    if (it == states.end() || *it != x) return std::nullopt;
    return VertexId{static_cast<std::int32_t>(it - states.begin())};
  }

  // Grid points excluded by the capacities, in lexicographic order.
  std::vector<GridVertex> invalid_states() const {
    std::vector<GridVertex> out;
    for_each_grid_point([&](const GridVertex& x) {
      if (!find(x)) out.push_back(x);
    });
    return out;
  }

  DegreeVector degree(VertexId v) const { return vertex_degree(factors, states.at(static_cast<std::size_t>(v.rank))); }

  template <typename F>
  void for_each_grid_point(F&& f) const {
    const std::size_t n = factors.size();
    GridVertex x(n, 0);
    while (true) {
      f(x);
      std::size_t i = n;
      while (i > 0) {
        --i;
        if (static_cast<std::size_t>(x[i]) < factors[i].length()) {
          ++x[i];
          break;
        }
        x[i] = 0;
        if (i == 0) return;
      }
      if (n == 0) return;
    }
  }
};

namespace detail {

// Depth-first extension of valid chains. Every valid simplex is found from
// its minimum vertex; degrees only grow under extension so invalid chains
// are pruned together with all their extensions.
class ModelBuilder {
 public:
  ModelBuilder(const std::vector<FilteredNecklace>& factors, const DegreeVector& capacity)
      : factors_(factors), capacity_(capacity), n_(factors.size()) {
    m_ = factors.empty() ? 0 : factors.front().semaphores();
  }

  ProgramModel build() {
    ProgramModel model;
    model.factors = factors_;
    model.capacities = capacity_;
    model.initial.assign(n_, 0);
    model.final.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) model.final[i] = static_cast<std::int32_t>(factors_[i].length());

    model.for_each_grid_point([&](const GridVertex& x) {
      if (within(vertex_degree(factors_, x), capacity_)) model.states.push_back(x);
    });

    std::vector<Chain> chains;
    for (std::size_t r = 0; r < model.states.size(); ++r) {
      const GridVertex& base = model.states[r];
      // per-process running max over the chain so far
      std::vector<DegreeVector> maxima(n_);
      for (std::size_t i = 0; i < n_; ++i) maxima[i] = factors_[i].degrees[static_cast<std::size_t>(base[i])];
      Chain chain{VertexId{static_cast<std::int32_t>(r)}};
      extend(model, base, base, maxima, chain, chains);
    }

    std::vector<std::string> names;
    names.reserve(model.states.size());
    for (const auto& x : model.states) names.push_back(grid_name(x));
    model.complex = OrderedSSet::from_chains(std::move(names), chains);
    return model;
  }

 private:
  bool fits(const std::vector<DegreeVector>& maxima) const {
    for (std::size_t j = 0; j < m_; ++j) {
      std::int64_t sum = 0;
      for (std::size_t i = 0; i < n_; ++i) sum += maxima[i][j];
      if (sum > capacity_[j]) return false;
    }
    return true;
  }

  void extend(const ProgramModel& model, const GridVertex& base, const GridVertex& last,
              const std::vector<DegreeVector>& maxima, Chain& chain, std::vector<Chain>& out) {
    if (chain.size() >= 2) out.push_back(chain);
    // candidates: base <= w <= base + 1, w >= last, w != last
    GridVertex w = last;
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < n_; ++i)
      if (last[i] == base[i] && static_cast<std::size_t>(base[i]) < factors_[i].length()) free.push_back(i);
    const std::size_t combos = std::size_t{1} << free.size();
    for (std::size_t mask = 1; mask < combos; ++mask) {
      for (std::size_t b = 0; b < free.size(); ++b) w[free[b]] = last[free[b]] + ((mask >> b) & 1);
      auto id = model.find(w);
      if (!id) continue;
      std::vector<DegreeVector> next = maxima;
      for (std::size_t b = 0; b < free.size(); ++b) {
        if (!((mask >> b) & 1)) continue;
        std::size_t i = free[b];
        const auto& row = factors_[i].degrees[static_cast<std::size_t>(w[i])];
        for (std::size_t j = 0; j < m_; ++j) next[i][j] = std::max(next[i][j], row[j]);
      }
      if (!fits(next)) continue;
      chain.push_back(*id);
      extend(model, base, w, next, chain, out);
      chain.pop_back();
    }
  }

  const std::vector<FilteredNecklace>& factors_;
  const DegreeVector& capacity_;
  std::size_t n_;
  std::size_t m_ = 0;
};

}  // namespace detail

// Valid part of the product of `factors` under `capacity`. Vertex ranks
// follow the lexicographic order of grid coordinates.
inline ProgramModel build_product_model(std::vector<FilteredNecklace> factors, DegreeVector capacity) {
  for (const auto& f : factors)
    if (f.semaphores() != capacity.size())
      throw Error(ErrorKind::PreconditionViolated, "capacity vector has wrong length");
  return detail::ModelBuilder(factors, capacity).build();
}

inline ProgramModel build_program_model(const ProgramSpec& spec) {
  const std::size_t m = spec.semaphores.size();
  std::vector<FilteredNecklace> factors;
  for (const auto& p : spec.processes) factors.push_back(process_model(p.ops, m));
  DegreeVector capacity;
  for (const auto& s : spec.semaphores) capacity.push_back(s.capacity);
  return build_product_model(std::move(factors), std::move(capacity));
}

}  // namespace pvtopo
