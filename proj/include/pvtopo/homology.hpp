#pragma once

// Integer homology of finite presentations (normalized chains).
//
// A presentation is anything exposing per-dimension simplex counts and face
// incidence; both OrderedSSet and SSetPresentation qualify.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pvtopo/error.hpp"

namespace pvtopo {

using Integer = boost::multiprecision::cpp_int;

template <typename P>
concept FacePresentation = requires(const P& p, std::size_t d) {
  { p.top_dimension() } -> std::convertible_to<std::size_t>;
  { p.size(d) } -> std::convertible_to<std::size_t>;
  { p.face_index(d, d, d) } -> std::convertible_to<std::size_t>;
};

// Sparse integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    for (const auto& r : rows) cols_ = std::max(cols_, r.size());
    data_.resize(rows.size());
    std::size_t i = 0;
    for (const auto& r : rows) {
      std::size_t j = 0;
      for (long v : r) set(i, j++, v);
      ++i;
    }
  }

  std::size_t rows() const { return data_.size(); }
  std::size_t cols() const { return cols_; }

  Integer at(std::size_t r, std::size_t c) const {
    check(r, c);
    auto it = data_[r].find(c);
    return it == data_[r].end() ? Integer(0) : it->second;
  }

  void set(std::size_t r, std::size_t c, const Integer& v) {
    check(r, c);
    if (v == 0)
      data_[r].erase(c);
    else
      data_[r][c] = v;
  }

  void add(std::size_t r, std::size_t c, const Integer& v) { set(r, c, at(r, c) + v); }

  const std::map<std::size_t, Integer>& row(std::size_t r) const { return data_.at(r); }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : data_) n += r.size();
    return n;
  }

  IntMatrix operator*(const IntMatrix& other) const {
    if (cols_ != other.rows()) throw Error(ErrorKind::PreconditionViolated, "matrix shape mismatch");
    IntMatrix out(rows(), other.cols());
    for (std::size_t i = 0; i < rows(); ++i)
      for (const auto& [k, a] : data_[i])
        for (const auto& [j, b] : other.row(k)) out.add(i, j, a * b);
    return out;
  }

  bool is_zero() const { return nonzeros() == 0; }

 private:
  void check(std::size_t r, std::size_t c) const {
    if (r >= data_.size() || c >= cols_) throw Error(ErrorKind::IndexOutOfRange, "matrix index");
  }

  std::size_t cols_ = 0;
  std::vector<std::map<std::size_t, Integer>> data_;
};

struct SmithForm {
  // d1 | d2 | ... , all positive; size equals the rank.
  std::vector<Integer> invariants;
  std::size_t rank() const { return invariants.size(); }
};

namespace detail {

class SmithReducer {
 public:
  explicit SmithReducer(const IntMatrix& m) : rows_(m.rows()), cols_(m.cols()) {
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (const auto& [c, v] : m.row(r)) {
        rows_[r][c] = v;
        cols_[c].insert(r);
      }
  }

  std::vector<Integer> run() {
    std::vector<Integer> diagonal;
    while (auto pivot = choose_pivot()) {
      auto [r, c] = *pivot;
      while (true) {
        if (auto better = clear_column(r, c)) {
          r = better->first;
          continue;
        }
        if (auto better = clear_row(r, c)) {
          c = better->second;
          continue;
        }
        break;
      }
      diagonal.push_back(abs(rows_[r].at(c)));
      drop_row(r);
    }
    return normalize(std::move(diagonal));
  }

 private:
  using Cell = std::pair<std::size_t, std::size_t>;

  // Smallest magnitude, then least fill.
  std::optional<Cell> choose_pivot() const {
    std::optional<Cell> best;
    Integer best_val;
    std::size_t best_cost = 0;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      for (const auto& [c, v] : rows_[r]) {
        Integer mag = abs(v);
        std::size_t cost = (rows_[r].size() - 1) * (cols_[c].size() - 1);
        if (!best || mag < best_val || (mag == best_val && cost < best_cost)) {
          best = Cell{r, c};
          best_val = mag;
          best_cost = cost;
          if (best_val == 1 && best_cost == 0) return best;
        }
      }
    }
    return best;
  }

  // Row operations zeroing column c outside row r. Returns a new pivot when a
  // nonzero remainder (smaller than the pivot) appears.
  std::optional<Cell> clear_column(std::size_t r, std::size_t c) {
    const Integer p = rows_[r].at(c);
    std::vector<std::size_t> others(cols_[c].begin(), cols_[c].end());
    for (std::size_t k : others) {
      if (k == r) continue;
      Integer q = rows_[k].at(c) / p;
      if (q != 0) axpy_row(k, r, -q);
      auto it = rows_[k].find(c);
      if (it != rows_[k].end()) return Cell{k, c};
    }
    return std::nullopt;
  }

  // Column c is zero outside row r, so column operations against c only
  // change row r.
  std::optional<Cell> clear_row(std::size_t r, std::size_t c) {
    const Integer p = rows_[r].at(c);
    std::vector<std::size_t> others;
    for (const auto& [j, v] : rows_[r])
      if (j != c) others.push_back(j);
    for (std::size_t j : others) {
      Integer rem = rows_[r][j] % p;
      if (rem == 0) {
        erase(r, j);
      } else {
        rows_[r][j] = rem;
        return Cell{r, j};
      }
    }
    return std::nullopt;
  }

  // row k += q * row r
  void axpy_row(std::size_t k, std::size_t r, const Integer& q) {
    for (const auto& [j, v] : rows_[r]) {
      auto [it, inserted] = rows_[k].try_emplace(j, 0);
      it->second += q * v;
      if (it->second == 0) {
        rows_[k].erase(it);
        cols_[j].erase(k);
      } else if (inserted) {
        cols_[j].insert(k);
      }
    }
  }

  void erase(std::size_t r, std::size_t c) {
    rows_[r].erase(c);
    cols_[c].erase(r);
  }

  void drop_row(std::size_t r) {
    for (const auto& [c, v] : rows_[r]) cols_[c].erase(r);
    rows_[r].clear();
  }

  static std::vector<Integer> normalize(std::vector<Integer> d) {
    for (std::size_t i = 0; i < d.size(); ++i)
      for (std::size_t j = i + 1; j < d.size(); ++j) {
        if (d[j] % d[i] == 0) continue;
        Integer g = gcd(d[i], d[j]);
        Integer l = d[i] / g * d[j];
        d[i] = g;
        d[j] = l;
      }
    std::sort(d.begin(), d.end());
    return d;
  }

  std::vector<std::map<std::size_t, Integer>> rows_;
  std::vector<std::set<std::size_t>> cols_;
};

}  // namespace detail

inline SmithForm smith_normal_form(const IntMatrix& m) {
  return {detail::SmithReducer(m).run()};
}

// boundary[d] is the matrix of ∂_d : C_d -> C_{d-1} (rows index dimension
// d-1), for d = 1..top. Entry 0 is an empty placeholder for ∂_0.
template <FacePresentation P>
std::vector<IntMatrix> boundary_matrices(const P& p) {
  std::vector<IntMatrix> out;
  out.emplace_back(0, p.size(0));
  for (std::size_t d = 1; d <= p.top_dimension(); ++d) {
    IntMatrix m(p.size(d - 1), p.size(d));
    for (std::size_t k = 0; k < p.size(d); ++k)
      for (std::size_t i = 0; i <= d; ++i) m.add(p.face_index(d, k, i), k, (i % 2 == 0) ? 1 : -1);
    out.push_back(std::move(m));
  }
  return out;
}

struct HomologyGroup {
  std::size_t dim = 0;
  std::size_t betti = 0;
  std::vector<Integer> torsion;
};

struct HomologyResult {
  std::vector<HomologyGroup> groups;

  std::vector<std::size_t> betti() const {
    std::vector<std::size_t> out;
    for (const auto& g : groups) out.push_back(g.betti);
    return out;
  }
};

// H_d for d = 0..through (default: the top dimension). Groups at the top of
// a truncated presentation are only correct if the caller includes the next
// dimension.
template <FacePresentation P>
HomologyResult homology(const P& p, std::optional<std::size_t> through = std::nullopt) {
  const std::size_t top = p.top_dimension();
  const std::size_t last = std::min(top, through.value_or(top));
  auto boundary = boundary_matrices(p);
  std::vector<SmithForm> snf(top + 2);
  for (std::size_t d = 1; d <= std::min(top, last + 1); ++d) snf[d] = smith_normal_form(boundary[d]);

  HomologyResult out;
  for (std::size_t d = 0; d <= last; ++d) {
    HomologyGroup g;
    g.dim = d;
    std::size_t rank_in = d == 0 ? 0 : snf[d].rank();
    std::size_t rank_out = d + 1 <= top ? snf[d + 1].rank() : 0;
    g.betti = p.size(d) - rank_in - rank_out;
    if (d + 1 <= top)
      for (const auto& v : snf[d + 1].invariants)
        if (v > 1) g.torsion.push_back(v);
    out.groups.push_back(std::move(g));
  }
  return out;
}

struct Components {
  std::size_t count = 0;
  // labels[v] in 0..count-1, numbered by first vertex.
  std::vector<std::size_t> labels;
};

template <FacePresentation P>
Components components(const P& p) {
  const std::size_t n = p.size(0);
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  if (p.top_dimension() >= 1)
    for (std::size_t k = 0; k < p.size(1); ++k) {
      std::size_t u = find(p.face_index(1, k, 0)), w = find(p.face_index(1, k, 1));
      if (u != w) parent[std::max(u, w)] = std::min(u, w);
    }
  Components out;
  out.labels.assign(n, 0);
  std::vector<std::size_t> label_of(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t root = find(v);
    if (label_of[root] == n) label_of[root] = out.count++;
    out.labels[v] = label_of[root];
  }
  return out;
}

}  // namespace pvtopo
