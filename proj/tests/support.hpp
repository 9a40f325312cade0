#pragma once

#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pvtopo/io.hpp"
#include "pvtopo/necklace.hpp"
#include "pvtopo/sset.hpp"

#ifndef PVTOPO_FIXTURE_DIR
#error "PVTOPO_FIXTURE_DIR must be defined"
#endif

namespace test {

inline std::string fixture_path(const std::string& name) { return std::string(PVTOPO_FIXTURE_DIR) + "/" + name; }

inline pvtopo::LoadedInput fixture(const std::string& name) {
  return pvtopo::load_input(pvtopo::read_file(fixture_path(name)));
}

inline pvtopo::OrderedSSet fixture_complex(const std::string& name) { return fixture(name).complex; }

inline pvtopo::OrderedSSet hollow_cube() { return fixture_complex("hollow_cube.json"); }
inline pvtopo::OrderedSSet petri_net() { return fixture_complex("petri_net.json"); }

inline pvtopo::Chain chain(const pvtopo::OrderedSSet& x, const std::vector<std::string>& names) {
  pvtopo::Chain c;
  for (const auto& n : names) c.push_back(x.vertex(n));
  return c;
}

inline pvtopo::VertexSet vset(const pvtopo::OrderedSSet& x, const std::vector<std::string>& names) {
  auto c = chain(x, names);
  std::sort(c.begin(), c.end());
  return c;
}

// Copy of a complex over integer vertices (the ranks), for the oracles.
inline std::set<std::vector<int>> as_int_complex(const pvtopo::OrderedSSet& x) {
  std::set<std::vector<int>> out;
  for (std::size_t d = 0; d <= x.top_dimension(); ++d)
    for (const pvtopo::Chain& c : x.simplices(d)) {
      std::vector<int> s;
      for (pvtopo::VertexId v : c) s.push_back(v.rank);
      out.insert(s);
    }
  return out;
}

inline oracle::Program to_oracle(const pvtopo::ProgramSpec& s) {
  oracle::Program p;
  for (const auto& sem : s.semaphores) p.caps.push_back(static_cast<long>(sem.capacity));
  for (const auto& proc : s.processes) {
    std::vector<oracle::Op> ops;
    for (const auto& op : proc.ops) ops.push_back({static_cast<char>(op.kind), static_cast<int>(op.semaphore)});
    p.procs.push_back(ops);
  }
  return p;
}

// Program text with 1-3 processes, at most 6 operations in total and 1-2
// semaphores of capacity 1-2.
inline std::string random_program(std::mt19937& rng) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int sems = pick(1, 2);
  const int procs = pick(1, 3);
  std::vector<int> lengths(static_cast<std::size_t>(procs), 1);
  for (int extra = pick(0, 6 - procs); extra > 0; --extra) ++lengths[static_cast<std::size_t>(pick(0, procs - 1))];
  std::string text;
  for (int j = 0; j < sems; ++j) text += "sem s" + std::to_string(j) + " = " + std::to_string(pick(1, 2)) + "\n";
  for (int i = 0; i < procs; ++i) {
    text += "proc T" + std::to_string(i) + " = ";
    for (int t = 0; t < lengths[static_cast<std::size_t>(i)]; ++t)
      text += std::string(t ? "." : "") + (pick(0, 2) ? "P" : "V") + "s" + std::to_string(pick(0, sems - 1));
    text += "\n";
  }
  return text;
}

}  // namespace test
