#pragma once

// JSON report and DOT export.

#include <cstddef>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "pvtopo/analysis.hpp"
#include "pvtopo/homology.hpp"
#include "pvtopo/io.hpp"
#include "pvtopo/necklace.hpp"
#include "pvtopo/path_category.hpp"

namespace pvtopo {

struct ExecSummary {
  VertexId from;
  VertexId to;
  std::size_t necklaces = 0;
  std::vector<std::size_t> fvector;
  std::size_t pi0 = 0;
  HomologyResult homology;
  std::size_t path_classes = 0;
  // Set when a dimension cap cut the presentation; homology then stops
  // below the cap.
  std::optional<std::size_t> max_dim;
};

inline ExecSummary summarize_execspace(const OrderedSSet& x, VertexId from, VertexId to,
                                       MappingSpaceOptions options = {}) {
  ExecSummary s;
  s.from = from;
  s.to = to;
  SSetPresentation p = mapping_space(x, from, to, options);
  s.necklaces = p.necklace_count;
  s.fvector = p.f_vector();
  s.pi0 = components(p).count;
  s.max_dim = options.max_dim;
  std::optional<std::size_t> through;
  if (options.max_dim) through = *options.max_dim == 0 ? 0 : *options.max_dim - 1;
  if (p.size(0) > 0) s.homology = homology(p, through);
  s.path_classes = hom_classes(x, from, to).size();
  return s;
}

inline std::string integer_string(const Integer& v) { return v.str(); }

inline nlohmann::ordered_json homology_json(const HomologyResult& h) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& g : h.groups) {
    auto torsion = nlohmann::ordered_json::array();
    for (const auto& t : g.torsion) torsion.push_back(integer_string(t));
    out.push_back({{"dim", g.dim}, {"betti", g.betti}, {"torsion", torsion}});
  }
  return out;
}

// "H0 = Z, H1 = Z^2 ⊕ Z/2"
inline std::string homology_string(const HomologyResult& h) {
  std::string out;
  for (const auto& g : h.groups) {
    std::string group;
    if (g.betti == 1) group = "Z";
    else if (g.betti > 1) group = "Z^" + std::to_string(g.betti);
    for (const auto& t : g.torsion) group += (group.empty() ? "" : " ⊕ ") + ("Z/" + t.str());
    if (group.empty()) group = "0";
    out += (out.empty() ? "" : ", ") + ("H" + std::to_string(g.dim) + " = " + group);
  }
  return out;
}

inline nlohmann::ordered_json names_json(const OrderedSSet& x, const std::vector<VertexId>& vs) {
  auto out = nlohmann::ordered_json::array();
  for (VertexId v : vs) out.push_back(x.name(v));
  return out;
}

inline nlohmann::ordered_json exec_json(const OrderedSSet& x, const ExecSummary& s) {
  nlohmann::ordered_json out;
  out["from"] = x.name(s.from);
  out["to"] = x.name(s.to);
  out["necklaces"] = s.necklaces;
  out["fvector"] = s.fvector;
  out["pi0"] = s.pi0;
  out["homology"] = homology_json(s.homology);
  out["pathClasses"] = s.path_classes;
  if (s.max_dim) out["maxDim"] = *s.max_dim;
  return out;
}

inline nlohmann::ordered_json states_json(const OrderedSSet& x, const StateReport& r) {
  nlohmann::ordered_json out;
  out["valid"] = names_json(x, r.valid);
  out["reachable"] = names_json(x, r.reachable);
  out["coreachable"] = names_json(x, r.coreachable);
  out["deadlocks"] = names_json(x, r.deadlocks);
  out["unreachable"] = names_json(x, r.unreachable);
  out["doomed"] = names_json(x, r.doomed);
  return out;
}

inline nlohmann::ordered_json model_json(const LoadedInput& in) {
  nlohmann::ordered_json out;
  out["counts"] = in.complex.f_vector();
  out["initial"] = in.complex.name(in.initial);
  out["final"] = in.final ? nlohmann::ordered_json(in.complex.name(*in.final)) : nlohmann::ordered_json();
  if (in.model) {
    const ProgramModel& m = *in.model;
    out["capacities"] = m.capacities;
    nlohmann::ordered_json degrees;
    for (std::size_t r = 0; r < m.states.size(); ++r)
      degrees[grid_name(m.states[r])] = m.degree(VertexId{static_cast<std::int32_t>(r)});
    out["degrees"] = std::move(degrees);
    auto invalid = nlohmann::ordered_json::array();
    for (const auto& x : m.invalid_states()) invalid.push_back(grid_name(x));
    out["invalid"] = std::move(invalid);
  }
  return out;
}

// Full report. The top-level "vertices"/"simplices" make it a valid complex
// file in its own right.
inline nlohmann::ordered_json full_report(const LoadedInput& in, const std::vector<ExecSummary>& queries) {
  nlohmann::ordered_json out;
  out["input"] = {{"kind", in.kind == LoadedInput::Kind::Program ? "program" : "complex"},
                  {"digest", in.digest}};
  auto cx = complex_json(in.complex);
  out["vertices"] = cx["vertices"];
  out["simplices"] = cx["simplices"];
  out["model"] = model_json(in);
  out["states"] = states_json(in.complex, reachability(in.complex, in.initial, in.final));
  auto exec = nlohmann::ordered_json::array();
  for (const auto& q : queries) exec.push_back(exec_json(in.complex, q));
  out["execspace"] = std::move(exec);
  return out;
}

namespace detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

// Directed 1-skeleton. Deadlocks are double circles, doomed states dashed,
// unreachable states gray.
inline std::string to_dot(const OrderedSSet& x, const StateReport* report = nullptr) {
  std::set<VertexId> dead, doomed, unreachable;
  if (report) {
    dead.insert(report->deadlocks.begin(), report->deadlocks.end());
    doomed.insert(report->doomed.begin(), report->doomed.end());
    unreachable.insert(report->unreachable.begin(), report->unreachable.end());
  }
  std::ostringstream out;
  out << "digraph model {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (std::size_t r = 0; r < x.num_vertices(); ++r) {
    VertexId v{static_cast<std::int32_t>(r)};
    std::vector<std::string> attrs;
    if (dead.count(v)) attrs.push_back("shape=doublecircle");
    if (doomed.count(v)) attrs.push_back("style=dashed");
    if (unreachable.count(v)) {
      attrs.push_back("color=gray");
      attrs.push_back("fontcolor=gray");
    }
    out << "  " << detail::dot_quote(x.name(v));
    if (!attrs.empty()) {
      out << " [";
      for (std::size_t i = 0; i < attrs.size(); ++i) out << (i ? ", " : "") << attrs[i];
      out << "]";
    }
    out << ";\n";
  }
  for (const Chain& e : x.simplices(1))
    out << "  " << detail::dot_quote(x.name(e[0])) << " -> " << detail::dot_quote(x.name(e[1])) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace pvtopo
