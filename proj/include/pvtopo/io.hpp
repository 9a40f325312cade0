#pragma once

// Input files: PV programs and complex files.
//
// A complex file is a JSON object {"vertices": [...], "simplices": [[...]]}
// whose simplices are maximal vertex tuples in ascending order; "vertices" is
// optional. Anything whose first non-blank character is '{' is read as a
// complex file, everything else as a PV program.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "pvtopo/error.hpp"
#include "pvtopo/model.hpp"
#include "pvtopo/program.hpp"
#include "pvtopo/sset.hpp"

namespace pvtopo {

inline SourcePos position_of(std::string_view text, std::size_t offset) {
  SourcePos pos;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++pos.line;
      pos.column = 1;
    } else {
      ++pos.column;
    }
  }
  return pos;
}

namespace detail {

inline std::string vertex_label(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  throw Error(ErrorKind::InvalidInput, "vertex names must be strings or integers, got " + v.dump());
}

}  // namespace detail

inline OrderedSSet parse_complex(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t at = e.byte == 0 ? 0 : e.byte - 1;
    throw ParseError(ErrorKind::Syntax, position_of(text, at), "malformed JSON");
  }
  if (!doc.is_object() || !doc.contains("simplices") || !doc["simplices"].is_array())
    throw Error(ErrorKind::InvalidInput, "complex file needs a \"simplices\" array");

  std::vector<std::string> declared;
  if (doc.contains("vertices")) {
    if (!doc["vertices"].is_array()) throw Error(ErrorKind::InvalidInput, "\"vertices\" must be an array");
    for (const auto& v : doc["vertices"]) declared.push_back(detail::vertex_label(v));
  }
  std::vector<std::vector<std::string>> maximal;
  for (const auto& s : doc["simplices"]) {
    if (!s.is_array() || s.empty()) throw Error(ErrorKind::InvalidInput, "each simplex must be a nonempty array");
    std::vector<std::string> tuple;
    for (const auto& v : s) tuple.push_back(detail::vertex_label(v));
    maximal.push_back(std::move(tuple));
  }
  if (!declared.empty()) {
    for (const auto& tuple : maximal)
      for (const auto& v : tuple)
        if (std::find(declared.begin(), declared.end(), v) == declared.end())
          throw Error(ErrorKind::UnknownVertex, "simplex uses undeclared vertex '" + v + "'");
  }
  return build_complex(maximal, declared);
}

// Vertices in rank order and the maximal simplices; parse_complex reads it back.
inline nlohmann::ordered_json complex_json(const OrderedSSet& x) {
  nlohmann::ordered_json out;
  out["vertices"] = x.vertex_names();
  auto simplices = nlohmann::ordered_json::array();
  for (const Chain& c : x.maximal_simplices())
    if (c.size() > 1) simplices.push_back(x.names_of(c));
  out["simplices"] = std::move(simplices);
  return out;
}

struct LoadedInput {
  enum class Kind { Program, Complex };
  Kind kind = Kind::Complex;
  std::optional<ProgramSpec> program;
  std::optional<ProgramModel> model;
  OrderedSSet complex;
  VertexId initial;
  // Absent when the program's terminal state exceeds a capacity.
  std::optional<VertexId> final;
  std::string digest;
};

// FNV-1a 64, hex.
inline std::string digest(std::string_view text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline bool looks_like_json(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{';
  }
  return false;
}

// For complex files the initial and final vertices are the first and last
// in rank order.
inline LoadedInput load_input(std::string_view text) {
  LoadedInput in;
  in.digest = digest(text);
  if (looks_like_json(text)) {
    in.kind = LoadedInput::Kind::Complex;
    in.complex = parse_complex(text);
    if (in.complex.num_vertices() == 0) throw Error(ErrorKind::InvalidInput, "complex has no vertices");
    in.initial = VertexId{0};
    in.final = VertexId{static_cast<std::int32_t>(in.complex.num_vertices() - 1)};
    return in;
  }
  in.kind = LoadedInput::Kind::Program;
  in.program = parse_program(text);
  in.model = build_program_model(*in.program);
  in.complex = in.model->complex;
  in.initial = *in.model->find(in.model->initial);
  in.final = in.model->find(in.model->final);
  return in;
}

inline std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::InvalidInput, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// Accepts a vertex name, or for program models a grid tuple written with
// optional parentheses and spaces ("(0, 0)").
inline VertexId resolve_vertex(const LoadedInput& in, std::string_view spec) {
  if (auto v = in.complex.find_vertex(spec)) return *v;
  std::string compact;
  for (char c : spec)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')') compact += c;
  return in.complex.vertex(compact);
}

}  // namespace pvtopo
