#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pvtopo/model.hpp"
#include "support.hpp"

using namespace pvtopo;

namespace {

std::vector<FilteredNecklace> factors_of(const std::string& text) {
  ProgramSpec s = parse_program(text);
  std::vector<FilteredNecklace> out;
  for (const auto& p : s.processes) out.push_back(process_model(p.ops, s.semaphores.size()));
  return out;
}

const char* kSwissReduced = "sem a = 1\nsem b = 1\nproc A = Pa.Pb.Vb.Va\nproc B = Pb.Pa.Va.Vb";
const char* kCube = "sem a = 2\nproc A = Pa.Va\nproc B = Pa.Va\nproc C = Pa.Va";

oracle::Program swiss_oracle() {
  return {{{{'P', 0}, {'P', 1}, {'V', 1}, {'V', 0}}, {{'P', 1}, {'P', 0}, {'V', 0}, {'V', 1}}}, {1, 1}};
}

}  // namespace

TEST(ProcessModel, SwissA) {
  auto f = factors_of("sem a = 1\nsem b = 1\nproc A = Pa.Pb.Va.Vb")[0];
  EXPECT_EQ(f.degrees, (std::vector<DegreeVector>{{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0}}));
  EXPECT_EQ(f.edge_degree(0), (DegreeVector{1, 0}));
  EXPECT_EQ(f.edge_degree(1), (DegreeVector{1, 1}));
  EXPECT_EQ(f.edge_degree(2), (DegreeVector{1, 1}));
  EXPECT_EQ(f.edge_degree(3), (DegreeVector{0, 1}));
}

TEST(ProcessModel, SingleSemaphore) {
  auto f = factors_of("sem a = 2\nproc A = Pa.Va")[0];
  EXPECT_EQ(f.degrees, (std::vector<DegreeVector>{{0}, {1}, {0}}));
  EXPECT_EQ(f.edge_degree(0), (DegreeVector{1}));
  EXPECT_EQ(f.edge_degree(1), (DegreeVector{1}));
}

TEST(ProcessModel, SwissReducedFactor) {
  auto f = factors_of(kSwissReduced)[0];
  EXPECT_EQ(f.degrees, (std::vector<DegreeVector>{{0, 0}, {1, 0}, {1, 1}, {1, 0}, {0, 0}}));
}

TEST(ProcessModel, OverReleaseGoesNegative) {
  auto f = factors_of("sem a = 1\nproc A = Va.Pa")[0];
  EXPECT_EQ(f.degrees, (std::vector<DegreeVector>{{0}, {-1}, {0}}));
}

TEST(VertexDegree, Examples) {
  auto swiss = factors_of(kSwissReduced);
  EXPECT_EQ(vertex_degree(swiss, {2, 2}), (DegreeVector{2, 2}));
  EXPECT_EQ(vertex_degree(swiss, {0, 0}), (DegreeVector{0, 0}));
  auto cube = factors_of(kCube);
  EXPECT_EQ(vertex_degree(cube, {1, 1, 1}), (DegreeVector{3}));
  EXPECT_THROW(vertex_degree(cube, {3, 0, 0}), Error);
}

TEST(SimplexDegree, Examples) {
  auto swiss = factors_of(kSwissReduced);
  EXPECT_EQ(simplex_degree(swiss, {{1, 3}, {2, 4}}), (DegreeVector{1, 2}));
  auto cube = factors_of(kCube);
  EXPECT_EQ(simplex_degree(cube, {{1, 0, 0}, {2, 0, 0}, {2, 1, 0}, {2, 1, 1}}), (DegreeVector{3}));
  EXPECT_EQ(simplex_degree(swiss, {{3, 1}}), vertex_degree(swiss, {3, 1}));
}

TEST(IsValid, SwissReducedVertices) {
  auto swiss = factors_of(kSwissReduced);
  EXPECT_TRUE(is_valid(swiss, {{1, 1}}, {1, 1}));
  EXPECT_FALSE(is_valid(swiss, {{2, 1}}, {1, 1}));
}

TEST(IsValid, SingleProcessAlwaysValid) {
  auto f = factors_of("sem a = 1\nsem b = 1\nproc A = Pa.Pb.Va.Vb");
  for (std::int32_t t = 0; t <= 4; ++t) EXPECT_TRUE(is_valid(f, {{t}}, {1, 1}));
}

TEST(BuildProgramModel, SwissReduced) {
  ProgramModel m = build_program_model(parse_program(kSwissReduced));
  EXPECT_EQ(m.complex.f_vector(), (std::vector<std::size_t>{20, 28, 8}));
  EXPECT_EQ(m.invalid_states(), (std::vector<GridVertex>{{1, 2}, {2, 1}, {2, 2}, {2, 3}, {3, 2}}));
  EXPECT_EQ(m.initial, (GridVertex{0, 0}));
  EXPECT_EQ(m.final, (GridVertex{4, 4}));
  EXPECT_EQ(m.complex.f_vector(), oracle::model_fvector(swiss_oracle()));
}

TEST(BuildProgramModel, SwissReducedTrianglesInCornerSquares) {
  ProgramModel m = build_program_model(parse_program(kSwissReduced));
  for (const Chain& t : m.complex.simplices(2)) {
    const auto& lo = m.states[static_cast<std::size_t>(t[0].rank)];
    bool corner = (lo[0] == 0 || lo[0] == 3) && (lo[1] == 0 || lo[1] == 3);
    EXPECT_TRUE(corner) << grid_name(lo);
  }
}

TEST(BuildProgramModel, CubeIsHollow) {
  ProgramModel m = build_program_model(parse_program(kCube));
  EXPECT_EQ(m.complex.count(0), 26u);
  EXPECT_EQ(m.complex.count(3), 0u);
  oracle::Program p{{{{'P', 0}, {'V', 0}}, {{'P', 0}, {'V', 0}}, {{'P', 0}, {'V', 0}}}, {2}};
  auto f = oracle::model_fvector(p);
  EXPECT_EQ(m.complex.f_vector(), f);
}

TEST(BuildProgramModel, SingleProcessIsItsNecklace) {
  ProgramModel m = build_program_model(parse_program("sem a = 1\nproc A = Pa.Va"));
  EXPECT_EQ(m.complex.f_vector(), (std::vector<std::size_t>{3, 2}));
}

TEST(BuildProgramModel, UnfilteredSquare) {
  auto f = factors_of("sem a = 1\nproc A = Pa\nproc B = Pa");
  ProgramModel m = build_product_model(f, {kUnbounded});
  EXPECT_EQ(m.complex.f_vector(), (std::vector<std::size_t>{4, 5, 2}));
}

TEST(BuildProgramModel, UnfilteredProductCounts) {
  auto f = factors_of("sem a = 1\nproc A = Pa.Va.Pa\nproc B = Pa.Va\nproc C = Pa.Va");
  ProgramModel m = build_product_model(f, {kUnbounded});
  EXPECT_EQ(m.complex.count(0), 4u * 3u * 3u);
  EXPECT_EQ(m.complex.top_dimension(), 3u);
  // (N1 * N2 * N3) unit cubes of 3! tetrahedra each
  EXPECT_EQ(m.complex.count(3), 3u * 2u * 2u * 6u);
}

TEST(BuildProgramModel, LowDimensionsMatchLiteralDefinitions) {
  oracle::Program p = swiss_oracle();
  ProgramModel m = build_program_model(parse_program(kSwissReduced));
  std::size_t valid_vertices = 0, valid_edges = 0;
  for (const auto& x : p.grid()) {
    bool literal = p.valid_state(x);
    valid_vertices += literal;
    EXPECT_EQ(m.find(GridVertex(x.begin(), x.end())).has_value(), literal);
    for (const auto& y : p.grid()) {
      bool step = x != y;
      for (std::size_t i = 0; i < x.size(); ++i) step = step && (y[i] - x[i] == 0 || y[i] - x[i] == 1);
      if (!step) continue;
      bool edge = p.valid_state(x) && p.valid_state(y) && p.valid_edge(x, y);
      valid_edges += edge;
      auto u = m.find(GridVertex(x.begin(), x.end())), w = m.find(GridVertex(y.begin(), y.end()));
      EXPECT_EQ(u && w && m.complex.contains({*u, *w}), edge);
    }
  }
  EXPECT_EQ(valid_vertices, 20u);
  EXPECT_EQ(valid_edges, 28u);
}

TEST(BuildProgramModel, FaceDegreesBoundedBySimplexDegree) {
  for (const char* text : {kSwissReduced, kCube}) {
    ProgramModel m = build_program_model(parse_program(text));
    auto as_product = [&](const Chain& c) {
      ProductSimplex s;
      for (VertexId v : c) s.push_back(m.states[static_cast<std::size_t>(v.rank)]);
      return s;
    };
    for (std::size_t d = 1; d <= m.complex.top_dimension(); ++d)
      for (const Chain& c : m.complex.simplices(d)) {
        DegreeVector whole = simplex_degree(m.factors, as_product(c));
        EXPECT_TRUE(within(whole, m.capacities));
        for (std::size_t i = 0; i <= d; ++i) {
          DegreeVector part = simplex_degree(m.factors, as_product(face(c, i)));
          for (std::size_t j = 0; j < whole.size(); ++j) EXPECT_LE(part[j], whole[j]);
        }
      }
  }
}

TEST(BuildProgramModel, ProjectionsAreFactorSimplices) {
  ProgramModel m = build_program_model(parse_program(kCube));
  for (std::size_t d = 1; d <= m.complex.top_dimension(); ++d)
    for (const Chain& c : m.complex.simplices(d))
      for (std::size_t i = 0; i < m.factors.size(); ++i) {
        std::int32_t lo = m.states[static_cast<std::size_t>(c.front().rank)][i];
        std::int32_t hi = m.states[static_cast<std::size_t>(c.back().rank)][i];
        EXPECT_LE(hi - lo, 1);
      }
}

TEST(BuildProgramModel, UnbalancedFinalStateInvalid) {
  ProgramModel m = build_program_model(parse_program("sem a = 1\nproc A = Pa\nproc B = Pa"));
  EXPECT_FALSE(m.find(m.final).has_value());
  EXPECT_EQ(m.complex.count(0), 3u);
}
