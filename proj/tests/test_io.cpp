#include <gtest/gtest.h>

#include <regex>

#include "pvtopo/report.hpp"
#include "support.hpp"

using namespace pvtopo;

TEST(ParseComplex, Fixture) {
  OrderedSSet x = test::hollow_cube();
  EXPECT_EQ(x.f_vector(), (std::vector<std::size_t>{8, 18, 12}));
  EXPECT_EQ(x.name(VertexId{0}), "0");
  EXPECT_EQ(x.name(VertexId{7}), "7");
}

TEST(ParseComplex, IntegerVertexNames) {
  OrderedSSet x = parse_complex(R"({"simplices": [[1, 2, 3]]})");
  EXPECT_EQ(x.f_vector(), (std::vector<std::size_t>{3, 3, 1}));
  EXPECT_TRUE(x.has_vertex(x.vertex("2")));
}

TEST(ParseComplex, MalformedJsonIsPositioned) {
  try {
    parse_complex("{\n  \"simplices\": [[\"a\", \"b\"],\n  ]\n}");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Syntax);
    EXPECT_EQ(e.pos().line, 3);
    EXPECT_EQ(e.pos().column, 3);
  }
}

TEST(ParseComplex, StructuralErrors) {
  auto kind = [](const char* text) {
    try {
      parse_complex(text);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::PreconditionViolated;  // no error
  };
  EXPECT_EQ(kind(R"({"vertices": ["a"]})"), ErrorKind::InvalidInput);
  EXPECT_EQ(kind(R"({"simplices": [[]]})"), ErrorKind::InvalidInput);
  EXPECT_EQ(kind(R"({"simplices": [[1.5]]})"), ErrorKind::InvalidInput);
  EXPECT_EQ(kind(R"({"vertices": ["a", "b"], "simplices": [["a", "c"]]})"), ErrorKind::UnknownVertex);
  EXPECT_EQ(kind(R"({"simplices": [["a", "b"], ["b", "a"]]})"), ErrorKind::CyclicOrder);
  EXPECT_EQ(kind(R"({"simplices": [["a", "a"]]})"), ErrorKind::DuplicateVertexInSimplex);
}

TEST(ComplexJson, RoundTrip) {
  for (const char* f : {"hollow_cube.json", "petri_net.json", "swiss_reduced.pv", "cube.pv"}) {
    OrderedSSet x = test::fixture_complex(f);
    OrderedSSet y = parse_complex(complex_json(x).dump());
    EXPECT_EQ(y.vertex_names(), x.vertex_names()) << f;
    for (std::size_t d = 0; d <= x.top_dimension(); ++d)
      EXPECT_TRUE(std::equal(x.simplices(d).begin(), x.simplices(d).end(), y.simplices(d).begin(),
                             y.simplices(d).end()))
          << f;
  }
}

TEST(LoadInput, DetectsKind) {
  LoadedInput p = test::fixture("swiss_reduced.pv");
  EXPECT_EQ(p.kind, LoadedInput::Kind::Program);
  EXPECT_EQ(p.complex.name(p.initial), "0,0");
  EXPECT_EQ(p.complex.name(*p.final), "4,4");
  LoadedInput c = test::fixture("petri_net.json");
  EXPECT_EQ(c.kind, LoadedInput::Kind::Complex);
  EXPECT_EQ(c.complex.name(c.initial), "a");
  EXPECT_EQ(c.complex.name(*c.final), "l");
  EXPECT_THROW(load_input("{}"), Error);
}

TEST(LoadInput, DigestIsStable) {
  EXPECT_EQ(digest(""), "cbf29ce484222325");
  EXPECT_EQ(digest("a"), "af63dc4c8601ec8c");
  EXPECT_NE(test::fixture("cube.pv").digest, test::fixture("swiss_reduced.pv").digest);
}

TEST(ResolveVertex, GridSpellings) {
  LoadedInput in = test::fixture("swiss_reduced.pv");
  VertexId v = in.complex.vertex("1,1");
  EXPECT_EQ(resolve_vertex(in, "1,1"), v);
  EXPECT_EQ(resolve_vertex(in, "(1, 1)"), v);
  EXPECT_THROW(resolve_vertex(in, "(2,2)"), Error);  // invalid state
}

TEST(Report, ReingestingPreservesCounts) {
  for (const char* f : {"swiss_reduced.pv", "hollow_cube.json", "cube.pv"}) {
    LoadedInput in = test::fixture(f);
    std::vector<ExecSummary> q{summarize_execspace(in.complex, in.initial, *in.final)};
    std::string text = full_report(in, q).dump(2);
    LoadedInput again = load_input(text);
    EXPECT_EQ(again.complex.f_vector(), in.complex.f_vector()) << f;
    EXPECT_EQ(again.complex.vertex_names(), in.complex.vertex_names()) << f;
    ExecSummary s = summarize_execspace(again.complex, again.initial, *again.final);
    EXPECT_EQ(s.fvector, q[0].fvector) << f;
    EXPECT_EQ(s.homology.betti(), q[0].homology.betti()) << f;
  }
}

TEST(Report, Contents) {
  LoadedInput in = test::fixture("swiss_reduced.pv");
  auto r = full_report(in, {summarize_execspace(in.complex, in.initial, *in.final)});
  EXPECT_EQ(r["input"]["kind"], "program");
  EXPECT_EQ(r["model"]["counts"], nlohmann::json({20, 28, 8}));
  EXPECT_EQ(r["model"]["invalid"], nlohmann::json({"1,2", "2,1", "2,2", "2,3", "3,2"}));
  EXPECT_EQ(r["states"]["deadlocks"], nlohmann::json({"1,1"}));
  EXPECT_EQ(r["execspace"][0]["pi0"], 2);
  EXPECT_EQ(r["execspace"][0]["pathClasses"], 2);
}

TEST(Report, Deterministic) {
  LoadedInput a = test::fixture("petri_net.json"), b = test::fixture("petri_net.json");
  EXPECT_EQ(full_report(a, {summarize_execspace(a.complex, a.initial, *a.final)}).dump(),
            full_report(b, {summarize_execspace(b.complex, b.initial, *b.final, {std::nullopt, 4})}).dump());
}

TEST(HomologyString, Format) {
  OrderedSSet x = test::petri_net();
  EXPECT_EQ(homology_string(summarize_execspace(x, x.vertex("a"), x.vertex("l")).homology),
            "H0 = Z, H1 = Z^2, H2 = 0");
  HomologyResult torsion;
  torsion.groups.push_back({0, 1, {}});
  torsion.groups.push_back({1, 0, {Integer(2)}});
  EXPECT_EQ(homology_string(torsion), "H0 = Z, H1 = Z/2");
}

TEST(Dot, HollowCube) {
  OrderedSSet x = test::hollow_cube();
  StateReport r = reachability(x, x.vertex("0"), x.vertex("7"));
  std::string dot = to_dot(x, &r);
  EXPECT_EQ(dot.rfind("digraph", 0), 0u);
  std::size_t edges = 0, pos = 0;
  while ((pos = dot.find("->", pos)) != std::string::npos) ++edges, pos += 2;
  EXPECT_EQ(edges, 18u);
  std::regex node(R"(^  "[0-7]"( \[.*\])?;$)");
  std::size_t nodes = 0;
  std::istringstream lines(dot);
  for (std::string line; std::getline(lines, line);) nodes += std::regex_match(line, node);
  EXPECT_EQ(nodes, 8u);
}

TEST(Dot, MarksDiagnostics) {
  LoadedInput in = test::fixture("swiss_reduced.pv");
  StateReport r = reachability(in.complex, in.initial, in.final);
  std::string dot = to_dot(in.complex, &r);
  EXPECT_NE(dot.find("\"1,1\" [shape=doublecircle, style=dashed]"), std::string::npos);
  EXPECT_NE(dot.find("\"3,3\" [color=gray, fontcolor=gray]"), std::string::npos);
}
