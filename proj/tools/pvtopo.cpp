// pvtopo: simplicial models of PV programs and their execution spaces.
//
// Exit codes: 0 success, 1 positioned input error, 2 semantic error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pvtopo/pvtopo.hpp"

namespace {

using namespace pvtopo;

unsigned thread_budget() {
  const char* env = std::getenv("PVTOPO_THREADS");
  if (!env || !*env) return 1;
  try {
    return static_cast<unsigned>(std::stoul(env));
  } catch (const std::exception&) {
    return 1;
  }
}

std::string show(const OrderedSSet& x, VertexId v) {
  const std::string& name = x.name(v);
  return name.find(',') == std::string::npos ? name : "(" + name + ")";
}

std::string show_list(const OrderedSSet& x, const std::vector<VertexId>& vs) {
  std::string out = "[";
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? ", " : "") + show(x, vs[i]);
  return out + "]";
}

std::string show_path(const OrderedSSet& x, const EdgePath& p) {
  std::string out;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) out += (i ? " -> " : "") + show(x, p.vertices[i]);
  return out;
}

struct Endpoints {
  VertexId from;
  VertexId to;
};

Endpoints endpoints(const LoadedInput& in, const std::string& from, const std::string& to) {
  Endpoints e{in.initial, in.initial};
  if (!from.empty()) e.from = resolve_vertex(in, from);
  if (!to.empty()) {
    e.to = resolve_vertex(in, to);
  } else {
    if (!in.final) throw Error(ErrorKind::UnknownVertex, "final state is not valid; pass --to");
    e.to = *in.final;
  }
  return e;
}

int cmd_model(const LoadedInput& in) {
  auto f = in.complex.f_vector();
  std::size_t dims = f.size();
  if (in.model) dims = std::max(dims, in.model->factors.size() + 1);
  std::cout << "input: " << (in.program ? "program" : "complex") << " (digest " << in.digest << ")\n";
  for (std::size_t d = 0; d < dims; ++d)
    std::cout << (d ? ", " : "") << "dim " << d << ": " << (d < f.size() ? f[d] : 0);
  std::cout << "\n";
  std::cout << "initial: " << show(in.complex, in.initial) << "\n";
  std::cout << "final: " << (in.final ? show(in.complex, *in.final) : std::string("(invalid)")) << "\n";
  if (in.model) {
    auto invalid = in.model->invalid_states();
    std::cout << "invalid states: " << invalid.size();
    for (std::size_t i = 0; i < invalid.size(); ++i) std::cout << (i ? " " : " ") << "(" << grid_name(invalid[i]) << ")";
    std::cout << "\n";
  }
  return 0;
}

int cmd_states(const LoadedInput& in) {
  StateReport r = reachability(in.complex, in.initial, in.final);
  std::cout << "valid: " << r.valid.size() << "\n";
  std::cout << "reachable: " << r.reachable.size() << "\n";
  std::cout << "coreachable: " << r.coreachable.size() << "\n";
  std::cout << "deadlocks: " << show_list(in.complex, r.deadlocks) << "\n";
  std::cout << "unreachable: " << show_list(in.complex, r.unreachable) << "\n";
  std::cout << "doomed: " << show_list(in.complex, r.doomed) << "\n";
  return 0;
}

int cmd_pathcat(const LoadedInput& in, const std::string& from, const std::string& to) {
  auto e = endpoints(in, from, to);
  HomClasses h = hom_classes(in.complex, e.from, e.to);
  std::cout << h.size() << (h.size() == 1 ? " class" : " classes") << "\n";
  for (std::size_t k = 0; k < h.size(); ++k)
    std::cout << "  [" << k << "] " << h.classes[k].size() << " paths, representative "
              << show_path(in.complex, h.representative(k)) << "\n";
  return 0;
}

int cmd_execspace(const LoadedInput& in, const std::string& from, const std::string& to,
                  std::optional<std::size_t> max_dim, bool list) {
  auto e = endpoints(in, from, to);
  MappingSpaceOptions options{max_dim, thread_budget()};
  ExecSummary s = summarize_execspace(in.complex, e.from, e.to, options);
  std::cout << "from " << show(in.complex, s.from) << " to " << show(in.complex, s.to) << "\n";
  std::cout << "necklaces: " << s.necklaces << "\n";
  std::cout << "f-vector: (";
  for (std::size_t d = 0; d < s.fvector.size(); ++d) std::cout << (d ? ", " : "") << s.fvector[d];
  std::cout << ")\n";
  std::cout << "pi0: " << s.pi0 << "\n";
  std::cout << "homology: " << homology_string(s.homology) << "\n";
  std::cout << "path classes: " << s.path_classes << "\n";
  if (list) {
    SSetPresentation p = mapping_space(in.complex, e.from, e.to, options);
    for (std::size_t d = 0; d < p.simplices.size(); ++d)
      for (const auto& simplex : p.simplices[d]) std::cout << "dim " << d << ": " << describe(in.complex, simplex) << "\n";
  }
  return 0;
}

int cmd_export(const LoadedInput& in, const std::string& format, const std::string& out_path,
               std::optional<std::size_t> max_dim) {
  std::string text;
  if (format == "dot") {
    StateReport r = reachability(in.complex, in.initial, in.final);
    text = to_dot(in.complex, &r);
  } else {
    std::vector<ExecSummary> queries;
    if (in.final)
      queries.push_back(summarize_execspace(in.complex, in.initial, *in.final, {max_dim, thread_budget()}));
    text = full_report(in, queries).dump(2) + "\n";
  }
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw Error(ErrorKind::InvalidInput, "cannot write '" + out_path + "'");
    f << text;
  }
  return 0;
}

// Lint warnings plus structural self-checks of the model.
int cmd_check(const LoadedInput& in) {
  int problems = 0;
  if (in.program)
    for (const auto& w : lint_program(*in.program)) std::cout << "warning: " << describe(*in.program, w) << "\n";
  const OrderedSSet& x = in.complex;
  for (std::size_t d = 1; d <= x.top_dimension(); ++d)
    for (const Chain& c : x.simplices(d)) {
      for (std::size_t i = 0; i <= d; ++i)
        if (!x.contains(face(c, i))) {
          std::cout << "error: missing face " << i << " of a " << d << "-simplex\n";
          ++problems;
        }
      if (in.model && !is_valid(in.model->factors, [&] {
            ProductSimplex s;
            for (VertexId v : c) s.push_back(in.model->states[static_cast<std::size_t>(v.rank)]);
            return s;
          }(), in.model->capacities)) {
        std::cout << "error: stored simplex exceeds capacities\n";
        ++problems;
      }
    }
  if (!in.final) std::cout << "warning: final state exceeds the capacities\n";
  std::cout << (problems ? "check failed" : "ok") << "\n";
  return problems ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simplicial models of PV programs and their execution spaces"};
  app.require_subcommand(1);

  std::string file, from, to, format = "json", out_path;
  std::optional<std::size_t> max_dim;
  bool list = false;

  auto* model = app.add_subcommand("model", "Per-dimension simplex counts of the model");
  auto* states = app.add_subcommand("states", "Deadlocks, reachability and doomed states");
  auto* pathcat = app.add_subcommand("pathcat", "Path-category classes between two vertices");
  auto* execspace = app.add_subcommand("execspace", "Mapping space between two vertices");
  auto* exporter = app.add_subcommand("export", "Write the model as DOT or the full JSON report");
  auto* check = app.add_subcommand("check", "Lint the program and validate the model");

  for (auto* sub : {model, states, pathcat, execspace, exporter, check})
    sub->add_option("file", file, "PV program or complex file")->required();
  for (auto* sub : {pathcat, execspace}) {
    sub->add_option("--from", from, "start vertex (default: initial state)");
    sub->add_option("--to", to, "end vertex (default: final state)");
  }
  execspace->add_option("--max-dim", max_dim, "highest mapping-space dimension to build");
  execspace->add_flag("--list", list, "print every simplex");
  exporter->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  exporter->add_option("--out", out_path, "output path (default: stdout)");
  exporter->add_option("--max-dim", max_dim, "highest mapping-space dimension in the report");

  CLI11_PARSE(app, argc, argv);

  try {
    LoadedInput in = load_input(read_file(file));
    if (model->parsed()) return cmd_model(in);
    if (states->parsed()) return cmd_states(in);
    if (pathcat->parsed()) return cmd_pathcat(in, from, to);
    if (execspace->parsed()) return cmd_execspace(in, from, to, max_dim, list);
    if (exporter->parsed()) return cmd_export(in, format, out_path, max_dim);
    if (check->parsed()) return cmd_check(in);
  } catch (const ParseError& e) {
    std::cerr << file << ":" << e.pos().line << ":" << e.pos().column << ": " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << file << ": " << e.what() << "\n";
    return 2;
  }
  return 0;
}
