// Command-line front end: invariants, comparisons, reconstruction, twists and the
// exhaustive small-graph oracle.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pi1trunc/pi1trunc.hpp"

namespace {

using namespace pi1trunc;
using nlohmann::json;

// Exit codes: 0 success/true, 1 false/mismatch, 2 input error.
constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kInputError = 2;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Multigraph load_graph(const std::string& path) {
  try {
    return parse_graph(read_file(path));
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(path + ": " + e.what());
  }
}

EdgeBijection load_bijection(const std::string& path, const Multigraph& g, const Multigraph& g2) {
  try {
    return parse_bijection(read_file(path), g, g2);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(path + ": " + e.what());
  }
}

using AnyField = std::variant<RationalField, PrimeField>;

AnyField parse_field(const std::string& spec) {
  if (spec == "q") return RationalField{};
  if (spec.rfind("gf:", 0) == 0) {
    try {
      std::size_t used = 0;
      const auto p = std::stoull(spec.substr(3), &used);
      if (used + 3 != spec.size()) throw std::invalid_argument("trailing characters");
      return PrimeField(p);
    } catch (const std::exception& e) {
      throw InputError("bad field '" + spec + "': " + e.what());
    }
  }
  throw InputError("bad field '" + spec + "' (expected q or gf:<prime>)");
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string outcome_key(const std::tuple<bool, bool, bool>& k) {
  auto b = [](bool x) { return x ? "T" : "F"; };
  return std::string("equal=") + b(std::get<0>(k)) + ",isomorphic=" + b(std::get<1>(k)) +
         ",reconstructed=" + b(std::get<2>(k));
}

json report_json(const VerifyReport& r) {
  json outcomes = json::object();
  for (const auto& [k, v] : r.outcomes) outcomes[outcome_key(k)] = v;
  json graphs = json::object(), based = json::object();
  for (const auto& [m, n] : r.graphs_by_edges) graphs[std::to_string(m)] = n;
  for (const auto& [m, n] : r.based_graphs_by_edges) based[std::to_string(m)] = n;
  json samples = json::array();
  for (const auto& s : r.samples)
    samples.push_back({{"g", s.g},
                       {"g2", s.g2},
                       {"map", s.phi},
                       {"equal", s.equal},
                       {"isomorphic", s.isomorphic},
                       {"reconstructed", s.reconstructed}});
  return {{"max_edges", r.max_edges},
          {"level", r.level},
          {"field", r.field},
          {"graphs_by_edges", graphs},
          {"based_graphs_by_edges", based},
          {"pairs", r.pairs},
          {"cells", r.cells},
          {"outcomes", outcomes},
          {"disagreements", r.disagreements},
          {"disagreement_samples", samples},
          {"rank_formula_exceptions", r.rank_formula_exceptions}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Truncated fundamental-group-algebra invariants of based multigraphs"};
  app.require_subcommand(1);

  std::string graph_path, graph2_path, map_path, field_spec = "q", cut, side, map_out;
  int level = 2;
  bool as_json = false, allow_char2 = false;
  std::size_t max_edges = 4, cap = 5;
  unsigned threads = 1;

  auto add_field = [&](CLI::App* sub) {
    sub->add_option("--field", field_spec, "q or gf:<prime>")->capture_default_str();
  };
  auto add_level = [&](CLI::App* sub) {
    sub->add_option("--level", level, "truncation level")->check(CLI::IsMember({1, 2}))->capture_default_str();
  };

  auto* invariant = app.add_subcommand("invariant", "rref basis of the image subalgebra");
  invariant->add_option("graph", graph_path)->required();
  add_level(invariant);
  add_field(invariant);
  invariant->add_flag("--json", as_json, "emit JSON");

  auto* compare = app.add_subcommand("compare", "test phi_*(invariant of g1) == invariant of g2");
  compare->add_option("g1", graph_path)->required();
  compare->add_option("g2", graph2_path)->required();
  compare->add_option("--map", map_path, "edge bijection document")->required();
  add_level(compare);
  add_field(compare);
  compare->add_flag("--allow-char2", allow_char2, "permit comparison in characteristic 2");

  auto* reconstruct = app.add_subcommand("reconstruct", "extend the base match to a vertex isomorphism");
  reconstruct->add_option("g1", graph_path)->required();
  reconstruct->add_option("g2", graph2_path)->required();
  reconstruct->add_option("--map", map_path, "edge bijection document")->required();

  auto* twist = app.add_subcommand("twist", "Whitney twist at a 2-separation");
  twist->add_option("graph", graph_path)->required();
  twist->add_option("--cut", cut, "<u>,<v>")->required();
  twist->add_option("--side", side, "comma-separated edges of the twisted side")->required();
  twist->add_option("--map-out", map_out, "write the induced edge bijection here");

  auto* cyclespace = app.add_subcommand("cyclespace", "rref basis of the cycle space");
  cyclespace->add_option("graph", graph_path)->required();
  add_field(cyclespace);

  auto* oracle = app.add_subcommand("oracle", "exhaustive check over small 2-edge-connected multigraphs");
  oracle->add_option("--max-edges", max_edges)->capture_default_str();
  oracle->add_option("--cap", cap, "largest accepted --max-edges")->capture_default_str();
  oracle->add_option("--threads", threads)->capture_default_str();
  add_level(oracle);
  add_field(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*invariant) {
      const auto g = load_graph(graph_path);
      return std::visit(
          [&](const auto& field) {
            const auto s = image_subalgebra(g, level, field);
            if (as_json) {
              print(subalgebra_json(s, field.name()));
            } else {
              std::cout << "level " << s.level << ", rank " << s.rank() << ", edges";
              for (const auto& e : s.edge_order) std::cout << " " << e;
              std::cout << "\n";
              for (std::size_t i = 0; i < s.basis.rows(); ++i) {
                for (const auto& x : s.basis.row(i)) std::cout << " " << x.to_string();
                std::cout << "\n";
              }
            }
            return kTrue;
          },
          parse_field(field_spec));
    }
    if (*compare) {
      const auto g = load_graph(graph_path), g2 = load_graph(graph2_path);
      const auto phi = load_bijection(map_path, g, g2);
      return std::visit(
          [&](const auto& field) {
            const bool eq = invariants_equal(g, g2, phi, level, field, CompareOptions{allow_char2});
            print({{"equal", eq}, {"level", level}, {"field", field.name()}});
            return eq ? kTrue : kFalse;
          },
          parse_field(field_spec));
    }
    if (*reconstruct) {
      const auto g = load_graph(graph_path), g2 = load_graph(graph2_path);
      const auto phi = load_bijection(map_path, g, g2);
      const auto result = reconstruct_isomorphism(g, g2, phi);
      print(reconstruct_json(result));
      return succeeded(result) ? kTrue : kFalse;
    }
    if (*twist) {
      const auto g = load_graph(graph_path);
      const auto uv = split_commas(cut);
      if (uv.size() != 2) throw InputError("--cut expects exactly two vertices");
      const auto edges = split_commas(side);
      const auto result = whitney_twist(g, uv[0], uv[1], {edges.begin(), edges.end()});
      std::cout << serialize_graph(result.graph);
      if (!map_out.empty()) {
        std::ofstream out(map_out);
        if (!out) throw InputError("cannot write '" + map_out + "'");
        out << serialize_bijection(result.phi);
      }
      return kTrue;
    }
    if (*cyclespace) {
      const auto g = load_graph(graph_path);
      return std::visit(
          [&](const auto& field) {
            print({{"edge_order", g.edge_ids()}, {"basis", matrix_json(cycle_space(g, field))}});
            return kTrue;
          },
          parse_field(field_spec));
    }
    if (*oracle) {
      return std::visit(
          [&](const auto& field) {
            const auto report = enumerate_and_verify(VerifyOptions{max_edges, cap, level, threads, 10}, field);
            print(report_json(report));
            return report.disagreements == 0 ? kTrue : kFalse;
          },
          parse_field(field_spec));
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
