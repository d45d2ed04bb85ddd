#include "cli.hpp"

#include "sqroot/generators.hpp"
#include "sqroot/graph_io.hpp"
#include "sqroot/oracle.hpp"
#include "sqroot/ptolemaic_root.hpp"
#include "sqroot/recognizers.hpp"
#include "sqroot/split_root.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>

namespace sqroot::cli {
namespace {

using json = nlohmann::ordered_json;

enum class Format { EdgeList, Dot, Json };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Graph read_input(const std::string& path, std::istream& in) {
  if (path == "-") return parse_graph(in);
  std::ifstream file(path);
  if (!file) throw UsageError("cannot open " + path);
  return parse_graph(file);
}

json graph_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

json witness_json(const std::optional<ForbiddenPattern>& w) {
  if (!w) return nullptr;
  return {{"pattern", to_string(w->id)}, {"vertices", w->witness}};
}

std::string vertex_list(const std::vector<Vertex>& vs) {
  std::string s;
  for (Vertex v : vs) s += " " + std::to_string(v);
  return s;
}

// Report skeleton with every documented field present.
json report(std::string_view command, std::string_view verdict) {
  return {{"command", command}, {"verdict", verdict}, {"stage", nullptr}, {"edges", nullptr},
          {"witness", nullptr}, {"certificate", nullptr}, {"graph", nullptr}};
}

void emit_graph(std::ostream& out, const Graph& g, Format fmt) {
  out << (fmt == Format::Dot ? serialize_dot(g) : serialize_edge_list(g));
}

int do_square(const Graph& g, Format fmt, std::ostream& out) {
  const Graph sq = square(g);
  if (fmt == Format::Json) {
    json r = report("square", "ok");
    r["edges"] = sq.edge_count();
    r["graph"] = graph_json(sq);
    out << r.dump(2) << "\n";
  } else {
    emit_graph(out, sq, fmt);
  }
  return kYes;
}

int do_check(const std::string& cls, const Graph& g, Format fmt, std::ostream& out) {
  bool verdict = false;
  std::optional<ForbiddenPattern> witness;
  json certificate = nullptr;
  std::vector<std::string> lines;

  if (cls == "chordal") {
    const ChordalCheck c = chordal_order(g);
    verdict = c.chordal();
    if (verdict) {
      certificate = {{"elimination_order", c.order->sequence}};
      lines.push_back("order" + vertex_list(c.order->sequence));
    } else {
      certificate = {{"failed_at", c.failed_at}};
      lines.push_back("failed_at " + std::to_string(c.failed_at));
    }
  } else if (cls == "split") {
    const auto parts = split_partition(g);
    verdict = parts.has_value();
    if (parts) {
      certificate = {{"clique", parts->clique}, {"independent", parts->independent}};
      lines.push_back("clique" + vertex_list(parts->clique));
      lines.push_back("independent" + vertex_list(parts->independent));
    }
  } else if (cls == "distance-hereditary") {
    verdict = is_distance_hereditary(g);
  } else if (cls == "ptolemaic") {
    verdict = is_ptolemaic(g);
    if (!verdict && is_connected(g) && g.vertex_count() > 0) {
      const ChordalCheck c = chordal_order(g);
      if (!c.chordal()) {
        certificate = {{"failed_at", c.failed_at}};
        lines.push_back("not-chordal failed_at " + std::to_string(c.failed_at));
      } else {
        witness = find_gem(g);
      }
    } else if (!verdict) {
      lines.push_back("not-connected");
    }
  } else if (cls == "hch") {
    HellyCheck h = hereditary_clique_helly(g);
    verdict = h.hereditary_clique_helly;
    witness = std::move(h.witness);
  } else {  // 3sun-free
    witness = find_3sun(g);
    verdict = !witness;
  }

  if (fmt == Format::Json) {
    json r = report("check " + cls, verdict ? "true" : "false");
    r["witness"] = witness_json(witness);
    r["certificate"] = certificate;
    out << r.dump(2) << "\n";
  } else {
    out << cls << "=" << (verdict ? "true" : "false") << "\n";
    for (const auto& l : lines) out << l << "\n";
    if (witness) out << "witness " << to_string(witness->id) << vertex_list(witness->witness) << "\n";
  }
  return verdict ? kYes : kNo;
}

int do_root(const std::string& kind, const Graph& g, Format fmt, std::ostream& out) {
  const bool ptolemaic = kind == "ptolemaic";
  const RootResult r = ptolemaic ? ptolemaic_square_root(g) : three_sun_free_split_root(g);

  if (fmt == Format::Json) {
    json j = report("root " + kind, r.found() ? "root" : "no-root");
    if (r.stage) j["stage"] = to_string(*r.stage);
    j["witness"] = witness_json(r.witness);
    if (r.found()) {
      j["edges"] = r.edges();
      json cert = {{"square_matches", r.square_matches}, {"in_class", r.in_class}};
      if (ptolemaic) {
        cert["minimal"] = true;
        cert["tree"] = r.root_is_tree;
        cert["block_graph"] = r.root_is_block_graph;
      } else {
        cert["clique"] = r.split->clique;
        cert["representatives"] = r.split->representatives;
      }
      j["certificate"] = std::move(cert);
      j["graph"] = graph_json(*r.root);
    }
    out << j.dump(2) << "\n";
    return r.found() ? kYes : kNo;
  }

  if (!r.found()) {
    out << "no-root stage=" << to_string(*r.stage) << "\n";
    if (r.witness) out << "witness " << to_string(r.witness->id) << vertex_list(r.witness->witness) << "\n";
    return kNo;
  }
  emit_graph(out, *r.root, fmt);
  if (ptolemaic) {
    out << "edges=" << r.edges() << " minimal=true\n";
  } else {
    out << "edges=" << r.edges() << "\n";
    out << "clique" << vertex_list(r.split->clique) << "\n";
    out << "representatives" << vertex_list(r.split->representatives) << "\n";
  }
  return kYes;
}

int do_oracle(const std::string& cls, const Graph& g, std::uint64_t budget, Format fmt, std::ostream& out) {
  const OracleResult r = min_root_bruteforce(g, *root_class_from_string(cls), budget);
  const int code = r.status == OracleStatus::Found ? kYes : r.status == OracleStatus::NoRoot ? kNo : kBudgetExceeded;
  const char* verdict = r.status == OracleStatus::Found ? "root" : r.status == OracleStatus::NoRoot ? "no-root"
                                                                                                  : "budget-exceeded";
  if (fmt == Format::Json) {
    json j = report("oracle " + cls, verdict);
    j["certificate"] = {{"examined", r.examined}};
    if (r.root) {
      j["edges"] = r.root->edge_count();
      j["graph"] = graph_json(*r.root);
    }
    out << j.dump(2) << "\n";
    return code;
  }
  if (r.root) {
    emit_graph(out, *r.root, fmt);
    out << "edges=" << r.root->edge_count() << "\n";
  } else {
    out << verdict << " examined=" << r.examined << "\n";
  }
  return code;
}

struct GenOptions {
  std::string mode;
  std::size_t n = 10;
  std::uint64_t seed = 0;
  std::vector<double> weights{1.0, 1.0, 1.0};
  std::size_t clique = 3;
  std::size_t independent = 5;
  double density = 0.5;
  std::string split_mode = "nested";
  bool no_shuffle = false;
};

int do_gen(const GenOptions& o, Format fmt, std::ostream& out) {
  Graph g;
  std::string meta;
  if (o.mode == "ptolemaic") {
    PtolemaicGenSpec spec;
    spec.vertices = o.n;
    spec.seed = o.seed;
    spec.pendant_weight = o.weights.at(0);
    spec.true_twin_weight = o.weights.at(1);
    spec.false_twin_weight = o.weights.at(2);
    spec.shuffle_labels = !o.no_shuffle;
    g = random_ptolemaic(spec);
    meta = describe(spec);
  } else {
    SplitGenSpec spec;
    spec.clique_size = o.clique;
    spec.independent_size = o.independent;
    spec.density = o.density;
    spec.mode = o.split_mode == "nested"    ? SplitMode::Nested
                : o.split_mode == "laminar" ? SplitMode::Laminar
                                            : SplitMode::Rejection;
    spec.seed = o.seed;
    spec.shuffle_labels = !o.no_shuffle;
    g = random_3sunfree_split(spec);
    meta = describe(spec);
  }
  if (fmt == Format::Json) {
    json j = report("gen " + o.mode, "ok");
    j["edges"] = g.edge_count();
    j["certificate"] = {{"metadata", meta.substr(2, meta.size() - 3)}};
    j["graph"] = graph_json(g);
    out << j.dump(2) << "\n";
  } else {
    out << (fmt == Format::Dot ? "// " + meta.substr(2) : meta);
    emit_graph(out, g, fmt);
  }
  return kYes;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Square roots of graphs: ptolemaic and 3-sun-free split roots", "sqroot"};
  app.require_subcommand(1);
  app.fallthrough();

  Format fmt = Format::EdgeList;
  const std::map<std::string, Format> formats{{"edgelist", Format::EdgeList}, {"dot", Format::Dot}, {"json", Format::Json}};
  app.add_option("-f,--format", fmt, "Output format")->transform(CLI::CheckedTransformer(formats));

  std::string input = "-";
  std::string cls;
  std::uint64_t budget = kDefaultOracleBudget;

  auto* square_cmd = app.add_subcommand("square", "Print the square of the input graph");
  square_cmd->add_option("input", input, "Edge-list file, '-' for stdin");

  auto* check_cmd = app.add_subcommand("check", "Test membership in a graph class");
  check_cmd->add_option("class", cls, "Graph class")
      ->required()
      ->check(CLI::IsMember({"chordal", "split", "distance-hereditary", "ptolemaic", "hch", "3sun-free"}));
  check_cmd->add_option("input", input, "Edge-list file, '-' for stdin");

  auto* root_cmd = app.add_subcommand("root", "Compute a square root in a class");
  root_cmd->add_option("class", cls, "Root class")->required()->check(CLI::IsMember({"ptolemaic", "split3sf"}));
  root_cmd->add_option("input", input, "Edge-list file, '-' for stdin");

  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive minimum square root search");
  oracle_cmd->add_option("class", cls, "Root class")->required()->check(CLI::IsMember({"ptolemaic", "split3sf", "any"}));
  oracle_cmd->add_option("input", input, "Edge-list file, '-' for stdin");
  oracle_cmd->add_option("--budget", budget, "Maximum number of edge subsets to test")->check(CLI::PositiveNumber);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Emit a random test graph");
  gen_cmd->add_option("mode", gen.mode, "Generator")->required()->check(CLI::IsMember({"ptolemaic", "split3sf"}));
  gen_cmd->add_option("--n", gen.n, "Vertex count (ptolemaic)");
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_option("--weights", gen.weights, "Pendant,true-twin,false-twin weights")->delimiter(',')->expected(3);
  gen_cmd->add_option("--clique", gen.clique, "Clique size (split3sf)");
  gen_cmd->add_option("--independent", gen.independent, "Independent set size (split3sf)");
  gen_cmd->add_option("--density", gen.density, "Edge density between the parts (split3sf)");
  gen_cmd->add_option("--split-mode", gen.split_mode, "nested, laminar or rejection")
      ->check(CLI::IsMember({"nested", "laminar", "rejection"}));
  gen_cmd->add_flag("--no-shuffle", gen.no_shuffle, "Keep construction order as vertex labels");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kYes;
  } catch (const CLI::ParseError& e) {
    err << "sqroot: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (gen_cmd->parsed()) return do_gen(gen, fmt, out);
    const Graph g = read_input(input, in);
    if (square_cmd->parsed()) return do_square(g, fmt, out);
    if (check_cmd->parsed()) return do_check(cls, g, fmt, out);
    if (root_cmd->parsed()) return do_root(cls, g, fmt, out);
    return do_oracle(cls, g, budget, fmt, out);
  } catch (const ParseError& e) {
    err << "sqroot: input " << e.what() << "\n";
  } catch (const UsageError& e) {
    err << "sqroot: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "sqroot: " << e.what() << "\n";
  } catch (const GenerationError& e) {
    err << "sqroot: " << e.what() << "\n";
  }
  return kUsageError;
}

}  // namespace sqroot::cli
