#include "linkred/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <random>
#include <sstream>

#include "linkred/error.hpp"
#include "linkred/reduction.hpp"
#include "linkred/render.hpp"
#include "linkred/wire.hpp"

namespace linkred::cli {

using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Inline JSON when the argument starts with '{' or '[', otherwise a path.
json load_payload(const std::string& arg, const std::string& flag) {
  std::string text = arg;
  if (arg.empty() || (arg.front() != '{' && arg.front() != '[')) {
    std::ifstream in(arg);
    if (!in) throw UsageError(flag + ": cannot read '" + arg + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw UsageError(flag + ": not valid JSON");
  return j;
}

VertexSubset parse_subset(const std::string& text) {
  if (!text.empty() && text.front() == '[') return wire::subset_from_json(json::parse(text));
  std::vector<int> members;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size() || v < 1) throw std::invalid_argument(item);
      members.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("--subset: '" + item + "' is not a positive integer");
    }
  }
  return VertexSubset(members);
}

void emit(std::ostream& out, const std::string& outfile, const std::string& text) {
  if (outfile.empty()) {
    out << text;
    if (text.empty() || text.back() != '\n') out << '\n';
    return;
  }
  std::ofstream file(outfile);
  if (!file) throw UsageError("--out: cannot write '" + outfile + "'");
  file << text;
}

std::string subset_text(const VertexSubset& s) {
  std::string t = "{";
  for (int v : s) t += (t.size() > 1 ? "," : "") + std::to_string(v);
  return t + "}";
}

struct Options {
  std::string graph, braid, diagram, subset, out, format = "json";
  int k = -1;
  int max_n = 5;
  int limit = kDefaultExhaustiveLimit;
  std::uint64_t seed = 1;
  int samples = 100;
};

LinkDiagram diagram_input(const Options& o) {
  const int given = !o.graph.empty() + !o.braid.empty() + !o.diagram.empty();
  if (given != 1) throw UsageError("give exactly one of --graph, --braid, --diagram");
  if (!o.graph.empty()) return build_link(wire::graph_from_json(load_payload(o.graph, "--graph")));
  if (!o.braid.empty()) return trace_closure(wire::braid_from_json(load_payload(o.braid, "--braid")));
  return wire::diagram_from_json(load_payload(o.diagram, "--diagram"));
}

Graph graph_input(const Options& o) {
  if (o.graph.empty()) throw UsageError("--graph is required");
  return wire::graph_from_json(load_payload(o.graph, "--graph"));
}

int cmd_reduce(const Options& o, std::ostream& out) {
  const Graph g = graph_input(o);
  const auto inst = make_instance(g, std::max(o.k, 0));
  emit(out, o.out, wire::to_json(inst).dump(2));
  return kSuccess;
}

int cmd_solve(const Options& o, std::ostream& out) {
  const Graph g = graph_input(o);
  if (o.k < 0) throw UsageError("-k is required");
  if (o.k > g.n()) throw UsageError("-k exceeds the number of vertices");
  const auto link = build_link(g);
  const auto link_answer = find_trivial_sublink(link, o.k, o.limit);
  const auto best = best_independent_set(g, o.limit);
  const bool oracle_yes = best.k >= o.k;
  std::optional<VertexSubset> oracle_witness;
  if (oracle_yes) {
    // Smallest k-subset in lexicographic order, matching the link route's scan.
    std::vector<int> pick;
    const auto search = [&](auto&& self, int from) -> bool {
      if (static_cast<int>(pick.size()) == o.k) {
        if (is_independent_set(g, VertexSubset(pick))) {
          oracle_witness = VertexSubset(pick);
          return true;
        }
        return false;
      }
      for (int v = from; v <= g.n(); ++v) {
        pick.push_back(v);
        if (self(self, v + 1)) return true;
        pick.pop_back();
      }
      return false;
    };
    search(search, 1);
  }
  const bool agree = link_answer.yes == oracle_yes && !link_answer.saw_unknown;
  json report{{"k", o.k},
              {"answer", oracle_yes ? "YES" : "NO"},
              {"agree", agree},
              {"link_route",
               {{"answer", link_answer.yes ? "YES" : "NO"},
                {"witness", link_answer.witness ? json(link_answer.witness->members()) : json(nullptr)},
                {"saw_unknown", link_answer.saw_unknown}}},
              {"oracle_route",
               {{"answer", oracle_yes ? "YES" : "NO"},
                {"witness", oracle_witness ? json(oracle_witness->members()) : json(nullptr)},
                {"max_independent", best.k}}}};
  if (o.format == "text") {
    std::string line = std::string(oracle_yes ? "YES" : "NO");
    if (oracle_witness) line += " witness " + subset_text(*oracle_witness);
    line += agree ? " (link route agrees)" : " (ROUTES DISAGREE)";
    emit(out, o.out, line);
  } else {
    emit(out, o.out, report.dump(2));
  }
  if (!agree) return kDisagreement;
  return oracle_yes ? kSuccess : kNo;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Graph g = graph_input(o);
  const auto lk = linking_matrix(build_link(g));
  const bool holds = lk.equals_adjacency(g);
  json report{{"holds", holds},
              {"n", g.n()},
              {"linking", wire::to_json(lk)},
              {"linking_mod2", lk.mod2()},
              {"adjacency", g.matrix()}};
  emit(out, o.out, o.format == "text" ? std::string(holds ? "linking matrix equals adjacency matrix"
                                                          : "MISMATCH")
                                      : report.dump(2));
  return holds ? kSuccess : kDisagreement;
}

int cmd_sublink(const Options& o, std::ostream& out) {
  const Graph g = graph_input(o);
  if (o.subset.empty()) throw UsageError("--subset is required");
  const VertexSubset s = parse_subset(o.subset);
  if (s.empty()) throw UsageError("--subset must be nonempty");
  if (s.max() > g.n()) throw UsageError("--subset: vertex outside 1.." + std::to_string(g.n()));
  const auto inst = make_instance(g);
  const bool independent = is_independent_set(g, s);
  const Verdict trivial = is_trivial_layered(inst.link, s);
  const auto split = layered_split_order(inst.link, s);
  const bool agree = (trivial == Verdict::True) == independent && trivial != Verdict::Unknown;
  json report{{"subset", s.members()},
              {"independent", independent},
              {"trivial", to_string(trivial)},
              {"agree", agree}};
  if (split.success) {
    report["peel_order"] = split.order;
  } else {
    report["failure_residual"] = split.residual.members();
  }
  if (agree && independent) {
    report["certificate"] = translate_certificate(inst, {s}, CertificateDirection::GraphToLink)
                                .subset.members();
  }
  if (!agree) {
    report["graph_certificate"] = s.members();
    report["link_certificate"] = s.members();
  }
  emit(out, o.out,
       o.format == "text" ? subset_text(s) + ": independent=" + (independent ? "yes" : "no") +
                                " trivial=" + to_string(trivial)
                          : report.dump(2));
  if (!agree) return kDisagreement;
  return trivial == Verdict::True ? kSuccess : kNo;
}

int cmd_simplify(const Options& o, std::ostream& out) {
  LinkDiagram d = diagram_input(o);
  if (!o.subset.empty()) d = sublink(d, parse_subset(o.subset));
  const LinkDiagram simple = greedy_simplify(d);
  if (o.format == "text") {
    emit(out, o.out,
         std::to_string(d.crossing_count()) + " -> " + std::to_string(simple.crossing_count()) +
             " crossings, " + std::to_string(simple.free_loop_count()) + " free loops");
  } else {
    emit(out, o.out, wire::to_json(simple).dump(2));
  }
  return kSuccess;
}

int cmd_render(const Options& o, std::ostream& out) {
  BraidWord w;
  if (!o.graph.empty()) {
    w = build_braid_word(graph_input(o));
  } else if (!o.braid.empty()) {
    w = wire::braid_from_json(load_payload(o.braid, "--braid"));
  } else {
    throw UsageError("render needs --graph or --braid");
  }
  RenderOptions options;
  if (!o.subset.empty()) options.highlight = parse_subset(o.subset).members();
  emit(out, o.out, to_svg(layout_closure(w), options));
  return kSuccess;
}

int cmd_oracle_check(const Options& o, std::ostream& out) {
  if (o.max_n < 1 || o.max_n > 10) throw UsageError("--max-n must be in 1..10");
  long graphs = 0, subsets = 0;
  std::vector<std::string> failures;
  auto check = [&](const Graph& g) {
    ++graphs;
    const auto link = build_link(g);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g.n()); ++mask) {
      ++subsets;
      const auto s = VertexSubset::from_mask(mask, g.n());
      const Verdict v = is_trivial_layered(link, s);
      const bool independent = is_independent_set(g, s);
      if (v == Verdict::Unknown || (v == Verdict::True) != independent) {
        failures.push_back(wire::to_json(g).dump() + " subset " + subset_text(s) + " -> " +
                           to_string(v));
      }
    }
  };
  constexpr int kExhaustiveUpTo = 5;
  for (int n = 1; n <= std::min(o.max_n, kExhaustiveUpTo); ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs); ++m) check(Graph::from_edge_mask(n, m));
  }
  std::mt19937_64 rng(o.seed);
  for (int n = kExhaustiveUpTo + 1; n <= o.max_n; ++n) {
    const int pairs = n * (n - 1) / 2;
    std::uniform_int_distribution<std::uint64_t> pick(0, (std::uint64_t{1} << pairs) - 1);
    for (int i = 0; i < o.samples; ++i) check(Graph::from_edge_mask(n, pick(rng)));
  }
  json report{{"graphs", graphs}, {"subsets", subsets}, {"failures", failures}};
  emit(out, o.out,
       o.format == "text" ? std::to_string(graphs) + " graphs, " + std::to_string(subsets) +
                                " subsets, " + std::to_string(failures.size()) + " failures"
                          : report.dump(2));
  return failures.empty() ? kSuccess : kDisagreement;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Independent set -> trivial sublink reduction toolkit", "linkred"};
  app.require_subcommand(1, 1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "Write output to this file");
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "svg", "text"}));
  };
  auto* reduce = app.add_subcommand("reduce", "Graph -> instance bundle (graph, braid, diagram)");
  reduce->add_option("--graph", o.graph, "Graph file or inline JSON")->required();
  reduce->add_option("-k", o.k, "Target size recorded in the bundle");
  add_common(reduce);

  auto* solve = app.add_subcommand("solve", "Decide a k-independent set via both routes");
  solve->add_option("--graph", o.graph, "Graph file or inline JSON")->required();
  solve->add_option("-k", o.k, "Target size")->required();
  solve->add_option("--max-n", o.limit, "Largest graph searched exhaustively");
  add_common(solve);

  auto* verify = app.add_subcommand("verify", "Check that the link's linking matrix equals the adjacency matrix");
  verify->add_option("--graph", o.graph, "Graph file or inline JSON")->required();
  add_common(verify);

  auto* sub = app.add_subcommand("sublink", "Triviality verdict and certificate for a vertex subset");
  sub->add_option("--graph", o.graph, "Graph file or inline JSON")->required();
  sub->add_option("--subset", o.subset, "Comma list or JSON array, 1-based")->required();
  add_common(sub);

  auto* simplify = app.add_subcommand("simplify", "Greedy R1/R2 simplification");
  simplify->add_option("--graph", o.graph, "Graph file or inline JSON");
  simplify->add_option("--braid", o.braid, "Braid file or inline JSON");
  simplify->add_option("--diagram", o.diagram, "Diagram file or inline JSON");
  simplify->add_option("--subset", o.subset, "Restrict to these components first");
  add_common(simplify);

  auto* render = app.add_subcommand("render", "SVG of the closure");
  render->add_option("--graph", o.graph, "Graph file or inline JSON");
  render->add_option("--braid", o.braid, "Braid file or inline JSON");
  render->add_option("--subset", o.subset, "Components to highlight");
  add_common(render);

  auto* oracle = app.add_subcommand("oracle-check", "Exhaustive bijection test up to --max-n");
  oracle->add_option("--max-n", o.max_n, "Largest graph size");
  oracle->add_option("--seed", o.seed, "Seed for sampled sizes above 5");
  oracle->add_option("--samples", o.samples, "Random graphs per sampled size");
  add_common(oracle);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (reduce->parsed()) return cmd_reduce(o, out);
    if (solve->parsed()) return cmd_solve(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (sub->parsed()) return cmd_sublink(o, out);
    if (simplify->parsed()) return cmd_simplify(o, out);
    if (render->parsed()) return cmd_render(o, out);
    if (oracle->parsed()) return cmd_oracle_check(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const json::exception& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace linkred::cli
