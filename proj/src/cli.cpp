#include "hyperres/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperres/error.hpp"
#include "hyperres/families.hpp"
#include "hyperres/metric.hpp"
#include "hyperres/partition.hpp"
#include "hyperres/resolving.hpp"
#include "hyperres/structure.hpp"
#include "hyperres/text_format.hpp"
#include "hyperres/transforms.hpp"
#include "hyperres/verify.hpp"

namespace hyperres::cli {
namespace {

using Json = nlohmann::ordered_json;

struct GlobalOptions {
  bool json = false;
  bool allow_non_sperner = false;
  std::optional<std::size_t> cap;
};

SolverLimits limits_from(const GlobalOptions& g) {
  if (g.cap) return SolverLimits::with_size_cap(*g.cap);
  if (const char* env = std::getenv("HYPERRES_CAP"); env != nullptr && *env) {
    try {
      return SolverLimits::with_size_cap(std::stoul(env));
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParse, std::string("HYPERRES_CAP='") + env + "'");
    }
  }
  return {};
}

std::string read_input(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot read '" + path + "'");
  buffer << in.rdbuf();
  return buffer.str();
}

Json labels_of(const Hypergraph& h, const std::vector<VertexId>& ids) {
  Json out = Json::array();
  for (VertexId v : ids) out.push_back(h.label(v));
  return out;
}

std::string join_labels(const Hypergraph& h, const std::vector<VertexId>& ids) {
  std::string out;
  for (VertexId v : ids) {
    if (!out.empty()) out += ' ';
    out += h.label(v);
  }
  return out;
}

std::string tuple_text(const Representation& r) {
  std::string out = "(";
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(r[i]);
  }
  return out + ")";
}

std::string edge_name(EdgeId e) { return "E" + std::to_string(e + 1); }

Json edge_names(const std::vector<EdgeId>& edges) {
  Json out = Json::array();
  for (EdgeId e : edges) out.push_back(edge_name(e));
  return out;
}

Json representations_json(const Hypergraph& h,
                          const std::vector<Representation>& reps) {
  Json out = Json::object();
  for (VertexId v = 0; v < reps.size(); ++v) out[h.label(v)] = reps[v];
  return out;
}

Json conflict_json(const Hypergraph& h,
                   const std::optional<std::pair<VertexId, VertexId>>& c) {
  if (!c) return nullptr;
  return Json::array({h.label(c->first), h.label(c->second)});
}

Json family_json(const Hypergraph& h, const FamilyDescriptor& f) {
  Json flags = Json::array();
  for (FamilyKind kind : f.flags) flags.push_back(to_string(kind));
  Json out{{"kind", to_string(f.kind)}, {"flags", flags}, {"k", f.k}};
  out["n"] = f.n ? Json(*f.n) : Json(nullptr);
  out["center"] = labels_of(h, f.center);
  out["edge_order"] = edge_names(f.edge_order);
  return out;
}

// One command's output, printed as text or as a single JSON object.
struct Outcome {
  Json input;
  Json result;
  Json certificate;
  std::string text;
  int status = kExitOk;
};

Outcome do_analyze(const Hypergraph& h) {
  const auto r = analyze_structure(h);
  Outcome o;
  Json branches = Json::array();
  for (const auto& b : r.branches) {
    branches.push_back({{"edges", edge_names(b.edges)}, {"joint", edge_name(b.joint)}});
  }
  o.result = {{"vertices", h.num_vertices()},
              {"edges", h.num_edges()},
              {"connected", r.connected},
              {"sperner", r.sperner},
              {"linear", r.linear},
              {"uniform", r.uniform ? Json(*r.uniform) : Json(nullptr)},
              {"regular", r.regular ? Json(*r.regular) : Json(nullptr)},
              {"rank", r.rank},
              {"degrees", r.degrees},
              {"pendant_edges", edge_names(r.pendant_edges)},
              {"vacuous_pendant_edges", edge_names(r.vacuous_pendant_edges)},
              {"branches", branches},
              {"branches_complete", r.branches_complete}};
  o.result["family"] = r.family ? family_json(h, *r.family) : Json(nullptr);
  if (r.connected) {
    const auto ecc = eccentricity_and_diameter(distance_matrix(h));
    o.result["diameter"] = ecc.diameter;
    o.result["diametral_pair"] = labels_of(h, {ecc.diametral_pair.first,
                                               ecc.diametral_pair.second});
  }

  std::ostringstream s;
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  s << "vertices   " << h.num_vertices() << "\n"
    << "edges      " << h.num_edges() << "\n"
    << "connected  " << yes(r.connected) << "\n"
    << "sperner    " << yes(r.sperner) << "\n"
    << "linear     " << yes(r.linear) << "\n"
    << "rank       " << r.rank << "\n"
    << "uniform    " << (r.uniform ? std::to_string(*r.uniform) : "-") << "\n"
    << "regular    " << (r.regular ? std::to_string(*r.regular) : "-") << "\n";
  if (r.connected) s << "diameter   " << o.result["diameter"].get<int>() << "\n";
  s << "pendant   ";
  for (EdgeId e : r.pendant_edges) s << ' ' << edge_name(e);
  s << "\nbranches   " << r.branches.size()
    << (r.branches_complete ? "" : " (scan skipped)") << "\n";
  if (r.family) {
    s << "family     " << to_string(r.family->kind) << " [";
    bool first = true;
    for (FamilyKind f : r.family->flags) {
      s << (first ? "" : ", ") << to_string(f);
      first = false;
    }
    s << "]\n";
  }
  o.text = s.str();
  return o;
}

Outcome do_dim(const Hypergraph& h, const SolverLimits& limits, bool count) {
  const auto result = metric_dimension(h, limits);
  Outcome o;
  o.result = {{"dimension", result.dimension},
              {"lower_bound", dim_lower_bound(h)},
              {"basis", labels_of(h, result.basis.landmarks)}};
  std::optional<std::uint64_t> bases;
  if (count) {
    bases = count_minimum_bases(h, limits);
    o.result["minimum_bases"] = *bases;
  }
  o.certificate = {{"landmarks", labels_of(h, result.basis.landmarks)},
                   {"valid", result.basis.valid},
                   {"conflict", conflict_json(h, result.basis.conflict)},
                   {"representations",
                    representations_json(h, result.basis.representations)}};

  std::ostringstream s;
  s << "dim " << result.dimension << "\n"
    << "basis: " << join_labels(h, result.basis.landmarks) << "\n"
    << "lower bound: " << dim_lower_bound(h) << "\n";
  if (bases) s << "minimum bases: " << *bases << "\n";
  s << "representations:\n";
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    s << "  " << h.label(v) << "  " << tuple_text(result.basis.representations[v])
      << "\n";
  }
  o.text = s.str();
  return o;
}

Outcome do_pd(const Hypergraph& h, const SolverLimits& limits) {
  std::optional<MetricDimensionResult> basis;
  try {
    basis = metric_dimension(h, limits);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kCapExceeded) throw;
  }
  const auto result =
      partition_dimension(h, limits, basis ? &basis->basis : nullptr);
  Outcome o;
  o.result = {{"dimension", result.dimension}};
  if (is_sperner(h)) {
    o.result["lower_bound"] = pd_lower_bound(h);
  } else {
    o.result["lower_bound"] = nullptr;
  }
  Json classes = Json::array();
  for (const auto& c : result.witness.classes) classes.push_back(labels_of(h, c));
  o.certificate = {{"classes", classes},
                   {"valid", result.witness.valid},
                   {"conflict", conflict_json(h, result.witness.conflict)},
                   {"representations",
                    representations_json(h, result.witness.representations)}};

  std::ostringstream s;
  s << "pd " << result.dimension << "\n" << "partition:\n";
  for (std::size_t i = 0; i < result.witness.classes.size(); ++i) {
    s << "  S" << i + 1 << " = {" << join_labels(h, result.witness.classes[i])
      << "}\n";
  }
  s << "representations:\n";
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    s << "  " << h.label(v) << "  "
      << tuple_text(result.witness.representations[v]) << "\n";
  }
  o.text = s.str();
  return o;
}

Outcome do_bounds(const Hypergraph& h) {
  Outcome o;
  const auto dim_bound = dim_lower_bound(h);
  o.result = {{"dim_lower_bound", dim_bound}};
  std::ostringstream s;
  s << "dim >= " << dim_bound << "\n";
  try {
    const auto pd_bound = pd_lower_bound(h);
    o.result["pd_lower_bound"] = pd_bound;
    s << "pd  >= " << pd_bound << "\n";
  } catch (const Error& e) {
    o.result["pd_lower_bound"] = nullptr;
    o.result["pd_lower_bound_error"] = e.what();
    s << "pd  bound unavailable: " << e.what() << "\n";
  }
  o.text = s.str();
  return o;
}

Outcome do_classes(const Hypergraph& h) {
  const auto twins = twin_classes(h);
  Outcome o;
  Json classes = Json::array();
  std::ostringstream s;
  for (const auto& c : twins.classes) {
    classes.push_back({{"signature", edge_names(c.signature)},
                       {"members", labels_of(h, c.members)},
                       {"n", c.excess()},
                       {"representative", h.label(c.representative)}});
    std::string sig;
    for (EdgeId e : c.signature) sig += (sig.empty() ? "" : ",") + std::to_string(e + 1);
    s << "C(" << sig << ") = {" << join_labels(h, c.members) << "}  n = "
      << c.excess() << "  rep " << h.label(c.representative) << "\n";
  }
  o.result = {{"classes", classes},
              {"representatives", labels_of(h, twins.representatives)},
              {"forced", labels_of(h, twins.forced)},
              {"excess_sum", twins.excess_sum()}};
  s << "R(H) = {" << join_labels(h, twins.representatives) << "}\n";
  o.text = s.str();
  return o;
}

Outcome hypergraph_outcome(std::string text) {
  Outcome o;
  o.result = {{"hypergraph", text}};
  o.text = std::move(text);
  return o;
}

Outcome do_verify(const VerifyOptions& options) {
  const auto report = run_verification(options);
  Outcome o;
  Json rows = Json::array();
  std::ostringstream s;
  s << std::left << std::setw(26) << "theorem" << std::setw(30) << "instance"
    << std::setw(10) << "predicted" << std::setw(8) << "solver" << std::setw(8)
    << "status" << "seconds\n";
  for (const auto& r : report.rows) {
    const char* status = r.skipped ? "skip" : (r.pass ? "pass" : "FAIL");
    Json row{{"theorem", r.theorem},
             {"instance", r.instance},
             {"predicted", r.predicted},
             {"solver", r.skipped ? Json(nullptr) : Json(r.solved)},
             {"status", status},
             {"elapsed_seconds", r.seconds}};
    if (!r.note.empty()) row["note"] = r.note;
    rows.push_back(std::move(row));
    s << std::left << std::setw(26) << r.theorem << std::setw(30) << r.instance
      << std::setw(10) << r.predicted << std::setw(8)
      << (r.skipped ? std::string("-") : std::to_string(r.solved)) << std::setw(8)
      << status << std::fixed << std::setprecision(3) << r.seconds << "\n";
  }
  s << report.passed() << " passed, " << report.failed() << " failed, "
    << report.skipped() << " skipped\n";
  o.result = {{"rows", rows},
              {"passed", report.passed()},
              {"failed", report.failed()},
              {"skipped", report.skipped()}};
  o.text = s.str();
  o.status = report.ok() ? kExitOk : kExitVerifyFailed;
  return o;
}

FamilyKind family_from(const std::string& name) {
  if (name == "path") return FamilyKind::kHyperpath;
  if (name == "cycle") return FamilyKind::kHypercycle;
  if (name == "star") return FamilyKind::kHyperstar;
  return FamilyKind::kHypertree;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact metric and partition dimension of hypergraphs",
               "hyperres"};
  GlobalOptions global;
  std::size_t cap_value = 0;
  app.add_flag("--json", global.json, "Print one JSON object");
  app.add_flag("--allow-non-sperner", global.allow_non_sperner,
               "Accept nested or repeated edges");
  auto* cap_opt = app.add_option("--cap", cap_value, "Solver size cap")
                      ->check(CLI::PositiveNumber);
  app.require_subcommand(1);

  std::string file;
  std::string kind;
  bool count = false;
  auto add_file_command = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("FILE", file, "Hypergraph file ('-' for stdin)")->required();
    sub->fallthrough();
    return sub;
  };
  auto* analyze = add_file_command("analyze", "Structural report");
  auto* dim = add_file_command("dim", "Metric dimension with a basis");
  dim->add_flag("--count", count, "Also count minimum bases");
  auto* pd = add_file_command("pd", "Partition dimension with a witness");
  auto* bounds = add_file_command("bounds", "Lower bounds");
  auto* classes = add_file_command("classes", "Twin classes");
  auto* transform = add_file_command("transform", "Primal, middle or dual");
  transform->add_option("--kind", kind, "primal|middle|dual")
      ->required()
      ->check(CLI::IsMember({"primal", "middle", "dual"}));

  GeneratorSpec spec;
  std::string family;
  auto* gen = app.add_subcommand("gen", "Generate a family member");
  gen->add_option("--family", family, "path|cycle|star|tree")
      ->required()
      ->check(CLI::IsMember({"path", "cycle", "star", "tree"}));
  gen->add_option("--k", spec.k, "Edge count")->required();
  gen->add_option("--n", spec.n, "Edge size")->required();
  gen->add_option("--seed", spec.seed, "Seed (trees)");
  gen->fallthrough();

  VerifyOptions verify_options;
  auto* verify = app.add_subcommand("verify", "Check closed forms against the solvers");
  verify->add_option("--max-k", verify_options.max_k, "Largest edge count");
  verify->add_option("--max-n", verify_options.max_n, "Largest edge size");
  verify->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "hyperres: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }
  if (*cap_opt) global.cap = cap_value;

  const auto start = std::chrono::steady_clock::now();
  std::string command;
  Outcome outcome;
  try {
    const SolverLimits limits = limits_from(global);
    const BuildOptions build{.allow_non_sperner = global.allow_non_sperner};
    auto load = [&] { return parse_hypergraph_text(read_input(file), build); };
    Json input = file;
    if (*analyze) {
      command = "analyze";
      outcome = do_analyze(load());
    } else if (*dim) {
      command = "dim";
      outcome = do_dim(load(), limits, count);
    } else if (*pd) {
      command = "pd";
      outcome = do_pd(load(), limits);
    } else if (*bounds) {
      command = "bounds";
      outcome = do_bounds(load());
    } else if (*classes) {
      command = "classes";
      outcome = do_classes(load());
    } else if (*transform) {
      command = "transform";
      const auto h = load();
      if (kind == "primal") {
        outcome = hypergraph_outcome(format_multigraph(primal_graph(h), h));
      } else if (kind == "middle") {
        outcome = hypergraph_outcome(format_hypergraph(middle_graph(h)));
      } else {
        outcome = hypergraph_outcome(format_hypergraph(dual(h)));
      }
      input = {{"file", file}, {"kind", kind}};
    } else if (*gen) {
      command = "gen";
      spec.kind = family_from(family);
      outcome = hypergraph_outcome(format_hypergraph(generate(spec)));
      input = {{"family", family}, {"k", spec.k}, {"n", spec.n}, {"seed", spec.seed}};
    } else {
      command = "verify";
      verify_options.limits = limits;
      outcome = do_verify(verify_options);
      input = {{"max_k", verify_options.max_k}, {"max_n", verify_options.max_n}};
    }
    outcome.input = std::move(input);
  } catch (const Error& e) {
    err << "hyperres: " << e.what() << "\n";
    return e.code() == ErrorCode::kCapExceeded ? kExitCapExceeded
                                                : kExitInvalidInput;
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (global.json) {
    Json doc{{"command", command},
             {"input", outcome.input},
             {"result", outcome.result},
             {"certificate", outcome.certificate},
             {"elapsed_seconds", elapsed}};
    out << doc.dump(2) << "\n";
  } else {
    out << outcome.text;
  }
  return outcome.status;
}

}  // namespace hyperres::cli
