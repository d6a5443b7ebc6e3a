// cliquelab: clique graphs, K-iteration dynamics, and executable checks of
// join/product theorems over graph6 inputs.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cliquelab/cliquelab.hpp"

namespace {

using nlohmann::json;
using namespace cliquelab;

struct Options {
  int max_steps = 12;
  int max_vertices = 512;
  std::size_t max_cliques = 100'000;
  std::size_t clique_cap = kDefaultCliqueCap;
  int helly_cap = 32;
  std::uint64_t seed = 0;
  bool as_json = false;
  bool as_dot = false;
  bool no_timestamp = false;

  Bounds bounds() const { return {max_steps, max_vertices, max_cliques}; }

  CheckContext context() const {
    CheckContext ctx;
    ctx.bounds = bounds();
    ctx.clique_cap = clique_cap;
    ctx.helly_cap = helly_cap;
    return ctx;
  }
};

std::vector<Graph> load_graphs(const std::string& path) {
  if (path == "-") return parse_graph6_lines(std::cin);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::vector<Graph> graphs = parse_graph6_lines(in);
  if (graphs.empty()) throw std::runtime_error("no graphs in " + path);
  return graphs;
}

Graph load_one(const std::string& path) { return load_graphs(path).front(); }

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  std::ostringstream out;
  out << std::hex << v;
  return out.str();
}

json trace_json(const IterationTrace& trace) {
  json steps = json::array();
  for (const auto& s : trace.steps) {
    json step{{"index", s.index}, {"vertices", s.vertex_count}};
    step["cliques"] = s.clique_count ? json(*s.clique_count) : json(nullptr);
    step["code_hash"] = s.code ? json(hex64(fnv1a(*s.code))) : json(nullptr);
    steps.push_back(step);
  }
  json out{{"steps", steps}};
  if (trace.converged) {
    out["outcome"] = {{"kind", "Converged"},
                      {"preperiod", trace.preperiod},
                      {"period", trace.period}};
  } else {
    out["outcome"] = {{"kind", "BoundExceeded"},
                      {"last_index", trace.last_index()},
                      {"reason", to_string(trace.bound)}};
  }
  return out;
}

json classification_json(const Classification& c) {
  if (c.converged)
    return {{"outcome", "Converged"}, {"preperiod", c.preperiod}, {"period", c.period}};
  return {{"outcome", "BoundExceeded"},
          {"last_index", c.last_index},
          {"reason", to_string(c.reason)}};
}

json verdict_report(const Verdict& v, const std::string& g1, const std::string& g2,
                    const std::string& kind, const Options& opt, double runtime_ms) {
  json j = to_json(v);
  j["instance"] = {{"g1", g1}, {"g2", g2.empty() ? json(nullptr) : json(g2)}, {"kind", kind}};
  if (!opt.no_timestamp) j["runtime_ms"] = runtime_ms;
  return j;
}

int outcome_exit_code(std::size_t refuted, std::size_t inconclusive) {
  if (refuted > 0) return 2;
  if (inconclusive > 0) return 3;
  return 0;
}

void print_verdict_text(const Verdict& v) {
  std::cout << v.conjecture << ": " << to_string(v.outcome) << "\n";
  if (!v.measured.empty()) std::cout << "  measured: " << v.measured.dump() << "\n";
  if (v.outcome == Outcome::refuted) std::cout << "  witness: " << v.witness.dump() << "\n";
  if (!v.reason.empty()) std::cout << "  reason: " << v.reason << "\n";
}

std::string conjecture_kind(const std::string& tag) {
  return tag.rfind("PRODUCT", 0) == 0 ? "cartesian" : "join";
}

int run(int argc, char** argv) {
  CLI::App app{"clique graph dynamics and join/product theorem checking"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  if (const char* env = std::getenv("CLIQUELAB_MAX_CLIQUES"))
    opt.clique_cap = std::strtoull(env, nullptr, 10);
  app.add_option("--max-steps", opt.max_steps, "K-iteration step bound");
  app.add_option("--max-vertices", opt.max_vertices, "iterate order bound");
  app.add_option("--max-cliques", opt.max_cliques, "per-iterate clique bound");
  app.add_option("--helly-cap", opt.helly_cap, "Clique-Helly family size cap");
  app.add_option("--seed", opt.seed, "seed for randomized corpora");
  app.add_flag("--json", opt.as_json, "JSON output");
  app.add_flag("--dot", opt.as_dot, "DOT output for graph-valued results");
  app.add_flag("--no-timestamp", opt.no_timestamp, "omit timing fields from JSON");

  std::string in_path, g1_path, g2_path, h_path, g_path, out_path, corpus_path, tag,
      dump_dir;
  int gen_order = 0, min_order = 1, max_order = 0, jobs = 1;
  std::size_t random_pairs = 0;

  auto* cmd_cliques = app.add_subcommand("cliques", "maximal cliques, one per line");
  cmd_cliques->add_option("--in", in_path, "graph6 input file")->required();

  auto* cmd_kgraph = app.add_subcommand("kgraph", "clique graph K(G)");
  cmd_kgraph->add_option("--in", in_path)->required();

  auto* cmd_iterate = app.add_subcommand("iterate", "iterate K with bounds, JSON trace");
  cmd_iterate->add_option("--in", in_path)->required();
  cmd_iterate->add_option("--dump-dir", dump_dir, "write per-step graph6 files here");

  auto* cmd_classify = app.add_subcommand("classify", "bounded convergence verdict");
  cmd_classify->add_option("--in", in_path)->required();

  auto* cmd_helly = app.add_subcommand("helly", "Clique-Helly test with witness");
  cmd_helly->add_option("--in", in_path)->required();

  auto* cmd_join = app.add_subcommand("join", "join of two graphs");
  cmd_join->add_option("--g1", g1_path)->required();
  cmd_join->add_option("--g2", g2_path)->required();

  auto* cmd_product = app.add_subcommand("product", "Cartesian product of two graphs");
  cmd_product->add_option("--g1", g1_path)->required();
  cmd_product->add_option("--g2", g2_path)->required();

  auto* cmd_root = app.add_subcommand("root-check", "is K(H) isomorphic to G?");
  cmd_root->add_option("--root", h_path, "candidate K-root H")->required();
  cmd_root->add_option("--target", g_path, "target graph G")->required();

  auto* cmd_iso = app.add_subcommand("iso", "isomorphism test");
  cmd_iso->add_option("--g1", g1_path)->required();
  cmd_iso->add_option("--g2", g2_path)->required();

  auto* cmd_canon = app.add_subcommand("canon", "canonical graph6 code per input line");
  cmd_canon->add_option("--in", in_path)->required();

  auto* cmd_gen = app.add_subcommand("gen", "non-isomorphic corpus of a given order");
  cmd_gen->add_option("--order", gen_order)->required();
  cmd_gen->add_option("--out", out_path, "output file (default stdout)");

  auto* cmd_check = app.add_subcommand("check", "check one conjecture on one instance");
  cmd_check->add_option("--conjecture", tag)->required();
  cmd_check->add_option("--g1", g1_path)->required();
  cmd_check->add_option("--g2", g2_path)->required();

  auto* cmd_sweep = app.add_subcommand("sweep", "check a conjecture over a corpus");
  cmd_sweep->add_option("--conjecture", tag)->required();
  cmd_sweep->add_option("--min-order", min_order);
  cmd_sweep->add_option("--max-order", max_order);
  cmd_sweep->add_option("--corpus", corpus_path, "graph6 corpus file");
  cmd_sweep->add_option("--random-pairs", random_pairs,
                        "use N seeded random pairs instead of all ordered pairs");
  cmd_sweep->add_option("--jobs", jobs, "parallel workers");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (cmd_cliques->parsed()) {
    bool first = true;
    for (const Graph& g : load_graphs(in_path)) {
      if (!first) std::cout << "\n";
      first = false;
      CliqueFamily fam = enumerate_cliques(g, opt.clique_cap);
      if (opt.as_json) {
        json arr = json::array();
        for (const auto& c : fam.cliques) arr.push_back(c);
        std::cout << arr.dump() << "\n";
        continue;
      }
      for (const auto& c : fam.cliques) {
        for (std::size_t i = 0; i < c.size(); ++i)
          std::cout << (i ? " " : "") << c[i];
        std::cout << "\n";
      }
    }
    return 0;
  }

  if (cmd_kgraph->parsed()) {
    for (const Graph& g : load_graphs(in_path)) {
      Graph kg = clique_graph(g, opt.clique_cap).graph;
      std::cout << (opt.as_dot ? emit_dot(kg) : emit_graph6(kg) + "\n");
    }
    return 0;
  }

  if (cmd_iterate->parsed()) {
    for (const Graph& g : load_graphs(in_path)) {
      IterationTrace trace = iterate_k(g, opt.bounds());
      std::cout << trace_json(trace).dump() << "\n";
      if (!dump_dir.empty()) {
        std::filesystem::create_directories(dump_dir);
        Graph cur = g;
        for (const auto& step : trace.steps) {
          std::ofstream out(dump_dir + "/step" + std::to_string(step.index) + ".g6");
          out << emit_graph6(cur) << "\n";
          if (step.index < static_cast<int>(trace.steps.size()) - 1)
            cur = clique_graph(cur, opt.clique_cap).graph;
        }
      }
    }
    return 0;
  }

  if (cmd_classify->parsed()) {
    for (const Graph& g : load_graphs(in_path))
      std::cout << classification_json(classify(g, opt.bounds())).dump() << "\n";
    return 0;
  }

  if (cmd_helly->parsed()) {
    int exit_code = 0;
    for (const Graph& g : load_graphs(in_path)) {
      HellyResult r = is_clique_helly(g, opt.helly_cap, opt.clique_cap);
      if (opt.as_json) {
        json j{{"status", to_string(r.status)}};
        if (r.status == Ternary::no) {
          json w = json::array();
          for (const auto& c : r.witness) w.push_back(c);
          j["witness"] = w;
        }
        if (!r.reason.empty()) j["reason"] = r.reason;
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "clique-helly: " << to_string(r.status) << "\n";
        for (const auto& c : r.witness) {
          std::cout << "  witness clique:";
          for (int v : c) std::cout << " " << v;
          std::cout << "\n";
        }
        if (!r.reason.empty()) std::cout << "  reason: " << r.reason << "\n";
      }
      if (r.status == Ternary::unknown) exit_code = 3;
    }
    return exit_code;
  }

  if (cmd_join->parsed() || cmd_product->parsed()) {
    Graph a = load_one(g1_path), b = load_one(g2_path);
    Graph out = cmd_join->parsed() ? join(a, b) : cartesian_product(a, b);
    std::cout << (opt.as_dot ? emit_dot(out) : emit_graph6(out) + "\n");
    return 0;
  }

  if (cmd_root->parsed()) {
    bool yes = is_k_root(load_one(h_path), load_one(g_path), opt.clique_cap);
    std::cout << (yes ? "yes" : "no") << "\n";
    return 0;
  }

  if (cmd_iso->parsed()) {
    bool yes = is_isomorphic(load_one(g1_path), load_one(g2_path));
    std::cout << (yes ? "yes" : "no") << "\n";
    return 0;
  }

  if (cmd_canon->parsed()) {
    for (const Graph& g : load_graphs(in_path)) std::cout << canonical_form(g) << "\n";
    return 0;
  }

  if (cmd_gen->parsed()) {
    std::vector<Graph> corpus = generate_nonisomorphic(gen_order);
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
      file.open(out_path);
      if (!file) throw std::runtime_error("cannot open output file: " + out_path);
      out = &file;
    }
    for (const Graph& g : corpus) *out << emit_graph6(g) << "\n";
    if (!out_path.empty()) std::cout << corpus.size() << "\n";
    return 0;
  }

  if (cmd_check->parsed()) {
    Graph a = load_one(g1_path), b = load_one(g2_path);
    auto start = std::chrono::steady_clock::now();
    Verdict v = run_checker(tag, a, b, opt.context());
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    if (opt.as_json)
      std::cout << verdict_report(v, emit_graph6(a), emit_graph6(b),
                                  conjecture_kind(tag), opt, ms)
                       .dump()
                << "\n";
    else
      print_verdict_text(v);
    return outcome_exit_code(v.outcome == Outcome::refuted,
                             v.outcome == Outcome::inconclusive);
  }

  if (cmd_sweep->parsed()) {
    std::vector<Graph> corpus;
    std::string desc;
    if (!corpus_path.empty()) {
      corpus = load_graphs(corpus_path);
      desc = "file:" + corpus_path;
    } else {
      if (max_order <= 0) throw std::runtime_error("sweep needs --max-order or --corpus");
      for (int n = min_order; n <= max_order; ++n)
        for (Graph& g : generate_nonisomorphic(n)) corpus.push_back(std::move(g));
      desc = "orders " + std::to_string(min_order) + ".." + std::to_string(max_order);
    }

    SweepReport report;
    if (random_pairs > 0) {
      // Seeded random pairs drawn from the corpus.
      std::mt19937_64 rng(opt.seed);
      std::uniform_int_distribution<std::size_t> pick(0, corpus.size() - 1);
      std::vector<Graph> pair_corpus;
      report.conjecture = tag;
      report.corpus = desc + " random-pairs " + std::to_string(random_pairs) + " seed " +
                      std::to_string(opt.seed);
      CheckContext ctx = opt.context();
      for (std::size_t i = 0; i < random_pairs; ++i) {
        const Graph& a = corpus[pick(rng)];
        const Graph& b = corpus[pick(rng)];
        SweepInstance inst;
        inst.index = i;
        inst.g1 = emit_graph6(a);
        inst.g2 = emit_graph6(b);
        inst.verdict = run_checker(tag, a, b, ctx);
        report.instances.push_back(std::move(inst));
      }
      for (const auto& inst : report.instances) {
        switch (inst.verdict.outcome) {
          case Outcome::holds: ++report.holds; break;
          case Outcome::refuted: ++report.refuted; break;
          case Outcome::inconclusive: ++report.inconclusive; break;
          case Outcome::skipped: ++report.skipped; break;
        }
      }
    } else {
      report = sweep(tag, corpus, opt.context(), jobs, desc);
    }

    if (opt.as_json) {
      json insts = json::array();
      for (const auto& inst : report.instances)
        insts.push_back(verdict_report(inst.verdict, inst.g1, inst.g2,
                                       conjecture_kind(tag), opt, 0.0));
      json j{{"conjecture", report.conjecture},
             {"corpus", report.corpus},
             {"tallies",
              {{"holds", report.holds},
               {"refuted", report.refuted},
               {"inconclusive", report.inconclusive},
               {"skipped", report.skipped}}},
             {"instances", insts}};
      std::cout << j.dump() << "\n";
    } else {
      std::cout << report.conjecture << " over " << report.corpus << ": holds "
                << report.holds << ", refuted " << report.refuted << ", inconclusive "
                << report.inconclusive << ", skipped " << report.skipped << "\n";
      for (const auto& inst : report.instances)
        if (inst.verdict.outcome == Outcome::refuted)
          std::cout << "  refuted: (" << inst.g1 << ", " << inst.g2
                    << ") witness " << inst.verdict.witness.dump() << "\n";
    }
    return outcome_exit_code(report.refuted, report.inconclusive);
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
