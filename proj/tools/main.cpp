#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "mvlm/canonical.hpp"
#include "mvlm/dynamics.hpp"
#include "mvlm/io.hpp"
#include "mvlm/minimize.hpp"
#include "mvlm/normalize.hpp"
#include "mvlm/oracle.hpp"

using namespace mvlm;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error("cannot write '" + out_path + "'");
  out << text;
}

std::string edge_text(const RegulatoryGraph& g, const Edge& e) {
  return g.components[e.source].name + " " + std::to_string(e.threshold) +
         " " + g.components[e.target].name;
}

const char* yesno(bool b) { return b ? "yes" : "no"; }
const char* truefalse(bool b) { return b ? "true" : "false"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"inspect, transform and compare multi-valued regulatory "
               "network models"};
  app.require_subcommand(1);
  app.fallthrough();

  Limits limits;
  app.add_option("--max-states", limits.max_states,
                 "abort dynamics larger than this many states");
  app.add_option("--max-contexts", limits.max_contexts,
                 "abort tables larger than this many contexts per component");

  std::string file, file_b, out_path;
  bool sync = false, machine = false;
  std::string ts_format = "edges", method = "minimize";

  auto* validate_cmd =
      app.add_subcommand("validate", "check a model file, report problems");
  validate_cmd->add_option("file", file, "model file")->required();

  auto* ts_cmd =
      app.add_subcommand("ts", "write the transition system of a model");
  ts_cmd->add_option("file", file, "model file")->required();
  ts_cmd->add_flag("--sync", sync, "synchronous instead of asynchronous");
  ts_cmd->add_option("--format", ts_format, "edges or dot")
      ->check(CLI::IsMember({"edges", "dot"}));
  ts_cmd->add_option("-o,--output", out_path, "output file (default stdout)");

  const char* transform_names[] = {"canonize", "complete", "normalize",
                                   "minimize"};
  const char* transform_help[] = {
      "clamp every parameter into its context's reachable band",
      "add every missing edge, preserving the dynamics",
      "replace every parameter by the level the dynamics reach",
      "strip every edge the dynamics cannot see"};
  CLI::App* transform_cmds[4];
  for (int i = 0; i < 4; ++i) {
    transform_cmds[i] = app.add_subcommand(transform_names[i],
                                           transform_help[i]);
    transform_cmds[i]->add_option("file", file, "model file")->required();
    transform_cmds[i]->add_option("-o,--output", out_path,
                                  "output file (default stdout)");
  }

  auto* obs_cmd = app.add_subcommand(
      "observability", "report which edges the tables and dynamics can see");
  obs_cmd->add_option("file", file, "model file")->required();
  obs_cmd->add_flag("--machine", machine, "one plain line per edge");

  auto* equiv_cmd = app.add_subcommand(
      "equiv", "decide whether two models have the same dynamics");
  equiv_cmd->add_option("fileA", file, "first model")->required();
  equiv_cmd->add_option("fileB", file_b, "second model")->required();
  equiv_cmd->add_option("--method", method, "minimize, complete or ts")
      ->check(CLI::IsMember({"minimize", "complete", "ts"}));

  auto* oracle_cmd =
      app.add_subcommand("oracle", "dump slow-path reference diagnostics");
  oracle_cmd->group("");
  oracle_cmd->add_option("file", file, "model file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::string loading;
  auto load = [&](const std::string& path) {
    loading = path;
    return parse_model(read_file(path));
  };

  try {
    if (*validate_cmd) {
      Model m;
      try {
        m = load(file);
      } catch (const ParseError& e) {
        std::cout << file << ":" << e.what() << "\n";
        return 1;
      }
      auto diagnostics = validate(m);
      for (const auto& d : diagnostics) std::cout << to_string(d) << "\n";
      return diagnostics.empty() ? 0 : 1;
    }

    if (*ts_cmd) {
      Model m = load(file);
      TransitionSystem t = sync ? sync_ts(m, limits) : async_ts(m, limits);
      TsFormat f = ts_format == "dot" ? TsFormat::Dot : TsFormat::Edges;
      emit(export_ts(t, f), out_path);
      return 0;
    }

    for (int i = 0; i < 4; ++i) {
      if (!*transform_cmds[i]) continue;
      Model m = load(file);
      Model result = i == 0   ? canonize(m)
                     : i == 1 ? complete(m, limits)
                     : i == 2 ? normalize(m)
                              : minimize(m, limits);
      emit(serialize_model(result), out_path);
      return 0;
    }

    if (*obs_cmd) {
      Model m = load(file);
      auto report = observability_report(m);
      if (machine) {
        for (const auto& row : report)
          std::cout << "edge " << edge_text(m.graph, row.edge)
                    << " param=" << truefalse(row.in_parametrization)
                    << " ts=" << truefalse(row.in_transition_system) << "\n";
        return 0;
      }
      std::size_t width = 4;
      for (const auto& row : report)
        width = std::max(width, edge_text(m.graph, row.edge).size());
      std::cout << std::left << std::setw(static_cast<int>(width)) << "edge"
                << "  param  ts\n";
      for (const auto& row : report)
        std::cout << std::left << std::setw(static_cast<int>(width))
                  << edge_text(m.graph, row.edge) << "  "
                  << std::setw(5) << yesno(row.in_parametrization) << "  "
                  << yesno(row.in_transition_system) << "\n";
      return 0;
    }

    if (*equiv_cmd) {
      try {
        Model a = load(file);
        Model b = load(file_b);
        bool same;
        if (method == "ts") {
          if (a.graph.components != b.graph.components)
            throw DomainError(
                "models are over different components and cannot be compared");
          same = ts_equal(async_ts(a, limits), async_ts(b, limits));
        } else if (method == "complete") {
          same = equivalent_by_completion(a, b, limits);
        } else {
          same = equivalent_by_minimization(a, b, limits);
        }
        std::cout << (same ? "equivalent" : "not equivalent") << "\n";
        return same ? 0 : 1;
      } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
      }
    }

    if (*oracle_cmd) {
      Model m = load(file);
      for (std::size_t v = 0; v < m.graph.size(); ++v)
        for (const auto& omega : contexts(m.graph, v, limits))
          std::cout << "mtv " << m.graph.components[v].name << " "
                    << to_string(omega) << " = " << mtv(m, v, omega) << "\n";
      for (const auto& e : m.graph.edges)
        std::cout << "edge " << edge_text(m.graph, e)
                  << " direct=" << truefalse(oracle::ts_observable_oracle(m, e, limits))
                  << " fixed=" << truefalse(oracle::ts_observable_oracle_mtv(m, e, limits))
                  << " param=" << truefalse(observable_in_param(m, e)) << "\n";
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << loading << ":" << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
