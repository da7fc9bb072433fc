#pragma once

#include <string>
#include <string_view>

#include "mvlm/dynamics.hpp"
#include "mvlm/model.hpp"

namespace mvlm {

// Model text format. Line oriented, UTF-8, LF, '#' starts a comment:
//
//   component <name> <max_level>
//   edge <source> <threshold> <target>
//   param <target> [<regulator>:<interval_low> ...] = <value>
//   param <target> default = <value>
//
// A param row names one context by the low endpoint of each regulator's
// activity interval; regulators with a single full interval may be left
// out. Every context must be covered exactly once, the optional default
// row filling whatever the explicit rows leave open. Lines may come in
// any order.

/// Parsed model plus enough source positions to point diagnostics back
/// at the text.
struct ModelDocument {
  std::string source;
  Model model;
  std::vector<std::size_t> component_lines;            // per component
  std::vector<std::size_t> edge_lines;                 // per edge, canonical order
  std::vector<std::vector<std::size_t>> param_lines;   // [component][context]

  static ModelDocument parse(std::string_view text);
};

/// ParseError on any grammar or consistency violation; the result always
/// passes validate().
Model parse_model(std::string_view text);

/// Canonical text: components in declaration order, edges sorted, param
/// rows in context order with single-interval regulators left out.
/// Structurally equal models serialize to identical bytes.
std::string serialize_model(const Model&);

enum class TsFormat { Edges, Dot };

/// "edges": one "(levels) -> (levels)" line per transition, sorted.
/// "dot": the same relation as a directed graph document.
std::string export_ts(const TransitionSystem&, TsFormat);

}  // namespace mvlm
