#include "mvlm/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>

namespace mvlm {

namespace {

constexpr Level kMaxLevel = 0xFFFFFFFE;  // keeps max_level + 1 representable

struct Token {
  std::string_view text;
  std::size_t line;
  std::size_t column;  // 1-based byte offset
};

[[noreturn]] void fail(const Token& at, const std::string& message) {
  throw ParseError(at.line, at.column, message);
}

bool is_ident(std::string_view s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')
    return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
      return false;
  return true;
}

Level parse_level(const Token& t, std::string_view text) {
  std::uint64_t value = 0;
  auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    fail(t, "expected a number, got '" + std::string(text) + "'");
  if (value > kMaxLevel)
    fail(t, "level " + std::string(text) + " is out of range");
  return static_cast<Level>(value);
}

struct Line {
  std::vector<Token> tokens;
  std::size_t number;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t line_no = 1;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    Line out{{}, line_no};
    std::size_t i = 0;
    while (i < line.size()) {
      if (line[i] == '#') break;
      if (line[i] == ' ' || line[i] == '\t') {
        ++i;
        continue;
      }
      std::size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
             line[i] != '#')
        ++i;
      out.tokens.push_back(
          Token{line.substr(start, i - start), line_no, start + 1});
    }
    if (!out.tokens.empty()) lines.push_back(std::move(out));

    if (eol == std::string_view::npos) break;
    pos = eol + 1;
    ++line_no;
  }
  return lines;
}

struct ParamRow {
  std::size_t target;
  Token target_token;
  bool is_default = false;
  std::vector<std::pair<std::size_t, std::pair<Level, Token>>> selectors;
  Level value = 0;
  std::size_t line;
};

}  // namespace

ModelDocument ModelDocument::parse(std::string_view text) {
  ModelDocument doc;
  doc.source = std::string(text);

  auto lines = tokenize(text);
  std::size_t last_line = 1;

  // Collect everything first so lines may come in any order.
  std::vector<Component> components;
  std::vector<std::size_t> component_lines;
  std::vector<std::pair<Edge, Token>> edges;  // token of the edge keyword
  std::vector<Line> param_sources;

  std::map<std::string, std::size_t, std::less<>> by_name;

  for (const auto& line : lines) {
    last_line = line.number;
    const Token& head = line.tokens[0];
    if (head.text == "component") {
      if (line.tokens.size() != 3)
        fail(head, "expected: component <name> <max_level>");
      const Token& name = line.tokens[1];
      if (!is_ident(name.text))
        fail(name, "invalid component name '" + std::string(name.text) + "'");
      if (by_name.count(name.text))
        fail(name, "duplicate component '" + std::string(name.text) + "'");
      Level max_level = parse_level(line.tokens[2], line.tokens[2].text);
      if (max_level < 1)
        fail(line.tokens[2], "max level must be at least 1");
      by_name.emplace(std::string(name.text), components.size());
      components.push_back(Component{std::string(name.text), max_level});
      component_lines.push_back(line.number);
    } else if (head.text == "edge" || head.text == "param") {
      continue;  // second pass
    } else {
      fail(head, "unknown directive '" + std::string(head.text) + "'");
    }
  }

  auto resolve = [&](const Token& t) -> std::size_t {
    auto it = by_name.find(t.text);
    if (it == by_name.end())
      fail(t, "unknown component '" + std::string(t.text) + "'");
    return it->second;
  };

  for (const auto& line : lines) {
    const Token& head = line.tokens[0];
    if (head.text == "edge") {
      if (line.tokens.size() != 4)
        fail(head, "expected: edge <source> <threshold> <target>");
      std::size_t source = resolve(line.tokens[1]);
      Level threshold = parse_level(line.tokens[2], line.tokens[2].text);
      std::size_t target = resolve(line.tokens[3]);
      if (threshold < 1 || threshold > components[source].max_level)
        fail(line.tokens[2],
             "threshold out of range for '" + components[source].name + "'");
      Edge e{static_cast<std::uint32_t>(source),
             static_cast<std::uint32_t>(target), threshold};
      for (const auto& [seen, tok] : edges)
        if (seen == e) fail(head, "duplicate edge");
      edges.emplace_back(e, head);
    } else if (head.text == "param") {
      param_sources.push_back(line);
    }
  }

  std::vector<Edge> plain;
  plain.reserve(edges.size());
  for (const auto& [e, tok] : edges) plain.push_back(e);
  std::sort(plain.begin(), plain.end());

  RegulatoryGraph graph{std::move(components), std::move(plain)};
  doc.component_lines = std::move(component_lines);
  doc.edge_lines.resize(graph.edges.size());
  for (const auto& [e, tok] : edges) {
    auto it = std::lower_bound(graph.edges.begin(), graph.edges.end(), e);
    doc.edge_lines[static_cast<std::size_t>(it - graph.edges.begin())] =
        tok.line;
  }

  // Param rows against the final structure.
  std::vector<ParamRow> rows;
  for (const auto& line : param_sources) {
    if (line.tokens.size() < 4)
      fail(line.tokens[0],
           "expected: param <target> [<regulator>:<low> ...] = <value>");
    ParamRow row;
    row.line = line.number;
    row.target_token = line.tokens[1];
    row.target = resolve(line.tokens[1]);
    std::size_t i = 2;
    for (; i < line.tokens.size() && line.tokens[i].text != "="; ++i) {
      const Token& t = line.tokens[i];
      if (t.text == "default") {
        if (i != 2 || line.tokens[i + 1].text != "=")
          fail(t, "'default' takes no selectors");
        row.is_default = true;
        continue;
      }
      auto colon = t.text.find(':');
      if (colon == std::string_view::npos)
        fail(t, "expected <regulator>:<low> selector or '='");
      Token name{t.text.substr(0, colon), t.line, t.column};
      Token low{t.text.substr(colon + 1), t.line, t.column + colon + 1};
      std::size_t regulator = resolve(name);
      for (const auto& [seen, rest] : row.selectors)
        if (seen == regulator)
          fail(t, "regulator '" + std::string(name.text) +
                      "' selected twice");
      row.selectors.emplace_back(
          regulator, std::make_pair(parse_level(low, low.text), low));
    }
    if (i + 2 != line.tokens.size())
      fail(line.tokens[0], "expected: = <value> at the end of the row");
    row.value = parse_level(line.tokens[i + 1], line.tokens[i + 1].text);
    if (row.value > graph.components[row.target].max_level)
      fail(line.tokens[i + 1],
           "value exceeds max level of '" +
               graph.components[row.target].name + "'");
    rows.push_back(std::move(row));
  }

  Parametrization params;
  params.tables.resize(graph.size());
  doc.param_lines.resize(graph.size());
  std::vector<ContextSpace> spaces;
  spaces.reserve(graph.size());
  for (std::size_t v = 0; v < graph.size(); ++v) {
    spaces.emplace_back(graph, v);
    params.tables[v].resize(spaces[v].size());
    doc.param_lines[v].assign(spaces[v].size(), 0);
  }

  std::vector<std::pair<bool, std::size_t>> default_rows(
      graph.size(), {false, 0});  // (present, row line)
  std::vector<Level> default_values(graph.size(), 0);

  for (const auto& row : rows) {
    const ContextSpace& space = spaces[row.target];
    if (row.is_default) {
      if (default_rows[row.target].first)
        fail(row.target_token, "duplicate default row for '" +
                                   graph.components[row.target].name + "'");
      default_rows[row.target] = {true, row.line};
      default_values[row.target] = row.value;
      continue;
    }
    std::size_t index = 0;
    std::vector<char> given(graph.size(), 0);
    for (const auto& [regulator, rest] : row.selectors) {
      const auto& [low, token] = rest;
      auto interval = space.interval_with_low(regulator, low);
      if (!interval)
        fail(token, "no context of '" + graph.components[row.target].name +
                        "' has an interval of '" +
                        graph.components[regulator].name +
                        "' starting at " + std::to_string(low));
      index = space.with_interval(index, regulator, *interval);
      given[regulator] = 1;
    }
    for (std::size_t u = 0; u < graph.size(); ++u)
      if (!given[u] && space.regulator_intervals(u).size() > 1)
        fail(row.target_token,
             "selector required for regulator '" +
                 graph.components[u].name + "' (" +
                 std::to_string(space.regulator_intervals(u).size()) +
                 " intervals)");
    if (doc.param_lines[row.target][index])
      fail(row.target_token,
           "context " + to_string(space.context(index)) +
               " already covered on line " +
               std::to_string(doc.param_lines[row.target][index]));
    params.tables[row.target][index] = row.value;
    doc.param_lines[row.target][index] = row.line;
  }

  for (std::size_t v = 0; v < graph.size(); ++v) {
    for (std::size_t i = 0; i < spaces[v].size(); ++i) {
      if (doc.param_lines[v][i]) continue;
      if (default_rows[v].first) {
        params.tables[v][i] = default_values[v];
        doc.param_lines[v][i] = default_rows[v].second;
      } else {
        throw ParseError(last_line, 1,
                         "parametrization of '" + graph.components[v].name +
                             "' does not cover context " +
                             to_string(spaces[v].context(i)));
      }
    }
  }

  doc.model = Model{std::move(graph), std::move(params)};
  return doc;
}

Model parse_model(std::string_view text) {
  return ModelDocument::parse(text).model;
}

std::string serialize_model(const Model& m) {
  const auto& g = m.graph;
  std::string out;
  for (const auto& c : g.components)
    out += "component " + c.name + " " + std::to_string(c.max_level) + "\n";
  for (const auto& e : g.edges)
    out += "edge " + g.components[e.source].name + " " +
           std::to_string(e.threshold) + " " + g.components[e.target].name +
           "\n";
  for (std::size_t v = 0; v < g.size(); ++v) {
    ContextSpace space(g, v);
    for (std::size_t i = 0; i < space.size(); ++i) {
      out += "param " + g.components[v].name;
      for (std::size_t u = 0; u < g.size(); ++u) {
        const auto& list = space.regulator_intervals(u);
        if (list.size() < 2) continue;
        out += " " + g.components[u].name + ":" +
               std::to_string(list[space.interval_index(i, u)].low);
      }
      out += " = " + std::to_string(m.params.tables[v][i]) + "\n";
    }
  }
  return out;
}

std::string export_ts(const TransitionSystem& ts, TsFormat format) {
  std::string out;
  if (format == TsFormat::Edges) {
    for (const auto& [from, to] : ts.transitions)
      out += to_string(from) + " -> " + to_string(to) + "\n";
    return out;
  }

  out += "digraph transition_system {\n";
  std::vector<State> states;
  for (const auto& [from, to] : ts.transitions) {
    states.push_back(from);
    states.push_back(to);
  }
  std::sort(states.begin(), states.end());
  states.erase(std::unique(states.begin(), states.end()), states.end());
  for (const auto& s : states)
    out += "  \"" + to_string(s) + "\";\n";
  for (const auto& [from, to] : ts.transitions)
    out += "  \"" + to_string(from) + "\" -> \"" + to_string(to) + "\";\n";
  out += "}\n";
  return out;
}

}  // namespace mvlm
