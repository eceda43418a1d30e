#pragma once

// Stable file formats: JSON ({"n": ..., "edges": [[i,j], ...]}), matrix text
// (n lines of '0'/'1'), DOT export/import, comma-separated score sequences,
// and JSON forms of traces and extension results. Parsers funnel through the
// validating constructors so malformed inputs fail with the same diagnostics
// everywhere.

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "regtour/constructions.hpp"
#include "regtour/score_sequence.hpp"
#include "regtour/tournament.hpp"

namespace regtour {

inline nlohmann::json tournament_to_json(const Tournament& t) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [u, v] : t.edges()) edges.push_back({u, v});
  return {{"n", t.order()}, {"edges", std::move(edges)}};
}

inline std::string to_json_string(const Tournament& t) { return tournament_to_json(t).dump(); }

inline Tournament tournament_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw std::invalid_argument("tournament JSON must be an object with \"n\" and \"edges\"");
  if (!j["n"].is_number_integer())
    throw std::invalid_argument("tournament JSON: \"n\" must be an integer");
  if (!j["edges"].is_array())
    throw std::invalid_argument("tournament JSON: \"edges\" must be an array");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw std::invalid_argument("tournament JSON: each edge must be a pair of integers");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return Tournament::from_edges(j["n"].get<int>(), edges);
}

inline Tournament read_tournament_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument("input is not valid JSON");
  return tournament_from_json(j);
}

inline std::string to_matrix_string(const Tournament& t) {
  std::string out;
  out.reserve(static_cast<std::size_t>(t.order()) * (static_cast<std::size_t>(t.order()) + 1));
  for (int i = 0; i < t.order(); ++i) {
    for (int j = 0; j < t.order(); ++j) out.push_back(t.arc(i, j) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

inline Tournament read_tournament_matrix(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  const int n = static_cast<int>(lines.size());
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(lines[static_cast<std::size_t>(i)].size()) != n)
      throw std::invalid_argument("matrix text: line " + std::to_string(i) + " has length " +
                                  std::to_string(lines[static_cast<std::size_t>(i)].size()) +
                                  ", expected " + std::to_string(n));
    for (int j = 0; j < n; ++j) {
      const char c = lines[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (c != '0' && c != '1')
        throw std::invalid_argument(std::string("matrix text: invalid character '") + c + "'");
      if (c == '1') edges.emplace_back(i, j);
    }
  }
  return Tournament::from_edges(n, edges);
}

inline std::string to_dot(const Tournament& t) {
  std::string out = "digraph {\n";
  for (int v = 0; v < t.order(); ++v) out += "  " + std::to_string(v) + ";\n";
  for (const auto& [u, v] : t.edges())
    out += "  " + std::to_string(u) + " -> " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

/// Reads the DOT subset produced by to_dot: one digraph block whose
/// statements are bare vertex labels or "u -> v" edges.
inline Tournament read_tournament_dot(const std::string& text) {
  const auto open = text.find('{');
  const auto close = text.rfind('}');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw std::invalid_argument("DOT text: missing digraph braces");
  std::string body = text.substr(open + 1, close - open - 1);
  std::vector<std::pair<int, int>> edges;
  int max_label = -1;
  std::istringstream stmts(body);
  for (std::string stmt; std::getline(stmts, stmt, ';');) {
    std::istringstream s(stmt);
    int u;
    if (!(s >> u)) {
      std::string rest;
      if (s.clear(), s >> rest) throw std::invalid_argument("DOT text: unparsable statement");
      continue;  // whitespace-only statement
    }
    max_label = std::max(max_label, u);
    std::string arrow;
    if (s >> arrow) {
      int v;
      if (arrow != "->" || !(s >> v))
        throw std::invalid_argument("DOT text: expected \"u -> v\" edge statement");
      max_label = std::max(max_label, v);
      edges.emplace_back(u, v);
    }
  }
  return Tournament::from_edges(max_label + 1, edges);
}

/// Sniffs JSON / DOT / matrix from the first significant character.
inline Tournament read_tournament_auto(const std::string& text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    if (c == '{') return read_tournament_json(text);
    if (c == 'd') return read_tournament_dot(text);
    if (c == '0' || c == '1') return read_tournament_matrix(text);
    break;
  }
  throw std::invalid_argument("unrecognized tournament format (expected JSON, DOT, or matrix)");
}

namespace detail {

inline std::vector<int> parse_int_csv(const std::string& text) {
  std::vector<int> values;
  std::istringstream in(text);
  for (std::string tok; std::getline(in, tok, ',');) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("invalid integer list entry \"" + tok + "\"");
    }
    while (pos < tok.size() && (tok[pos] == ' ' || tok[pos] == '\r')) ++pos;
    if (pos != tok.size()) throw std::invalid_argument("invalid integer list entry \"" + tok + "\"");
    values.push_back(v);
  }
  if (values.empty()) throw std::invalid_argument("empty integer list");
  return values;
}

}  // namespace detail

inline std::string to_csv(const ScoreSequence& s) {
  std::string out;
  for (int i = 0; i < s.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(s[i]);
  }
  return out;
}

inline ScoreSequence score_sequence_from_csv(const std::string& text) {
  return ScoreSequence(detail::parse_int_csv(text));
}

inline nlohmann::json matrix_to_json(const BinaryMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline nlohmann::json trace_to_json(const ConstructionTrace& tr) {
  nlohmann::json j;
  j["kind"] = to_string(tr.kind);
  if (tr.witness) j["witness"] = *tr.witness;
  if (tr.pivot) j["pivot"] = *tr.pivot;
  if (tr.pivot_charge) j["pivot_charge"] = *tr.pivot_charge;
  if (tr.inverted) j["inverted"] = true;
  if (tr.added) j["added"] = {tr.added->first, tr.added->second};
  if (tr.balancing_set) j["balancing_set"] = *tr.balancing_set;
  if (tr.split_vertex) j["s0"] = *tr.split_vertex;
  if (tr.set_x) j["x"] = *tr.set_x;
  if (tr.set_y) j["y"] = *tr.set_y;
  if (tr.matrix_c) j["matrix_c"] = matrix_to_json(*tr.matrix_c);
  if (tr.relabel_log) j["relabel_log"] = *tr.relabel_log;
  if (!tr.steps.empty()) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : tr.steps) steps.push_back(trace_to_json(s));
    j["steps"] = std::move(steps);
  }
  return j;
}

inline nlohmann::json extension_to_json(const ExtensionResult& r, bool with_trace = false) {
  nlohmann::json j;
  j["kind"] = to_string(r.trace.kind);
  j["output"] = tournament_to_json(r.output);
  j["embedding"] = r.embedding;
  j["regular"] = is_regular(r.output);
  if (with_trace) j["trace"] = trace_to_json(r.trace);
  return j;
}

}  // namespace regtour
