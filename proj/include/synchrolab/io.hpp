#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "synchrolab/automaton.hpp"
#include "synchrolab/digraph_exponents.hpp"

namespace synchrolab {

// Text formats. Line oriented, '#' starts a comment, states are 1-based.
//
//   states: 4            matrix: 3
//   letters: a b         0 0 1
//   a: 2 3 4 1           1 0 1
//   b: 1 2 3 1           0 1 0
//
// Letter rows may come in any order but each letter exactly once. Matrix row
// i lists entries (i, j), the number of edges j -> i.

namespace detail {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;
  std::string key;
  std::size_t key_column;
  std::vector<Token> values;
};

inline std::vector<Token> tokenize(std::string_view s, std::size_t offset) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    const auto start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.push_back({std::string(s.substr(start, i - start)), offset + start + 1});
  }
  return out;
}

/// Splits into non-empty logical lines. `keyed` lines are "key: values".
inline std::vector<Line> split_lines(std::string_view text, bool keyed_first_only) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    pos = end + 1;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    if (tokenize(raw, 0).empty()) continue;
    Line line{number, "", 0, {}};
    const bool want_key = !keyed_first_only || out.empty();
    const auto colon = raw.find(':');
    if (want_key) {
      if (colon == std::string_view::npos) {
        const auto toks = tokenize(raw, 0);
        throw ParseError(number, toks.front().column, "expected 'key: values'");
      }
      const auto key_toks = tokenize(raw.substr(0, colon), 0);
      if (key_toks.size() != 1) throw ParseError(number, 1, "malformed key before ':'");
      line.key = key_toks.front().text;
      line.key_column = key_toks.front().column;
      line.values = tokenize(raw.substr(colon + 1), colon + 1);
    } else {
      line.values = tokenize(raw, 0);
    }
    out.push_back(std::move(line));
  }
  return out;
}

inline std::size_t parse_count(const Token& tok, std::size_t line, std::string_view what) {
  if (tok.text.empty() || tok.text.size() > 9 ||
      tok.text.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError(line, tok.column, std::string("expected a non-negative integer for ") +
                                           std::string(what) + ", got '" + tok.text + "'");
  }
  return std::stoul(tok.text);
}

}  // namespace detail

inline Automaton parse_automaton(std::string_view text) {
  const auto lines = detail::split_lines(text, false);
  if (lines.empty()) throw ParseError(1, 1, "empty automaton file");
  const auto& head = lines[0];
  if (head.key != "states") throw ParseError(head.number, head.key_column, "first entry must be 'states:'");
  if (head.values.size() != 1) throw ParseError(head.number, head.key_column, "'states:' takes one value");
  const std::size_t n = detail::parse_count(head.values[0], head.number, "states");
  if (n == 0) throw ParseError(head.number, head.values[0].column, "state count must be positive");

  if (lines.size() < 2 || lines[1].key != "letters") {
    const std::size_t ln = lines.size() < 2 ? head.number + 1 : lines[1].number;
    throw ParseError(ln, 1, "second entry must be 'letters:'");
  }
  const auto& letters_line = lines[1];
  if (letters_line.values.empty()) throw ParseError(letters_line.number, letters_line.key_column, "empty letter list");
  std::vector<std::string> names;
  std::map<std::string, std::size_t> index;
  for (const auto& tok : letters_line.values) {
    if (!index.emplace(tok.text, names.size()).second) {
      throw ParseError(letters_line.number, tok.column, "duplicate letter name '" + tok.text + "'");
    }
    names.push_back(tok.text);
  }

  std::vector<std::optional<std::vector<State>>> rows(names.size());
  for (std::size_t li = 2; li < lines.size(); ++li) {
    const auto& line = lines[li];
    auto it = index.find(line.key);
    if (it == index.end()) throw ParseError(line.number, line.key_column, "unknown letter '" + line.key + "'");
    if (rows[it->second]) throw ParseError(line.number, line.key_column, "second row for letter '" + line.key + "'");
    if (line.values.size() != n) {
      throw ParseError(line.number, line.key_column,
                       "row for '" + line.key + "' has " + std::to_string(line.values.size()) +
                           " entries, expected " + std::to_string(n));
    }
    std::vector<State> row;
    for (const auto& tok : line.values) {
      const auto q = detail::parse_count(tok, line.number, "a state");
      if (q < 1 || q > n) throw ParseError(line.number, tok.column, "state " + tok.text + " out of range 1.." + std::to_string(n));
      row.push_back(static_cast<State>(q - 1));
    }
    rows[it->second] = std::move(row);
  }
  std::vector<std::vector<State>> delta;
  const std::size_t eof_line = lines.back().number + 1;
  for (std::size_t a = 0; a < names.size(); ++a) {
    if (!rows[a]) throw ParseError(eof_line, 1, "missing transition row for letter '" + names[a] + "'");
    delta.push_back(std::move(*rows[a]));
  }
  return Automaton(n, std::move(delta), std::move(names));
}

inline std::string print_automaton(const Automaton& A) {
  std::ostringstream os;
  os << "states: " << A.states() << "\nletters:";
  for (const auto& name : A.letter_names()) os << ' ' << name;
  os << '\n';
  for (Letter a = 0; a < A.letters(); ++a) {
    os << A.letter_names()[a] << ':';
    for (State q : A.letter_map(a)) os << ' ' << q + 1;
    os << '\n';
  }
  return os.str();
}

inline AdjacencyMatrix parse_matrix(std::string_view text) {
  const auto lines = detail::split_lines(text, true);
  if (lines.empty()) throw ParseError(1, 1, "empty matrix file");
  const auto& head = lines[0];
  if (head.key != "matrix" || head.values.size() != 1) {
    throw ParseError(head.number, head.key_column, "first entry must be 'matrix: n'");
  }
  const std::size_t n = detail::parse_count(head.values[0], head.number, "matrix size");
  if (n == 0) throw ParseError(head.number, head.values[0].column, "matrix size must be positive");
  if (lines.size() != n + 1) {
    throw ParseError(lines.back().number + 1, 1, "expected " + std::to_string(n) + " matrix rows");
  }
  AdjacencyMatrix M(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& line = lines[i + 1];
    if (line.values.size() != n) {
      throw ParseError(line.number, 1, "matrix row has " + std::to_string(line.values.size()) +
                                           " entries, expected " + std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      M(i, j) = static_cast<std::uint32_t>(detail::parse_count(line.values[j], line.number, "a matrix entry"));
    }
  }
  return M;
}

inline std::string print_matrix(const AdjacencyMatrix& M) {
  std::ostringstream os;
  os << "matrix: " << M.size() << '\n';
  for (std::size_t i = 0; i < M.size(); ++i) {
    for (std::size_t j = 0; j < M.size(); ++j) os << (j ? " " : "") << M(i, j);
    os << '\n';
  }
  return os.str();
}

using ParsedInput = std::variant<Automaton, AdjacencyMatrix>;

/// Dispatches on the first key: "matrix:" or "states:".
inline ParsedInput parse_input(std::string_view text) {
  for (const auto& line : detail::split_lines(text, true)) {
    if (line.key == "matrix") return parse_matrix(text);
    break;
  }
  return parse_automaton(text);
}

/// Underlying graph in Graphviz DOT; parallel arrows share one edge whose
/// label lists the letters.
inline std::string to_dot(const Automaton& A) {
  std::map<std::pair<State, State>, std::string> edges;
  for (Letter a = 0; a < A.letters(); ++a) {
    for (State q = 0; q < A.states(); ++q) {
      auto& label = edges[{q, A.letter_map(a)[q]}];
      label += (label.empty() ? "" : ",") + A.letter_names()[a];
    }
  }
  std::ostringstream os;
  os << "digraph automaton {\n";
  for (State q = 0; q < A.states(); ++q) os << "  " << q + 1 << ";\n";
  for (const auto& [e, label] : edges) {
    os << "  " << e.first + 1 << " -> " << e.second + 1 << " [label=\"" << label << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

inline std::string to_dot(const AdjacencyMatrix& M) {
  std::ostringstream os;
  os << "digraph matrix {\n";
  for (std::size_t q = 0; q < M.size(); ++q) os << "  " << q + 1 << ";\n";
  for (std::size_t j = 0; j < M.size(); ++j) {
    for (std::size_t i = 0; i < M.size(); ++i) {
      if (M(i, j) > 0) os << "  " << j + 1 << " -> " << i + 1 << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace synchrolab
