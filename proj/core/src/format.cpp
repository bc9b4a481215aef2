#include "posetkit/format.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "posetkit/errors.hpp"

namespace posetkit {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;
};

std::vector<Token> split(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

[[noreturn]] void syntax(std::size_t line, std::size_t column, const std::string& what) {
  throw Error(ErrorKind::SyntaxError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

std::string quoted(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

}  // namespace

PosetFile parse_poset_file(std::string_view text) {
  PosetFile out;
  bool have_elements = false;
  bool in_covers = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto tokens = split(line);
    if (tokens.empty() || tokens.front().text.front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    const Token& head = tokens.front();
    if (head.text == "elements:") {
      if (have_elements) syntax(line_no, head.column, "duplicate 'elements:' line");
      have_elements = true;
      for (std::size_t i = 1; i < tokens.size(); ++i) out.names.emplace_back(tokens[i].text);
    } else if (head.text == "covers:") {
      if (!have_elements) syntax(line_no, head.column, "'covers:' before 'elements:'");
      if (in_covers) syntax(line_no, head.column, "duplicate 'covers:' line");
      if (tokens.size() > 1) syntax(line_no, tokens[1].column, "unexpected text after 'covers:'");
      in_covers = true;
    } else if (!have_elements) {
      syntax(line_no, head.column, "expected 'elements:'");
    } else if (!in_covers) {
      syntax(line_no, head.column, "expected 'covers:'");
    } else {
      if (tokens.size() < 3 || tokens[1].text != "<") {
        syntax(line_no, tokens.size() > 1 ? tokens[1].column : head.column + head.text.size(),
               "expected '<lo> < <hi>'");
      }
      if (tokens.size() > 3) syntax(line_no, tokens[3].column, "unexpected text after cover");
      out.covers.emplace_back(std::string(tokens[0].text), std::string(tokens[2].text));
    }
    if (end == text.size()) break;
  }
  if (!have_elements) syntax(line_no, 1, "missing 'elements:' line");
  return out;
}

Poset parse_poset(std::string_view text) {
  PosetFile f = parse_poset_file(text);
  return Poset::from_covers(std::move(f.names), f.covers);
}

Poset load_poset(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_poset(buf.str());
}

std::string serialize(const Poset& p) {
  std::string out = "elements:";
  for (const auto& n : p.names()) out += ' ' + n;
  out += "\ncovers:\n";
  for (const auto& [lo, hi] : p.covers()) out += p.name(lo) + " < " + p.name(hi) + '\n';
  return out;
}

std::string to_dot(const Poset& p, std::string_view graph_name) {
  std::ostringstream out;
  out << "digraph " << quoted(graph_name) << " {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  const auto heights = p.heights();
  std::map<std::size_t, std::vector<Element>> ranks;
  for (Element x = 0; x < p.size(); ++x) ranks[heights[x]].push_back(x);
  for (const auto& [h, elems] : ranks) {
    out << "  { rank=same;";
    for (Element x : elems) out << ' ' << quoted(p.name(x)) << ';';
    out << " }\n";
  }
  for (const auto& [lo, hi] : p.covers()) out << "  " << quoted(p.name(lo)) << " -> " << quoted(p.name(hi)) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace posetkit
