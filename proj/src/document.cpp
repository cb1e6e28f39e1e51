#include "indpoly/document.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace indpoly {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> words;
  std::istringstream in{std::string(s)};
  std::string w;
  while (in >> w) words.push_back(w);
  return words;
}

}  // namespace

HypergraphDocument parse_document(std::string_view text) {
  HypergraphDocument doc;
  std::unordered_map<std::string, std::size_t> declared;
  std::size_t first_empty_edge_line = 0;
  bool saw_mode = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    const std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    const auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": expected 'key: value'", line_no);
    }
    const std::string_view key = trim(line.substr(0, colon));
    const std::string_view value = trim(line.substr(colon + 1));

    if (key == "name") {
      doc.name = std::string(value);
    } else if (key == "mode") {
      if (saw_mode) throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": mode given twice", line_no);
      saw_mode = true;
      if (value == "strict") {
        doc.mode = Mode::Strict;
      } else if (value == "extended") {
        doc.mode = Mode::Extended;
      } else {
        throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": unknown mode '" + std::string(value) + "'",
                    line_no);
      }
    } else if (key == "vertices") {
      for (auto& name : split_words(value)) {
        if (!declared.emplace(name, doc.vertices.size()).second) {
          throw Error(Errc::DuplicateVertex, "line " + std::to_string(line_no) + ": vertex '" + name + "' declared twice",
                      line_no);
        }
        doc.vertices.push_back(std::move(name));
      }
    } else if (key == "edge") {
      auto members = split_words(value);
      for (const auto& name : members) {
        if (!declared.contains(name)) {
          throw Error(Errc::UndeclaredVertex, "line " + std::to_string(line_no) + ": undeclared vertex '" + name + "'",
                      line_no);
        }
      }
      auto sorted = members;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": vertex repeated inside an edge", line_no);
      }
      if (members.empty() && first_empty_edge_line == 0) first_empty_edge_line = line_no;
      doc.edges.push_back(std::move(members));
    } else {
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": unknown directive '" + std::string(key) + "'",
                  line_no);
    }
  }

  if (first_empty_edge_line != 0 && doc.mode == Mode::Strict) {
    throw Error(Errc::EmptyEdgeInStrictMode,
                "line " + std::to_string(first_empty_edge_line) + ": empty edge requires 'mode: extended'",
                first_empty_edge_line);
  }
  return doc;
}

std::string render_document(const HypergraphDocument& doc) {
  std::ostringstream os;
  if (!doc.name.empty()) os << "name: " << doc.name << '\n';
  os << "mode: " << (doc.mode == Mode::Extended ? "extended" : "strict") << '\n';
  os << "vertices:";
  for (const auto& v : doc.vertices) os << ' ' << v;
  os << '\n';
  for (const auto& e : doc.edges) {
    os << "edge:";
    for (const auto& v : e) os << ' ' << v;
    os << '\n';
  }
  return os.str();
}

Hypergraph to_hypergraph(const HypergraphDocument& doc) {
  std::unordered_map<std::string, VertexId> ids;
  std::vector<VertexId> vertices;
  for (const auto& name : doc.vertices) {
    const auto id = static_cast<VertexId>(vertices.size());
    if (!ids.emplace(name, id).second) throw Error(Errc::DuplicateVertex, "vertex '" + name + "' declared twice");
    vertices.push_back(id);
  }
  std::vector<Edge> edges;
  edges.reserve(doc.edges.size());
  for (const auto& members : doc.edges) {
    std::vector<VertexId> e;
    for (const auto& name : members) {
      auto it = ids.find(name);
      if (it == ids.end()) throw Error(Errc::UndeclaredVertex, "undeclared vertex '" + name + "'");
      e.push_back(it->second);
    }
    edges.emplace_back(std::move(e));
  }
  return Hypergraph(VertexSet::from_sorted(std::move(vertices)), std::move(edges), doc.mode);
}

HypergraphDocument to_document(const Hypergraph& g, std::string name) {
  HypergraphDocument doc;
  doc.name = std::move(name);
  doc.mode = g.mode();
  auto label = [](VertexId v) { return "v" + std::to_string(v); };
  for (VertexId v : g.vertices()) doc.vertices.push_back(label(v));
  for (const Edge& e : g.edges()) {
    std::vector<std::string> members;
    for (VertexId v : e) members.push_back(label(v));
    doc.edges.push_back(std::move(members));
  }
  return doc;
}

}  // namespace indpoly
