#include "hz/hg_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace hz {

namespace {

std::string join_members(const std::vector<int>& members) {
  std::string line;
  for (size_t i = 0; i < members.size(); ++i) {
    if (i) line += ' ';
    line += std::to_string(members[i]);
  }
  return line;
}

std::vector<long long> parse_int_line(const std::string& line, const char* what) {
  std::istringstream in(line);
  std::vector<long long> values;
  std::string token;
  while (in >> token) {
    try {
      size_t used = 0;
      long long v = std::stoll(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      values.push_back(v);
    } catch (const std::exception&) {
      fail(errc::parse_error, std::string(what) + ": '" + token + "' is not an integer");
    }
  }
  return values;
}

// Significant lines: comments ('#' first non-blank character) and blank
// lines are dropped.
std::vector<std::string> significant_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    lines.push_back(line);
  }
  return lines;
}

Hypergraph finish_parse(long long n, std::vector<std::vector<int>> edges) {
  if (n < 1) fail(errc::empty_vertex_set, "vertex count must be positive, got " + std::to_string(n));
  // The edge list itself must already be canonical; Hypergraph::build sorts
  // members but would silently accept a permuted edge list, so order is
  // checked here first.
  Hypergraph h = Hypergraph::build(static_cast<int>(n), edges);
  for (size_t i = 0; i < edges.size(); ++i) {
    if (h.edge(static_cast<int>(i)).members != edges[i]) {
      fail(errc::parse_error, "edges must be listed in canonical order (smaller first, then lexicographic)");
    }
  }
  return h;
}

}  // namespace

std::string to_hg(const Hypergraph& h) {
  std::string out = std::to_string(h.n()) + " " + std::to_string(h.edge_count()) + "\n";
  for (const Edge& e : h.edges()) out += join_members(e.members) + "\n";
  return out;
}

std::string to_hg_inline(const Hypergraph& h) {
  std::string out = std::to_string(h.n()) + " " + std::to_string(h.edge_count());
  for (const Edge& e : h.edges()) out += ";" + join_members(e.members);
  return out;
}

std::string to_json(const Hypergraph& h) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : h.edges()) edges.push_back(e.members);
  return nlohmann::json{{"n", h.n()}, {"edges", edges}}.dump();
}

Hypergraph parse_hg(const std::string& text) {
  std::vector<std::string> lines = significant_lines(text);
  if (lines.empty()) fail(errc::parse_error, "missing 'n m' header line");
  std::vector<long long> header = parse_int_line(lines[0], "header");
  if (header.size() != 2) fail(errc::parse_error, "header line must be exactly 'n m'");
  long long n = header[0], m = header[1];
  if (m < 0) fail(errc::parse_error, "edge count must be non-negative, got " + std::to_string(m));
  if (static_cast<long long>(lines.size()) - 1 != m) {
    fail(errc::parse_error, "header announces " + std::to_string(m) + " edges but " +
                                std::to_string(lines.size() - 1) + " edge lines follow");
  }
  std::vector<std::vector<int>> edges;
  edges.reserve(lines.size() - 1);
  for (size_t i = 1; i < lines.size(); ++i) {
    std::vector<long long> raw = parse_int_line(lines[i], "edge line");
    std::vector<int> edge;
    edge.reserve(raw.size());
    for (size_t j = 0; j < raw.size(); ++j) {
      if (raw[j] < 0 || raw[j] >= n) {
        fail(errc::vertex_out_of_range, "vertex " + std::to_string(raw[j]) + " outside [0, " +
                                            std::to_string(n) + ") on edge line " + std::to_string(i));
      }
      if (j > 0 && raw[j] <= raw[j - 1]) {
        fail(errc::parse_error, "edge members must be strictly ascending, got '" + lines[i] + "'");
      }
      edge.push_back(static_cast<int>(raw[j]));
    }
    edges.push_back(std::move(edge));
  }
  return finish_parse(n, std::move(edges));
}

Hypergraph parse_hg_inline(const std::string& text) {
  std::string unfolded = text;
  for (char& c : unfolded) {
    if (c == ';') c = '\n';
  }
  return parse_hg(unfolded);
}

Hypergraph parse_json_hypergraph(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(errc::parse_error, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges") || doc.size() != 2) {
    fail(errc::parse_error, "hypergraph JSON must be exactly {\"n\": int, \"edges\": [[int, ...], ...]}");
  }
  if (!doc["n"].is_number_integer()) fail(errc::parse_error, "\"n\" must be an integer");
  long long n = doc["n"].get<long long>();
  if (!doc["edges"].is_array()) fail(errc::parse_error, "\"edges\" must be an array");
  std::vector<std::vector<int>> edges;
  for (const auto& item : doc["edges"]) {
    if (!item.is_array()) fail(errc::parse_error, "each edge must be an array of integers");
    std::vector<int> edge;
    long long prev = -1;
    for (const auto& entry : item) {
      if (!entry.is_number_integer()) fail(errc::parse_error, "each edge must be an array of integers");
      long long v = entry.get<long long>();
      if (v < 0 || v >= n) {
        fail(errc::vertex_out_of_range,
             "vertex " + std::to_string(v) + " outside [0, " + std::to_string(n) + ")");
      }
      if (v <= prev) fail(errc::parse_error, "edge members must be strictly ascending");
      prev = v;
      edge.push_back(static_cast<int>(v));
    }
    edges.push_back(std::move(edge));
  }
  return finish_parse(n, std::move(edges));
}

Hypergraph read_hypergraph_file(const std::string& path) {
  std::string text = read_text_file(path);
  size_t start = text.find_first_not_of(" \t\r\n");
  if (start != std::string::npos && text[start] == '{') return parse_json_hypergraph(text);
  return parse_hg(text);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::io_error, "cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) fail(errc::io_error, "read failure on '" + path + "'");
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(errc::io_error, "cannot open '" + path + "' for writing");
  out << content;
  if (!out) fail(errc::io_error, "write failure on '" + path + "'");
}

}  // namespace hz
