#pragma once

#include <string>

#include "hz/hypergraph.hpp"

namespace hz {

// Text format ".hg":
//   line 1: "n m"
//   then m lines, each the space-separated ascending vertex indices of one
//   edge, listed in canonical order (smaller edges first, then
//   lexicographic). Lines beginning with '#' and blank lines are ignored.
// The inline form is the same content with ';' instead of newlines and no
// comments; it is used to embed witnesses in reports.
// JSON form: {"n": int, "edges": [[int, ...], ...]} with the same ordering.
// All parsers reject any invariant violation (unsorted members, duplicate
// or non-canonical edge order, out-of-range vertices, size < 2) rather than
// repairing the input.

std::string to_hg(const Hypergraph& h);
std::string to_hg_inline(const Hypergraph& h);
std::string to_json(const Hypergraph& h);

Hypergraph parse_hg(const std::string& text);
Hypergraph parse_hg_inline(const std::string& text);
Hypergraph parse_json_hypergraph(const std::string& text);

// Reads a file and dispatches on content: a leading '{' means JSON,
// anything else is parsed as .hg. IoError names the file.
Hypergraph read_hypergraph_file(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace hz
