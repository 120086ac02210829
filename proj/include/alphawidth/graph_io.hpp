#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "alphawidth/graph.hpp"

namespace alphawidth {

/// Decodes one graph6 line. The optional ">>graph6<<" header and a trailing newline are
/// accepted. Throws ParseError with the byte offset of the first bad byte.
Graph parse_graph6(std::string_view text);

/// Encodes G in graph6 (no header, no newline).
std::string emit_graph6(const Graph& g);

/// Reads "p edge n m" / "e u v" (1-indexed) text. Comment lines start with 'c'.
/// Throws ParseError carrying the 1-based line number.
Graph parse_dimacs(std::string_view text);
std::string emit_dimacs(const Graph& g);

std::string to_dot(const Graph& g, std::string_view name = "G");

/// One graph6 string per non-empty line; returns the lines with whitespace trimmed.
std::vector<std::string> read_lines(std::istream& in);

/// Reads either a single DIMACS graph (lines starting "c ", "p " or "e ") or the first
/// graph6 line.
Graph parse_graph_text(std::string_view text);

}  // namespace alphawidth
