#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "packedge/graph.hpp"

namespace packedge {

/// Decodes one graph6 record. An optional ">>graph6<<" prefix and a trailing
/// newline are accepted. Throws ParseError carrying the offending byte offset
/// for bad characters, truncated input, nonzero padding bits or trailing
/// bytes. Edges come out sorted by (u, v).
Graph parse_graph6(std::string_view text);

/// Short size header for n <= 62, the 4-byte form for n <= 258047.
/// Throws DomainError beyond that.
std::string encode_graph6(const Graph& g);

/// One "u v" pair per line, 0-indexed; '#' starts a comment. The order is
/// max endpoint + 1 unless a "# order N" comment raises it.
Graph parse_edge_list(std::string_view text);
std::string encode_edge_list(const Graph& g);

enum class GraphFormat { Auto, Graph6, EdgeList };

/// Every graph in a text blob: one graph6 record per non-empty line, or a
/// single edge list. Auto picks edge-list when the first data line holds two
/// whitespace-separated integers.
std::vector<Graph> parse_graphs(std::string_view text,
                                GraphFormat format = GraphFormat::Auto);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace packedge
