#include "packedge/graph6.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "packedge/error.hpp"

namespace packedge {
namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;

int sextet(std::string_view s, std::size_t pos, std::size_t base) {
  if (pos >= s.size()) throw ParseError("graph6: truncated input", base + pos);
  int c = static_cast<unsigned char>(s[pos]);
  if (c < kBias || c > 126) {
    throw ParseError("graph6: byte out of range [63,126]", base + pos);
  }
  return c - kBias;
}

std::string_view trim_newline(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.starts_with(kHeader)) {
    text.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  text = trim_newline(text);
  if (text.empty()) throw ParseError("graph6: empty input", base);

  std::size_t pos = 0;
  long long n = 0;
  int first = sextet(text, 0, base);
  if (first < 63) {
    n = first;
    pos = 1;
  } else if (text.size() > 1 && sextet(text, 1, base) == 63) {
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | sextet(text, i, base);
    pos = 8;
  } else {
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | sextet(text, i, base);
    pos = 4;
  }
  if (n > 1'000'000) throw ParseError("graph6: unsupported order", base);

  const long long bits = n * (n - 1) / 2;
  const std::size_t bytes = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() < pos + bytes) {
    throw ParseError("graph6: truncated adjacency data", base + text.size());
  }
  if (text.size() > pos + bytes) {
    throw ParseError("graph6: trailing bytes after adjacency data",
                     base + pos + bytes);
  }

  std::vector<Edge> edges;
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      std::size_t at = pos + static_cast<std::size_t>(k / 6);
      int value = sextet(text, at, base);
      if (value & (1 << (5 - k % 6))) edges.push_back({i, j});
    }
  }
  if (bytes > 0) {
    std::size_t last = pos + bytes - 1;
    int pad = static_cast<int>(bytes * 6 - bits);
    int value = sextet(text, last, base);
    if (value & ((1 << pad) - 1)) {
      throw ParseError("graph6: nonzero padding bits", base + last);
    }
  }
  std::sort(edges.begin(), edges.end(), [](Edge a, Edge b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string encode_graph6(const Graph& g) {
  const long long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  } else {
    throw DomainError("graph6: order " + std::to_string(n) +
                      " exceeds the supported header range");
  }
  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  int order = 0;
  std::size_t offset = 0;
  while (offset < text.size()) {
    std::size_t end = text.find('\n', offset);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(offset, end - offset);
    const std::size_t line_start = offset;
    offset = end + 1;

    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      std::istringstream comment{std::string(line.substr(hash + 1))};
      std::string word;
      int declared = 0;
      if (comment >> word >> declared && word == "order") {
        order = std::max(order, declared);
      }
      line = line.substr(0, hash);
    }
    std::istringstream in{std::string(line)};
    long long u = 0, v = 0;
    if (!(in >> u)) {
      if (line.find_first_not_of(" \t\r") != std::string_view::npos) {
        throw ParseError("edge list: expected 'u v'", line_start);
      }
      continue;
    }
    std::string rest;
    if (!(in >> v) || (in >> rest) || u < 0 || v < 0 || u > 1'000'000 ||
        v > 1'000'000) {
      throw ParseError("edge list: expected two nonnegative integers", line_start);
    }
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
    order = std::max(order, static_cast<int>(std::max(u, v)) + 1);
  }
  return Graph(order, std::move(edges));
}

std::string encode_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "# order " << g.order() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::vector<Graph> parse_graphs(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::Auto) {
    format = GraphFormat::Graph6;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      std::string data = line.substr(0, hash);
      if (hash == 0 && line.find(kHeader) != 0) {
        format = GraphFormat::EdgeList;  // comments only exist in edge lists
        break;
      }
      if (data.find_first_not_of(" \t\r") == std::string::npos) continue;
      std::istringstream words(data);
      long long a = 0, b = 0;
      if (words >> a >> b) format = GraphFormat::EdgeList;
      break;
    }
  }
  if (format == GraphFormat::EdgeList) return {parse_edge_list(text)};

  std::vector<Graph> graphs;
  std::size_t offset = 0;
  while (offset < text.size()) {
    std::size_t end = text.find('\n', offset);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim_newline(text.substr(offset, end - offset));
    if (!line.empty()) {
      try {
        graphs.push_back(parse_graph6(line));
      } catch (const ParseError& e) {
        throw ParseError(e.message(), offset + e.offset());
      }
    }
    offset = end + 1;
  }
  return graphs;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace packedge
