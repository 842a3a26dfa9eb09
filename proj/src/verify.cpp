#include <cctype>
#include <charconv>
#include <sstream>

#include "packedge/error.hpp"
#include "packedge/packing.hpp"

namespace packedge {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int positive_int(std::string_view text, std::string_view term) {
  text = trim(text);
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw DomainError("bad sequence term '" + std::string(term) + "'");
  }
  if (value <= 0) {
    throw DomainError("sequence terms must be positive, got '" + std::string(term) + "'");
  }
  return value;
}

}  // namespace

PackingSequence::PackingSequence(std::vector<int> radii) : radii_(std::move(radii)) {
  if (radii_.empty()) throw DomainError("packing sequence must be non-empty");
  for (std::size_t i = 0; i < radii_.size(); ++i) {
    if (radii_[i] < 1) throw DomainError("sequence terms must be positive");
    if (i > 0 && radii_[i] < radii_[i - 1]) {
      throw DomainError("sequence must be non-decreasing");
    }
  }
}

PackingSequence PackingSequence::parse(std::string_view spec) {
  std::vector<int> radii;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = spec.find(',', start);
    std::string_view term =
        spec.substr(start, comma == std::string_view::npos ? spec.npos : comma - start);
    if (trim(term).empty()) throw DomainError("empty term in sequence '" + std::string(spec) + "'");
    std::size_t caret = term.find('^');
    int radius = positive_int(term.substr(0, caret), term);
    int times = caret == std::string_view::npos ? 1 : positive_int(term.substr(caret + 1), term);
    if (times > 4096) throw DomainError("exponent too large in '" + std::string(term) + "'");
    radii.insert(radii.end(), static_cast<std::size_t>(times), radius);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return PackingSequence(std::move(radii));
}

std::string PackingSequence::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < radii_.size();) {
    std::size_t j = i;
    while (j < radii_.size() && radii_[j] == radii_[i]) ++j;
    if (i > 0) out << ',';
    out << radii_[i];
    if (j - i > 1) out << '^' << (j - i);
    i = j;
  }
  return out.str();
}

VerifyReport verify(const Graph& g, const DistanceTable& d, const PackingSequence& s,
                    std::span<const int> colors) {
  if (colors.size() != static_cast<std::size_t>(g.size())) {
    throw DomainError("coloring is not total: " + std::to_string(colors.size()) +
                      " colors for " + std::to_string(g.size()) + " edges");
  }
  for (std::size_t e = 0; e < colors.size(); ++e) {
    if (colors[e] < 1 || colors[e] > s.size()) {
      throw DomainError("edge " + std::to_string(e) + " has color " +
                        std::to_string(colors[e]) + " outside 1.." +
                        std::to_string(s.size()));
    }
  }
  const int m = g.size();
  for (int e = 0; e < m; ++e) {
    const int radius = s.radius(colors[e]);
    for (int f = e + 1; f < m; ++f) {
      if (colors[f] != colors[e]) continue;
      int dist = d(EdgeId(e), EdgeId(f));
      if (dist <= radius) {
        return {false, Violation{EdgeId(e), EdgeId(f), colors[e], dist}};
      }
    }
  }
  return {};
}

VerifyReport verify(const Graph& g, const PackingColoring& c) {
  return verify(g, DistanceTable(g), c.sequence, c.colors);
}

std::string_view to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Colorable: return "colorable";
    case SolveStatus::NotColorable: return "not_colorable";
    case SolveStatus::Timeout: return "timeout";
  }
  return "?";
}

}  // namespace packedge
