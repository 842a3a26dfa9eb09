#include "packedge/certificate.hpp"

#include <openssl/evp.h>

#include <array>
#include <map>
#include <memory>

#include "packedge/error.hpp"
#include "packedge/graph6.hpp"

namespace packedge {
namespace {

Json edge_json(const Graph& g, EdgeId e) {
  const Edge& ed = g.edge(e);
  return Json::array({ed.u, ed.v});
}

Json edges_json(const Graph& g, std::span<const EdgeId> edges) {
  Json out = Json::array();
  for (EdgeId e : edges) out.push_back(edge_json(g, e));
  return out;
}

Json header(const Graph& g, const PackingSequence& s) {
  const std::string g6 = encode_graph6(g);
  Json cert;
  cert["schema_version"] = kCertificateSchema;
  cert["graph"] = g6;
  cert["graph_sha256"] = sha256_hex(g6);
  cert["sequence"] = Json(std::vector<int>(s.radii().begin(), s.radii().end()));
  return cert;
}

void put_assignment(Json& cert, const Graph& g, const PackingColoring& c) {
  Json rows = Json::array();
  for (int e = 0; e < g.size(); ++e) {
    rows.push_back({{"edge", edge_json(g, EdgeId(e))}, {"color", c.colors[e]}});
  }
  cert["assignment"] = std::move(rows);
}

CertificateCheck fail(std::string why) { return {false, std::move(why)}; }

}  // namespace

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest.data(), &len) != 1) {
    throw std::runtime_error("SHA-256 computation failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 15]);
  }
  return out;
}

Json make_certificate(const Graph& g, const PackingSequence& s, const SolveOutcome& outcome) {
  Json cert = header(g, s);
  cert["status"] = std::string(to_string(outcome.status));
  if (outcome.coloring) put_assignment(cert, g, *outcome.coloring);
  cert["method"] = "exact_solver";
  cert["stats"] = {{"nodes", outcome.stats.nodes}, {"seconds", outcome.stats.seconds}};
  return cert;
}

Json make_certificate(const Graph& g, const Construction& c, double seconds) {
  Json cert = header(g, c.coloring.sequence);
  cert["status"] = std::string(to_string(SolveStatus::Colorable));
  put_assignment(cert, g, c.coloring);
  cert["method"] = std::string(theorem_name(c.plan.theorem));

  const TwoFactor& f = c.plan.factor;
  Json cycles = Json::array();
  for (int i = 0; i < f.cycle_count(); ++i) {
    cycles.push_back(Json(std::vector<int>(f.cycle(i).begin(), f.cycle(i).end())));
  }
  cert["intermediates"] = {
      {"cycles", std::move(cycles)},
      {"matching", edges_json(g, f.matching())},
      {"A", edges_json(g, c.plan.set_a.edges)},
      {"B", edges_json(g, c.plan.set_b.edges)},
      {"C", edges_json(g, c.plan.set_c.edges)},
      {"k", c.plan.radius_k},
      {"notes", c.notes},
  };
  cert["stats"] = {{"nodes", 0}, {"seconds", seconds}};
  return cert;
}

CertificateCheck check_certificate(const Json& cert) {
  try {
    if (!cert.is_object()) return fail("certificate is not a JSON object");
    if (cert.at("schema_version").get<int>() != kCertificateSchema) {
      return fail("unsupported schema_version");
    }
    const auto g6 = cert.at("graph").get<std::string>();
    if (sha256_hex(g6) != cert.at("graph_sha256").get<std::string>()) {
      return fail("graph_sha256 does not match the graph");
    }
    const Graph g = parse_graph6(g6);
    const PackingSequence s(cert.at("sequence").get<std::vector<int>>());
    const auto status = cert.at("status").get<std::string>();

    if (status == to_string(SolveStatus::NotColorable)) {
      if (solve(g, s).status != SolveStatus::NotColorable) {
        return fail("a fresh search found a coloring");
      }
      return {true, "not colorable: search exhausted again"};
    }
    if (status != to_string(SolveStatus::Colorable)) return fail("status '" + status + "' carries no proof");

    std::map<std::pair<int, int>, int> color_of;
    for (const auto& row : cert.at("assignment")) {
      auto uv = row.at("edge").get<std::array<int, 2>>();
      if (uv[0] > uv[1]) std::swap(uv[0], uv[1]);
      if (!color_of.emplace(std::pair{uv[0], uv[1]}, row.at("color").get<int>()).second) {
        return fail("edge assigned twice");
      }
    }
    if (color_of.size() != static_cast<std::size_t>(g.size())) {
      return fail("assignment does not cover every edge exactly once");
    }
    std::vector<int> colors;
    for (const Edge& e : g.edges()) {
      auto it = color_of.find({e.u, e.v});
      if (it == color_of.end()) return fail("assignment names a non-edge");
      colors.push_back(it->second);
    }
    const auto report = verify(g, DistanceTable(g), s, colors);
    if (!report) {
      const auto& v = *report.violation;
      const Edge& a = g.edge(v.first);
      const Edge& b = g.edge(v.second);
      return fail("color " + std::to_string(v.color) + " on " + std::to_string(a.u) + "-" +
                  std::to_string(a.v) + " and " + std::to_string(b.u) + "-" +
                  std::to_string(b.v) + " at distance " + std::to_string(v.distance));
    }
    return {true, "valid"};
  } catch (const nlohmann::json::exception& e) {
    return fail(std::string("malformed certificate: ") + e.what());
  } catch (const std::exception& e) {
    return fail(e.what());
  }
}

}  // namespace packedge
