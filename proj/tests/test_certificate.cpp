#include "doctest.h"
#include "packedge/certificate.hpp"
#include "packedge/families.hpp"
#include "packedge/graph6.hpp"

using namespace packedge;

TEST_CASE("sha256") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("solver certificate layout") {
  const Graph p = generate(FamilySpec::petersen());
  const auto out = solve(p, PackingSequence::parse("1,1,1,2"));
  const Json cert = make_certificate(p, PackingSequence::parse("1,1,1,2"), out);
  CHECK(cert["schema_version"] == 1);
  CHECK(cert["graph"] == encode_graph6(p));
  CHECK(cert["graph_sha256"] == sha256_hex(encode_graph6(p)));
  CHECK(cert["sequence"] == Json::array({1, 1, 1, 2}));
  CHECK(cert["status"] == "colorable");
  CHECK(cert["method"] == "exact_solver");
  CHECK(cert["assignment"].size() == 15);
  CHECK(cert["assignment"][0]["edge"].size() == 2);
  CHECK(cert.contains("stats"));
  CHECK_FALSE(cert.contains("intermediates"));
  CHECK(check_certificate(cert).ok);
  // Survives a text round trip.
  CHECK(check_certificate(Json::parse(cert.dump())).ok);
}

TEST_CASE("tampering is detected") {
  const Graph p = generate(FamilySpec::petersen());
  const PackingSequence s = PackingSequence::parse("1,1,1,2");
  const Json good = make_certificate(p, s, solve(p, s));

  Json bad = good;
  bad["assignment"][0]["color"] = bad["assignment"][1]["color"];
  CHECK_FALSE(check_certificate(bad).ok);

  bad = good;
  bad["graph_sha256"] = sha256_hex("x");
  CHECK_FALSE(check_certificate(bad).ok);

  bad = good;
  bad["assignment"].erase(bad["assignment"].begin());
  CHECK_FALSE(check_certificate(bad).ok);

  bad = good;
  bad["assignment"][1] = bad["assignment"][0];
  CHECK_FALSE(check_certificate(bad).ok);

  bad = good;
  bad["sequence"] = Json::array({1, 1, 1});
  CHECK_FALSE(check_certificate(bad).ok);

  bad = good;
  bad["schema_version"] = 2;
  CHECK_FALSE(check_certificate(bad).ok);

  bad = good;
  bad.erase("assignment");
  CHECK_FALSE(check_certificate(bad).ok);

  CHECK_FALSE(check_certificate(Json::array()).ok);
}

TEST_CASE("negative and timeout certificates") {
  const Graph p = generate(FamilySpec::petersen());
  const PackingSequence no = PackingSequence::parse("1,1,2,2");
  const Json neg = make_certificate(p, no, solve(p, no));
  CHECK(neg["status"] == "not_colorable");
  CHECK_FALSE(neg.contains("assignment"));
  CHECK(check_certificate(neg).ok);

  const PackingSequence yes = PackingSequence::parse("1,1,1,2");
  Json lie = make_certificate(p, yes, solve(p, no));
  lie["sequence"] = Json::array({1, 1, 1, 2});
  lie["status"] = "not_colorable";
  CHECK_FALSE(check_certificate(lie).ok);

  const Graph f6 = generate(FamilySpec::fig6());
  const PackingSequence s = PackingSequence::parse("1,2^6");
  const Json timeout = make_certificate(f6, s, solve(f6, s, Budget{1, 0}));
  CHECK(timeout["status"] == "timeout");
  CHECK_FALSE(check_certificate(timeout).ok);
}

TEST_CASE("construction certificates carry their intermediates") {
  const Graph t = generate(FamilySpec::tietze());
  const auto c = construct_11133(t);
  const Json cert = make_certificate(t, c);
  CHECK(cert["method"] == "11133");
  CHECK(cert["status"] == "colorable");
  const auto& mid = cert["intermediates"];
  CHECK(mid["A"].size() == c.plan.set_a.edges.size());
  CHECK(mid["matching"].size() == 6);
  std::size_t covered = 0;
  for (const auto& cycle : mid["cycles"]) covered += cycle.size();
  CHECK(covered == 12);
  CHECK(mid["notes"].empty());
  CHECK(check_certificate(cert).ok);
}
