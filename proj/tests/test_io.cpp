#include <doctest.h>

#include "combtop/bistellar.hpp"
#include "combtop/catalog.hpp"
#include "combtop/census.hpp"
#include "combtop/collapse.hpp"
#include "combtop/io.hpp"
#include "combtop/recognition.hpp"
#include "helpers.hpp"

using namespace combtop;

TEST_CASE("parse a small facet list") {
  const auto p = parse_facets("1 2 3\n1 2 4\n");
  CHECK(p.complex.f_vector().counts == std::vector<std::int64_t>{4, 5, 2});
  CHECK(p.warnings.empty());
  CHECK(p.labels.empty());
}

TEST_CASE("comments, blank lines and dominated facets") {
  const auto p = parse_facets("# a comment\n\n1 2\n1 2 3   # trailing\n");
  CHECK(p.complex.canonical_encoding() == "1 2 3");
  REQUIRE(p.warnings.size() == 1);
  CHECK(p.warnings[0].find("line 3") != std::string::npos);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_facets("1 2 3\n1 2 64\n"), doctest::Contains("line 2"), Error);
  CHECK_THROWS_WITH_AS(parse_facets("1 2 3\n1 2 64\n"), doctest::Contains("overflow"), Error);
  CHECK_THROWS_WITH_AS(parse_facets("1 2 2\n"), doctest::Contains("repeated"), Error);
  CHECK_THROWS_WITH_AS(parse_facets("1 2 3\n\n1 2 $\n"), doctest::Contains("line 3"), Error);
  CHECK_THROWS_WITH_AS(parse_facets("# nothing\n"), doctest::Contains("no facets"), Error);
}

TEST_CASE("token labels") {
  const auto p = parse_facets("a b c\nb c d\n");
  CHECK(p.labels == std::vector<std::string>{"a", "b", "c", "d"});
  CHECK(p.complex.canonical_encoding() == "0 1 2|1 2 3");
  const auto again = parse_facets(write_facets(p.complex, p.labels));
  CHECK(again.complex == p.complex);
  CHECK(again.labels == p.labels);
  const auto fixed = parse_facets("# labels: d c b a\na b c\n");
  CHECK(fixed.complex.canonical_encoding() == "1 2 3");
}

TEST_CASE("writing and reading back is byte-identical") {
  for (const auto& name : catalog::names()) {
    const auto text = write_facets(catalog::complex(name));
    const auto p = parse_facets(text);
    CHECK(p.complex == catalog::complex(name));
    CHECK(write_facets(p.complex) == text);
  }
  CHECK(write_facets(catalog::complex("S1_3")) == "1 2\n1 3\n2 3\n");
}

TEST_CASE("encodings") {
  const auto& k = catalog::complex("Sigma4");
  CHECK(parse_encoding(k.canonical_encoding()) == k);
  CHECK(parse_encoding("").empty());
  CHECK(parse_face("3 1 2") == Face{1, 2, 3});
}

TEST_CASE("report tree round trip") {
  ReportNode root;
  auto& a = root.add("alpha", "1");
  a.add("beta", "two words");
  a.add("gamma").add("delta", "x: y");
  root.add("epsilon", "");
  const auto text = serialize(root);
  const auto back = parse_report(text);
  CHECK(serialize(back) == text);
  CHECK(back.at("alpha").at("gamma").at("delta").value == "x: y");
  CHECK(back.find("zeta") == nullptr);
  CHECK_THROWS_AS(back.at("zeta"), Error);
  CHECK_THROWS_AS(parse_report("a: 1\n   b: 2\n"), Error);
  CHECK_THROWS_AS(root.add("bad:key"), Error);
}

TEST_CASE("documents carry tool version, input and seed") {
  const auto& k = catalog::complex("Sigma1");
  const auto doc = make_document("info", &k, 12);
  CHECK(doc.at("tool").value == kToolVersion);
  CHECK(doc.at("input").value == k.canonical_encoding());
  CHECK(doc.at("seed").value == "12");
  CHECK(make_document("census", nullptr).find("seed") == nullptr);
}

TEST_CASE("collapse certificates survive serialization and still verify") {
  const auto k = cone(catalog::complex("Sigma1"), 9);
  const auto v = is_collapsible(k);
  REQUIRE(v.certificate);
  ReportNode root;
  add_collapse_verdict(root, v);
  const auto back = parse_report(serialize(root));
  const auto cert = read_collapse_certificate(back.at("collapse").at("collapse-certificate"));
  CHECK(cert.steps == v.certificate->steps);
  CHECK(cert.terminal == v.certificate->terminal);
  CHECK(verify_certificate(k, cert));
}

TEST_CASE("sphere certificates survive serialization and still verify") {
  for (const char* name : {"Sigma2", "S3_5", "octahedron"}) {
    const auto& m = catalog::complex(name);
    const auto c = certify_sphere(m);
    ReportNode root;
    add_sphere_certificate(root, c);
    const auto text = serialize(root);
    const auto back = parse_report(text);
    REQUIRE(back.children.size() == 1);
    const auto read = read_sphere_certificate(back.children[0]);
    CHECK(read.verdict == c.verdict);
    CHECK(read.complement == c.complement);
    CHECK(verify_sphere_certificate(m, read));
    ReportNode again;
    add_sphere_certificate(again, read);
    CHECK(serialize(again) == text);
  }
}

TEST_CASE("moves and flip traces survive serialization") {
  const auto& s = catalog::complex("Sigma3");
  const auto trace = flip_search(s, {}, {}, 5);
  REQUIRE(trace);
  ReportNode root;
  add_flip_trace(root, *trace);
  const auto back = parse_report(serialize(root));
  const auto read = read_flip_trace(back.children.at(0));
  CHECK(read.moves == trace->moves);
  CHECK(replay(s, read).canonical_encoding() == trace->end);

  const auto m = classify_move(catalog::complex("Sigma2"), Face{1, 2, 6, 7});
  ReportNode r2;
  add_move(r2, m);
  CHECK(read_move(parse_report(serialize(r2)).children.at(0)) == m);
}

TEST_CASE("census and sampling reports serialize") {
  ReportNode root;
  add_census(root, enumerate_census(CensusSpec::prop_2_2()));
  add_sampling(root, theorem1_sample_test(50, 1));
  const auto text = serialize(root);
  CHECK(serialize(parse_report(text)) == text);
}
