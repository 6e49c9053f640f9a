#include <doctest.h>

#include <sstream>

#include "ckrgap/io.hpp"
#include "ckrgap/search.hpp"

using namespace ckrgap;

namespace {

bool same_weights(const WeightMap& a, const WeightMap& b) {
  if (a.graph().k() != b.graph().k() || a.graph().n() != b.graph().n()) return false;
  if (a.entries().size() != b.entries().size()) return false;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    if (a.entries()[i] != b.entries()[i]) return false;
  }
  return true;
}

std::vector<std::pair<WeightMap, InstanceMeta>> sample_instances() {
  std::vector<std::pair<WeightMap, InstanceMeta>> out;
  out.emplace_back(build_amm_j(9), InstanceMeta{});
  out.emplace_back(build_component(Component::I2, 3), InstanceMeta{});
  out.emplace_back(build_component(Component::I3, 8, frac(1, 4)), InstanceMeta{frac(1, 4), std::nullopt});
  out.emplace_back(build_component(Component::I4, 2), InstanceMeta{});
  GapParams p = reported_params(6);
  p.c = frac(1, 6);
  out.emplace_back(combine(p), InstanceMeta{p.c, p.lambda});
  return out;
}

}  // namespace

TEST_CASE("format names") {
  CHECK(parse_format("json") == Format::Json);
  CHECK(parse_format("dimacs") == Format::Dimacs);
  CHECK_FALSE(parse_format("xml"));
}

TEST_CASE("I2 at n = 3 in JSON") {
  std::string text = emit_instance(build_component(Component::I2, 3), {}, Format::Json);
  Json doc = Json::parse(text);
  CHECK(doc["format"] == "ckrgap-instance");
  CHECK(doc["version"] == 1);
  CHECK(doc["k"] == 4);
  CHECK(doc["n"] == 3);
  REQUIRE(doc["edges"].size() == 9);
  for (const auto& e : doc["edges"]) CHECK(e[2] == "1/3");
  CHECK(doc["nodes"].size() == 20);
  CHECK(doc["terminals"].size() == 4);
}

TEST_CASE("J at n = 9 in DIMACS") {
  std::string text = emit_instance(build_amm_j(9), {}, Format::Dimacs);
  CHECK(text.find("p mwc 55 117 3\n") != std::string::npos);
  std::string full = emit_instance(build_amm_j(9), {}, Format::Dimacs, true);
  CHECK(full.find("p mwc 55 135 3\n") != std::string::npos);
  CHECK(same_weights(parse_instance(full).weights, build_amm_j(9)));
}

TEST_CASE("round trips and cross-parse") {
  for (const auto& [w, meta] : sample_instances()) {
    CAPTURE(w.tag());
    std::string js = emit_instance(w, meta, Format::Json);
    std::string dm = emit_instance(w, meta, Format::Dimacs);
    InstanceFile a = parse_instance(js);
    InstanceFile b = parse_instance(dm);
    CHECK(same_weights(a.weights, w));
    CHECK(same_weights(b.weights, w));
    CHECK(a.weights.tag() == w.tag());
    CHECK(b.weights.tag() == w.tag());
    CHECK(a.meta.c == meta.c);
    CHECK(b.meta.c == meta.c);
    CHECK(a.meta.lambda == meta.lambda);
    CHECK(b.meta.lambda == meta.lambda);
    // re-emission is byte-identical
    CHECK(emit_instance(a.weights, a.meta, Format::Json) == js);
    CHECK(emit_instance(b.weights, b.meta, Format::Dimacs) == dm);
    CHECK(emit_instance(a.weights, a.meta, Format::Dimacs) == dm);
    CHECK(emit_instance(w, meta, Format::Json, true) == emit_instance(w, meta, Format::Json, true));
  }
}

TEST_CASE("malformed instances are rejected") {
  std::string good = emit_instance(build_component(Component::I2, 2), {}, Format::Dimacs);
  auto replace = [&](const std::string& from, const std::string& to) {
    std::string s = good;
    auto pos = s.find(from);
    REQUIRE(pos != std::string::npos);
    s.replace(pos, from.size(), to);
    return s;
  };
  CHECK_THROWS_AS(parse_instance(""), Error);
  CHECK_THROWS_AS(parse_instance("{not json"), Error);
  CHECK_THROWS_AS(parse_instance(replace("1/3", "0.3333")), Error);
  CHECK_THROWS_AS(parse_instance(replace("1/3", "-1/3")), Error);
  CHECK_THROWS_AS(parse_instance(replace("p mwc 10", "p mwc 11")), Error);
  CHECK_THROWS_AS(parse_instance(replace("t 1 ", "t 2 ")), Error);
  CHECK_THROWS_AS(parse_instance(good + "x 1 2\n"), Error);
  CHECK_THROWS_AS(parse_instance(good + "e 1 10 1/2\n"), Error);

  Json doc = Json::parse(emit_instance(build_component(Component::I2, 2), {}, Format::Json));
  Json swapped = doc;
  std::swap(swapped["nodes"][1], swapped["nodes"][2]);
  CHECK_THROWS_AS(parse_instance(swapped.dump()), Error);
  Json wrong = doc;
  wrong["format"] = "other";
  CHECK_THROWS_AS(parse_instance(wrong.dump()), Error);
  Json version = doc;
  version["version"] = 2;
  CHECK_THROWS_AS(parse_instance(version.dump()), Error);
}

TEST_CASE("labeling round trip") {
  for (CutLabeling p : {named_cut(NamedCut::Q0, 6), named_cut(NamedCut::PExt, 3), named_cut(NamedCut::P3, 8, frac(1, 4))}) {
    std::string text = emit_labeling(p);
    CHECK(parse_labeling(text) == p);
    CHECK(emit_labeling(parse_labeling(text)) == text);
  }
  CHECK_THROWS_AS(parse_labeling("{\"format\": \"ckrgap-labeling\", \"version\": 1, \"k\": 3, \"n\": 1, \"labels\": [1, 1, 3]}"),
                  Error);
}

TEST_CASE("search output is identical across thread counts") {
  WeightMap j = build_amm_j(3);
  std::string first;
  for (unsigned t : {1u, 2u, 4u}) {
    SearchBudget b;
    b.threads = t;
    SearchResult r = min_non_opposite_cost(j, b);
    std::string text = to_fraction_string(r.min_cost) + "\n" + emit_labeling(*r.argmin);
    if (first.empty()) first = text;
    CHECK(text == first);
  }
}

TEST_CASE("rational JSON") {
  Json j = rational_json(frac(2, 3));
  CHECK(j["exact"] == "2/3");
  CHECK(j["decimal"] == "0.666667");
}

TEST_CASE("run reports") {
  RunReport r("demo");
  r.parameter("n", 9);
  r.result("cost", frac(6, 5), "direct-evaluation");
  r.regime("two_term_bound", "in-regime");
  CheckOutcome ok{"a", "first", "1", "1", "exact", "formula", true, ""};
  CheckOutcome bad{"b", "second", "2", "3", "exact", "enumeration", false, "check-failed"};
  r.check(ok);
  CHECK(r.all_passed());
  r.check(bad);
  CHECK_FALSE(r.all_passed());
  CHECK(r.failed() == 1);
  r.timing_ms(12.5);
  Json doc = Json::parse(r.to_json());
  CHECK(doc["command"] == "demo");
  REQUIRE(doc["results"].size() == 1);
  CHECK(doc["results"][0]["name"] == "cost");
  CHECK(doc["results"][0]["exact"] == "6/5");
  CHECK(doc["results"][0]["provenance"] == "direct-evaluation");
  CHECK(doc["checks"].size() == 2);
  CHECK(doc.contains("timing_ms"));
  CHECK_FALSE(Json::parse(r.to_json(false)).contains("timing_ms"));
  std::string table = r.to_table();
  CHECK(table.find("PASS  a") != std::string::npos);
  CHECK(table.find("FAIL  b") != std::string::npos);
}
