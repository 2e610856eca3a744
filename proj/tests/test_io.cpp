#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "fixtures.hpp"
#include "properties.hpp"
#include "posetglue/io.hpp"

using namespace posetglue;
using fixtures::kind_of;

namespace {

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

struct Golden {
  const char* poset;
  const char* dot;
  NodeSet highlight;
};

const std::vector<Golden> goldens = {
    {"fig1.poset", "fig1.dot", {}},
    {"fig4-left.poset", "fig4-left.dot", {"6L", "6R"}},
    {"fig4-right.poset", "fig4-right.dot", {"6"}},
    {"fig5-f1.poset", "fig5-f1.dot", {"5"}},
    {"fig5-j.poset", "fig5-j.dot", {"5"}},
    {"fig5-f2.poset", "fig5-f2.dot", {"2"}},
    {"fig5-panel4.poset", "fig5-panel4.dot", {"2"}},
    {"fig6-v.poset", "fig6-v.dot", {"1"}},
    {"point.poset", "point.dot", {}},
};

}  // namespace

TEST_CASE("minimal documents") {
  const Poset p = parse_poset(R"({"nodes":["a"],"covers":[]})");
  CHECK(p.size() == 1);
  CHECK(emit_poset(p) == "{\n  \"version\": 1,\n  \"nodes\": [\"a\"],\n  \"covers\": []\n}\n");
  CHECK(kind_of([] { parse_poset(R"({"nodes":["a","b"],"covers":[["a","b"],["b","a"]]})"); }) ==
        ErrorKind::CycleDetected);
}

TEST_CASE("parse errors name a line or a field") {
  CHECK(message_of([] { parse_poset("{\n  \"nodes\": [\"a\",\n  }"); }).find("line 3") != std::string::npos);
  CHECK(message_of([] { parse_poset(R"({"covers":[]})"); }).find("'nodes'") != std::string::npos);
  CHECK(message_of([] { parse_poset(R"({"nodes":["a"],"covers":[["a"]]})"); }).find("covers[0]") !=
        std::string::npos);
  CHECK(message_of([] { parse_poset(R"({"nodes":[1],"covers":[]})"); }).find("nodes[0]") != std::string::npos);
  CHECK(kind_of([] { parse_poset(R"({"version":2,"nodes":["a"],"covers":[]})"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_poset(R"([1,2])"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_poset(R"({"nodes":["a"],"covers":[],"labels":{"b":"x"}})"); }) ==
        ErrorKind::ParseError);
}

TEST_CASE("labels survive a round trip") {
  const auto doc = parse_poset_document(R"({"nodes":["b","a"],"covers":[["a","b"]],"labels":{"a":"bottom"}})");
  CHECK(doc.labels.at("a") == "bottom");
  const auto text = emit_poset(doc.poset, doc.labels);
  CHECK(parse_poset_document(text).labels == doc.labels);
  CHECK(emit_poset(parse_poset_document(text).poset, doc.labels) == text);
}

TEST_CASE("canonical serialization of fixtures and random posets") {
  for (const char* name : {"fig1.poset", "fig4-left.poset", "fig4-right.poset", "fig5-f1.poset", "fig5-j.poset",
                           "fig5-f2.poset", "fig5-panel4.poset", "fig6-v.poset", "point.poset"}) {
    const std::string text = fixtures::read(fixtures::path(name));
    CHECK(emit_poset(parse_poset(text)) == text);
  }
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Poset p = random_poset(seed, 1 + seed % 12, 0.3);
    const auto text = emit_poset(p);
    REQUIRE(parse_poset(text) == p);
    REQUIRE(emit_poset(parse_poset(text)) == text);
  }
}

TEST_CASE("non-canonical input is canonicalized") {
  const auto p = parse_poset(R"({"version":1,"nodes":["c","b","a"],"covers":[["b","c"],["a","c"],["a","b"]]})");
  CHECK(emit_poset(p) ==
        "{\n  \"version\": 1,\n  \"nodes\": [\"a\", \"b\", \"c\"],\n  \"covers\": [\n    [\"a\", \"b\"],\n"
        "    [\"b\", \"c\"]\n  ]\n}\n");
}

TEST_CASE("maps") {
  const Poset v = fixtures::load("fig6-v.poset");
  const Poset y = fixtures::load("fig4-right.poset");
  const auto f = parse_map(fixtures::read(fixtures::path("v-into-fig4-right.map")), v, y);
  CHECK(is_saturated_embedding(f));
  CHECK(parse_map(emit_map(f), v, y) == f);
  CHECK(kind_of([&] { parse_map(R"({"map":{"1":"1"}})", v, y); }) == ErrorKind::NotTotal);
  CHECK(kind_of([&] { parse_map(R"({"mapping":{}})", v, y); }) == ErrorKind::ParseError);
}

TEST_CASE("script documents round trip byte for byte") {
  const auto s = decompose_to_point(fixtures::load("fig1.poset"), WrapOptions{true, false, 1, 0});
  const auto text = emit_script(s);
  const auto parsed = parse_script(text);
  CHECK(emit_script(parsed) == text);
  CHECK(replay(parsed).final_poset == s.final_poset);
  CHECK(emit_poset(replay(parsed).final_poset) == emit_poset(s.final_poset));

  const auto hand = fixtures::read(fixtures::path("fig2-3.script"));
  CHECK(emit_script(parse_script(hand)) == hand);
}

TEST_CASE("script parse errors") {
  CHECK(kind_of([] { parse_script(R"({"version":1})"); }) == ErrorKind::ParseError);
  const std::string bad_op =
      R"({"source":{"nodes":["a"],"covers":[]},"start":{"nodes":["a"],"covers":[]},)"
      R"("steps":[{"op":"grow","after":{"nodes":["a"],"covers":[]}}],)"
      R"("final":{"nodes":["a"],"covers":[]},"tracked":{"a":"a"}})";
  CHECK(message_of([&] { parse_script(bad_op); }).find("steps[0].op") != std::string::npos);
}

TEST_CASE("witness documents are readable as posets") {
  const auto w = glue_along_collection(fixtures::load("fig4-left.poset"), {{"6L", "6R"}});
  CHECK(parse_poset(emit_gluing(w)) == w.target());
  const Poset f1 = fixtures::load("fig5-f1.poset");
  const auto s = split_for_cover(f1, "6", "5");
  CHECK(parse_poset(emit_split(chain_decomposition(f1), s)) == s.f_poset);
  const auto e = elevate(fixtures::load("fig6-v.poset"), "4", 2);
  CHECK(parse_poset(emit_elevation(e, true)) == e.z_poset);
  CHECK(parse_poset(emit_elevation(e, false)) == e.x_poset);
}

TEST_CASE("DOT output") {
  const Poset pt = fixtures::load("point.poset");
  CHECK(emit_dot(pt) == "digraph poset {\n  rankdir=BT;\n  node [shape=circle];\n  { rank=same; \"1\"; }\n"
                        "  \"1\";\n}\n");
  const Poset left = fixtures::load("fig4-left.poset");
  const auto dot = emit_dot(left, {"6L", "6R"});
  std::size_t edges = 0, styled = 0;
  for (std::size_t pos = 0; (pos = dot.find(" -> ", pos)) != std::string::npos; ++pos) ++edges;
  for (std::size_t pos = 0; (pos = dot.find("style=filled", pos)) != std::string::npos; ++pos) ++styled;
  CHECK(edges == left.cover_pairs().size());
  CHECK(styled == 2);
  CHECK(emit_dot(left, {}, {{"1", "top \"ideal\""}}).find(R"(label="top \"ideal\"")") != std::string::npos);
}

TEST_CASE("DOT golden files") {
  for (const auto& g : goldens) {
    INFO(g.dot);
    CHECK(emit_dot(fixtures::load(g.poset), g.highlight) == fixtures::read(fixtures::path(std::string("golden/") + g.dot)));
  }
}
