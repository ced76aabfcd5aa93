#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vgcone/cli.hpp"

using namespace vgcone;
using namespace vgcone::cli;

namespace {

std::string error_of(std::string_view text) {
  try {
    (void)parse_document(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("parse_document") {
  const auto doc = parse_document(R"({"name": "T", "dimension": 2, "normals": [["1/2", -1], [0, "3"]], "walls": [-2]})");
  CHECK(doc.name == "T");
  CHECK(doc.dimension == 2);
  CHECK(doc.normals[0][0] == Rational(1, 2));
  CHECK(doc.walls == std::vector<long long>{-2});
  CHECK_FALSE(doc.order.has_value());

  CHECK(error_of(R"({"dimension": 2, "normals": [[1, "1/0"]]})").find("zero denominator") != std::string::npos);
  CHECK(error_of(R"({"dimension": 2, "normals": [[1, 0, 3]]})") == "normals row 1: has 3 entries, expected 2");
  CHECK(error_of(R"({"normals": [[1, 0]]})") == "missing field 'dimension'");
  CHECK(error_of("{\"dimension\": 2,\n \"normals\": [[1, 0],, [0,1]]}").find("line 2") != std::string::npos);
  CHECK_FALSE(error_of(R"({"dimension": 2, "normals": [[1, 0]], "walls": "x"})").empty());
  CHECK_THROWS_AS(load_document("/nonexistent/file.json"), InputError);
}

TEST_CASE("documents round-trip through canonical JSON") {
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    const auto doc = fixture(name);
    const auto again = parse_document(to_json(doc).dump());
    CHECK(to_json(again) == to_json(doc));
    CHECK(fingerprint(again) == fingerprint(doc));
    CHECK(fingerprint(doc).rfind("fnv1a64:", 0) == 0);
    CHECK(fingerprint(doc).size() == 8 + 16);
  }
  CHECK(fingerprint(fixture("exa")) != fingerprint(fixture("exb")));
  CHECK_THROWS_AS(fixture("nope"), InputError);
}

TEST_CASE("poincare on ExB") {
  const auto r = run("poincare", fixture("exb"), {});
  CHECK(r.exit_code == 0);
  CHECK(r.report["results"]["coefficients"] == nlohmann::json::array({1, 3, 1}));
  CHECK(r.report["results"]["arrangement_coefficients"] == nlohmann::json::array({1, 5, 10, 6}));
  CHECK(r.report["status"] == "ok");
}

TEST_CASE("verify on ExA succeeds") {
  RunOptions options;
  options.oracle = true;
  const auto r = run("verify", fixture("exa"), options);
  CHECK(r.exit_code == 0);
  for (const auto& [name, passed] : r.report["checks"].items()) {
    CAPTURE(name);
    CHECK(passed == true);
  }
  CHECK(r.report["results"]["determinant"] == "1");
}

TEST_CASE("koszul on the A5 cone") {
  RunOptions options;
  options.truncate = 12;
  const auto r = run("koszul", fixture("a5cone"), options);
  CHECK(r.exit_code == 0);
  CHECK(r.report["results"]["first_negative"] == 12);
  CHECK(r.report["results"]["verdict"] == "certified non-Koszul");
  CHECK(r.report["results"]["inverse_series"][3] == "726");
}

TEST_CASE("koszul with order search on a braid arrangement") {
  RunOptions options;
  options.search_order = true;
  const auto r = run("koszul", fixture("braid4"), options);
  CHECK(r.report["results"]["verdict"] == "certified Koszul");
}

TEST_CASE("bad options") {
  RunOptions options;
  options.order = std::vector<std::size_t>{1, 1, 2};
  CHECK_THROWS_AS(run("nbc", fixture("exa"), options), InputError);
  options.order = std::vector<std::size_t>{1, 2};
  CHECK_THROWS_AS(run("nbc", fixture("exa"), options), InputError);
  CHECK_THROWS_AS(run("frobnicate", fixture("exa"), {}), InputError);
  CHECK_THROWS_AS(run("expand", fixture("exa"), {}), InputError);
}

TEST_CASE("expand round trip") {
  RunOptions options;
  options.function = parse_chamber_function(R"({"+++": 1, "+-+": 2, "+--": 3})");
  const auto r = run("expand", fixture("exa"), options);
  CHECK(r.exit_code == 0);
  CHECK(r.report["results"]["normal_form"] == "-e3 - e2 + 3");
  CHECK_THROWS_AS(parse_chamber_function("[1]"), InputError);
}

TEST_CASE("reports are deterministic") {
  for (const auto& command : commands()) {
    if (command == "expand") continue;
    CAPTURE(command);
    RunOptions one;
    RunOptions four;
    four.threads = 4;
    const auto a = render_json(run(command, fixture("exb"), one).report);
    const auto b = render_json(run(command, fixture("exb"), one).report);
    const auto c = render_json(run(command, fixture("exb"), four).report);
    CHECK(a == b);
    CHECK(a == c);
    CHECK(a.back() == '\n');
    CHECK_FALSE(render_text(run(command, fixture("exb"), one).report).empty());
  }
}
