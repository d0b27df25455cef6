// Exercises the shared-library surface: handles, status codes, and the
// stability of rendered reports.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <string>

#include <json.hpp>

#include "sigma_lab.h"

namespace {

struct Out {
  char* report = nullptr;
  char* error = nullptr;
  ~Out() {
    slab_string_free(report);
    slab_string_free(error);
  }
  std::string text() const { return report ? std::string(report) : std::string(); }
  std::string err() const { return error ? std::string(error) : std::string(); }
};

const char* kWitnessSpace = R"({
  "points": ["a", "b", "c"],
  "opens": [["b"], ["b", "c"]]
})";

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(slab_version()).size() > 0);
  CHECK(std::string(slab_status_name(SLAB_OK)) == "ok");
  CHECK(std::string(slab_status_name(SLAB_CHECK_FAILED)) == "check-failed");
  CHECK(std::string(slab_status_name(SLAB_ERR_UNKNOWN_CLAIM)) == "unknown-claim");
}

TEST_CASE("space parse, classify, free") {
  slab_space* space = nullptr;
  Out out;
  REQUIRE(slab_space_parse(kWitnessSpace, &space, &out.error) == SLAB_OK);
  REQUIRE(space != nullptr);

  Out rep;
  CHECK(slab_classify(space, 0, SLAB_FORMAT_HUMAN, &rep.report, &rep.error) == SLAB_OK);
  const std::string text = rep.text();
  CHECK(text.find("T0        yes") != std::string::npos);
  CHECK(text.find("TW4       no") != std::string::npos);
  // {} and X were omitted in the input and inserted leniently
  CHECK(text.find("note: added the empty set to opens") != std::string::npos);
  CHECK(text.find("note: added the whole set to opens") != std::string::npos);

  Out json;
  CHECK(slab_classify(space, 1, SLAB_FORMAT_JSON, &json.report, &json.error) == SLAB_OK);
  CHECK(json.text().find("\"inserted_empty\": true") != std::string::npos);
  CHECK(json.text().find("\"sets\"") != std::string::npos);

  slab_space_free(space);
}

TEST_CASE("parse errors carry diagnostics") {
  slab_space* space = nullptr;
  Out out;
  CHECK(slab_space_parse("{not json", &space, &out.error) == SLAB_ERR_PARSE);
  CHECK(space == nullptr);
  CHECK(!out.err().empty());

  Out out2;
  CHECK(slab_space_parse(R"({"points":["a"],"opens":[["z"]]})", &space, &out2.error) ==
        SLAB_ERR_PARSE);
  CHECK(out2.err().find("'z'") != std::string::npos);

  // family violating closure under union
  Out out3;
  CHECK(slab_space_parse(R"({"points":["a","b","c"],"opens":[["a"],["b"]]})", &space,
                         &out3.error) == SLAB_ERR_VALIDATION);
  CHECK(out3.err().find("union") != std::string::npos);
}

TEST_CASE("missing file") {
  slab_space* space = nullptr;
  Out out;
  CHECK(slab_space_read("/nonexistent/x.space", &space, &out.error) == SLAB_ERR_PARSE);
}

TEST_CASE("null arguments are usage errors") {
  slab_space* space = nullptr;
  Out a, b, c;
  CHECK(slab_space_parse(nullptr, &space, &a.error) == SLAB_ERR_USAGE);
  CHECK(slab_classify(nullptr, 0, SLAB_FORMAT_HUMAN, &b.report, &b.error) == SLAB_ERR_USAGE);
  CHECK(slab_search(nullptr, 3, 0, SLAB_FORMAT_HUMAN, &c.report, &c.error) == SLAB_ERR_USAGE);
  slab_space_free(nullptr);   // harmless
  slab_string_free(nullptr);  // harmless
}

TEST_CASE("enumerate through the C surface") {
  Out out;
  CHECK(slab_enumerate(3, 1, 1, SLAB_FORMAT_HUMAN, &out.report, &out.error) == SLAB_OK);
  CHECK(out.text().find("labeled spaces: 29") != std::string::npos);
  CHECK(out.text().find("classes up to homeomorphism: 9") != std::string::npos);

  Out too_big;
  CHECK(slab_enumerate(9, 0, 1, SLAB_FORMAT_HUMAN, &too_big.report, &too_big.error) ==
        SLAB_ERR_TOO_LARGE);
}

TEST_CASE("verify through the C surface") {
  Out out;
  CHECK(slab_verify(2, nullptr, 1, SLAB_FORMAT_HUMAN, &out.report, &out.error) == SLAB_OK);
  CHECK(out.text().find("all laws hold") != std::string::npos);

  Out single;
  CHECK(slab_verify(2, "L-3.27", 1, SLAB_FORMAT_JSON, &single.report, &single.error) == SLAB_OK);
  CHECK(single.text().find("\"id\": \"L-3.27\"") != std::string::npos);

  Out unknown;
  CHECK(slab_verify(2, "L-0.0", 1, SLAB_FORMAT_HUMAN, &unknown.report, &unknown.error) ==
        SLAB_ERR_UNKNOWN_LAW);

  Out usage;
  CHECK(slab_verify(6, nullptr, 1, SLAB_FORMAT_HUMAN, &usage.report, &usage.error) ==
        SLAB_ERR_USAGE);
}

TEST_CASE("search through the C surface") {
  Out out;
  CHECK(slab_search("T0 & !TW4", 3, 1, SLAB_FORMAT_JSON, &out.report, &out.error) == SLAB_OK);
  CHECK(out.text().find("\"found\": true") != std::string::npos);

  Out none;
  CHECK(slab_search("T1 & !T0", 3, 1, SLAB_FORMAT_HUMAN, &none.report, &none.error) == SLAB_OK);
  CHECK(none.text().find("no space with up to 3 points") != std::string::npos);

  Out bad;
  CHECK(slab_search("T0 &", 3, 1, SLAB_FORMAT_HUMAN, &bad.report, &bad.error) == SLAB_ERR_PARSE);
}

TEST_CASE("catalog through the C surface") {
  Out all;
  CHECK(slab_catalog(nullptr, SLAB_FORMAT_HUMAN, &all.report, &all.error) == SLAB_OK);
  CHECK(all.text().find("17/17 claims pass") != std::string::npos);

  Out one;
  CHECK(slab_catalog("EX-5.10", SLAB_FORMAT_HUMAN, &one.report, &one.error) == SLAB_OK);
  CHECK(one.text().find("EX-5.10") != std::string::npos);
  CHECK(one.text().find("[ok]") != std::string::npos);

  Out unknown;
  CHECK(slab_catalog("EX-9.99", SLAB_FORMAT_HUMAN, &unknown.report, &unknown.error) ==
        SLAB_ERR_UNKNOWN_CLAIM);
  CHECK(unknown.err().find("EX-9.99") != std::string::npos);
}

TEST_CASE("reports are byte-identical across repeated calls and worker counts") {
  Out a, b;
  REQUIRE(slab_verify(3, nullptr, 1, SLAB_FORMAT_JSON, &a.report, &a.error) == SLAB_OK);
  REQUIRE(slab_verify(3, nullptr, 4, SLAB_FORMAT_JSON, &b.report, &b.error) == SLAB_OK);
  CHECK(a.text() == b.text());

  Out c, d;
  REQUIRE(slab_search("TW & !T1", 3, 1, SLAB_FORMAT_HUMAN, &c.report, &c.error) == SLAB_OK);
  REQUIRE(slab_search("TW & !T1", 3, 3, SLAB_FORMAT_HUMAN, &d.report, &d.error) == SLAB_OK);
  CHECK(c.text() == d.text());
}

TEST_CASE("classify output is byte-stable (golden)") {
  const char* sierpinski = R"({"points":["0","1"],"opens":[[],["0"],["0","1"]]})";
  slab_space* space = nullptr;
  Out parse_out;
  REQUIRE(slab_space_parse(sierpinski, &space, &parse_out.error) == SLAB_OK);
  Out rep;
  REQUIRE(slab_classify(space, 0, SLAB_FORMAT_HUMAN, &rep.report, &rep.error) == SLAB_OK);
  slab_space_free(space);
  const std::string expected =
      "points (2): 0 1\n"
      "opens (3): {} {0} {0,1}\n"
      "axioms:\n"
      "  TW        yes\n"
      "  T5W8      yes\n"
      "  T3W8      yes\n"
      "  TW4       yes\n"
      "  T0        yes\n"
      "  T1        no\n"
      "  R0        no\n"
      "  WR0       no\n"
      "  SS        no\n"
      "  CEQ       yes\n"
      "  BICOMPACT yes\n"
      "witnesses:\n"
      "  T1: no open contains the first point only [points: 1,0]\n"
      "  R0: open set omits part of the singleton closure [points: 0] [sets: {0}]\n"
      "  WR0: lambda*-closed singleton is not a wedge set [points: 1]\n"
      "  SS: singleton not g*-closed [points: 0]\n";
  CHECK(rep.text() == expected);
}

TEST_CASE("machine reports round-trip as JSON") {
  Out out;
  REQUIRE(slab_catalog(nullptr, SLAB_FORMAT_JSON, &out.report, &out.error) == SLAB_OK);
  const std::string text = out.text();
  // parse(print(r)) = r: reparsing and re-dumping reproduces the bytes
  const auto parsed = nlohmann::ordered_json::parse(text);
  CHECK(parsed.dump(2) + "\n" == text);
  CHECK(parsed["passed"] == 17);
  // stable across repeated renders
  Out again;
  REQUIRE(slab_catalog(nullptr, SLAB_FORMAT_JSON, &again.report, &again.error) == SLAB_OK);
  CHECK(text == again.text());
}
