#include <doctest.h>

#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "rwb/rwb.h"

namespace {

using nlohmann::json;

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(RWB_TEST_DATA) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Fixture {
  rwb_context* ctx = nullptr;
  Fixture() { REQUIRE(rwb_context_new(&ctx) == RWB_OK); }
  ~Fixture() { rwb_context_free(ctx); }

  rwb_object* load(const std::string& name) {
    rwb_object* obj = nullptr;
    REQUIRE(rwb_object_load(ctx, slurp(name).c_str(), &obj) == RWB_OK);
    return obj;
  }

  json take(rwb_report* report) {
    REQUIRE(report != nullptr);
    json j = json::parse(rwb_report_json(report));
    rwb_report_free(report);
    return j;
  }
};

}  // namespace

TEST_SUITE("c_api") {
  TEST_CASE_FIXTURE(Fixture, "objects load with their kind and size") {
    rwb_object* o = load("swap_pair.json");
    CHECK(std::string(rwb_object_kind(o)) == "ordered_mset");
    CHECK(rwb_object_size(o) == 2);
    rwb_report* r = nullptr;
    CHECK(rwb_validate(ctx, o, &r) == RWB_OK);
    const json j = take(r);
    CHECK(j["valid"] == true);
    CHECK(std::string(rwb_last_error(ctx)).empty());
    rwb_object_free(o);
    CHECK(std::strlen(rwb_version()) > 0);
  }

  TEST_CASE_FIXTURE(Fixture, "invalid input reports a named error with a witness") {
    rwb_object* o = nullptr;
    CHECK(rwb_object_load(ctx, slurp("bad_action.json").c_str(), &o) == RWB_ERR_INPUT);
    CHECK(o == nullptr);
    const json err = json::parse(rwb_last_error(ctx));
    CHECK(err["error"] == "CompositionFails");
    CHECK(err["witness"] == json::array({1, 1, 0}));
    CHECK(rwb_object_load(ctx, "{not json", &o) == RWB_ERR_INPUT);
    CHECK(json::parse(rwb_last_error(ctx))["error"] == "ParseError");
    CHECK(rwb_context_set_option(ctx, "colour", "3") == RWB_ERR_INPUT);
    CHECK(rwb_context_set_option(ctx, "threads", "many") == RWB_ERR_INPUT);
  }

  TEST_CASE_FIXTURE(Fixture, "arrow check through the C interface") {
    rwb_object *a = load("chain2.json"), *b = load("chain3.json"), *c5 = load("chain5.json"), *c6 = load("chain6.json");
    rwb_report* r = nullptr;
    REQUIRE(rwb_arrow_check(ctx, a, b, c6, 2, 1, "chains", &r) == RWB_OK);
    CHECK(take(r)["status"] == "holds");
    REQUIRE(rwb_arrow_check(ctx, a, b, c5, 2, 1, "chains", &r) == RWB_OK);
    const json refuted = take(r);
    CHECK(refuted["status"] == "refuted");
    CHECK(refuted["bad_coloring"]["verified"] == true);
    CHECK(rwb_arrow_check(ctx, a, b, c5, 2, 1, "posets", &r) == RWB_ERR_INPUT);
    REQUIRE(rwb_context_set_option(ctx, "hom_cap", "5") == RWB_OK);
    CHECK(rwb_arrow_check(ctx, a, b, c6, 2, 1, "chains", &r) == RWB_ERR_OVERFLOW);
    CHECK(json::parse(rwb_last_error(ctx))["error"] == "SizeOverflow");
    for (rwb_object* o : {a, b, c5, c6}) rwb_object_free(o);
  }

  TEST_CASE_FIXTURE(Fixture, "mixed monoids are rejected") {
    rwb_object *a = load("trivial1.json"), *b = load("fixed2.json");
    rwb_report* r = nullptr;
    CHECK(rwb_arrow_check(ctx, a, b, b, 2, 1, "msets", &r) == RWB_ERR_INPUT);
    CHECK(json::parse(rwb_last_error(ctx))["error"] == "MonoidMismatch");
    rwb_object_free(a);
    rwb_object_free(b);
  }

  TEST_CASE_FIXTURE(Fixture, "forest, laws and degree reports") {
    rwb_object* f = load("ten_vertex_forest.json");
    rwb_report* r = nullptr;
    REQUIRE(rwb_forest(ctx, f, &r) == RWB_OK);
    const json forest = take(r);
    CHECK(forest["round_trip"] == true);
    CHECK(forest["order_embedding"] == true);
    rwb_object* m = load("z2.json");
    REQUIRE(rwb_laws(ctx, "monoid_action", m, 2, &r) == RWB_OK);
    CHECK(take(r)["all_passed"] == true);
    CHECK(rwb_laws(ctx, "monoid_action", nullptr, 2, &r) == RWB_ERR_INPUT);
    rwb_object* t = load("trivial2.json");
    REQUIRE(rwb_degree_bound(ctx, t, slurp("degrees_big.json").c_str(), &r) == RWB_OK);
    CHECK(take(r)["aggregate"] == 4);
    CHECK(rwb_degree_bound(ctx, t, slurp("degrees_incomplete.json").c_str(), &r) == RWB_ERR_INPUT);
    for (rwb_object* o : {f, m, t}) rwb_object_free(o);
  }

  TEST_CASE("content hash is SHA-256") {
    char out[65];
    REQUIRE(rwb_content_hash("abc", 3, out) == RWB_OK);
    CHECK(std::string(out) == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    REQUIRE(rwb_content_hash("", 0, out) == RWB_OK);
    CHECK(std::string(out) == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  }
}
