#include <doctest.h>

#include <random>

#include "imverma/serialize.hpp"
#include "imverma/verify.hpp"

using namespace imverma;

namespace {

Element random_element(std::mt19937& rng) {
  Element e;
  const auto monos = enumerate_pbw(3, -3, 3);
  const int terms = 1 + static_cast<int>(rng() % 4u);
  for (int t = 0; t < terms; ++t)
    e.add_term(monos[rng() % monos.size()],
               Scalar::from_int(static_cast<int>(rng() % 9u) - 4) *
                   Scalar::v_pow(static_cast<int>(rng() % 5u) - 2));
  return e;
}

}  // namespace

TEST_CASE("element JSON round trip is bit-exact") {
  std::mt19937 rng(2024);
  for (int i = 0; i < 100; ++i) {
    const Element e = random_element(rng);
    const Json j = element_to_json(e);
    CHECK(element_from_json(j) == e);
    CHECK(element_to_json(element_from_json(j)).dump() == j.dump());
  }
  CHECK(element_from_json(Json::array()).is_zero());
  CHECK_THROWS_AS(element_from_json(Json::object()), std::invalid_argument);
}

TEST_CASE("element JSON is sorted by monomial lexicographic order") {
  Element e;
  e.add_term(PBWMonomial(FreeWord{2, 0}), Scalar::one());
  e.add_term(PBWMonomial(FreeWord{-1}), Scalar::one());
  e.add_term(PBWMonomial(FreeWord{}), Scalar::one());
  e.add_term(PBWMonomial(FreeWord{2}), Scalar::one());
  const Json j = element_to_json(e);
  REQUIRE(j.size() == 4);
  CHECK(j[0]["monomial"] == Json::array());
  CHECK(j[1]["monomial"] == Json::array({-1}));
  CHECK(j[2]["monomial"] == Json::array({2}));
  CHECK(j[3]["monomial"] == Json::array({2, 0}));
}

TEST_CASE("module vector JSON round trip") {
  std::mt19937 rng(9);
  for (const auto& h : {Rational(1), Rational(-5, 2), Rational(0)}) {
    const HighestWeight l(h, Rational(1, 3), h == 0);
    const ModuleVector v(random_element(rng), l);
    const Json j = module_vector_to_json(v);
    const ModuleVector back = module_vector_from_json(j);
    CHECK(back == v);
    CHECK(module_vector_to_json(back).dump() == j.dump());
  }
}

TEST_CASE("window JSON") {
  const WeightWindow w{2, -3, -4, 4};
  const WeightWindow back = window_from_json(window_to_json(w));
  CHECK(back.length == w.length);
  CHECK(back.degree == w.degree);
  CHECK(back.lo == w.lo);
  CHECK(back.hi == w.hi);
}

TEST_CASE("gram serialization") {
  const GramMatrix g = gram({2, 0, -1, 1});
  const Json j = gram_to_json(g, true);
  CHECK(j["basis"].size() == 2);
  CHECK(j["entries"][0][0] == "1 + v^4");
  CHECK(j["entries_mod_q2"][0][0] == "1");
  CHECK(j["entries_mod_q2"][0][1] == "0");
  const std::string csv = gram_to_csv(g);
  CHECK(csv.find("\"[0,0]\"") != std::string::npos);
  CHECK(csv.find("\"1 + v^4\"") != std::string::npos);
  CHECK(gram_to_json(g, false).contains("entries_mod_q2") == false);
}

TEST_CASE("graph JSON shape") {
  const Json j = graph_to_json(crystal_graph(1, -1, 1, -1, 1, false));
  CHECK(j["nodes"].is_array());
  CHECK(j["edges"].is_array());
  for (const auto& e : j["edges"]) {
    CHECK(e.contains("src"));
    CHECK(e.contains("dst"));
    CHECK(e.contains("m"));
    CHECK(e["sign"] == "+");
  }
}

TEST_CASE("sweep config JSON") {
  SweepConfig cfg;
  config_apply_json(cfg, Json::parse(R"({"max-length": 2, "lambda-h": "3/2",
    "index-lo": -2, "index-hi": 2, "seed": 7, "parallelism": 4})"));
  CHECK(cfg.max_length == 2);
  CHECK(cfg.lambda_h == Rational(3, 2));
  CHECK(cfg.seed == 7);
  CHECK(cfg.parallelism == 4);
  CHECK_THROWS_AS(config_apply_json(cfg, Json::parse(R"({"unknown": 1})")),
                  std::invalid_argument);
  SweepConfig bad;
  bad.lambda_h = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad.boundary_study = true;
  CHECK_NOTHROW(bad.validate());
}

TEST_CASE("suite registry") {
  CHECK(is_suite("relations"));
  CHECK(!is_suite("nonsense"));
  CHECK_THROWS_AS(run_suite("nonsense", SweepConfig{}), std::invalid_argument);
}

TEST_CASE("parallel_for is deterministic and exception-safe") {
  std::vector<long> out(100, -1);
  parallel_for(100, 4, [&](long i) { out[static_cast<std::size_t>(i)] = i * i; });
  for (long i = 0; i < 100; ++i) CHECK(out[static_cast<std::size_t>(i)] == i * i);
  CHECK_THROWS_AS(parallel_for(10, 3, [](long i) {
                    if (i == 5) throw std::runtime_error("boom");
                  }), std::runtime_error);
}
