#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

#include "nicolai/serialize.h"
#include "nicolai/suites.h"

using namespace nicolai;

TEST_CASE("sequence round trip") {
  const auto f = ConservationSequence::parse(Interval(1, 3), "++---");
  const Json j = to_json(f);
  CHECK(j.dump() == R"({"k":1,"l":3,"values":"++---"})");
  CHECK(sequence_from_json(j) == f);
  CHECK_THROWS(sequence_from_json(Json::parse(R"({"k":0,"l":2,"values":"+----"})")));
}

TEST_CASE("monomial round trip keeps written order") {
  const auto m = FermionMonomial::written(-2, {{1, false}, {0, true}, {-1, false}});
  const Json j = to_json(m);
  CHECK(j["factors"][0]["site"] == 1);
  CHECK(j["coefficient"] == -2);
  CHECK(monomial_from_json(j) == m);
}

TEST_CASE("word round trip") {
  for (const auto& w : generate_all_words(StartVector::occupied, 0, 3)) {
    const GenerationWord back = word_from_json(Json::parse(to_json(w).dump()));
    CHECK(back.interval == w.interval);
    CHECK(back.start == w.start);
    CHECK(back.target == w.target);
    CHECK(back.steps == w.steps);
    CHECK(back.predicted_sign == w.predicted_sign);
    CHECK(replay_matches(back));
  }
  Json bad = to_json(generate_word(OccupationConfig::parse(0, "00011"), StartVector::fock, 0, 2));
  bad["predicted_sign"] = 0;
  CHECK_THROWS(word_from_json(bad));
  bad["predicted_sign"] = 1;
  bad["target"] = "01000";
  CHECK_NOTHROW(word_from_json(bad));
  CHECK_FALSE(replay_matches(word_from_json(bad)));
}

TEST_CASE("fixture tables") {
  const auto tables = load_fixtures(default_fixture_dir());
  REQUIRE(tables.size() == 7);
  CHECK(tables.front().name <= tables.back().name);
  std::size_t xi_rows = 0;
  for (const auto& t : tables)
    if (t.kind == "conservation_sequences") xi_rows += t.rows.size();
  CHECK(xi_rows == 2 + 6 + 18 + 54);

  const auto dir = std::filesystem::temp_directory_path() / "nicolai_fixture_test";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "broken.json") << R"({"table": "broken", "kind": "ground_configs", "k": 0, "l": 1,
    "rows": [{"label": "x", "values": "000"}, {"label": "y", "values": "010"}]})";
  const auto checks = verify_fixtures_suite(dir);
  REQUIRE(checks.size() == 1);
  CHECK_FALSE(checks[0].passed);
  std::filesystem::remove_all(dir);
  CHECK_THROWS(load_fixture(dir / "missing.json"));
}

TEST_CASE("verification suites pass on small intervals") {
  for (int n = 1; n <= 3; ++n) {
    CHECK(all_passed(verify_algebra_suite(n)));
    CHECK(all_passed(verify_charges_suite(n)));
    CHECK(all_passed(verify_classification_suite(n)));
  }
  CHECK(verify_algebra_suite(1).size() == 11);
  CHECK(verify_algebra_suite(2).size() == 22);
  CHECK(verify_charges_suite(3).size() == 3 * 36);
  CHECK(all_passed(verify_fixtures_suite(default_fixture_dir())));
}
