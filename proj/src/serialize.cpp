#include "nicolai/serialize.h"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace nicolai {

Json to_json(const ConservationSequence& f) {
  return Json{{"k", f.interval().k()}, {"l", f.interval().l()}, {"values", f.to_string()}};
}

ConservationSequence sequence_from_json(const Json& j) {
  return ConservationSequence::parse(Interval(j.at("k").get<int>(), j.at("l").get<int>()),
                                     j.at("values").get<std::string>());
}

Json to_json(const FermionMonomial& m) {
  Json factors = Json::array();
  for (const Ladder& l : m.written_factors()) factors.push_back({{"site", l.site}, {"dagger", l.dagger}});
  return Json{{"coefficient", m.coefficient()}, {"factors", std::move(factors)}};
}

FermionMonomial monomial_from_json(const Json& j) {
  std::vector<Ladder> written;
  for (const auto& f : j.at("factors")) written.push_back({f.at("site").get<int>(), f.at("dagger").get<bool>()});
  return FermionMonomial::written(j.at("coefficient").get<std::int64_t>(), std::move(written));
}

Json to_json(const GenerationWord& w) {
  Json steps = Json::array();
  for (const auto& s : w.steps) {
    Json step = to_json(s.sequence);
    step["adjoint"] = s.use_adjoint;
    steps.push_back(std::move(step));
  }
  return Json{{"k", w.interval.k()},          {"l", w.interval.l()},
              {"start", to_string(w.start)},  {"target", w.target.to_string()},
              {"steps", std::move(steps)},    {"predicted_sign", w.predicted_sign}};
}

GenerationWord word_from_json(const Json& j) {
  const Interval interval(j.at("k").get<int>(), j.at("l").get<int>());
  GenerationWord w{interval,
                   parse_start_vector(j.at("start").get<std::string>()),
                   {},
                   OccupationConfig::parse(interval.inner(), j.at("target").get<std::string>()),
                   j.at("predicted_sign").get<int>()};
  if (w.predicted_sign != 1 && w.predicted_sign != -1) throw std::domain_error("predicted_sign must be +1 or -1");
  for (const auto& s : j.at("steps")) w.steps.push_back({sequence_from_json(s), s.at("adjoint").get<bool>()});
  return w;
}

FixtureTable load_fixture(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open fixture " + file.string());
  const Json j = Json::parse(in);
  FixtureTable t{j.at("table").get<std::string>(), j.at("kind").get<std::string>(), j.at("k").get<int>(),
                 j.at("l").get<int>(), j.value("comment", std::string{}), {}};
  for (const auto& r : j.at("rows")) {
    t.rows.push_back({r.at("label").get<std::string>(), r.at("values").get<std::string>(),
                      r.value("operator", std::string{})});
  }
  return t;
}

std::vector<FixtureTable> load_fixtures(const std::filesystem::path& dir) {
  std::vector<FixtureTable> out;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() == ".json") out.push_back(load_fixture(entry.path()));
  }
  std::sort(out.begin(), out.end(), [](const FixtureTable& a, const FixtureTable& b) { return a.name < b.name; });
  return out;
}

std::filesystem::path default_fixture_dir() { return NICOLAI_FIXTURE_DIR; }

}  // namespace nicolai
