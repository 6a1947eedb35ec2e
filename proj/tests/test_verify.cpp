#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <set>

#include "support.hpp"

using namespace weilgroid;
using support::kind_of;

namespace {

SuiteConfig small(std::vector<std::string> suites, std::vector<Model> models, int trials = 3) {
  SuiteConfig c;
  c.suites = std::move(suites);
  c.models = std::move(models);
  c.trials = trials;
  c.seed = 42;
  return c;
}

const Record& find(const VerificationReport& r, const std::string& id, const std::string& model) {
  auto it = std::find_if(r.records.begin(), r.records.end(),
                         [&](const Record& x) { return x.id == id && x.model == model; });
  if (it == r.records.end()) throw std::runtime_error("no record " + id + " @ " + model);
  return *it;
}

}  // namespace

TEST(Registry, CoversEveryRequiredResult) {
  std::set<std::string> cited;
  for (const auto& p : registry()) cited.insert(p.citation);
  for (const auto& label : required_citations()) EXPECT_TRUE(cited.count(label)) << label;
}

TEST(Registry, EverySuiteHasProperties) {
  for (const auto& s : suite_names())
    EXPECT_TRUE(std::any_of(registry().begin(), registry().end(), [&](const Property& p) { return p.suite == s; })) << s;
}

TEST(Registry, IdsAreUnique) {
  std::set<std::string> ids;
  for (const auto& p : registry()) EXPECT_TRUE(ids.insert(p.id).second) << p.id;
}

TEST(Registry, NineTransportIdentities) {
  int n = 0;
  for (const auto& p : registry()) n += p.citation == "tn2.3";
  EXPECT_EQ(n, 9);
}

TEST(Config, ParsesAndRejects) {
  auto c = config_from_json(json::parse(R"({"model":{"kind":"matrix-group","size":2},
      "suites":["bracket-matrix"],"seed":9,"suite_trials":{"bracket":4}})"));
  EXPECT_EQ(c.models.size(), 1u);
  EXPECT_EQ(c.suites, std::vector<std::string>{"bracket"});
  EXPECT_EQ(c.trials_for("bracket"), 4);
  EXPECT_EQ(c.trials_for("weil"), 20);
  EXPECT_EQ(c.seed, 9u);

  for (const char* bad : {R"([])", R"({"model":{"kind":"matrix-group","size":2},"trails":3})",
                          R"({"models":[]})", R"({"model":{"kind":"torus","dim":1}})",
                          R"({"model":{"kind":"formal-space"}})",
                          R"({"model":{"kind":"formal-space","dim":1},"suites":["nope"]})",
                          R"({"model":{"kind":"formal-space","dim":1},"trials":0})",
                          R"({"model":{"kind":"formal-space","dim":1},"threads":-1})",
                          R"({"model":{"kind":"formal-space","dim":1},"degree_cap":2})"})
    EXPECT_EQ(kind_of([&] { config_from_json(json::parse(bad)); }), ErrorKind::ConfigInvalid) << bad;
}

TEST(Runner, ReportIsIndependentOfThreadCount) {
  auto c = small({"module-axioms", "strong-diff", "bracket"}, {Model::formal_space(2), Model::matrix_group(2)});
  c.threads = 1;
  const std::string one = to_json(run_suite(c)).dump();
  c.threads = 6;
  const std::string six = to_json(run_suite(c)).dump();
  EXPECT_EQ(one, six);
  EXPECT_EQ(one, to_json(run_suite(c)).dump());
}

TEST(Runner, SeedChangesInputs) {
  auto c = small({"ad-condition"}, {Model::matrix_group(2)});
  auto a = run_suite(c);
  c.seed = 43;
  auto b = run_suite(c);
  EXPECT_NE(to_json(a).dump(), to_json(b).dump());
}

TEST(Runner, RecordsAreSortedAndTimingIsOptional) {
  auto r = run_suite(small({"euclid", "weil"}, {Model::formal_space(1), Model::pair_groupoid(1)}));
  EXPECT_TRUE(std::is_sorted(r.records.begin(), r.records.end(), [](const Record& a, const Record& b) {
    return std::tie(a.id, a.model) < std::tie(b.id, b.model);
  }));
  EXPECT_FALSE(to_json(r).at("records").at(0).contains("wall_ms"));
  EXPECT_TRUE(to_json(r, true).at("records").at(0).contains("wall_ms"));
}

TEST(Runner, AdConditionFailsWithCounterexample) {
  auto r = run_suite(small({"ad-condition"}, {Model::matrix_group(2)}, 5));
  const Record& ad = find(r, "cond-ad-2", "matrix-group k=2");
  EXPECT_EQ(ad.failures, 5);
  ASSERT_TRUE(ad.counterexample);
  EXPECT_EQ(ad.counterexample->at("trial"), 0);
  EXPECT_TRUE(ad.counterexample->at("inputs").contains("x"));
  EXPECT_TRUE(ad.counterexample->at("inputs").contains("y"));
  EXPECT_EQ(find(r, "cond-ad-2-sign-corrected", "matrix-group k=2").failures, 0);
  EXPECT_FALSE(r.pass());
}

TEST(Runner, CounterexampleReplaysFromItsSeed) {
  auto r = run_suite(small({"ad-condition"}, {Model::matrix_group(3)}, 2));
  const Record& ad = find(r, "cond-ad-2", "matrix-group k=3");
  ASSERT_TRUE(ad.counterexample);
  SuiteConfig c = small({}, {Model::matrix_group(3)});
  Sampler rng(ad.counterexample->at("seed").get<std::uint64_t>(), c.bound, c.denominator_bound);
  Point x = rng.element(Model::matrix_group(3), SimplicialSpace::D(), {});
  EXPECT_EQ(to_json(x), ad.counterexample->at("inputs").at("x"));
}

TEST(Runner, ExceptionsBecomeFailures) {
  Property p{"throws", "test", "weil", {}, [](Trial&) -> bool { fail(ErrorKind::Parse, "boom"); }, 1};
  auto r = run_properties({&p}, small({}, {Model::formal_space(1)}));
  ASSERT_EQ(r.records.size(), 1u);
  EXPECT_EQ(r.records[0].model, "any");
  EXPECT_EQ(r.records[0].failures, 1);
  EXPECT_NE(r.records[0].counterexample->at("notes").at("error").get<std::string>().find("boom"), std::string::npos);
}

TEST(Runner, BlockedModelsFailWithoutRunning) {
  bool ran = false;
  Property p{"probe", "test", "models", [](const Model&) { return true; }, [&](Trial&) { return ran = true; }, 1};
  std::map<std::string, json> blocked{{"formal-space N=1", json{{"uncertified_diagrams", {"broken"}}}}};
  auto r = run_properties({&p}, small({}, {Model::formal_space(1)}), blocked);
  EXPECT_FALSE(ran);
  EXPECT_EQ(r.records[0].failures, 1);
  EXPECT_EQ(r.records[0].counterexample->at("blocked").at("uncertified_diagrams").at(0), "broken");
}

TEST(Certify, CatalogCertifiesAndBrokenDiagramDoesNot) {
  auto c = small({}, {Model::formal_space(1), Model::matrix_group(2)});
  EXPECT_TRUE(certify_diagrams(c, catalog_diagrams()).pass());
  auto r = certify_diagrams(c, {broken_diagram()});
  EXPECT_FALSE(r.pass());
  EXPECT_EQ(r.records.size(), 2u);
  EXPECT_TRUE(uncertified(c).empty());
}

TEST(Threads, EnvironmentCapsThreadCount) {
  SuiteConfig c;
  c.threads = 8;
  ::setenv("WEILGROID_THREADS", "3", 1);
  EXPECT_EQ(thread_count(c), 3u);
  ::unsetenv("WEILGROID_THREADS");
  EXPECT_EQ(thread_count(c), 8u);
}
