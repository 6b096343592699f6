#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "gelfand/errors.hpp"
#include "gelfand/pipeline.hpp"

namespace gelfand {
namespace {

using nlohmann::json;

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

TEST(Config, LoadAndValidate) {
  const std::string path = write_temp(
      "cfg_ok.json",
      R"({"pair": "gl-orthogonal", "q": [3, 5], "format": "csv", "seed": 9, "cap_group": 1000})");
  const RunConfig cfg = load_run_config(path);
  EXPECT_EQ(cfg.pair, "gl-orthogonal");
  EXPECT_EQ(cfg.qs, (std::vector<std::uint32_t>{3, 5}));
  EXPECT_EQ(cfg.format, OutputFormat::Csv);
  EXPECT_EQ(cfg.seed, 9u);
  EXPECT_EQ(cfg.cap_group, 1000u);
  EXPECT_EQ(cfg.cap_cosets, kDefaultCosetCap);
  EXPECT_NO_THROW(cfg.validate());

  EXPECT_THROW(load_run_config(write_temp("cfg_bad.json", "{not json")), std::invalid_argument);
  EXPECT_THROW(load_run_config(write_temp("cfg_fmt.json", R"({"format": "xml"})")),
               std::invalid_argument);
  EXPECT_THROW(load_run_config(::testing::TempDir() + "missing.json"), std::invalid_argument);

  RunConfig bad;
  bad.qs = {4};
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad.qs = {6};
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad.qs = {3};
  bad.pair = "gl-nothing";
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad.pair = "gl-torus(1,1)";
  bad.cap_cosets = 0;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
}

TEST(Report, TorusQ3) {
  const PairReport r = run_pair("gl-torus(1,1)", 3, kDefaultGroupCap, kDefaultCosetCap);
  EXPECT_EQ(r.order_G, 48u);
  EXPECT_EQ(r.order_H, 4u);
  EXPECT_EQ(r.num_cosets, 7u);
  EXPECT_EQ(r.num_sigma_fixed, 5u);
  EXPECT_EQ(r.sigma_fixed_dim, 6u);
  EXPECT_FALSE(r.hecke_commutative);
  EXPECT_EQ(r.char_modulus, 97u);
  EXPECT_EQ(r.num_constituents, 4u);
  EXPECT_EQ(r.num_mult_one, 3u);
  EXPECT_EQ(r.sum_m_sq, 7u);
  EXPECT_EQ(r.sum_m_deg, 12u);
  EXPECT_EQ(r.eps.fraction, Fraction(3, 4));
  EXPECT_EQ(r.eps.bound, Fraction(3, 7));
  EXPECT_TRUE(r.eps.holds);
  EXPECT_EQ(r.rank_one.bound, 3);
  EXPECT_TRUE(r.ss_counterexamples.empty());
  EXPECT_FALSE(r.wall_ms.has_value());

  const json j = r.to_json();
  for (const char* key :
       {"pair_id", "q", "order_G", "order_H", "num_cosets", "num_sigma_fixed", "sigma_fixed_dim",
        "epsilon", "hecke_commutative", "multiplicities", "num_constituents", "num_mult_one",
        "mult_one_fraction", "eps_gelfand_bound", "bound_holds", "semisimple_contingency",
        "timing"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_TRUE(j["timing"].is_null());
  EXPECT_EQ(j["mult_one_fraction"]["num"], 3);
  EXPECT_EQ(j["mult_one_fraction"]["den"], 4);
  EXPECT_EQ(j["semisimple_contingency"]["ss_not_fixed"], 0);

  EXPECT_TRUE(run_pair("gl-torus(1,1)", 3, kDefaultGroupCap, kDefaultCosetCap, true)
                  .wall_ms.has_value());
}

TEST(Report, MultiQTrendAndOrder) {
  RunConfig cfg;
  cfg.qs = {7, 3, 5};
  const auto reports = run_config(cfg);
  ASSERT_EQ(reports.size(), 3u);
  EXPECT_EQ(reports[0].q, 7u);
  EXPECT_EQ(reports[1].q, 3u);
  EXPECT_EQ(reports[2].q, 5u);
  // 3 -> 5 -> 7 is non-decreasing
  EXPECT_LE(reports[1].eps.fraction, reports[2].eps.fraction);
  EXPECT_LE(reports[2].eps.fraction, reports[0].eps.fraction);
}

TEST(Report, CapExceededKeepsCompleted) {
  RunConfig cfg;
  cfg.qs = {3, 13};
  std::vector<PairReport> done;
  EXPECT_THROW(run_config(cfg, &done), CapExceeded);
  ASSERT_EQ(done.size(), 1u);
  EXPECT_EQ(done[0].q, 3u);

  cfg.qs = {3};
  cfg.cap_group = 10;
  EXPECT_THROW(run_config(cfg), CapExceeded);
  cfg.cap_group = kDefaultGroupCap;
  cfg.cap_cosets = 5;
  EXPECT_THROW(run_config(cfg), CapExceeded);
}

TEST(Output, JsonDocumentIsStable) {
  RunConfig cfg;
  cfg.qs = {3, 5};
  const std::string a = reports_to_json(cfg, run_config(cfg));
  const std::string b = reports_to_json(cfg, run_config(cfg));
  EXPECT_EQ(a, b);
  const json doc = json::parse(a);
  EXPECT_EQ(doc["schema_version"], 1);
  EXPECT_TRUE(doc.contains("config"));
  ASSERT_EQ(doc["reports"].size(), 2u);
  EXPECT_EQ(doc["reports"][1]["num_cosets"], 9);
  EXPECT_EQ(doc["config"]["q"], json::array({3, 5}));
}

TEST(Output, Csv) {
  RunConfig cfg;
  cfg.qs = {3};
  const std::string csv = reports_to_csv(run_config(cfg));
  std::istringstream in(csv);
  std::string header, row, extra;
  std::getline(in, header);
  std::getline(in, row);
  EXPECT_FALSE(std::getline(in, extra));
  EXPECT_EQ(header.rfind("pair_id,q,", 0), 0u);
  EXPECT_EQ(row, "\"gl-torus(1,1)\",3,48,4,7,5,6,1/7,false,4,3,3/4,3/7,true");
}

TEST(Cli, PairsList) {
  const auto a = cmd_pairs_list();
  const auto b = cmd_pairs_list();
  ASSERT_EQ(a.size(), b.size());
  ASSERT_FALSE(a.empty());
  bool torus = false, orth = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].id, b[i].id);
    torus = torus || a[i].id.rfind("gl-torus", 0) == 0;
    orth = orth || a[i].id == "gl-orthogonal";
  }
  EXPECT_TRUE(torus);
  EXPECT_TRUE(orth);
}

TEST(Cli, Algebra) {
  const AlgebraSummary two = cmd_algebra(2, 5, 1);
  ASSERT_FALSE(two.trials.empty());
  EXPECT_EQ(two.trials[0].kind, "identity");
  EXPECT_EQ(two.trials[0].fixed_dim, 3u);
  EXPECT_EQ(two.trials[0].cls, AntiInvolutionClass::Symmetric);

  const AlgebraSummary three = cmd_algebra(3, 100, 1);
  EXPECT_LE(three.max_dim, 6u);
  EXPECT_TRUE(three.within_bound);
  EXPECT_TRUE(three.classes_consistent);

  const AlgebraSummary four = cmd_algebra(4, 3, 1);
  bool saw = false;
  for (const AlgebraTrial& t : four.trials) {
    if (t.kind != "symplectic") continue;
    saw = true;
    EXPECT_EQ(t.fixed_dim, 6u);
    EXPECT_EQ(t.cls, AntiInvolutionClass::Skew);
  }
  EXPECT_TRUE(saw);
  EXPECT_EQ(cmd_algebra(4, 3, 1).to_json().dump(), four.to_json().dump());
  EXPECT_THROW(cmd_algebra(1, 3, 1), std::invalid_argument);
}

}  // namespace
}  // namespace gelfand
