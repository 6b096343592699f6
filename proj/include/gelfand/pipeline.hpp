#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gelfand/algebra.hpp"
#include "gelfand/chartab.hpp"
#include "gelfand/cosets.hpp"
#include "gelfand/sympair.hpp"

namespace gelfand {

inline constexpr int kSchemaVersion = 1;

enum class OutputFormat { Json, Csv };

struct RunConfig {
  std::string pair = "gl-torus(1,1)";
  std::vector<std::uint32_t> qs = {3};
  std::size_t cap_group = kDefaultGroupCap;
  std::size_t cap_cosets = kDefaultCosetCap;
  std::string out;  // empty: stdout
  OutputFormat format = OutputFormat::Json;
  std::uint64_t seed = 1;
  bool suite = false;
  bool timing = false;

  // Throws std::invalid_argument on even q, non prime powers or zero caps.
  void validate() const;
  nlohmann::json to_json() const;
};

// Reads the keys pair, q, out, format, seed, cap_group, cap_cosets, timing.
// Throws std::invalid_argument on malformed content.
RunConfig load_run_config(const std::string& path);

struct PairReport {
  std::string pair_id;
  std::uint32_t q = 0;
  bool connectedness_trusted = false;
  std::uint64_t order_G = 0;
  std::uint64_t order_H = 0;
  std::uint64_t num_cosets = 0;       // |Z|
  std::uint64_t num_sigma_fixed = 0;  // |Z^sigma|
  std::uint64_t sigma_fixed_dim = 0;  // dim C[Z]^sigma
  bool hecke_commutative = false;
  std::uint64_t char_modulus = 0;
  std::vector<Multiplicity> multiplicities;
  std::uint64_t num_constituents = 0;
  std::uint64_t num_mult_one = 0;
  std::uint64_t sum_m_sq = 0;
  std::uint64_t sum_m_deg = 0;
  EpsGelfandCheck eps;
  RankOneBound rank_one;
  std::size_t contingency[2][2] = {{0, 0}, {0, 0}};  // [any_ss][sigma_fixed]
  std::vector<std::uint32_t> ss_counterexamples;
  std::optional<double> wall_ms;

  std::uint64_t index() const { return order_G / order_H; }
  nlohmann::json to_json() const;
};

// Full pipeline for one (pair, q). Throws CapExceeded, std::invalid_argument
// (bad pair or q) or InvariantViolation.
PairReport run_pair(const std::string& pair_id, std::uint32_t q, std::size_t cap_group,
                    std::size_t cap_cosets, bool timing = false);

// One report per q in config order; independent runs go to a worker pool.
// On failure, reports completed before the failing q are returned through
// `completed` and the exception is rethrown.
std::vector<PairReport> run_config(const RunConfig& cfg,
                                   std::vector<PairReport>* completed = nullptr);

nlohmann::json reports_document(const RunConfig& cfg, const std::vector<PairReport>& reports);
std::string reports_to_json(const RunConfig& cfg, const std::vector<PairReport>& reports);
// Flat projection of scalar fields, one row per report.
std::string reports_to_csv(const std::vector<PairReport>& reports);

struct CatalogListing {
  std::string id;
  std::string description;
  bool connectedness_trusted;
};
std::vector<CatalogListing> cmd_pairs_list();

struct AlgebraTrial {
  std::size_t trial = 0;
  std::string kind;  // random | symmetric | skew | identity | symplectic
  std::size_t fixed_dim = 0;
  AntiInvolutionClass cls = AntiInvolutionClass::NotInvolution;
};

struct AlgebraSummary {
  std::uint32_t n = 0;
  std::vector<AlgebraTrial> trials;
  std::size_t min_dim = 0;
  std::size_t max_dim = 0;
  bool within_bound = true;       // every dim <= n(n+1)/2
  bool classes_consistent = true;  // symmetric -> n(n+1)/2, skew -> n(n-1)/2

  nlohmann::json to_json() const;
};

// Identity (and the standard symplectic form for even n) followed by
// `trials` seeded random invertible g, then as many seeded symmetric and
// (for even n) skew ones. Throws std::invalid_argument for n < 2.
AlgebraSummary cmd_algebra(std::uint32_t n, std::size_t trials, std::uint64_t seed);

}  // namespace gelfand
