#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "gelfand/pipeline.hpp"

namespace gelfand {

struct CriterionResult {
  int id = 0;
  std::string name;
  std::string claim;
  std::string measured;
  bool pass = false;
};

struct VerifyResult {
  std::vector<CriterionResult> criteria;
  std::vector<PairReport> reports;
  std::string document;  // JSON, byte-stable for fixed inputs

  bool all_pass() const;
};

// (pair id, q) instances the suite runs the full pipeline on.
const std::vector<std::pair<std::string, std::uint32_t>>& verify_instances();

// Runs every reproduction criterion. The pipeline is evaluated twice to
// check that the report document is byte-identical.
VerifyResult cmd_verify_suite(std::uint64_t seed = 1,
                              std::size_t cap_group = kDefaultGroupCap,
                              std::size_t cap_cosets = kDefaultCosetCap);

// Plain-text table of claim vs measured.
std::string format_criteria(const std::vector<CriterionResult>& criteria);

}  // namespace gelfand
