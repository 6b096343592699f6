// Command-line driver: pairs | run | verify | algebra

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gelfand/errors.hpp"
#include "gelfand/pipeline.hpp"
#include "gelfand/verify.hpp"

namespace {

enum ExitCode { kOk = 0, kBadConfig = 2, kCapExceeded = 3, kVerifyFailed = 4, kInternal = 5 };

std::vector<std::uint32_t> parse_q_list(const std::string& text) {
  std::vector<std::uint32_t> qs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const unsigned long v = std::stoul(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad q entry '" + item + "'");
    qs.push_back(static_cast<std::uint32_t>(v));
  }
  if (qs.empty()) throw std::invalid_argument("empty --q list");
  return qs;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
}

std::string render(const gelfand::RunConfig& cfg,
                   const std::vector<gelfand::PairReport>& reports) {
  return cfg.format == gelfand::OutputFormat::Json ? gelfand::reports_to_json(cfg, reports)
                                                   : gelfand::reports_to_csv(reports);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exhaustive double-coset and multiplicity experiments for symmetric pairs over "
               "finite fields"};
  app.require_subcommand(1);

  auto* pairs = app.add_subcommand("pairs", "List catalog pair identifiers");

  auto* run = app.add_subcommand("run", "Run the full pipeline for one pair and a list of q");
  std::string pair, q_text, out, format, config;
  std::uint64_t seed = 1;
  std::size_t cap_group = 0, cap_cosets = 0;
  bool timing = false;
  auto* o_pair = run->add_option("--pair", pair, "Pair id, e.g. gl-torus(1,1)");
  auto* o_q = run->add_option("--q", q_text, "Comma-separated odd prime powers");
  auto* o_out = run->add_option("--out", out, "Output path (default stdout)");
  auto* o_format = run->add_option("--format", format, "json | csv")
                       ->check(CLI::IsMember({"json", "csv"}));
  auto* o_seed = run->add_option("--seed", seed, "Seed");
  auto* o_cap_g = run->add_option("--cap-group", cap_group, "Maximum group size");
  auto* o_cap_z = run->add_option("--cap-cosets", cap_cosets, "Maximum number of double cosets");
  run->add_option("--config", config, "JSON config file; flags take precedence");
  auto* o_timing = run->add_flag("--timing", timing, "Record wall-clock time in reports");

  auto* verify = app.add_subcommand("verify", "Run the reproduction suite");
  std::string verify_out;
  std::uint64_t verify_seed = 1;
  std::size_t verify_cap_g = gelfand::kDefaultGroupCap, verify_cap_z = gelfand::kDefaultCosetCap;
  verify->add_option("--out", verify_out, "Write the JSON report here");
  verify->add_option("--seed", verify_seed, "Seed for the random matrix trials");
  verify->add_option("--cap-group", verify_cap_g, "Maximum group size");
  verify->add_option("--cap-cosets", verify_cap_z, "Maximum number of double cosets");

  auto* algebra = app.add_subcommand("algebra", "Fixed-space dimensions of anti-involutions");
  std::uint32_t alg_n = 2;
  std::size_t alg_trials = 10;
  std::uint64_t alg_seed = 1;
  std::string alg_out;
  algebra->add_option("--n", alg_n, "Matrix size (>= 2)");
  algebra->add_option("--trials", alg_trials, "Random trials per family");
  algebra->add_option("--seed", alg_seed, "Seed");
  algebra->add_option("--out", alg_out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kBadConfig;
  }

  gelfand::RunConfig cfg;
  std::vector<gelfand::PairReport> completed;
  try {
    if (*pairs) {
      for (const auto& e : gelfand::cmd_pairs_list()) {
        std::cout << e.id << "\t" << (e.connectedness_trusted ? "trusted" : "untrusted") << "\t"
                  << e.description << "\n";
      }
      return kOk;
    }

    if (*algebra) {
      const gelfand::AlgebraSummary s = gelfand::cmd_algebra(alg_n, alg_trials, alg_seed);
      write_output(alg_out, s.to_json().dump(2) + "\n");
      return kOk;
    }

    if (*verify) {
      const gelfand::VerifyResult r =
          gelfand::cmd_verify_suite(verify_seed, verify_cap_g, verify_cap_z);
      std::cout << gelfand::format_criteria(r.criteria);
      if (!verify_out.empty()) write_output(verify_out, r.document);
      return r.all_pass() ? kOk : kVerifyFailed;
    }

    if (!config.empty()) cfg = gelfand::load_run_config(config);
    if (o_pair->count()) cfg.pair = pair;
    if (o_q->count()) cfg.qs = parse_q_list(q_text);
    if (o_out->count()) cfg.out = out;
    if (o_format->count()) {
      cfg.format = format == "csv" ? gelfand::OutputFormat::Csv : gelfand::OutputFormat::Json;
    }
    if (o_seed->count()) cfg.seed = seed;
    if (o_cap_g->count()) cfg.cap_group = cap_group;
    if (o_cap_z->count()) cfg.cap_cosets = cap_cosets;
    if (o_timing->count()) cfg.timing = timing;

    const auto reports = gelfand::run_config(cfg, &completed);
    write_output(cfg.out, render(cfg, reports));
    return kOk;
  } catch (const gelfand::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    if (!completed.empty()) write_output(cfg.out, render(cfg, completed));
    return kCapExceeded;
  } catch (const gelfand::InvariantViolation& e) {
    std::cerr << "internal assertion: " << e.what() << "\n";
    if (!completed.empty()) write_output(cfg.out, render(cfg, completed));
    return kInternal;
  } catch (const std::invalid_argument& e) {
    std::cerr << "bad config: " << e.what() << "\n";
    return kBadConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
}
