#include "gelfand/pipeline.hpp"

#include <chrono>
#include <exception>
#include <fstream>
#include <future>
#include <sstream>
#include <stdexcept>

#include "gelfand/errors.hpp"

namespace gelfand {

using nlohmann::json;

namespace {

json fraction_json(const Fraction& f) {
  return json{{"num", f.numerator()},
              {"den", f.denominator()},
              {"value", static_cast<double>(f.numerator()) / static_cast<double>(f.denominator())}};
}

std::string fraction_text(const Fraction& f) {
  return std::to_string(f.numerator()) + "/" + std::to_string(f.denominator());
}

const char* format_name(OutputFormat f) { return f == OutputFormat::Json ? "json" : "csv"; }

}  // namespace

void RunConfig::validate() const {
  parse_pair_id(pair);
  if (qs.empty()) throw std::invalid_argument("no field orders given");
  for (std::uint32_t q : qs) {
    const FieldSpec spec = ff_make_order(q);
    if (spec.p == 2) throw std::invalid_argument("q = " + std::to_string(q) + " is even");
  }
  if (cap_group == 0 || cap_cosets == 0) throw std::invalid_argument("caps must be positive");
}

json RunConfig::to_json() const {
  return json{{"pair", pair},
              {"q", qs},
              {"cap_group", cap_group},
              {"cap_cosets", cap_cosets},
              {"format", format_name(format)},
              {"seed", seed}};
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file " + path);
  RunConfig cfg;
  try {
    const json j = json::parse(in);
    if (j.contains("pair")) cfg.pair = j.at("pair").get<std::string>();
    if (j.contains("q")) cfg.qs = j.at("q").get<std::vector<std::uint32_t>>();
    if (j.contains("out")) cfg.out = j.at("out").get<std::string>();
    if (j.contains("format")) {
      const auto f = j.at("format").get<std::string>();
      if (f == "json") {
        cfg.format = OutputFormat::Json;
      } else if (f == "csv") {
        cfg.format = OutputFormat::Csv;
      } else {
        throw std::invalid_argument("unknown format " + f);
      }
    }
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("cap_group")) cfg.cap_group = j.at("cap_group").get<std::size_t>();
    if (j.contains("cap_cosets")) cfg.cap_cosets = j.at("cap_cosets").get<std::size_t>();
    if (j.contains("timing")) cfg.timing = j.at("timing").get<bool>();
  } catch (const json::exception& e) {
    throw std::invalid_argument("malformed config " + path + ": " + e.what());
  }
  return cfg;
}

json PairReport::to_json() const {
  json mults = json::array();
  for (const Multiplicity& m : multiplicities) {
    mults.push_back({{"irrep", m.irrep}, {"degree", m.degree}, {"mult", m.mult}});
  }
  json j{
      {"pair_id", pair_id},
      {"q", q},
      {"connectedness_trusted", connectedness_trusted},
      {"order_G", order_G},
      {"order_H", order_H},
      {"num_cosets", num_cosets},
      {"num_sigma_fixed", num_sigma_fixed},
      {"sigma_fixed_dim", sigma_fixed_dim},
      {"epsilon", fraction_json(eps.epsilon)},
      {"hecke_commutative", hecke_commutative},
      {"char_modulus", char_modulus},
      {"multiplicities", mults},
      {"num_constituents", num_constituents},
      {"num_mult_one", num_mult_one},
      {"sum_m_sq", sum_m_sq},
      {"mult_one_fraction", fraction_json(eps.fraction)},
      {"eps_gelfand_bound", fraction_json(eps.bound)},
      {"bound_holds", eps.holds},
      {"rank_one_bound",
       {{"bound", rank_one.bound}, {"rank_one", rank_one.rank_one}, {"holds", rank_one.holds}}},
      {"semisimple_contingency",
       {{"ss_fixed", contingency[1][1]},
        {"ss_not_fixed", contingency[1][0]},
        {"not_ss_fixed", contingency[0][1]},
        {"not_ss_not_fixed", contingency[0][0]},
        {"counterexamples", ss_counterexamples}}},
  };
  j["timing"] = wall_ms ? json{{"wall_ms", *wall_ms}} : json(nullptr);
  return j;
}

PairReport run_pair(const std::string& pair_id, std::uint32_t q, std::size_t cap_group,
                    std::size_t cap_cosets, bool timing) {
  const auto start = std::chrono::steady_clock::now();
  const PairId id = parse_pair_id(pair_id);
  const SymPair pair = build_catalog_pair(id, q, cap_group);

  const DoubleCosetPartition part = enumerate_double_cosets(pair);
  const SigmaOnZ z = sigma_on_cosets(pair, part);
  const HeckeAlgebra hecke = hecke_structure(pair, part, cap_cosets);
  const SemisimpleCosetReport ss = semisimple_coset_report(pair, part, z);

  const ClassData cd = class_data(*pair.G);
  const CharacterTable table = dixon_table(*pair.G, cd);
  const MultiplicityReport mults = multiplicities(table, permutation_character(pair, cd));
  const SemisimpleProfile profile = hecke_profile(mults, z);

  PairReport r;
  r.pair_id = pair.id;
  r.q = q;
  r.connectedness_trusted = pair.connectedness_trusted;
  r.order_G = pair.G->order();
  r.order_H = pair.H->order();
  r.num_cosets = part.count();
  r.num_sigma_fixed = z.fixed_count;
  r.sigma_fixed_dim = sigma_fixed_dim(z);
  r.hecke_commutative = is_commutative(hecke);
  r.char_modulus = table.modulus;
  r.multiplicities = mults.mults;
  r.num_constituents = mults.num_constituents;
  r.num_mult_one = mults.num_mult_one;
  r.sum_m_sq = mults.sum_m_sq;
  r.sum_m_deg = mults.sum_m_deg;
  r.eps = eps_gelfand_check(mults, z);
  r.rank_one = rank_one_lower_bound(profile);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) r.contingency[a][b] = ss.contingency[a][b];
  r.ss_counterexamples = ss.counterexamples;
  if (timing) {
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                    .count();
  }
  return r;
}

std::vector<PairReport> run_config(const RunConfig& cfg, std::vector<PairReport>* completed) {
  cfg.validate();
  std::vector<std::future<PairReport>> jobs;
  jobs.reserve(cfg.qs.size());
  for (std::uint32_t q : cfg.qs) {
    jobs.push_back(std::async(std::launch::async, run_pair, cfg.pair, q, cfg.cap_group,
                              cfg.cap_cosets, cfg.timing));
  }
  std::vector<PairReport> reports;
  std::exception_ptr failure;
  for (auto& job : jobs) {
    try {
      if (!failure) {
        reports.push_back(job.get());
      } else {
        job.wait();
      }
    } catch (...) {
      failure = std::current_exception();
    }
  }
  if (completed) *completed = reports;
  if (failure) std::rethrow_exception(failure);
  return reports;
}

json reports_document(const RunConfig& cfg, const std::vector<PairReport>& reports) {
  json arr = json::array();
  for (const PairReport& r : reports) arr.push_back(r.to_json());
  return json{{"schema_version", kSchemaVersion}, {"config", cfg.to_json()}, {"reports", arr}};
}

std::string reports_to_json(const RunConfig& cfg, const std::vector<PairReport>& reports) {
  return reports_document(cfg, reports).dump(2) + "\n";
}

std::string reports_to_csv(const std::vector<PairReport>& reports) {
  std::ostringstream out;
  out << "pair_id,q,order_G,order_H,num_cosets,num_sigma_fixed,sigma_fixed_dim,epsilon,"
         "hecke_commutative,num_constituents,num_mult_one,mult_one_fraction,"
         "eps_gelfand_bound,bound_holds\n";
  for (const PairReport& r : reports) {
    out << '"' << r.pair_id << '"' << ',' << r.q << ',' << r.order_G << ',' << r.order_H << ','
        << r.num_cosets << ',' << r.num_sigma_fixed << ',' << r.sigma_fixed_dim << ','
        << fraction_text(r.eps.epsilon) << ',' << (r.hecke_commutative ? "true" : "false") << ','
        << r.num_constituents << ',' << r.num_mult_one << ',' << fraction_text(r.eps.fraction)
        << ',' << fraction_text(r.eps.bound) << ',' << (r.eps.holds ? "true" : "false") << '\n';
  }
  return out.str();
}

std::vector<CatalogListing> cmd_pairs_list() {
  std::vector<CatalogListing> out;
  for (const CatalogEntry& e : pair_catalog()) {
    out.push_back({e.id, e.description, e.connectedness_trusted});
  }
  return out;
}

json AlgebraSummary::to_json() const {
  json arr = json::array();
  for (const AlgebraTrial& t : trials) {
    arr.push_back({{"trial", t.trial},
                   {"kind", t.kind},
                   {"fixed_dim", t.fixed_dim},
                   {"class", gelfand::to_string(t.cls)}});
  }
  return json{{"n", n},
              {"trials", arr},
              {"min_dim", min_dim},
              {"max_dim", max_dim},
              {"within_bound", within_bound},
              {"classes_consistent", classes_consistent}};
}

AlgebraSummary cmd_algebra(std::uint32_t n, std::size_t trials, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("algebra: n must be >= 2");
  AlgebraSummary s;
  s.n = n;
  std::mt19937_64 rng(seed);
  std::vector<std::pair<std::string, RationalMatrix>> inputs;
  inputs.emplace_back("identity", RationalMatrix::identity(n));
  if (n % 2 == 0) {
    RationalMatrix J(n);
    for (std::uint32_t i = 0; i < n / 2; ++i) {
      J(i, n / 2 + i) = 1;
      J(n / 2 + i, i) = -1;
    }
    inputs.emplace_back("symplectic", J);
  }
  for (std::size_t t = 0; t < trials; ++t) inputs.emplace_back("random", random_invertible(n, rng));
  for (std::size_t t = 0; t < trials; ++t) {
    inputs.emplace_back("symmetric", random_symmetric_invertible(n, rng));
  }
  if (n % 2 == 0) {
    for (std::size_t t = 0; t < trials; ++t) inputs.emplace_back("skew", random_skew_invertible(n, rng));
  }
  const std::size_t sym_dim = std::size_t(n) * (n + 1) / 2;
  const std::size_t skew_dim = std::size_t(n) * (n - 1) / 2;
  s.min_dim = std::size_t(n) * n;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    AlgebraTrial t;
    t.trial = i;
    t.kind = inputs[i].first;
    t.fixed_dim = fixed_space_dim(inputs[i].second);
    t.cls = classify_anti_involution(inputs[i].second);
    s.min_dim = std::min(s.min_dim, t.fixed_dim);
    s.max_dim = std::max(s.max_dim, t.fixed_dim);
    if (t.fixed_dim > sym_dim) s.within_bound = false;
    if (t.cls == AntiInvolutionClass::Symmetric && t.fixed_dim != sym_dim) {
      s.classes_consistent = false;
    }
    if (t.cls == AntiInvolutionClass::Skew && t.fixed_dim != skew_dim) {
      s.classes_consistent = false;
    }
    s.trials.push_back(std::move(t));
  }
  return s;
}

}  // namespace gelfand
