#include "gelfand/verify.hpp"

#include <sstream>

namespace gelfand {

using nlohmann::json;

namespace {

constexpr std::uint32_t kTorusQs[] = {3, 5, 7};
constexpr std::uint32_t kTrendQs[] = {3, 5, 7, 9};

const PairReport* find_report(const std::vector<PairReport>& reports, const std::string& id,
                              std::uint32_t q) {
  for (const PairReport& r : reports) {
    if (r.pair_id == id && r.q == q) return &r;
  }
  return nullptr;
}

std::string tag(const PairReport& r) { return r.pair_id + "@q=" + std::to_string(r.q); }

std::vector<PairReport> run_instances(std::size_t cap_group, std::size_t cap_cosets) {
  std::vector<PairReport> reports;
  for (const auto& [id, q] : verify_instances()) {
    reports.push_back(run_pair(id, q, cap_group, cap_cosets, false));
  }
  return reports;
}

std::string render_document(std::uint64_t seed, std::size_t cap_group, std::size_t cap_cosets,
                            const std::vector<PairReport>& reports,
                            const std::vector<CriterionResult>& criteria) {
  json arr = json::array();
  for (const PairReport& r : reports) arr.push_back(r.to_json());
  json crit = json::array();
  for (const CriterionResult& c : criteria) {
    crit.push_back({{"id", c.id},
                    {"name", c.name},
                    {"claim", c.claim},
                    {"measured", c.measured},
                    {"pass", c.pass}});
  }
  json cfg{{"suite", true}, {"seed", seed}, {"cap_group", cap_group}, {"cap_cosets", cap_cosets}};
  return json{{"schema_version", kSchemaVersion},
              {"config", cfg},
              {"reports", arr},
              {"criteria", crit}}
             .dump(2) +
         "\n";
}

// Criteria 1-9; criterion 10 compares two full renderings.
std::vector<CriterionResult> evaluate(const std::vector<PairReport>& reports, std::uint64_t seed) {
  std::vector<CriterionResult> out;
  const std::string torus = "gl-torus(1,1)";

  {
    CriterionResult c{1, "torus double coset counts", "|Z| = q+4, |Z^sigma| = q+2 for q in {3,5,7}",
                      "", true};
    std::ostringstream m;
    for (std::uint32_t q : kTorusQs) {
      const PairReport* r = find_report(reports, torus, q);
      if (!r) {
        c.pass = false;
        m << "q=" << q << ": missing; ";
        continue;
      }
      m << "q=" << q << ": |Z|=" << r->num_cosets << " |Z^s|=" << r->num_sigma_fixed << "; ";
      c.pass = c.pass && r->num_cosets == q + 4 && r->num_sigma_fixed == q + 2;
    }
    c.measured = m.str();
    out.push_back(c);
  }

  {
    CriterionResult c{2, "Steinberg multiplicity",
                      "one constituent with m = 2 of degree q, all others m = 1, sum m^2 = q+4", "",
                      true};
    std::ostringstream m;
    for (std::uint32_t q : kTorusQs) {
      const PairReport* r = find_report(reports, torus, q);
      if (!r) {
        c.pass = false;
        continue;
      }
      std::size_t twos = 0, bad = 0;
      std::uint64_t two_degree = 0;
      for (const Multiplicity& mu : r->multiplicities) {
        if (mu.mult == 2) {
          ++twos;
          two_degree = mu.degree;
        } else if (mu.mult > 2) {
          ++bad;
        }
      }
      m << "q=" << q << ": #m2=" << twos << " deg=" << two_degree << " sum_m2=" << r->sum_m_sq
        << "; ";
      c.pass = c.pass && twos == 1 && bad == 0 && two_degree == q && r->sum_m_sq == q + 4;
    }
    c.measured = m.str();
    out.push_back(c);
  }

  {
    CriterionResult c{3, "non-Gelfand detection",
                      "torus Hecke non-commutative; commutative <=> all m <= 1 on every instance",
                      "", true};
    std::ostringstream m;
    for (std::uint32_t q : kTorusQs) {
      const PairReport* r = find_report(reports, torus, q);
      c.pass = c.pass && r && !r->hecke_commutative;
    }
    std::size_t agree = 0;
    for (const PairReport& r : reports) {
      bool mult_free = true;
      for (const Multiplicity& mu : r.multiplicities) mult_free = mult_free && mu.mult <= 1;
      if (mult_free == r.hecke_commutative) {
        ++agree;
      } else {
        c.pass = false;
        m << "disagree at " << tag(r) << "; ";
      }
    }
    m << agree << "/" << reports.size() << " instances agree";
    c.measured = m.str();
    out.push_back(c);
  }

  {
    CriterionResult c{4, "epsilon-Gelfand bound",
                      "num_mult_one/num_constituents >= 1 - 4 eps on every instance", "", true};
    std::ostringstream m;
    for (const PairReport& r : reports) {
      c.pass = c.pass && r.eps.holds;
      if (!r.eps.holds) m << "fails at " << tag(r) << "; ";
    }
    if (const PairReport* r = find_report(reports, torus, 3)) {
      m << "torus q=3: " << r->eps.fraction << " >= " << r->eps.bound;
      c.pass = c.pass && r->eps.fraction == Fraction(3, 4) && r->eps.bound == Fraction(3, 7);
    } else {
      c.pass = false;
    }
    c.measured = m.str();
    out.push_back(c);
  }

  {
    CriterionResult c{5, "Hecke/permutation identities",
                      "sum m^2 = |Z| and sum m d = [G:H] on every instance", "", true};
    std::size_t ok = 0;
    for (const PairReport& r : reports) {
      const bool good = r.sum_m_sq == r.num_cosets && r.sum_m_deg == r.index();
      ok += good;
      c.pass = c.pass && good;
    }
    c.measured = std::to_string(ok) + "/" + std::to_string(reports.size()) + " instances";
    out.push_back(c);
  }

  {
    CriterionResult c{6, "matrix-algebra fixed dimensions",
                      "dim <= n(n+1)/2 for 50 random g; symmetric -> n(n+1)/2; skew -> n(n-1)/2; "
                      "n = 2..6",
                      "", true};
    std::ostringstream m;
    for (std::uint32_t n = 2; n <= 6; ++n) {
      const AlgebraSummary s = cmd_algebra(n, 50, seed + n);
      c.pass = c.pass && s.within_bound && s.classes_consistent;
      m << "n=" << n << ": max " << s.max_dim << "/" << n * (n + 1) / 2 << "; ";
    }
    c.measured = m.str();
    out.push_back(c);
  }

  {
    CriterionResult c{7, "rank-one block bound on Hecke profiles",
                      "#{n_i = 1} >= (1 - 4 eps) dim A on every instance; tight for torus q=3", "",
                      true};
    std::ostringstream m;
    for (const PairReport& r : reports) {
      c.pass = c.pass && r.rank_one.holds;
      if (!r.rank_one.holds) m << "fails at " << tag(r) << "; ";
    }
    if (const PairReport* r = find_report(reports, torus, 3)) {
      m << "torus q=3: " << r->rank_one.rank_one << " >= " << r->rank_one.bound;
      c.pass = c.pass && r->rank_one.bound == 3 && r->rank_one.rank_one == 3;
    } else {
      c.pass = false;
    }
    c.measured = m.str();
    out.push_back(c);
  }

  {
    CriterionResult c{8, "semisimple symmetrization implies sigma-fixed",
                      "no coset with semisimple s(g) is moved by sigma (torus, q in {3,5,7})", "",
                      true};
    std::ostringstream m;
    for (std::uint32_t q : kTorusQs) {
      const PairReport* r = find_report(reports, torus, q);
      if (!r) {
        c.pass = false;
        continue;
      }
      m << "q=" << q << ": " << r->ss_counterexamples.size() << " counterexamples; ";
      c.pass = c.pass && r->ss_counterexamples.empty();
    }
    c.measured = m.str();
    out.push_back(c);
  }

  {
    CriterionResult c{9, "multiplicity-one trend",
                      "torus mult_one_fraction non-decreasing over q in {3,5,7,9} and >= 1 - "
                      "4/(q+4)",
                      "", true};
    std::ostringstream m;
    Fraction prev(0);
    for (std::uint32_t q : kTrendQs) {
      const PairReport* r = find_report(reports, torus, q);
      if (!r) {
        c.pass = false;
        continue;
      }
      const Fraction f = r->eps.fraction;
      const Fraction floor = Fraction(1) - Fraction(4, static_cast<std::int64_t>(q) + 4);
      m << "q=" << q << ": " << f << "; ";
      c.pass = c.pass && f >= prev && f >= floor;
      prev = f;
    }
    c.measured = m.str();
    out.push_back(c);
  }
  return out;
}

}  // namespace

bool VerifyResult::all_pass() const {
  for (const CriterionResult& c : criteria) {
    if (!c.pass) return false;
  }
  return true;
}

const std::vector<std::pair<std::string, std::uint32_t>>& verify_instances() {
  static const std::vector<std::pair<std::string, std::uint32_t>> instances = {
      {"gl-torus(1,1)", 3},  {"gl-torus(1,1)", 5},    {"gl-torus(1,1)", 7},
      {"gl-torus(1,1)", 9},  {"gl-torus(1,1)", 11},   {"gl-torus(2,1)", 3},
      {"gl-orthogonal", 3},  {"gl-orthogonal", 5},    {"gl-orthogonal", 7},
      {"gl-orthogonal(3)", 3}, {"gl-symplectic", 3},  {"gl-symplectic", 5},
      {"gl-symplectic", 7},  {"gl-galois", 3},
  };
  return instances;
}

VerifyResult cmd_verify_suite(std::uint64_t seed, std::size_t cap_group, std::size_t cap_cosets) {
  VerifyResult result;
  result.reports = run_instances(cap_group, cap_cosets);
  result.criteria = evaluate(result.reports, seed);
  result.document = render_document(seed, cap_group, cap_cosets, result.reports, result.criteria);

  const std::vector<PairReport> again = run_instances(cap_group, cap_cosets);
  const std::string second =
      render_document(seed, cap_group, cap_cosets, again, evaluate(again, seed));
  CriterionResult c{10, "determinism", "two consecutive runs render byte-identical reports",
                    second == result.document ? "identical" : "differ",
                    second == result.document};
  result.criteria.push_back(c);
  // Final document carries criterion 10 as well.
  result.document = render_document(seed, cap_group, cap_cosets, result.reports, result.criteria);
  return result;
}

std::string format_criteria(const std::vector<CriterionResult>& criteria) {
  std::ostringstream out;
  for (const CriterionResult& c : criteria) {
    out << (c.pass ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.name << "\n"
        << "      claim:    " << c.claim << "\n"
        << "      measured: " << c.measured << "\n";
  }
  return out.str();
}

}  // namespace gelfand
