#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include "gelfand/chartab.hpp"
#include "gelfand/cosets.hpp"

namespace gelfand {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
// Small exact ratios for the dimension bounds.
using Fraction = boost::rational<std::int64_t>;

class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(std::uint32_t n) : n_(n), e_(std::size_t(n) * n) {}
  static RationalMatrix from_ints(std::uint32_t n, const std::vector<std::int64_t>& rows);
  static RationalMatrix identity(std::uint32_t n);

  std::uint32_t dim() const { return n_; }
  Rational& operator()(std::uint32_t i, std::uint32_t j) { return e_[std::size_t(i) * n_ + j]; }
  const Rational& operator()(std::uint32_t i, std::uint32_t j) const {
    return e_[std::size_t(i) * n_ + j];
  }

  RationalMatrix transpose() const;
  RationalMatrix operator*(const RationalMatrix& o) const;
  RationalMatrix operator-() const;
  bool operator==(const RationalMatrix& o) const = default;

 private:
  std::uint32_t n_ = 0;
  std::vector<Rational> e_;
};

// Throws SingularMatrix.
RationalMatrix rational_inverse(const RationalMatrix& a);
bool is_invertible(const RationalMatrix& a);
// Fraction-free (Bareiss) rank of an integer matrix.
std::size_t integer_rank(std::vector<std::vector<BigInt>> rows);

// sigma(A) = g A^T g^-1 on M_n.
struct AntiInvolutionData {
  RationalMatrix g;
  std::uint32_t n() const { return g.dim(); }
  RationalMatrix apply(const RationalMatrix& a) const;
};

// dim {X : h^T X = h X^T} with h = g^-1, which equals dim M^sigma.
// Throws SingularMatrix for singular g.
std::size_t fixed_space_dim(const RationalMatrix& g);

enum class AntiInvolutionClass { Symmetric, Skew, NotInvolution };
const char* to_string(AntiInvolutionClass c);

AntiInvolutionClass classify_anti_involution(const RationalMatrix& g);

// Seeded generators; entries are integers in [-9, 9], retried until the
// matrix is invertible.
RationalMatrix random_invertible(std::uint32_t n, std::mt19937_64& rng);
RationalMatrix random_symmetric_invertible(std::uint32_t n, std::mt19937_64& rng);
// n must be even.
RationalMatrix random_skew_invertible(std::uint32_t n, std::mt19937_64& rng);

struct SemisimpleProfile {
  std::vector<std::uint64_t> blocks;  // ranks n_i
  std::uint64_t dimA = 0;             // sum n_i^2
  std::uint64_t fixed_dim = 0;        // dim A^sigma

  static SemisimpleProfile make(std::vector<std::uint64_t> blocks, std::uint64_t fixed_dim);
  std::uint64_t rank_one_count() const;
};

struct RankOneBound {
  Fraction epsilon;        // codim / dimA
  std::int64_t bound = 0;  // ceil((1 - 4 eps) dimA), clipped at 0
  std::uint64_t rank_one = 0;
  bool holds = false;
};

// #{n_i = 1} >= (1 - 4 eps) dim A with eps = codim A^sigma / dim A.
RankOneBound rank_one_lower_bound(const SemisimpleProfile& p);

struct RankKBound {
  bool applicable = false;  // fixed_dim / dimA >= 1/4
  Fraction epsilon;         // fixed_dim / dimA
  Fraction bound;
  std::uint64_t high_rank_dim = 0;  // sum_{n_i >= k} n_i^2
  bool holds = false;
};

// sum_{n_i >= k} n_i^2 <= (eps - 1/4) / (1/4 - 1/(2k)) dim A, eps = fixed/dim.
// Throws std::invalid_argument for k <= 2.
RankKBound rank_k_upper_bound(const SemisimpleProfile& p, std::uint32_t k);

// Blocks are the positive multiplicities; fixed_dim is dim C[Z]^sigma.
// Throws InvariantViolation when sum m^2 != |Z|.
SemisimpleProfile hecke_profile(const MultiplicityReport& mults, const SigmaOnZ& z);

struct EpsGelfandCheck {
  Fraction epsilon;   // codim C[Z]^sigma / |Z|
  Fraction bound;     // 1 - 4 eps
  Fraction fraction;  // num_mult_one / num_constituents
  bool holds = false;
};

EpsGelfandCheck eps_gelfand_check(const MultiplicityReport& mults, const SigmaOnZ& z);

}  // namespace gelfand
