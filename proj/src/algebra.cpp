#include "gelfand/algebra.hpp"

#include <stdexcept>
#include <utility>

#include "gelfand/errors.hpp"

namespace gelfand {

namespace mp = boost::multiprecision;

RationalMatrix RationalMatrix::from_ints(std::uint32_t n,
                                         const std::vector<std::int64_t>& rows) {
  if (rows.size() != std::size_t(n) * n) {
    throw std::invalid_argument("RationalMatrix::from_ints: expected n*n entries");
  }
  RationalMatrix m(n);
  for (std::size_t i = 0; i < rows.size(); ++i) m.e_[i] = rows[i];
  return m;
}

RationalMatrix RationalMatrix::identity(std::uint32_t n) {
  RationalMatrix m(n);
  for (std::uint32_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(n_);
  for (std::uint32_t i = 0; i < n_; ++i)
    for (std::uint32_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  if (o.n_ != n_) throw std::invalid_argument("RationalMatrix: dimension mismatch");
  RationalMatrix r(n_);
  for (std::uint32_t i = 0; i < n_; ++i)
    for (std::uint32_t k = 0; k < n_; ++k) {
      if ((*this)(i, k) == 0) continue;
      for (std::uint32_t j = 0; j < n_; ++j) r(i, j) += (*this)(i, k) * o(k, j);
    }
  return r;
}

RationalMatrix RationalMatrix::operator-() const {
  RationalMatrix r = *this;
  for (Rational& x : r.e_) x = -x;
  return r;
}

RationalMatrix rational_inverse(const RationalMatrix& in) {
  const std::uint32_t n = in.dim();
  RationalMatrix a = in;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::uint32_t col = 0; col < n; ++col) {
    std::uint32_t piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) throw SingularMatrix("rational_inverse: singular matrix");
    if (piv != col) {
      for (std::uint32_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    }
    const Rational s = 1 / a(col, col);
    for (std::uint32_t j = 0; j < n; ++j) {
      a(col, j) *= s;
      inv(col, j) *= s;
    }
    for (std::uint32_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      const Rational f = a(r, col);
      for (std::uint32_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

std::size_t integer_rank(std::vector<std::vector<BigInt>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        BigInt num = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        GELFAND_CHECK(num % prev == 0, "Bareiss division is not exact");
        m[i][j] = num / prev;
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

bool is_invertible(const RationalMatrix& a) {
  try {
    rational_inverse(a);
    return true;
  } catch (const SingularMatrix&) {
    return false;
  }
}

RationalMatrix AntiInvolutionData::apply(const RationalMatrix& a) const {
  return g * a.transpose() * rational_inverse(g);
}

std::size_t fixed_space_dim(const RationalMatrix& g) {
  const std::uint32_t n = g.dim();
  const RationalMatrix h = rational_inverse(g);
  const std::size_t vars = std::size_t(n) * n;
  // Equation (i, j): sum_l h_li x_lj - sum_l h_il x_jl = 0.
  std::vector<std::vector<BigInt>> system;
  system.reserve(vars);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      std::vector<Rational> row(vars);
      for (std::uint32_t l = 0; l < n; ++l) {
        row[std::size_t(l) * n + j] += h(l, i);
        row[std::size_t(j) * n + l] -= h(i, l);
      }
      BigInt lcm = 1;
      for (const Rational& x : row) {
        lcm = mp::lcm(lcm, BigInt(mp::denominator(x)));
      }
      std::vector<BigInt> ints;
      ints.reserve(vars);
      for (const Rational& x : row) {
        ints.push_back(BigInt(mp::numerator(x)) * (lcm / BigInt(mp::denominator(x))));
      }
      system.push_back(std::move(ints));
    }
  }
  return vars - integer_rank(std::move(system));
}

const char* to_string(AntiInvolutionClass c) {
  switch (c) {
    case AntiInvolutionClass::Symmetric:
      return "symmetric";
    case AntiInvolutionClass::Skew:
      return "skew";
    case AntiInvolutionClass::NotInvolution:
      return "not-involution";
  }
  return "?";
}

AntiInvolutionClass classify_anti_involution(const RationalMatrix& g) {
  const RationalMatrix t = g.transpose();
  if (t == g) return AntiInvolutionClass::Symmetric;
  if (t == -g) return AntiInvolutionClass::Skew;
  return AntiInvolutionClass::NotInvolution;
}

namespace {

std::int64_t small_entry(std::mt19937_64& rng) {
  return static_cast<std::int64_t>(rng() % 19) - 9;
}

}  // namespace

RationalMatrix random_invertible(std::uint32_t n, std::mt19937_64& rng) {
  while (true) {
    RationalMatrix g(n);
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j) g(i, j) = small_entry(rng);
    if (is_invertible(g)) return g;
  }
}

RationalMatrix random_symmetric_invertible(std::uint32_t n, std::mt19937_64& rng) {
  while (true) {
    RationalMatrix g(n);
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = i; j < n; ++j) g(i, j) = g(j, i) = small_entry(rng);
    if (is_invertible(g)) return g;
  }
}

RationalMatrix random_skew_invertible(std::uint32_t n, std::mt19937_64& rng) {
  if (n % 2) throw std::invalid_argument("invertible skew matrices need even n");
  while (true) {
    RationalMatrix g(n);
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = i + 1; j < n; ++j) {
        g(i, j) = small_entry(rng);
        g(j, i) = -g(i, j);
      }
    if (is_invertible(g)) return g;
  }
}

SemisimpleProfile SemisimpleProfile::make(std::vector<std::uint64_t> blocks,
                                          std::uint64_t fixed_dim) {
  SemisimpleProfile p;
  for (std::uint64_t b : blocks) {
    if (b == 0) throw std::invalid_argument("block ranks must be positive");
    p.dimA += b * b;
  }
  if (fixed_dim > p.dimA) throw std::invalid_argument("fixed_dim exceeds dim A");
  p.blocks = std::move(blocks);
  p.fixed_dim = fixed_dim;
  return p;
}

std::uint64_t SemisimpleProfile::rank_one_count() const {
  std::uint64_t c = 0;
  for (std::uint64_t b : blocks) c += b == 1;
  return c;
}

RankOneBound rank_one_lower_bound(const SemisimpleProfile& p) {
  RankOneBound r;
  if (p.dimA == 0) throw std::invalid_argument("empty profile");
  const auto dim = static_cast<std::int64_t>(p.dimA);
  const auto codim = static_cast<std::int64_t>(p.dimA - p.fixed_dim);
  r.epsilon = Fraction(codim, dim);
  // (1 - 4 eps) dim A = dim A - 4 codim is already an integer.
  const std::int64_t raw = dim - 4 * codim;
  r.bound = raw < 0 ? 0 : raw;
  r.rank_one = p.rank_one_count();
  r.holds = static_cast<std::int64_t>(r.rank_one) >= raw;
  return r;
}

RankKBound rank_k_upper_bound(const SemisimpleProfile& p, std::uint32_t k) {
  if (k <= 2) throw std::invalid_argument("rank_k_upper_bound needs k > 2");
  if (p.dimA == 0) throw std::invalid_argument("empty profile");
  RankKBound r;
  r.epsilon = Fraction(static_cast<std::int64_t>(p.fixed_dim), static_cast<std::int64_t>(p.dimA));
  for (std::uint64_t b : p.blocks) {
    if (b >= k) r.high_rank_dim += b * b;
  }
  r.applicable = r.epsilon >= Fraction(1, 4);
  if (!r.applicable) return r;
  const Fraction slope = Fraction(1, 4) - Fraction(1, 2 * static_cast<std::int64_t>(k));
  r.bound = (r.epsilon - Fraction(1, 4)) / slope * static_cast<std::int64_t>(p.dimA);
  r.holds = Fraction(static_cast<std::int64_t>(r.high_rank_dim)) <= r.bound;
  return r;
}

SemisimpleProfile hecke_profile(const MultiplicityReport& mults, const SigmaOnZ& z) {
  std::vector<std::uint64_t> blocks;
  for (const Multiplicity& m : mults.mults) {
    if (m.mult > 0) blocks.push_back(m.mult);
  }
  SemisimpleProfile p = SemisimpleProfile::make(std::move(blocks), sigma_fixed_dim(z));
  GELFAND_CHECK(p.dimA == z.size(),
                "sum of squared multiplicities differs from the number of double cosets");
  return p;
}

EpsGelfandCheck eps_gelfand_check(const MultiplicityReport& mults, const SigmaOnZ& z) {
  GELFAND_CHECK(mults.num_constituents > 0, "permutation representation has no constituents");
  const auto dim = static_cast<std::int64_t>(z.size());
  const auto codim = dim - static_cast<std::int64_t>(sigma_fixed_dim(z));
  EpsGelfandCheck c;
  c.epsilon = Fraction(codim, dim);
  c.bound = Fraction(1) - Fraction(4) * c.epsilon;
  c.fraction = Fraction(static_cast<std::int64_t>(mults.num_mult_one),
                        static_cast<std::int64_t>(mults.num_constituents));
  c.holds = c.fraction >= c.bound;
  return c;
}

}  // namespace gelfand
