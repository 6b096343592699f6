#include "gelfand/chartab.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "gelfand/errors.hpp"

namespace gelfand {

namespace {

using Vec = std::vector<std::uint64_t>;
using Matrix = std::vector<Vec>;

struct Mod {
  std::uint64_t p;

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    a %= p;
    for (; e; e >>= 1) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
    }
    return r;
  }
  std::uint64_t inv(std::uint64_t a) const {
    GELFAND_CHECK(a % p != 0, "modular inverse of zero");
    return pow(a, p - 2);
  }
};

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(const Mod& m, Matrix& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    const std::uint64_t s = m.inv(rows[r][c]);
    for (auto& x : rows[r]) x = m.mul(x, s);
    for (std::size_t o = 0; o < rows.size(); ++o) {
      if (o == r || rows[o][c] == 0) continue;
      const std::uint64_t f = rows[o][c];
      for (std::size_t k = c; k < cols; ++k) {
        rows[o][k] = m.sub(rows[o][k], m.mul(f, rows[r][k]));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

// Basis of {v : a v = 0}.
Matrix nullspace(const Mod& m, Matrix a) {
  const std::size_t n = a.empty() ? 0 : a[0].size();
  const std::vector<std::size_t> pivots = rref(m, a);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  Matrix basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = m.sub(0, a[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Characteristic polynomial (lowest degree first) via Hessenberg reduction.
Vec charpoly(const Mod& m, Matrix h) {
  const std::size_t n = h.size();
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && h[piv][j] == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      std::swap(h[piv], h[j + 1]);
      for (std::size_t r = 0; r < n; ++r) std::swap(h[r][piv], h[r][j + 1]);
    }
    const std::uint64_t s = m.inv(h[j + 1][j]);
    for (std::size_t r = j + 2; r < n; ++r) {
      if (h[r][j] == 0) continue;
      const std::uint64_t u = m.mul(h[r][j], s);
      for (std::size_t c = 0; c < n; ++c) h[r][c] = m.sub(h[r][c], m.mul(u, h[j + 1][c]));
      for (std::size_t c = 0; c < n; ++c) h[c][j + 1] = m.add(h[c][j + 1], m.mul(u, h[c][r]));
    }
  }
  std::vector<Vec> p(n + 1);
  p[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    Vec next(k + 1, 0);
    for (std::size_t d = 0; d < p[k - 1].size(); ++d) {
      next[d + 1] = m.add(next[d + 1], p[k - 1][d]);
      next[d] = m.sub(next[d], m.mul(h[k - 1][k - 1], p[k - 1][d]));
    }
    std::uint64_t t = 1;
    for (std::size_t i = k - 1; i >= 1; --i) {
      t = m.mul(t, h[i][i - 1]);
      if (t == 0) break;
      const std::uint64_t f = m.mul(t, h[i - 1][k - 1]);
      for (std::size_t d = 0; d < p[i - 1].size(); ++d) {
        next[d] = m.sub(next[d], m.mul(f, p[i - 1][d]));
      }
    }
    p[k] = std::move(next);
  }
  return p[n];
}

std::uint64_t horner(const Mod& m, const Vec& f, std::uint64_t x) {
  std::uint64_t r = 0;
  for (std::size_t i = f.size(); i-- > 0;) r = m.add(m.mul(r, x), f[i]);
  return r;
}

std::uint64_t element_order(const GroupTable& G, std::uint32_t g) {
  std::uint64_t order = 1;
  Mat x = G[g];
  const Mat& id = G[G.identity_index()];
  while (!(x == id)) {
    x = G.mul(x, G[g]);
    ++order;
  }
  return order;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t primitive_root_of_unity(const Mod& m, std::uint64_t e) {
  const std::vector<std::uint64_t> factors = prime_factors(e);
  for (std::uint64_t a = 2; a < m.p; ++a) {
    const std::uint64_t x = m.pow(a, (m.p - 1) / e);
    bool primitive = true;
    for (std::uint64_t f : factors) {
      if (m.pow(x, e / f) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return x;
  }
  throw InvariantViolation("no primitive root of unity");
}

}  // namespace

ClassData class_data(const GroupTable& G) {
  ClassData cd;
  cd.classes = conjugacy_classes(G);
  cd.group_order = G.order();
  cd.identity_class = cd.classes.class_of[G.identity_index()];
  for (std::uint32_t rep : cd.classes.reps) {
    const std::uint64_t o = element_order(G, rep);
    cd.rep_orders.push_back(o);
    cd.exponent = std::lcm(cd.exponent, o);
  }
  return cd;
}

std::vector<std::vector<std::uint64_t>> class_matrix(const GroupTable& G,
                                                     const ClassData& cd,
                                                     std::uint32_t i) {
  const std::size_t r = cd.count();
  std::vector<std::vector<std::uint64_t>> a(r, std::vector<std::uint64_t>(r, 0));
  for (std::uint32_t k = 0; k < r; ++k) {
    const Mat& z = G[cd.classes.reps[k]];
    for (std::uint32_t x : cd.classes.members[i]) {
      const std::uint32_t y = G.index_of(G.mul(G[G.inverse_index(x)], z));
      ++a[cd.classes.class_of[y]][k];
    }
  }
  return a;
}

std::vector<std::uint64_t> class_mult_coeffs(const GroupTable& G, const ClassData& cd,
                                             std::uint32_t i, std::uint32_t j) {
  return class_matrix(G, cd, i)[j];
}

std::uint64_t choose_char_modulus(std::uint64_t exponent, std::uint64_t group_order) {
  constexpr std::uint64_t kBound = std::uint64_t(1) << 31;
  std::uint64_t ell = (2 * group_order / exponent) * exponent + 1;
  for (; ell < kBound; ell += exponent) {
    if (ell > 2 * group_order && is_prime(ell)) return ell;
  }
  throw std::runtime_error("no prime = 1 mod " + std::to_string(exponent) +
                           " above " + std::to_string(2 * group_order) +
                           " below 2^31");
}

CharacterTable dixon_table(const GroupTable& G, const ClassData& cd) {
  const std::size_t r = cd.count();
  CharacterTable t;
  t.group_order = cd.group_order;
  t.modulus = choose_char_modulus(cd.exponent, cd.group_order);
  const Mod m{t.modulus};
  t.root = primitive_root_of_unity(m, cd.exponent);
  for (std::size_t c = 0; c < r; ++c) t.class_sizes.push_back(cd.size(c));
  t.inverse_class = cd.classes.inverse_class;

  // Each subspace is an RREF basis (rows) together with its pivot columns.
  struct Space {
    Matrix basis;
    std::vector<std::size_t> pivots;
  };
  std::vector<Space> spaces;
  {
    Matrix id(r, Vec(r, 0));
    for (std::size_t k = 0; k < r; ++k) id[k][k] = 1;
    spaces.push_back({id, {}});
    spaces[0].pivots.resize(r);
    std::iota(spaces[0].pivots.begin(), spaces[0].pivots.end(), 0);
  }
  auto unresolved = [&] {
    for (const Space& s : spaces)
      if (s.basis.size() > 1) return true;
    return false;
  };

  for (std::uint32_t i = 0; i < r && unresolved(); ++i) {
    Matrix M = class_matrix(G, cd, i);
    for (auto& row : M)
      for (auto& x : row) x %= m.p;
    std::vector<Space> next;
    for (Space& s : spaces) {
      const std::size_t d = s.basis.size();
      if (d == 1) {
        next.push_back(std::move(s));
        continue;
      }
      // Restriction of M to the span: column s of A holds the coordinates
      // of M b_s, read off at the pivot positions.
      Matrix A(d, Vec(d, 0));
      std::vector<Vec> images(d);
      for (std::size_t col = 0; col < d; ++col) {
        Vec u(r, 0);
        for (std::size_t j = 0; j < r; ++j) {
          std::uint64_t acc = 0;
          for (std::size_t k = 0; k < r; ++k) {
            if (M[j][k] && s.basis[col][k]) acc = m.add(acc, m.mul(M[j][k], s.basis[col][k]));
          }
          u[j] = acc;
        }
        for (std::size_t row = 0; row < d; ++row) A[row][col] = u[s.pivots[row]];
        images[col] = std::move(u);
      }
      for (std::size_t col = 0; col < d; ++col) {
        for (std::size_t k = 0; k < r; ++k) {
          std::uint64_t acc = 0;
          for (std::size_t row = 0; row < d; ++row) {
            acc = m.add(acc, m.mul(A[row][col], s.basis[row][k]));
          }
          GELFAND_CHECK(acc == images[col][k], "class matrix does not preserve subspace");
        }
      }
      bool scalar = true;
      for (std::size_t a = 0; a < d && scalar; ++a)
        for (std::size_t b = 0; b < d && scalar; ++b)
          if (A[a][b] != (a == b ? A[0][0] : 0)) scalar = false;
      if (scalar) {
        next.push_back(std::move(s));
        continue;
      }
      const Vec f = charpoly(m, A);
      std::size_t found = 0;
      for (std::uint64_t lambda = 0; lambda < m.p && found < d; ++lambda) {
        if (horner(m, f, lambda) != 0) continue;
        Matrix shifted = A;
        for (std::size_t a = 0; a < d; ++a) shifted[a][a] = m.sub(shifted[a][a], lambda);
        Matrix coords = nullspace(m, shifted);
        GELFAND_CHECK(!coords.empty(), "root of characteristic polynomial without eigenvector");
        Matrix vecs;
        for (const Vec& c : coords) {
          Vec v(r, 0);
          for (std::size_t row = 0; row < d; ++row) {
            if (!c[row]) continue;
            for (std::size_t k = 0; k < r; ++k) v[k] = m.add(v[k], m.mul(c[row], s.basis[row][k]));
          }
          vecs.push_back(std::move(v));
        }
        found += vecs.size();
        Space piece;
        piece.pivots = rref(m, vecs);
        piece.basis = std::move(vecs);
        next.push_back(std::move(piece));
      }
      GELFAND_CHECK(found == d, "class matrix is not diagonalizable on a common eigenspace");
    }
    spaces = std::move(next);
  }
  GELFAND_CHECK(!unresolved(), "class matrices did not separate all characters");
  GELFAND_CHECK(spaces.size() == r, "number of characters differs from number of classes");

  const std::uint64_t g_mod = cd.group_order % m.p;
  std::uint64_t isqrt = 0;
  while ((isqrt + 1) * (isqrt + 1) <= cd.group_order) ++isqrt;
  for (const Space& s : spaces) {
    Vec w = s.basis[0];
    const std::uint64_t scale = m.inv(w[cd.identity_class]);
    for (auto& x : w) x = m.mul(x, scale);
    // sum_k omega_k omega_{k*} / |C_k| = |G| / d^2
    std::uint64_t sum = 0;
    for (std::size_t k = 0; k < r; ++k) {
      sum = m.add(sum, m.mul(m.mul(w[k], w[t.inverse_class[k]]), m.inv(cd.size(k) % m.p)));
    }
    const std::uint64_t d_sq = m.mul(g_mod, m.inv(sum));
    std::uint64_t degree = 0;
    for (std::uint64_t d = 1; d <= isqrt; ++d) {
      if (cd.group_order % d == 0 && d * d % m.p == d_sq) {
        degree = d;
        break;
      }
    }
    GELFAND_CHECK(degree != 0, "no integer character degree matches");
    Vec chi(r);
    for (std::size_t k = 0; k < r; ++k) {
      chi[k] = m.mul(m.mul(degree % m.p, w[k]), m.inv(cd.size(k) % m.p));
    }
    t.table.push_back(std::move(chi));
    t.degrees.push_back(degree);
  }

  std::uint64_t deg_sq = 0;
  for (std::uint64_t d : t.degrees) deg_sq += d * d;
  GELFAND_CHECK(deg_sq == cd.group_order, "sum of squared degrees differs from |G|");
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b < r; ++b) {
      GELFAND_CHECK(class_inner_product(t, t.table[a], t.table[b]) == (a == b ? 1u : 0u),
                    "character table fails row orthogonality");
    }
  }
  return t;
}

std::uint64_t class_inner_product(const CharacterTable& t,
                                  const std::vector<std::uint64_t>& a,
                                  const std::vector<std::uint64_t>& b) {
  const Mod m{t.modulus};
  std::uint64_t sum = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    sum = m.add(sum, m.mul(m.mul(t.class_sizes[k] % m.p, a[k] % m.p),
                           b[t.inverse_class[k]] % m.p));
  }
  return m.mul(sum, m.inv(t.group_order % m.p));
}

std::vector<std::uint64_t> permutation_character(const SymPair& pair, const ClassData& cd) {
  const GroupTable& G = *pair.G;
  // Left cosets xH, one representative each.
  std::vector<bool> seen(G.order(), false);
  std::vector<std::uint32_t> coset_reps;
  for (std::uint32_t x = 0; x < G.order(); ++x) {
    if (seen[x]) continue;
    coset_reps.push_back(x);
    for (std::uint32_t h : pair.h_in_g) seen[G.mul_index(x, h)] = true;
  }
  std::vector<std::uint64_t> pi;
  pi.reserve(cd.count());
  for (std::uint32_t rep : cd.classes.reps) {
    std::uint64_t fixed = 0;
    for (std::uint32_t x : coset_reps) {
      const Mat conj = G.mul(G.mul(G[G.inverse_index(x)], G[rep]), G[x]);
      if (pair.in_h[G.index_of(conj)]) ++fixed;
    }
    pi.push_back(fixed);
  }
  return pi;
}

MultiplicityReport multiplicities(const CharacterTable& table,
                                  const std::vector<std::uint64_t>& pi) {
  MultiplicityReport rep;
  for (std::uint32_t i = 0; i < table.count(); ++i) {
    const std::uint64_t residue = class_inner_product(table, pi, table.table[i]);
    GELFAND_CHECK(2 * residue < table.modulus,
                  "multiplicity does not lift below ell/2; modulus too small");
    rep.mults.push_back({i, table.degrees[i], residue});
    if (residue > 0) ++rep.num_constituents;
    if (residue == 1) ++rep.num_mult_one;
    rep.sum_m_sq += residue * residue;
    rep.sum_m_deg += residue * table.degrees[i];
  }
  return rep;
}

}  // namespace gelfand
