#include "gelfand/matgrp.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>
#include <utility>

#include "gelfand/errors.hpp"

namespace gelfand {

Mat mat_identity(std::uint32_t n) { return mat_scalar(n, 1); }

Mat mat_scalar(std::uint32_t n, Elt c) {
  Mat m(n);
  for (std::uint32_t i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

Mat mat_from_ints(const Field& F, std::uint32_t n,
                  const std::vector<std::int64_t>& rows) {
  if (rows.size() != std::size_t(n) * n) {
    throw std::invalid_argument("mat_from_ints: expected n*n entries");
  }
  Mat m(n);
  for (std::size_t i = 0; i < rows.size(); ++i) m.entries[i] = F.from_int(rows[i]);
  return m;
}

Mat mat_mul(const Field& F, const Mat& a, const Mat& b) {
  if (a.n != b.n) throw std::invalid_argument("mat_mul: dimension mismatch");
  const std::uint32_t n = a.n;
  Mat c(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t k = 0; k < n; ++k) {
      const Elt aik = a(i, k);
      if (aik == 0) continue;
      for (std::uint32_t j = 0; j < n; ++j) {
        c(i, j) = F.add(c(i, j), F.mul(aik, b(k, j)));
      }
    }
  }
  return c;
}

Mat mat_transpose(const Mat& a) {
  Mat t(a.n);
  for (std::uint32_t i = 0; i < a.n; ++i)
    for (std::uint32_t j = 0; j < a.n; ++j) t(j, i) = a(i, j);
  return t;
}

Mat mat_map(const Mat& a, const std::function<Elt(Elt)>& f) {
  Mat r = a;
  for (Elt& e : r.entries) e = f(e);
  return r;
}

namespace {

// Row reduction of [a | I]; returns false when a is singular.
bool gauss_jordan(const Field& F, Mat a, Mat* inverse) {
  const std::uint32_t n = a.n;
  Mat inv = mat_identity(n);
  for (std::uint32_t col = 0; col < n; ++col) {
    std::uint32_t piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) return false;
    if (piv != col) {
      for (std::uint32_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    }
    const Elt s = F.inv(a(col, col));
    for (std::uint32_t j = 0; j < n; ++j) {
      a(col, j) = F.mul(a(col, j), s);
      inv(col, j) = F.mul(inv(col, j), s);
    }
    for (std::uint32_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      const Elt f = a(r, col);
      for (std::uint32_t j = 0; j < n; ++j) {
        a(r, j) = F.sub(a(r, j), F.mul(f, a(col, j)));
        inv(r, j) = F.sub(inv(r, j), F.mul(f, inv(col, j)));
      }
    }
  }
  if (inverse) *inverse = std::move(inv);
  return true;
}

}  // namespace

Mat mat_inv(const Field& F, const Mat& a) {
  Mat inv;
  if (!gauss_jordan(F, a, &inv)) throw SingularMatrix("mat_inv: singular matrix");
  return inv;
}

bool mat_is_invertible(const Field& F, const Mat& a) {
  return mat_det(F, a) != 0;
}

Elt mat_det(const Field& F, const Mat& a_in) {
  Mat a = a_in;
  const std::uint32_t n = a.n;
  Elt det = 1;
  for (std::uint32_t col = 0; col < n; ++col) {
    std::uint32_t piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      for (std::uint32_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
      det = F.neg(det);
    }
    det = F.mul(det, a(col, col));
    const Elt s = F.inv(a(col, col));
    for (std::uint32_t r = col + 1; r < n; ++r) {
      if (a(r, col) == 0) continue;
      const Elt f = F.mul(a(r, col), s);
      for (std::uint32_t j = col; j < n; ++j) {
        a(r, j) = F.sub(a(r, j), F.mul(f, a(col, j)));
      }
    }
  }
  return det;
}

Poly min_poly(const Field& F, const Mat& a) {
  const std::uint32_t n = a.n;
  const std::size_t len = std::size_t(n) * n;
  // Echelon rows of flattened powers, each tagged with the combination of
  // powers that produced it.
  struct Row {
    std::vector<Elt> v;
    Poly combo;
    std::size_t pivot;
  };
  std::vector<Row> basis;
  Mat power = mat_identity(n);
  for (std::uint32_t k = 0; k <= n; ++k) {
    std::vector<Elt> v = power.entries;
    Poly combo(k + 1, 0);
    combo[k] = 1;
    for (const Row& r : basis) {
      const Elt f = v[r.pivot];
      if (f == 0) continue;
      for (std::size_t j = 0; j < len; ++j) v[j] = F.sub(v[j], F.mul(f, r.v[j]));
      for (std::size_t j = 0; j < r.combo.size(); ++j) {
        combo[j] = F.sub(combo[j], F.mul(f, r.combo[j]));
      }
    }
    std::size_t piv = 0;
    while (piv < len && v[piv] == 0) ++piv;
    if (piv == len) {
      // combo is monic of degree k with combo(a) = 0.
      poly_trim(combo);
      return combo;
    }
    const Elt s = F.inv(v[piv]);
    for (Elt& e : v) e = F.mul(e, s);
    for (Elt& e : combo) e = F.mul(e, s);
    for (Row& r : basis) {
      const Elt f = r.v[piv];
      if (f == 0) continue;
      for (std::size_t j = 0; j < len; ++j) r.v[j] = F.sub(r.v[j], F.mul(f, v[j]));
      r.combo.resize(std::max(r.combo.size(), combo.size()), 0);
      for (std::size_t j = 0; j < combo.size(); ++j) {
        r.combo[j] = F.sub(r.combo[j], F.mul(f, combo[j]));
      }
    }
    basis.push_back(Row{std::move(v), std::move(combo), piv});
    power = mat_mul(F, power, a);
  }
  // Cayley-Hamilton bounds the degree by n.
  throw InvariantViolation("min_poly: no dependence found up to degree n");
}

bool is_semisimple(const Field& F, const Mat& a) {
  const Poly m = min_poly(F, a);
  const Poly g = poly_gcd(F, m, poly_derivative(F, m));
  return g.size() == 1;
}

GroupTable::GroupTable(std::shared_ptr<const Field> field, std::uint32_t n,
                       std::vector<Mat> elems)
    : field_(std::move(field)), n_(n), elems_(std::move(elems)) {
  index_.reserve(elems_.size() * 2);
  const Mat id = mat_identity(n_);
  bool has_identity = false;
  for (std::uint32_t i = 0; i < elems_.size(); ++i) {
    if (elems_[i].n != n_) throw std::invalid_argument("GroupTable: dimension mismatch");
    if (!index_.emplace(elems_[i].key(), i).second) {
      throw InvariantViolation("GroupTable: duplicate element");
    }
    if (elems_[i] == id) {
      identity_ = i;
      has_identity = true;
    }
  }
  GELFAND_CHECK(has_identity, "GroupTable: identity missing");
  inverse_.resize(elems_.size());
  for (std::uint32_t i = 0; i < elems_.size(); ++i) {
    const std::int64_t j = find(mat_inv(*field_, elems_[i]));
    GELFAND_CHECK(j >= 0, "GroupTable: not closed under inverse");
    inverse_[i] = static_cast<std::uint32_t>(j);
  }
}

std::int64_t GroupTable::find(const Mat& m) const {
  auto it = index_.find(m.key());
  return it == index_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

std::uint32_t GroupTable::index_of(const Mat& m) const {
  const std::int64_t i = find(m);
  GELFAND_CHECK(i >= 0, "GroupTable: matrix is not a group element");
  return static_cast<std::uint32_t>(i);
}

std::uint32_t GroupTable::mul_index(std::uint32_t a, std::uint32_t b) const {
  return index_of(mul(elems_[a], elems_[b]));
}

bool GroupTable::verify_closure() const {
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (find(mat_inv(*field_, elems_[i])) < 0) return false;
    for (std::size_t j = 0; j < elems_.size(); ++j) {
      if (find(mul(elems_[i], elems_[j])) < 0) return false;
    }
  }
  return true;
}

GroupTable group_generate(std::shared_ptr<const Field> field,
                          const std::vector<Mat>& gens, std::size_t cap) {
  if (gens.empty()) throw std::invalid_argument("group_generate: no generators");
  const std::uint32_t n = gens.front().n;
  for (const Mat& g : gens) {
    if (g.n != n) throw std::invalid_argument("group_generate: dimension mismatch");
    if (!mat_is_invertible(*field, g)) {
      throw std::invalid_argument("group_generate: singular generator");
    }
  }
  std::vector<Mat> elems{mat_identity(n)};
  std::unordered_map<std::string, std::uint32_t> seen{{elems[0].key(), 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const Mat& g : gens) {
      Mat next = mat_mul(*field, elems[head], g);
      if (seen.emplace(next.key(), static_cast<std::uint32_t>(elems.size())).second) {
        elems.push_back(std::move(next));
        if (elems.size() > cap) {
          throw CapExceeded("group_generate: more than " + std::to_string(cap) +
                            " elements");
        }
      }
    }
  }
  return GroupTable(std::move(field), n, std::move(elems));
}

std::uint64_t gl_order(std::uint32_t n, std::uint64_t q) {
  std::uint64_t qn = 1;
  for (std::uint32_t i = 0; i < n; ++i) qn *= q;
  std::uint64_t order = 1, qi = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    order *= qn - qi;
    qi *= q;
  }
  return order;
}

GroupTable enumerate_gl(std::uint32_t n, std::shared_ptr<const Field> field,
                        std::size_t cap) {
  if (n < 1) throw std::invalid_argument("enumerate_gl: n must be >= 1");
  const std::uint32_t q = field->order();
  const std::size_t len = std::size_t(n) * n;
  std::uint64_t candidates = 1;
  for (std::size_t i = 0; i < len && candidates <= cap; ++i) candidates *= q;
  if (candidates > cap) {
    throw CapExceeded("enumerate_gl: q^(n^2) exceeds cap " + std::to_string(cap) +
                      " (n = " + std::to_string(n) + ", q = " + std::to_string(q) + ")");
  }
  std::vector<Mat> elems;
  elems.reserve(gl_order(n, q));
  Mat m(n);
  // Odometer over entries, last entry fastest: lexicographic order.
  bool done = false;
  while (!done) {
    if (mat_det(*field, m) != 0) elems.push_back(m);
    std::size_t pos = len;
    while (true) {
      if (pos == 0) {
        done = true;
        break;
      }
      --pos;
      if (++m.entries[pos] < q) break;
      m.entries[pos] = 0;
    }
  }
  return GroupTable(std::move(field), n, std::move(elems));
}

GroupTable subgroup_where(const GroupTable& G,
                          const std::function<bool(const Mat&)>& pred) {
  std::vector<Mat> sel;
  for (const Mat& g : G.elems()) {
    if (pred(g)) sel.push_back(g);
  }
  if (sel.empty()) throw InvariantViolation("subgroup_where: empty selection");
  std::unordered_map<std::string, bool> in;
  for (const Mat& h : sel) in.emplace(h.key(), true);
  for (const Mat& a : sel) {
    for (const Mat& b : sel) {
      if (!in.count(G.mul(a, b).key())) {
        throw InvariantViolation(
            "subgroup_where: selection is not closed under multiplication");
      }
    }
  }
  return GroupTable(G.field_ptr(), G.dim(), std::move(sel));
}

ConjugacyClasses conjugacy_classes(const GroupTable& G) {
  const std::size_t order = G.order();
  ConjugacyClasses cc;
  constexpr std::uint32_t kUnset = ~std::uint32_t(0);
  cc.class_of.assign(order, kUnset);
  for (std::uint32_t g = 0; g < order; ++g) {
    if (cc.class_of[g] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(cc.reps.size());
    std::vector<std::uint32_t> members;
    for (std::uint32_t x = 0; x < order; ++x) {
      const Mat conj = G.mul(G.mul(G[x], G[g]), G[G.inverse_index(x)]);
      const std::uint32_t c = G.index_of(conj);
      if (cc.class_of[c] == kUnset) {
        cc.class_of[c] = id;
        members.push_back(c);
      }
    }
    std::sort(members.begin(), members.end());
    cc.reps.push_back(members.front());
    cc.members.push_back(std::move(members));
  }
  cc.inverse_class.resize(cc.reps.size());
  for (std::size_t c = 0; c < cc.reps.size(); ++c) {
    cc.inverse_class[c] = cc.class_of[G.inverse_index(cc.reps[c])];
  }
  return cc;
}

}  // namespace gelfand
