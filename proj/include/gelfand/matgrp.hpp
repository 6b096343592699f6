#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "gelfand/ff.hpp"

namespace gelfand {

inline constexpr std::size_t kDefaultGroupCap = 20000;

// Square matrix over a Field, entries stored as element codes, row-major.
// The field itself is carried by the owning GroupTable or passed explicitly.
struct Mat {
  std::uint32_t n = 0;
  std::vector<Elt> entries;

  Mat() = default;
  explicit Mat(std::uint32_t dim) : n(dim), entries(dim * dim, 0) {}

  Elt& operator()(std::uint32_t i, std::uint32_t j) { return entries[i * n + j]; }
  Elt operator()(std::uint32_t i, std::uint32_t j) const { return entries[i * n + j]; }

  // Canonical byte encoding; injective for fixed (n, q).
  std::string key() const { return std::string(entries.begin(), entries.end()); }

  bool operator==(const Mat&) const = default;
};

Mat mat_identity(std::uint32_t n);
// Builds a matrix from integer entries mapped into the prime subfield.
Mat mat_from_ints(const Field& F, std::uint32_t n, const std::vector<std::int64_t>& rows);
Mat mat_scalar(std::uint32_t n, Elt c);

Mat mat_mul(const Field& F, const Mat& a, const Mat& b);
Mat mat_transpose(const Mat& a);
// Gauss-Jordan over the field; throws SingularMatrix.
Mat mat_inv(const Field& F, const Mat& a);
bool mat_is_invertible(const Field& F, const Mat& a);
Elt mat_det(const Field& F, const Mat& a);
// Applies f to every entry.
Mat mat_map(const Mat& a, const std::function<Elt(Elt)>& f);

// Monic minimal polynomial, from the first linear dependence among
// I, a, a^2, ...
Poly min_poly(const Field& F, const Mat& a);
// Squarefree minimal polynomial, i.e. diagonalizable over the algebraic
// closure (the field is perfect).
bool is_semisimple(const Field& F, const Mat& a);

// An exhaustively enumerated finite matrix group with element -> index lookup.
// Immutable once built.
class GroupTable {
 public:
  GroupTable(std::shared_ptr<const Field> field, std::uint32_t n,
             std::vector<Mat> elems);

  const Field& field() const { return *field_; }
  std::shared_ptr<const Field> field_ptr() const { return field_; }
  std::uint32_t dim() const { return n_; }
  std::size_t order() const { return elems_.size(); }
  const std::vector<Mat>& elems() const { return elems_; }
  const Mat& operator[](std::size_t i) const { return elems_[i]; }
  std::uint32_t identity_index() const { return identity_; }

  // -1 when the matrix is not an element.
  std::int64_t find(const Mat& m) const;
  // Throws InvariantViolation when the matrix is not an element.
  std::uint32_t index_of(const Mat& m) const;

  Mat mul(const Mat& a, const Mat& b) const { return mat_mul(*field_, a, b); }
  std::uint32_t mul_index(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inverse_index(std::uint32_t a) const { return inverse_[a]; }

  // Exhaustive check that products and inverses stay inside.
  bool verify_closure() const;

 private:
  std::shared_ptr<const Field> field_;
  std::uint32_t n_;
  std::vector<Mat> elems_;
  std::unordered_map<std::string, std::uint32_t> index_;
  std::vector<std::uint32_t> inverse_;
  std::uint32_t identity_ = 0;
};

// Breadth-first closure from the identity, generators applied in list order
// on the right. Throws CapExceeded once more than cap elements are found.
GroupTable group_generate(std::shared_ptr<const Field> field,
                          const std::vector<Mat>& gens,
                          std::size_t cap = kDefaultGroupCap);

// All invertible n x n matrices in lexicographic entry order. The cap bounds
// the number of candidate matrices q^(n^2).
GroupTable enumerate_gl(std::uint32_t n, std::shared_ptr<const Field> field,
                        std::size_t cap = kDefaultGroupCap);

// |GL_n(F_q)|
std::uint64_t gl_order(std::uint32_t n, std::uint64_t q);

// Elements of G satisfying pred, in G's order. Throws InvariantViolation if
// the selection is not closed under multiplication.
GroupTable subgroup_where(const GroupTable& G,
                          const std::function<bool(const Mat&)>& pred);

struct ConjugacyClasses {
  std::vector<std::uint32_t> class_of;              // element index -> class
  std::vector<std::vector<std::uint32_t>> members;  // sorted element indices
  std::vector<std::uint32_t> reps;                  // smallest member
  std::vector<std::uint32_t> inverse_class;

  std::size_t count() const { return reps.size(); }
  std::size_t size(std::size_t c) const { return members[c].size(); }
};

// Orbit sweep under conjugation by every element, seeds in index order.
ConjugacyClasses conjugacy_classes(const GroupTable& G);

}  // namespace gelfand
