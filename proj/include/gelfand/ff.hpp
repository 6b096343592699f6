#pragma once

#include <cstdint>
#include <vector>

namespace gelfand {

// Dense polynomial over GF(p), lowest degree first.
using PrimePoly = std::vector<std::uint32_t>;

inline constexpr std::uint32_t kDefaultFieldCap = 121;
// Element codes are stored in one byte.
inline constexpr std::uint32_t kMaxFieldOrder = 256;

// GF(p^k) presented as GF(p)[x] / (modulus).
struct FieldSpec {
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  PrimePoly modulus;  // monic, degree k

  std::uint32_t order() const;
  bool operator==(const FieldSpec&) const = default;
};

// Coefficients of an element, constant term first, each in [0, p).
struct FieldElem {
  std::vector<std::uint32_t> coeffs;
  bool operator==(const FieldElem&) const = default;
};

bool is_prime(std::uint64_t n);

// Irreducibility by trial division against every monic polynomial of degree
// at most deg(f)/2.
bool is_irreducible(const PrimePoly& f, std::uint32_t p);

// Field with the lexicographically smallest monic irreducible modulus of
// degree k. Throws std::invalid_argument on non-prime p or k < 1.
FieldSpec ff_make(std::uint32_t p, std::uint32_t k);

// Splits q = p^k. Throws std::invalid_argument when q is not a prime power.
FieldSpec ff_make_order(std::uint32_t q);

FieldElem ff_zero(const FieldSpec& spec);
FieldElem ff_one(const FieldSpec& spec);
FieldElem ff_add(const FieldSpec& spec, const FieldElem& a, const FieldElem& b);
FieldElem ff_neg(const FieldSpec& spec, const FieldElem& a);
FieldElem ff_mul(const FieldSpec& spec, const FieldElem& a, const FieldElem& b);
FieldElem ff_pow(const FieldSpec& spec, FieldElem a, std::uint64_t e);
// Throws std::domain_error on zero.
FieldElem ff_inv(const FieldSpec& spec, const FieldElem& a);
// a -> a^p
FieldElem ff_frobenius(const FieldSpec& spec, const FieldElem& a);

// All q elements, lexicographic on (c_{k-1}, ..., c_0): 0, 1, 2, ..., x, ...
// Throws CapExceeded when q > cap.
std::vector<FieldElem> ff_enumerate(const FieldSpec& spec,
                                    std::uint32_t cap = kDefaultFieldCap);

// Element code: sum c_i p^i, i.e. the position in ff_enumerate order.
using Elt = std::uint8_t;

// Table-driven arithmetic on element codes. Built once per field and
// immutable afterwards.
class Field {
 public:
  explicit Field(FieldSpec spec, std::uint32_t cap = kDefaultFieldCap);

  const FieldSpec& spec() const { return spec_; }
  std::uint32_t order() const { return q_; }
  std::uint32_t characteristic() const { return spec_.p; }
  std::uint32_t degree() const { return spec_.k; }

  Elt add(Elt a, Elt b) const { return add_[a * q_ + b]; }
  Elt sub(Elt a, Elt b) const { return add_[a * q_ + neg_[b]]; }
  Elt mul(Elt a, Elt b) const { return mul_[a * q_ + b]; }
  Elt neg(Elt a) const { return neg_[a]; }
  Elt inv(Elt a) const;
  Elt frobenius(Elt a) const { return frob_[a]; }
  Elt pow(Elt a, std::uint64_t e) const;

  // Image of an integer in the prime subfield.
  Elt from_int(std::int64_t v) const;

  Elt encode(const FieldElem& a) const;
  FieldElem decode(Elt a) const;

 private:
  FieldSpec spec_;
  std::uint32_t q_;
  std::vector<Elt> add_, mul_, neg_, inv_, frob_;
};

// Polynomial over a Field, lowest degree first; empty means zero.
using Poly = std::vector<Elt>;

void poly_trim(Poly& f);
Poly poly_derivative(const Field& F, const Poly& f);
Poly poly_mod(const Field& F, Poly f, const Poly& g);
// Monic gcd; gcd(0, 0) is the zero polynomial.
Poly poly_gcd(const Field& F, Poly a, Poly b);
Poly poly_mul(const Field& F, const Poly& a, const Poly& b);

}  // namespace gelfand
