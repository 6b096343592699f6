#include "gelfand/ff.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "gelfand/errors.hpp"

namespace gelfand {

namespace {

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

void trim(PrimePoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  // Fermat; p is prime and small.
  std::uint64_t r = 1, b = a % p;
  for (std::uint32_t e = p - 2; e; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

// Remainder of f modulo a nonzero g over GF(p).
PrimePoly prime_poly_mod(PrimePoly f, const PrimePoly& g, std::uint32_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  const std::uint32_t lead_inv = inv_mod_p(g.back(), p);
  while (f.size() > dg) {
    const std::size_t shift = f.size() - 1 - dg;
    const std::uint64_t c = std::uint64_t(f.back()) * lead_inv % p;
    for (std::size_t i = 0; i <= dg; ++i) {
      f[i + shift] = static_cast<std::uint32_t>(
          (f[i + shift] + p - c * g[i] % p) % p);
    }
    trim(f);
  }
  return f;
}

// Monic polynomial of degree d whose lower coefficients, read from the top,
// spell `code` in base p.
PrimePoly monic_from_code(std::uint64_t code, std::uint32_t d, std::uint32_t p) {
  PrimePoly f(d + 1, 0);
  f[d] = 1;
  for (std::uint32_t i = 0; i < d; ++i) {
    f[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  return f;
}

void check_same_field(const FieldSpec& spec, const FieldElem& a) {
  if (a.coeffs.size() != spec.k) {
    throw std::invalid_argument("field element has wrong length");
  }
}

FieldElem reduce(const FieldSpec& spec, PrimePoly f) {
  f = prime_poly_mod(std::move(f), spec.modulus, spec.p);
  f.resize(spec.k, 0);
  return FieldElem{std::move(f)};
}

}  // namespace

std::uint32_t FieldSpec::order() const {
  return static_cast<std::uint32_t>(ipow(p, k));
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(const PrimePoly& f_in, std::uint32_t p) {
  PrimePoly f = f_in;
  trim(f);
  if (f.size() < 2) return false;
  const std::uint32_t deg = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; 2 * d <= deg; ++d) {
    const std::uint64_t count = ipow(p, d);
    for (std::uint64_t code = 0; code < count; ++code) {
      if (prime_poly_mod(f, monic_from_code(code, d, p), p).empty()) {
        return false;
      }
    }
  }
  return true;
}

FieldSpec ff_make(std::uint32_t p, std::uint32_t k) {
  if (!is_prime(p)) {
    throw std::invalid_argument("ff_make: " + std::to_string(p) +
                                " is not prime");
  }
  if (k < 1) throw std::invalid_argument("ff_make: degree must be >= 1");
  if (ipow(p, k) > (std::uint64_t(1) << 31)) {
    throw std::invalid_argument("ff_make: field order too large");
  }
  const std::uint64_t count = ipow(p, k);
  for (std::uint64_t code = 0; code < count; ++code) {
    PrimePoly f = monic_from_code(code, k, p);
    if (is_irreducible(f, p)) return FieldSpec{p, k, std::move(f)};
  }
  throw InvariantViolation("no irreducible polynomial found");
}

FieldSpec ff_make_order(std::uint32_t q) {
  if (q < 2) throw std::invalid_argument("field order must be >= 2");
  std::uint32_t p = 2;
  while (q % p) ++p;
  std::uint32_t k = 0, rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) {
    throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  }
  return ff_make(p, k);
}

FieldElem ff_zero(const FieldSpec& spec) {
  return FieldElem{std::vector<std::uint32_t>(spec.k, 0)};
}

FieldElem ff_one(const FieldSpec& spec) {
  FieldElem e = ff_zero(spec);
  e.coeffs[0] = 1;
  return e;
}

FieldElem ff_add(const FieldSpec& spec, const FieldElem& a, const FieldElem& b) {
  check_same_field(spec, a);
  check_same_field(spec, b);
  FieldElem r = ff_zero(spec);
  for (std::uint32_t i = 0; i < spec.k; ++i) {
    r.coeffs[i] = (a.coeffs[i] + b.coeffs[i]) % spec.p;
  }
  return r;
}

FieldElem ff_neg(const FieldSpec& spec, const FieldElem& a) {
  check_same_field(spec, a);
  FieldElem r = ff_zero(spec);
  for (std::uint32_t i = 0; i < spec.k; ++i) {
    r.coeffs[i] = (spec.p - a.coeffs[i]) % spec.p;
  }
  return r;
}

FieldElem ff_mul(const FieldSpec& spec, const FieldElem& a, const FieldElem& b) {
  check_same_field(spec, a);
  check_same_field(spec, b);
  PrimePoly prod(2 * spec.k - 1, 0);
  for (std::uint32_t i = 0; i < spec.k; ++i) {
    for (std::uint32_t j = 0; j < spec.k; ++j) {
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + std::uint64_t(a.coeffs[i]) * b.coeffs[j]) % spec.p);
    }
  }
  return reduce(spec, std::move(prod));
}

FieldElem ff_pow(const FieldSpec& spec, FieldElem a, std::uint64_t e) {
  FieldElem r = ff_one(spec);
  for (; e; e >>= 1) {
    if (e & 1) r = ff_mul(spec, r, a);
    a = ff_mul(spec, a, a);
  }
  return r;
}

FieldElem ff_inv(const FieldSpec& spec, const FieldElem& a) {
  check_same_field(spec, a);
  if (a == ff_zero(spec)) throw std::domain_error("ff_inv: zero has no inverse");
  // a^(q-2) in the multiplicative group of order q-1.
  return ff_pow(spec, a, spec.order() - 2);
}

FieldElem ff_frobenius(const FieldSpec& spec, const FieldElem& a) {
  return ff_pow(spec, a, spec.p);
}

std::vector<FieldElem> ff_enumerate(const FieldSpec& spec, std::uint32_t cap) {
  const std::uint32_t q = spec.order();
  if (q > cap) {
    throw CapExceeded("field order " + std::to_string(q) + " exceeds cap " +
                      std::to_string(cap));
  }
  std::vector<FieldElem> out;
  out.reserve(q);
  for (std::uint32_t code = 0; code < q; ++code) {
    FieldElem e = ff_zero(spec);
    std::uint32_t c = code;
    for (std::uint32_t i = 0; i < spec.k; ++i) {
      e.coeffs[i] = c % spec.p;
      c /= spec.p;
    }
    out.push_back(std::move(e));
  }
  return out;
}

Field::Field(FieldSpec spec, std::uint32_t cap)
    : spec_(std::move(spec)), q_(spec_.order()) {
  if (cap > kMaxFieldOrder) cap = kMaxFieldOrder;
  const std::vector<FieldElem> elems = ff_enumerate(spec_, cap);
  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  frob_.resize(q_);
  for (std::uint32_t a = 0; a < q_; ++a) {
    neg_[a] = encode(ff_neg(spec_, elems[a]));
    frob_[a] = encode(ff_frobenius(spec_, elems[a]));
    for (std::uint32_t b = 0; b < q_; ++b) {
      add_[a * q_ + b] = encode(ff_add(spec_, elems[a], elems[b]));
      mul_[a * q_ + b] = encode(ff_mul(spec_, elems[a], elems[b]));
      if (mul_[a * q_ + b] == 1) inv_[a] = static_cast<Elt>(b);
    }
  }
}

Elt Field::inv(Elt a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return inv_[a];
}

Elt Field::pow(Elt a, std::uint64_t e) const {
  Elt r = 1;
  for (; e; e >>= 1) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
  }
  return r;
}

Elt Field::from_int(std::int64_t v) const {
  const std::int64_t p = spec_.p;
  return static_cast<Elt>(((v % p) + p) % p);
}

Elt Field::encode(const FieldElem& a) const {
  std::uint32_t code = 0;
  for (std::uint32_t i = spec_.k; i-- > 0;) code = code * spec_.p + a.coeffs[i];
  return static_cast<Elt>(code);
}

FieldElem Field::decode(Elt a) const {
  FieldElem e = ff_zero(spec_);
  std::uint32_t c = a;
  for (std::uint32_t i = 0; i < spec_.k; ++i) {
    e.coeffs[i] = c % spec_.p;
    c /= spec_.p;
  }
  return e;
}

void poly_trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_derivative(const Field& F, const Poly& f) {
  Poly d;
  for (std::size_t i = 1; i < f.size(); ++i) {
    d.push_back(F.mul(F.from_int(static_cast<std::int64_t>(i)), f[i]));
  }
  poly_trim(d);
  return d;
}

Poly poly_mod(const Field& F, Poly f, const Poly& g_in) {
  Poly g = g_in;
  poly_trim(g);
  if (g.empty()) throw std::domain_error("polynomial division by zero");
  poly_trim(f);
  const std::size_t dg = g.size() - 1;
  const Elt lead_inv = F.inv(g.back());
  while (f.size() > dg) {
    const std::size_t shift = f.size() - 1 - dg;
    const Elt c = F.mul(f.back(), lead_inv);
    for (std::size_t i = 0; i <= dg; ++i) {
      f[i + shift] = F.sub(f[i + shift], F.mul(c, g[i]));
    }
    poly_trim(f);
  }
  return f;
}

Poly poly_gcd(const Field& F, Poly a, Poly b) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Elt li = F.inv(a.back());
    for (Elt& c : a) c = F.mul(c, li);
  }
  return a;
}

Poly poly_mul(const Field& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
  }
  poly_trim(r);
  return r;
}

}  // namespace gelfand
