#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "gelfand/sympair.hpp"

namespace gelfand {

inline constexpr std::size_t kDefaultCosetCap = 500;

// Z = H\G/H as orbits of (h1, h2) . g = h1 g h2^-1.
struct DoubleCosetPartition {
  std::vector<std::uint32_t> coset_of;  // G index -> coset id
  std::vector<std::uint32_t> reps;      // smallest member of each coset
  std::vector<std::size_t> sizes;

  std::size_t count() const { return reps.size(); }
};

// Coset ids are ordered by smallest member.
DoubleCosetPartition enumerate_double_cosets(const SymPair& pair);

// sigma induced on Z.
struct SigmaOnZ {
  std::vector<std::uint32_t> perm;
  std::size_t fixed_count = 0;

  std::size_t size() const { return perm.size(); }
  bool is_fixed(std::size_t d) const { return perm[d] == d; }
};

// Checks well-definedness on every element of G; throws InvariantViolation
// when sigma does not descend to Z or does not square to the identity.
SigmaOnZ sigma_on_cosets(const SymPair& pair, const DoubleCosetPartition& part);

// dim C[Z]^sigma = fixed + (|Z| - fixed) / 2
std::size_t sigma_fixed_dim(const SigmaOnZ& z);

// Convolution structure constants of indicator functions of double cosets:
// 1_{D1} * 1_{D2} = sum_{D3} c[D1][D2][D3] 1_{D3}.
class HeckeAlgebra {
 public:
  using Row = std::vector<std::pair<std::uint32_t, std::uint64_t>>;  // (D3, c), c > 0

  HeckeAlgebra(std::size_t dim, std::map<std::pair<std::uint32_t, std::uint32_t>, Row> consts)
      : dim_(dim), consts_(std::move(consts)) {}

  std::size_t dim() const { return dim_; }
  std::uint64_t coeff(std::uint32_t d1, std::uint32_t d2, std::uint32_t d3) const;
  // Sparse row for (d1, d2); empty when the product vanishes.
  const Row& product(std::uint32_t d1, std::uint32_t d2) const;

 private:
  std::size_t dim_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, Row> consts_;
};

// c[D1][D2][D3] = #{(x, y) in D1 x D2 : x y = g3} for the representative g3
// of D3. Throws CapExceeded when |Z| > coset_cap.
HeckeAlgebra hecke_structure(const SymPair& pair, const DoubleCosetPartition& part,
                             std::size_t coset_cap = kDefaultCosetCap);

bool is_commutative(const HeckeAlgebra& h);

struct SemisimpleCosetReport {
  std::vector<bool> any_ss;        // per coset: some g with s(g) semisimple
  std::vector<bool> sigma_fixed;   // per coset
  // contingency[any_ss][sigma_fixed]
  std::size_t contingency[2][2] = {{0, 0}, {0, 0}};
  std::vector<std::uint32_t> counterexamples;  // any_ss && !sigma_fixed
};

SemisimpleCosetReport semisimple_coset_report(const SymPair& pair,
                                              const DoubleCosetPartition& part,
                                              const SigmaOnZ& z);

}  // namespace gelfand
