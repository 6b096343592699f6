#include "gelfand/cosets.hpp"

#include <algorithm>
#include <string>

#include "gelfand/errors.hpp"

namespace gelfand {

DoubleCosetPartition enumerate_double_cosets(const SymPair& pair) {
  const GroupTable& G = *pair.G;
  const GroupTable& H = *pair.H;
  std::vector<Mat> h_inv;
  h_inv.reserve(H.order());
  for (std::uint32_t i = 0; i < H.order(); ++i) h_inv.push_back(H[H.inverse_index(i)]);

  constexpr std::uint32_t kUnset = ~std::uint32_t(0);
  DoubleCosetPartition part;
  part.coset_of.assign(G.order(), kUnset);
  for (std::uint32_t g = 0; g < G.order(); ++g) {
    if (part.coset_of[g] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(part.reps.size());
    std::size_t size = 0;
    for (const Mat& h1 : H.elems()) {
      const Mat left = G.mul(h1, G[g]);
      for (const Mat& h2i : h_inv) {
        const std::uint32_t x = G.index_of(G.mul(left, h2i));
        if (part.coset_of[x] == kUnset) {
          part.coset_of[x] = id;
          ++size;
        }
      }
    }
    part.reps.push_back(g);
    part.sizes.push_back(size);
  }
  return part;
}

SigmaOnZ sigma_on_cosets(const SymPair& pair, const DoubleCosetPartition& part) {
  constexpr std::uint32_t kUnset = ~std::uint32_t(0);
  SigmaOnZ z;
  z.perm.assign(part.count(), kUnset);
  for (std::uint32_t g = 0; g < pair.G->order(); ++g) {
    const std::uint32_t from = part.coset_of[g];
    const std::uint32_t to = part.coset_of[pair.sigma_index(g)];
    if (z.perm[from] == kUnset) {
      z.perm[from] = to;
    } else {
      GELFAND_CHECK(z.perm[from] == to,
                    "sigma does not map double cosets to double cosets");
    }
  }
  for (std::uint32_t d = 0; d < z.perm.size(); ++d) {
    GELFAND_CHECK(z.perm[z.perm[d]] == d, "sigma on Z is not an involution");
    if (z.perm[d] == d) ++z.fixed_count;
  }
  return z;
}

std::size_t sigma_fixed_dim(const SigmaOnZ& z) {
  const std::size_t moved = z.size() - z.fixed_count;
  GELFAND_CHECK(moved % 2 == 0, "odd number of non-fixed cosets under an involution");
  return z.fixed_count + moved / 2;
}

std::uint64_t HeckeAlgebra::coeff(std::uint32_t d1, std::uint32_t d2,
                                  std::uint32_t d3) const {
  for (const auto& [d, c] : product(d1, d2)) {
    if (d == d3) return c;
  }
  return 0;
}

const HeckeAlgebra::Row& HeckeAlgebra::product(std::uint32_t d1, std::uint32_t d2) const {
  static const Row kEmpty;
  auto it = consts_.find({d1, d2});
  return it == consts_.end() ? kEmpty : it->second;
}

HeckeAlgebra hecke_structure(const SymPair& pair, const DoubleCosetPartition& part,
                             std::size_t coset_cap) {
  const std::size_t dim = part.count();
  if (dim > coset_cap) {
    throw CapExceeded("|Z| = " + std::to_string(dim) + " exceeds coset cap " +
                      std::to_string(coset_cap));
  }
  const GroupTable& G = *pair.G;
  std::vector<std::vector<std::uint32_t>> members(dim);
  for (std::uint32_t g = 0; g < G.order(); ++g) members[part.coset_of[g]].push_back(g);

  // counts[d1][d2] for a fixed target d3: y = x^-1 g3 ranges over D2 once per x.
  std::map<std::pair<std::uint32_t, std::uint32_t>, HeckeAlgebra::Row> consts;
  std::vector<std::uint64_t> counts(dim);
  for (std::uint32_t d1 = 0; d1 < dim; ++d1) {
    for (std::uint32_t d3 = 0; d3 < dim; ++d3) {
      std::fill(counts.begin(), counts.end(), 0);
      const Mat& g3 = G[part.reps[d3]];
      for (std::uint32_t x : members[d1]) {
        const std::uint32_t y = G.index_of(G.mul(G[G.inverse_index(x)], g3));
        ++counts[part.coset_of[y]];
      }
      for (std::uint32_t d2 = 0; d2 < dim; ++d2) {
        if (counts[d2]) consts[{d1, d2}].emplace_back(d3, counts[d2]);
      }
    }
  }
  return HeckeAlgebra(dim, std::move(consts));
}

bool is_commutative(const HeckeAlgebra& h) {
  for (std::uint32_t d1 = 0; d1 < h.dim(); ++d1) {
    for (std::uint32_t d2 = d1 + 1; d2 < h.dim(); ++d2) {
      if (h.product(d1, d2) != h.product(d2, d1)) return false;
    }
  }
  return true;
}

SemisimpleCosetReport semisimple_coset_report(const SymPair& pair,
                                              const DoubleCosetPartition& part,
                                              const SigmaOnZ& z) {
  SemisimpleCosetReport rep;
  rep.any_ss.assign(part.count(), false);
  rep.sigma_fixed.assign(part.count(), false);
  const GroupTable& G = *pair.G;
  for (std::uint32_t g = 0; g < G.order(); ++g) {
    const std::uint32_t d = part.coset_of[g];
    if (rep.any_ss[d]) continue;
    if (is_semisimple(G.field(), pair.symmetrize(G[g]))) rep.any_ss[d] = true;
  }
  for (std::uint32_t d = 0; d < part.count(); ++d) {
    rep.sigma_fixed[d] = z.is_fixed(d);
    ++rep.contingency[rep.any_ss[d]][rep.sigma_fixed[d]];
    if (rep.any_ss[d] && !rep.sigma_fixed[d]) rep.counterexamples.push_back(d);
  }
  return rep;
}

}  // namespace gelfand
