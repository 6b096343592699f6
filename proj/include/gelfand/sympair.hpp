#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "gelfand/matgrp.hpp"

namespace gelfand {

enum class InvolutionKind {
  TransposeInverse,  // theta(g) = (g^T)^-1, H = O_n
  InnerDiag,         // theta(g) = s g s^-1, s = diag(1_a, -1_b), H = GL_a x GL_b
  SymplecticTwist,   // theta(g) = J (g^T)^-1 J^-1, H = Sp_n
  GaloisTwist,       // entrywise x -> x^q on GL_n(F_{q^2}), H = GL_n(F_q)
};

struct InvolutionSpec {
  InvolutionKind kind = InvolutionKind::InnerDiag;
  std::uint32_t a = 0;       // InnerDiag split
  std::uint32_t b = 0;
  std::uint32_t base_q = 0;  // GaloisTwist: order of the fixed subfield

  static InvolutionSpec transpose_inverse() { return {InvolutionKind::TransposeInverse}; }
  static InvolutionSpec inner_diag(std::uint32_t a, std::uint32_t b) {
    return {InvolutionKind::InnerDiag, a, b};
  }
  static InvolutionSpec symplectic_twist() { return {InvolutionKind::SymplecticTwist}; }
  static InvolutionSpec galois_twist(std::uint32_t base_q) {
    return {InvolutionKind::GaloisTwist, 0, 0, base_q};
  }
};

// Throws std::invalid_argument on dimension mismatch, odd n for the
// symplectic twist, or a Galois twist over a field that is not F_{q^2}.
Mat theta_apply(const Field& F, const InvolutionSpec& spec, const Mat& g);
// sigma(g) = theta(g^-1)
Mat sigma_apply(const Field& F, const InvolutionSpec& spec, const Mat& g);
// s(g) = g sigma(g)
Mat symmetrize(const Field& F, const InvolutionSpec& spec, const Mat& g);

// Standard symplectic form [[0, I], [-I, 0]].
Mat symplectic_form(const Field& F, std::uint32_t n);

struct SymPair {
  std::string id;
  InvolutionSpec theta;
  std::uint32_t n = 0;
  std::uint32_t q = 0;  // order of the base field
  bool connectedness_trusted = false;
  std::shared_ptr<const GroupTable> G;
  std::shared_ptr<const GroupTable> H;
  std::vector<std::uint32_t> h_in_g;  // H index -> G index
  std::vector<bool> in_h;             // G index -> membership

  const Field& field() const { return G->field(); }
  std::size_t index() const { return G->order() / H->order(); }

  Mat apply_theta(const Mat& g) const { return theta_apply(field(), theta, g); }
  Mat sigma(const Mat& g) const { return sigma_apply(field(), theta, g); }
  Mat symmetrize(const Mat& g) const { return gelfand::symmetrize(field(), theta, g); }
  std::uint32_t sigma_index(std::uint32_t g) const;
};

// Builds (GL_n(F), GL_n(F)^theta). For the Galois twist F = F_{q^2}.
// Throws std::invalid_argument on even q or malformed parameters and
// CapExceeded when the group is too large.
SymPair build_pair(const InvolutionSpec& spec, std::uint32_t n, std::uint32_t q,
                   std::size_t group_cap = kDefaultGroupCap);

// Pair with a prescribed G and H = G^theta, for groups not of GL type.
SymPair build_pair_from_group(std::string id, const InvolutionSpec& spec,
                              std::shared_ptr<const GroupTable> G);

struct CatalogEntry {
  std::string id;
  std::string description;
  bool connectedness_trusted;
};

// Stable listing in a fixed order.
const std::vector<CatalogEntry>& pair_catalog();

// Parsed form of ids such as "gl-torus(1,1)", "gl-orthogonal" or
// "gl-galois(2)".
struct PairId {
  std::string base;
  InvolutionSpec theta;
  std::uint32_t n = 0;

  std::string canonical() const;
};

// Throws std::invalid_argument on unknown ids.
PairId parse_pair_id(const std::string& text);

SymPair build_catalog_pair(const PairId& id, std::uint32_t q,
                           std::size_t group_cap = kDefaultGroupCap);

}  // namespace gelfand
