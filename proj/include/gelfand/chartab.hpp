#pragma once

#include <cstdint>
#include <vector>

#include "gelfand/matgrp.hpp"
#include "gelfand/sympair.hpp"

namespace gelfand {

struct ClassData {
  ConjugacyClasses classes;
  std::vector<std::uint64_t> rep_orders;  // element order of each class
  std::uint64_t exponent = 1;             // lcm of element orders
  std::uint64_t group_order = 0;
  std::uint32_t identity_class = 0;

  std::size_t count() const { return classes.count(); }
  std::size_t size(std::size_t c) const { return classes.size(c); }
};

ClassData class_data(const GroupTable& G);

// a_ijk = #{(x, y) in C_i x C_j : x y = z} for the representative z of C_k,
// returned as a vector over k.
std::vector<std::uint64_t> class_mult_coeffs(const GroupTable& G, const ClassData& cd,
                                             std::uint32_t i, std::uint32_t j);

// M_i with (M_i)[j][k] = a_ijk; the central character vector
// (omega(K_k))_k is a right eigenvector with eigenvalue omega(K_i).
std::vector<std::vector<std::uint64_t>> class_matrix(const GroupTable& G,
                                                     const ClassData& cd,
                                                     std::uint32_t i);

// Character values as residues modulo a prime ell = 1 (mod exponent) with
// ell > 2|G|; irreducibles are rows, classes are columns.
struct CharacterTable {
  std::uint64_t modulus = 0;
  std::uint64_t root = 0;  // primitive exponent-th root of unity mod ell
  std::vector<std::vector<std::uint64_t>> table;
  std::vector<std::uint64_t> degrees;
  std::vector<std::uint64_t> class_sizes;
  std::vector<std::uint32_t> inverse_class;
  std::uint64_t group_order = 0;

  std::size_t count() const { return degrees.size(); }
};

// Smallest prime ell = 1 (mod exponent) with ell > 2 * group_order.
// Throws std::runtime_error when none exists below 2^31.
std::uint64_t choose_char_modulus(std::uint64_t exponent, std::uint64_t group_order);

// Dixon's method: simultaneous eigenvectors of M_1, M_2, ... over GF(ell),
// splitting common eigenspaces in class order. Throws InvariantViolation
// if splitting fails or the completed table is not orthogonal.
CharacterTable dixon_table(const GroupTable& G, const ClassData& cd);

// sum_k |C_k| a(g_k) b(g_k^-1) / |G| mod ell
std::uint64_t class_inner_product(const CharacterTable& t,
                                  const std::vector<std::uint64_t>& a,
                                  const std::vector<std::uint64_t>& b);

// pi(g_k) = #{cosets xH : g_k x H = x H}, exact, per class representative.
std::vector<std::uint64_t> permutation_character(const SymPair& pair, const ClassData& cd);

struct Multiplicity {
  std::uint32_t irrep = 0;
  std::uint64_t degree = 0;
  std::uint64_t mult = 0;
};

struct MultiplicityReport {
  std::vector<Multiplicity> mults;  // one entry per irreducible, table order
  std::size_t num_constituents = 0;
  std::size_t num_mult_one = 0;
  std::uint64_t sum_m_sq = 0;
  std::uint64_t sum_m_deg = 0;
};

// m_rho = <pi, chi_rho>, lifted from residues. Throws InvariantViolation on
// a residue that does not lift below ell/2.
MultiplicityReport multiplicities(const CharacterTable& table,
                                  const std::vector<std::uint64_t>& pi);

}  // namespace gelfand
