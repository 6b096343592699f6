#include "gelfand/sympair.hpp"

#include <regex>
#include <stdexcept>
#include <string>
#include <utility>

#include "gelfand/errors.hpp"

namespace gelfand {

namespace {

void check_dim(const InvolutionSpec& spec, const Mat& g) {
  switch (spec.kind) {
    case InvolutionKind::InnerDiag:
      if (g.n != spec.a + spec.b) {
        throw std::invalid_argument("inner-diag: dimension does not match split");
      }
      break;
    case InvolutionKind::SymplecticTwist:
      if (g.n % 2) throw std::invalid_argument("symplectic-twist needs even n");
      break;
    default:
      break;
  }
}

bool is_sub_one(std::uint32_t i, const InvolutionSpec& spec) { return i >= spec.a; }

std::string with_dim(const std::string& base, std::uint32_t n) {
  return n == 2 ? base : base + "(" + std::to_string(n) + ")";
}

bool trusted(InvolutionKind kind) {
  // O_n is disconnected, so semisimple stabilizers need not be connected.
  return kind != InvolutionKind::TransposeInverse;
}

std::string id_for(const InvolutionSpec& spec, std::uint32_t n) {
  switch (spec.kind) {
    case InvolutionKind::InnerDiag:
      return "gl-torus(" + std::to_string(spec.a) + "," + std::to_string(spec.b) + ")";
    case InvolutionKind::TransposeInverse:
      return with_dim("gl-orthogonal", n);
    case InvolutionKind::SymplecticTwist:
      return with_dim("gl-symplectic", n);
    case InvolutionKind::GaloisTwist:
      return with_dim("gl-galois", n);
  }
  return "?";
}

}  // namespace

Mat symplectic_form(const Field& F, std::uint32_t n) {
  if (n % 2) throw std::invalid_argument("symplectic form needs even n");
  const std::uint32_t m = n / 2;
  Mat J(n);
  for (std::uint32_t i = 0; i < m; ++i) {
    J(i, m + i) = 1;
    J(m + i, i) = F.neg(1);
  }
  return J;
}

Mat theta_apply(const Field& F, const InvolutionSpec& spec, const Mat& g) {
  check_dim(spec, g);
  switch (spec.kind) {
    case InvolutionKind::TransposeInverse:
      return mat_inv(F, mat_transpose(g));
    case InvolutionKind::InnerDiag: {
      Mat r = g;
      for (std::uint32_t i = 0; i < g.n; ++i)
        for (std::uint32_t j = 0; j < g.n; ++j)
          if (is_sub_one(i, spec) != is_sub_one(j, spec)) r(i, j) = F.neg(g(i, j));
      return r;
    }
    case InvolutionKind::SymplecticTwist: {
      const Mat J = symplectic_form(F, g.n);
      return mat_mul(F, mat_mul(F, J, mat_inv(F, mat_transpose(g))), mat_inv(F, J));
    }
    case InvolutionKind::GaloisTwist: {
      if (std::uint64_t(spec.base_q) * spec.base_q != F.order()) {
        throw std::invalid_argument("galois-twist: field is not F_{q^2}");
      }
      const std::uint32_t steps = F.degree() / 2;
      return mat_map(g, [&](Elt x) {
        for (std::uint32_t s = 0; s < steps; ++s) x = F.frobenius(x);
        return x;
      });
    }
  }
  throw std::invalid_argument("unknown involution kind");
}

Mat sigma_apply(const Field& F, const InvolutionSpec& spec, const Mat& g) {
  return theta_apply(F, spec, mat_inv(F, g));
}

Mat symmetrize(const Field& F, const InvolutionSpec& spec, const Mat& g) {
  return mat_mul(F, g, sigma_apply(F, spec, g));
}

std::uint32_t SymPair::sigma_index(std::uint32_t g) const {
  return G->index_of(sigma((*G)[g]));
}

SymPair build_pair_from_group(std::string id, const InvolutionSpec& spec,
                              std::shared_ptr<const GroupTable> G) {
  SymPair pair;
  pair.id = std::move(id);
  pair.theta = spec;
  pair.n = G->dim();
  pair.q = spec.kind == InvolutionKind::GaloisTwist ? spec.base_q : G->field().order();
  pair.connectedness_trusted = trusted(spec.kind);
  const Field& F = G->field();
  auto H = std::make_shared<const GroupTable>(
      subgroup_where(*G, [&](const Mat& g) { return theta_apply(F, spec, g) == g; }));
  pair.in_h.assign(G->order(), false);
  pair.h_in_g.reserve(H->order());
  for (const Mat& h : H->elems()) {
    const std::uint32_t gi = G->index_of(h);
    pair.h_in_g.push_back(gi);
    pair.in_h[gi] = true;
  }
  pair.G = std::move(G);
  pair.H = std::move(H);
  return pair;
}

SymPair build_pair(const InvolutionSpec& spec, std::uint32_t n, std::uint32_t q,
                   std::size_t group_cap) {
  FieldSpec base = ff_make_order(q);
  if (base.p == 2) {
    throw std::invalid_argument("symmetric pairs need odd characteristic (q = " +
                                std::to_string(q) + ")");
  }
  InvolutionSpec theta = spec;
  FieldSpec fs = base;
  switch (spec.kind) {
    case InvolutionKind::InnerDiag:
      if (spec.a + spec.b != n || spec.a == 0 || spec.b == 0) {
        throw std::invalid_argument("inner-diag split must be positive and sum to n");
      }
      break;
    case InvolutionKind::SymplecticTwist:
      if (n % 2) throw std::invalid_argument("symplectic-twist needs even n");
      break;
    case InvolutionKind::GaloisTwist:
      fs = ff_make(base.p, 2 * base.k);
      theta.base_q = q;
      break;
    case InvolutionKind::TransposeInverse:
      break;
  }
  if (n < 1) throw std::invalid_argument("dimension must be >= 1");
  auto field = std::make_shared<const Field>(fs, kMaxFieldOrder);
  auto G = std::make_shared<const GroupTable>(enumerate_gl(n, field, group_cap));
  if (G->order() > group_cap) {
    throw CapExceeded("group order " + std::to_string(G->order()) + " exceeds cap");
  }
  SymPair pair = build_pair_from_group(id_for(theta, n), theta, std::move(G));
  pair.q = q;
  return pair;
}

const std::vector<CatalogEntry>& pair_catalog() {
  static const std::vector<CatalogEntry> catalog = {
      {"gl-torus(a,b)", "GL_{a+b}(F_q) with H = GL_a x GL_b, theta = conjugation by diag(1_a,-1_b)",
       true},
      {"gl-orthogonal", "GL_n(F_q) with H = O_n, theta(g) = (g^T)^-1; n defaults to 2", false},
      {"gl-symplectic", "GL_n(F_q) with H = Sp_n, theta(g) = J (g^T)^-1 J^-1; n even, defaults to 2",
       true},
      {"gl-galois", "GL_n(F_{q^2}) with H = GL_n(F_q), theta = entrywise Frobenius; n defaults to 2",
       true},
  };
  return catalog;
}

std::string PairId::canonical() const { return id_for(theta, n); }

PairId parse_pair_id(const std::string& text) {
  static const std::regex torus(R"(gl-torus\((\d+),(\d+)\))");
  static const std::regex other(R"((gl-orthogonal|gl-symplectic|gl-galois)(?:\((\d+)\))?)");
  std::smatch m;
  PairId id;
  if (std::regex_match(text, m, torus)) {
    id.base = "gl-torus";
    const auto a = static_cast<std::uint32_t>(std::stoul(m[1]));
    const auto b = static_cast<std::uint32_t>(std::stoul(m[2]));
    if (a == 0 || b == 0) throw std::invalid_argument("gl-torus split must be positive");
    id.theta = InvolutionSpec::inner_diag(a, b);
    id.n = a + b;
    return id;
  }
  if (std::regex_match(text, m, other)) {
    id.base = m[1];
    id.n = m[2].matched ? static_cast<std::uint32_t>(std::stoul(m[2])) : 2;
    if (id.n == 0) throw std::invalid_argument("dimension must be positive");
    if (id.base == "gl-orthogonal") {
      id.theta = InvolutionSpec::transpose_inverse();
    } else if (id.base == "gl-symplectic") {
      if (id.n % 2) throw std::invalid_argument("gl-symplectic needs even n");
      id.theta = InvolutionSpec::symplectic_twist();
    } else {
      id.theta = InvolutionSpec::galois_twist(0);
    }
    return id;
  }
  throw std::invalid_argument("unknown pair id '" + text + "'");
}

SymPair build_catalog_pair(const PairId& id, std::uint32_t q, std::size_t group_cap) {
  return build_pair(id.theta, id.n, q, group_cap);
}

}  // namespace gelfand
