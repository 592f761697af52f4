#pragma once

#include <map>
#include <vector>

#include "psv/rational.hpp"

namespace psv {

/// Static root-system tables for sl(n+1), simple-root basis.
///
/// Roots are stored as coordinate vectors in the simple-root basis; weights
/// in the fundamental-weight basis. Conversion uses the Cartan matrix.
struct RootSystemData {
  int rank = 0;
  std::vector<std::vector<int>> cartan;              // <alpha_i, alpha_j>
  std::vector<std::vector<int>> positive_roots;      // simple roots first, then by height
  std::vector<std::vector<Rat>> fund_weight_pairing; // <lambda_i, lambda_j> = cartan^{-1}
  std::vector<std::vector<int>> sum_table;           // [a][b] -> index of alpha+beta, or -1

  int num_positive() const { return static_cast<int>(positive_roots.size()); }

  // <alpha, beta> for two root-coordinate vectors.
  int pair_rr(const std::vector<int>& a, const std::vector<int>& b) const;

  // <mu, beta> with mu in fundamental-weight coords and beta in root coords.
  // Equals the plain dot product since <lambda_i, alpha_j> = delta_ij.
  static int pair_wr(const std::vector<int>& mu, const std::vector<int>& beta);

  // <mu, nu> for two fundamental-weight coordinate vectors.
  Rat pair_ww(const std::vector<int>& mu, const std::vector<int>& nu) const;

  // Fundamental-weight coords of a root lattice element given in root coords.
  std::vector<int> root_to_fw(const std::vector<int>& beta) const;

  // Root coords of a fundamental-weight vector, or empty if not in Q.
  std::vector<int> fw_to_root(const std::vector<int>& mu) const;

  int root_index(const std::vector<int>& coords) const;  // -1 if not a positive root
  int sum_root(int a, int b) const { return sum_table[a][b]; }
  int height(int root) const;
};

/// Builds the A_n tables. Rejects n < 1.
RootSystemData build_root_data(int n);

/// +-1 bimultiplicative twisting data on the weight lattice with
/// eps(a,b)/eps(b,a) = (-1)^<a,b> on the root lattice.
///
/// Full mode carries a table eps(lambda_i, lambda_j) extended
/// bimultiplicatively over P x P. The fallback carries a root-basis table on
/// Q x Q only; second arguments still range over P via the coset
/// decomposition mu = lambda_cls + beta, with eps(alpha, lambda_cls) := 1.
struct Cocycle {
  bool full_table = false;
  std::vector<std::vector<int>> eps_fw;  // eps(lambda_i, lambda_j), full mode
  std::vector<std::vector<int>> eps_q;   // eps(alpha_i, alpha_j), fallback mode

  // eps(lam, mu), both in fundamental-weight coords. In fallback mode lam
  // must lie in Q; throws std::domain_error otherwise.
  int eps(const RootSystemData& rs, const std::vector<int>& lam, const std::vector<int>& mu) const;

  // eps(alpha, mu) for a positive-root index; defined in both modes.
  int eps_root(const RootSystemData& rs, int root, const std::vector<int>& mu) const;

  // Commutator map c(lam, mu) = eps(lam, mu) * eps(mu, lam) (values +-1).
  int commutator(const RootSystemData& rs, const std::vector<int>& lam,
                 const std::vector<int>& mu) const;
};

/// Solves for a +-1 table on P x P satisfying the Q x Q commutator condition;
/// falls back to the root-basis cocycle when no table exists. The condition
/// is machine-checked over all pairs of simple roots before returning.
Cocycle build_cocycle(const RootSystemData& rs);

/// The fallback construction, exposed directly for testing.
Cocycle build_cocycle_fallback(const RootSystemData& rs);

/// [x_alpha, x_beta] = C_{alpha,beta} x_{alpha+beta}, defined from the
/// cocycle so the abstract algebra and the lattice action share one
/// convention: C_{alpha,beta} = eps(alpha,beta) when alpha+beta is a root.
struct StructureConstants {
  std::vector<std::vector<Rat>> c;  // indexed by positive-root indices; 0 when alpha+beta is not a root

  const Rat& value(int a, int b) const { return c[a][b]; }
};

StructureConstants build_structure_constants(const RootSystemData& rs, const Cocycle& eps);

/// One-stop bundle consumed by every other module. Immutable after
/// construction; safe to share across concurrent workers.
struct Algebra {
  RootSystemData rs;
  Cocycle cocycle;
  StructureConstants sc;

  int rank() const { return rs.rank; }
  int eps(const std::vector<int>& lam, const std::vector<int>& mu) const {
    return cocycle.eps(rs, lam, mu);
  }
  int eps_root(int root, const std::vector<int>& mu) const {
    return cocycle.eps_root(rs, root, mu);
  }
  int commutator(const std::vector<int>& lam, const std::vector<int>& mu) const {
    return cocycle.commutator(rs, lam, mu);
  }
};

Algebra build_algebra(int n);

}  // namespace psv
