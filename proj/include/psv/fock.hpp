#pragma once

#include <map>
#include <string>
#include <vector>

#include "psv/upbw.hpp"

namespace psv {

/// A basis state of M(1) (x) C[P]: a Heisenberg monomial
/// alpha_{i_1}(m_1)...alpha_{i_r}(m_r) applied to the vacuum, tensored with a
/// lattice point in fundamental-weight coordinates.
struct FockState {
  std::vector<std::pair<int, int>> heis;  // (simple-root index, mode <= -1), sorted
  std::vector<int> lattice;

  int heis_weight() const;                     // sum of -modes
  Rat l0_weight(const RootSystemData&) const;  // heis_weight + <mu,mu>/2

  friend bool operator==(const FockState&, const FockState&) = default;
  friend auto operator<=>(const FockState&, const FockState&) = default;
};

using FockTuple = std::vector<FockState>;

/// Exact-rational combination of k-fold tensors of Fock states.
struct ModuleVec {
  int level = 1;
  std::map<FockTuple, Rat> terms;

  static ModuleVec zero(int level) { return ModuleVec{level, {}}; }
  bool is_zero() const { return terms.empty(); }
  void add_term(const FockTuple& t, const Rat& c);
  ModuleVec& operator+=(const ModuleVec& o);
  ModuleVec& operator-=(const ModuleVec& o);
  ModuleVec& operator*=(const Rat& c);
  friend ModuleVec operator+(ModuleVec a, const ModuleVec& b) { return a += b; }
  friend ModuleVec operator-(ModuleVec a, const ModuleVec& b) { return a -= b; }
  friend bool operator==(const ModuleVec& a, const ModuleVec& b) { return a.terms == b.terms; }
};

std::string to_text(const FockState& s);
std::string to_text(const FockTuple& t);

/// The lattice construction: vertex-operator coefficients x_alpha(m) acting
/// on level-k tensor powers of V_P by the diagonal action, translation
/// operators e_lambda, and graded bases.
class FockSpace {
 public:
  explicit FockSpace(const Algebra& alg) : alg_(alg) {}

  const Algebra& algebra() const { return alg_; }

  // x_alpha(m) on a single Fock state: apply E^+(-alpha,x), the
  // eps(alpha,mu)-signed lattice shift, E^-(-alpha,x) and x^<alpha,mu>, then
  // extract the coefficient of x^{-m-1}. Exact.
  std::map<FockState, Rat> act_x_state(int root, int mode, const FockState& s) const;

  // Diagonal action on a level-k vector.
  ModuleVec act_x(int root, int mode, const ModuleVec& v) const;

  // Linear action of an enveloping-algebra element; monomial factors are
  // applied right-to-left.
  ModuleVec act_elem(const AlgElem& a, const ModuleVec& v) const;

  // k_0 factors 1(x)e^0, then k_i factors 1(x)e^{lambda_i} in increasing i.
  ModuleVec highest_weight_vector(const AffineWeight& lambda) const;

  // Per tensor factor: w(x)e^mu -> eps(lam,mu) w(x)e^{lam+mu}. In fallback
  // cocycle mode lam must lie in the root lattice.
  ModuleVec e_lambda_tensor(const std::vector<int>& lam_fw, const ModuleVec& v) const;

  // All tuples at grading g relative to highest_weight_vector(lambda).
  std::vector<FockTuple> graded_basis(const AffineWeight& lambda, const GradedIndex& g) const;

  // Single-factor spanning set: all states over base point `base_fw` with
  // relative weight <= max_rel_weight (all charges).
  std::vector<FockState> states_upto(const std::vector<int>& base_fw, int max_rel_weight) const;

  // Relative (weight, charges) of a state over a base point.
  GradedIndex relative_grading(const FockState& s, const std::vector<int>& base_fw) const;

 private:
  const Algebra& alg_;
};

}  // namespace psv
