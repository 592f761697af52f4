#pragma once

#include <map>
#include <vector>

#include "psv/root_data.hpp"

namespace psv {

/// A loop generator x_alpha(m): positive-root index plus integer mode.
struct LoopGen {
  int root;
  int mode;

  friend bool operator==(const LoopGen&, const LoopGen&) = default;
};

// Total order used by the PBW normal form: all negative modes before all
// nonnegative modes, then root index, then mode.
inline int gen_sign_class(const LoopGen& g) { return g.mode < 0 ? 0 : 1; }

inline bool gen_less(const LoopGen& a, const LoopGen& b) {
  int sa = gen_sign_class(a), sb = gen_sign_class(b);
  if (sa != sb) return sa < sb;
  if (a.root != b.root) return a.root < b.root;
  return a.mode < b.mode;
}

/// An ordered product of loop generators in PBW normal form (factors sorted
/// nondecreasing under the generator order; repetitions allowed).
struct Monomial {
  std::vector<LoopGen> factors;

  static Monomial one() { return Monomial{}; }
  bool is_one() const { return factors.empty(); }

  int weight() const;                                    // sum of -mode
  std::vector<int> charges(const RootSystemData&) const; // sum of root coords
  int total_charge(const RootSystemData&) const;

  // True when every mode is <= -1; with sorted factors this is a check on
  // the last factor.
  bool negative_only() const { return factors.empty() || factors.back().mode < 0; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Exact-rational linear combination of normal-form monomials.
struct AlgElem {
  std::map<Monomial, Rat, MonomialLess> terms;

  static AlgElem zero() { return {}; }
  static AlgElem unit();
  static AlgElem gen(int root, int mode);
  static AlgElem monomial(Monomial m, Rat coef = 1);

  bool is_zero() const { return terms.empty(); }
  void add_term(const Monomial& m, const Rat& c);  // drops zero results

  AlgElem& operator+=(const AlgElem& o);
  AlgElem& operator-=(const AlgElem& o);
  AlgElem& operator*=(const Rat& c);
  friend AlgElem operator+(AlgElem a, const AlgElem& b) { return a += b; }
  friend AlgElem operator-(AlgElem a, const AlgElem& b) { return a -= b; }
  friend AlgElem operator*(const Rat& c, AlgElem a) { return a *= c; }
  friend bool operator==(const AlgElem& a, const AlgElem& b) { return a.terms == b.terms; }
};

/// A dominant integral affine weight (k_0,...,k_n).
struct AffineWeight {
  std::vector<int> coords;

  int level() const;
  // Fundamental-weight coords of the finite part sum_{i>=1} k_i lambda_i.
  std::vector<int> finite_part() const;
  // h_Lambda = <finite, finite + alpha_1 + ... + alpha_n> / (2(k+n+1)).
  Rat conformal_shift(const RootSystemData&) const;

  friend bool operator==(const AffineWeight&, const AffineWeight&) = default;
};

/// A (weight, charge-vector) grading label.
struct GradedIndex {
  int weight = 0;
  std::vector<int> charges;

  int total_charge() const;

  friend bool operator==(const GradedIndex&, const GradedIndex&) = default;
};

bool operator<(const GradedIndex& a, const GradedIndex& b);

// --- operations ---------------------------------------------------------

// Straightens a raw factor word into normal form.
AlgElem straighten(const Algebra& alg, std::vector<LoopGen> word, const Rat& coef);

// Fully straightened bilinear product.
AlgElem multiply(const Algebra& alg, const AlgElem& a, const AlgElem& b);

// tau_{lambda,nu}: x_beta(m) -> nu(beta) x_beta(m - <lambda,beta>), extended
// as an algebra automorphism. lambda in fundamental-weight coords; nu given
// by its nonzero rational values on the simple roots.
AlgElem tau(const Algebra& alg, const std::vector<int>& lambda_fw, const std::vector<Rat>& nu,
            const AlgElem& a);

// tau_{lambda_i,nu}^{Lambda} for sl(3): tau followed by the trailing factors
// x_{alpha_1}(-1)^{k_1} x_{alpha_1+alpha_2}(-1)^{k_2} (i=1), respectively
// x_{alpha_2}(-1)^{k_2} x_{alpha_1+alpha_2}(-1)^{k_1} (i=2). Rejects rank != 2.
AlgElem tau_affine(const Algebra& alg, int i, const std::vector<Rat>& nu,
                   const AffineWeight& lambda, const AlgElem& a);

// sigma_{omega_i,nu}^{k_1 Lambda_1 + k_2 Lambda_2} for sl(3), with
// omega_i = alpha_i - lambda_i. Rejects rank != 2.
AlgElem sigma_affine(const Algebra& alg, int i, const std::vector<Rat>& nu, int k1, int k2,
                     const AlgElem& a);

// All normal-form monomials at the given grading with factor modes in
// [mode_floor, mode_ceiling] (<= -1 when negative_only). Canonically ordered.
std::vector<Monomial> enumerate_monomials(const RootSystemData& rs, const GradedIndex& g,
                                          int mode_floor, int mode_ceiling, bool negative_only);

// Grading helpers.
GradedIndex grading_of(const RootSystemData& rs, const Monomial& m);
// Splits into homogeneous components.
std::map<GradedIndex, AlgElem> split_by_grading(const RootSystemData& rs, const AlgElem& a);
// Projection U(nbar) -> U(nbar_-): drops monomials with a nonnegative mode.
AlgElem project_negative(const AlgElem& a);

}  // namespace psv
