#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "psv/linalg.hpp"
#include "psv/upbw.hpp"

namespace psv {

/// Truncation parameters for the graded closure.
struct Window {
  int w_max = 0;        // weight cap on stored components
  int charge_max = 0;   // total-charge cap
  int mode_bound = 0;   // |m| cap for closure multipliers
  int t_max = 0;        // largest R-generator truncation weight
  int max_passes = 64;

  static Window defaults(int w_max, int charge_max) {
    return Window{w_max, charge_max, 2 * w_max, w_max, 64};
  }
  std::string signature() const;
};

/// Generator families for a left ideal of U(nbar): the R-truncations, the
/// nonnegative-mode part (implicit via projection), and the power generators
/// x_alpha(-1)^{e_alpha}.
struct IdealSpec {
  int level = 1;
  bool include_r = true;
  std::map<int, int> powers;           // positive-root index -> exponent
  std::optional<AffineWeight> lambda;  // set for the standard I_Lambda

  // I_Lambda with exponents k+1-<alpha, finite part> for every positive root.
  static IdealSpec standard(const Algebra& alg, const AffineWeight& lambda);
  // A custom combination (used for redundancy and commutation facts).
  static IdealSpec custom(int level, std::map<int, int> powers, bool include_r = true);

  // Seed generators of weight <= w_cap (the nonnegative-mode family is
  // implicit and not listed). Mode cap bounds the listed nonnegative-mode
  // witnesses where callers want them explicitly.
  std::vector<AlgElem> seed_generators(const Algebra& alg, int t_cap) const;
};

// The truncation R_{-1,t}^i: all-negative-mode part of the coefficient of
// the (k+1)-st vertex-operator power; i is 1-based. Rejects t < k+1.
AlgElem r_generator(const Algebra& alg, int i, int t, int level);

/// One graded component of the ideal image in U(nbar_-).
struct GradedSubspace {
  GradedIndex g;
  std::vector<Monomial> ambient;              // canonical order
  std::map<Monomial, int, MonomialLess> column;  // monomial -> ambient index
  RrefMatrix span;
  std::vector<AlgElem> inserted;     // originals whose insertion grew the rank
  size_t expanded = 0;               // prefix of `inserted` already multiplied out
};

/// Joint fixpoint closure of the ideal image over every graded component in
/// the window: seed rows are projected generators; each pass left-multiplies
/// unexpanded rows by single generators x_alpha(m) and projects.
class IdealClosure {
 public:
  IdealClosure(const Algebra& alg, IdealSpec spec, Window window);

  // Runs to the fixpoint. Returns false when the pass cap was hit with work
  // remaining (the window must grow).
  bool run();

  const Window& window() const { return window_; }
  const IdealSpec& spec() const { return spec_; }
  int passes() const { return passes_; }

  int rank(const GradedIndex& g) const;
  long ambient_dim(const GradedIndex& g);
  const GradedSubspace* component(const GradedIndex& g) const;
  const std::map<GradedIndex, GradedSubspace>& components() const { return comps_; }

  // True when the projection of `a` lies in the span componentwise.
  // Components outside the window are rejected with std::invalid_argument.
  bool contains(const AlgElem& a);

  // Adopts the rows of a closure for a smaller window as seeds.
  void warm_start(const IdealClosure& prev);

  // Canonical one-row-per-line serialization of a component's span.
  std::vector<std::string> rows_text(const GradedIndex& g) const;
  void load_component(const GradedIndex& g, const std::vector<std::string>& rows, int passes);

 private:
  GradedSubspace& touch(const GradedIndex& g);
  bool insert_row(const AlgElem& homogeneous);
  std::vector<Rat> row_of(const GradedSubspace& c, const AlgElem& a) const;

  const Algebra& alg_;
  IdealSpec spec_;
  Window window_;
  std::map<GradedIndex, GradedSubspace> comps_;
  int passes_ = 0;
  bool seeded_ = false;
};

/// One graded component of the ideal image, computed by a fresh closure over
/// the window. Throws std::runtime_error on non-stabilization.
GradedSubspace ideal_graded_component(const Algebra& alg, const IdealSpec& spec,
                                      const GradedIndex& g, const Window& window);

/// dim of the graded piece of U(nbar_-)/image at g: ambient minus rank.
/// Throws std::runtime_error on non-stabilization.
long quotient_dim(const Algebra& alg, const IdealSpec& spec, const GradedIndex& g,
                  const Window& window);

/// Truncated ideal membership with internal window growth: a `true` answer is
/// exact; `false` means not reachable within `growth_cap` enlargements.
bool membership(const Algebra& alg, const IdealSpec& spec, const AlgElem& a, int growth_cap = 6);

}  // namespace psv
