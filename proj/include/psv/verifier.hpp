#pragma once

#include <string>
#include <vector>

#include "psv/fock.hpp"
#include "psv/ideal.hpp"

namespace psv {

struct ComponentResult {
  GradedIndex g;
  long ambient = 0;
  long ideal_rank = 0;
  long quotient_dim = 0;
  long principal_dim = 0;
  bool equal = false;
};

/// Per-graded-component dimensions from both computations plus pass/fail
/// flags. quotient_dim >= principal_dim holds unconditionally; equality in
/// every component within budget is the truncated presentation check.
struct VerificationReport {
  int n = 0;
  int k = 0;
  std::vector<int> lambda;
  int max_weight = 0;
  int max_charge = 0;
  std::string mode;    // "theorem" for rank 2, "conjecture" otherwise
  std::string status;  // PASS | MISMATCH | UNSTABLE
  int growth_steps = 0;
  int closure_passes = 0;
  Window final_window;
  std::vector<ComponentResult> components;
  std::vector<GradedIndex> mismatches;

  bool pass() const { return status == "PASS"; }
  std::string to_json() const;
  std::string to_tsv() const;
};

struct VerifyOptions {
  int jobs = 1;
  int growth_cap = 8;
  int mode_bound = 0;  // 0 = derive from the window
  std::string cache_dir;
};

/// dim W(Lambda)_g: rank of the images of the negative-mode monomial basis
/// under the action on the highest-weight vector.
long principal_dim(const FockSpace& fs, const AffineWeight& lambda, const GradedIndex& g);

/// Two-sided truncated verification of Ker f_Lambda = I_Lambda on every
/// component with weight <= w_max and total charge <= charge_max.
VerificationReport verify_presentation(const Algebra& alg, const AffineWeight& lambda, int w_max,
                                       int charge_max, const VerifyOptions& opts = {});

/// Exact graded-dimension table of W(Lambda): rows (weight, charges, dim).
struct QSeriesRow {
  GradedIndex g;
  long dim = 0;
};
std::vector<QSeriesRow> qseries(const Algebra& alg, const AffineWeight& lambda, int w_max,
                                int charge_max, int jobs = 1);
std::string qseries_tsv(const Algebra& alg, const AffineWeight& lambda,
                        const std::vector<QSeriesRow>& rows);
std::string qseries_json(const Algebra& alg, const AffineWeight& lambda,
                         const std::vector<QSeriesRow>& rows);

struct LemmaCase {
  std::string generator;
  int map_index = 0;  // which of the two maps
  std::vector<int> target;
  bool member = false;
};

struct LemmaReport {
  std::string which;  // "tau" | "sigma"
  std::vector<int> source;
  bool pass = false;
  std::vector<LemmaCase> cases;
  std::string to_text() const;
};

/// tau_{lambda_i,nu}^{Lambda}(I_Lambda) lands in the cyclically shifted
/// ideal, checked generator by generator up to weight w_max.
LemmaReport lemma_check_tau(const Algebra& alg, const AffineWeight& lambda, int w_max,
                            int growth_cap = 6);

/// sigma_{omega_i,nu}(I_{k1 Lambda_1 + k2 Lambda_2}) lands in the shifted
/// ideals, checked generator by generator up to weight w_max.
LemmaReport lemma_check_sigma(const Algebra& alg, int k1, int k2, int w_max, int growth_cap = 6);

// Seed generators of I_Lambda with weight <= w_cap plus a slice of the
// nonnegative-mode family x_alpha(m), 0 <= m <= nonneg_mode_cap.
std::vector<AlgElem> ideal_generators_upto(const Algebra& alg, const IdealSpec& spec, int w_cap,
                                           int nonneg_mode_cap);

}  // namespace psv
