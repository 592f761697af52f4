#include <doctest.h>

#include <random>

#include "psv/fock.hpp"
#include "psv/ideal.hpp"

using namespace psv;

namespace {

const Algebra& alg2() {
  static Algebra alg = build_algebra(2);
  return alg;
}

FockState state(std::vector<std::pair<int, int>> heis, std::vector<int> latt) {
  std::sort(heis.begin(), heis.end());
  return FockState{std::move(heis), std::move(latt)};
}

ModuleVec single(const FockState& s) {
  ModuleVec v = ModuleVec::zero(1);
  v.add_term({s}, 1);
  return v;
}

}  // namespace

TEST_CASE("vertex-operator coefficients act as expected on vacuum-like states") {
  const Algebra& alg = alg2();
  FockSpace fs(alg);
  // x_{a1}(-1) (1 x e^0) = 1 x e^{a1}
  ModuleVec v0 = single(state({}, {0, 0}));
  ModuleVec r = fs.act_x(0, -1, v0);
  ModuleVec expect = single(state({}, {2, -1}));
  CHECK(r == expect);
  // x_{a1}(-1) (1 x e^{l1}) = 0
  CHECK(fs.act_x(0, -1, single(state({}, {1, 0}))).is_zero());
  // x_{a1}(-2) (1 x e^0) = a1(-1) x e^{a1}
  ModuleVec r2 = fs.act_x(0, -2, v0);
  CHECK(r2 == single(state({{0, -1}}, {2, -1})));
}

TEST_CASE("the unit acts as identity and the diagonal action splits over factors") {
  const Algebra& alg = alg2();
  FockSpace fs(alg);
  ModuleVec hw = fs.highest_weight_vector(AffineWeight{{2, 0, 0}});
  CHECK(fs.act_elem(AlgElem::unit(), hw) == hw);
  ModuleVec img = fs.act_elem(AlgElem::gen(0, -1), hw);
  FockState vac = state({}, {0, 0});
  FockState shifted = state({}, {2, -1});
  ModuleVec expect = ModuleVec::zero(2);
  expect.add_term({shifted, vac}, 1);
  expect.add_term({vac, shifted}, 1);
  CHECK(img == expect);
}

TEST_CASE("level-1 power annihilation on the fundamental modules") {
  const Algebra& alg = alg2();
  FockSpace fs(alg);
  ModuleVec v1 = fs.highest_weight_vector(AffineWeight{{0, 1, 0}});
  Monomial sq;
  sq.factors.assign(2, LoopGen{0, -1});
  CHECK(fs.act_elem(AlgElem::monomial(sq), v1).is_zero());
}

TEST_CASE("highest-weight tuples follow the fixed factor order") {
  const Algebra& alg = alg2();
  FockSpace fs(alg);
  ModuleVec a = fs.highest_weight_vector(AffineWeight{{1, 0, 0}});
  REQUIRE(a.terms.size() == 1);
  CHECK(a.terms.begin()->first == FockTuple{state({}, {0, 0})});
  ModuleVec b = fs.highest_weight_vector(AffineWeight{{0, 1, 1}});
  CHECK(b.terms.begin()->first == FockTuple{state({}, {1, 0}), state({}, {0, 1})});
  ModuleVec c = fs.highest_weight_vector(AffineWeight{{1, 2, 0}});
  CHECK(c.terms.begin()->first ==
        FockTuple{state({}, {0, 0}), state({}, {1, 0}), state({}, {1, 0})});
}

TEST_CASE("translation operators shift lattice points with cocycle signs") {
  const Algebra& alg = alg2();
  FockSpace fs(alg);
  ModuleVec v0 = fs.highest_weight_vector(AffineWeight{{1, 0, 0}});
  ModuleVec v1 = fs.highest_weight_vector(AffineWeight{{0, 1, 0}});
  CHECK(fs.e_lambda_tensor({1, 0}, v0) == v1);
  // e_{l1} v_{l2} = eps(l1,l2) (1 x e^{l1+l2}), and l1+l2 = a1+a2 links it to
  // x_{a1+a2}(-1) v_0
  ModuleVec lhs = fs.e_lambda_tensor({1, 0}, fs.highest_weight_vector(AffineWeight{{0, 0, 1}}));
  ModuleVec rhs = fs.act_x(2, -1, v0);
  rhs *= Rat(alg.eps({1, 0}, {0, 1}));
  CHECK(lhs == rhs);
  // e_{l1} v_{l1} = eps(l1,l1) x_{a1}(-1) v_{l2}
  ModuleVec lhs2 = fs.e_lambda_tensor({1, 0}, v1);
  ModuleVec rhs2 = fs.act_x(0, -1, fs.highest_weight_vector(AffineWeight{{0, 0, 1}}));
  rhs2 *= Rat(alg.eps({1, 0}, {1, 0}));
  CHECK(lhs2 == rhs2);
  // e_0 is the identity
  CHECK(fs.e_lambda_tensor({0, 0}, v0) == v0);
}

TEST_CASE("graded bases enumerate the expected states") {
  const Algebra& alg = alg2();
  FockSpace fs(alg);
  AffineWeight vac{{1, 0, 0}};
  auto b1 = fs.graded_basis(vac, GradedIndex{1, {1, 0}});
  REQUIRE(b1.size() == 1);
  CHECK(b1[0] == FockTuple{state({}, {2, -1})});
  auto b0 = fs.graded_basis(vac, GradedIndex{0, {0, 0}});
  REQUIRE(b0.size() == 1);
  CHECK(b0[0] == FockTuple{state({}, {0, 0})});
  auto b2 = fs.graded_basis(vac, GradedIndex{2, {1, 0}});
  REQUIRE(b2.size() == 2);
  CHECK(b2[0] == FockTuple{state({{0, -1}}, {2, -1})});
  CHECK(b2[1] == FockTuple{state({{1, -1}}, {2, -1})});
}

TEST_CASE("abstract straightening and the lattice action share one convention") {
  const Algebra& alg = alg2();
  FockSpace fs(alg);
  std::vector<std::vector<int>> bases{{0, 0}, {1, 0}, {0, 1}};
  for (const auto& base : bases) {
    auto states = fs.states_upto(base, 3);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int m = -2; m <= 2; ++m)
          for (int p = -2; p <= 2; ++p)
            for (const auto& st : states) {
              ModuleVec v = single(st);
              ModuleVec lhs = fs.act_x(a, m, fs.act_x(b, p, v)) -
                              fs.act_x(b, p, fs.act_x(a, m, v));
              int s = alg.rs.sum_root(a, b);
              if (s < 0) {
                CHECK(lhs.is_zero());
              } else {
                ModuleVec rhs = fs.act_x(s, m + p, v);
                rhs *= alg.sc.value(a, b);
                CHECK(lhs == rhs);
              }
            }
  }
}

TEST_CASE("R truncations annihilate highest-weight vectors") {
  const Algebra& alg = alg2();
  FockSpace fs(alg);
  for (int k : {1, 2}) {
    AffineWeight lambda{{k - 1, 1, 0}};
    ModuleVec hw = fs.highest_weight_vector(lambda);
    for (int i = 1; i <= 2; ++i)
      for (int t = k + 1; t <= 5; ++t)
        CHECK(fs.act_elem(r_generator(alg, i, t, k), hw).is_zero());
  }
}

TEST_CASE("translation conjugation matches the mode shift") {
  const Algebra& alg = alg2();
  FockSpace fs(alg);
  // e_{lam} x_a(m) = c(a, -lam) x_a(m - <a,lam>) e_{lam} on V_P tensor powers
  std::vector<std::vector<int>> lams{{1, 0}, {0, 1}, {1, -1}, {-1, 1}};  // l1, l2, w1, w2
  AffineWeight lambda{{1, 1, 0}};
  ModuleVec hw = fs.highest_weight_vector(lambda);
  std::vector<ModuleVec> probes{hw, fs.act_x(0, -1, hw), fs.act_x(2, -2, fs.act_x(1, -1, hw))};
  for (const auto& lam : lams)
    for (int a = 0; a < 3; ++a)
      for (int m = -3; m <= 3; ++m)
        for (const auto& v : probes) {
          std::vector<int> neg(2);
          for (int i = 0; i < 2; ++i) neg[i] = -lam[i];
          int shift = RootSystemData::pair_wr(lam, alg.rs.positive_roots[a]);
          ModuleVec lhs = fs.e_lambda_tensor(lam, fs.act_x(a, m, v));
          ModuleVec rhs = fs.e_lambda_tensor(lam, v);
          rhs = fs.act_x(a, m - shift, rhs);
          rhs *= Rat(alg.commutator(alg.rs.root_to_fw(alg.rs.positive_roots[a]), neg));
          CHECK(lhs == rhs);
        }
}

TEST_CASE("single-factor commutation with e_mu") {
  const Algebra& alg = alg2();
  FockSpace fs(alg);
  std::vector<std::vector<int>> mus{{1, 0}, {0, 1}, {2, -1}, {1, 1}};
  auto states = fs.states_upto({0, 0}, 2);
  for (const auto& mu : mus)
    for (int a = 0; a < 3; ++a)
      for (int m = -2; m <= 2; ++m)
        for (const auto& st : states) {
          ModuleVec v = single(st);
          int shift = RootSystemData::pair_wr(mu, alg.rs.positive_roots[a]);
          ModuleVec lhs = fs.act_x(a, m, fs.e_lambda_tensor(mu, v));
          ModuleVec rhs = fs.e_lambda_tensor(mu, fs.act_x(a, m + shift, v));
          rhs *= Rat(alg.commutator(alg.rs.root_to_fw(alg.rs.positive_roots[a]), mu));
          CHECK(lhs == rhs);
        }
}

TEST_CASE("actions shift the relative grading by the operator grading") {
  const Algebra& alg = alg2();
  FockSpace fs(alg);
  std::mt19937 rng(11);
  auto states = fs.states_upto({1, 0}, 3);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(states.size()) - 1);
  for (int trial = 0; trial < 25; ++trial) {
    const FockState& st = states[pick(rng)];
    GradedIndex g = fs.relative_grading(st, {1, 0});
    for (int a = 0; a < 3; ++a)
      for (int m = -2; m <= 1; ++m) {
        auto img = fs.act_x_state(a, m, st);
        for (const auto& [t, c] : img) {
          GradedIndex gi = fs.relative_grading(t, {1, 0});
          CHECK(gi.weight == g.weight - m);
          for (int i = 0; i < 2; ++i)
            CHECK(gi.charges[i] == g.charges[i] + alg.rs.positive_roots[a][i]);
        }
      }
  }
}

TEST_CASE("fallback cocycle supports root translations but not weight ones") {
  RootSystemData rs = build_root_data(2);
  Algebra alg;
  alg.rs = rs;
  alg.cocycle = build_cocycle_fallback(rs);
  alg.sc = build_structure_constants(alg.rs, alg.cocycle);
  FockSpace fs(alg);
  ModuleVec v0 = fs.highest_weight_vector(AffineWeight{{1, 0, 0}});
  CHECK_NOTHROW(fs.e_lambda_tensor({2, -1}, v0));  // alpha_1 lies in Q
  CHECK_THROWS_AS(fs.e_lambda_tensor({1, 0}, v0), std::domain_error);
}

TEST_CASE("L(0) weights are exact rationals") {
  const Algebra& alg = alg2();
  CHECK(state({}, {1, 0}).l0_weight(alg.rs) == Rat(1, 3));
  CHECK(state({{0, -2}}, {0, 0}).l0_weight(alg.rs) == Rat(2));
}
