#include <doctest.h>

#include <set>

#include "psv/root_data.hpp"

using namespace psv;

TEST_CASE("A_2 tables match the defining data") {
  RootSystemData rs = build_root_data(2);
  CHECK(rs.rank == 2);
  CHECK(rs.cartan == std::vector<std::vector<int>>{{2, -1}, {-1, 2}});
  CHECK(rs.positive_roots ==
        std::vector<std::vector<int>>{{1, 0}, {0, 1}, {1, 1}});
  CHECK(rs.fund_weight_pairing[0][0] == Rat(2, 3));
  CHECK(rs.fund_weight_pairing[1][1] == Rat(2, 3));
  CHECK(rs.fund_weight_pairing[0][1] == Rat(1, 3));
}

TEST_CASE("rank 1 and rejection of rank 0") {
  RootSystemData rs = build_root_data(1);
  CHECK(rs.positive_roots == std::vector<std::vector<int>>{{1}});
  CHECK(rs.cartan == std::vector<std::vector<int>>{{2}});
  CHECK_THROWS_AS(build_root_data(0), std::invalid_argument);
}

TEST_CASE("A_3 positive roots are exactly the interval vectors") {
  RootSystemData rs = build_root_data(3);
  // independent enumeration of contiguous {0,1} vectors
  std::set<std::vector<int>> expect;
  for (int s = 0; s < 3; ++s)
    for (int e = s; e < 3; ++e) {
      std::vector<int> v(3, 0);
      for (int t = s; t <= e; ++t) v[t] = 1;
      expect.insert(v);
    }
  std::set<std::vector<int>> got(rs.positive_roots.begin(), rs.positive_roots.end());
  CHECK(got == expect);
  CHECK(rs.num_positive() == 6);
  // closure under the pairing table: alpha+beta is a root iff <alpha,beta> = -1
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      if (a == b) continue;
      int pair = rs.pair_rr(rs.positive_roots[a], rs.positive_roots[b]);
      CHECK((rs.sum_root(a, b) >= 0) == (pair == -1));
    }
}

TEST_CASE("fundamental-weight pairing inverts the Cartan matrix") {
  for (int n : {1, 2, 3, 4}) {
    RootSystemData rs = build_root_data(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Rat s = 0;
        for (int l = 0; l < n; ++l) s += Rat(rs.cartan[i][l]) * rs.fund_weight_pairing[l][j];
        CHECK(s == (i == j ? 1 : 0));
      }
    // <alpha_i, lambda_j> = delta_ij
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::vector<int> lam(n, 0);
        lam[j] = 1;
        CHECK(RootSystemData::pair_wr(lam, rs.positive_roots[i]) == (i == j ? 1 : 0));
      }
  }
}

TEST_CASE("pairing symmetry and root-weight integrality") {
  RootSystemData rs = build_root_data(3);
  for (const auto& a : rs.positive_roots)
    for (const auto& b : rs.positive_roots) CHECK(rs.pair_rr(a, b) == rs.pair_rr(b, a));
}

TEST_CASE("rank-2 cocycle reproduces the explicit sign table") {
  RootSystemData rs = build_root_data(2);
  Cocycle co = build_cocycle(rs);
  REQUIRE(co.full_table);
  CHECK(co.eps_fw[0][0] == 1);
  CHECK(co.eps_fw[1][1] == 1);
  CHECK(co.eps_fw[0][1] == 1);
  CHECK(co.eps_fw[1][0] == -1);
  // eps(0, lambda_1) = 1
  CHECK(co.eps(rs, {0, 0}, {1, 0}) == 1);
  CHECK(co.eps(rs, {1, 0}, {0, 0}) == 1);
}

TEST_CASE("commutator values expand bimultiplicatively") {
  RootSystemData rs = build_root_data(2);
  Cocycle co = build_cocycle(rs);
  // independent expansion of c(alpha_1, alpha_2) from alpha_1 = 2l1 - l2,
  // alpha_2 = -l1 + 2l2 over the basis table
  int par = 0;
  std::vector<int> a1{2, -1}, a2{-1, 2};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      int cij = co.eps_fw[i][j] * co.eps_fw[j][i];
      if (cij < 0 && (a1[i] & 1) && (a2[j] & 1)) par ^= 1;
    }
  CHECK((par ? -1 : 1) == -1);
  CHECK(co.commutator(rs, a1, a2) == -1);
  // c(alpha_1, alpha_1 + alpha_2) = (-1)^<a1, a1+a2> = (-1)^1
  CHECK(co.commutator(rs, a1, {1, 1}) == -1);
}

TEST_CASE("root-lattice commutator condition holds over signed root pairs") {
  for (int n : {1, 2, 3, 4, 5}) {
    RootSystemData rs = build_root_data(n);
    Cocycle co = build_cocycle(rs);
    std::vector<std::vector<int>> pts;
    for (const auto& r : rs.positive_roots) {
      pts.push_back(rs.root_to_fw(r));
      std::vector<int> neg(n);
      for (int i = 0; i < n; ++i) neg[i] = -pts.back()[i];
      pts.push_back(neg);
    }
    for (const auto& a : pts)
      for (const auto& b : pts) {
        std::vector<int> ar = rs.fw_to_root(a), br = rs.fw_to_root(b);
        int want = (rs.pair_rr(ar, br) % 2) ? -1 : 1;
        CHECK(co.commutator(rs, a, b) == want);
      }
  }
}

TEST_CASE("fallback cocycle covers Q x P and rejects non-root first arguments") {
  for (int n : {2, 3}) {
    RootSystemData rs = build_root_data(n);
    Cocycle co = build_cocycle_fallback(rs);
    CHECK_FALSE(co.full_table);
    // Q x Q condition
    for (const auto& a : rs.positive_roots)
      for (const auto& b : rs.positive_roots) {
        int want = (rs.pair_rr(a, b) % 2) ? -1 : 1;
        CHECK(co.commutator(rs, rs.root_to_fw(a), rs.root_to_fw(b)) == want);
      }
    // eps(alpha, mu) is defined for weight-lattice mu
    std::vector<int> lam1(n, 0);
    lam1[0] = 1;
    CHECK((co.eps_root(rs, 0, lam1) == 1 || co.eps_root(rs, 0, lam1) == -1));
    // first argument outside Q is rejected
    CHECK_THROWS_AS(co.eps(rs, lam1, lam1), std::domain_error);
  }
}

TEST_CASE("structure constants are cocycle-derived and antisymmetric") {
  for (int n : {2, 3}) {
    RootSystemData rs = build_root_data(n);
    Cocycle co = build_cocycle(rs);
    StructureConstants sc = build_structure_constants(rs, co);
    for (int a = 0; a < rs.num_positive(); ++a)
      for (int b = 0; b < rs.num_positive(); ++b) {
        if (rs.sum_root(a, b) < 0) {
          CHECK(sc.value(a, b) == 0);
        } else {
          CHECK(sc.value(a, b) == Rat(co.eps_root(rs, a, rs.root_to_fw(rs.positive_roots[b]))));
          CHECK(sc.value(a, b) == -sc.value(b, a));
        }
      }
  }
}

TEST_CASE("full sign tables exist for every rank the tool targets") {
  for (int n = 1; n <= 8; ++n) {
    RootSystemData rs = build_root_data(n);
    Cocycle co = build_cocycle(rs);
    CHECK(co.full_table);
  }
}
