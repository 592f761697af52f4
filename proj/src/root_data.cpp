#include "psv/root_data.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace psv {

int RootSystemData::pair_rr(const std::vector<int>& a, const std::vector<int>& b) const {
  int s = 0;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) s += a[i] * cartan[i][j] * b[j];
  return s;
}

int RootSystemData::pair_wr(const std::vector<int>& mu, const std::vector<int>& beta) {
  int s = 0;
  for (size_t i = 0; i < mu.size(); ++i) s += mu[i] * beta[i];
  return s;
}

Rat RootSystemData::pair_ww(const std::vector<int>& mu, const std::vector<int>& nu) const {
  Rat s = 0;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) s += Rat(mu[i]) * fund_weight_pairing[i][j] * Rat(nu[j]);
  return s;
}

std::vector<int> RootSystemData::root_to_fw(const std::vector<int>& beta) const {
  std::vector<int> mu(rank, 0);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) mu[i] += cartan[i][j] * beta[j];
  return mu;
}

std::vector<int> RootSystemData::fw_to_root(const std::vector<int>& mu) const {
  std::vector<int> beta(rank, 0);
  for (int i = 0; i < rank; ++i) {
    Rat s = 0;
    for (int j = 0; j < rank; ++j) s += fund_weight_pairing[i][j] * Rat(mu[j]);
    if (!rat_is_integer(s)) return {};
    beta[i] = static_cast<int>(rat_to_long(s));
  }
  return beta;
}

int RootSystemData::root_index(const std::vector<int>& coords) const {
  for (int r = 0; r < num_positive(); ++r)
    if (positive_roots[r] == coords) return r;
  return -1;
}

int RootSystemData::height(int root) const {
  const auto& c = positive_roots[root];
  return std::accumulate(c.begin(), c.end(), 0);
}

RootSystemData build_root_data(int n) {
  if (n < 1) throw std::invalid_argument("rank must be a positive integer");
  RootSystemData rs;
  rs.rank = n;
  rs.cartan.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      rs.cartan[i][j] = (i == j) ? 2 : (std::abs(i - j) == 1 ? -1 : 0);

  // A_n positive roots are exactly the {0,1}-interval vectors; order by
  // height so index i names the simple root alpha_{i+1} for i < n.
  for (int h = 1; h <= n; ++h)
    for (int s = 0; s + h <= n; ++s) {
      std::vector<int> v(n, 0);
      for (int t = s; t < s + h; ++t) v[t] = 1;
      rs.positive_roots.push_back(std::move(v));
    }

  // fund_weight_pairing = inverse Cartan matrix, computed exactly.
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = rs.cartan[i][j];
    m[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != 0) { piv = r; break; }
    std::swap(m[piv], m[col]);
    Rat inv = 1 / m[col][col];
    for (int j = 0; j < 2 * n; ++j) m[col][j] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rat f = m[r][col];
      for (int j = 0; j < 2 * n; ++j) m[r][j] -= f * m[col][j];
    }
  }
  rs.fund_weight_pairing.assign(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rs.fund_weight_pairing[i][j] = m[i][n + j];

  const int np = rs.num_positive();
  rs.sum_table.assign(np, std::vector<int>(np, -1));
  for (int a = 0; a < np; ++a)
    for (int b = 0; b < np; ++b) {
      std::vector<int> s(n);
      for (int i = 0; i < n; ++i) s[i] = rs.positive_roots[a][i] + rs.positive_roots[b][i];
      rs.sum_table[a][b] = rs.root_index(s);
    }
  return rs;
}

namespace {

int parity_pair(int a, int b) { return (a & 1) && (b & 1) ? 1 : 0; }

// Product over the sign table raised to coordinate products; exact for
// negative coordinates too since only parities matter.
int bimult_sign(const std::vector<std::vector<int>>& table, const std::vector<int>& a,
                const std::vector<int>& b) {
  int par = 0;
  const int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (table[i][j] < 0) par ^= parity_pair(a[i], b[j]);
  return par ? -1 : 1;
}

// Solves T G T = T over GF(2) for a symmetric hollow G, where T is the
// Cartan matrix mod 2. Returns false when the system is inconsistent.
bool solve_commutator_table(const RootSystemData& rs, std::vector<std::vector<int>>& gamma) {
  const int n = rs.rank;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = ((rs.cartan[i][j] % 2) + 2) % 2;

  const int nvars = n * (n - 1) / 2;
  auto var = [&](int i, int j) { return i * n - i * (i + 1) / 2 + (j - i - 1); };

  std::vector<std::vector<int>> rows;  // each row: nvars coefficients + rhs
  for (int p = 0; p < n; ++p)
    for (int q = p; q < n; ++q) {
      std::vector<int> row(nvars + 1, 0);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          row[var(i, j)] = (t[p][i] * t[j][q] + t[p][j] * t[i][q]) % 2;
      row[nvars] = t[p][q];
      rows.push_back(std::move(row));
    }

  // Gaussian elimination; free variables pinned to 0 for a canonical table.
  std::vector<int> pivot_of_var(nvars >= 1 ? nvars : 0, -1);
  int rank = 0;
  for (int v = 0; v < nvars && rank < static_cast<int>(rows.size()); ++v) {
    int piv = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[r][v]) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(rows[piv], rows[rank]);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r)
      if (r != rank && rows[r][v])
        for (int c = 0; c <= nvars; ++c) rows[r][c] ^= rows[rank][c];
    pivot_of_var[v] = rank++;
  }
  for (int r = rank; r < static_cast<int>(rows.size()); ++r)
    if (rows[r][nvars]) return false;

  gamma.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int g = pivot_of_var[var(i, j)] >= 0 ? rows[pivot_of_var[var(i, j)]][nvars] : 0;
      gamma[i][j] = gamma[j][i] = g;
    }
  return true;
}

void check_simple_pairs(const RootSystemData& rs, const Cocycle& eps) {
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j) {
      std::vector<int> ai = rs.root_to_fw(rs.positive_roots[i]);
      std::vector<int> aj = rs.root_to_fw(rs.positive_roots[j]);
      int want = (rs.cartan[i][j] % 2) ? -1 : 1;
      if (eps.commutator(rs, ai, aj) != want)
        throw std::logic_error("cocycle fails the root-lattice commutator condition");
    }
}

}  // namespace

int Cocycle::eps(const RootSystemData& rs, const std::vector<int>& lam,
                 const std::vector<int>& mu) const {
  if (full_table) return bimult_sign(eps_fw, lam, mu);
  std::vector<int> a = rs.fw_to_root(lam);
  if (a.empty())
    throw std::domain_error("fallback cocycle: first argument must lie in the root lattice");
  // Decompose mu = lambda_cls + beta with beta in Q; eps(alpha, lambda_cls) := 1.
  int mod = rs.rank + 1;
  int cls = 0;
  for (int i = 0; i < rs.rank; ++i) cls = ((cls + (i + 1) * mu[i]) % mod + mod) % mod;
  std::vector<int> shifted = mu;
  if (cls > 0) shifted[cls - 1] -= 1;
  std::vector<int> b = rs.fw_to_root(shifted);
  if (b.empty()) throw std::domain_error("fallback cocycle: malformed coset decomposition");
  return bimult_sign(eps_q, a, b);
}

int Cocycle::eps_root(const RootSystemData& rs, int root, const std::vector<int>& mu) const {
  if (full_table) return bimult_sign(eps_fw, rs.root_to_fw(rs.positive_roots[root]), mu);
  return eps(rs, rs.root_to_fw(rs.positive_roots[root]), mu);
}

int Cocycle::commutator(const RootSystemData& rs, const std::vector<int>& lam,
                        const std::vector<int>& mu) const {
  return eps(rs, lam, mu) * eps(rs, mu, lam);
}

Cocycle build_cocycle_fallback(const RootSystemData& rs) {
  Cocycle co;
  co.full_table = false;
  const int n = rs.rank;
  co.eps_q.assign(n, std::vector<int>(n, 1));
  // Standard root-basis cocycle: eps(alpha_i, alpha_j) = (-1)^<alpha_i,alpha_j>
  // below the diagonal, 1 on and above it.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) co.eps_q[i][j] = (rs.cartan[i][j] % 2) ? -1 : 1;
  check_simple_pairs(rs, co);
  return co;
}

Cocycle build_cocycle(const RootSystemData& rs) {
  std::vector<std::vector<int>> gamma;
  if (!solve_commutator_table(rs, gamma)) return build_cocycle_fallback(rs);
  Cocycle co;
  co.full_table = true;
  const int n = rs.rank;
  co.eps_fw.assign(n, std::vector<int>(n, 1));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (gamma[i][j]) co.eps_fw[j][i] = -1;
  check_simple_pairs(rs, co);
  return co;
}

StructureConstants build_structure_constants(const RootSystemData& rs, const Cocycle& eps) {
  const int np = rs.num_positive();
  StructureConstants sc;
  sc.c.assign(np, std::vector<Rat>(np, 0));
  for (int a = 0; a < np; ++a)
    for (int b = 0; b < np; ++b) {
      if (rs.sum_root(a, b) < 0) continue;
      std::vector<int> fb = rs.root_to_fw(rs.positive_roots[b]);
      sc.c[a][b] = Rat(eps.eps_root(rs, a, fb));
    }
  return sc;
}

Algebra build_algebra(int n) {
  Algebra alg;
  alg.rs = build_root_data(n);
  alg.cocycle = build_cocycle(alg.rs);
  alg.sc = build_structure_constants(alg.rs, alg.cocycle);
  return alg;
}

}  // namespace psv
