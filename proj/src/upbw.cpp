#include "psv/upbw.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace psv {

int Monomial::weight() const {
  int w = 0;
  for (const auto& f : factors) w -= f.mode;
  return w;
}

std::vector<int> Monomial::charges(const RootSystemData& rs) const {
  std::vector<int> r(rs.rank, 0);
  for (const auto& f : factors)
    for (int i = 0; i < rs.rank; ++i) r[i] += rs.positive_roots[f.root][i];
  return r;
}

int Monomial::total_charge(const RootSystemData& rs) const {
  auto r = charges(rs);
  return std::accumulate(r.begin(), r.end(), 0);
}

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
  const size_t n = std::min(a.factors.size(), b.factors.size());
  for (size_t i = 0; i < n; ++i) {
    if (gen_less(a.factors[i], b.factors[i])) return true;
    if (gen_less(b.factors[i], a.factors[i])) return false;
  }
  return a.factors.size() < b.factors.size();
}

AlgElem AlgElem::unit() {
  AlgElem e;
  e.terms.emplace(Monomial::one(), 1);
  return e;
}

AlgElem AlgElem::gen(int root, int mode) {
  return monomial(Monomial{{LoopGen{root, mode}}});
}

AlgElem AlgElem::monomial(Monomial m, Rat coef) {
  AlgElem e;
  if (coef != 0) e.terms.emplace(std::move(m), std::move(coef));
  return e;
}

void AlgElem::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto it = terms.find(m);
  if (it == terms.end()) {
    terms.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

AlgElem& AlgElem::operator+=(const AlgElem& o) {
  for (const auto& [m, c] : o.terms) add_term(m, c);
  return *this;
}

AlgElem& AlgElem::operator-=(const AlgElem& o) {
  for (const auto& [m, c] : o.terms) add_term(m, -c);
  return *this;
}

AlgElem& AlgElem::operator*=(const Rat& c) {
  if (c == 0) {
    terms.clear();
    return *this;
  }
  for (auto& [m, v] : terms) v *= c;
  return *this;
}

int AffineWeight::level() const { return std::accumulate(coords.begin(), coords.end(), 0); }

std::vector<int> AffineWeight::finite_part() const {
  return std::vector<int>(coords.begin() + 1, coords.end());
}

Rat AffineWeight::conformal_shift(const RootSystemData& rs) const {
  std::vector<int> fin = finite_part();
  std::vector<int> rho_sum(rs.rank, 0);  // alpha_1 + ... + alpha_n in fw coords
  std::vector<int> ones(rs.rank, 1);
  rho_sum = rs.root_to_fw(ones);
  std::vector<int> shifted(rs.rank);
  for (int i = 0; i < rs.rank; ++i) shifted[i] = fin[i] + rho_sum[i];
  return rs.pair_ww(fin, shifted) / Rat(2 * (level() + rs.rank + 1));
}

int GradedIndex::total_charge() const {
  return std::accumulate(charges.begin(), charges.end(), 0);
}

bool operator<(const GradedIndex& a, const GradedIndex& b) {
  if (a.weight != b.weight) return a.weight < b.weight;
  return a.charges < b.charges;
}

AlgElem straighten(const Algebra& alg, std::vector<LoopGen> word, const Rat& coef) {
  AlgElem out;
  if (coef == 0) return out;
  std::vector<std::pair<Rat, std::vector<LoopGen>>> work;
  work.emplace_back(coef, std::move(word));
  while (!work.empty()) {
    auto [c, w] = std::move(work.back());
    work.pop_back();
    size_t inv = w.size();
    for (size_t i = 0; i + 1 < w.size(); ++i)
      if (gen_less(w[i + 1], w[i])) { inv = i; break; }
    if (inv == w.size()) {
      out.add_term(Monomial{std::move(w)}, c);
      continue;
    }
    // x_b(m) x_g(p) = x_g(p) x_b(m) + C_{b,g} x_{b+g}(m+p); the contracted
    // term has one factor fewer, so the rewriting terminates.
    LoopGen b = w[inv], g = w[inv + 1];
    std::vector<LoopGen> swapped = w;
    std::swap(swapped[inv], swapped[inv + 1]);
    int s = alg.rs.sum_root(b.root, g.root);
    if (s >= 0) {
      std::vector<LoopGen> contracted;
      contracted.reserve(w.size() - 1);
      contracted.insert(contracted.end(), w.begin(), w.begin() + inv);
      contracted.push_back(LoopGen{s, b.mode + g.mode});
      contracted.insert(contracted.end(), w.begin() + inv + 2, w.end());
      work.emplace_back(c * alg.sc.value(b.root, g.root), std::move(contracted));
    }
    work.emplace_back(std::move(c), std::move(swapped));
  }
  return out;
}

AlgElem multiply(const Algebra& alg, const AlgElem& a, const AlgElem& b) {
  AlgElem out;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) {
      std::vector<LoopGen> w = ma.factors;
      w.insert(w.end(), mb.factors.begin(), mb.factors.end());
      out += straighten(alg, std::move(w), ca * cb);
    }
  return out;
}

AlgElem tau(const Algebra& alg, const std::vector<int>& lambda_fw, const std::vector<Rat>& nu,
            const AlgElem& a) {
  for (const auto& v : nu)
    if (v == 0) throw std::invalid_argument("tau: character values must be nonzero");
  AlgElem out;
  for (const auto& [m, c] : a.terms) {
    Rat coef = c;
    std::vector<LoopGen> w;
    w.reserve(m.factors.size());
    for (const auto& f : m.factors) {
      const auto& beta = alg.rs.positive_roots[f.root];
      int shift = RootSystemData::pair_wr(lambda_fw, beta);
      for (int i = 0; i < alg.rank(); ++i)
        for (int e = 0; e < beta[i]; ++e) coef *= nu[i];
      w.push_back(LoopGen{f.root, f.mode - shift});
    }
    out += straighten(alg, std::move(w), coef);
  }
  return out;
}

namespace {

AlgElem power_monomial(int root, int mode, int e) {
  Monomial m;
  m.factors.assign(e, LoopGen{root, mode});
  return AlgElem::monomial(std::move(m));
}

std::vector<int> lambda_fw(const Algebra& alg, int i) {
  std::vector<int> v(alg.rank(), 0);
  v[i - 1] = 1;
  return v;
}

}  // namespace

AlgElem tau_affine(const Algebra& alg, int i, const std::vector<Rat>& nu,
                   const AffineWeight& lambda, const AlgElem& a) {
  if (alg.rank() != 2) throw std::invalid_argument("tau_affine is defined for rank 2 only");
  if (i != 1 && i != 2) throw std::invalid_argument("tau_affine: i must be 1 or 2");
  const int k1 = lambda.coords[1], k2 = lambda.coords[2];
  const int sum_root = alg.rs.root_index({1, 1});
  AlgElem img = tau(alg, lambda_fw(alg, i), nu, a);
  if (i == 1) {
    img = multiply(alg, img, power_monomial(0, -1, k1));
    img = multiply(alg, img, power_monomial(sum_root, -1, k2));
  } else {
    img = multiply(alg, img, power_monomial(1, -1, k2));
    img = multiply(alg, img, power_monomial(sum_root, -1, k1));
  }
  return img;
}

AlgElem sigma_affine(const Algebra& alg, int i, const std::vector<Rat>& nu, int k1, int k2,
                     const AlgElem& a) {
  if (alg.rank() != 2) throw std::invalid_argument("sigma_affine is defined for rank 2 only");
  if (i != 1 && i != 2) throw std::invalid_argument("sigma_affine: i must be 1 or 2");
  // omega_i = alpha_i - lambda_i in fundamental-weight coords
  std::vector<int> omega = alg.rs.root_to_fw(alg.rs.positive_roots[i - 1]);
  omega[i - 1] -= 1;
  AlgElem img = tau(alg, omega, nu, a);
  img = multiply(alg, img, power_monomial(i - 1, -1, i == 1 ? k1 : k2));
  return img;
}

std::vector<Monomial> enumerate_monomials(const RootSystemData& rs, const GradedIndex& g,
                                          int mode_floor, int mode_ceiling, bool negative_only) {
  if (mode_floor > -1 || mode_ceiling < -1)
    throw std::invalid_argument("enumerate_monomials: mode window must contain -1");
  const int hi = negative_only ? -1 : mode_ceiling;
  const int lo = mode_floor;

  const int np = rs.num_positive();
  std::vector<Monomial> out;
  if (std::any_of(g.charges.begin(), g.charges.end(), [](int x) { return x < 0; })) return out;

  std::vector<int> mult(np, 0);
  std::vector<std::vector<int>> picked(np);

  // Per root: nondecreasing mode tuples within [lo, hi], then recurse to the
  // next root with the remaining weight.
  std::function<void(int, int)> assign = [&](int idx, int wleft) {
    if (idx == np) {
      if (wleft != 0) return;
      Monomial m;
      for (int rr = 0; rr < np; ++rr)
        for (int md : picked[rr]) m.factors.push_back(LoopGen{rr, md});
      std::sort(m.factors.begin(), m.factors.end(), gen_less);
      out.push_back(std::move(m));
      return;
    }
    if (mult[idx] == 0) {
      picked[idx].clear();
      assign(idx + 1, wleft);
      return;
    }
    std::vector<int>& cur = picked[idx];
    cur.clear();
    std::function<void(int, int, int)> rec = [&](int cnt, int min_mode, int wused) {
      if (cnt == mult[idx]) {
        assign(idx + 1, wleft - wused);
        return;
      }
      for (int m2 = std::max(lo, min_mode); m2 <= hi; ++m2) {
        cur.push_back(m2);
        rec(cnt + 1, m2, wused - m2);
        cur.pop_back();
      }
    };
    rec(0, lo, 0);
    cur.clear();
  };

  // Choose a root multiset matching the charge vector, then distribute weight.
  std::function<void(int, std::vector<int>)> choose = [&](int r, std::vector<int> residual) {
    if (r == np) {
      if (std::all_of(residual.begin(), residual.end(), [](int x) { return x == 0; }))
        assign(0, g.weight);
      return;
    }
    const auto& coords = rs.positive_roots[r];
    int cap = INT32_MAX;
    for (int i = 0; i < rs.rank; ++i)
      if (coords[i] > 0) cap = std::min(cap, residual[i] / coords[i]);
    for (int c = 0; c <= cap; ++c) {
      mult[r] = c;
      std::vector<int> next = residual;
      bool ok = true;
      for (int i = 0; i < rs.rank; ++i) {
        next[i] -= c * coords[i];
        if (next[i] < 0) ok = false;
      }
      if (ok) choose(r + 1, next);
    }
    mult[r] = 0;
  };
  choose(0, g.charges);
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return MonomialLess{}(a, b); });
  return out;
}

GradedIndex grading_of(const RootSystemData& rs, const Monomial& m) {
  return GradedIndex{m.weight(), m.charges(rs)};
}

std::map<GradedIndex, AlgElem> split_by_grading(const RootSystemData& rs, const AlgElem& a) {
  std::map<GradedIndex, AlgElem> out;
  for (const auto& [m, c] : a.terms) out[grading_of(rs, m)].add_term(m, c);
  return out;
}

AlgElem project_negative(const AlgElem& a) {
  AlgElem out;
  for (const auto& [m, c] : a.terms)
    if (m.negative_only()) out.add_term(m, c);
  return out;
}

}  // namespace psv
