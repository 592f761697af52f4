#include "psv/fock.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace psv {

int FockState::heis_weight() const {
  int w = 0;
  for (const auto& [i, m] : heis) w -= m;
  return w;
}

Rat FockState::l0_weight(const RootSystemData& rs) const {
  return Rat(heis_weight()) + rs.pair_ww(lattice, lattice) / 2;
}

void ModuleVec::add_term(const FockTuple& t, const Rat& c) {
  if (c == 0) return;
  auto it = terms.find(t);
  if (it == terms.end()) {
    terms.emplace(t, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

ModuleVec& ModuleVec::operator+=(const ModuleVec& o) {
  for (const auto& [t, c] : o.terms) add_term(t, c);
  return *this;
}

ModuleVec& ModuleVec::operator-=(const ModuleVec& o) {
  for (const auto& [t, c] : o.terms) add_term(t, -c);
  return *this;
}

ModuleVec& ModuleVec::operator*=(const Rat& c) {
  if (c == 0) {
    terms.clear();
    return *this;
  }
  for (auto& [t, v] : terms) v *= c;
  return *this;
}

std::string to_text(const FockState& s) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < s.heis.size(); ++i) {
    if (i) os << " ";
    os << "a" << (s.heis[i].first + 1) << "(" << s.heis[i].second << ")";
  }
  os << "] e(";
  for (size_t i = 0; i < s.lattice.size(); ++i) {
    if (i) os << ",";
    os << s.lattice[i];
  }
  os << ")";
  return os.str();
}

std::string to_text(const FockTuple& t) {
  std::ostringstream os;
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) os << " | ";
    os << to_text(t[i]);
  }
  return os.str();
}

namespace {

using Heis = std::vector<std::pair<int, int>>;
using HeisMap = std::map<Heis, Rat>;

void accumulate(HeisMap& m, const Heis& h, const Rat& c) {
  if (c == 0) return;
  auto it = m.find(h);
  if (it == m.end()) {
    m.emplace(h, c);
  } else {
    it->second += c;
    if (it->second == 0) m.erase(it);
  }
}

// One application of alpha(p), p > 0: [alpha(p), alpha_j(-p)] = p <alpha,alpha_j>
// at level 1, summed over the removable quanta of mode -p.
HeisMap apply_annihilator(const std::vector<int>& alpha_fw, int p, const HeisMap& in) {
  HeisMap out;
  for (const auto& [h, c] : in) {
    for (size_t i = 0; i < h.size(); ++i) {
      if (h[i].second != -p) continue;
      if (i > 0 && h[i] == h[i - 1]) continue;  // each distinct quantum once
      int mult = 0;
      for (const auto& q : h)
        if (q == h[i]) ++mult;
      int pairing = alpha_fw[h[i].first];
      if (pairing == 0) continue;
      Heis rest = h;
      rest.erase(rest.begin() + i);
      accumulate(out, rest, c * Rat(mult) * Rat(p) * Rat(pairing));
    }
  }
  return out;
}

}  // namespace

std::map<FockState, Rat> FockSpace::act_x_state(int root, int mode, const FockState& s) const {
  const RootSystemData& rs = alg_.rs;
  const std::vector<int>& alpha = rs.positive_roots[root];
  const std::vector<int> alpha_fw = rs.root_to_fw(alpha);
  const int d0 = RootSystemData::pair_wr(s.lattice, alpha);  // power of x from x^alpha
  const Rat sign = Rat(alg_.eps_root(root, s.lattice));

  std::vector<int> mu = s.lattice;
  for (int i = 0; i < rs.rank; ++i) mu[i] += alpha_fw[i];

  // E^+(-alpha,x) = prod_p exp(-alpha(p)/p x^{-p}) expanded against the
  // finitely many annihilatable quanta of s; keyed by annihilated degree d.
  std::map<int, HeisMap> plus;
  plus[0][s.heis] = 1;
  std::vector<int> mode_sizes;
  for (const auto& [i, m] : s.heis)
    if (std::find(mode_sizes.begin(), mode_sizes.end(), -m) == mode_sizes.end())
      mode_sizes.push_back(-m);
  for (int p : mode_sizes) {
    std::map<int, HeisMap> next = plus;  // j = 0 kept as-is
    for (const auto& [d, states] : plus) {
      HeisMap cur = states;
      Rat scale = 1;
      for (int j = 1; ; ++j) {
        cur = apply_annihilator(alpha_fw, p, cur);
        if (cur.empty()) break;
        scale *= Rat(-1, p) / Rat(j);
        HeisMap& slot = next[d + p * j];
        for (const auto& [h, c] : cur) accumulate(slot, h, scale * c);
      }
    }
    plus = std::move(next);
  }

  // E^-(-alpha,x) = exp(sum_p alpha(-p)/p x^p); the overall coefficient of
  // x^{-mode-1} needs the degree-e part with e = -mode-1 + d - d0.
  std::map<FockState, Rat> out;
  for (const auto& [d, states] : plus) {
    const int e = -mode - 1 + d - d0;
    if (e < 0) continue;
    for (const auto& [h, c] : states) {
      Rat base_coef = sign * c;
      if (e == 0) {
        FockState st{h, mu};
        std::sort(st.heis.begin(), st.heis.end());
        auto it = out.find(st);
        if (it == out.end())
          out.emplace(std::move(st), base_coef);
        else {
          it->second += base_coef;
          if (it->second == 0) out.erase(it);
        }
        continue;
      }
      // creation slots (p, i) with alpha coordinate a_i != 0; coefficient per
      // slot filled c times is a_i^c / (p^c c!).
      struct Slot {
        int p, idx, coord;
      };
      std::vector<Slot> slots;
      for (int p = 1; p <= e; ++p)
        for (int i = 0; i < rs.rank; ++i)
          if (alpha[i] != 0) slots.push_back(Slot{p, i, alpha[i]});
      Heis additions;
      std::function<void(size_t, int, Rat)> dfs = [&](size_t si, int rem, Rat coef) {
        if (rem == 0) {
          FockState st{h, mu};
          st.heis.insert(st.heis.end(), additions.begin(), additions.end());
          std::sort(st.heis.begin(), st.heis.end());
          auto it = out.find(st);
          if (it == out.end())
            out.emplace(std::move(st), coef);
          else {
            it->second += coef;
            if (it->second == 0) out.erase(it);
          }
          return;
        }
        if (si == slots.size()) return;
        const Slot& sl = slots[si];
        Rat fc = coef;
        for (int cnt = 0; cnt * sl.p <= rem; ++cnt) {
          if (cnt > 0) {
            fc *= Rat(sl.coord) / (Rat(sl.p) * Rat(cnt));
            additions.push_back({sl.idx, -sl.p});
          }
          dfs(si + 1, rem - cnt * sl.p, fc);
        }
        for (int cnt = 0; cnt * sl.p <= rem; ++cnt)
          if (cnt > 0) additions.pop_back();
      };
      dfs(0, e, base_coef);
    }
  }
  return out;
}

ModuleVec FockSpace::act_x(int root, int mode, const ModuleVec& v) const {
  ModuleVec out = ModuleVec::zero(v.level);
  for (const auto& [tuple, c] : v.terms)
    for (int j = 0; j < v.level; ++j) {
      auto res = act_x_state(root, mode, tuple[j]);
      for (const auto& [st, cc] : res) {
        FockTuple nt = tuple;
        nt[j] = st;
        out.add_term(nt, c * cc);
      }
    }
  return out;
}

ModuleVec FockSpace::act_elem(const AlgElem& a, const ModuleVec& v) const {
  ModuleVec out = ModuleVec::zero(v.level);
  for (const auto& [m, c] : a.terms) {
    ModuleVec cur = v;
    for (auto it = m.factors.rbegin(); it != m.factors.rend(); ++it) {
      cur = act_x(it->root, it->mode, cur);
      if (cur.is_zero()) break;
    }
    cur *= c;
    out += cur;
  }
  return out;
}

ModuleVec FockSpace::highest_weight_vector(const AffineWeight& lambda) const {
  const int n = alg_.rank();
  if (static_cast<int>(lambda.coords.size()) != n + 1)
    throw std::invalid_argument("weight vector length must be rank+1");
  for (int c : lambda.coords)
    if (c < 0) throw std::invalid_argument("weight coordinates must be nonnegative");
  FockTuple t;
  for (int i = 0; i <= n; ++i)
    for (int rep = 0; rep < lambda.coords[i]; ++rep) {
      FockState st;
      st.lattice.assign(n, 0);
      if (i >= 1) st.lattice[i - 1] = 1;
      t.push_back(std::move(st));
    }
  ModuleVec v = ModuleVec::zero(lambda.level());
  v.add_term(t, 1);
  return v;
}

ModuleVec FockSpace::e_lambda_tensor(const std::vector<int>& lam_fw, const ModuleVec& v) const {
  ModuleVec out = ModuleVec::zero(v.level);
  for (const auto& [tuple, c] : v.terms) {
    Rat coef = c;
    FockTuple nt = tuple;
    for (auto& st : nt) {
      coef *= Rat(alg_.eps(lam_fw, st.lattice));
      for (size_t i = 0; i < st.lattice.size(); ++i) st.lattice[i] += lam_fw[i];
    }
    out.add_term(nt, coef);
  }
  return out;
}

GradedIndex FockSpace::relative_grading(const FockState& s, const std::vector<int>& base_fw) const {
  const RootSystemData& rs = alg_.rs;
  std::vector<int> diff(rs.rank);
  for (int i = 0; i < rs.rank; ++i) diff[i] = s.lattice[i] - base_fw[i];
  std::vector<int> charges = rs.fw_to_root(diff);
  if (charges.empty() && rs.rank > 0)
    throw std::invalid_argument("state does not lie over the base point's coset");
  FockState base{{}, base_fw};
  Rat w = s.l0_weight(rs) - base.l0_weight(rs);
  if (!rat_is_integer(w)) throw std::logic_error("relative weight is not an integer");
  return GradedIndex{static_cast<int>(rat_to_long(w)), charges};
}

std::vector<FockState> FockSpace::states_upto(const std::vector<int>& base_fw,
                                              int max_rel_weight) const {
  const RootSystemData& rs = alg_.rs;
  const int n = rs.rank;
  // Box bound from the least eigenvalue of the Cartan matrix:
  // lambda_min >= 4/(n+1)^2, so any coordinate beyond B cannot keep the
  // lattice part of the relative weight within budget.
  double q = (n + 1) * (n + 1) / 4.0;
  int box = static_cast<int>(q * (1.0 + std::sqrt(1.0 + 2.0 * max_rel_weight / q))) + 1;

  std::vector<FockState> out;
  std::vector<int> b(n, -box);
  while (true) {
    // lattice part of the relative weight
    std::vector<int> mu(base_fw);
    std::vector<int> bfw = rs.root_to_fw(b);
    for (int i = 0; i < n; ++i) mu[i] += bfw[i];
    Rat lw = Rat(rs.pair_rr(b, b)) / 2 + Rat(RootSystemData::pair_wr(base_fw, b));
    if (rat_is_integer(lw)) {
      long lwi = rat_to_long(lw);
      if (lwi >= 0 && lwi <= max_rel_weight) {
        // Heisenberg fillings of the remaining weight
        int room = max_rel_weight - static_cast<int>(lwi);
        Heis cur;
        std::function<void(int, std::pair<int, int>)> fill = [&](int left,
                                                                 std::pair<int, int> minq) {
          FockState st{cur, mu};
          std::sort(st.heis.begin(), st.heis.end());
          out.push_back(st);
          for (int i = minq.first; i < n; ++i)
            for (int p = (i == minq.first ? -minq.second : 1); p <= left; ++p) {
              cur.push_back({i, -p});
              fill(left - p, {i, -p});
              cur.pop_back();
            }
        };
        fill(room, {0, -1});
      }
    }
    // advance the box counter
    int i = 0;
    while (i < n && b[i] == box) {
      b[i] = -box;
      ++i;
    }
    if (i == n) break;
    ++b[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FockTuple> FockSpace::graded_basis(const AffineWeight& lambda,
                                               const GradedIndex& g) const {
  const RootSystemData& rs = alg_.rs;
  ModuleVec hw = highest_weight_vector(lambda);
  const FockTuple& base = hw.terms.begin()->first;
  const int k = lambda.level();

  struct Cand {
    FockState st;
    int relw;
    std::vector<int> charge;
  };
  std::vector<std::vector<Cand>> cands(k);
  std::vector<std::vector<int>> cmin(k, std::vector<int>(rs.rank, 0));
  std::vector<std::vector<int>> cmax(k, std::vector<int>(rs.rank, 0));
  for (int j = 0; j < k; ++j) {
    for (const auto& st : states_upto(base[j].lattice, g.weight)) {
      GradedIndex rg = relative_grading(st, base[j].lattice);
      Cand c{st, rg.weight, rg.charges};
      for (int i = 0; i < rs.rank; ++i) {
        cmin[j][i] = std::min(cmin[j][i], c.charge[i]);
        cmax[j][i] = std::max(cmax[j][i], c.charge[i]);
      }
      cands[j].push_back(std::move(c));
    }
  }
  // suffix charge bounds for pruning
  std::vector<std::vector<int>> smin(k + 1, std::vector<int>(rs.rank, 0));
  std::vector<std::vector<int>> smax(k + 1, std::vector<int>(rs.rank, 0));
  for (int j = k - 1; j >= 0; --j)
    for (int i = 0; i < rs.rank; ++i) {
      smin[j][i] = smin[j + 1][i] + cmin[j][i];
      smax[j][i] = smax[j + 1][i] + cmax[j][i];
    }

  std::vector<FockTuple> out;
  FockTuple cur(k);
  std::vector<int> residual = g.charges;
  std::function<void(int, int)> dfs = [&](int j, int wleft) {
    if (j == k) {
      if (wleft == 0 &&
          std::all_of(residual.begin(), residual.end(), [](int x) { return x == 0; }))
        out.push_back(cur);
      return;
    }
    for (const auto& c : cands[j]) {
      if (c.relw > wleft) continue;
      bool feasible = true;
      for (int i = 0; i < rs.rank && feasible; ++i) {
        int rem = residual[i] - c.charge[i];
        if (rem < smin[j + 1][i] || rem > smax[j + 1][i]) feasible = false;
      }
      if (!feasible) continue;
      cur[j] = c.st;
      for (int i = 0; i < rs.rank; ++i) residual[i] -= c.charge[i];
      dfs(j + 1, wleft - c.relw);
      for (int i = 0; i < rs.rank; ++i) residual[i] += c.charge[i];
    }
  };
  dfs(0, g.weight);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace psv
