#include "psv/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "psv/text.hpp"

namespace psv {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

std::vector<GradedIndex> budget_components(int rank, int w_max, int charge_max) {
  std::vector<GradedIndex> out;
  std::vector<int> charges(rank, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == rank) {
      for (int w = 0; w <= w_max; ++w) out.push_back(GradedIndex{w, charges});
      return;
    }
    for (int c = 0; c <= left; ++c) {
      charges[i] = c;
      rec(i + 1, left - c);
    }
    charges[i] = 0;
  };
  rec(0, charge_max);
  std::sort(out.begin(), out.end());
  return out;
}

void parallel_for(int jobs, size_t count, const std::function<void(size_t)>& body) {
  if (jobs <= 1 || count <= 1) {
    for (size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  int nthreads = std::min<size_t>(jobs, count);
  for (int t = 0; t < nthreads; ++t)
    pool.emplace_back([&] {
      while (true) {
        size_t i = next.fetch_add(1);
        if (i >= count) return;
        body(i);
      }
    });
  for (auto& th : pool) th.join();
}

std::string lambda_dirname(const std::vector<int>& lambda) {
  std::string s;
  for (size_t i = 0; i < lambda.size(); ++i) {
    if (i) s += "_";
    s += std::to_string(lambda[i]);
  }
  return s;
}

fs::path cache_base(const std::string& root, int n, const AffineWeight& lambda) {
  return fs::path(root) / std::to_string(n) / std::to_string(lambda.level()) /
         lambda_dirname(lambda.coords);
}

bool cache_load(const std::string& root, const Algebra& alg, const AffineWeight& lambda,
                IdealClosure& closure) {
  if (root.empty()) return false;
  fs::path base = cache_base(root, alg.rank(), lambda);
  fs::path manifest = base / (closure.window().signature() + ".manifest");
  std::ifstream in(manifest);
  if (!in) return false;
  ordered_json m;
  try {
    in >> m;
  } catch (...) {
    return false;
  }
  int passes = m.value("passes", 0);
  try {
    for (const auto& comp : m.at("components")) {
      GradedIndex g{comp.at("weight").get<int>(), comp.at("charges").get<std::vector<int>>()};
      std::vector<std::string> rows;
      int rank = comp.at("rank").get<int>();
      if (rank > 0) {
        fs::path rowfile = base / (closure.window().signature() + "__" + to_text(g) + ".rows");
        std::ifstream rf(rowfile);
        if (!rf) return false;
        std::string line;
        while (std::getline(rf, line))
          if (!line.empty()) rows.push_back(line);
        if (static_cast<int>(rows.size()) != rank) return false;
      }
      closure.load_component(g, rows, passes);
    }
  } catch (...) {
    return false;
  }
  return true;
}

void cache_save(const std::string& root, const Algebra& alg, const AffineWeight& lambda,
                const IdealClosure& closure) {
  if (root.empty()) return;
  fs::path base = cache_base(root, alg.rank(), lambda);
  std::error_code ec;
  fs::create_directories(base, ec);
  if (ec) return;
  ordered_json m;
  m["passes"] = closure.passes();
  m["components"] = ordered_json::array();
  for (const auto& [g, c] : closure.components()) {
    ordered_json jc;
    jc["weight"] = g.weight;
    jc["charges"] = g.charges;
    jc["rank"] = c.span.rank();
    m["components"].push_back(jc);
    if (c.span.rank() > 0) {
      fs::path rowfile = base / (closure.window().signature() + "__" + to_text(g) + ".rows");
      std::ofstream rf(rowfile, std::ios::trunc);
      for (const auto& line : closure.rows_text(g)) rf << line << "\n";
    }
  }
  fs::path manifest = base / (closure.window().signature() + ".manifest");
  std::ofstream out(manifest, std::ios::trunc);
  out << m.dump(1) << "\n";
}

}  // namespace

long principal_dim(const FockSpace& fspace, const AffineWeight& lambda, const GradedIndex& g) {
  const Algebra& alg = fspace.algebra();
  auto monos = enumerate_monomials(alg.rs, g, -std::max(g.weight, 1), -1, true);
  if (monos.empty()) return 0;
  auto basis = fspace.graded_basis(lambda, g);
  std::map<FockTuple, int> column;
  for (size_t i = 0; i < basis.size(); ++i) column.emplace(basis[i], static_cast<int>(i));
  RrefMatrix span(static_cast<int>(basis.size()));
  ModuleVec hw = fspace.highest_weight_vector(lambda);
  for (const auto& m : monos) {
    ModuleVec img = fspace.act_elem(AlgElem::monomial(m), hw);
    std::vector<Rat> row(basis.size(), 0);
    for (const auto& [t, c] : img.terms) {
      auto it = column.find(t);
      if (it == column.end())
        throw std::logic_error("graded basis does not span the monomial images");
      row[it->second] = c;
    }
    span.insert(std::move(row));
  }
  return span.rank();
}

std::vector<AlgElem> ideal_generators_upto(const Algebra& alg, const IdealSpec& spec, int w_cap,
                                           int nonneg_mode_cap) {
  std::vector<AlgElem> gens = spec.seed_generators(alg, w_cap);
  for (int root = 0; root < alg.rs.num_positive(); ++root)
    for (int m = 0; m <= nonneg_mode_cap; ++m) gens.push_back(AlgElem::gen(root, m));
  return gens;
}

VerificationReport verify_presentation(const Algebra& alg, const AffineWeight& lambda, int w_max,
                                       int charge_max, const VerifyOptions& opts) {
  const int n = alg.rank();
  if (static_cast<int>(lambda.coords.size()) != n + 1)
    throw std::invalid_argument("weight vector length must be rank+1");
  for (int c : lambda.coords)
    if (c < 0) throw std::invalid_argument("weight coordinates must be nonnegative");
  if (lambda.level() < 1)
    throw std::invalid_argument("level must be positive (level 0 has only the trivial module)");

  VerificationReport rep;
  rep.n = n;
  rep.k = lambda.level();
  rep.lambda = lambda.coords;
  rep.max_weight = w_max;
  rep.max_charge = charge_max;
  rep.mode = (n == 2) ? "theorem" : "conjecture";

  FockSpace fspace(alg);
  IdealSpec spec = IdealSpec::standard(alg, lambda);

  // One-sided containment is unconditional: every generator annihilates the
  // highest-weight vector. A failure here is an implementation bug.
  {
    ModuleVec hw = fspace.highest_weight_vector(lambda);
    for (const AlgElem& gen : ideal_generators_upto(alg, spec, w_max, 2))
      if (!fspace.act_elem(gen, hw).is_zero())
        throw std::logic_error("an ideal generator does not annihilate the highest-weight vector");
  }

  std::vector<GradedIndex> comps = budget_components(n, w_max, charge_max);
  std::vector<long> principal(comps.size(), 0);
  parallel_for(opts.jobs, comps.size(),
               [&](size_t i) { principal[i] = principal_dim(fspace, lambda, comps[i]); });

  std::vector<long> ambient(comps.size(), 0);
  for (size_t i = 0; i < comps.size(); ++i)
    ambient[i] = static_cast<long>(
        enumerate_monomials(alg.rs, comps[i], -std::max(comps[i].weight, 1), -1, true).size());

  std::vector<long> quotient(comps.size(), 0), prev_quotient;
  std::vector<long> ranks(comps.size(), 0);
  std::string status = "UNSTABLE";
  int growth_steps = 0, closure_passes = 0;
  Window final_window{};
  std::unique_ptr<IdealClosure> prev_closure;

  for (int delta = 0; delta <= opts.growth_cap; ++delta) {
    Window window = Window::defaults(w_max + delta, charge_max);
    if (opts.mode_bound > 0) window.mode_bound = opts.mode_bound;
    window.t_max = w_max + delta;
    auto closure = std::make_unique<IdealClosure>(alg, spec, window);
    bool loaded = cache_load(opts.cache_dir, alg, lambda, *closure);
    if (!loaded && prev_closure) closure->warm_start(*prev_closure);
    bool stable = closure->run();
    if (!loaded && stable) cache_save(opts.cache_dir, alg, lambda, *closure);

    growth_steps = delta;
    final_window = window;
    closure_passes = closure->passes();
    if (stable) {
      for (size_t i = 0; i < comps.size(); ++i) {
        ranks[i] = closure->rank(comps[i]);
        quotient[i] = ambient[i] - ranks[i];
        if (quotient[i] < principal[i])
          throw std::logic_error("quotient dimension fell below the principal dimension");
      }
      bool all_equal = true;
      for (size_t i = 0; i < comps.size(); ++i)
        if (quotient[i] != principal[i]) all_equal = false;
      if (all_equal) {
        // Rigorous stop: ranks only grow with the window and the quotient is
        // bounded below by the principal side, so equality is final.
        status = "PASS";
        prev_closure = std::move(closure);
        break;
      }
      if (!prev_quotient.empty() && quotient == prev_quotient) {
        status = "MISMATCH";
        prev_closure = std::move(closure);
        break;
      }
      prev_quotient = quotient;
    }
    prev_closure = std::move(closure);
  }

  rep.status = status;
  rep.growth_steps = growth_steps;
  rep.closure_passes = closure_passes;
  rep.final_window = final_window;
  for (size_t i = 0; i < comps.size(); ++i) {
    ComponentResult cr;
    cr.g = comps[i];
    cr.ambient = ambient[i];
    cr.ideal_rank = ranks[i];
    cr.quotient_dim = quotient[i];
    cr.principal_dim = principal[i];
    cr.equal = (quotient[i] == principal[i]);
    rep.components.push_back(cr);
    if (!cr.equal) rep.mismatches.push_back(comps[i]);
  }
  return rep;
}

std::string VerificationReport::to_json() const {
  ordered_json j;
  j["n"] = n;
  j["k"] = k;
  j["lambda"] = lambda;
  j["max_weight"] = max_weight;
  j["max_charge"] = max_charge;
  j["mode"] = mode;
  j["status"] = status;
  j["window"] = {{"w_internal", final_window.w_max},
                 {"charge_internal", final_window.charge_max},
                 {"mode_bound", final_window.mode_bound},
                 {"t_max", final_window.t_max},
                 {"growth_steps", growth_steps},
                 {"closure_passes", closure_passes},
                 {"skipped_charges_above", max_charge}};
  j["components"] = ordered_json::array();
  for (const auto& c : components) {
    ordered_json jc;
    jc["weight"] = c.g.weight;
    jc["charges"] = c.g.charges;
    jc["ambient"] = c.ambient;
    jc["ideal_rank"] = c.ideal_rank;
    jc["quotient_dim"] = c.quotient_dim;
    jc["principal_dim"] = c.principal_dim;
    jc["equal"] = c.equal;
    j["components"].push_back(jc);
  }
  j["mismatches"] = ordered_json::array();
  for (const auto& g : mismatches) {
    ordered_json jm;
    jm["weight"] = g.weight;
    jm["charges"] = g.charges;
    j["mismatches"].push_back(jm);
  }
  return j.dump(1) + "\n";
}

std::string VerificationReport::to_tsv() const {
  std::ostringstream os;
  os << "# n=" << n << " k=" << k << " lambda=";
  for (size_t i = 0; i < lambda.size(); ++i) os << (i ? "," : "") << lambda[i];
  os << " max_weight=" << max_weight << " max_charge=" << max_charge << " mode=" << mode
     << " status=" << status << "\n";
  os << "# window: w_internal=" << final_window.w_max
     << " mode_bound=" << final_window.mode_bound << " t_max=" << final_window.t_max
     << " growth_steps=" << growth_steps << " closure_passes=" << closure_passes
     << " skipped_charges_above=" << max_charge << "\n";
  os << "weight\tcharges\tambient\tideal_rank\tquotient_dim\tprincipal_dim\tequal\n";
  for (const auto& c : components) {
    os << c.g.weight << "\t";
    for (size_t i = 0; i < c.g.charges.size(); ++i) os << (i ? "," : "") << c.g.charges[i];
    os << "\t" << c.ambient << "\t" << c.ideal_rank << "\t" << c.quotient_dim << "\t"
       << c.principal_dim << "\t" << (c.equal ? "true" : "false") << "\n";
  }
  return os.str();
}

std::vector<QSeriesRow> qseries(const Algebra& alg, const AffineWeight& lambda, int w_max,
                                int charge_max, int jobs) {
  FockSpace fspace(alg);
  std::vector<GradedIndex> comps = budget_components(alg.rank(), w_max, charge_max);
  std::vector<QSeriesRow> rows(comps.size());
  parallel_for(jobs, comps.size(), [&](size_t i) {
    rows[i] = QSeriesRow{comps[i], principal_dim(fspace, lambda, comps[i])};
  });
  return rows;
}

std::string qseries_tsv(const Algebra& alg, const AffineWeight& lambda,
                        const std::vector<QSeriesRow>& rows) {
  std::ostringstream os;
  os << "# n=" << alg.rank() << " k=" << lambda.level() << " lambda=";
  for (size_t i = 0; i < lambda.coords.size(); ++i) os << (i ? "," : "") << lambda.coords[i];
  os << "\n";
  os << "weight\tcharges\tdim\n";
  for (const auto& r : rows) {
    os << r.g.weight << "\t";
    for (size_t i = 0; i < r.g.charges.size(); ++i) os << (i ? "," : "") << r.g.charges[i];
    os << "\t" << r.dim << "\n";
  }
  return os.str();
}

std::string qseries_json(const Algebra& alg, const AffineWeight& lambda,
                         const std::vector<QSeriesRow>& rows) {
  ordered_json j;
  j["n"] = alg.rank();
  j["k"] = lambda.level();
  j["lambda"] = lambda.coords;
  j["rows"] = ordered_json::array();
  for (const auto& r : rows) {
    ordered_json jr;
    jr["weight"] = r.g.weight;
    jr["charges"] = r.g.charges;
    jr["dim"] = r.dim;
    j["rows"].push_back(jr);
  }
  return j.dump(1) + "\n";
}

namespace {

std::vector<Rat> trivial_character(int n) { return std::vector<Rat>(n, 1); }

LemmaCase check_case(const Algebra& alg, const AlgElem& image, const std::vector<int>& target,
                     const std::string& gen_text, int map_index, int growth_cap) {
  AffineWeight tw{target};
  IdealSpec tspec = IdealSpec::standard(alg, tw);
  LemmaCase c;
  c.generator = gen_text;
  c.map_index = map_index;
  c.target = target;
  c.member = membership(alg, tspec, image, growth_cap);
  return c;
}

}  // namespace

LemmaReport lemma_check_tau(const Algebra& alg, const AffineWeight& lambda, int w_max,
                            int growth_cap) {
  if (alg.rank() != 2) throw std::invalid_argument("the tau lemma is stated for rank 2");
  const int k0 = lambda.coords[0], k1 = lambda.coords[1], k2 = lambda.coords[2];
  LemmaReport rep;
  rep.which = "tau";
  rep.source = lambda.coords;
  IdealSpec spec = IdealSpec::standard(alg, lambda);
  std::vector<Rat> nu = trivial_character(alg.rank());
  bool ok = true;
  for (const AlgElem& gen : ideal_generators_upto(alg, spec, w_max, 2)) {
    std::string text = to_text(alg.rs, gen);
    AlgElem img1 = tau_affine(alg, 1, nu, lambda, gen);
    LemmaCase c1 = check_case(alg, img1, {k2, k0, k1}, text, 1, growth_cap);
    AlgElem img2 = tau_affine(alg, 2, nu, lambda, gen);
    LemmaCase c2 = check_case(alg, img2, {k1, k2, k0}, text, 2, growth_cap);
    ok = ok && c1.member && c2.member;
    rep.cases.push_back(std::move(c1));
    rep.cases.push_back(std::move(c2));
  }
  rep.pass = ok;
  return rep;
}

LemmaReport lemma_check_sigma(const Algebra& alg, int k1, int k2, int w_max, int growth_cap) {
  if (alg.rank() != 2) throw std::invalid_argument("the sigma lemma is stated for rank 2");
  AffineWeight source{{0, k1, k2}};
  LemmaReport rep;
  rep.which = "sigma";
  rep.source = source.coords;
  IdealSpec spec = IdealSpec::standard(alg, source);
  std::vector<Rat> nu = trivial_character(alg.rank());
  bool ok = true;
  for (const AlgElem& gen : ideal_generators_upto(alg, spec, w_max, 2)) {
    std::string text = to_text(alg.rs, gen);
    AlgElem img1 = sigma_affine(alg, 1, nu, k1, k2, gen);
    LemmaCase c1 = check_case(alg, img1, {k1, k2, 0}, text, 1, growth_cap);
    AlgElem img2 = sigma_affine(alg, 2, nu, k1, k2, gen);
    LemmaCase c2 = check_case(alg, img2, {k2, 0, k1}, text, 2, growth_cap);
    ok = ok && c1.member && c2.member;
    rep.cases.push_back(std::move(c1));
    rep.cases.push_back(std::move(c2));
  }
  rep.pass = ok;
  return rep;
}

std::string LemmaReport::to_text() const {
  std::ostringstream os;
  os << "lemma " << which << " source=";
  for (size_t i = 0; i < source.size(); ++i) os << (i ? "," : "") << source[i];
  os << " " << (pass ? "PASS" : "FAIL") << "\n";
  for (const auto& c : cases) {
    os << (c.member ? "  member " : "  MISSING ") << which << "_" << c.map_index << " target=";
    for (size_t i = 0; i < c.target.size(); ++i) os << (i ? "," : "") << c.target[i];
    os << " generator " << c.generator << "\n";
  }
  return os.str();
}

}  // namespace psv
