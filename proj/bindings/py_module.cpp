// Python bindings for the core operations: root data, enveloping-algebra
// arithmetic, module actions, membership, and the two-sided verifier.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "psv/text.hpp"
#include "psv/verifier.hpp"

namespace py = pybind11;
using namespace psv;

namespace {

struct PyElem {
  AlgElem elem;
  std::string text;
};

PyElem wrap(const Algebra& alg, AlgElem e) {
  std::string t = to_text(alg.rs, e);
  return PyElem{std::move(e), std::move(t)};
}

std::vector<Rat> character_from_strings(const std::vector<std::string>& nu) {
  std::vector<Rat> out;
  for (const auto& s : nu) out.emplace_back(s);
  for (auto& r : out) r.canonicalize();
  return out;
}

class PyAlgebra {
 public:
  explicit PyAlgebra(int n) : alg_(build_algebra(n)) {}

  int rank() const { return alg_.rank(); }
  std::vector<std::vector<int>> cartan() const { return alg_.rs.cartan; }
  std::vector<std::vector<int>> positive_roots() const { return alg_.rs.positive_roots; }
  std::vector<std::vector<std::string>> fund_weight_pairing() const {
    std::vector<std::vector<std::string>> out;
    for (const auto& row : alg_.rs.fund_weight_pairing) {
      out.emplace_back();
      for (const auto& v : row) out.back().push_back(rat_to_string(v));
    }
    return out;
  }
  int eps(const std::vector<int>& lam, const std::vector<int>& mu) const {
    return alg_.eps(lam, mu);
  }
  int commutator(const std::vector<int>& lam, const std::vector<int>& mu) const {
    return alg_.commutator(lam, mu);
  }

  PyElem parse(const std::string& s) const { return wrap(alg_, parse_elem(alg_, s)); }
  PyElem unit() const { return wrap(alg_, AlgElem::unit()); }
  PyElem generator(const std::vector<int>& coords, int mode) const {
    int root = alg_.rs.root_index(coords);
    if (root < 0) throw std::invalid_argument("coordinates do not name a positive root");
    return wrap(alg_, AlgElem::gen(root, mode));
  }
  PyElem multiply(const PyElem& a, const PyElem& b) const {
    return wrap(alg_, psv::multiply(alg_, a.elem, b.elem));
  }
  PyElem add(const PyElem& a, const PyElem& b) const { return wrap(alg_, a.elem + b.elem); }
  PyElem tau(const std::vector<int>& lam_fw, const std::vector<std::string>& nu,
             const PyElem& a) const {
    return wrap(alg_, psv::tau(alg_, lam_fw, character_from_strings(nu), a.elem));
  }
  PyElem tau_affine(int i, const std::vector<int>& lambda, const PyElem& a) const {
    std::vector<Rat> triv(alg_.rank(), 1);
    return wrap(alg_, psv::tau_affine(alg_, i, triv, AffineWeight{lambda}, a.elem));
  }
  PyElem sigma_affine(int i, int k1, int k2, const PyElem& a) const {
    std::vector<Rat> triv(alg_.rank(), 1);
    return wrap(alg_, psv::sigma_affine(alg_, i, triv, k1, k2, a.elem));
  }
  PyElem r_generator(int i, int t, int level) const {
    return wrap(alg_, psv::r_generator(alg_, i, t, level));
  }

  std::vector<std::string> enumerate(int weight, const std::vector<int>& charges,
                                     bool negative_only) const {
    std::vector<std::string> out;
    for (const auto& m : enumerate_monomials(alg_.rs, GradedIndex{weight, charges},
                                             -std::max(weight, 1), negative_only ? -1 : weight,
                                             negative_only))
      out.push_back(to_text(alg_.rs, m));
    return out;
  }

  std::vector<std::pair<std::string, std::string>> act(const std::vector<int>& lambda,
                                                       const PyElem& a) const {
    FockSpace fs(alg_);
    ModuleVec v = fs.act_elem(a.elem, fs.highest_weight_vector(AffineWeight{lambda}));
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [t, c] : v.terms) out.emplace_back(to_text(t), rat_to_string(c));
    return out;
  }

  long principal_dim(const std::vector<int>& lambda, int weight,
                     const std::vector<int>& charges) const {
    FockSpace fs(alg_);
    return psv::principal_dim(fs, AffineWeight{lambda}, GradedIndex{weight, charges});
  }

  bool membership(const std::vector<int>& lambda, const PyElem& a) const {
    IdealSpec spec = IdealSpec::standard(alg_, AffineWeight{lambda});
    return psv::membership(alg_, spec, a.elem);
  }

  std::string verify_json(const std::vector<int>& lambda, int max_weight, int max_charge,
                          int jobs, int growth_cap, const std::string& cache_dir) const {
    VerifyOptions opts;
    opts.jobs = jobs;
    opts.growth_cap = growth_cap;
    opts.cache_dir = cache_dir;
    return verify_presentation(alg_, AffineWeight{lambda}, max_weight, max_charge, opts)
        .to_json();
  }

  std::vector<std::tuple<int, std::vector<int>, long>> qseries_table(
      const std::vector<int>& lambda, int max_weight, int max_charge, int jobs) const {
    std::vector<std::tuple<int, std::vector<int>, long>> out;
    for (const auto& row : psv::qseries(alg_, AffineWeight{lambda}, max_weight, max_charge, jobs))
      out.emplace_back(row.g.weight, row.g.charges, row.dim);
    return out;
  }

  std::pair<bool, std::string> lemma_tau(const std::vector<int>& lambda, int max_weight) const {
    LemmaReport rep = lemma_check_tau(alg_, AffineWeight{lambda}, max_weight);
    return {rep.pass, rep.to_text()};
  }
  std::pair<bool, std::string> lemma_sigma(int k1, int k2, int max_weight) const {
    LemmaReport rep = lemma_check_sigma(alg_, k1, k2, max_weight);
    return {rep.pass, rep.to_text()};
  }

 private:
  Algebra alg_;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact principal-subspace computations for affine sl(n+1)";

  py::register_exception<ParseError>(m, "ParseError");

  py::class_<PyElem>(m, "Elem")
      .def_readonly("text", &PyElem::text)
      .def("__repr__", [](const PyElem& e) { return e.text; })
      .def("__eq__", [](const PyElem& a, const PyElem& b) { return a.elem == b.elem; })
      .def("is_zero", [](const PyElem& e) { return e.elem.is_zero(); });

  py::class_<PyAlgebra>(m, "Algebra")
      .def(py::init<int>(), py::arg("rank"))
      .def_property_readonly("rank", &PyAlgebra::rank)
      .def("cartan", &PyAlgebra::cartan)
      .def("positive_roots", &PyAlgebra::positive_roots)
      .def("fund_weight_pairing", &PyAlgebra::fund_weight_pairing)
      .def("eps", &PyAlgebra::eps, py::arg("lam"), py::arg("mu"))
      .def("commutator", &PyAlgebra::commutator, py::arg("lam"), py::arg("mu"))
      .def("parse", &PyAlgebra::parse)
      .def("unit", &PyAlgebra::unit)
      .def("generator", &PyAlgebra::generator, py::arg("root_coords"), py::arg("mode"))
      .def("multiply", &PyAlgebra::multiply)
      .def("add", &PyAlgebra::add)
      .def("tau", &PyAlgebra::tau, py::arg("lam_fw"), py::arg("nu"), py::arg("elem"))
      .def("tau_affine", &PyAlgebra::tau_affine, py::arg("i"), py::arg("lam"), py::arg("elem"))
      .def("sigma_affine", &PyAlgebra::sigma_affine, py::arg("i"), py::arg("k1"), py::arg("k2"),
           py::arg("elem"))
      .def("r_generator", &PyAlgebra::r_generator, py::arg("i"), py::arg("t"), py::arg("level"))
      .def("enumerate_monomials", &PyAlgebra::enumerate, py::arg("weight"), py::arg("charges"),
           py::arg("negative_only") = true)
      .def("act", &PyAlgebra::act, py::arg("lam"), py::arg("elem"))
      .def("principal_dim", &PyAlgebra::principal_dim, py::arg("lam"), py::arg("weight"),
           py::arg("charges"))
      .def("membership", &PyAlgebra::membership, py::arg("lam"), py::arg("elem"))
      .def("verify_json", &PyAlgebra::verify_json, py::arg("lam"), py::arg("max_weight"),
           py::arg("max_charge"), py::arg("jobs") = 1, py::arg("growth_cap") = 8,
           py::arg("cache_dir") = std::string())
      .def("qseries", &PyAlgebra::qseries_table, py::arg("lam"), py::arg("max_weight"),
           py::arg("max_charge"), py::arg("jobs") = 1)
      .def("lemma_tau", &PyAlgebra::lemma_tau, py::arg("lam"), py::arg("max_weight") = 4)
      .def("lemma_sigma", &PyAlgebra::lemma_sigma, py::arg("k1"), py::arg("k2"),
           py::arg("max_weight") = 4);
}
