#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "imverma/verify.hpp"

namespace py = pybind11;
using namespace imverma;

namespace {

// python-facing payloads travel as JSON text; keeps both sides canonical
std::string element_json(const Element& e) { return element_to_json(e).dump(); }

Element element_of(const std::string& json) {
  return element_from_json(Json::parse(json));
}

HighestWeight weight_of(const std::string& h, const std::string& d) {
  Rational rh = parse_rational(h);
  return HighestWeight(rh, parse_rational(d), rh == 0);
}

std::optional<std::pair<int, FreeWord>> node_out(const CrystalNode& n) {
  if (n.is_zero()) return std::nullopt;
  return std::pair{n.sign(), n.monomial().indices()};
}

CrystalNode node_in(int sign, const FreeWord& w) {
  return CrystalNode(sign, PBWMonomial(w));
}

}  // namespace

PYBIND11_MODULE(imverma, m) {
  m.doc() = "exact computations in the lowering half of quantum affine sl(2)";

  m.def("q_int", [](long n) { return q_int(n).text(); }, py::arg("n"),
        "balanced quantum integer [n] as canonical scalar text");
  m.def("g_coeff", [](long r) { return g_coeff(r).text(); }, py::arg("r"));
  m.def("g_coeff_inverse", [](long r) { return g_coeff_inverse(r).text(); }, py::arg("r"));
  m.def("scalar_valuation",
        [](const std::string& s) { return Scalar::parse(s).valuation(); },
        py::arg("scalar"), "v-adic valuation of a nonzero c-free scalar");
  m.def("scalar_arith", [](const std::string& a, const std::string& op,
                           const std::string& b) {
    Scalar x = Scalar::parse(a), y = Scalar::parse(b);
    if (op == "+") return (x + y).text();
    if (op == "-") return (x - y).text();
    if (op == "*") return (x * y).text();
    if (op == "/") return (x / y).text();
    throw std::invalid_argument("op must be one of + - * /");
  });

  m.def("nf", [](const FreeWord& w) { return element_json(straighten(w)); },
        py::arg("word"), "normal form of a free word, as element JSON");
  m.def("multiply", [](const std::string& a, const std::string& b) {
    return element_json(multiply(element_of(a), element_of(b)));
  });

  m.def("omega", [](const std::string& kind, int k, const std::string& element,
                    bool symbolic_gamma) {
    const Gamma g = symbolic_gamma ? Gamma::symbolic : Gamma::one;
    const Element e = element_of(element);
    if (kind == "psi") return element_json(omega_psi(k, e, g));
    if (kind == "phi") return element_json(omega_phi(k, e, g));
    throw std::invalid_argument("kind must be psi or phi");
  }, py::arg("kind"), py::arg("k"), py::arg("element"),
     py::arg("symbolic_gamma") = false);

  m.def("pair_form", [](const FreeWord& a, const FreeWord& b) {
    return pair_form(PBWMonomial(a), PBWMonomial(b)).text();
  });
  m.def("gram", [](int length, long degree, int lo, int hi) {
    return gram_to_json(gram(WeightWindow{length, degree, lo, hi}), true).dump();
  });

  m.def("act", [](const std::string& op, int k, const std::string& vector_json) {
    ModuleVector v = module_vector_from_json(Json::parse(vector_json));
    if (op == "xm") v = act_xminus(k, v);
    else if (op == "xp") v = act_xplus(k, v);
    else if (op == "psi") v = act_omega(k, v);
    else if (op == "phi") v = act_omega_phi(k, v);
    else throw std::invalid_argument("op must be xm, xp, psi or phi");
    return module_vector_to_json(v).dump();
  });

  m.def("singular_vectors", [](int length, long degree, int lo, int hi,
                               const std::string& lambda_h, const std::string& lambda_d) {
    const auto kernel = find_singular_vectors(WeightWindow{length, degree, lo, hi},
                                              weight_of(lambda_h, lambda_d));
    std::vector<std::string> out;
    for (const auto& v : kernel) out.push_back(element_json(v.payload()));
    return out;
  });

  m.def("crystal_xminus", [](int mm, int sign, const FreeWord& w) {
    return node_out(crystal_xminus(mm, node_in(sign, w)));
  });
  m.def("crystal_omega", [](int k, int sign, const FreeWord& w) {
    return node_out(crystal_omega(k, node_in(sign, w)));
  });

  m.def("lattice_membership", [](const std::string& scalar, int n_max) {
    const MembershipReport r = lattice_membership(Scalar::parse(scalar), n_max);
    return std::pair{verdict_text(r.regular_at_zero), verdict_text(r.qint_localization)};
  }, py::arg("scalar"), py::arg("n_max") = 6);

  m.def("run_suite", [](const std::string& name, const std::string& config_json) {
    SweepConfig cfg;
    if (!config_json.empty()) config_apply_json(cfg, Json::parse(config_json));
    return report_to_json(run_suite(name, cfg)).dump();
  }, py::arg("name"), py::arg("config_json") = std::string());

  m.def("suite_names", [] { return suite_names(); });
}
