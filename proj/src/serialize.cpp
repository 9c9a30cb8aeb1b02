#include "imverma/serialize.hpp"

#include <sstream>

namespace imverma {

Json element_to_json(const Element& e) {
  Json arr = Json::array();
  for (const auto& [m, c] : e.terms()) {
    Json term;
    term["coeff"] = c.text();
    term["monomial"] = m.indices();
    arr.push_back(std::move(term));
  }
  return arr;
}

Element element_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("element JSON must be an array");
  Element e;
  for (const auto& term : j) {
    Scalar c = Scalar::parse(term.at("coeff").get<std::string>());
    FreeWord w = term.at("monomial").get<FreeWord>();
    e.add_term(PBWMonomial(std::move(w)), c);
  }
  return e;
}

Json module_vector_to_json(const ModuleVector& v) {
  Json j;
  j["lambda"]["h"] = rational_text(v.lambda().h);
  j["lambda"]["d"] = rational_text(v.lambda().d);
  j["element"] = element_to_json(v.payload());
  return j;
}

ModuleVector module_vector_from_json(const Json& j) {
  Rational h = parse_rational(j.at("lambda").at("h").get<std::string>());
  Rational d = parse_rational(j.at("lambda").at("d").get<std::string>());
  // a vector file carrying lambda(h) = 0 is by definition a boundary study
  HighestWeight lambda(h, d, h == 0);
  return {element_from_json(j.at("element")), lambda};
}

Json window_to_json(const WeightWindow& w) {
  Json j;
  j["length"] = w.length;
  j["degree"] = w.degree;
  j["lo"] = w.lo;
  j["hi"] = w.hi;
  return j;
}

WeightWindow window_from_json(const Json& j) {
  WeightWindow w;
  w.length = j.at("length").get<int>();
  w.degree = j.at("degree").get<long>();
  w.lo = j.at("lo").get<int>();
  w.hi = j.at("hi").get<int>();
  return w;
}

Json gram_to_json(const GramMatrix& g, bool with_mod_q2) {
  Json j;
  j["window"] = window_to_json(g.window);
  Json basis = Json::array();
  for (const auto& m : g.basis) basis.push_back(m.indices());
  j["basis"] = std::move(basis);
  Json entries = Json::array();
  for (const auto& row : g.entries) {
    Json r = Json::array();
    for (const auto& s : row) r.push_back(s.text());
    entries.push_back(std::move(r));
  }
  j["entries"] = std::move(entries);
  if (with_mod_q2) {
    Json reduced = Json::array();
    for (const auto& row : gram_mod_q2(g)) {
      Json r = Json::array();
      for (const auto& c : row) r.push_back(rational_text(c));
      reduced.push_back(std::move(r));
    }
    j["entries_mod_q2"] = std::move(reduced);
  }
  return j;
}

std::string gram_to_csv(const GramMatrix& g) {
  std::ostringstream os;
  os << "basis";
  for (const auto& m : g.basis) os << "," << '"' << word_text(m.indices()) << '"';
  os << "\n";
  for (int i = 0; i < g.size(); ++i) {
    os << '"' << word_text(g.basis[static_cast<std::size_t>(i)].indices()) << '"';
    for (const auto& s : g.entries[static_cast<std::size_t>(i)])
      os << "," << '"' << s.text() << '"';
    os << "\n";
  }
  return os.str();
}

Json graph_to_json(const CrystalGraph& g) {
  Json j;
  Json nodes = Json::array();
  for (const auto& m : g.nodes) nodes.push_back(m.indices());
  j["nodes"] = std::move(nodes);
  auto edges_json = [](const std::vector<CrystalEdge>& es) {
    Json out = Json::array();
    for (const auto& e : es) {
      Json je;
      je["src"] = e.src;
      je["dst"] = e.dst;
      je["m"] = e.label;
      je["sign"] = e.sign > 0 ? "+" : "-";
      out.push_back(std::move(je));
    }
    return out;
  };
  j["edges"] = edges_json(g.edges);
  if (!g.omega_edges.empty()) j["omega_edges"] = edges_json(g.omega_edges);
  return j;
}

}  // namespace imverma
