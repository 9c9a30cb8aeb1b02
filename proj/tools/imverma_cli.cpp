#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "imverma/verify.hpp"

namespace {

using namespace imverma;

void emit(const std::string& out_path, const std::string& payload) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file '" + out_path + "'");
  f << payload;
}

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::pair<int, int> parse_range(const std::string& text) {
  auto colon = text.find(':', 1);  // a leading '-' is part of lo
  if (colon == std::string::npos)
    throw std::invalid_argument("range must be lo:hi, got '" + text + "'");
  return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
}

struct OpSpec {
  std::string name;  // xm | xp | psi | phi
  int index = 0;
};

std::vector<OpSpec> parse_opspec(const std::string& spec) {
  std::vector<OpSpec> ops;
  std::istringstream ss(spec);
  std::string tok;
  while (ss >> tok) {
    auto open = tok.find('(');
    if (open == std::string::npos || tok.back() != ')')
      throw std::invalid_argument("bad operator '" + tok + "' (want name(k))");
    OpSpec op;
    op.name = tok.substr(0, open);
    if (op.name != "xm" && op.name != "xp" && op.name != "psi" && op.name != "phi")
      throw std::invalid_argument("unknown operator '" + op.name + "'");
    op.index = std::stoi(tok.substr(open + 1, tok.size() - open - 2));
    ops.push_back(op);
  }
  if (ops.empty()) throw std::invalid_argument("empty operator spec");
  return ops;
}

ModuleVector apply_ops(const std::vector<OpSpec>& ops, ModuleVector v) {
  // juxtaposition acts right-to-left
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    if (it->name == "xm") v = act_xminus(it->index, v);
    else if (it->name == "xp") v = act_xplus(it->index, v);
    else if (it->name == "psi") v = act_omega(it->index, v);
    else v = act_omega_phi(it->index, v);
  }
  return v;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations in the lowering half of quantum affine sl(2):"
               " normal forms, derivative operators, the contravariant form,"
               " reduced highest-weight modules and their residue bases"};
  app.require_subcommand(1);

  std::string out_path, config_path;
  std::string word_arg, spec_arg, vector_arg, suite_arg;
  std::string index_range = "-3:3", label_range = "-4:4", format = "json";
  std::string lambda_h_text = "1", lambda_d_text = "0";
  int win_len = 1, max_len = 3, parallel = 1;
  long win_degree = 0;
  unsigned long seed = 20240915;
  bool mod_q2 = false, omega_edges = false, boundary = false;
  int cfg_max_len = 3;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "write the payload to this file instead of stdout");
    sub->add_option("--config", config_path,
                    "JSON config file (default: $IMVERMA_CONFIG); flags override");
    sub->add_option("--seed", seed, "seed recorded in reports");
    sub->add_option("--parallel", parallel,
                    "worker threads (results are independent of the degree)");
  };

  auto* nf = app.add_subcommand("nf", "straighten a free word to its normal form");
  nf->add_option("word", word_arg, "word literal [i1,...,ik]")->required();
  add_common(nf);

  auto* apply = app.add_subcommand("apply", "apply an operator word to a module vector");
  apply->add_option("spec", spec_arg, "operators xm(k) xp(k) psi(k) phi(k), right-to-left")->required();
  apply->add_option("vector", vector_arg, "module-vector JSON file ('-' for stdin)")->required();
  add_common(apply);

  auto* gramc = app.add_subcommand("gram", "Gram matrix of the contravariant form on a window");
  gramc->add_option("--len", win_len, "window length")->required();
  gramc->add_option("--degree", win_degree, "window degree")->required();
  gramc->add_option("--index-range", index_range, "index bounds lo:hi");
  gramc->add_flag("--mod-q2", mod_q2, "also emit the constant-term integer matrix");
  gramc->add_option("--format", format, "json|csv");
  add_common(gramc);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite_arg, "gseries|straighten|relations|form|crystal|simplicity|lattice")->required();
  verify->add_option("--max-len", cfg_max_len, "basis length bound");
  verify->add_option("--index-range", index_range, "index bounds lo:hi");
  verify->add_option("--label-range", label_range, "operator label bounds lo:hi");
  verify->add_option("--lambda-h", lambda_h_text, "highest weight at h (rational)");
  verify->add_option("--lambda-d", lambda_d_text, "highest weight at d (rational)");
  verify->add_flag("--boundary-study", boundary, "allow lambda-h = 0");
  add_common(verify);

  auto* graphc = app.add_subcommand("graph", "export the residue-basis graph");
  graphc->add_option("--max-len", max_len, "node length bound");
  graphc->add_option("--index-range", index_range, "index bounds lo:hi");
  graphc->add_option("--label-range", label_range, "edge label bounds lo:hi");
  graphc->add_option("--lambda-h", lambda_h_text, "highest weight at h (rational)");
  graphc->add_flag("--omega-edges", omega_edges, "include dual derivative edges");
  graphc->add_option("--format", format, "dot|json");
  add_common(graphc);

  auto* singular = app.add_subcommand("singular", "basis of the joint raising-operator kernel on a window");
  singular->add_option("--len", win_len, "window length")->required();
  singular->add_option("--degree", win_degree, "window degree")->required();
  singular->add_option("--index-range", index_range, "index bounds lo:hi");
  singular->add_option("--lambda-h", lambda_h_text, "highest weight at h (rational)");
  singular->add_option("--lambda-d", lambda_d_text, "highest weight at d (rational)");
  singular->add_flag("--boundary-study", boundary, "allow lambda-h = 0");
  add_common(singular);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    // defaults, then the config file, then explicit flags
    CLI::App* active = app.get_subcommands().front();
    SweepConfig cfg;
    {
      std::string file = config_path;
      if (file.empty())
        if (const char* env = std::getenv("IMVERMA_CONFIG")) file = env;
      if (!file.empty()) config_apply_json(cfg, Json::parse(slurp(file)));
    }
    auto has = [&](const char* flag) {
      const CLI::Option* o = active->get_option_no_throw(flag);
      return o != nullptr && o->count() > 0;
    };
    if (has("--max-len")) {
      cfg.max_length = verify->parsed() ? cfg_max_len : max_len;
    }
    if (has("--index-range"))
      std::tie(cfg.index_lo, cfg.index_hi) = parse_range(index_range);
    if (has("--label-range"))
      std::tie(cfg.label_lo, cfg.label_hi) = parse_range(label_range);
    if (has("--lambda-h")) cfg.lambda_h = parse_rational(lambda_h_text);
    if (has("--lambda-d")) cfg.lambda_d = parse_rational(lambda_d_text);
    if (has("--boundary-study")) cfg.boundary_study = boundary;
    if (has("--seed")) cfg.seed = seed;
    if (has("--parallel")) cfg.parallelism = parallel;
    if (has("--out")) cfg.output_path = out_path;
    const std::string& sink = cfg.output_path;

    if (nf->parsed()) {
      const Element e = straighten(parse_word(word_arg));
      emit(sink, dump(element_to_json(e)));
      return 0;
    }

    if (apply->parsed()) {
      const auto ops = parse_opspec(spec_arg);
      ModuleVector v = module_vector_from_json(Json::parse(slurp(vector_arg)));
      emit(sink, dump(module_vector_to_json(apply_ops(ops, v))));
      return 0;
    }

    if (gramc->parsed()) {
      const GramMatrix g =
          gram(WeightWindow{win_len, win_degree, cfg.index_lo, cfg.index_hi});
      if (format == "csv")
        emit(sink, gram_to_csv(g));
      else if (format == "json")
        emit(sink, dump(gram_to_json(g, mod_q2)));
      else
        throw std::invalid_argument("gram supports --format json|csv");
      return 0;
    }

    if (verify->parsed()) {
      if (!is_suite(suite_arg))
        throw std::invalid_argument("unknown suite '" + suite_arg + "'");
      const SuiteReport rep = run_suite(suite_arg, cfg);
      emit(sink, dump(report_to_json(rep)));
      return rep.pass() ? 0 : 1;
    }

    if (graphc->parsed()) {
      const CrystalGraph g =
          crystal_graph(cfg.max_length, cfg.index_lo, cfg.index_hi,
                        cfg.label_lo, cfg.label_hi, omega_edges);
      if (format == "dot")
        emit(sink, graph_to_dot(g));
      else if (format == "json")
        emit(sink, dump(graph_to_json(g)));
      else
        throw std::invalid_argument("graph supports --format dot|json");
      return 0;
    }

    if (singular->parsed()) {
      const HighestWeight lambda(cfg.lambda_h, cfg.lambda_d, cfg.boundary_study);
      const WeightWindow w{win_len, win_degree, cfg.index_lo, cfg.index_hi};
      const auto kernel = find_singular_vectors(w, lambda);
      Json j;
      j["window"] = window_to_json(w);
      j["lambda"]["h"] = rational_text(lambda.h);
      j["lambda"]["d"] = rational_text(lambda.d);
      j["count"] = kernel.size();
      Json vs = Json::array();
      for (const auto& v : kernel) vs.push_back(element_to_json(v.payload()));
      j["vectors"] = std::move(vs);
      emit(sink, dump(j));
      return 0;
    }
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
