#include "imverma/verify.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <stdexcept>
#include <thread>

namespace imverma {

void SweepConfig::validate() const {
  if (index_lo > index_hi || label_lo > label_hi)
    throw std::invalid_argument("ranges need lo <= hi");
  if (max_length < 0) throw std::invalid_argument("max-length must be >= 0");
  if (parallelism < 1) throw std::invalid_argument("parallelism must be >= 1");
  if (lambda_h == 0 && !boundary_study)
    throw std::invalid_argument("lambda-h = 0 requires --boundary-study");
}

// the echo carries only semantic inputs: parallelism and the output path
// steer execution, not results, and reports must be byte-identical across them
Json config_to_json(const SweepConfig& c) {
  Json j;
  j["max-length"] = c.max_length;
  j["index-lo"] = c.index_lo;
  j["index-hi"] = c.index_hi;
  j["label-lo"] = c.label_lo;
  j["label-hi"] = c.label_hi;
  j["lambda-h"] = rational_text(c.lambda_h);
  j["lambda-d"] = rational_text(c.lambda_d);
  j["seed"] = c.seed;
  j["boundary-study"] = c.boundary_study;
  return j;
}

void config_apply_json(SweepConfig& c, const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  for (const auto& [key, val] : j.items()) {
    if (key == "max-length") c.max_length = val.get<int>();
    else if (key == "index-lo") c.index_lo = val.get<int>();
    else if (key == "index-hi") c.index_hi = val.get<int>();
    else if (key == "label-lo") c.label_lo = val.get<int>();
    else if (key == "label-hi") c.label_hi = val.get<int>();
    else if (key == "lambda-h") c.lambda_h = parse_rational(val.get<std::string>());
    else if (key == "lambda-d") c.lambda_d = parse_rational(val.get<std::string>());
    else if (key == "seed") c.seed = val.get<unsigned long>();
    else if (key == "parallelism") c.parallelism = val.get<int>();
    else if (key == "boundary-study") c.boundary_study = val.get<bool>();
    else if (key == "output-path") c.output_path = val.get<std::string>();
    else throw std::invalid_argument("unknown config key '" + key + "'");
  }
}

Json report_to_json(const SuiteReport& r) {
  Json j;
  j["suite"] = r.suite;
  j["seed"] = r.seed;
  j["config"] = r.config;
  j["cells"] = r.cells;
  j["failures"] = r.failures;
  j["pass"] = r.pass();
  return j;
}

void parallel_for(long n, int threads, const std::function<void(long)>& fn) {
  if (threads <= 1 || n <= 1) {
    for (long i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<long> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mutex;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (;;) {
        long i = next.fetch_add(1);
        if (i >= n) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

// ---------------------------------------------------------------------------
// suites

namespace {

// Taylor coefficients of (n0 + n1 t)/(d0 + d1 t) at t = 0; d0 invertible.
std::vector<Scalar> mobius_series(const Scalar& n0, const Scalar& n1,
                                  const Scalar& d0, const Scalar& d1, int n) {
  std::vector<Scalar> c;
  const Scalar d0inv = d0.inverse();
  c.push_back(n0 * d0inv);
  for (int k = 1; k < n; ++k) {
    Scalar num = (k == 1 ? n1 : Scalar::zero()) - d1 * c.back();
    c.push_back(num * d0inv);
  }
  return c;
}

SuiteReport suite_gseries(const SweepConfig& cfg) {
  SuiteReport rep;
  rep.suite = "gseries";
  const int R = 20;
  const Scalar one = Scalar::one();
  const Scalar q2 = Scalar::q_pow(2), qm2 = Scalar::q_pow(-2);
  auto record = [&](const std::string& what, int r, const Scalar& got,
                    const Scalar& want) {
    ++rep.cells;
    if (!(got == want)) {
      Json f;
      f["check"] = what;
      f["r"] = r;
      f["got"] = got.text();
      f["want"] = want.text();
      rep.failures.push_back(std::move(f));
    }
  };
  // Taylor series at t=0 of (q^-2 t - 1)/(t - q^-2) reproduces the table
  auto s1 = mobius_series(-one, qm2, -qm2, one, R);
  for (int r = 0; r < R; ++r) record("taylor0[(q^-2 t-1)/(t-q^-2)]", r, s1[static_cast<std::size_t>(r)], g_coeff(r));
  // Taylor series at t=0 of (q^2 t - 1)/(t - q^2) is its q -> q^-1 image
  auto s2 = mobius_series(-one, q2, -q2, one, R);
  for (int r = 0; r < R; ++r) record("taylor0[(q^2 t-1)/(t-q^2)]", r, s2[static_cast<std::size_t>(r)], g_coeff_inverse(r));
  // expansion of (q^2 t - 1)/(t - q^2) at t = infinity reproduces the table
  auto s3 = mobius_series(q2, -one, one, -q2, R);
  for (int r = 0; r < R; ++r) record("expansion_at_inf[(q^2 t-1)/(t-q^2)]", r, s3[static_cast<std::size_t>(r)], g_coeff(r));
  // the two tables are mutually inverse power series
  for (int r = 0; r < R; ++r) {
    Scalar conv;
    for (int i = 0; i <= r; ++i) conv += g_coeff(i) * g_coeff_inverse(r - i);
    record("convolution", r, conv, r == 0 ? one : Scalar::zero());
  }
  // defining identity of the series: (sum g(r) t^r)(t - q^-2) = q^-2 t - 1 + O(t^{R+1})
  for (int r = 0; r <= R; ++r) {
    Scalar lhs = (r >= 1 ? g_coeff(r - 1) : Scalar::zero()) - qm2 * g_coeff(r);
    Scalar want = r == 0 ? -one : (r == 1 ? qm2 : Scalar::zero());
    record("series-identity", r, lhs, want);
  }
  rep.config = config_to_json(cfg);
  rep.seed = cfg.seed;
  return rep;
}

FreeWord random_word(std::mt19937& rng, int max_len, int lo, int hi) {
  const int span = hi - lo + 1;
  int len = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_len));
  FreeWord w;
  for (int i = 0; i < len; ++i) w.push_back(lo + static_cast<int>(rng() % static_cast<unsigned>(span)));
  return w;
}

SuiteReport suite_straighten(const SweepConfig& cfg) {
  SuiteReport rep;
  rep.suite = "straighten";
  rep.seed = cfg.seed;
  const int N = 500;
  std::mt19937 rng(static_cast<std::uint32_t>(cfg.seed));
  std::vector<FreeWord> words;
  for (int i = 0; i < N; ++i) words.push_back(random_word(rng, 6, -5, 5));

  std::vector<Json> cell_failures(static_cast<std::size_t>(N));
  parallel_for(N, cfg.parallelism, [&](long i) {
    const FreeWord& w = words[static_cast<std::size_t>(i)];
    Json fail;
    const Element lm = straighten(w, RewriteStrategy::leftmost);
    const Element rm = straighten(w, RewriteStrategy::rightmost);
    if (!(lm == rm)) {
      fail["word"] = w;
      fail["reason"] = "strategies disagree";
      fail["leftmost"] = element_to_json(lm);
      fail["rightmost"] = element_to_json(rm);
    }
    FreeWord sorted = w;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    if (fail.empty() && !(lm.subst_v1() == Element::monomial(PBWMonomial(sorted)))) {
      fail["word"] = w;
      fail["reason"] = "v->1 specialization is not the sorted word";
    }
    if (fail.empty()) {
      const Grade g = grade_of(w);
      for (const auto& [m, c] : lm.terms()) {
        if (m.grade() != g) {
          fail["word"] = w;
          fail["reason"] = "grade not preserved";
          break;
        }
        if (!c.in_z_q2()) {
          fail["word"] = w;
          fail["reason"] = "coefficient left Z[q^2]";
          break;
        }
      }
    }
    cell_failures[static_cast<std::size_t>(i)] = std::move(fail);
  });
  rep.cells = N;
  for (auto& f : cell_failures)
    if (!f.empty()) rep.failures.push_back(std::move(f));
  rep.config = config_to_json(cfg);
  return rep;
}

Json relation_mismatch_json(const RelationMismatch& m) {
  Json f;
  f["id"] = relation_name(m.id);
  f["label1"] = m.label1;
  f["label2"] = m.label2;
  f["element"] = m.element.indices();
  f["lhs"] = element_to_json(m.lhs);
  f["rhs"] = element_to_json(m.rhs);
  return f;
}

SuiteReport suite_relations(const SweepConfig& cfg) {
  SuiteReport rep;
  rep.suite = "relations";
  rep.seed = cfg.seed;
  const auto monomials = enumerate_pbw(cfg.max_length, cfg.index_lo, cfg.index_hi);
  const RelationId ids[] = {RelationId::a, RelationId::b, RelationId::c,
                            RelationId::d, RelationId::e};
  const long cells = static_cast<long>(std::size(ids)) * static_cast<long>(monomials.size());
  std::vector<RelationReport> partial(static_cast<std::size_t>(cells));
  parallel_for(cells, cfg.parallelism, [&](long i) {
    const RelationId id = ids[static_cast<std::size_t>(i) / monomials.size()];
    const PBWMonomial& mono = monomials[static_cast<std::size_t>(i) % monomials.size()];
    partial[static_cast<std::size_t>(i)] =
        verify_relation(id, cfg.label_lo, cfg.label_hi, {mono});
  });
  for (const auto& p : partial) {
    rep.cells += p.cells;
    for (const auto& m : p.mismatches)
      rep.failures.push_back(relation_mismatch_json(m));
  }
  rep.config = config_to_json(cfg);
  return rep;
}

SuiteReport suite_form(const SweepConfig& cfg) {
  SuiteReport rep;
  rep.suite = "form";
  rep.seed = cfg.seed;
  auto fail = [&](Json f) { rep.failures.push_back(std::move(f)); };

  // gram matrices over every window
  for (int len = 0; len <= cfg.max_length; ++len) {
    for (long deg = -4; deg <= 4; ++deg) {
      const WeightWindow w{len, deg, cfg.index_lo, cfg.index_hi};
      const GramMatrix g = gram(w);
      const int n = g.size();
      ++rep.cells;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const Scalar& e = g.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
          if (!(e == g.entries[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]))
            fail({{"check", "symmetry"}, {"window", window_to_json(w)}, {"i", i}, {"j", j}});
          const Scalar d = i == j ? e - Scalar::one() : e;
          if (!d.is_zero() && d.valuation() < 4)
            fail({{"check", "identity-mod-q2"}, {"window", window_to_json(w)},
                  {"i", i}, {"j", j}, {"entry", e.text()}});
        }
      if (n > 0) {
        const Scalar det = gram_det(g);
        if (det.is_zero() || det.valuation() != 0 ||
            det.numerator().coeff(0, 0) != 1)
          fail({{"check", "det-constant-term"}, {"window", window_to_json(w)},
                {"det", det.is_zero() ? "0" : det.text()}});
      }
    }
  }

  // cross-grade orthogonality through the raw recursion
  const auto monos = enumerate_pbw(cfg.max_length, cfg.index_lo, cfg.index_hi);
  for (const auto& a : monos)
    for (const auto& b : monos) {
      if (a.length() == b.length() && a.grade().degree == b.grade().degree) continue;
      ++rep.cells;
      const Scalar p = pair_form(a, b);
      if (!p.is_zero())
        fail({{"check", "cross-grade-zero"}, {"a", a.indices()}, {"b", b.indices()},
              {"value", p.text()}});
    }

  // closed-form oracle on all admissible length-2 quadruples
  for (int m1 = -4; m1 <= 4; ++m1)
    for (int m2 = -4; m2 <= m1; ++m2)
      for (int k1 = -4; k1 <= 4; ++k1)
        for (int k2 = -4; k2 <= k1; ++k2) {
          if (m1 + m2 != k1 + k2) continue;
          ++rep.cells;
          const Scalar lhs = pair_form(PBWMonomial({m1, m2}), PBWMonomial({k1, k2}));
          const Scalar rhs = pair_closed_n2(m1, m2, k1, k2);
          if (!(lhs == rhs))
            fail({{"check", "closed-n2"}, {"m", Json::array({m1, m2})},
                  {"k", Json::array({k1, k2})}, {"pair", lhs.text()},
                  {"closed", rhs.text()}});
        }

  rep.config = config_to_json(cfg);
  return rep;
}

Json crystal_failure_json(const CrystalMismatch& m) {
  Json f;
  f["op"] = m.op;
  f["label"] = m.label;
  f["basis"] = m.basis.indices();
  f["expected"] = m.expected;
  f["got"] = m.got;
  return f;
}

SuiteReport suite_crystal(const SweepConfig& cfg) {
  SuiteReport rep;
  rep.suite = "crystal";
  rep.seed = cfg.seed;
  HighestWeight lambda(cfg.lambda_h, cfg.lambda_d, cfg.boundary_study);
  const CrystalReport oracle =
      crystal_oracle_check(lambda, cfg.max_length, cfg.index_lo, cfg.index_hi,
                           cfg.label_lo, cfg.label_hi);
  const CrystalReport axioms = verify_crystal_axioms(
      cfg.max_length, cfg.index_lo, cfg.index_hi, cfg.label_lo, cfg.label_hi);
  rep.cells = oracle.checks + axioms.checks;
  for (const auto& f : oracle.failures) rep.failures.push_back(crystal_failure_json(f));
  for (const auto& f : axioms.failures) rep.failures.push_back(crystal_failure_json(f));
  rep.config = config_to_json(cfg);
  return rep;
}

SuiteReport suite_simplicity(const SweepConfig& cfg) {
  SuiteReport rep;
  rep.suite = "simplicity";
  rep.seed = cfg.seed;

  const long hvals[] = {1, -1, 2, 5};
  for (long h : hvals) {
    const HighestWeight lambda(Rational(h), cfg.lambda_d);
    for (int len : {1, 2}) {
      for (long deg = static_cast<long>(len) * cfg.index_lo;
           deg <= static_cast<long>(len) * cfg.index_hi; ++deg) {
        const WeightWindow w{len, deg, cfg.index_lo, cfg.index_hi};
        if (enumerate_window(w).empty()) continue;
        ++rep.cells;
        const auto kernel = find_singular_vectors(w, lambda);
        if (!kernel.empty()) {
          Json f;
          f["check"] = "kernel-empty";
          f["lambda-h"] = h;
          f["window"] = window_to_json(w);
          Json vs = Json::array();
          for (const auto& v : kernel) vs.push_back(element_to_json(v.payload()));
          f["kernel"] = std::move(vs);
          rep.failures.push_back(std::move(f));
        }
      }
    }
  }

  // lambda(h) = 0 boundary: the full length-1 layer is singular
  const HighestWeight boundary(0, cfg.lambda_d, true);
  for (long deg = cfg.index_lo; deg <= cfg.index_hi; ++deg) {
    const WeightWindow w{1, deg, cfg.index_lo, cfg.index_hi};
    ++rep.cells;
    const auto kernel = find_singular_vectors(w, boundary);
    const bool ok = kernel.size() == 1 &&
                    kernel[0].payload() ==
                        Element::monomial(PBWMonomial({static_cast<int>(deg)}));
    if (!ok) {
      Json f;
      f["check"] = "boundary-length-1-layer";
      f["window"] = window_to_json(w);
      f["kernel-size"] = kernel.size();
      rep.failures.push_back(std::move(f));
    }
  }

  // local nilpotency exponents on seeded random vectors
  std::mt19937 rng(static_cast<std::uint32_t>(cfg.seed));
  const auto monos = enumerate_pbw(3, cfg.index_lo, cfg.index_hi);
  const HighestWeight lambda(cfg.lambda_h == 0 ? Rational(1) : cfg.lambda_h, cfg.lambda_d);
  for (int s = 0; s < 200; ++s) {
    Element e;
    const int nterms = 1 + static_cast<int>(rng() % 3u);
    for (int t = 0; t < nterms; ++t) {
      const auto& m = monos[rng() % monos.size()];
      const int coeff = 1 + static_cast<int>(rng() % 5u);
      e.add_term(m, Scalar::from_int(coeff) * Scalar::q_pow(static_cast<int>(rng() % 3u)));
    }
    if (e.is_zero()) continue;
    int max_len = 0;
    for (const auto& [m, _] : e.terms()) max_len = std::max(max_len, m.length());
    const int k = cfg.label_lo + static_cast<int>(rng() % static_cast<unsigned>(cfg.label_hi - cfg.label_lo + 1));
    ++rep.cells;
    const int n = local_nilpotency_exponent(k, ModuleVector(e, lambda));
    if (n > max_len + 1) {
      Json f;
      f["check"] = "nilpotency-exponent";
      f["k"] = k;
      f["element"] = element_to_json(e);
      f["exponent"] = n;
      rep.failures.push_back(std::move(f));
    }
  }

  rep.config = config_to_json(cfg);
  return rep;
}

SuiteReport suite_lattice(const SweepConfig& cfg) {
  SuiteReport rep;
  rep.suite = "lattice";
  rep.seed = cfg.seed;
  HighestWeight lambda(cfg.lambda_h, cfg.lambda_d, cfg.boundary_study);
  const CrystalReport r = verify_prop91(lambda, 100, cfg.seed,
                                        std::min(cfg.max_length, 3),
                                        cfg.index_lo, cfg.index_hi);
  rep.cells = r.checks;
  for (const auto& f : r.failures) rep.failures.push_back(crystal_failure_json(f));
  rep.config = config_to_json(cfg);
  return rep;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "gseries", "straighten", "relations", "form",
      "crystal", "simplicity", "lattice"};
  return names;
}

bool is_suite(const std::string& name) {
  const auto& n = suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

SuiteReport run_suite(const std::string& name, const SweepConfig& cfg) {
  cfg.validate();
  if (name == "gseries") return suite_gseries(cfg);
  if (name == "straighten") return suite_straighten(cfg);
  if (name == "relations") return suite_relations(cfg);
  if (name == "form") return suite_form(cfg);
  if (name == "crystal") return suite_crystal(cfg);
  if (name == "simplicity") return suite_simplicity(cfg);
  if (name == "lattice") return suite_lattice(cfg);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace imverma
