// Command-line surface for the library: exact word problems, double cosets,
// parabolic normalization, the configuration-space maps, braid monodromy
// extraction, and the full acceptance suite.  Every subcommand prints one
// JSON report (schema 1) on stdout; exit code 0 means all checks in the
// invoked suite passed, 1 means a check failed, 2 means a usage error.
#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>

#include "braidconf/acceptance.hpp"
#include "braidconf/braid.hpp"
#include "braidconf/confmaps.hpp"
#include "braidconf/f2dyn.hpp"
#include "braidconf/modgroup.hpp"
#include "braidconf/monodromy.hpp"

using json = nlohmann::ordered_json;
using namespace braidconf;

namespace {

using Clock = std::chrono::steady_clock;

json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();  // entries beyond 64 bits serialize as decimal strings
}

BigInt big_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw std::invalid_argument("matrix entries must be integers or decimal strings");
}

json matrix_to_json(const UnimodularMatrix& m) {
  return json::array({json::array({big_to_json(m.a()), big_to_json(m.b())}),
                      json::array({big_to_json(m.c()), big_to_json(m.d())})});
}

UnimodularMatrix matrix_from_string(const std::string& text) {
  json j = json::parse(text);
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
      !j[1].is_array() || j[1].size() != 2) {
    throw std::invalid_argument("expected [[a,b],[c,d]]");
  }
  return UnimodularMatrix(big_from_json(j[0][0]), big_from_json(j[0][1]), big_from_json(j[1][0]),
                          big_from_json(j[1][1]));
}

json configuration_to_json(const Configuration& c) {
  json out = json::array();
  for (Complex z : c.points()) out.push_back(json::array({z.real(), z.imag()}));
  return out;
}

Configuration configuration_from_string(const std::string& text) {
  json j = json::parse(text);
  std::vector<Complex> pts;
  for (const auto& entry : j) {
    if (entry.is_array() && entry.size() == 2) {
      pts.emplace_back(entry[0].get<double>(), entry[1].get<double>());
    } else if (entry.is_number()) {
      pts.emplace_back(entry.get<double>(), 0.0);
    } else {
      throw std::invalid_argument("configuration points must be [re, im] pairs");
    }
  }
  return Configuration(std::move(pts));
}

json braid_to_json(const BraidWord& w) {
  json out = json::array();
  for (int l : w.letters()) out.push_back(l);
  return out;
}

struct ReportPrinter {
  json report;
  Clock::time_point start = Clock::now();
  bool pass = true;
  bool csv = false;

  explicit ReportPrinter(const std::string& command) {
    report["schema"] = 1;
    report["command"] = command;
    report["params"] = json::object();
    report["results"] = json::object();
  }
  json& params() { return report["params"]; }
  json& results() { return report["results"]; }

  int finish() {
    report["pass"] = pass;
    report["elapsed_ms"] = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    if (csv) {
      for (const auto& [key, value] : report.items()) {
        if (value.is_object()) {
          for (const auto& [k2, v2] : value.items()) {
            std::cout << key << "." << k2 << ","
                      << (v2.is_string() ? v2.get<std::string>() : v2.dump()) << "\n";
          }
        } else {
          std::cout << key << "," << (value.is_string() ? value.get<std::string>() : value.dump())
                    << "\n";
        }
      }
    } else {
      std::cout << report.dump(2) << std::endl;
    }
    return pass ? 0 : 1;
  }
};

// ---- subcommand bodies ----------------------------------------------------

int cmd_solve_f2(int k, int max_len, bool no_prune, unsigned threads, bool csv) {
  ReportPrinter rp("solve-f2");
  rp.csv = csv;
  rp.params()["k"] = k;
  rp.params()["max_len"] = max_len;
  rp.params()["prune"] = !no_prune;

  SolveOptions options;
  options.prune = !no_prune;
  options.threads = threads;
  auto t0 = Clock::now();
  auto sols = solve_equation(k, max_len, options);
  double solve_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();

  json& res = rp.results();
  res["k"] = k;
  res["max_len"] = max_len;
  json list = json::array();
  for (const ReducedWord& w : sols) list.push_back(to_string(w));
  res["solutions"] = list;
  res["count"] = sols.size();
  res["elapsed_ms"] = solve_ms;
  bool orbit_ok = all_in_f_orbit_of_x(sols, max_len);
  res["all_in_x_orbit"] = orbit_ok;
  rp.pass = k != 0 ? sols.size() == 1 : orbit_ok;
  return rp.finish();
}

int cmd_verify_lemmas(std::uint64_t seed, long trials, bool csv) {
  ReportPrinter rp("verify-lemmas");
  rp.csv = csv;
  rp.params()["seed"] = seed;
  rp.params()["trials"] = trials;
  auto reports = run_f2_lemma_suites(seed, trials);
  json list = json::array();
  for (const auto& rep : reports) {
    list.push_back(json{{"name", rep.name},
                        {"passed", rep.passed},
                        {"trials", rep.trials},
                        {"counterexamples", rep.counterexamples},
                        {"note", rep.note}});
    rp.pass = rp.pass && rep.passed;
  }
  rp.results()["suites"] = list;
  return rp.finish();
}

int cmd_braid_eq(int n, const std::string& w1, const std::string& w2, bool csv) {
  ReportPrinter rp("braid-eq");
  rp.csv = csv;
  rp.params()["n"] = n;
  rp.params()["w1"] = w1;
  rp.params()["w2"] = w2;
  BraidWord u = BraidWord::parse(n, w1);
  BraidWord v = BraidWord::parse(n, w2);
  bool eq = braid_eq(u, v);
  rp.results()["equal"] = eq;
  if (n <= 4) rp.results()["oracle_equal"] = artin_equal(u, v);
  return rp.finish();
}

int cmd_normal_form(int n, const std::string& word, const std::string& matrix, bool csv) {
  ReportPrinter rp("normal-form");
  rp.csv = csv;
  if (!matrix.empty()) {
    rp.params()["matrix"] = matrix;
    UnimodularMatrix m = matrix_from_string(matrix);
    ModularWord nf = normal_form(m);
    rp.results()["psl_word"] = nf.str();
    rp.results()["trace_class"] = to_string(trace_class(m));
    bool ok = psl_equal(nf.evaluate(), m);
    rp.results()["round_trip"] = ok;
    rp.pass = ok;
    return rp.finish();
  }
  rp.params()["n"] = n;
  rp.params()["word"] = word;
  BraidWord w = BraidWord::parse(n, word);
  if (n == 3) {
    B3NormalForm nf = b3_normal_form(w);
    rp.results()["psl_part"] = nf.psl_part.str();
    rp.results()["exponent_sum"] = nf.exponent_sum;
    rp.results()["is_identity"] = nf.is_identity();
  } else if (n == 4) {
    B4NormalForm nf = gassner_split(w);
    rp.results()["kernel_part"] = to_string(nf.kernel_part);
    rp.results()["b3_psl_part"] = nf.b3_part.psl_part.str();
    rp.results()["b3_exponent_sum"] = nf.b3_part.exponent_sum;
    bool ok = artin_equal(b4_recombine(nf), w);
    rp.results()["round_trip"] = ok;
    rp.pass = ok;
  } else if (n == 2) {
    rp.results()["exponent_sum"] = w.exponent_sum();
  } else {
    throw std::invalid_argument("normal-form: complete normal forms exist for n in {2,3,4}");
  }
  return rp.finish();
}

int cmd_double_cosets(int n, const std::string& g, const std::string& g2, bool psl, bool csv) {
  ReportPrinter rp("double-cosets");
  rp.csv = csv;
  rp.params()["psl"] = psl;
  if (psl) {
    rp.params()["g"] = g;
    rp.params()["g2"] = g2;
    UnimodularMatrix gm = matrix_from_string(g);
    UnimodularMatrix gm2 = matrix_from_string(g2);
    rp.results()["equal_double_coset"] = double_coset_eq_psl(gm, gm2);
  } else {
    if (n != 3) throw std::invalid_argument("double-cosets: braid double cosets live in B_3");
    rp.params()["n"] = n;
    rp.params()["g"] = g;
    rp.params()["g2"] = g2;
    BraidWord gw = BraidWord::parse(3, g);
    BraidWord gw2 = BraidWord::parse(3, g2);
    bool eq = double_coset_eq_b3(gw, gw2);
    rp.results()["equal_double_coset"] = eq;
    auto rho1 = rho_g(gw);
    auto rho2 = rho_g(gw2);
    rp.results()["rho_g_images"] = json::array({braid_to_json(rho1[0]), braid_to_json(rho1[1])});
    rp.results()["rho_g2_images"] = json::array({braid_to_json(rho2[0]), braid_to_json(rho2[1])});
    rp.results()["rho_equivalent"] = eq;
  }
  return rp.finish();
}

int cmd_parabolic(const std::string& p, const std::string& q, bool search, long bound, bool csv) {
  ReportPrinter rp("parabolic-classify");
  rp.csv = csv;
  if (search) {
    rp.params()["bound"] = bound;
    ParabolicSearchStats stats = parabolic_pair_census(bound);
    rp.results()["parabolic_count"] = stats.parabolic_count;
    rp.results()["braid_pairs"] = stats.braid_pairs;
    rp.results()["normalized"] = stats.normalized;
    rp.results()["failures"] = stats.failures;
    rp.pass = stats.failures == 0 && stats.normalized == stats.braid_pairs;
    return rp.finish();
  }
  if (p.empty() || q.empty()) {
    throw std::invalid_argument("parabolic-classify: need --p and --q, or --search");
  }
  rp.params()["p"] = p;
  rp.params()["q"] = q;
  UnimodularMatrix pm = matrix_from_string(p);
  UnimodularMatrix qm = matrix_from_string(q);
  rp.results()["p_trace_class"] = to_string(trace_class(pm));
  rp.results()["q_trace_class"] = to_string(trace_class(qm));
  try {
    ParabolicNormalization norm = normalize_parabolic_pair(pm, qm);
    rp.results()["conjugator"] = matrix_to_json(norm.conjugator);
    rp.results()["inverted"] = norm.inverted;
    rp.results()["normalized"] = true;
  } catch (const CommutingPairError& e) {
    rp.results()["normalized"] = false;
    rp.results()["error"] = std::string("commuting pair: ") + e.what();
    rp.pass = false;
  } catch (const NotParabolicError& e) {
    rp.results()["normalized"] = false;
    rp.results()["error"] = std::string("not parabolic: ") + e.what();
    rp.pass = false;
  } catch (const BraidRelationError& e) {
    rp.results()["normalized"] = false;
    rp.results()["error"] = std::string("braid relation fails: ") + e.what();
    rp.pass = false;
  }
  return rp.finish();
}

int cmd_eval_map(const std::string& map, const std::string& config, int k, double tolerance,
                 bool csv) {
  ReportPrinter rp("eval-map");
  rp.csv = csv;
  rp.params()["map"] = map;
  rp.params()["config"] = config;
  Configuration c = configuration_from_string(config);
  json& res = rp.results();

  if (map == "R") {
    Configuration out = resolve_quartic(c);
    res["output"] = configuration_to_json(out);
    res["separation"] = out.separation();
  } else if (map == "psi") {
    rp.params()["k"] = k;
    Configuration out = psi_k(c, k);
    res["output"] = configuration_to_json(out);
    res["separation"] = out.separation();
    if (k >= 3) {
      // duplication-formula residuals of the torsion abscissas
      Complex s = (c[0] + c[1] + c[2]) / 3.0;
      Complex e0 = c[0] - s, e1 = c[1] - s, e2 = c[2] - s;
      Complex pc = e0 * e1 + e0 * e2 + e1 * e2;
      Complex qc = -e0 * e1 * e2;
      double worst = 0.0;
      for (Complex x : out.points()) {
        Complex xd = x - s;
        Complex x2 = duplication_x(xd, pc, qc);
        double residual;
        if (k == 3) {
          residual = std::abs(x2 - xd) / std::max(1.0, std::abs(xd));
        } else if (k == 4) {
          residual = std::abs(x2 * x2 * x2 + pc * x2 + qc) / std::max(1.0, std::abs(x2 * x2 * x2));
        } else {
          ComplexPolynomial psi5 = torsion_polynomial(pc, qc, 5);
          double scale = 0.0, zp = 1.0;
          for (const Complex& ci : psi5.coefficients()) {
            scale += std::abs(ci) * zp;
            zp *= std::abs(x2);
          }
          residual = std::abs(psi5.evaluate(x2)) / std::max(1.0, scale);
        }
        worst = std::max(worst, residual);
      }
      res["max_duplication_residual"] = worst;
      res["tolerance"] = tolerance;
      rp.pass = worst < tolerance;
    }
  } else if (map == "j-inv") {
    Complex j = j_invariant(c);
    res["j"] = json::array({j.real(), j.imag()});
  } else if (map == "shape") {
    Complex s = shape_invariant(c);
    res["shape"] = json::array({s.real(), s.imag()});
  } else if (map == "disc") {
    Complex d = discriminant(c);
    res["discriminant"] = json::array({d.real(), d.imag()});
  } else if (map == "id-delta") {
    Configuration out = discriminant_twisted_identity()(c);
    res["output"] = configuration_to_json(out);
  } else if (map == "psi3R") {
    Configuration out = psi_k(resolve_quartic(c), 3);
    res["output"] = configuration_to_json(out);
  } else {
    throw std::invalid_argument("eval-map: map must be one of R, psi, j-inv, shape, disc, id-delta, psi3R");
  }
  return rp.finish();
}

int cmd_monodromy(const std::string& map, int steps, bool csv) {
  ReportPrinter rp("monodromy");
  rp.csv = csv;
  rp.params()["map"] = map;
  rp.params()["steps"] = steps;

  ConfigurationMap f;
  int n = 0, m = 0;
  std::vector<BraidWord> expected;
  if (map == "R") {
    f = [](const Configuration& c) { return resolve_quartic(c); };
    n = 4;
    m = 3;
    expected = {BraidWord(3, {1}), BraidWord(3, {2}), BraidWord(3, {1})};
  } else if (map == "psi3") {
    f = [](const Configuration& c) { return psi_k(c, 3); };
    n = 3;
    m = 4;
    expected = {BraidWord(4, {1, 2}), BraidWord(4, {3, 2})};
  } else if (map == "psi3R") {
    f = [](const Configuration& c) { return psi_k(resolve_quartic(c), 3); };
    n = 4;
    m = 4;
    std::vector<BraidWord> psi = {BraidWord(4, {1, 2}), BraidWord(4, {3, 2})};
    expected = {map_through(BraidWord(3, {1}), psi), map_through(BraidWord(3, {2}), psi),
                map_through(BraidWord(3, {1}), psi)};
  } else {
    throw std::invalid_argument("monodromy: map must be one of R, psi3, psi3R");
  }

  InducedHom hom = induced_hom(f, n, m, steps, expected);
  json images = json::array();
  for (const BraidWord& w : hom.images) images.push_back(braid_to_json(w));
  HomomorphismCheck check = check_homomorphism(hom.images);
  rp.results()["target"] = m;
  rp.results()["images"] = images;
  rp.results()["is_hom"] = check.is_homomorphism;
  rp.results()["cyclic_flag"] = check.cyclic_flag;
  rp.results()["relations_ok"] = hom.relations_ok;
  rp.results()["conjugator_found"] = hom.conjugator.has_value();
  if (hom.conjugator) rp.results()["conjugator"] = braid_to_json(*hom.conjugator);
  json perms = json::array();
  for (const BraidWord& w : hom.images) {
    json p = json::array();
    for (int v : w.permutation()) p.push_back(v);
    perms.push_back(p);
  }
  rp.results()["permutations"] = perms;
  rp.pass = hom.relations_ok && hom.conjugator.has_value();
  return rp.finish();
}

int cmd_acceptance(int criterion, int steps, std::uint64_t seed, bool csv) {
  ReportPrinter rp("acceptance");
  rp.csv = csv;
  rp.params()["seed"] = seed;
  rp.params()["steps"] = steps;
  AcceptanceOptions options;
  options.seed = seed;
  options.monodromy_steps = steps;

  json list = json::array();
  auto add = [&](const CriterionResult& r) {
    std::cerr << (r.passed ? "[PASS]" : "[FAIL]") << " criterion " << r.id << ": " << r.name
              << " -- " << r.details << std::endl;
    list.push_back(json{{"id", r.id},
                        {"name", r.name},
                        {"passed", r.passed},
                        {"details", r.details},
                        {"elapsed_ms", r.elapsed_ms}});
    rp.pass = rp.pass && r.passed;
  };
  if (criterion != 0) {
    add(run_criterion(criterion, options));
  } else {
    run_acceptance(options, add);
  }
  rp.results()["criteria"] = list;
  return rp.finish();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact braid/PSL2Z computation and numerical configuration-space monodromy"};
  app.require_subcommand(1);
  bool csv = false;
  app.add_flag("--csv", csv, "emit flat key,value lines instead of JSON");

  int k = 0, max_len = 6;
  bool no_prune = false;
  unsigned threads = 0;
  auto* solve = app.add_subcommand("solve-f2", "bounded solver for the twisted-conjugacy equation");
  solve->add_option("--k", k, "exponent parameter")->capture_default_str();
  solve->add_option("--max-len", max_len, "maximum word length")->capture_default_str();
  solve->add_flag("--no-prune", no_prune, "disable the length-based pruning rule");
  solve->add_option("--threads", threads, "worker threads (0 = hardware)");

  std::uint64_t seed = 20240917;
  long trials = 100000;
  auto* lemmas = app.add_subcommand("verify-lemmas", "property suites for the F_2 automorphism");
  lemmas->add_option("--seed", seed, "random seed")->capture_default_str();
  lemmas->add_option("--trials", trials, "randomized suite size")->capture_default_str();

  int n_eq = 4;
  std::string word1, word2;
  auto* beq = app.add_subcommand("braid-eq", "decide equality of two braid words");
  beq->add_option("--n", n_eq, "strand count")->capture_default_str();
  beq->add_option("w1", word1, "first word, e.g. \"1 2 -1\"")->required();
  beq->add_option("w2", word2, "second word")->required();

  int n_nf = 3;
  std::string word_nf, matrix_nf;
  auto* nf = app.add_subcommand("normal-form", "complete normal form of a braid word or matrix");
  nf->add_option("--n", n_nf, "strand count (2, 3 or 4)")->capture_default_str();
  nf->add_option("word", word_nf, "braid word");
  nf->add_option("--matrix", matrix_nf, "SL_2 Z matrix [[a,b],[c,d]] instead of a braid word");

  int n_dc = 3;
  std::string dc_g, dc_g2;
  bool dc_psl = false;
  auto* dc = app.add_subcommand("double-cosets", "double-coset equivalence of rho_g classes");
  dc->add_option("--n", n_dc, "strand count (3)")->capture_default_str();
  dc->add_flag("--psl", dc_psl, "interpret arguments as matrices in PSL_2 Z");
  dc->add_option("g", dc_g, "first element")->required();
  dc->add_option("g2", dc_g2, "second element")->required();

  std::string par_p, par_q;
  bool par_search = false;
  long par_bound = 50;
  auto* par = app.add_subcommand("parabolic-classify", "normalize a parabolic braid pair");
  par->add_option("--p", par_p, "first matrix [[a,b],[c,d]]");
  par->add_option("--q", par_q, "second matrix");
  par->add_flag("--search", par_search, "exhaustive census over bounded entries");
  par->add_option("--bound", par_bound, "entry bound for --search")->capture_default_str();

  std::string em_map = "R", em_config;
  int em_k = 3;
  double tolerance = 1e-8;
  auto* em = app.add_subcommand("eval-map", "evaluate a configuration-space map");
  em->add_option("--map", em_map, "R | psi | j-inv | shape | disc | id-delta | psi3R")
      ->capture_default_str();
  em->add_option("--k", em_k, "torsion order for psi")->capture_default_str();
  em->add_option("--tolerance", tolerance, "residual tolerance")->capture_default_str();
  em->add_option("config", em_config, "configuration [[re,im],...]")->required();

  std::string alias_config;
  int alias_k = 3;
  auto* em_r = app.add_subcommand("eval-R", "evaluate the resolving quartic");
  em_r->add_option("config", alias_config, "configuration")->required();
  auto* em_psi = app.add_subcommand("eval-psi", "evaluate the torsion construction");
  em_psi->add_option("--k", alias_k, "torsion order")->capture_default_str();
  em_psi->add_option("config", alias_config, "configuration")->required();
  auto* em_j = app.add_subcommand("j-inv", "j-invariant of a 3-point configuration");
  em_j->add_option("config", alias_config, "configuration")->required();
  auto* em_shape = app.add_subcommand("shape", "affine-equivalence shape invariant");
  em_shape->add_option("config", alias_config, "configuration")->required();

  std::string mono_map = "R";
  int mono_steps = 2000;
  auto* mono = app.add_subcommand("monodromy", "extract the induced braid homomorphism");
  mono->add_option("--map", mono_map, "R | psi3 | psi3R")->capture_default_str();
  mono->add_option("--steps", mono_steps, "samples per generator loop")->capture_default_str();

  int acc_criterion = 0;
  int acc_steps = 2000;
  std::uint64_t acc_seed = 20240917;
  auto* acc = app.add_subcommand("acceptance", "run the acceptance criteria");
  acc->add_option("--criterion", acc_criterion, "run a single criterion (1..8)");
  acc->add_option("--steps", acc_steps, "monodromy loop samples")->capture_default_str();
  acc->add_option("--seed", acc_seed, "random seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (solve->parsed()) return cmd_solve_f2(k, max_len, no_prune, threads, csv);
    if (lemmas->parsed()) return cmd_verify_lemmas(seed, trials, csv);
    if (beq->parsed()) return cmd_braid_eq(n_eq, word1, word2, csv);
    if (nf->parsed()) return cmd_normal_form(n_nf, word_nf, matrix_nf, csv);
    if (dc->parsed()) return cmd_double_cosets(n_dc, dc_g, dc_g2, dc_psl, csv);
    if (par->parsed()) return cmd_parabolic(par_p, par_q, par_search, par_bound, csv);
    if (em->parsed()) return cmd_eval_map(em_map, em_config, em_k, tolerance, csv);
    if (em_r->parsed()) return cmd_eval_map("R", alias_config, 0, tolerance, csv);
    if (em_psi->parsed()) return cmd_eval_map("psi", alias_config, alias_k, tolerance, csv);
    if (em_j->parsed()) return cmd_eval_map("j-inv", alias_config, 0, tolerance, csv);
    if (em_shape->parsed()) return cmd_eval_map("shape", alias_config, 0, tolerance, csv);
    if (mono->parsed()) return cmd_monodromy(mono_map, mono_steps, csv);
    if (acc->parsed()) return cmd_acceptance(acc_criterion, acc_steps, acc_seed, csv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << std::endl;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 1;
  }
  return 2;
}
