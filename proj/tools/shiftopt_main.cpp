#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "shiftopt/json_io.hpp"
#include "shiftopt/reference.hpp"

namespace {

using namespace shiftopt;

struct CommonOpts {
  std::string input_path;
  std::string weights_path;
  std::uint64_t seed = 1;
  std::string precision = "auto";
  int threads = 0;
  long long k_window = 64;
};

void add_common(CLI::App* sub, CommonOpts& opts) {
  sub->add_option("--input", opts.input_path, "JSON input file, '-' for stdin");
  sub->add_option("--weights", opts.weights_path, "weight function JSON file");
  sub->add_option("--seed", opts.seed, "RNG seed; fixes every random draw");
  sub->add_option("--precision", opts.precision, "auto | rational | float")
      ->check(CLI::IsMember({"auto", "rational", "float"}));
  sub->add_option("--threads", opts.threads, "worker count (default: THREADS env or all cores)");
  sub->add_option("--k-window", opts.k_window, "scan half-width for uncertified weights");
}

void apply_threads(const CommonOpts& opts) {
  int n = opts.threads;
  if (n <= 0) {
    if (const char* env = std::getenv("THREADS")) n = std::atoi(env);
  }
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

Json load_json_file(const std::string& path) {
  if (path == "-") return Json::parse(std::cin);
  std::ifstream in(path);
  if (!in) throw invalid_input("cannot open input file: " + path);
  return Json::parse(in);
}

Json load_input(const CommonOpts& opts) {
  if (opts.input_path.empty()) return Json::object();
  return load_json_file(opts.input_path);
}

Scalar strip_scalar(const Scalar& s) { return Scalar(scalar_as<double>(s)); }

WeightFunction strip_weight(const WeightFunction& phi) {
  if (const auto* t = std::get_if<WeightFunction::Tabular>(&phi.variant())) {
    std::map<long long, std::array<Scalar, 2>> ov;
    for (const auto& [i, vals] : t->overrides)
      ov[i] = {strip_scalar(vals[0]), strip_scalar(vals[1])};
    return WeightFunction::tabular(strip_scalar(t->def0), strip_scalar(t->def1), std::move(ov));
  }
  if (const auto* o = std::get_if<WeightFunction::OrbitInduced>(&phi.variant())) {
    std::array<std::array<Scalar, 2>, 2> table;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) table[a][b] = strip_scalar(o->table[a][b]);
    return WeightFunction::orbit_induced(o->z, table);
  }
  if (const auto* c = std::get_if<WeightFunction::Combo>(&phi.variant())) {
    std::vector<std::pair<Scalar, WeightFunction>> terms;
    for (const auto& [scale, term] : c->terms)
      terms.emplace_back(strip_scalar(scale), strip_weight(*term));
    return WeightFunction::combo(std::move(terms));
  }
  return phi;  // psi weights are integer-valued; nothing to strip
}

MeasureSpec strip_measure(const MeasureSpec& mu) {
  if (const auto* b = std::get_if<MeasureSpec::Bernoulli>(&mu.variant()))
    return MeasureSpec::bernoulli(strip_scalar(b->p));
  if (const auto* m = std::get_if<MeasureSpec::Markov>(&mu.variant())) {
    std::array<std::array<Scalar, 2>, 2> P;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) P[a][b] = strip_scalar(m->P[a][b]);
    return MeasureSpec::markov(P, {strip_scalar(m->pi[0]), strip_scalar(m->pi[1])});
  }
  return mu;
}

WeightFunction get_weight(const Json& in, const CommonOpts& opts) {
  Json j;
  if (!opts.weights_path.empty())
    j = load_json_file(opts.weights_path);
  else if (in.contains("weight"))
    j = in.at("weight");
  else
    throw invalid_input("no weight function given; use --weights or an input 'weight' field");
  WeightFunction phi = weight_from_json(j);
  if (opts.precision == "rational" && !phi.is_exact())
    throw invalid_input("precision 'rational' needs exact rational weight values");
  if (opts.precision == "float") return strip_weight(phi);
  return phi;
}

MeasureSpec get_measure(const Json& in, const char* key, const CommonOpts& opts) {
  if (!in.contains(key))
    throw invalid_input(std::string("input is missing the '") + key + "' measure field");
  MeasureSpec mu = measure_from_json(in.at(key));
  if (opts.precision == "rational" && !mu.is_exact())
    throw invalid_input("precision 'rational' needs an exact measure");
  if (opts.precision == "float") return strip_measure(mu);
  return mu;
}

Word get_word(const Json& in, const char* key, const std::string& flag_value) {
  if (!flag_value.empty()) return Word::parse(flag_value);
  if (in.contains(key)) return word_from_json(in.at(key));
  throw invalid_input(std::string("no '") + key + "' word given");
}

void emit(Json& out) {
  Json framed;
  framed["schema"] = kSchemaTag;
  for (auto& [k, v] : out.items()) framed[k] = v;
  std::cout << framed.dump(2) << "\n";
}

// ---------------------------------------------------------------- selftest

struct SelfCase {
  std::string name;
  bool ok = false;
  std::string detail;
};

std::vector<SelfCase> run_selftest() {
  std::vector<SelfCase> cases;
  auto push = [&](const std::string& name, bool ok, const std::string& detail) {
    cases.push_back({name, ok, detail});
  };

  {
    WeightFunction phi = WeightFunction::tabular(Scalar(make_rat(1, 2)), Scalar(make_rat(3, 2)));
    Bounds b = log_norm(phi, Word::parse("0101010101"), 8);
    bool ok = b.upper && *b.lower.exact == make_rat(10, 1) && *b.upper->exact == make_rat(10, 1);
    push("norm_constant_weight", ok, b.lower.exact->get_str());
  }
  {
    std::map<long long, std::array<Scalar, 2>> ov;
    ov[0] = {Scalar(make_rat(5, 1)), Scalar(make_rat(7, 1))};
    WeightFunction phi = WeightFunction::tabular(Scalar(make_rat(0, 1)), Scalar(make_rat(0, 1)), ov);
    Bounds b = log_norm(phi, Word::parse("1"), 8);
    push("norm_override_window", *b.lower.exact == make_rat(7, 1), b.lower.exact->get_str());
  }
  {
    MeasureSpec mu = MeasureSpec::sturmian("golden");
    double one = scalar_as<double>(cylinder_prob(mu, Word::parse("1")));
    double pair = scalar_as<double>(cylinder_prob(mu, Word::parse("11")));
    double gamma = 0.5 * (std::sqrt(5.0) - 1.0);
    bool ok = std::abs(one - 0.5) < 1e-15 && std::abs(pair - (gamma - 0.5)) < 1e-12;
    std::ostringstream d;
    d.precision(17);
    d << one << " " << pair;
    push("rotation_coding_cylinders", ok, d.str());
  }
  {
    bool ok = dbar_periodic_exact(Word::parse("01"), Word::parse("0")) == make_rat(1, 2) &&
              dbar_periodic_exact(Word::parse("001"), Word::parse("011")) == make_rat(1, 3) &&
              dbar_periodic_exact(Word::parse("0110"), Word::parse("0110")) == 0;
    push("dbar_exact_small", ok, "1/2 1/3 0");
  }
  {
    Scalar v = dbar_lp_lower(MeasureSpec::periodic_orbit(Word::parse("01")),
                             MeasureSpec::periodic_orbit(Word::parse("0")), 2);
    bool ok = v.exact && *v.exact == make_rat(1, 2);
    push("dbar_lp_reaches_exact", ok, v.exact ? v.exact->get_str() : "inexact");
  }
  {
    BiSequence z = BiSequence::block_recursive(Word::parse("0"), Word::parse("1"), {4, 16, 64}, 3);
    long long ones85 = 0, ones5525 = 0;
    for (long long i = 0; i < 5525; ++i) {
      int s = z.symbol(i);
      if (i < 85 && s) ++ones85;
      if (s) ++ones5525;
    }
    bool ok = ones85 == 20 && ones5525 == 1345;
    push("block_recursion_frequencies",
         ok, std::to_string(ones85) + "/85 " + std::to_string(ones5525) + "/5525");
  }
  {
    BiSequence z = BiSequence::periodic(Word::parse("0110100110010110"));
    WeightFunction base = WeightFunction::tabular(Scalar(make_rat(0, 1)), Scalar(make_rat(1, 1)));
    PerturbationPlan plan = build_plan(base, Word::parse("01"), z, 4, 16);
    bool ok = plan.n == std::vector<long long>{2, 17, 305, 10369} &&
              plan.count_c == std::vector<long long>{1, 5, 95, 3240};
    for (int j = 2; j <= plan.depth && ok; ++j) {
      long long sum = 0;
      for (int m = 1; m < j; ++m) sum += plan.n[static_cast<std::size_t>(m - 1)];
      ok = make_rat(sum, 1) * make_rat(1ll << (j + 1), 1) < make_rat(plan.n[static_cast<std::size_t>(j - 1)], 1);
    }
    GrowthReport g = check_growth(plan, base, Scalar(make_rat(1, 10)), 2);
    ok = ok && g.margin.exact && *g.margin.exact == make_rat(13, 85);
    push("plan_constants_and_margin", ok, g.margin.exact ? g.margin.exact->get_str() : "inexact");
  }
  {
    WeightFunction phi = WeightFunction::tabular(Scalar(make_rat(1, 2)), Scalar(make_rat(3, 2)));
    JsrUpper up = jsr_upper(phi, 6, 8);
    JsrLower lo = jsr_lower(phi, primitive_necklaces(3), 1, 8);
    bool ok = *up.value.exact == make_rat(3, 2) && up.witness.to_string() == "111111" &&
              *lo.value.exact == make_rat(3, 2) && lo.witness.to_string() == "1";
    push("growth_rate_sandwich_constant", ok, up.value.exact->get_str());
  }
  {
    BiSequence st = BiSequence::sturmian("golden", 0);
    Word x = st.window(0, 99);
    SubshiftSpec own = SubshiftSpec::orbit_closure(st, 500, 3);
    SubshiftSpec orb = SubshiftSpec::periodic_orbit(Word::parse("01"));
    Rat d_own = matching_distance(x, own);
    bool ok = d_own == 0 && matching_distance(x, orb) == reference::matching_brute(x, orb);
    push("matching_window_alignment", ok, d_own.get_str());
  }
  {
    BiSequence z = BiSequence::periodic(Word::parse("0110100110010110"));
    WeightFunction base = WeightFunction::tabular(Scalar(make_rat(0, 1)), Scalar(make_rat(1, 1)));
    PerturbationPlan plan = build_plan(base, Word::parse("01"), z, 4, 16);
    bool ok = sum_psi_A_along_z(plan, -5, 305) == reference::psi_window_brute(plan, -5, 305);
    GrowthReport g = check_growth(plan, base, Scalar(make_rat(1, 10)), 3);
    ok = ok && g.margin.exact && *g.margin.exact == make_rat(323, 6100);
    push("psi_window_identity", ok, g.margin.exact ? g.margin.exact->get_str() : "inexact");
  }
  {
    WeightFunction phi = WeightFunction::tabular(Scalar(make_rat(1, 1)), Scalar(make_rat(0, 1)));
    MeasureSpec mu = MeasureSpec::bernoulli(Scalar(0.3));
    McResult a = lyapunov_mc(phi, mu, 50, 16, 8, 42);
    McResult b = reference::lyapunov_mc(phi, mu, 50, 16, 8, 42);
    std::ostringstream d;
    d.precision(17);
    d << a.mean;
    push("mc_serial_parallel_agreement", a.mean == b.mean && a.std_error == b.std_error, d.str());
  }
  {
    BiSequence z = BiSequence::sturmian("golden", 0);
    double la = std::log(0.5);
    WeightFunction phi = WeightFunction::orbit_induced(
        z, {{{Scalar(la), Scalar(0.0)}, {Scalar(0.0), Scalar(la)}}});
    Word comp = BiSequence::complemented(z).window(0, 499);
    Bounds b = log_norm(phi, comp, 89);
    push("complement_window_free_ride", b.lower.value == 0.0, std::to_string(b.lower.value));
  }
  return cases;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"norms, growth rates, and distances for pairs of weighted shifts"};
  app.require_subcommand(1);

  CommonOpts opts;

  // norm
  auto* norm_cmd = app.add_subcommand("norm", "log product norm of a word");
  std::string norm_word;
  add_common(norm_cmd, opts);
  norm_cmd->add_option("--word", norm_word, "binary word, e.g. 0110");

  // jsr
  auto* jsr_cmd = app.add_subcommand("jsr", "joint growth rate bracket");
  long long jsr_n = 8, jsr_m = 4;
  int jsr_max_period = 6;
  add_common(jsr_cmd, opts);
  jsr_cmd->add_option("--n", jsr_n, "word length for the upper bound");
  jsr_cmd->add_option("--m", jsr_m, "iterate count for uncertified lower bounds");
  jsr_cmd->add_option("--max-period", jsr_max_period,
                      "candidate periodic words up to this period (ignored with input candidates)");

  // lyapunov
  auto* lya_cmd = app.add_subcommand("lyapunov", "Lyapunov exponent of a measure");
  std::string lya_mode = "upper", lya_word;
  long long lya_n = 8, lya_samples = 64;
  add_common(lya_cmd, opts);
  lya_cmd->add_option("--mode", lya_mode, "exact | upper | mc")
      ->check(CLI::IsMember({"exact", "upper", "mc"}));
  lya_cmd->add_option("--n", lya_n, "cylinder order / sample length");
  lya_cmd->add_option("--samples", lya_samples, "Monte-Carlo sample count");
  lya_cmd->add_option("--word", lya_word, "periodic word for exact mode");

  // dbar
  auto* dbar_cmd = app.add_subcommand("dbar", "Ornstein distance between measures");
  std::string dbar_mode = "exact", dbar_u, dbar_v, dbar_dump;
  long long dbar_L = 2;
  add_common(dbar_cmd, opts);
  dbar_cmd->add_option("--mode", dbar_mode, "exact | lp | upper")
      ->check(CLI::IsMember({"exact", "lp", "upper"}));
  dbar_cmd->add_option("--u", dbar_u, "first periodic word (exact mode)");
  dbar_cmd->add_option("--v", dbar_v, "second periodic word (exact mode)");
  dbar_cmd->add_option("--order", dbar_L, "coupling cylinder order (lp mode)");
  dbar_cmd->add_option("--dump-lp", dbar_dump, "write the LP tableau as text to this file");

  // match
  auto* match_cmd = app.add_subcommand("match", "Hamming matching distance to a subshift");
  std::string match_x, match_target_word;
  add_common(match_cmd, opts);
  match_cmd->add_option("--x", match_x, "window to match");
  match_cmd->add_option("--target-word", match_target_word,
                        "periodic target orbit (otherwise input 'target' field)");

  // perturb
  auto* pert_cmd = app.add_subcommand("perturb", "marker perturbation plan and its guarantees");
  std::string pert_lambda = "1";
  int pert_j = 0;
  add_common(pert_cmd, opts);
  pert_cmd->add_option("--lambda", pert_lambda, "perturbation size, rational or decimal");
  pert_cmd->add_option("--j", pert_j, "growth level to check (default: all)");

  // experiment
  auto* exp_cmd = app.add_subcommand("experiment", "end-to-end constructions");
  exp_cmd->require_subcommand(1);

  auto* gur_cmd = exp_cmd->add_subcommand("gurvits", "rotation-coded pair with spectral gap");
  GurvitsConfig gur_cfg;
  add_common(gur_cmd, opts);
  gur_cmd->add_option("--gamma", gur_cfg.gamma_spec, "rotation number: 'golden' or a decimal");
  gur_cmd->add_option("--alpha", gur_cfg.alpha, "weight base in (0,1)");
  gur_cmd->add_option("--n", gur_cfg.n, "greedy window length");
  gur_cmd->add_option("--max-word-len", gur_cfg.max_word_len, "periodic word scan cutoff");
  gur_cmd->add_option("--min-total", gur_cfg.min_total, "minimum |w| * m per scanned product");

  auto* tech_cmd = exp_cmd->add_subcommand("tech-strictly", "exact exponent formula check");
  std::string tech_z = "0110100110010110";
  TechStrictlyConfig tech_cfg;
  add_common(tech_cmd, opts);
  tech_cmd->add_option("--z-word", tech_z, "periodic greedy sequence");
  tech_cmd->add_option("--test-periods", tech_cfg.test_periods, "check orbits up to this period");

  auto* nom_cmd = exp_cmd->add_subcommand("nomather", "two-scale block recursion gap");
  NomatherConfig nom_cfg;
  std::string nom_exponents;
  add_common(nom_cmd, opts);
  nom_cmd->add_option("--j", nom_cfg.j, "comparison level");
  nom_cmd->add_option("--exponents", nom_exponents, "comma-separated block exponents");
  nom_cmd->add_option("--greedy-n", nom_cfg.greedy_n, "greedy window length");
  nom_cmd->add_option("--mc-n", nom_cfg.mc_n, "Monte-Carlo sample length");
  nom_cmd->add_option("--mc-samples", nom_cfg.mc_samples, "Monte-Carlo sample count");
  nom_cmd->add_option("--mc-k-window", nom_cfg.mc_k_window, "Monte-Carlo scan half-width");

  // selftest
  auto* self_cmd = app.add_subcommand("selftest", "embedded exact-oracle suite");
  add_common(self_cmd, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    apply_threads(opts);
    Json in = load_input(opts);
    Json out;

    if (norm_cmd->parsed()) {
      WeightFunction phi = get_weight(in, opts);
      Word x = get_word(in, "word", norm_word);
      out["command"] = "norm";
      out["report"] = bounds_to_json(log_norm(phi, x, opts.k_window));
    } else if (jsr_cmd->parsed()) {
      WeightFunction phi = get_weight(in, opts);
      std::vector<Word> candidates;
      if (in.contains("candidates"))
        for (const auto& jw : in.at("candidates")) candidates.push_back(word_from_json(jw));
      else
        candidates = primitive_necklaces(jsr_max_period);
      out["command"] = "jsr";
      out["upper"] = jsr_upper_to_json(jsr_upper(phi, jsr_n, opts.k_window));
      out["lower"] = jsr_lower_to_json(jsr_lower(phi, candidates, jsr_m, opts.k_window));
      out["n"] = jsr_n;
    } else if (lya_cmd->parsed()) {
      WeightFunction phi = get_weight(in, opts);
      out["command"] = "lyapunov";
      out["mode"] = lya_mode;
      if (lya_mode == "exact") {
        Word w;
        if (!lya_word.empty() || in.contains("word")) {
          w = get_word(in, "word", lya_word);
        } else {
          MeasureSpec mu = get_measure(in, "measure", opts);
          const auto* po = std::get_if<MeasureSpec::PeriodicOrbit>(&mu.variant());
          if (!po) throw invalid_input("exact mode needs a periodic orbit measure or --word");
          w = po->word;
        }
        out["value"] = scalar_to_json(Scalar(lyapunov_periodic_exact(phi, w)));
        out["word"] = w.to_string();
      } else if (lya_mode == "upper") {
        MeasureSpec mu = get_measure(in, "measure", opts);
        out["report"] = lyapunov_upper_to_json(lyapunov_upper(phi, mu, lya_n, opts.k_window));
      } else {
        if (opts.precision == "rational")
          throw invalid_input("Monte-Carlo estimates are floating point; precision 'rational' cannot apply");
        MeasureSpec mu = get_measure(in, "measure", opts);
        out["report"] =
            mc_to_json(lyapunov_mc(phi, mu, lya_n, lya_samples, opts.k_window, opts.seed));
      }
    } else if (dbar_cmd->parsed()) {
      out["command"] = "dbar";
      out["mode"] = dbar_mode;
      if (dbar_mode == "exact") {
        Word u = get_word(in, "u", dbar_u);
        Word v = get_word(in, "v", dbar_v);
        out["value"] = scalar_to_json(Scalar(dbar_periodic_exact(u, v)));
      } else if (dbar_mode == "lp") {
        MeasureSpec mu = get_measure(in, "mu", opts);
        MeasureSpec nu = get_measure(in, "nu", opts);
        CouplingLP lp = build_coupling_lp(mu, nu, dbar_L);
        solve_coupling_lp(lp);
        if (!dbar_dump.empty()) {
          std::ofstream f(dbar_dump);
          if (!f) throw invalid_input("cannot open LP dump file: " + dbar_dump);
          f << lp_to_text(lp);
        }
        out["report"] = coupling_to_json(lp);
      } else {
        MeasureSpec mu = get_measure(in, "mu", opts);
        MeasureSpec nu = get_measure(in, "nu", opts);
        out["value"] = scalar_to_json(dbar_upper_product(mu, nu));
      }
    } else if (match_cmd->parsed()) {
      Word x = get_word(in, "x", match_x);
      SubshiftSpec target = !match_target_word.empty()
                                ? SubshiftSpec::periodic_orbit(Word::parse(match_target_word))
                                : (in.contains("target")
                                       ? subshift_from_json(in.at("target"))
                                       : throw invalid_input("no matching target given"));
      out["command"] = "match";
      out["value"] = scalar_to_json(Scalar(matching_distance(x, target)));
      out["n"] = x.size();
    } else if (pert_cmd->parsed()) {
      WeightFunction phi = get_weight(in, opts);
      if (!in.contains("omega") || !in.contains("z") || !in.contains("depth") ||
          !in.contains("k_search_window"))
        throw invalid_input("perturb needs input fields omega, z, depth, k_search_window");
      Word omega = word_from_json(in.at("omega"));
      BiSequence z = sequence_from_json(in.at("z"));
      int depth = in.at("depth").get<int>();
      long long ksw = in.at("k_search_window").get<long long>();
      PerturbationPlan plan = build_plan(phi, omega, z, depth, ksw);
      Scalar lambda = pert_lambda.find('.') != std::string::npos
                          ? Scalar(std::stod(pert_lambda))
                          : scalar_from_json(Json(pert_lambda));
      out["command"] = "perturb";
      out["plan"] = plan_to_json(plan);
      Json growth = Json::array();
      int j_lo = pert_j > 0 ? pert_j : 1;
      int j_hi = pert_j > 0 ? pert_j : depth;
      for (int j = j_lo; j <= j_hi; ++j)
        growth.push_back(growth_to_json(check_growth(plan, phi, lambda, j)));
      out["growth"] = growth;
      if (in.contains("x")) {
        Word x = word_from_json(in.at("x"));
        long long k = in.contains("k") ? in.at("k").get<long long>() : 0;
        out["upper_inequality"] = upper_inequality_to_json(check_upper_inequality(plan, x, k));
      }
    } else if (gur_cmd->parsed()) {
      if (opts.precision == "rational")
        throw invalid_input("the rotation-coded construction is irrational; precision 'rational' cannot apply");
      gur_cfg.k_window = opts.k_window == 64 ? gur_cfg.k_window : opts.k_window;
      out["command"] = "experiment gurvits";
      out["report"] = gurvits_to_json(run_gurvits(gur_cfg));
    } else if (tech_cmd->parsed()) {
      tech_cfg.z_word = Word::parse(tech_z);
      out["command"] = "experiment tech-strictly";
      out["report"] = tech_strictly_to_json(run_tech_strictly(tech_cfg));
    } else if (nom_cmd->parsed()) {
      if (!nom_exponents.empty()) {
        nom_cfg.exponents.clear();
        std::stringstream ss(nom_exponents);
        std::string item;
        while (std::getline(ss, item, ',')) nom_cfg.exponents.push_back(std::stoll(item));
      }
      nom_cfg.seed = opts.seed;
      out["command"] = "experiment nomather";
      out["report"] = nomather_to_json(run_nomather(nom_cfg));
    } else if (self_cmd->parsed()) {
      std::vector<SelfCase> cases = run_selftest();
      bool all_ok = true;
      Json arr = Json::array();
      for (const SelfCase& c : cases) {
        Json jc;
        jc["name"] = c.name;
        jc["ok"] = c.ok;
        jc["detail"] = c.detail;
        arr.push_back(jc);
        all_ok = all_ok && c.ok;
      }
      out["command"] = "selftest";
      out["cases"] = arr;
      out["all_ok"] = all_ok;
      emit(out);
      return all_ok ? 0 : 3;
    }

    emit(out);
    return 0;
  } catch (const invalid_input& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed JSON input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
