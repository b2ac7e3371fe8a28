#include "shiftopt/json_io.hpp"

#include <utility>

namespace shiftopt {

namespace {

const Json& field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw invalid_input(std::string("missing field: ") + key);
  return *it;
}

long long int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw invalid_input(std::string("field is not an integer: ") + key);
  return v.get<long long>();
}

std::string kind_of(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw invalid_input(std::string("field is not a string: ") + key);
  return v.get<std::string>();
}

}  // namespace

Json scalar_to_json(const Scalar& s) {
  if (s.exact) return Json(rat_to_string(*s.exact));
  return Json(s.value);
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return scalar_from_string(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(make_rat(j.get<long long>(), 1));
  if (j.is_number_float()) return Scalar(j.get<double>());
  throw invalid_input("scalar must be a string or a number");
}

Json word_to_json(const Word& w) { return Json(w.to_string()); }

Word word_from_json(const Json& j) {
  if (!j.is_string()) throw invalid_input("word must be a bit string");
  return Word::parse(j.get<std::string>());
}

Json sequence_to_json(const BiSequence& z) {
  Json j;
  if (const auto* p = std::get_if<BiSequence::Periodic>(&z.variant())) {
    j["kind"] = "periodic";
    j["word"] = word_to_json(p->word);
  } else if (const auto* s = std::get_if<BiSequence::Sturmian>(&z.variant())) {
    j["kind"] = "sturmian";
    j["gamma"] = s->gamma_spec;
    j["offset"] = s->offset;
  } else if (const auto* b = std::get_if<BiSequence::BlockRecursive>(&z.variant())) {
    j["kind"] = "block";
    j["seed_b"] = word_to_json(b->seed_b);
    j["seed_c"] = word_to_json(b->seed_c);
    j["exponents"] = b->exponents;
    j["depth"] = b->depth;
  } else if (const auto* sh = std::get_if<BiSequence::Shifted>(&z.variant())) {
    j["kind"] = "shifted";
    j["base"] = sequence_to_json(*sh->base);
    j["shift"] = sh->shift;
  } else {
    const auto& c = std::get<BiSequence::Complemented>(z.variant());
    j["kind"] = "complemented";
    j["base"] = sequence_to_json(*c.base);
  }
  return j;
}

BiSequence sequence_from_json(const Json& j) {
  std::string kind = kind_of(j, "kind");
  if (kind == "periodic") return BiSequence::periodic(word_from_json(field(j, "word")));
  if (kind == "sturmian")
    return BiSequence::sturmian(kind_of(j, "gamma"), int_field(j, "offset"));
  if (kind == "block") {
    std::vector<long long> exponents;
    for (const Json& e : field(j, "exponents")) exponents.push_back(e.get<long long>());
    return BiSequence::block_recursive(word_from_json(field(j, "seed_b")),
                                       word_from_json(field(j, "seed_c")), std::move(exponents),
                                       static_cast<int>(int_field(j, "depth")));
  }
  if (kind == "shifted")
    return BiSequence::shifted(sequence_from_json(field(j, "base")), int_field(j, "shift"));
  if (kind == "complemented")
    return BiSequence::complemented(sequence_from_json(field(j, "base")));
  throw invalid_input("unknown sequence kind: " + kind);
}

Json weight_to_json(const WeightFunction& phi) {
  Json j;
  if (const auto* t = std::get_if<WeightFunction::Tabular>(&phi.variant())) {
    j["kind"] = "tabular";
    j["default"] = Json::array({scalar_to_json(t->def0), scalar_to_json(t->def1)});
    Json overrides = Json::array();
    for (const auto& [index, values] : t->overrides)
      overrides.push_back(
          Json::array({Json(index), scalar_to_json(values[0]), scalar_to_json(values[1])}));
    j["overrides"] = std::move(overrides);
  } else if (const auto* o = std::get_if<WeightFunction::OrbitInduced>(&phi.variant())) {
    j["kind"] = "orbit";
    j["sequence"] = sequence_to_json(o->z);
    j["table"] = Json::array(
        {Json::array({scalar_to_json(o->table[0][0]), scalar_to_json(o->table[0][1])}),
         Json::array({scalar_to_json(o->table[1][0]), scalar_to_json(o->table[1][1])})});
  } else if (const auto* c = std::get_if<WeightFunction::Combo>(&phi.variant())) {
    j["kind"] = "combo";
    Json terms = Json::array();
    for (const auto& [scale, term] : c->terms) {
      Json entry;
      entry["scale"] = scalar_to_json(scale);
      entry["weight"] = weight_to_json(*term);
      terms.push_back(std::move(entry));
    }
    j["terms"] = std::move(terms);
  } else {
    const auto& p = std::get<WeightFunction::Psi>(phi.variant());
    j["kind"] = "psi";
    j["plan"] = plan_to_json(*p.plan);
  }
  return j;
}

WeightFunction weight_from_json(const Json& j) {
  std::string kind = kind_of(j, "kind");
  if (kind == "tabular") {
    const Json& def = field(j, "default");
    if (!def.is_array() || def.size() != 2) throw invalid_input("tabular default must be a pair");
    std::map<long long, std::array<Scalar, 2>> overrides;
    if (j.contains("overrides")) {
      for (const Json& row : j["overrides"]) {
        if (!row.is_array() || row.size() != 3)
          throw invalid_input("tabular override must be [index, v0, v1]");
        overrides[row[0].get<long long>()] = {scalar_from_json(row[1]),
                                              scalar_from_json(row[2])};
      }
    }
    return WeightFunction::tabular(scalar_from_json(def[0]), scalar_from_json(def[1]),
                                   std::move(overrides));
  }
  if (kind == "orbit") {
    const Json& table = field(j, "table");
    if (!table.is_array() || table.size() != 2 || !table[0].is_array() || table[0].size() != 2 ||
        !table[1].is_array() || table[1].size() != 2)
      throw invalid_input("orbit table must be 2x2");
    std::array<std::array<Scalar, 2>, 2> t{};
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) t[a][b] = scalar_from_json(table[a][b]);
    return WeightFunction::orbit_induced(sequence_from_json(field(j, "sequence")), t);
  }
  if (kind == "combo") {
    std::vector<std::pair<Scalar, WeightFunction>> terms;
    for (const Json& entry : field(j, "terms"))
      terms.emplace_back(scalar_from_json(field(entry, "scale")),
                         weight_from_json(field(entry, "weight")));
    return WeightFunction::combo(std::move(terms));
  }
  if (kind == "psi")
    return WeightFunction::psi(
        std::make_shared<const PerturbationPlan>(plan_from_json(field(j, "plan"))));
  throw invalid_input("unknown weight kind: " + kind);
}

Json measure_to_json(const MeasureSpec& mu) {
  Json j;
  if (const auto* p = std::get_if<MeasureSpec::PeriodicOrbit>(&mu.variant())) {
    j["kind"] = "periodic_orbit";
    j["word"] = word_to_json(p->word);
  } else if (const auto* b = std::get_if<MeasureSpec::Bernoulli>(&mu.variant())) {
    j["kind"] = "bernoulli";
    j["p"] = scalar_to_json(b->p);
  } else if (const auto* m = std::get_if<MeasureSpec::Markov>(&mu.variant())) {
    j["kind"] = "markov";
    j["P"] = Json::array({Json::array({scalar_to_json(m->P[0][0]), scalar_to_json(m->P[0][1])}),
                          Json::array({scalar_to_json(m->P[1][0]), scalar_to_json(m->P[1][1])})});
    j["pi"] = Json::array({scalar_to_json(m->pi[0]), scalar_to_json(m->pi[1])});
  } else if (const auto* s = std::get_if<MeasureSpec::SturmianMeasure>(&mu.variant())) {
    j["kind"] = "sturmian";
    j["gamma"] = s->gamma_spec;
  } else {
    const auto& e = std::get<MeasureSpec::Empirical>(mu.variant());
    j["kind"] = "empirical";
    j["sequence"] = sequence_to_json(e.seq);
    j["a"] = e.a;
    j["n"] = e.n;
  }
  return j;
}

MeasureSpec measure_from_json(const Json& j) {
  std::string kind = kind_of(j, "kind");
  if (kind == "periodic_orbit") return MeasureSpec::periodic_orbit(word_from_json(field(j, "word")));
  if (kind == "bernoulli") return MeasureSpec::bernoulli(scalar_from_json(field(j, "p")));
  if (kind == "markov") {
    const Json& P = field(j, "P");
    const Json& pi = field(j, "pi");
    if (!P.is_array() || P.size() != 2 || !pi.is_array() || pi.size() != 2)
      throw invalid_input("markov spec needs a 2x2 matrix and a 2-vector");
    std::array<std::array<Scalar, 2>, 2> m{};
    for (int a = 0; a < 2; ++a) {
      if (!P[a].is_array() || P[a].size() != 2) throw invalid_input("markov row must be a pair");
      for (int b = 0; b < 2; ++b) m[a][b] = scalar_from_json(P[a][b]);
    }
    return MeasureSpec::markov(m, {scalar_from_json(pi[0]), scalar_from_json(pi[1])});
  }
  if (kind == "sturmian") return MeasureSpec::sturmian(kind_of(j, "gamma"));
  if (kind == "empirical")
    return MeasureSpec::empirical(sequence_from_json(field(j, "sequence")), int_field(j, "a"),
                                  int_field(j, "n"));
  throw invalid_input("unknown measure kind: " + kind);
}

Json subshift_to_json(const SubshiftSpec& spec) {
  Json j;
  if (const auto* p = std::get_if<SubshiftSpec::PeriodicOrbit>(&spec.variant())) {
    j["kind"] = "periodic_orbit";
    j["word"] = word_to_json(p->word);
  } else if (const auto* f = std::get_if<SubshiftSpec::FactorSet>(&spec.variant())) {
    j["kind"] = "factor_set";
    j["L"] = f->L;
    Json factors = Json::array();
    for (const Word& w : f->factors) factors.push_back(word_to_json(w));
    j["factors"] = std::move(factors);
    j["followers"] = f->followers;
  } else {
    const auto& oc = std::get<SubshiftSpec::OrbitClosureApprox>(spec.variant());
    j["kind"] = "orbit_closure";
    j["sequence"] = sequence_to_json(*oc.seq);
    j["window"] = oc.window;
    j["L"] = oc.L;
  }
  return j;
}

SubshiftSpec subshift_from_json(const Json& j) {
  std::string kind = kind_of(j, "kind");
  if (kind == "periodic_orbit") return SubshiftSpec::periodic_orbit(word_from_json(field(j, "word")));
  if (kind == "factor_set") {
    std::vector<Word> factors;
    for (const Json& w : field(j, "factors")) factors.push_back(word_from_json(w));
    std::vector<std::vector<int>> followers;
    for (const Json& row : field(j, "followers")) followers.push_back(row.get<std::vector<int>>());
    return SubshiftSpec::factor_set(int_field(j, "L"), std::move(factors), std::move(followers));
  }
  if (kind == "orbit_closure")
    return SubshiftSpec::orbit_closure(sequence_from_json(field(j, "sequence")),
                                       int_field(j, "window"), int_field(j, "L"));
  throw invalid_input("unknown subshift kind: " + kind);
}

Json plan_to_json(const PerturbationPlan& plan) {
  Json j;
  j["omega"] = word_to_json(plan.omega);
  j["z"] = sequence_to_json(plan.z);
  j["depth"] = plan.depth;
  j["k_search_window"] = plan.k_search_window;
  j["n"] = plan.n;
  j["k"] = plan.k;
  Json achieved = Json::array();
  for (const Scalar& s : plan.achieved_avg) achieved.push_back(scalar_to_json(s));
  j["achieved_avg"] = std::move(achieved);
  j["count_a"] = plan.count_a;
  j["count_b"] = plan.count_b;
  j["count_c"] = plan.count_c;
  return j;
}

PerturbationPlan plan_from_json(const Json& j) {
  PerturbationPlan plan{word_from_json(field(j, "omega")), sequence_from_json(field(j, "z")),
                        static_cast<int>(int_field(j, "depth")), int_field(j, "k_search_window"),
                        {}, {}, {}, {}, {}, {}};
  for (const Json& v : field(j, "n")) plan.n.push_back(v.get<long long>());
  for (const Json& v : field(j, "k")) plan.k.push_back(v.get<long long>());
  for (const Json& v : field(j, "achieved_avg")) plan.achieved_avg.push_back(scalar_from_json(v));
  for (const Json& v : field(j, "count_a")) plan.count_a.push_back(v.get<long long>());
  for (const Json& v : field(j, "count_b")) plan.count_b.push_back(v.get<long long>());
  for (const Json& v : field(j, "count_c")) plan.count_c.push_back(v.get<long long>());
  const std::size_t depth = static_cast<std::size_t>(plan.depth);
  if (plan.n.size() != depth || plan.k.size() != depth || plan.achieved_avg.size() != depth ||
      plan.count_a.size() != depth || plan.count_b.size() != depth || plan.count_c.size() != depth)
    throw invalid_input("plan level arrays must all have length depth");
  return plan;
}

Json bounds_to_json(const Bounds& b) {
  Json j;
  j["lower"] = scalar_to_json(b.lower);
  if (b.upper)
    j["upper"] = scalar_to_json(*b.upper);
  else
    j["upper"] = nullptr;
  j["n"] = b.n;
  j["k_window"] = b.k_window;
  if (b.m) j["m"] = *b.m;
  return j;
}

Json jsr_upper_to_json(const JsrUpper& r) {
  Json j;
  j["value"] = scalar_to_json(r.value);
  j["certified"] = r.certified;
  j["witness"] = word_to_json(r.witness);
  j["n"] = r.n;
  return j;
}

Json jsr_lower_to_json(const JsrLower& r) {
  Json j;
  j["value"] = scalar_to_json(r.value);
  j["certified"] = r.certified;
  j["witness"] = word_to_json(r.witness);
  return j;
}

Json lyapunov_upper_to_json(const LyapunovUpper& r) {
  Json j;
  j["value"] = scalar_to_json(r.value);
  j["certified"] = r.certified;
  j["n"] = r.n;
  j["words"] = r.words;
  return j;
}

Json mc_to_json(const McResult& r) {
  Json j;
  j["mean"] = r.mean;
  j["std_error"] = r.std_error;
  j["lower"] = r.lower;
  j["upper"] = r.upper;
  j["samples"] = r.samples;
  j["norms_certified"] = r.norms_certified;
  return j;
}

Json coupling_to_json(const CouplingLP& lp) {
  Json j;
  j["L"] = lp.L;
  j["exact"] = lp.exact;
  Json rows = Json::array();
  for (std::size_t i = 0; i < lp.row_words.size(); ++i)
    rows.push_back(Json::array({word_to_json(lp.row_words[i]), scalar_to_json(lp.row_mass[i])}));
  j["mu_support"] = std::move(rows);
  Json cols = Json::array();
  for (std::size_t i = 0; i < lp.col_words.size(); ++i)
    cols.push_back(Json::array({word_to_json(lp.col_words[i]), scalar_to_json(lp.col_mass[i])}));
  j["nu_support"] = std::move(cols);
  j["variables"] = lp.vars.size();
  j["solved"] = lp.solved;
  if (lp.solved) j["objective"] = scalar_to_json(lp.objective);
  return j;
}

Json upper_inequality_to_json(const UpperInequalityReport& r) {
  Json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["order"] = r.order;
  j["lhs"] = r.lhs;
  j["occurrences"] = r.occurrences;
  j["rhs"] = r.rhs;
  j["holds"] = r.holds;
  return j;
}

Json growth_to_json(const GrowthReport& r) {
  Json j;
  j["j"] = r.j;
  j["order"] = r.order;
  j["n_j"] = r.n_j;
  j["k_j"] = r.k_j;
  j["occurrences"] = r.occurrences;
  j["usable"] = r.usable;
  j["psi_sum"] = r.psi_sum;
  j["lambda"] = scalar_to_json(r.lambda);
  j["base_avg"] = scalar_to_json(r.base_avg);
  j["freq"] = rat_to_string(r.freq);
  j["slack"] = rat_to_string(r.slack);
  j["lhs_avg"] = scalar_to_json(r.lhs_avg);
  j["rhs"] = scalar_to_json(r.rhs);
  j["margin"] = scalar_to_json(r.margin);
  return j;
}

Json gurvits_to_json(const GurvitsReport& r) {
  Json j;
  Json config;
  config["gamma"] = r.config.gamma_spec;
  config["alpha"] = r.config.alpha;
  config["n"] = r.config.n;
  config["max_word_len"] = r.config.max_word_len;
  config["min_total"] = r.config.min_total;
  config["k_window"] = r.config.k_window;
  j["config"] = std::move(config);
  j["jsr_lower_estimate"] = r.jsr_lower_estimate;
  j["best_word_rate"] = r.best_word_rate;
  j["best_word"] = word_to_json(r.best_word);
  j["target_half_log_alpha"] = r.target_half_log_alpha;
  j["gap"] = r.gap;
  Json fib = Json::array();
  for (const GurvitsFibRow& row : r.fibonacci_rates) {
    Json entry;
    entry["length"] = row.length;
    entry["rate"] = row.rate;
    entry["word"] = word_to_json(row.word);
    fib.push_back(std::move(entry));
  }
  j["fibonacci_rates"] = std::move(fib);
  return j;
}

Json tech_strictly_to_json(const TechStrictlyReport& r) {
  Json j;
  Json config;
  config["z_word"] = word_to_json(r.config.z_word);
  config["test_periods"] = r.config.test_periods;
  j["config"] = std::move(config);
  Json rows = Json::array();
  for (const TechStrictlyRow& row : r.rows) {
    Json entry;
    entry["mu_word"] = word_to_json(row.mu_word);
    entry["lyapunov"] = rat_to_string(row.lyapunov);
    entry["dbar"] = rat_to_string(row.dbar);
    entry["one_minus_dbar"] = rat_to_string(row.one_minus_dbar);
    entry["equal"] = row.equal;
    rows.push_back(std::move(entry));
  }
  j["rows"] = std::move(rows);
  j["all_equal"] = r.all_equal;
  return j;
}

Json nomather_to_json(const NomatherReport& r) {
  Json j;
  Json config;
  config["seed_b"] = word_to_json(r.config.seed_b);
  config["seed_c"] = word_to_json(r.config.seed_c);
  config["exponents"] = r.config.exponents;
  config["j"] = r.config.j;
  config["greedy_n"] = r.config.greedy_n;
  config["mc_n"] = r.config.mc_n;
  config["mc_samples"] = r.config.mc_samples;
  config["mc_k_window"] = r.config.mc_k_window;
  config["seed"] = r.config.seed;
  j["config"] = std::move(config);
  j["depth"] = r.depth;
  j["block_len"] = r.block_len;
  j["b_window_offset"] = r.b_window_offset;
  j["c_window_offset"] = r.c_window_offset;
  j["f1_hat"] = rat_to_string(r.f1_hat);
  j["f2_hat"] = rat_to_string(r.f2_hat);
  j["separation"] = rat_to_string(r.separation);
  j["target"] = r.target;
  j["greedy_offset"] = r.greedy_offset;
  j["greedy_ones"] = r.greedy_ones;
  j["greedy_rate"] = rat_to_string(r.greedy_rate);
  j["greedy_close"] = r.greedy_close;
  j["mc_b"] = mc_to_json(r.mc_b);
  j["mc_c"] = mc_to_json(r.mc_c);
  j["inequality_holds"] = r.inequality_holds;
  j["swap_reverses"] = r.swap_reverses;
  return j;
}

Json sandwich_to_json(const SandwichReport& r) {
  Json j;
  j["best_periodic"] = rat_to_string(r.best_periodic);
  j["best_word"] = word_to_json(r.best_word);
  j["upper"] = rat_to_string(r.upper);
  j["gap"] = rat_to_string(r.gap);
  j["holds"] = r.holds;
  return j;
}

}  // namespace shiftopt
